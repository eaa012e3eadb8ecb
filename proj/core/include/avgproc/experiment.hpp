#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "avgproc/errors.hpp"

namespace avgproc::experiment {

/// Invalid or missing configuration value; names the offending key.
class ConfigError : public ParameterError {
 public:
  ConfigError(const std::string& key, const std::string& what)
      : ParameterError("invalid config key '" + key + "': " + what), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Flat key -> value settings; keys are flag names without leading dashes.
using Options = std::map<std::string, std::string>;

/// One CSV row. Unset optionals print as empty fields.
struct Record {
  std::string experiment;
  std::string graph;
  std::optional<std::uint64_t> n, d, m;
  std::optional<double> t, a;
  std::optional<int> p;
  std::string statistic;
  double value = 0.0;
  std::optional<double> std_error;
  std::optional<std::uint64_t> replicas;
  std::uint64_t seed = 0;
};

inline constexpr const char* kCsvHeader =
    "experiment,graph,n,d,m,t,a,p,statistic,value,stderr,replicas,seed";

std::string format_double(double v);
std::string to_csv(const Record& r);

/// Inclusive start:stop:step grid; the end point is kept when step divides
/// the range within 1e-9.
std::vector<double> parse_grid(const std::string& key, const std::string& text);
/// Comma-separated list of reals.
std::vector<double> parse_list(const std::string& key, const std::string& text);

/// Reads key=value lines ('#' comments, blank lines ignored).
Options read_config_file(const std::string& path);

/// Master seed: explicit option, else AVGPROC_SEED, else 0.
std::uint64_t resolve_seed(const Options& opts);

const std::vector<std::string>& subcommands();

/// Runs one subcommand and writes the header plus rows to `out`. Throws
/// ConfigError / ParameterError / CapabilityError for bad input and
/// NumericalError when a computation fails.
std::vector<Record> run(const std::string& command, const Options& opts);
void write_csv(const std::vector<Record>& rows, std::ostream& out);

/// Exit code for an exception escaping run(): 2 for configuration,
/// parameter and capability errors, 3 for numerical errors, 1 otherwise.
int exit_code_for(const std::exception& e);

}  // namespace avgproc::experiment
