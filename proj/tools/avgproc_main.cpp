// avgproc: command-line front end writing experiment results as CSV.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "avgproc/experiment.hpp"

namespace ex = avgproc::experiment;

namespace {

struct Flag {
  const char* name;
  const char* help;
  bool boolean = false;
};

// Flags per subcommand; values are forwarded verbatim as key=value options.
const std::map<std::string, std::vector<Flag>>& flag_table() {
  static const Flag graph{"graph", "hypercube | k_bipartite | complete"};
  static const Flag d{"d", "hypercube dimension"};
  static const Flag m{"m", "size of the smaller part C1"};
  static const Flag n{"n", "number of vertices"};
  static const Flag p{"p", "norm exponent, 1 or 2"};
  static const Flag t{"t", "comma-separated times"};
  static const Flag agrid{"a-grid", "window offsets start:stop:step"};
  static const Flag replicas{"replicas", "Monte Carlo replicas"};
  static const Flag start{"start", "start vertex of the Dirac mass"};
  static const std::map<std::string, std::vector<Flag>> table = {
      {"simulate", {graph, d, m, n, p, t, agrid, replicas, start}},
      {"exact-bipartite",
       {m, n, agrid, {"side", "start side, c1 or c2 (default c2)"},
        {"predicted", "also emit (1+D)e^-a rows", true}}},
      {"hypercube-exact", {{"d", "comma-separated dimensions"}, agrid, t}},
      {"ehrenfest",
       {d, {"check", "sandwich | interlacing | halfgap | killed | hitting"}, t,
        {"M", "comma-separated truncation levels"}, {"samples", "samples per side for hitting"}}},
      {"entropy", {graph, d, m, n, t, replicas, {"kappa", "entropy constant (default: known value)"}, start}},
      {"hardy", {d, {"detail", "also emit C_M and lambda rows", true}}},
      {"profile-sweep", {graph, d, m, n, p, agrid, replicas, start}},
  };
  return table;
}

const char* describe(const std::string& name) {
  static const std::map<std::string, const char*> text = {
      {"simulate", "Monte Carlo mean L^p distance of the averaging process"},
      {"exact-bipartite", "exact mean squared L^2 distance on K_{m,n-m} at T(a)"},
      {"hypercube-exact", "exact mean squared L^2 distance on the hypercube"},
      {"ehrenfest", "structural checks of the Ehrenfest chains"},
      {"entropy", "relative entropy decay against its bound"},
      {"hardy", "Hardy constants against killed spectral gaps"},
      {"profile-sweep", "measured and predicted cutoff profiles over an a-grid"},
  };
  return text.at(name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Averaging process on graphs: simulation and exact cutoff computations"};
  app.require_subcommand(1);
  std::string seed, threads, config, output;
  app.add_option("--seed", seed, "master seed (default: $AVGPROC_SEED, else 0)");
  app.add_option("--threads", threads, "worker threads for replicas");
  app.add_option("--config", config, "key=value file; flags override it");
  app.add_option("-o,--output", output, "write CSV here instead of stdout");
  app.fallthrough();

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> bools;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, flags] : flag_table()) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    subs[name] = sub;
    for (const auto& f : flags) {
      const std::string opt = std::string("--") + f.name;
      if (f.boolean) {
        sub->add_flag(opt, bools[name][f.name], f.help);
      } else {
        sub->add_option(opt, values[name][f.name], f.help);
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string command;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) command = name;

    ex::Options opts;
    if (!config.empty()) opts = ex::read_config_file(config);
    const CLI::App* sub = subs.at(command);
    for (const auto& [key, value] : values[command])
      if (sub->count(std::string("--") + key) > 0) opts[key] = value;
    for (const auto& [key, on] : bools[command])
      if (on) opts[key] = "true";
    if (app.count("--seed") > 0) opts["seed"] = seed;
    if (app.count("--threads") > 0) opts["threads"] = threads;

    const auto rows = ex::run(command, opts);
    if (output.empty()) {
      ex::write_csv(rows, std::cout);
      std::cout.flush();
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) throw ex::ConfigError("output", "cannot open '" + output + "'");
      ex::write_csv(rows, out);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "avgproc: " << e.what() << '\n';
    return ex::exit_code_for(e);
  }
}
