#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "avgproc/experiment.hpp"
#include "doctest.h"

using namespace avgproc;
namespace ex = avgproc::experiment;

namespace {
std::size_t count(const std::vector<ex::Record>& rows, const std::string& stat) {
  std::size_t c = 0;
  for (const auto& r : rows) c += r.statistic == stat;
  return c;
}

std::string csv(const std::vector<ex::Record>& rows) {
  std::ostringstream os;
  ex::write_csv(rows, os);
  return os.str();
}

std::string config_key_of(const std::string& cmd, const ex::Options& o) {
  try {
    ex::run(cmd, o);
  } catch (const ex::ConfigError& e) {
    return e.key();
  }
  return "";
}
}  // namespace

TEST_SUITE("experiment") {
  TEST_CASE("grids and lists") {
    CHECK(ex::parse_grid("a-grid", "-4:4:1").size() == 9);
    CHECK(ex::parse_grid("a-grid", "-3:3:0.5").size() == 13);
    CHECK(ex::parse_grid("a-grid", "0:1:0.1").size() == 11);
    CHECK(ex::parse_grid("a-grid", "0:1:0.3").size() == 4);
    CHECK(ex::parse_grid("a-grid", "2:2:1") == std::vector<double>{2.0});
    CHECK_THROWS_AS(ex::parse_grid("a-grid", "1:0:1"), ex::ConfigError);
    CHECK_THROWS_AS(ex::parse_grid("a-grid", "0:1:0"), ex::ConfigError);
    CHECK_THROWS_AS(ex::parse_grid("a-grid", "0:1"), ex::ConfigError);
    CHECK(ex::parse_list("t", "0.5,1,2,4") == std::vector<double>{0.5, 1, 2, 4});
    CHECK_THROWS_AS(ex::parse_list("t", "0.5,,2"), ex::ConfigError);
    CHECK_THROWS_AS(ex::parse_list("t", "abc"), ex::ConfigError);
  }

  TEST_CASE("CSV formatting") {
    CHECK(ex::format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(ex::format_double(1.0 / 3.0)) == 1.0 / 3.0);
    ex::Record r;
    r.experiment = "simulate";
    r.graph = "hypercube";
    r.n = 8;
    r.d = 3;
    r.t = 0.5;
    r.p = 2;
    r.statistic = "mean_lp";
    r.value = 1.25;
    r.std_error = 0.5;
    r.replicas = 10;
    r.seed = 4;
    CHECK(ex::to_csv(r) == "simulate,hypercube,8,3,,0.5,,2,mean_lp,1.25,0.5,10,4");
    const std::string text = csv({r});
    CHECK(text.rfind(std::string(ex::kCsvHeader) + "\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    r.value = std::numeric_limits<double>::infinity();
    std::ostringstream os;
    CHECK_THROWS(ex::write_csv({r}, os));
  }

  TEST_CASE("row counts of documented invocations") {
    auto rows = ex::run("exact-bipartite", {{"m", "500"}, {"n", "1000"}, {"a-grid", "-4:4:1"}});
    CHECK(rows.size() == 9);
    CHECK(count(rows, "exact_l2") == 9);
    rows = ex::run("exact-bipartite", {{"m", "500"}, {"n", "1000"}, {"a-grid", "-4:4:1"}, {"predicted", "true"}});
    CHECK(count(rows, "predicted") == 9);
    rows = ex::run("hypercube-exact", {{"d", "8,12,16"}, {"a-grid", "-3:3:0.5"}});
    CHECK(rows.size() == 39);
    rows = ex::run("hardy", {{"d", "100"}});
    CHECK(rows.size() == 50);
    for (const auto& r : rows) {
      CHECK(r.value >= 0.25);
      CHECK(r.value <= 1.0 + 1e-9);
    }
    rows = ex::run("ehrenfest", {{"d", "12"}, {"check", "sandwich"}, {"t", "0.5,1,2,4"}});
    CHECK(rows.size() == 4);
    for (const auto& r : rows) CHECK(r.value == 1.0);
    rows = ex::run("entropy", {{"graph", "hypercube"}, {"d", "6"}, {"t", "0,0.5,1"}, {"replicas", "200"}});
    CHECK(count(rows, "entropy_mean") == 3);
    CHECK(count(rows, "entropy_bound") == 3);
    for (const auto& r : rows) CHECK(r.std_error.has_value() == (r.statistic == "entropy_mean"));
  }

  TEST_CASE("simulate rows carry an error bar and are thread independent") {
    ex::Options o{{"graph", "k_bipartite"}, {"m", "10"}, {"n", "50"}, {"p", "1"},
                  {"t", "2.0"}, {"replicas", "400"}, {"seed", "7"}};
    const auto one = csv(ex::run("simulate", o));
    o["threads"] = "3";
    CHECK(csv(ex::run("simulate", o)) == one);
    const auto rows = ex::run("simulate", o);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].std_error.has_value());
    CHECK(rows[0].seed == 7);
    o["seed"] = "8";
    CHECK(csv(ex::run("simulate", o)) != one);
  }

  TEST_CASE("configuration errors name the key") {
    CHECK(config_key_of("simulate", {{"graph", "petersen"}, {"d", "3"}, {"t", "1"}}) == "graph");
    CHECK(config_key_of("simulate", {{"graph", "hypercube"}, {"d", "3"}, {"t", "1"}, {"bogus", "1"}}) == "bogus");
    CHECK(config_key_of("simulate", {{"graph", "hypercube"}, {"d", "x"}, {"t", "1"}}) == "d");
    CHECK(config_key_of("simulate", {{"graph", "hypercube"}, {"d", "3"}, {"t", "1"}, {"p", "3"}}) == "p");
    CHECK(config_key_of("simulate", {{"graph", "hypercube"}, {"d", "3"}}) == "t");
    CHECK(config_key_of("exact-bipartite", {{"m", "600"}, {"n", "1000"}}) != "");
    CHECK_THROWS_AS(ex::run("nope", {}), ex::ConfigError);
    CHECK(ex::exit_code_for(ex::ConfigError("k", "w")) == 2);
    CHECK(ex::exit_code_for(CapabilityError("c")) == 2);
    CHECK(ex::exit_code_for(NumericalError("n")) == 3);
  }

  TEST_CASE("seed resolution") {
    ::unsetenv("AVGPROC_SEED");
    CHECK(ex::resolve_seed({}) == 0);
    ::setenv("AVGPROC_SEED", "12345", 1);
    CHECK(ex::resolve_seed({}) == 12345);
    CHECK(ex::resolve_seed({{"seed", "9"}}) == 9);
    ::setenv("AVGPROC_SEED", "-1", 1);
    CHECK_THROWS_AS(ex::resolve_seed({}), ex::ConfigError);
    ::unsetenv("AVGPROC_SEED");
    CHECK_THROWS_AS(ex::resolve_seed({{"seed", "1.5"}}), ex::ConfigError);
  }

  TEST_CASE("config files") {
    const std::string path = "avgproc_test_config.txt";
    {
      std::ofstream f(path);
      f << "# comment\n\ngraph = hypercube\n--d=4\nt=0.5\n";
    }
    const auto o = ex::read_config_file(path);
    CHECK(o.at("graph") == "hypercube");
    CHECK(o.at("d") == "4");
    CHECK(o.at("t") == "0.5");
    {
      std::ofstream f(path);
      f << "just words\n";
    }
    CHECK_THROWS_AS(ex::read_config_file(path), ex::ConfigError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(ex::read_config_file("/nonexistent/avgproc.cfg"), ex::ConfigError);
  }
}
