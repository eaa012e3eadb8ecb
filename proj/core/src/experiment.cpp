#include "avgproc/experiment.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "avgproc/avg_sim.hpp"
#include "avgproc/bipartite_exact.hpp"
#include "avgproc/ehrenfest.hpp"
#include "avgproc/entropy.hpp"
#include "avgproc/graph.hpp"
#include "avgproc/rw_duality.hpp"
#include "avgproc/stats.hpp"

namespace avgproc::experiment {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

template <class T>
std::string field(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return format_double(*v);
  } else {
    return std::to_string(*v);
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
    throw ConfigError(key, "expected a real number, got '" + text + "'");
  return v;
}

std::uint64_t to_uint(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ConfigError(key, "expected a nonnegative integer, got '" + text + "'");
  errno = 0;
  const unsigned long long v = std::strtoull(s.c_str(), nullptr, 10);
  if (errno == ERANGE) throw ConfigError(key, "integer out of range");
  return v;
}

bool to_bool(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off" || s.empty()) return false;
  throw ConfigError(key, "expected a boolean, got '" + text + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

class Config {
 public:
  Config(const std::string& command, const Options& opts, std::set<std::string> allowed)
      : opts_(opts) {
    allowed.insert({"seed", "threads"});
    for (const auto& [k, v] : opts_)
      if (!allowed.count(k)) throw ConfigError(k, "not accepted by '" + command + "'");
    seed_ = resolve_seed(opts_);
  }

  bool has(const std::string& k) const { return opts_.count(k) != 0; }
  const std::string& raw(const std::string& k) const {
    auto it = opts_.find(k);
    if (it == opts_.end()) throw ConfigError(k, "required");
    return it->second;
  }
  std::string str(const std::string& k, const std::string& def) const { return has(k) ? trim(raw(k)) : def; }
  std::uint64_t uint(const std::string& k) const { return to_uint(k, raw(k)); }
  std::uint64_t uint(const std::string& k, std::uint64_t def) const { return has(k) ? uint(k) : def; }
  double real(const std::string& k) const { return to_double(k, raw(k)); }
  bool flag(const std::string& k) const { return has(k) && to_bool(k, raw(k)); }
  std::vector<double> list(const std::string& k) const { return parse_list(k, raw(k)); }
  std::vector<double> grid(const std::string& k, const std::string& def) const {
    return parse_grid(k, has(k) ? raw(k) : def);
  }
  std::vector<std::uint64_t> uint_list(const std::string& k) const {
    std::vector<std::uint64_t> out;
    for (const auto& part : split(raw(k), ',')) out.push_back(to_uint(k, part));
    if (out.empty()) throw ConfigError(k, "empty list");
    return out;
  }

  std::uint64_t seed() const { return seed_; }
  MonteCarlo mc(const std::string& key = "replicas", std::uint64_t def = 1000) const {
    MonteCarlo m;
    m.replicas = uint(key, def);
    if (m.replicas < 2) throw ConfigError(key, "need at least 2");
    m.seed = seed_;
    m.threads = static_cast<unsigned>(uint("threads", 1));
    if (m.threads == 0) throw ConfigError("threads", "must be >= 1");
    return m;
  }

  Graph graph() const {
    const std::string kind = str("graph", "");
    if (kind == "hypercube") {
      const std::uint64_t d = uint("d");
      if (d < 1 || d > 30) throw ConfigError("d", "must be in [1, 30]");
      return Graph::hypercube(static_cast<int>(d));
    }
    if (kind == "k_bipartite") {
      const std::uint64_t m = uint("m");
      const std::uint64_t n = uint("n");
      if (m < 1 || 2 * m > n) throw ConfigError("m", "need 1 <= m <= n/2");
      return Graph::complete_bipartite(m, n - m);
    }
    if (kind == "complete") {
      const std::uint64_t n = uint("n");
      if (n < 2) throw ConfigError("n", "need n >= 2");
      return Graph::complete(n);
    }
    throw ConfigError("graph", "expected hypercube, k_bipartite or complete");
  }

 private:
  const Options& opts_;
  std::uint64_t seed_ = 0;
};

Record base(const std::string& experiment, const Graph& g, std::uint64_t seed) {
  Record r;
  r.experiment = experiment;
  r.graph = g.family_name();
  r.n = g.n();
  if (g.family() == Family::Hypercube) r.d = static_cast<std::uint64_t>(g.dimension());
  if (g.family() == Family::CompleteBipartite) r.m = g.m();
  r.seed = seed;
  return r;
}

Vertex default_start(const Graph& g, const Config& c) {
  if (c.has("start")) {
    const std::uint64_t x = c.uint("start");
    if (x >= g.n()) throw ConfigError("start", "vertex out of range");
    return static_cast<Vertex>(x);
  }
  // Worst case for K_{m,n-m} is a start in the larger part C2.
  return g.family() == Family::CompleteBipartite ? static_cast<Vertex>(g.m()) : 0;
}

int get_p(const Config& c, int def) {
  const std::uint64_t p = c.uint("p", static_cast<std::uint64_t>(def));
  if (p != 1 && p != 2) throw ConfigError("p", "must be 1 or 2");
  return static_cast<int>(p);
}

// Cutoff-window time for the graph family and norm. Offsets that land
// before time 0 are evaluated at t = 0 (the start, where every distance is
// maximal); the requested offset is still reported in the a column.
double window_time(const Graph& g, int p, double a) {
  const double nd = static_cast<double>(g.n());
  switch (g.family()) {
    case Family::Hypercube:
      return std::max(0.0, 0.5 * std::log(static_cast<double>(g.dimension())) + a);
    case Family::CompleteBipartite: {
      const double md = static_cast<double>(g.m());
      const double t = p == 2 ? (std::log(nd) + a) / (bipartite::theta(g.m(), g.n()) * md)
                              : nd / (2.0 * (nd - md)) * std::log2(nd) / md + a * std::sqrt(std::log(nd)) / md;
      return std::max(0.0, t);
    }
    case Family::Complete: break;
  }
  throw CapabilityError("no cutoff window defined for this graph family");
}

std::vector<Record> cmd_simulate(const Options& opts) {
  const Config c("simulate", opts, {"graph", "d", "m", "n", "p", "t", "a-grid", "replicas", "start"});
  const Graph g = c.graph();
  const int p = get_p(c, 2);
  const MonteCarlo mc = c.mc();
  const Vertex x0 = default_start(g, c);
  if (c.has("t") == c.has("a-grid")) throw ConfigError("t", "give exactly one of --t and --a-grid");

  std::vector<double> times;
  std::vector<std::optional<double>> as;
  if (c.has("t")) {
    for (double t : c.list("t")) {
      if (t < 0.0) throw ConfigError("t", "times must be >= 0");
      times.push_back(t);
      as.emplace_back();
    }
  } else {
    for (double a : c.grid("a-grid", "")) {
      times.push_back(window_time(g, p, a));
      as.emplace_back(a);
    }
  }
  // Evaluate along sorted times, report in the requested order.
  std::vector<std::size_t> order(times.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return times[x] < times[y]; });
  std::vector<double> sorted;
  for (auto i : order) sorted.push_back(times[i]);
  const auto est = mean_lp_path(g, dirac(g.n(), x0), sorted, p, mc);
  std::vector<Estimate> by_input(times.size());
  for (std::size_t k = 0; k < order.size(); ++k) by_input[order[k]] = est[k];

  std::vector<Record> rows;
  for (std::size_t i = 0; i < times.size(); ++i) {
    Record r = base("simulate", g, c.seed());
    r.t = times[i];
    r.a = as[i];
    r.p = p;
    r.statistic = "mean_lp";
    r.value = by_input[i].mean;
    r.std_error = by_input[i].std_error;
    r.replicas = mc.replicas;
    rows.push_back(r);
  }
  return rows;
}

Part parse_side(const Config& c) {
  const std::string s = c.str("side", "c2");
  if (s == "c1" || s == "C1") return Part::C1;
  if (s == "c2" || s == "C2") return Part::C2;
  throw ConfigError("side", "expected c1 or c2");
}

std::vector<Record> cmd_exact_bipartite(const Options& opts) {
  const Config c("exact-bipartite", opts, {"m", "n", "a-grid", "side", "predicted"});
  const std::uint64_t m = c.uint("m");
  const std::uint64_t n = c.uint("n");
  if (n < 2 || m < 1 || 2 * m > n) throw ConfigError("m", "need 1 <= m <= n/2");
  const Part side = parse_side(c);
  const Graph g = Graph::complete_bipartite(m, n - m);
  const auto chain = bipartite::build(m, n);
  const auto spec = bipartite::decompose(chain);
  const double dcoef = bipartite::big_d(static_cast<double>(m) / static_cast<double>(n));
  std::vector<Record> rows;
  for (double a : c.grid("a-grid", "-4:4:1")) {
    const double t = window_time(g, 2, a);
    Record r = base("exact-bipartite", g, c.seed());
    r.t = t;
    r.a = a;
    r.p = 2;
    r.statistic = "exact_l2";
    r.value = bipartite::exact_l2(chain, spec, side, t);
    rows.push_back(r);
    if (c.flag("predicted")) {
      r.statistic = "predicted";
      r.value = (1.0 + dcoef) * std::exp(-a);
      rows.push_back(r);
    }
  }
  return rows;
}

Record hypercube_row(const std::string& experiment, int d, double t, std::optional<double> a,
                     std::uint64_t seed) {
  Record r;
  r.experiment = experiment;
  r.graph = "hypercube";
  if (d < 64) r.n = std::uint64_t{1} << d;
  r.d = static_cast<std::uint64_t>(d);
  r.t = t;
  r.a = a;
  r.p = 2;
  r.seed = seed;
  const auto v = ehrenfest::hypercube_avg_l2_exact(d, t);
  if (std::isfinite(v.value)) {
    r.statistic = "S00";
    r.value = v.value;
  } else {
    r.statistic = "log_S00";
    r.value = v.log_value;
  }
  return r;
}

std::vector<Record> cmd_hypercube_exact(const Options& opts) {
  const Config c("hypercube-exact", opts, {"d", "a-grid", "t"});
  std::vector<Record> rows;
  const auto ds = c.uint_list("d");
  for (auto d : ds)
    if (d < 1 || d > 2000) throw ConfigError("d", "must be in [1, 2000]");
  if (c.has("t") && c.has("a-grid")) throw ConfigError("t", "give at most one of --t and --a-grid");
  for (auto du : ds) {
    const int d = static_cast<int>(du);
    if (c.has("t")) {
      for (double t : c.list("t")) {
        if (t < 0.0) throw ConfigError("t", "times must be >= 0");
        rows.push_back(hypercube_row("hypercube-exact", d, t, std::nullopt, c.seed()));
      }
    } else {
      for (double a : c.grid("a-grid", "-3:3:0.5")) {
        const double t = std::max(0.0, 0.5 * std::log(static_cast<double>(d)) + a);
        rows.push_back(hypercube_row("hypercube-exact", d, t, a, c.seed()));
      }
    }
  }
  return rows;
}

std::vector<Record> cmd_ehrenfest(const Options& opts) {
  const Config c("ehrenfest", opts, {"d", "check", "t", "M", "samples"});
  const std::uint64_t du = c.uint("d");
  if (du < 1 || du > 2000) throw ConfigError("d", "must be in [1, 2000]");
  const int d = static_cast<int>(du);
  const std::string check = c.str("check", "");
  auto row = [&](const std::string& stat, double value) {
    Record r;
    r.experiment = "ehrenfest";
    r.graph = "hypercube";
    if (d < 64) r.n = std::uint64_t{1} << d;
    r.d = du;
    r.statistic = stat;
    r.value = value;
    r.seed = c.seed();
    return r;
  };
  auto m_range = [&](int def_hi) {
    std::vector<int> ms;
    if (c.has("M")) {
      for (auto mm : c.uint_list("M")) {
        if (mm < 1 || mm > du) throw ConfigError("M", "must be in [1, d]");
        ms.push_back(static_cast<int>(mm));
      }
    } else {
      for (int mm = 1; mm <= def_hi; ++mm) ms.push_back(mm);
    }
    return ms;
  };
  std::vector<Record> rows;
  const auto P = ehrenfest::build_p(d);
  const auto S = ehrenfest::build_s(d);
  if (check == "sandwich") {
    for (double t : c.list("t")) {
      if (t < 0.0) throw ConfigError("t", "times must be >= 0");
      Record r = row("sandwich", ehrenfest::sandwich(d, t).holds(1e-10) ? 1.0 : 0.0);
      r.t = t;
      rows.push_back(r);
    }
  } else if (check == "interlacing" || check == "halfgap" || check == "killed") {
    for (int M : m_range(std::max(1, d / 2))) {
      const auto lp = ehrenfest::killed_eigenvalues(P, M);
      const auto ls = ehrenfest::killed_eigenvalues(S, M);
      if (check == "killed") {
        Record r = row("lambda_P_M0", lp[0]);
        r.m = static_cast<std::uint64_t>(M);
        rows.push_back(r);
        r.statistic = "lambda_S_M0";
        r.value = ls[0];
        rows.push_back(r);
        continue;
      }
      bool ok = true;
      if (check == "interlacing") {
        for (int i = 0; i < M; ++i) {
          if (ls[i] > lp[i] + 1e-9) ok = false;
          if (i > 0 && ls[i] < lp[i - 1] - 1e-9) ok = false;
        }
      } else {
        ok = ls[0] >= 0.5 * lp[0] - 1e-9;
      }
      Record r = row(check, ok ? 1.0 : 0.0);
      r.m = static_cast<std::uint64_t>(M);
      rows.push_back(r);
    }
  } else if (check == "hitting") {
    const std::uint64_t Mu = c.uint("M", std::min<std::uint64_t>(5, du));
    if (Mu < 1 || Mu > du) throw ConfigError("M", "must be in [1, d]");
    const int M = static_cast<int>(Mu);
    MonteCarlo mc = c.mc("samples", 10000);
    const auto rates = ehrenfest::hitting_time_law(P, M);
    const auto direct = run_replicas<double>(
        mc, [&](std::size_t, Rng& rng) { return ehrenfest::simulate_hitting(P, M, rng); });
    MonteCarlo mc2 = mc;
    mc2.seed = hash64(mc.seed, 0xB5);
    const auto bs = run_replicas<double>(
        mc2, [&](std::size_t, Rng& rng) { return ehrenfest::sample_hitting(rates, rng); });
    double mean_exact = 0.0;
    for (double r : rates) mean_exact += 1.0 / r;
    const double ks = ks_statistic(direct, bs);
    const double crit = ks_critical_value(0.01, direct.size(), bs.size());
    const Estimate de = estimate(direct);
    auto add = [&](const std::string& stat, double v, std::optional<double> se, bool mcrow) {
      Record r = row(stat, v);
      r.m = Mu;
      r.std_error = se;
      if (mcrow) r.replicas = mc.replicas;
      rows.push_back(r);
    };
    add("hitting_mean_exact", mean_exact, std::nullopt, false);
    add("hitting_mean_mc", de.mean, de.std_error, true);
    add("ks_statistic", ks, std::nullopt, true);
    add("ks_critical", crit, std::nullopt, true);
    add("hitting", ks < crit ? 1.0 : 0.0, std::nullopt, true);
  } else {
    throw ConfigError("check", "expected sandwich, interlacing, halfgap, killed or hitting");
  }
  return rows;
}

std::vector<Record> cmd_entropy(const Options& opts) {
  const Config c("entropy", opts, {"graph", "d", "m", "n", "t", "replicas", "kappa", "start"});
  const Graph g = c.graph();
  const MonteCarlo mc = c.mc();
  const double kappa = c.has("kappa") ? c.real("kappa") : entropy::kappa_known(g);
  const Vertex x0 = default_start(g, c);
  std::vector<Record> rows;
  for (double t : c.list("t")) {
    if (t < 0.0) throw ConfigError("t", "times must be >= 0");
    const auto chk = entropy::entropy_decay_check(g, dirac(g.n(), x0), t, mc, kappa);
    Record r = base("entropy", g, c.seed());
    r.t = t;
    r.statistic = "entropy_mean";
    r.value = chk.mean_entropy.mean;
    r.std_error = chk.mean_entropy.std_error;
    r.replicas = mc.replicas;
    rows.push_back(r);
    r.statistic = "entropy_bound";
    r.value = chk.bound;
    r.std_error.reset();
    r.replicas.reset();
    rows.push_back(r);
  }
  return rows;
}

std::vector<Record> cmd_hardy(const Options& opts) {
  const Config c("hardy", opts, {"d", "detail"});
  const std::uint64_t du = c.uint("d", 100);
  if (du < 2 || du > 2000) throw ConfigError("d", "must be in [2, 2000]");
  const int d = static_cast<int>(du);
  const auto P = ehrenfest::build_p(d);
  std::vector<Record> rows;
  for (int M = 1; M <= d / 2; ++M) {
    const double cm = ehrenfest::hardy_constant(d, M);
    const double lam = ehrenfest::killed_eigenvalues(P, M)[0];
    Record r;
    r.experiment = "hardy";
    r.graph = "hypercube";
    if (d < 64) r.n = std::uint64_t{1} << d;
    r.d = du;
    r.m = static_cast<std::uint64_t>(M);
    r.seed = c.seed();
    r.statistic = "hardy_ratio";
    r.value = lam * cm;
    rows.push_back(r);
    if (c.flag("detail")) {
      r.statistic = "hardy_C";
      r.value = cm;
      rows.push_back(r);
      r.statistic = "lambda_P";
      r.value = lam;
      rows.push_back(r);
    }
  }
  return rows;
}

std::vector<Record> cmd_profile_sweep(const Options& opts) {
  const Config c("profile-sweep", opts, {"graph", "d", "m", "n", "p", "a-grid", "replicas", "start"});
  const Graph g = c.graph();
  const int p = get_p(c, 2);
  const std::vector<double> grid = c.grid("a-grid", "-4:4:1");
  std::vector<Record> rows;
  if (g.family() == Family::Complete) throw CapabilityError("profile-sweep supports hypercube and k_bipartite");
  if (p == 2) {
    for (double a : grid) {
      const double t = window_time(g, p, a);
      Record r = base("profile-sweep", g, c.seed());
      r.t = t;
      r.a = a;
      r.p = 2;
      if (g.family() == Family::Hypercube) {
        const Record h = hypercube_row("profile-sweep", g.dimension(), t, a, c.seed());
        r.statistic = h.statistic;
        r.value = h.value;
        rows.push_back(r);
        r.statistic = "rw_lower_bound";
        r.value = rw_l2_distance(g, dirac(g.n(), 0), t);
        rows.push_back(r);
      } else {
        r.statistic = "exact_l2";
        r.value = bipartite::exact_l2(g.m(), g.n(), Part::C2, t);
        rows.push_back(r);
        r.statistic = "predicted";
        r.value = (1.0 + bipartite::big_d(static_cast<double>(g.m()) / static_cast<double>(g.n()))) *
                  std::exp(-a);
        rows.push_back(r);
      }
    }
    return rows;
  }
  Options sim = opts;
  sim.erase("a-grid");
  sim["a-grid"] = c.has("a-grid") ? c.raw("a-grid") : "-4:4:1";
  sim["p"] = "1";
  auto out = cmd_simulate(sim);
  for (auto& r : out) r.experiment = "profile-sweep";
  return out;
}

}  // namespace

std::string to_csv(const Record& r) {
  std::string s;
  s += r.experiment + ',' + r.graph + ',' + field(r.n) + ',' + field(r.d) + ',' + field(r.m) + ',' +
       field(r.t) + ',' + field(r.a) + ',' + field(r.p) + ',' + r.statistic + ',' +
       format_double(r.value) + ',' + field(r.std_error) + ',' + field(r.replicas) + ',' +
       std::to_string(r.seed);
  return s;
}

std::vector<double> parse_grid(const std::string& key, const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError(key, "expected start:stop:step");
  const double start = to_double(key, parts[0]);
  const double stop = to_double(key, parts[1]);
  const double step = to_double(key, parts[2]);
  if (!(step > 0.0)) throw ConfigError(key, "step must be positive");
  if (stop < start) throw ConfigError(key, "stop must be >= start");
  const double span = (stop - start) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  if (count > 1000000) throw ConfigError(key, "grid too large");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
  return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(to_double(key, part));
  if (out.empty()) throw ConfigError(key, "empty list");
  return out;
}

Options read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  Options out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config", "line " + std::to_string(lineno) + " is not key=value");
    std::string key = trim(line.substr(0, eq));
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    if (key.empty()) throw ConfigError("config", "empty key on line " + std::to_string(lineno));
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::uint64_t resolve_seed(const Options& opts) {
  auto it = opts.find("seed");
  if (it != opts.end()) return to_uint("seed", it->second);
  if (const char* env = std::getenv("AVGPROC_SEED")) return to_uint("AVGPROC_SEED", env);
  return 0;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"simulate", "exact-bipartite", "hypercube-exact",
                                                 "ehrenfest", "entropy", "hardy", "profile-sweep"};
  return names;
}

std::vector<Record> run(const std::string& command, const Options& opts) {
  if (command == "simulate") return cmd_simulate(opts);
  if (command == "exact-bipartite") return cmd_exact_bipartite(opts);
  if (command == "hypercube-exact") return cmd_hypercube_exact(opts);
  if (command == "ehrenfest") return cmd_ehrenfest(opts);
  if (command == "entropy") return cmd_entropy(opts);
  if (command == "hardy") return cmd_hardy(opts);
  if (command == "profile-sweep") return cmd_profile_sweep(opts);
  throw ConfigError("command", "unknown subcommand '" + command + "'");
}

void write_csv(const std::vector<Record>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    if (!std::isfinite(r.value)) throw NumericalError("non-finite value for " + r.statistic);
    out << to_csv(r) << '\n';
  }
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NumericalError*>(&e) != nullptr) return 3;
  if (dynamic_cast<const ParameterError*>(&e) != nullptr) return 2;
  if (dynamic_cast<const CapabilityError*>(&e) != nullptr) return 2;
  return 1;
}

}  // namespace avgproc::experiment
