#include "tmc/randgraph.hpp"

#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "tmc/error.hpp"
#include "tmc/parallel.hpp"
#include "tmc/solver.hpp"
#include "tmc/spanning.hpp"

namespace tmc {

namespace {
constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::next_u64() { return mix64(seed_ + (++counter_) * kGoldenGamma); }

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t trial_seed(std::uint64_t base, int n, int cell, int trial) {
  std::uint64_t h = mix64(base ^ 0x746d632d6c6162ULL);
  h = mix64(h ^ static_cast<std::uint64_t>(n));
  h = mix64(h ^ (static_cast<std::uint64_t>(cell) << 32));
  return mix64(h ^ static_cast<std::uint64_t>(trial));
}

double FSpec::value(int n) const {
  double x = n;
  switch (kind) {
    case Kind::kPower:
      return std::pow(x, param);
    case Kind::kNLogN:
      return param * x * std::log(x);
    case Kind::kQuadratic:
      return param * x * x;
  }
  return 0;
}

std::string FSpec::label() const {
  std::ostringstream out;
  out << param;
  switch (kind) {
    case Kind::kPower:
      return param == 1.0 ? "n" : param == 0.0 ? "1" : "n^" + out.str();
    case Kind::kNLogN:
      return out.str() + "*n*log n";
    case Kind::kQuadratic:
      return out.str() + "*n^2";
  }
  return "";
}

FSpec parse_fspec(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  static const std::regex power(R"(n(?:\^([0-9]*\.?[0-9]+))?)");
  static const std::regex constant(R"(([0-9]*\.?[0-9]+))");
  static const std::regex nlogn(R"((?:([0-9]*\.?[0-9]+)\*?)?n\*?log\(?n\)?)");
  static const std::regex quadratic(R"((?:([0-9]*\.?[0-9]+)\*?)?n\^2(?:cap)?)");
  std::smatch match;
  if (std::regex_match(s, match, quadratic)) {
    return {FSpec::Kind::kQuadratic, match[1].matched ? std::stod(match[1]) : 1.0};
  }
  if (std::regex_match(s, match, power)) {
    return {FSpec::Kind::kPower, match[1].matched ? std::stod(match[1]) : 1.0};
  }
  if (std::regex_match(s, match, nlogn)) {
    return {FSpec::Kind::kNLogN, match[1].matched ? std::stod(match[1]) : 1.0};
  }
  if (std::regex_match(s, match, constant) && std::stod(match[1]) == 1.0) {
    return {FSpec::Kind::kPower, 0.0};
  }
  throw Error("unrecognized f(n) expression '" + std::string(text) + "'");
}

namespace {

void check_f_range(int n, const FSpec& f) {
  if (n < 3) throw Error("threshold functions need n >= 3");
  double value = f.value(n);
  double cap = 0.5 * n * (n - 1.0) + n;
  if (!(value >= 1.0) || !(value < cap)) {
    throw Error("f(n) = " + std::to_string(value) + " is outside [1, n(n-1)/2 + n) for n = " + std::to_string(n));
  }
}

}  // namespace

Regime regime(int n, const FSpec& f) {
  if (f.kind == FSpec::Kind::kNLogN) return Regime::kHigh;
  return f.value(n) >= n * std::log(static_cast<double>(n)) ? Regime::kHigh : Regime::kLow;
}

double threshold_p(int n, const FSpec& f) {
  check_f_range(n, f);
  double x = n;
  if (regime(n, f) == Regime::kHigh) return (f.value(n) + x * std::log(std::log(x))) / (x * x);
  return std::log(x) / x;
}

double regime_constant(int n, const FSpec& f) {
  check_f_range(n, f);
  if (regime(n, f) == Regime::kLow) throw Error("regime constant applies only when f(n) grows like n log n or faster");
  if (f.kind == FSpec::Kind::kNLogN) return f.param >= 1.0 ? 5.0 : 5.0 / f.param;
  double share = f.value(n) / (n * std::log(static_cast<double>(n)));
  return share >= 1.0 ? 5.0 : 5.0 / share;
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0, 1]");
  std::vector<Edge> edges;
  if (n < 2 || p == 0.0) return Graph(std::max(n, 0));
  if (p == 1.0) {
    for (int v = 1; v < n; ++v) {
      for (int w = 0; w < v; ++w) edges.push_back({w, v});
    }
    return Graph(n, edges);
  }
  // Batagelj-Brandes: jump over a geometric number of absent pairs.
  CounterRng rng(seed);
  double log_q = std::log1p(-p);
  long long v = 1;
  long long w = -1;
  while (v < n) {
    double r = rng.uniform();
    w += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) edges.push_back({static_cast<int>(w), static_cast<int>(v)});
  }
  return Graph(n, edges);
}

std::string_view certification_name(Certification c) {
  switch (c) {
    case Certification::kYes:
      return "yes";
    case Certification::kNo:
      return "no";
    case Certification::kUnknown:
      return "unknown";
  }
  return "unknown";
}

CertifiedBounds certified_bounds(const Graph& g) {
  CertifiedBounds b;
  b.connected = is_connected(g);
  b.delta = min_degree(g);
  if (!b.connected) return b;
  int n = g.order();
  int m = g.size();
  if (n == 1) {
    b.lower = b.upper = 1;
    return b;
  }
  b.l_lb = leaf_lower_bound(g);
  if (is_complete(g)) {
    b.lower = b.upper = m + n;
    return b;
  }
  b.lower = m - n + 2 + b.l_lb;
  // Minimum-degree bound with l(G) <= n - 1.
  b.upper = std::min(m + n - 2, m + b.delta);
  return b;
}

Certification certify(int lower, int upper, double f_value) {
  if (lower >= f_value) return Certification::kYes;
  if (upper < f_value) return Certification::kNo;
  return Certification::kUnknown;
}

namespace {

TrialRecord run_trial(const ExperimentConfig& cfg, int n, double p, double multiplier, double f_value, int cell,
                      int trial) {
  TrialRecord rec;
  rec.n = n;
  rec.p = p;
  rec.multiplier = multiplier;
  rec.trial = trial;
  rec.seed = trial_seed(cfg.seed, n, cell, trial);
  rec.f_value = f_value;
  Graph g = sample_gnp(n, p, rec.seed);
  rec.m = g.size();
  CertifiedBounds b = certified_bounds(g);
  rec.connected = b.connected;
  rec.delta = b.delta;
  rec.l_lb = b.l_lb;
  rec.tmc_lb = b.lower;
  rec.tmc_ub = b.upper;
  if (b.connected && n <= cfg.exact_max_n && n <= kSolverMaxOrder) {
    TmcOutcome exact = tmc_exact(g, SolverOptions{.max_n = cfg.exact_max_n});
    if (exact.exact()) {
      rec.exact = true;
      rec.tmc_lb = rec.tmc_ub = *exact.value;
      if (n >= 2) rec.l_lb = spanning_stats(g).l;
    }
  }
  rec.status = certify(rec.tmc_lb, rec.tmc_ub, f_value);
  return rec;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

ExperimentResult run_threshold_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 0) throw Error("trial count must be non-negative");
  ExperimentResult result;
  struct Cell {
    int n;
    double multiplier, p, f_value;
  };
  std::vector<Cell> cells;
  for (int n : cfg.n_values) {
    double base = threshold_p(n, cfg.f);
    for (double mult : cfg.multipliers) {
      if (!(mult > 0)) throw Error("multipliers must be positive");
      cells.push_back({n, mult, std::min(1.0, mult * base), cfg.f.value(n)});
    }
  }
  std::size_t per_cell = static_cast<std::size_t>(cfg.trials);
  result.records.resize(cells.size() * per_cell);
  parallel_for(result.records.size(), cfg.jobs, [&](std::size_t k) {
    std::size_t c = k / per_cell;
    const Cell& cell = cells[c];
    result.records[k] = run_trial(cfg, cell.n, cell.p, cell.multiplier, cell.f_value, static_cast<int>(c),
                                  static_cast<int>(k % per_cell));
  });
  for (std::size_t c = 0; c < cells.size(); ++c) {
    CellSummary s;
    s.n = cells[c].n;
    s.multiplier = cells[c].multiplier;
    s.p = cells[c].p;
    s.f_value = cells[c].f_value;
    s.trials = cfg.trials;
    for (std::size_t t = 0; t < per_cell; ++t) {
      const auto& rec = result.records[c * per_cell + t];
      s.yes += rec.status == Certification::kYes;
      s.no += rec.status == Certification::kNo;
      s.unknown += rec.status == Certification::kUnknown;
      s.disconnected += !rec.connected;
    }
    result.cells.push_back(s);
  }
  return result;
}

std::string records_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "n,p,multiplier,trial,seed,m,connected,delta,l_lb,tmc_lb,tmc_ub,f_value,status\n";
  for (const auto& r : result.records) {
    out << r.n << ',' << format_double(r.p) << ',' << format_double(r.multiplier) << ',' << r.trial << ',' << r.seed
        << ',' << r.m << ',' << (r.connected ? "true" : "false") << ',' << r.delta << ',' << r.l_lb << ',' << r.tmc_lb
        << ',' << r.tmc_ub << ',' << format_double(r.f_value) << ',' << certification_name(r.status) << '\n';
  }
  return out.str();
}

std::string summary_json(const ExperimentConfig& cfg, const ExperimentResult& result) {
  nlohmann::ordered_json doc;
  doc["schema"] = "tmc-lab/1";
  doc["rng"] = CounterRng::kName;
  doc["f"] = cfg.f.label();
  doc["seed"] = cfg.seed;
  doc["trials"] = cfg.trials;
  doc["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : result.cells) {
    nlohmann::ordered_json cell;
    cell["n"] = c.n;
    cell["multiplier"] = c.multiplier;
    cell["p"] = c.p;
    cell["f_value"] = c.f_value;
    cell["trials"] = c.trials;
    cell["yes"] = c.fraction(c.yes);
    cell["no"] = c.fraction(c.no);
    cell["unknown"] = c.fraction(c.unknown);
    cell["disconnected"] = c.fraction(c.disconnected);
    doc["cells"].push_back(cell);
  }
  return doc.dump();
}

ExperimentConfig parse_experiment_config(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("experiment config: ") + e.what(), e.byte);
  }
  ExperimentConfig cfg;
  try {
    cfg.n_values = doc.at("n").get<std::vector<int>>();
    cfg.f = parse_fspec(doc.at("f").get<std::string>());
    cfg.multipliers = doc.at("multipliers").get<std::vector<double>>();
    cfg.trials = doc.value("trials", cfg.trials);
    cfg.seed = doc.value("seed", cfg.seed);
    cfg.exact_max_n = doc.value("exact_max_n", cfg.exact_max_n);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("experiment config: ") + e.what());
  }
  return cfg;
}

double connectivity_probability(int n, double a, int trials, std::uint64_t seed, int jobs) {
  if (n < 2 || trials <= 0) throw Error("connectivity probability needs n >= 2 and trials > 0");
  double p = (std::log(static_cast<double>(n)) + a) / n;
  if (!(p >= 0.0 && p <= 1.0)) throw Error("(log n + a)/n falls outside [0, 1]");
  std::vector<char> connected(trials, 0);
  parallel_for(static_cast<std::size_t>(trials), jobs, [&](std::size_t t) {
    connected[t] = is_connected(sample_gnp(n, p, trial_seed(seed, n, 0, static_cast<int>(t))));
  });
  int hits = 0;
  for (char c : connected) hits += c;
  return static_cast<double>(hits) / trials;
}

double connectivity_limit(double a) { return std::exp(-std::exp(-a)); }

}  // namespace tmc
