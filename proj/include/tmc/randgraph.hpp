#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tmc/graph.hpp"

namespace tmc {

/// Counter-based generator: output k is the SplitMix64 finalizer applied to
/// seed + (k+1) * golden gamma. Streams are fixed by (seed, counter) alone,
/// so any trial can be regenerated in isolation.
class CounterRng {
 public:
  static constexpr std::string_view kName = "splitmix64-counter/1";

  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for one trial of one cell, independent of evaluation order.
std::uint64_t trial_seed(std::uint64_t base, int n, int cell, int trial);

/// Target function f(n). All logarithms are natural.
struct FSpec {
  enum class Kind {
    kPower,      // f(n) = n^a
    kNLogN,      // f(n) = c * n * log n
    kQuadratic,  // f(n) = c * n^2, must stay below n(n-1)/2 + n
  };
  Kind kind = Kind::kPower;
  double param = 1.0;  // a or c

  double value(int n) const;
  std::string label() const;
};

/// Parses "n^1.5", "0.5*n*log n" (also "c*n*log n" forms) or "0.25*n^2".
FSpec parse_fspec(std::string_view text);

enum class Regime { kHigh, kLow };

/// High regime when f is tagged c*n*log n, or when f(n) >= n log n.
Regime regime(int n, const FSpec& f);

/// (f(n) + n log log n) / n^2 in the high regime, log n / n in the low one.
/// Requires n >= 3 and 1 <= f(n) < n(n-1)/2 + n.
double threshold_p(int n, const FSpec& f);

/// C = 5 when f(n) >= n log n, otherwise 5 / l with f(n) = l n log n.
/// Throws in the low regime.
double regime_constant(int n, const FSpec& f);

/// Multipliers used below/above the threshold in the low regime.
inline constexpr double kLowRegimeUpper = 2.0;
inline constexpr double kLowRegimeLower = 0.5;

/// G(n, p): each pair independently with probability p. Uses geometric
/// skipping over the pair sequence (0,1),(0,2),(1,2),(0,3),...
Graph sample_gnp(int n, double p, std::uint64_t seed);

enum class Certification { kYes, kNo, kUnknown };
std::string_view certification_name(Certification c);

struct TrialRecord {
  int n = 0;
  double p = 0;
  double multiplier = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  int m = 0;
  bool connected = false;
  int delta = 0;
  int l_lb = 0;
  int tmc_lb = 0;
  int tmc_ub = 0;
  double f_value = 0;
  Certification status = Certification::kUnknown;
  bool exact = false;
};

/// Certified interval for tmc(G) at any order: greedy leaf bound below and
/// min(m+n-2, m+delta) above (m+n for K_n, 0 when disconnected).
struct CertifiedBounds {
  bool connected = false;
  int delta = 0;
  int l_lb = 0;
  int lower = 0;
  int upper = 0;
};
CertifiedBounds certified_bounds(const Graph& g);

Certification certify(int lower, int upper, double f_value);

struct ExperimentConfig {
  std::vector<int> n_values;
  FSpec f;
  std::vector<double> multipliers;
  int trials = 100;
  std::uint64_t seed = 1;
  /// Orders up to this use the exact solver instead of bounds.
  int exact_max_n = 7;
  int jobs = 1;
};

struct CellSummary {
  int n = 0;
  double multiplier = 0;
  double p = 0;
  double f_value = 0;
  int trials = 0;
  int yes = 0;
  int no = 0;
  int unknown = 0;
  int disconnected = 0;

  double fraction(int count) const { return trials ? static_cast<double>(count) / trials : 0.0; }
};

struct ExperimentResult {
  std::vector<TrialRecord> records;  // ordered by (cell, trial)
  std::vector<CellSummary> cells;
};

/// Certifies tmc(G(n, multiplier * threshold_p)) >= f(n) per trial.
ExperimentResult run_threshold_experiment(const ExperimentConfig& cfg);

/// CSV: n,p,multiplier,trial,seed,m,connected,delta,l_lb,tmc_lb,tmc_ub,f_value,status
std::string records_csv(const ExperimentResult& result);
/// Per-cell fractions as JSON text.
std::string summary_json(const ExperimentConfig& cfg, const ExperimentResult& result);

/// Reads an experiment config from JSON:
/// {"n": [..], "f": "n^1.5", "multipliers": [..], "trials": 200, "seed": 1,
///  "exact_max_n": 7}
ExperimentConfig parse_experiment_config(std::string_view json_text);

/// Fraction of connected samples of G(n, (log n + a)/n).
double connectivity_probability(int n, double a, int trials, std::uint64_t seed, int jobs = 1);

/// exp(-exp(-a)), the classical limit of the connectivity probability.
double connectivity_limit(double a);

}  // namespace tmc
