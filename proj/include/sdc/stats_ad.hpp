#pragma once

// Anderson-Darling goodness-of-fit of observed reachabilities against the
// uniform random diagram model, with a Monte Carlo p-value.
//
// Observed reachable counts are discrete, so they are mapped to the unit
// interval with a randomized probability integral transform: an observation
// x is sent to a uniform draw from (F(x-1), F(x)], where F is the empirical
// CDF of its (states, transitions) configuration. Under the null hypothesis
// the transformed values are exactly Uniform(0, 1).

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdc/montecarlo.hpp"

namespace sdc {

struct Observation {
  std::size_t n_states = 0;
  std::size_t n_transitions = 0;
  std::size_t reachable = 0;

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// The five student diagrams with eleven states: (11,13)->10, (11,13)->11,
/// (11,14)->11, (11,16)->11, (11,21)->11.
std::vector<Observation> student_observations();

class ConfigMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptySampleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AdTestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n_null = 0;
  std::size_t n_pmf_samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> u_values;  // clamped transformed observations, input order
  std::size_t n_exceeding = 0;   // null replicates with A^2 >= statistic
};

/// PMF whose configuration matches `obs`; throws ConfigMismatchError.
const ReachabilityPMF& find_pmf(const Observation& obs, std::span<const ReachabilityPMF> pmfs);

/// Randomized PIT of a single reachable count.
double pit_value(const ReachabilityPMF& pmf, std::size_t reachable, Rng& rng);

/// Randomized PIT of each observation against the PMF with its configuration.
/// Values lie in (0, 1]; no clamping is applied.
std::vector<double> pit_transform(std::span<const Observation> obs,
                                  std::span<const ReachabilityPMF> pmfs, Rng& rng);

/// Clamp to [eps, 1 - eps].
double clamp_unit(double u, double eps) noexcept;

/// A^2 = -k - (1/k) sum_{i=1..k} (2i - 1) (ln u_(i) + ln(1 - u_(k+1-i))).
/// Requires a non-empty sample strictly inside (0, 1).
double ad_statistic(std::span<const double> u);

/// Add-one Monte Carlo p-value: (1 + #{null >= observed}) / (n + 1).
double monte_carlo_p_value(double observed, std::span<const double> null_statistics);

/// Full test with precomputed PMFs. Every replicate r of the null draws from
/// its own stream derive_seed(seed, null stream, r); the result is
/// independent of `threads`. Requires n_null >= 1000.
AdTestResult ad_test(std::span<const Observation> obs, std::span<const ReachabilityPMF> pmfs,
                     std::size_t n_null, std::uint64_t seed, unsigned threads = 0);

/// Simulates a PMF with `pmf_samples` diagrams for every distinct
/// configuration among `obs`, seeded from `seed`.
std::vector<ReachabilityPMF> simulate_pmfs(std::span<const Observation> obs,
                                           std::size_t pmf_samples, std::uint64_t seed,
                                           unsigned threads = 0);

/// simulate_pmfs followed by ad_test with the same seed.
AdTestResult ad_test_simulated(std::span<const Observation> obs, std::size_t pmf_samples,
                               std::size_t n_null, std::uint64_t seed, unsigned threads = 0);

std::string ad_result_to_json(const AdTestResult& result);

}  // namespace sdc
