#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdc/analysis.hpp"
#include "sdc/diagram.hpp"

namespace sdc {

using Rng = std::mt19937_64;

class CardinalityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Uniform random diagram model: `n_transitions` distinct directed edges
/// between distinct states out of the n(n-1) possible, start fixed at S1.
struct RandomModelConfig {
  std::size_t n_states = 1;
  std::size_t n_transitions = 0;
  std::size_t n_samples = 4000;
  std::uint64_t seed = 0;

  friend bool operator==(const RandomModelConfig&, const RandomModelConfig&) = default;
};

/// Number of ordered pairs (i, j), i != j. Throws CardinalityError for n = 0.
std::uint64_t edge_universe_size(std::size_t n_states);

/// Uniform m-subset of the non-loop edges on n vertices, sorted.
std::vector<Edge> sample_edges(std::size_t n_states, std::size_t n_transitions, Rng& rng);

/// States S1..Sn (start S1) and transitions T1..Tm in sorted edge order.
StateDiagram random_diagram(std::size_t n_states, std::size_t n_transitions, Rng& rng);

/// Empirical distribution of the number of states reachable from the start.
struct ReachabilityPMF {
  RandomModelConfig config;
  std::vector<std::uint64_t> counts;  // counts[k], k = 0..n_states; counts[0] == 0

  double probability(std::size_t k) const;
  double mean() const;

  friend bool operator==(const ReachabilityPMF&, const ReachabilityPMF&) = default;
};

/// Simulates cfg.n_samples diagrams. Sample i draws from the stream
/// derive_seed(cfg.seed, pmf stream, i), so the result does not depend on
/// `threads` (0 = SDC_THREADS / hardware default).
ReachabilityPMF reachability_pmf(const RandomModelConfig& cfg, unsigned threads = 0);

/// P(reachable <= k). cdf(pmf, n_states) == 1.
double cdf(const ReachabilityPMF& pmf, std::size_t k);

/// Draws a reachable count from the empirical distribution.
std::size_t sample_from(const ReachabilityPMF& pmf, Rng& rng);

std::string pmf_to_json(const ReachabilityPMF& pmf);
std::string pmf_to_chart(const ReachabilityPMF& pmf, std::size_t width = 50);

namespace streams {
inline constexpr std::uint64_t kPmf = 0x706d66;         // "pmf"
inline constexpr std::uint64_t kObservedPit = 0x6f6273;  // "obs"
inline constexpr std::uint64_t kNull = 0x6e756c;        // "nul"
}  // namespace streams

}  // namespace sdc
