#include "sdc/stats_ad.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "json.hpp"
#include "sdc/parallel.hpp"

namespace sdc {

namespace {

constexpr std::size_t kMinNullReplicates = 1000;

void check_observation(const Observation& o) {
  if (o.reachable < 1 || o.reachable > o.n_states) {
    throw std::invalid_argument("reachable count " + std::to_string(o.reachable) +
                                " outside [1, " + std::to_string(o.n_states) + "]");
  }
}

std::string describe(const Observation& o) {
  return "(" + std::to_string(o.n_states) + " states, " + std::to_string(o.n_transitions) +
         " transitions)";
}

}  // namespace

std::vector<Observation> student_observations() {
  return {{11, 13, 10}, {11, 13, 11}, {11, 14, 11}, {11, 16, 11}, {11, 21, 11}};
}

const ReachabilityPMF& find_pmf(const Observation& obs, std::span<const ReachabilityPMF> pmfs) {
  auto it = std::find_if(pmfs.begin(), pmfs.end(), [&](const ReachabilityPMF& p) {
    return p.config.n_states == obs.n_states && p.config.n_transitions == obs.n_transitions;
  });
  if (it == pmfs.end()) throw ConfigMismatchError("no distribution for " + describe(obs));
  return *it;
}

double pit_value(const ReachabilityPMF& pmf, std::size_t reachable, Rng& rng) {
  const double lo = reachable >= 1 ? cdf(pmf, reachable - 1) : 0.0;
  const double hi = cdf(pmf, reachable);
  // 1 - [0, 1) is (0, 1], so the draw lands in (lo, hi].
  const double v = 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return hi > lo ? lo + v * (hi - lo) : hi;
}

std::vector<double> pit_transform(std::span<const Observation> obs,
                                  std::span<const ReachabilityPMF> pmfs, Rng& rng) {
  std::vector<double> u;
  u.reserve(obs.size());
  for (const auto& o : obs) {
    check_observation(o);
    u.push_back(pit_value(find_pmf(o, pmfs), o.reachable, rng));
  }
  return u;
}

double clamp_unit(double u, double eps) noexcept { return std::clamp(u, eps, 1.0 - eps); }

double ad_statistic(std::span<const double> u) {
  if (u.empty()) throw EmptySampleError("Anderson-Darling statistic of an empty sample");
  std::vector<double> sorted(u.begin(), u.end());
  std::sort(sorted.begin(), sorted.end());
  if (!(sorted.front() > 0.0) || !(sorted.back() < 1.0)) {
    throw std::domain_error("Anderson-Darling input must lie strictly inside (0, 1)");
  }
  const auto k = sorted.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double weight = 2.0 * static_cast<double>(i) + 1.0;
    sum += weight * (std::log(sorted[i]) + std::log1p(-sorted[k - 1 - i]));
  }
  return -static_cast<double>(k) - sum / static_cast<double>(k);
}

double monte_carlo_p_value(double observed, std::span<const double> null_statistics) {
  const auto exceeding = std::count_if(null_statistics.begin(), null_statistics.end(),
                                       [&](double a) { return a >= observed; });
  return (1.0 + static_cast<double>(exceeding)) /
         (static_cast<double>(null_statistics.size()) + 1.0);
}

AdTestResult ad_test(std::span<const Observation> obs, std::span<const ReachabilityPMF> pmfs,
                     std::size_t n_null, std::uint64_t seed, unsigned threads) {
  if (obs.empty()) throw EmptySampleError("no observations");
  if (n_null < kMinNullReplicates) {
    throw std::invalid_argument("at least " + std::to_string(kMinNullReplicates) +
                                " null replicates are required");
  }

  // Resolve every PMF up front so that mismatches surface before sampling.
  std::vector<const ReachabilityPMF*> matched;
  std::size_t pmf_samples = 0;
  for (const auto& o : obs) {
    check_observation(o);
    const auto& pmf = find_pmf(o, pmfs);
    if (pmf.config.n_samples == 0) throw std::invalid_argument("empty distribution");
    pmf_samples = pmf_samples == 0 ? pmf.config.n_samples
                                   : std::min(pmf_samples, pmf.config.n_samples);
    matched.push_back(&pmf);
  }
  const double eps = 1.0 / (2.0 * static_cast<double>(pmf_samples));

  AdTestResult result;
  result.n_null = n_null;
  result.n_pmf_samples = pmf_samples;
  result.seed = seed;

  Rng observed_rng(derive_seed(seed, streams::kObservedPit, 0));
  for (std::size_t i = 0; i < obs.size(); ++i) {
    result.u_values.push_back(
        clamp_unit(pit_value(*matched[i], obs[i].reachable, observed_rng), eps));
  }
  result.statistic = ad_statistic(result.u_values);

  std::vector<double> null_stats(n_null);
  parallel_for(n_null, resolve_threads(threads), [&](std::size_t begin, std::size_t end) {
    std::vector<double> u(matched.size());
    for (std::size_t r = begin; r < end; ++r) {
      Rng rng(derive_seed(seed, streams::kNull, r));
      for (std::size_t i = 0; i < matched.size(); ++i) {
        const auto x = sample_from(*matched[i], rng);
        u[i] = clamp_unit(pit_value(*matched[i], x, rng), eps);
      }
      null_stats[r] = ad_statistic(u);
    }
  });

  result.n_exceeding = static_cast<std::size_t>(
      std::count_if(null_stats.begin(), null_stats.end(),
                    [&](double a) { return a >= result.statistic; }));
  result.p_value = monte_carlo_p_value(result.statistic, null_stats);
  return result;
}

std::vector<ReachabilityPMF> simulate_pmfs(std::span<const Observation> obs,
                                           std::size_t pmf_samples, std::uint64_t seed,
                                           unsigned threads) {
  std::vector<ReachabilityPMF> pmfs;
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (const auto& o : obs) {
    if (!seen.emplace(std::pair{o.n_states, o.n_transitions}, true).second) continue;
    RandomModelConfig cfg;
    cfg.n_states = o.n_states;
    cfg.n_transitions = o.n_transitions;
    cfg.n_samples = pmf_samples;
    // Distinct configurations get unrelated streams.
    cfg.seed = derive_seed(seed, streams::kPmf,
                           (static_cast<std::uint64_t>(o.n_states) << 32) ^ o.n_transitions);
    pmfs.push_back(reachability_pmf(cfg, threads));
  }
  return pmfs;
}

AdTestResult ad_test_simulated(std::span<const Observation> obs, std::size_t pmf_samples,
                               std::size_t n_null, std::uint64_t seed, unsigned threads) {
  const auto pmfs = simulate_pmfs(obs, pmf_samples, seed, threads);
  return ad_test(obs, pmfs, n_null, seed, threads);
}

std::string ad_result_to_json(const AdTestResult& result) {
  nlohmann::ordered_json j;
  j["statistic"] = result.statistic;
  j["p_value"] = result.p_value;
  j["n_null"] = result.n_null;
  j["n_pmf_samples"] = result.n_pmf_samples;
  j["seed"] = result.seed;
  j["n_exceeding"] = result.n_exceeding;
  j["u_values"] = result.u_values;
  return j.dump() + "\n";
}

}  // namespace sdc
