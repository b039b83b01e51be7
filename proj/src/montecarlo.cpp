#include "sdc/montecarlo.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <mutex>

#include "json.hpp"
#include "sdc/parallel.hpp"

namespace sdc {

namespace {

void check_config(std::size_t n_states, std::size_t n_transitions) {
  const auto universe = edge_universe_size(n_states);
  if (n_transitions > universe) {
    throw CardinalityError(std::to_string(n_transitions) + " transitions exceed the " +
                           std::to_string(universe) + " possible edges between " +
                           std::to_string(n_states) + " states");
  }
}

void fill_universe(std::size_t n, std::vector<Edge>& universe) {
  universe.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) universe.push_back({i, j});
    }
  }
}

// Partial Fisher-Yates: the first m slots become a uniform m-subset.
void choose_edges(std::vector<Edge>& universe, std::size_t m, Rng& rng,
                  std::vector<Edge>& out) {
  const std::size_t u = universe.size();
  for (std::size_t k = 0; k < m; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, u - 1);
    std::swap(universe[k], universe[pick(rng)]);
  }
  out.assign(universe.begin(), universe.begin() + static_cast<std::ptrdiff_t>(m));
  std::sort(out.begin(), out.end());
}

}  // namespace

std::uint64_t edge_universe_size(std::size_t n_states) {
  if (n_states == 0) throw CardinalityError("a diagram needs at least one state");
  const std::uint64_t n = n_states;
  if (n > (std::uint64_t{1} << 31)) throw CardinalityError("too many states");
  return n * (n - 1);
}

std::vector<Edge> sample_edges(std::size_t n_states, std::size_t n_transitions, Rng& rng) {
  check_config(n_states, n_transitions);
  std::vector<Edge> universe;
  std::vector<Edge> out;
  universe.reserve(n_states * (n_states - 1));
  fill_universe(n_states, universe);
  choose_edges(universe, n_transitions, rng, out);
  return out;
}

StateDiagram random_diagram(std::size_t n_states, std::size_t n_transitions, Rng& rng) {
  const auto edges = sample_edges(n_states, n_transitions, rng);
  auto state_name = [](std::size_t i) { return "S" + std::to_string(i + 1); };

  StateDiagram d;
  d.title = "Random " + std::to_string(n_states) + "/" + std::to_string(n_transitions);
  for (std::size_t i = 0; i < n_states; ++i) {
    d.states.push_back({state_name(i), StateKind::Unclassified, std::nullopt});
  }
  d.start = state_name(0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    d.transitions.push_back(
        {"T" + std::to_string(k + 1), state_name(edges[k].from), state_name(edges[k].to)});
  }
  return d;
}

double ReachabilityPMF::probability(std::size_t k) const {
  if (k >= counts.size() || config.n_samples == 0) return 0.0;
  return static_cast<double>(counts[k]) / static_cast<double>(config.n_samples);
}

double ReachabilityPMF::mean() const {
  if (config.n_samples == 0) return 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    total += static_cast<double>(k) * static_cast<double>(counts[k]);
  }
  return total / static_cast<double>(config.n_samples);
}

ReachabilityPMF reachability_pmf(const RandomModelConfig& cfg, unsigned threads) {
  check_config(cfg.n_states, cfg.n_transitions);

  ReachabilityPMF pmf;
  pmf.config = cfg;
  pmf.counts.assign(cfg.n_states + 1, 0);

  std::mutex merge;
  parallel_for(cfg.n_samples, resolve_threads(threads), [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint64_t> local(cfg.n_states + 1, 0);
    std::vector<Edge> universe;
    std::vector<Edge> edges;
    universe.reserve(cfg.n_states * (cfg.n_states - 1));
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng(derive_seed(cfg.seed, streams::kPmf, i));
      fill_universe(cfg.n_states, universe);
      choose_edges(universe, cfg.n_transitions, rng, edges);
      ++local[count_reachable(cfg.n_states, edges, 0)];
    }
    std::lock_guard lock(merge);
    for (std::size_t k = 0; k < local.size(); ++k) pmf.counts[k] += local[k];
  });
  return pmf;
}

double cdf(const ReachabilityPMF& pmf, std::size_t k) {
  if (pmf.config.n_samples == 0) return 0.0;
  if (k >= pmf.config.n_states) return 1.0;
  std::uint64_t below = 0;
  for (std::size_t j = 0; j <= k && j < pmf.counts.size(); ++j) below += pmf.counts[j];
  return static_cast<double>(below) / static_cast<double>(pmf.config.n_samples);
}

std::size_t sample_from(const ReachabilityPMF& pmf, Rng& rng) {
  if (pmf.config.n_samples == 0) throw std::invalid_argument("empty distribution");
  std::uniform_int_distribution<std::uint64_t> pick(0, pmf.config.n_samples - 1);
  auto r = pick(rng);
  for (std::size_t k = 0; k < pmf.counts.size(); ++k) {
    if (r < pmf.counts[k]) return k;
    r -= pmf.counts[k];
  }
  return pmf.config.n_states;
}

std::string pmf_to_json(const ReachabilityPMF& pmf) {
  nlohmann::ordered_json j;
  j["n_states"] = pmf.config.n_states;
  j["n_transitions"] = pmf.config.n_transitions;
  j["n_samples"] = pmf.config.n_samples;
  j["seed"] = pmf.config.seed;
  // Index i holds reachable count k = i + 1.
  j["histogram"] = std::vector<std::uint64_t>(pmf.counts.begin() + 1, pmf.counts.end());
  std::vector<double> probs;
  std::vector<double> cumulative;
  for (std::size_t k = 1; k <= pmf.config.n_states; ++k) {
    probs.push_back(pmf.probability(k));
    cumulative.push_back(cdf(pmf, k));
  }
  j["pmf"] = probs;
  j["cdf"] = cumulative;
  j["mean"] = pmf.mean();
  return j.dump() + "\n";
}

std::string pmf_to_chart(const ReachabilityPMF& pmf, std::size_t width) {
  std::uint64_t peak = 1;
  for (std::size_t k = 1; k < pmf.counts.size(); ++k) peak = std::max(peak, pmf.counts[k]);

  std::string out;
  char buf[64];
  for (std::size_t k = 1; k < pmf.counts.size(); ++k) {
    const auto bar = static_cast<std::size_t>(
        static_cast<double>(pmf.counts[k]) / static_cast<double>(peak) *
            static_cast<double>(width) +
        0.5);
    std::snprintf(buf, sizeof buf, "%3zu %7.4f |", k, pmf.probability(k));
    out += buf;
    out.append(bar, '#');
    out += '\n';
  }
  return out;
}

}  // namespace sdc
