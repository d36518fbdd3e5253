#include "spectraux/vcg.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace spectraux {

InstanceTooLargeError::InstanceTooLargeError(int stations, int cap)
    : std::runtime_error("exact search refused: " + std::to_string(stations) +
                         " stations exceed the cap of " + std::to_string(cap)),
      stations_(stations),
      cap_(cap) {}

namespace {

struct ExactSearch {
  std::span<const Money> weights;
  std::vector<std::uint64_t> adj_mask;
  std::uint64_t explored = 0;
  Money best_weight = -1;
  std::vector<StationId> best_set;
  std::vector<StationId> current;

  Money mask_weight(std::uint64_t mask) const {
    Money total = 0;
    while (mask) {
      const int s = std::countr_zero(mask);
      total += weights[static_cast<std::size_t>(s)];
      mask &= mask - 1;
    }
    return total;
  }

  void consider_current(Money weight) {
    std::vector<StationId> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    if (weight > best_weight ||
        (weight == best_weight &&
         std::lexicographical_compare(sorted.begin(), sorted.end(), best_set.begin(),
                                      best_set.end()))) {
      best_weight = weight;
      best_set = std::move(sorted);
    }
  }

  // Branch on the alive vertex with the most alive neighbors; bound by the
  // weight still reachable. Equal-bound paths are not pruned so that every
  // maximum-weight set is seen and the lexicographic tie-break is exact.
  void search(std::uint64_t alive, Money current_weight, Money remaining_weight) {
    ++explored;
    if (current_weight + remaining_weight < best_weight) return;
    if (alive == 0) {
      consider_current(current_weight);
      return;
    }

    int pick = -1;
    int best_degree = -1;
    for (std::uint64_t rest = alive; rest;) {
      const int s = std::countr_zero(rest);
      rest &= rest - 1;
      const int degree = std::popcount(adj_mask[static_cast<std::size_t>(s)] & alive);
      if (degree > best_degree) {
        best_degree = degree;
        pick = s;
      }
    }

    const std::uint64_t pick_bit = 1ULL << pick;
    const std::uint64_t after_include = alive & ~adj_mask[static_cast<std::size_t>(pick)] & ~pick_bit;
    current.push_back(pick);
    search(after_include, current_weight + weights[static_cast<std::size_t>(pick)],
           mask_weight(after_include));
    current.pop_back();

    search(alive & ~pick_bit, current_weight,
           remaining_weight - weights[static_cast<std::size_t>(pick)]);
  }
};

MwisResult solve_masked(const ConflictGraph& graph, std::span<const Money> weights,
                        std::uint64_t alive) {
  ExactSearch search;
  search.weights = weights;
  search.adj_mask.assign(static_cast<std::size_t>(graph.station_count()), 0);
  for (StationId s = 0; s < graph.station_count(); ++s)
    for (const StationId nb : graph.neighbors(s))
      search.adj_mask[static_cast<std::size_t>(s)] |= 1ULL << nb;

  search.search(alive, 0, search.mask_weight(alive));
  return {std::move(search.best_set), search.best_weight, search.explored};
}

void check_inputs(const ConflictGraph& graph, std::span<const Money> weights, int cap) {
  if (cap > kMaxExactStations)
    throw std::invalid_argument("exact search cap cannot exceed " +
                                std::to_string(kMaxExactStations));
  if (graph.station_count() > cap) throw InstanceTooLargeError(graph.station_count(), cap);
  if (weights.size() != static_cast<std::size_t>(graph.station_count()))
    throw std::invalid_argument("weights: one entry per station required");
  for (const Money w : weights)
    if (w < 0) throw std::invalid_argument("weights must be non-negative");
}

std::uint64_t full_mask(int m) { return m == 0 ? 0 : (~0ULL >> (64 - m)); }

}  // namespace

MwisResult max_weight_independent_set(const ConflictGraph& graph, std::span<const Money> weights,
                                      int cap) {
  check_inputs(graph, weights, cap);
  return solve_masked(graph, weights, full_mask(graph.station_count()));
}

VcgResult vcg_auction(const ConflictGraph& graph, const BidProfile& bids, int cap) {
  const int n = graph.operator_count();
  const int m = graph.station_count();

  std::vector<Money> weights(static_cast<std::size_t>(m), 0);
  if (bids.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("bid profile: expected one bid vector per operator");
  for (int i = 0; i < n; ++i) {
    const auto [first, last] = graph.station_range(OperatorId{i});
    if (bids[static_cast<std::size_t>(i)].bids.size() != static_cast<std::size_t>(last - first))
      throw std::invalid_argument("bid profile: vector " + std::to_string(i) + " has wrong length");
    for (StationId s = first; s < last; ++s)
      weights[static_cast<std::size_t>(s)] =
          bids[static_cast<std::size_t>(i)].bids[static_cast<std::size_t>(s - first)];
  }
  check_inputs(graph, weights, cap);

  const MwisResult optimum = solve_masked(graph, weights, full_mask(m));

  VcgResult result;
  result.optimal_welfare = optimum.weight;
  result.explored_count = optimum.explored;
  result.allocation.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto [first, last] = graph.station_range(OperatorId{i});
    result.allocation[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(last - first), 0);
  }
  std::vector<Money> allocated_value(static_cast<std::size_t>(n), 0);
  for (const StationId s : optimum.stations) {
    const auto i = static_cast<std::size_t>(graph.owner(s).index);
    result.allocation[i][static_cast<std::size_t>(graph.local_index(s))] = 1;
    allocated_value[i] += weights[static_cast<std::size_t>(s)];
  }

  result.payments.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Money w_i = allocated_value[static_cast<std::size_t>(i)];
    if (w_i == 0) continue;  // no externality imposed, and W(-i) == W*
    std::uint64_t without = full_mask(m);
    const auto [first, last] = graph.station_range(OperatorId{i});
    for (StationId s = first; s < last; ++s) without &= ~(1ULL << s);
    const MwisResult rivals_only = solve_masked(graph, weights, without);
    result.explored_count += rivals_only.explored;
    result.payments[static_cast<std::size_t>(i)] = rivals_only.weight - (optimum.weight - w_i);
  }
  return result;
}

}  // namespace spectraux
