#include "spectraux/auction.hpp"

#include <stdexcept>
#include <string>

namespace spectraux {

namespace {

void check_profile_shape(const ConflictGraph& graph, const BidProfile& bids) {
  if (bids.size() != static_cast<std::size_t>(graph.operator_count()))
    throw std::invalid_argument("bid profile: expected one bid vector per operator");
  for (int i = 0; i < graph.operator_count(); ++i) {
    const BidVector& b = bids[static_cast<std::size_t>(i)];
    if (b.owner.index != i)
      throw std::invalid_argument("bid profile: vector " + std::to_string(i) + " has wrong owner");
    const auto [first, last] = graph.station_range(OperatorId{i});
    if (b.bids.size() != static_cast<std::size_t>(last - first))
      throw std::invalid_argument("bid profile: vector " + std::to_string(i) + " has wrong length");
    for (const Money x : b.bids)
      if (x < 0) throw std::invalid_argument("bid profile: bids must be non-negative");
  }
}

}  // namespace

std::pair<std::optional<OperatorId>, Money> critical_operator(const ResidualView& view,
                                                              const BidProfile& bids,
                                                              OperatorId op) {
  const auto neighborhood = neighborhood_of_operator(view, op);
  if (neighborhood.empty()) return {std::nullopt, 0};

  const ConflictGraph& g = *view.base;
  std::vector<Money> mass(static_cast<std::size_t>(g.operator_count()), 0);
  std::vector<std::uint8_t> present(static_cast<std::size_t>(g.operator_count()), 0);
  for (const StationId s : neighborhood) {
    const auto k = static_cast<std::size_t>(g.owner(s).index);
    mass[k] += bids[k].bids[static_cast<std::size_t>(g.local_index(s))];
    present[k] = 1;
  }

  std::optional<OperatorId> critical;
  Money best = 0;
  for (int k = 0; k < g.operator_count(); ++k) {
    if (!present[static_cast<std::size_t>(k)]) continue;
    if (!critical || mass[static_cast<std::size_t>(k)] > best) {
      critical = OperatorId{k};
      best = mass[static_cast<std::size_t>(k)];
    }
  }
  return {critical, best};
}

AuctionResult run_auction(const ConflictGraph& graph, const BidProfile& bids) {
  check_profile_shape(graph, bids);

  const int n = graph.operator_count();
  AuctionResult result;
  result.allocation.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto [first, last] = graph.station_range(OperatorId{i});
    result.allocation[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(last - first), 0);
  }
  result.payments.assign(static_cast<std::size_t>(n), 0);
  result.utilities.assign(static_cast<std::size_t>(n), 0);

  ResidualView view(graph);
  int round = 0;
  while (!view.empty()) {
    // Winner: largest alive bid mass, ties to the lowest operator id.
    std::optional<OperatorId> winner;
    Money best_score = 0;
    for (int i = 0; i < n; ++i) {
      Money score = 0;
      bool any_alive = false;
      const auto [first, last] = graph.station_range(OperatorId{i});
      for (StationId s = first; s < last; ++s) {
        if (!view.is_alive(s)) continue;
        any_alive = true;
        score += bids[static_cast<std::size_t>(i)].bids[static_cast<std::size_t>(s - first)];
      }
      if (!any_alive) continue;
      if (!winner || score > best_score) {
        winner = OperatorId{i};
        best_score = score;
      }
    }

    const auto [critical, price] = critical_operator(view, bids, *winner);
    const auto won = view.alive_stations_of(*winner);
    for (const StationId s : won)
      result.allocation[static_cast<std::size_t>(winner->index)]
                       [static_cast<std::size_t>(graph.local_index(s))] = 1;
    result.payments[static_cast<std::size_t>(winner->index)] = price;
    result.rounds.push_back({round, *winner, best_score, won, critical, price});

    view = remove_closed_neighborhood(std::move(view), *winner);
    ++round;
  }
  return result;
}

AuctionResult settle_utilities(AuctionResult result, const std::vector<ValuationVector>& truths) {
  if (truths.size() != result.allocation.size())
    throw std::invalid_argument("settle: one valuation vector per operator required");
  for (std::size_t i = 0; i < truths.size(); ++i) {
    const auto& alloc = result.allocation[i];
    if (truths[i].values.size() != alloc.size())
      throw std::invalid_argument("settle: valuation vector " + std::to_string(i) +
                                  " has wrong length");
    Money value = 0;
    bool holds_any = false;
    for (std::size_t j = 0; j < alloc.size(); ++j) {
      if (alloc[j]) {
        holds_any = true;
        value += truths[i].values[j];
      }
    }
    result.utilities[i] = holds_any ? value - result.payments[i] : 0;
  }
  return result;
}

}  // namespace spectraux
