#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spectraux/graph.hpp"
#include "spectraux/model.hpp"

namespace spectraux {

// One iteration of the greedy winner-determination loop.
struct RoundRecord {
  int round_index = 0;
  OperatorId winner;
  Money winner_residual_score = 0;               // bid mass of the winner's alive stations
  std::vector<StationId> allocated_stations;     // sorted global ids
  std::optional<OperatorId> critical_op;         // empty when the winner had no neighbors
  Money price = 0;
  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct AuctionResult {
  std::vector<std::vector<std::uint8_t>> allocation;  // X_i per operator, 0/1 by local index
  std::vector<Money> payments;                        // p_i, zero for non-winners
  std::vector<Money> utilities;                       // filled by settle_utilities
  std::vector<RoundRecord> rounds;
  friend bool operator==(const AuctionResult&, const AuctionResult&) = default;
};

// Critical operator of `op` in the residual graph: the rival whose alive
// stations adjacent to op's alive stations carry the largest bid mass.
// Returns that rival and the mass; ({}, 0) when op has no alive neighbors.
// Ties resolve to the lowest rival id.
std::pair<std::optional<OperatorId>, Money> critical_operator(
    const ResidualView& view, const BidProfile& bids, OperatorId op);

// Iterative greedy auction: each round the operator with the largest alive
// bid mass wins its alive stations, pays its critical operator's mass, and
// its closed neighborhood leaves the graph. Ties on the winning score go to
// the lowest operator id. Utilities are left at zero; settle them against
// true valuations afterwards. Throws std::invalid_argument on bid profiles
// whose shape does not match the graph.
AuctionResult run_auction(const ConflictGraph& graph, const BidProfile& bids);

// U_i = (true value of i's allocated stations) - p_i for operators holding
// at least one station; exactly zero for the rest.
AuctionResult settle_utilities(AuctionResult result,
                               const std::vector<ValuationVector>& truths);

}  // namespace spectraux
