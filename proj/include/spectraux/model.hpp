#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace spectraux {

// Currency is integral so every utility comparison in the deviation harness
// is exact at equality boundaries. Interpret as milli-dollars if desired.
using Money = std::int64_t;

// Global station id: dense 0..m-1, ordered by (operator index, local index).
using StationId = std::int32_t;

struct OperatorId {
  std::int32_t index = -1;
  friend constexpr auto operator<=>(OperatorId, OperatorId) = default;
};

struct BaseStation {
  OperatorId owner;
  std::int32_t local_index = 0;
  double x = 0.0;  // meters
  double y = 0.0;  // meters
  friend bool operator==(const BaseStation&, const BaseStation&) = default;
};

// Declared bids b_ij of one operator, indexed by local station index.
struct BidVector {
  OperatorId owner;
  std::vector<Money> bids;
  friend bool operator==(const BidVector&, const BidVector&) = default;
};

// Private valuations v_ij, same shape as BidVector.
struct ValuationVector {
  OperatorId owner;
  std::vector<Money> values;
  friend bool operator==(const ValuationVector&, const ValuationVector&) = default;
};

// One BidVector per operator, indexed by operator id.
using BidProfile = std::vector<BidVector>;

// Ground truth of one experiment: who owns which stations, where they sit,
// what the channel is worth to each of them, and the interference radius.
struct Scenario {
  std::vector<std::int32_t> stations_per_operator;  // m_i
  std::vector<BaseStation> stations;                // grouped by owner, local order
  std::vector<ValuationVector> truths;              // one per operator
  double interference_radius_d = 0.0;
  double region_side = 0.0;
  std::uint64_t seed = 0;

  int operator_count() const { return static_cast<int>(stations_per_operator.size()); }
  int station_count() const { return static_cast<int>(stations.size()); }
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Throws std::invalid_argument when a shape invariant is broken: counts vs
// station list, (owner, local_index) grouping, truth vector shapes,
// non-negative valuations, positions inside [0, side]^2.
void validate_scenario(const Scenario& scenario);

// Bid profile equal to the true valuations.
BidProfile truthful_bids(const Scenario& scenario);

// Sum of bids over the chosen local indices. With every index active this is
// the operator's full bid valuation; with a residual subset it is the
// operator's live bid mass. Indices must lie in [0, m_i).
Money operator_bid_sum(const BidVector& bids, std::span<const std::int32_t> active);
Money operator_bid_sum(const BidVector& bids, const std::set<std::int32_t>& active);

// Same over true valuations.
Money operator_true_sum(const ValuationVector& truths, std::span<const std::int32_t> active);
Money operator_true_sum(const ValuationVector& truths, const std::set<std::int32_t>& active);

}  // namespace spectraux
