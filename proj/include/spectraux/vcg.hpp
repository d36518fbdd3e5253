#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "spectraux/graph.hpp"
#include "spectraux/model.hpp"

namespace spectraux {

// Exact search refuses instances above this station count unless overridden.
inline constexpr int kDefaultVcgCap = 25;

// Hard ceiling: the solver tracks vertex sets in a 64-bit mask.
inline constexpr int kMaxExactStations = 62;

class InstanceTooLargeError : public std::runtime_error {
 public:
  InstanceTooLargeError(int stations, int cap);
  int stations() const { return stations_; }
  int cap() const { return cap_; }

 private:
  int stations_;
  int cap_;
};

struct MwisResult {
  std::vector<StationId> stations;  // sorted; lexicographically smallest optimum
  Money weight = 0;
  std::uint64_t explored = 0;  // branch-and-bound nodes visited
  friend bool operator==(const MwisResult&, const MwisResult&) = default;
};

// Exact maximum-weight independent set by branch and bound: branch on the
// highest-degree alive vertex, bound by the sum of remaining alive weights.
// Among equal-weight optima the lexicographically smallest station-id set is
// returned. Throws InstanceTooLargeError when station_count() > cap and
// std::invalid_argument on negative weights or shape mismatch.
MwisResult max_weight_independent_set(const ConflictGraph& graph,
                                      std::span<const Money> weights,
                                      int cap = kDefaultVcgCap);

struct VcgResult {
  std::vector<std::vector<std::uint8_t>> allocation;  // X_i per operator
  std::vector<Money> payments;                        // Clarke pivot, >= 0
  Money optimal_welfare = 0;
  std::uint64_t explored_count = 0;  // nodes across winner determination + pricing
  friend bool operator==(const VcgResult&, const VcgResult&) = default;
};

// Optimal allocation plus pivot payments: each operator pays the welfare the
// others lose because its stations participate, p_i = W(-i) - (W* - w_i).
VcgResult vcg_auction(const ConflictGraph& graph, const BidProfile& bids,
                      int cap = kDefaultVcgCap);

}  // namespace spectraux
