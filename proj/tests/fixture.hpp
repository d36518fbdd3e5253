#pragma once

// The worked three-operator example used across the test suites. Operators
// A=0, B=1, C=2 with three stations each; global ids A1..A3 = 0..2,
// B1..B3 = 3..5, C1..C3 = 6..8. The geometric scenario realizes exactly the
// six conflict edges at radius d=100 (all intended pairs sit 80 m apart,
// everything else at 160 m or more).

#include <utility>
#include <vector>

#include "spectraux/graph.hpp"
#include "spectraux/model.hpp"

namespace spectraux::testing {

inline const std::vector<std::pair<StationId, StationId>> kGoldenEdges = {
    {0, 3},  // A1-B1
    {1, 4},  // A2-B2
    {2, 3},  // A3-B1
    {0, 6},  // A1-C1
    {1, 7},  // A2-C2
    {5, 8},  // B3-C3
};

inline Scenario golden_scenario() {
  Scenario scn;
  scn.stations_per_operator = {3, 3, 3};
  scn.stations = {
      {OperatorId{0}, 0, 100.0, 0.0},   // A1
      {OperatorId{0}, 1, 1100.0, 0.0},  // A2
      {OperatorId{0}, 2, 180.0, 80.0},  // A3
      {OperatorId{1}, 0, 180.0, 0.0},   // B1
      {OperatorId{1}, 1, 1180.0, 0.0},  // B2
      {OperatorId{1}, 2, 2100.0, 0.0},  // B3
      {OperatorId{2}, 0, 20.0, 0.0},    // C1
      {OperatorId{2}, 1, 1020.0, 0.0},  // C2
      {OperatorId{2}, 2, 2180.0, 0.0},  // C3
  };
  scn.truths = {
      {OperatorId{0}, {10, 8, 7}},
      {OperatorId{1}, {9, 8, 5}},
      {OperatorId{2}, {10, 8, 3}},
  };
  scn.interference_radius_d = 100.0;
  scn.region_side = 2200.0;
  scn.seed = 0;
  return scn;
}

inline ConflictGraph golden_graph() { return {{3, 3, 3}, kGoldenEdges}; }

inline BidProfile golden_bids() {
  return {
      {OperatorId{0}, {10, 8, 7}},
      {OperatorId{1}, {9, 8, 5}},
      {OperatorId{2}, {10, 8, 3}},
  };
}

}  // namespace spectraux::testing
