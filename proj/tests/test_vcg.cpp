#include <array>

#include "doctest.h"
#include "fixture.hpp"
#include "oracles.hpp"
#include "spectraux/auction.hpp"
#include "spectraux/metrics.hpp"
#include "spectraux/scenario.hpp"
#include "spectraux/vcg.hpp"

using namespace spectraux;
using namespace spectraux::testing;

TEST_CASE("two conflicting stations: heavier one wins") {
  const ConflictGraph g({1, 1}, {{0, 1}});
  const std::array<Money, 2> w{5, 3};
  const MwisResult r = max_weight_independent_set(g, w);
  CHECK(r.stations == std::vector<StationId>{0});
  CHECK(r.weight == 5);
}

TEST_CASE("edgeless graph takes every station") {
  const ConflictGraph g({2, 2}, {});
  const std::array<Money, 4> w{1, 2, 3, 4};
  const MwisResult r = max_weight_independent_set(g, w);
  CHECK(r.stations == std::vector<StationId>{0, 1, 2, 3});
  CHECK(r.weight == 10);
}

TEST_CASE("golden fixture: exact optimum beats the greedy outcome") {
  const ConflictGraph g = golden_graph();
  const BidProfile bids = golden_bids();
  const auto weights = station_weights(g, bids);

  const EnumeratedOptimum reference = enumerate_mwis(g, weights);
  CHECK(reference.weight == 40);
  CHECK(reference.stations == std::vector<StationId>{3, 4, 5, 6, 7});  // B1,B2,B3,C1,C2

  const MwisResult r = max_weight_independent_set(g, weights);
  CHECK(r.weight == reference.weight);
  CHECK(r.stations == reference.stations);

  const VcgResult vcg = vcg_auction(g, bids);
  CHECK(vcg.optimal_welfare == 40);
  const AuctionResult greedy = run_auction(g, bids);
  CHECK(social_welfare(greedy.allocation, bids) == 30);
}

TEST_CASE("clarke pivot in the two-bidder case") {
  const ConflictGraph g({1, 1}, {{0, 1}});
  const BidProfile bids{{OperatorId{0}, {5}}, {OperatorId{1}, {3}}};
  const VcgResult r = vcg_auction(g, bids);
  CHECK(r.allocation[0] == std::vector<std::uint8_t>{1});
  CHECK(r.allocation[1] == std::vector<std::uint8_t>{0});
  CHECK(r.payments == std::vector<Money>{3, 0});
  CHECK(r.optimal_welfare == 5);
}

TEST_CASE("single operator without conflicts pays nothing") {
  const ConflictGraph g({3}, {});
  const BidProfile bids{{OperatorId{0}, {4, 5, 6}}};
  const VcgResult r = vcg_auction(g, bids);
  CHECK(r.payments == std::vector<Money>{0});
  CHECK(r.optimal_welfare == 15);
}

TEST_CASE("instances above the cap are refused") {
  const ConflictGraph g({26}, {});
  const std::vector<Money> w(26, 1);
  CHECK_THROWS_AS(max_weight_independent_set(g, w), InstanceTooLargeError);
  CHECK_NOTHROW(max_weight_independent_set(g, w, 30));
  CHECK_THROWS_AS(max_weight_independent_set(g, w, 70), std::invalid_argument);

  const ConflictGraph small({2}, {});
  CHECK_THROWS_AS(max_weight_independent_set(small, std::vector<Money>{1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(max_weight_independent_set(small, std::vector<Money>{1, -1}),
                  std::invalid_argument);
}

TEST_CASE("all-zero weights resolve to the empty optimum") {
  const ConflictGraph g({1, 1}, {{0, 1}});
  const std::array<Money, 2> w{0, 0};
  const MwisResult r = max_weight_independent_set(g, w);
  CHECK(r.stations.empty());
  CHECK(r.weight == 0);
  CHECK(enumerate_mwis(g, w).stations.empty());
}

TEST_CASE("random instances: search matches enumeration, payments stay bounded") {
  SplitMix64 rng(0x7C6);
  int checked = 0;
  while (checked < 60) {
    const GenParams params = random_params(rng);
    const Scenario scn = generate(params);
    if (scn.station_count() > 12) continue;
    ++checked;

    const ConflictGraph g = build_conflict_graph(scn);
    const BidProfile bids = truthful_bids(scn);
    const auto weights = station_weights(g, bids);

    const EnumeratedOptimum reference = enumerate_mwis(g, weights);
    const MwisResult r = max_weight_independent_set(g, weights);
    CHECK(r.weight == reference.weight);
    CHECK(r.stations == reference.stations);

    const VcgResult vcg = vcg_auction(g, bids);
    CHECK(vcg.optimal_welfare == reference.weight);

    // Greedy is feasible, so it never beats the optimum.
    const AuctionResult greedy = run_auction(g, bids);
    CHECK(social_welfare(greedy.allocation, bids) <= vcg.optimal_welfare);

    for (int i = 0; i < g.operator_count(); ++i) {
      Money allocated_value = 0;
      const auto [first, last] = g.station_range(OperatorId{i});
      for (StationId s = first; s < last; ++s)
        if (vcg.allocation[static_cast<std::size_t>(i)][static_cast<std::size_t>(s - first)])
          allocated_value += weights[static_cast<std::size_t>(s)];
      CHECK(vcg.payments[static_cast<std::size_t>(i)] >= 0);
      CHECK(vcg.payments[static_cast<std::size_t>(i)] <= allocated_value);

      // Deleting an operator never improves the rivals-only optimum.
      std::vector<Money> masked = weights;
      for (StationId s = first; s < last; ++s) masked[static_cast<std::size_t>(s)] = 0;
      CHECK(enumerate_mwis(g, masked).weight <= reference.weight);
    }
  }
}
