#include <set>

#include "doctest.h"
#include "spectraux/model.hpp"
#include "spectraux/rng.hpp"

using namespace spectraux;

TEST_CASE("operator_bid_sum over subsets") {
  const BidVector a{OperatorId{0}, {10, 8, 7}};
  CHECK(operator_bid_sum(a, std::set<std::int32_t>{0, 1, 2}) == 25);

  const BidVector b{OperatorId{1}, {9, 8, 5}};
  CHECK(operator_bid_sum(b, std::set<std::int32_t>{}) == 0);
  CHECK(operator_bid_sum(b, std::set<std::int32_t>{2}) == 5);
}

TEST_CASE("operator_true_sum over subsets") {
  const ValuationVector b{OperatorId{1}, {9, 8, 5}};
  CHECK(operator_true_sum(b, std::set<std::int32_t>{0, 1, 2}) == 22);
  CHECK(operator_true_sum(b, std::set<std::int32_t>{2}) == 5);

  const ValuationVector z{OperatorId{0}, {0, 0}};
  CHECK(operator_true_sum(z, std::set<std::int32_t>{0, 1}) == 0);
}

TEST_CASE("bid sums are monotone in the active set") {
  SplitMix64 rng(0xB1D5);
  for (int round = 0; round < 200; ++round) {
    const int m = static_cast<int>(rng.next_in(1, 8));
    BidVector bids{OperatorId{0}, {}};
    for (int j = 0; j < m; ++j) bids.bids.push_back(rng.next_in(0, 50));

    std::set<std::int32_t> small, large;
    for (std::int32_t j = 0; j < m; ++j) {
      const auto coin = rng.next_in(0, 2);
      if (coin >= 1) large.insert(j);
      if (coin == 2) small.insert(j);  // small is always a subset of large
    }
    CHECK(operator_bid_sum(bids, small) <= operator_bid_sum(bids, large));
  }
}

TEST_CASE("scenario validation rejects malformed shapes") {
  Scenario scn;
  scn.stations_per_operator = {1};
  scn.stations = {{OperatorId{0}, 0, 10.0, 10.0}};
  scn.truths = {{OperatorId{0}, {5}}};
  scn.interference_radius_d = 1.0;
  scn.region_side = 100.0;
  CHECK_NOTHROW(validate_scenario(scn));

  Scenario bad_count = scn;
  bad_count.stations_per_operator = {2};
  CHECK_THROWS_AS(validate_scenario(bad_count), std::invalid_argument);

  Scenario bad_truth = scn;
  bad_truth.truths[0].values = {5, 6};
  CHECK_THROWS_AS(validate_scenario(bad_truth), std::invalid_argument);

  Scenario outside = scn;
  outside.stations[0].x = 101.0;
  CHECK_THROWS_AS(validate_scenario(outside), std::invalid_argument);

  Scenario negative = scn;
  negative.truths[0].values = {-1};
  CHECK_THROWS_AS(validate_scenario(negative), std::invalid_argument);
}
