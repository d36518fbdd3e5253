#include "spectraux/model.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace spectraux {

namespace {

Money sum_over(std::span<const Money> values, std::span<const std::int32_t> active) {
  Money total = 0;
  for (const auto j : active) {
    assert(j >= 0 && static_cast<std::size_t>(j) < values.size());
    total += values[static_cast<std::size_t>(j)];
  }
  return total;
}

std::vector<std::int32_t> to_vector(const std::set<std::int32_t>& active) {
  return {active.begin(), active.end()};
}

}  // namespace

void validate_scenario(const Scenario& scenario) {
  const auto fail = [](const std::string& what) { throw std::invalid_argument("scenario: " + what); };

  const int n = scenario.operator_count();
  if (n < 1) fail("needs at least one operator");
  if (scenario.interference_radius_d < 0) fail("interference radius must be >= 0");
  if (scenario.region_side < 0) fail("region side must be >= 0");

  std::size_t total = 0;
  for (int i = 0; i < n; ++i) {
    const auto m_i = scenario.stations_per_operator[static_cast<std::size_t>(i)];
    if (m_i < 0) fail("station count of operator " + std::to_string(i) + " is negative");
    total += static_cast<std::size_t>(m_i);
  }
  if (scenario.stations.size() != total) fail("station list does not match per-operator counts");

  std::size_t s = 0;
  for (int i = 0; i < n; ++i) {
    const auto m_i = scenario.stations_per_operator[static_cast<std::size_t>(i)];
    for (std::int32_t j = 0; j < m_i; ++j, ++s) {
      const BaseStation& st = scenario.stations[s];
      if (st.owner.index != i || st.local_index != j)
        fail("stations must be grouped by owner with dense local indices (station " +
             std::to_string(s) + ")");
      if (!(st.x >= 0 && st.x <= scenario.region_side && st.y >= 0 &&
            st.y <= scenario.region_side))
        fail("station " + std::to_string(s) + " lies outside the region");
    }
  }

  if (scenario.truths.size() != static_cast<std::size_t>(n)) fail("one truth vector per operator required");
  for (int i = 0; i < n; ++i) {
    const ValuationVector& v = scenario.truths[static_cast<std::size_t>(i)];
    if (v.owner.index != i) fail("truth vector " + std::to_string(i) + " has wrong owner");
    if (v.values.size() !=
        static_cast<std::size_t>(scenario.stations_per_operator[static_cast<std::size_t>(i)]))
      fail("truth vector " + std::to_string(i) + " has wrong length");
    for (const Money x : v.values)
      if (x < 0) fail("valuations must be non-negative");
  }
}

BidProfile truthful_bids(const Scenario& scenario) {
  BidProfile bids;
  bids.reserve(scenario.truths.size());
  for (const ValuationVector& v : scenario.truths) bids.push_back({v.owner, v.values});
  return bids;
}

Money operator_bid_sum(const BidVector& bids, std::span<const std::int32_t> active) {
  return sum_over(bids.bids, active);
}

Money operator_bid_sum(const BidVector& bids, const std::set<std::int32_t>& active) {
  return operator_bid_sum(bids, to_vector(active));
}

Money operator_true_sum(const ValuationVector& truths, std::span<const std::int32_t> active) {
  return sum_over(truths.values, active);
}

Money operator_true_sum(const ValuationVector& truths, const std::set<std::int32_t>& active) {
  return operator_true_sum(truths, to_vector(active));
}

}  // namespace spectraux
