#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectraux/auction.hpp"
#include "spectraux/model.hpp"
#include "spectraux/vcg.hpp"

namespace spectraux {

// Knobs for random instance generation.
struct GenParams {
  int n_operators = 3;
  // One entry per operator, or a single entry broadcast to all.
  std::vector<std::int32_t> stations_per_operator = {3};
  double region_side = 1000.0;
  double radius_d = 300.0;
  Money bid_max = 100;
  std::uint64_t seed = 1;
};

// Uniform placements over the square, valuations uniform in [1, bid_max]
// (all zero when bid_max == 0). Deterministic: SplitMix64 seeded with
// params.seed, positions drawn first (x then y, global station order),
// then valuations in the same order.
Scenario generate(const GenParams& params);

// Resolved per-operator counts (broadcast applied). Throws on bad shapes.
std::vector<std::int32_t> resolve_station_counts(const GenParams& params);

// Raised for any malformed input file: unreadable, bad JSON, wrong schema,
// shape violations. The message carries the file name plus the parser's
// line/column or the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All files are canonical JSON: keys sorted, two-space indent, one trailing
// newline. Re-saving a loaded file is byte-identical.
void save_scenario(const Scenario& scenario, const std::filesystem::path& file);
Scenario load_scenario(const std::filesystem::path& file);
std::string scenario_to_string(const Scenario& scenario);

void save_bid_profile(const BidProfile& bids, const std::filesystem::path& file);
BidProfile load_bid_profile(const std::filesystem::path& file);

void save_auction_result(const AuctionResult& result, const std::filesystem::path& file);
AuctionResult load_auction_result(const std::filesystem::path& file);

void save_vcg_result(const VcgResult& result, const std::filesystem::path& file);
VcgResult load_vcg_result(const std::filesystem::path& file);

}  // namespace spectraux
