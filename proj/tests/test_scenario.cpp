#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixture.hpp"
#include "oracles.hpp"
#include "spectraux/auction.hpp"
#include "spectraux/graph.hpp"
#include "spectraux/scenario.hpp"
#include "spectraux/vcg.hpp"

using namespace spectraux;
using namespace spectraux::testing;

namespace {

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "spectraux_scenario_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("generation is deterministic per seed") {
  GenParams p;
  p.seed = 7;
  const Scenario a = generate(p);
  const Scenario b = generate(p);
  CHECK(a == b);
  CHECK(scenario_to_string(a) == scenario_to_string(b));

  p.seed = 8;
  CHECK(!(a == generate(p)));
}

TEST_CASE("zero radius yields an edgeless graph") {
  GenParams p;
  p.radius_d = 0.0;
  p.seed = 11;
  CHECK(build_conflict_graph(generate(p)).edge_count() == 0);
}

TEST_CASE("per-operator station lists and broadcast") {
  GenParams p;
  p.n_operators = 3;
  p.stations_per_operator = {1, 2, 3};
  const Scenario scn = generate(p);
  CHECK(scn.stations_per_operator == std::vector<std::int32_t>{1, 2, 3});
  CHECK(scn.station_count() == 6);

  p.stations_per_operator = {2};
  CHECK(generate(p).station_count() == 6);

  p.stations_per_operator = {1, 2};
  CHECK_THROWS_AS(generate(p), std::invalid_argument);
  p.stations_per_operator = {0};
  CHECK_THROWS_AS(generate(p), std::invalid_argument);
  p.n_operators = 0;
  CHECK_THROWS_AS(generate(p), std::invalid_argument);
}

TEST_CASE("scenario files round-trip and re-save canonically") {
  const auto dir = scratch_dir();

  SUBCASE("golden fixture") {
    const Scenario scn = golden_scenario();
    const auto file = dir / "golden.scn.json";
    save_scenario(scn, file);
    CHECK(load_scenario(file) == scn);
    const std::string first = slurp(file);
    save_scenario(load_scenario(file), file);
    CHECK(slurp(file) == first);
  }

  SUBCASE("random scenarios") {
    SplitMix64 rng(0x5C0);
    for (int round = 0; round < 10; ++round) {
      const Scenario scn = generate(random_params(rng));
      const auto file = dir / "random.scn.json";
      save_scenario(scn, file);
      CHECK(load_scenario(file) == scn);
      const std::string first = slurp(file);
      save_scenario(load_scenario(file), file);
      CHECK(slurp(file) == first);
    }
  }
}

TEST_CASE("malformed scenario files raise ParseError") {
  const auto dir = scratch_dir();
  const auto file = dir / "broken.scn.json";

  SUBCASE("missing file") { CHECK_THROWS_AS(load_scenario(dir / "nope.scn.json"), ParseError); }

  SUBCASE("truncated json") {
    const Scenario scn = golden_scenario();
    const std::string full = scenario_to_string(scn);
    std::ofstream(file, std::ios::binary) << full.substr(0, full.size() / 2);
    CHECK_THROWS_AS(load_scenario(file), ParseError);
  }

  SUBCASE("wrong schema") {
    std::ofstream(file, std::ios::binary)
        << R"({"schema": 99, "operators": [1], "stations": [{"owner":0,"x":0.0,"y":0.0}], )"
        << R"("truths": [[1]], "d": 1.0, "side": 10.0, "seed": 1})";
    CHECK_THROWS_AS(load_scenario(file), ParseError);
  }

  SUBCASE("missing field") {
    std::ofstream(file, std::ios::binary) << R"({"schema": 1, "operators": [1]})";
    CHECK_THROWS_AS(load_scenario(file), ParseError);
  }

  SUBCASE("shape violation") {
    std::ofstream(file, std::ios::binary)
        << R"({"schema": 1, "operators": [2], "stations": [{"owner":0,"x":0.0,"y":0.0}], )"
        << R"("truths": [[1, 1]], "d": 1.0, "side": 10.0, "seed": 1})";
    CHECK_THROWS_AS(load_scenario(file), ParseError);
  }
}

TEST_CASE("hand-written minimal scenario loads and runs") {
  const auto file = std::filesystem::path(FIXTURE_DIR) / "minimal.scn.json";
  const Scenario scn = load_scenario(file);
  CHECK(scn.operator_count() == 1);
  CHECK(scn.station_count() == 1);

  const ConflictGraph g = build_conflict_graph(scn);
  const AuctionResult result = settle_utilities(run_auction(g, truthful_bids(scn)), scn.truths);
  CHECK(result.allocation[0] == std::vector<std::uint8_t>{1});
  CHECK(result.payments[0] == 0);
  CHECK(result.utilities[0] == 42);
}

TEST_CASE("committed golden fixture file matches the in-code scenario") {
  const auto file = std::filesystem::path(FIXTURE_DIR) / "golden.scn.json";
  CHECK(load_scenario(file) == golden_scenario());
  CHECK(slurp(file) == scenario_to_string(golden_scenario()));
}

TEST_CASE("bid profiles round-trip") {
  const auto dir = scratch_dir();
  const auto file = dir / "bids.json";
  const BidProfile bids = golden_bids();
  save_bid_profile(bids, file);
  CHECK(load_bid_profile(file) == bids);

  std::ofstream(file, std::ios::binary) << R"({"schema": 1, "bids": [[-1]]})";
  CHECK_THROWS_AS(load_bid_profile(file), ParseError);
}

TEST_CASE("auction and vcg results round-trip") {
  const auto dir = scratch_dir();
  const ConflictGraph g = golden_graph();
  const Scenario scn = golden_scenario();

  const AuctionResult auction = settle_utilities(run_auction(g, golden_bids()), scn.truths);
  const auto afile = dir / "greedy.result.json";
  save_auction_result(auction, afile);
  CHECK(load_auction_result(afile) == auction);
  const std::string first = slurp(afile);
  save_auction_result(load_auction_result(afile), afile);
  CHECK(slurp(afile) == first);

  const VcgResult vcg = vcg_auction(g, golden_bids());
  const auto vfile = dir / "vcg.result.json";
  save_vcg_result(vcg, vfile);
  CHECK(load_vcg_result(vfile) == vcg);

  CHECK_THROWS_AS(load_vcg_result(afile), ParseError);     // mechanism mismatch
  CHECK_THROWS_AS(load_auction_result(vfile), ParseError);
}
