#include "spectraux/properties.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "spectraux/auction.hpp"
#include "spectraux/parallel.hpp"
#include "spectraux/rng.hpp"

namespace spectraux {

using nlohmann::json;

const char* to_string(DeviationKind kind) {
  switch (kind) {
    case DeviationKind::kScaleUp: return "scale_up";
    case DeviationKind::kScaleDown: return "scale_down";
    case DeviationKind::kPerStation: return "per_station";
    case DeviationKind::kShiftUp: return "shift_up";
    case DeviationKind::kShiftDown: return "shift_down";
  }
  return "unknown";
}

namespace {

struct Factor {
  Money num;
  Money den;
};

// {0, 1/4, 1/2, 3/4} below truth, {5/4, 2, 4} above.
constexpr Factor kDownFactors[] = {{0, 1}, {1, 4}, {1, 2}, {3, 4}};
constexpr Factor kUpFactors[] = {{5, 4}, {2, 1}, {4, 1}};
constexpr Factor kAllFactors[] = {{0, 1}, {1, 4}, {1, 2}, {3, 4}, {5, 4}, {2, 1}, {4, 1}};

Money apply(Factor f, Money v) { return (v * f.num + f.den / 2) / f.den; }  // round half-up

std::vector<Money> sample_deviation(std::span<const Money> truth, Money bid_max,
                                    DeviationKind kind, SplitMix64& rng) {
  std::vector<Money> out(truth.begin(), truth.end());
  switch (kind) {
    case DeviationKind::kScaleUp: {
      const Factor f = kUpFactors[rng.next_in(0, 2)];
      for (Money& v : out) v = apply(f, v);
      break;
    }
    case DeviationKind::kScaleDown: {
      const Factor f = kDownFactors[rng.next_in(0, 3)];
      for (Money& v : out) v = apply(f, v);
      break;
    }
    case DeviationKind::kPerStation: {
      for (Money& v : out) v = apply(kAllFactors[rng.next_in(0, 6)], v);
      break;
    }
    case DeviationKind::kShiftUp: {
      const Money delta = rng.next_in(1, std::max<Money>(1, bid_max));
      for (Money& v : out) v += delta;
      break;
    }
    case DeviationKind::kShiftDown: {
      const Money delta = rng.next_in(1, std::max<Money>(1, bid_max));
      for (Money& v : out) v = std::max<Money>(0, v - delta);
      break;
    }
  }
  return out;
}

Money max_truth(const Scenario& scn) {
  Money best = 1;
  for (const ValuationVector& v : scn.truths)
    for (const Money x : v.values) best = std::max(best, x);
  return best;
}

bool holds_any(const std::vector<std::uint8_t>& x) {
  return std::any_of(x.begin(), x.end(), [](std::uint8_t b) { return b != 0; });
}

}  // namespace

DeviationReport evaluate_deviation(const ConflictGraph& graph, const Scenario& scenario,
                                   OperatorId op, std::vector<Money> deviated_bids,
                                   DeviationKind kind, int scenario_id) {
  const BidProfile truth = truthful_bids(scenario);
  const AuctionResult honest =
      settle_utilities(run_auction(graph, truth), scenario.truths);

  BidProfile deviated = truth;
  deviated[static_cast<std::size_t>(op.index)].bids = deviated_bids;
  const AuctionResult shaded =
      settle_utilities(run_auction(graph, deviated), scenario.truths);

  DeviationReport report;
  report.scenario_id = scenario_id;
  report.op = op;
  report.kind = kind;
  report.deviated_bids = std::move(deviated_bids);
  report.truthful_utility = honest.utilities[static_cast<std::size_t>(op.index)];
  report.deviated_utility = shaded.utilities[static_cast<std::size_t>(op.index)];
  report.profitable = report.deviated_utility > report.truthful_utility;
  return report;
}

std::vector<DeviationReport> attack_scenario(const Scenario& scenario,
                                             int deviations_per_operator, std::uint64_t seed,
                                             int scenario_id) {
  if (deviations_per_operator < 1)
    throw std::invalid_argument("attack: deviations per operator must be >= 1");
  const ConflictGraph graph = build_conflict_graph(scenario);
  const Money bid_max = max_truth(scenario);

  std::vector<DeviationReport> reports;
  reports.reserve(static_cast<std::size_t>(scenario.operator_count()) *
                  static_cast<std::size_t>(deviations_per_operator));
  for (int i = 0; i < scenario.operator_count(); ++i) {
    SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(i)));
    const auto& truth = scenario.truths[static_cast<std::size_t>(i)].values;
    for (int k = 0; k < deviations_per_operator; ++k) {
      const auto kind = static_cast<DeviationKind>(rng.next_in(0, 4));
      auto bids = sample_deviation(truth, bid_max, kind, rng);
      reports.push_back(
          evaluate_deviation(graph, scenario, OperatorId{i}, std::move(bids), kind, scenario_id));
    }
  }
  return reports;
}

std::vector<DeviationReport> attack_strategy_proofness(const GenParams& params, int trials,
                                                       int deviations_per_operator,
                                                       std::uint64_t seed, int workers) {
  if (trials < 1) throw std::invalid_argument("attack: trials must be >= 1");
  std::vector<std::vector<DeviationReport>> per_instance(static_cast<std::size_t>(trials));
  parallel_for(trials, workers, [&](int t) {
    GenParams local = params;
    local.seed = seed + static_cast<std::uint64_t>(t);
    const Scenario scn = generate(local);
    per_instance[static_cast<std::size_t>(t)] = attack_scenario(
        scn, deviations_per_operator, substream_seed(seed, 0x10000000ULL + t), t);
  });

  std::vector<DeviationReport> reports;
  for (auto& chunk : per_instance)
    reports.insert(reports.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
  return reports;
}

MonotonicityProbe check_scaled_winner(const ConflictGraph& graph, const Scenario& scenario,
                                      OperatorId op, Money factor, int scenario_id) {
  const BidProfile truth = truthful_bids(scenario);
  const AuctionResult honest = run_auction(graph, truth);

  MonotonicityProbe probe;
  probe.scenario_id = scenario_id;
  probe.op = op;
  probe.was_allocated = holds_any(honest.allocation[static_cast<std::size_t>(op.index)]);
  if (!probe.was_allocated) return probe;

  BidProfile scaled = truth;
  for (Money& v : scaled[static_cast<std::size_t>(op.index)].bids) v *= factor;
  probe.scaled_bids = scaled[static_cast<std::size_t>(op.index)].bids;
  const AuctionResult raised = run_auction(graph, scaled);
  probe.held = holds_any(raised.allocation[static_cast<std::size_t>(op.index)]);
  return probe;
}

std::vector<MonotonicityProbe> probe_monotonicity(const GenParams& params, int trials,
                                                  std::uint64_t seed, int workers) {
  if (trials < 1) throw std::invalid_argument("probe: trials must be >= 1");
  std::vector<std::vector<MonotonicityProbe>> per_instance(static_cast<std::size_t>(trials));
  parallel_for(trials, workers, [&](int t) {
    GenParams local = params;
    local.seed = seed + static_cast<std::uint64_t>(t);
    const Scenario scn = generate(local);
    const ConflictGraph graph = build_conflict_graph(scn);
    std::vector<MonotonicityProbe> probes;
    for (int i = 0; i < scn.operator_count(); ++i) {
      MonotonicityProbe probe = check_scaled_winner(graph, scn, OperatorId{i}, 2, t);
      if (probe.was_allocated) probes.push_back(std::move(probe));
    }
    per_instance[static_cast<std::size_t>(t)] = std::move(probes);
  });

  std::vector<MonotonicityProbe> probes;
  for (auto& chunk : per_instance)
    probes.insert(probes.end(), std::make_move_iterator(chunk.begin()),
                  std::make_move_iterator(chunk.end()));
  return probes;
}

namespace {

void write_json_file(const std::filesystem::path& file, const json& j) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  out << j.dump(2) << '\n';
}

std::filesystem::path bundle_scenario(const std::filesystem::path& dir, const Scenario& scn,
                                      int scenario_id) {
  std::filesystem::create_directories(dir);
  const auto path = dir / ("ce_" + std::to_string(scenario_id) + ".scn.json");
  save_scenario(scn, path);
  return path;
}

}  // namespace

std::filesystem::path write_deviation_bundle(const std::filesystem::path& dir,
                                             const Scenario& scenario,
                                             const DeviationReport& report) {
  const auto scn_path = bundle_scenario(dir, scenario, report.scenario_id);
  const auto path = dir / ("ce_" + std::to_string(report.scenario_id) + "_op" +
                           std::to_string(report.op.index) + "_" + to_string(report.kind) +
                           ".deviation.json");
  write_json_file(path, json{{"schema", 1},
                             {"scenario_file", scn_path.filename().string()},
                             {"scenario_id", report.scenario_id},
                             {"operator", report.op.index},
                             {"kind", to_string(report.kind)},
                             {"deviated_bids", report.deviated_bids},
                             {"truthful_utility", report.truthful_utility},
                             {"deviated_utility", report.deviated_utility},
                             {"profitable", report.profitable}});
  return path;
}

std::filesystem::path write_monotonicity_bundle(const std::filesystem::path& dir,
                                                const Scenario& scenario,
                                                const MonotonicityProbe& probe) {
  const auto scn_path = bundle_scenario(dir, scenario, probe.scenario_id);
  const auto path = dir / ("ce_" + std::to_string(probe.scenario_id) + "_op" +
                           std::to_string(probe.op.index) + ".monotonicity.json");
  write_json_file(path, json{{"schema", 1},
                             {"scenario_file", scn_path.filename().string()},
                             {"scenario_id", probe.scenario_id},
                             {"operator", probe.op.index},
                             {"scaled_bids", probe.scaled_bids},
                             {"held", probe.held}});
  return path;
}

}  // namespace spectraux
