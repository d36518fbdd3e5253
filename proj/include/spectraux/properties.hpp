#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "spectraux/graph.hpp"
#include "spectraux/model.hpp"
#include "spectraux/scenario.hpp"

namespace spectraux {

enum class DeviationKind {
  kScaleUp,     // whole vector scaled by a factor > 1
  kScaleDown,   // whole vector scaled by a factor < 1 (possibly 0)
  kPerStation,  // independent factor per station
  kShiftUp,     // +delta on every entry
  kShiftDown,   // -delta on every entry, clamped at 0
};

const char* to_string(DeviationKind kind);

// Outcome of one unilateral deviation, both runs settled with TRUE values.
struct DeviationReport {
  int scenario_id = 0;
  OperatorId op;
  DeviationKind kind = DeviationKind::kPerStation;
  std::vector<Money> deviated_bids;
  Money truthful_utility = 0;
  Money deviated_utility = 0;
  bool profitable = false;  // deviated_utility > truthful_utility, strict
};

// Truthful run vs. a run where `op` bids `deviated_bids` (everyone else
// truthful). Exact integer comparison.
DeviationReport evaluate_deviation(const ConflictGraph& graph, const Scenario& scenario,
                                   OperatorId op, std::vector<Money> deviated_bids,
                                   DeviationKind kind = DeviationKind::kPerStation,
                                   int scenario_id = 0);

// Random deviations against one scenario: per operator (ascending id),
// `deviations_per_operator` samples. Factors come from
// {0, 1/4, 1/2, 3/4, 5/4, 2, 4} (rounded half-up to integers); shifts are
// whole-vector +/-delta clamped at zero.
std::vector<DeviationReport> attack_scenario(const Scenario& scenario,
                                             int deviations_per_operator,
                                             std::uint64_t seed, int scenario_id = 0);

// Campaign over `trials` generated instances; instance t uses seed seed+t.
// Reports are ordered by (instance, operator, draw) regardless of workers.
std::vector<DeviationReport> attack_strategy_proofness(const GenParams& params, int trials,
                                                       int deviations_per_operator,
                                                       std::uint64_t seed, int workers = 1);

struct MonotonicityProbe {
  int scenario_id = 0;
  OperatorId op;
  std::vector<Money> scaled_bids;
  bool was_allocated = false;  // probe only fires when true
  bool held = true;            // still allocated after the scale-up
};

// Truthful run, then re-run with op's bids multiplied by `factor`. held is
// whether op still holds at least one station.
MonotonicityProbe check_scaled_winner(const ConflictGraph& graph, const Scenario& scenario,
                                      OperatorId op, Money factor, int scenario_id = 0);

// Campaign: every allocated operator of every instance gets a x2 probe.
std::vector<MonotonicityProbe> probe_monotonicity(const GenParams& params, int trials,
                                                  std::uint64_t seed, int workers = 1);

// Reproduction bundles: the scenario file plus a JSON record of the
// deviation/probe. Returns the record path.
std::filesystem::path write_deviation_bundle(const std::filesystem::path& dir,
                                             const Scenario& scenario,
                                             const DeviationReport& report);
std::filesystem::path write_monotonicity_bundle(const std::filesystem::path& dir,
                                                const Scenario& scenario,
                                                const MonotonicityProbe& probe);

}  // namespace spectraux
