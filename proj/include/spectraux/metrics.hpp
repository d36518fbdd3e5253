#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectraux/model.hpp"
#include "spectraux/scenario.hpp"

namespace spectraux {

// Number of stations holding the channel.
std::int64_t allocation_efficiency(const std::vector<std::vector<std::uint8_t>>& allocation);

// Bid mass of the allocated stations.
Money social_welfare(const std::vector<std::vector<std::uint8_t>>& allocation,
                     const BidProfile& bids);

// One CSV row: a (instance, mechanism) pair. Mechanism is "greedy", "vcg",
// or "vcg-skipped" when the instance exceeds the exact-search cap; skipped
// rows keep their place with empty metric cells.
struct CompareRow {
  int instance_id = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  std::string mechanism;
  std::optional<Money> welfare;
  std::optional<std::int64_t> efficiency;
  std::optional<double> ratio;  // greedy welfare / vcg welfare, on both rows
  std::optional<std::int64_t> runtime_us;
  std::optional<std::uint64_t> search_nodes;  // vcg only
};

// Runs `batch` instances (instance t uses seed params.seed + t) under both
// mechanisms; truthful bids. Two rows per instance, greedy first.
std::vector<CompareRow> compare_batch(const GenParams& params, int batch,
                                      int vcg_cap = kDefaultVcgCap, int workers = 1);

inline constexpr const char* kCompareCsvHeader =
    "instance_id,seed,n,m,mechanism,welfare,efficiency,ratio,runtime_us,search_nodes";

std::string compare_csv(const std::vector<CompareRow>& rows);

struct CompareSummary {
  int instances = 0;
  int vcg_skipped = 0;
  double mean_ratio = 0.0;  // over instances where vcg ran
  double min_ratio = 0.0;
  double mean_efficiency_greedy = 0.0;
  double mean_efficiency_vcg = 0.0;
};

CompareSummary summarize(const std::vector<CompareRow>& rows);

}  // namespace spectraux
