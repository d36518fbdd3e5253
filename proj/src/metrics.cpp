#include "spectraux/metrics.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "spectraux/auction.hpp"
#include "spectraux/graph.hpp"
#include "spectraux/parallel.hpp"
#include "spectraux/vcg.hpp"

namespace spectraux {

std::int64_t allocation_efficiency(const std::vector<std::vector<std::uint8_t>>& allocation) {
  std::int64_t count = 0;
  for (const auto& x : allocation)
    for (const auto bit : x) count += bit;
  return count;
}

Money social_welfare(const std::vector<std::vector<std::uint8_t>>& allocation,
                     const BidProfile& bids) {
  if (allocation.size() != bids.size())
    throw std::invalid_argument("social_welfare: allocation/bid shape mismatch");
  Money total = 0;
  for (std::size_t i = 0; i < allocation.size(); ++i) {
    if (allocation[i].size() != bids[i].bids.size())
      throw std::invalid_argument("social_welfare: allocation/bid shape mismatch");
    for (std::size_t j = 0; j < allocation[i].size(); ++j)
      if (allocation[i][j]) total += bids[i].bids[j];
  }
  return total;
}

namespace {

std::int64_t elapsed_us(std::chrono::steady_clock::time_point from,
                        std::chrono::steady_clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::microseconds>(to - from).count();
}

}  // namespace

std::vector<CompareRow> compare_batch(const GenParams& params, int batch, int vcg_cap,
                                      int workers) {
  if (batch < 0) throw std::invalid_argument("compare: batch must be >= 0");
  std::vector<CompareRow> rows(static_cast<std::size_t>(batch) * 2);

  parallel_for(batch, workers, [&](int t) {
    GenParams local = params;
    local.seed = params.seed + static_cast<std::uint64_t>(t);
    const Scenario scn = generate(local);
    const ConflictGraph graph = build_conflict_graph(scn);
    const BidProfile bids = truthful_bids(scn);

    CompareRow greedy;
    greedy.instance_id = t;
    greedy.seed = local.seed;
    greedy.n = scn.operator_count();
    greedy.m = scn.station_count();
    greedy.mechanism = "greedy";
    const auto g0 = std::chrono::steady_clock::now();
    const AuctionResult auction = run_auction(graph, bids);
    const auto g1 = std::chrono::steady_clock::now();
    greedy.runtime_us = elapsed_us(g0, g1);
    greedy.welfare = social_welfare(auction.allocation, bids);
    greedy.efficiency = allocation_efficiency(auction.allocation);

    CompareRow vcg = greedy;
    vcg.mechanism = "vcg";
    vcg.welfare.reset();
    vcg.efficiency.reset();
    vcg.runtime_us.reset();
    if (scn.station_count() <= vcg_cap) {
      const auto v0 = std::chrono::steady_clock::now();
      const VcgResult optimal = vcg_auction(graph, bids, vcg_cap);
      const auto v1 = std::chrono::steady_clock::now();
      vcg.runtime_us = elapsed_us(v0, v1);
      vcg.welfare = optimal.optimal_welfare;
      vcg.efficiency = allocation_efficiency(optimal.allocation);
      vcg.search_nodes = optimal.explored_count;
      const double ratio = optimal.optimal_welfare > 0
                               ? static_cast<double>(*greedy.welfare) /
                                     static_cast<double>(optimal.optimal_welfare)
                               : 1.0;
      greedy.ratio = ratio;
      vcg.ratio = ratio;
    } else {
      vcg.mechanism = "vcg-skipped";
    }

    rows[static_cast<std::size_t>(t) * 2] = std::move(greedy);
    rows[static_cast<std::size_t>(t) * 2 + 1] = std::move(vcg);
  });
  return rows;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream out;
  out << kCompareCsvHeader << '\n';
  char ratio_buf[32];
  for (const CompareRow& r : rows) {
    out << r.instance_id << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.mechanism << ',';
    if (r.welfare) out << *r.welfare;
    out << ',';
    if (r.efficiency) out << *r.efficiency;
    out << ',';
    if (r.ratio) {
      std::snprintf(ratio_buf, sizeof ratio_buf, "%.6f", *r.ratio);
      out << ratio_buf;
    }
    out << ',';
    if (r.runtime_us) out << *r.runtime_us;
    out << ',';
    if (r.search_nodes) out << *r.search_nodes;
    out << '\n';
  }
  return out.str();
}

CompareSummary summarize(const std::vector<CompareRow>& rows) {
  CompareSummary s;
  double ratio_sum = 0;
  int ratio_count = 0;
  double eff_greedy_sum = 0;
  int greedy_count = 0;
  double eff_vcg_sum = 0;
  int vcg_count = 0;

  for (const CompareRow& r : rows) {
    if (r.mechanism == "greedy") {
      ++greedy_count;
      if (r.efficiency) eff_greedy_sum += static_cast<double>(*r.efficiency);
      if (r.ratio) {
        ratio_sum += *r.ratio;
        s.min_ratio = ratio_count == 0 ? *r.ratio : std::min(s.min_ratio, *r.ratio);
        ++ratio_count;
      }
    } else if (r.mechanism == "vcg") {
      ++vcg_count;
      if (r.efficiency) eff_vcg_sum += static_cast<double>(*r.efficiency);
    } else if (r.mechanism == "vcg-skipped") {
      ++s.vcg_skipped;
    }
  }
  s.instances = greedy_count;
  s.mean_ratio = ratio_count ? ratio_sum / ratio_count : 0.0;
  s.mean_efficiency_greedy = greedy_count ? eff_greedy_sum / greedy_count : 0.0;
  s.mean_efficiency_vcg = vcg_count ? eff_vcg_sum / vcg_count : 0.0;
  return s;
}

}  // namespace spectraux
