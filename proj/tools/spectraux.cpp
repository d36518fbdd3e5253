#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spectraux/auction.hpp"
#include "spectraux/graph.hpp"
#include "spectraux/metrics.hpp"
#include "spectraux/parallel.hpp"
#include "spectraux/properties.hpp"
#include "spectraux/scenario.hpp"
#include "spectraux/vcg.hpp"

namespace {

using namespace spectraux;

// Exit codes: 0 ok, 1 property violation found, 2 infeasible request
// (exact-search cap), 3 I/O or parse error.
enum ExitCode { kOk = 0, kViolation = 1, kInfeasible = 2, kIoError = 3 };

std::vector<std::int32_t> parse_station_list(const std::string& text) {
  std::vector<std::int32_t> counts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad station count '" + item + "'");
    counts.push_back(value);
  }
  if (counts.empty()) throw std::invalid_argument("empty station list");
  return counts;
}

// "START:STOP:STEP", inclusive.
std::vector<int> parse_sweep(const std::string& text) {
  int start = 0, stop = 0, step = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%d:%d:%d%c", &start, &stop, &step, &extra) != 3 || start < 1 ||
      stop < start || step < 1)
    throw std::invalid_argument("bad sweep '" + text + "', expected START:STOP:STEP");
  std::vector<int> points;
  for (int m = start; m <= stop; m += step) points.push_back(m);
  return points;
}

// Total station count spread over the operators, remainder to the lowest ids.
std::vector<std::int32_t> distribute_stations(int total, int operators) {
  std::vector<std::int32_t> counts(static_cast<std::size_t>(operators), total / operators);
  for (int i = 0; i < total % operators; ++i) ++counts[static_cast<std::size_t>(i)];
  return counts;
}

struct GenFlags {
  int operators = 3;
  std::string stations = "3";
  double side = 1000.0;
  double radius = 300.0;
  Money bid_max = 100;
  std::uint64_t seed = 1;

  GenParams to_params() const {
    GenParams p;
    p.n_operators = operators;
    p.stations_per_operator = parse_station_list(stations);
    p.region_side = side;
    p.radius_d = radius;
    p.bid_max = bid_max;
    p.seed = seed;
    return p;
  }
};

void add_gen_flags(CLI::App* cmd, GenFlags& f) {
  cmd->add_option("--operators", f.operators, "Number of operators")->capture_default_str();
  cmd->add_option("--stations", f.stations,
                  "Stations per operator: one integer or a comma list")
      ->capture_default_str();
  cmd->add_option("--side", f.side, "Region side, meters")->capture_default_str();
  cmd->add_option("--radius", f.radius, "Interference radius d, meters")->capture_default_str();
  cmd->add_option("--bid-max", f.bid_max, "Valuations drawn uniformly from [1, bid-max]")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Base seed")->capture_default_str();
}

void write_text_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ParseError("cannot open " + file.string() + " for writing");
  out << text;
}

BidProfile bids_for(const Scenario& scn, const std::string& bids_file) {
  if (bids_file.empty()) return truthful_bids(scn);
  BidProfile bids = load_bid_profile(bids_file);
  if (bids.size() != static_cast<std::size_t>(scn.operator_count()))
    throw ParseError(bids_file + ": expected " + std::to_string(scn.operator_count()) +
                     " bid vectors");
  for (int i = 0; i < scn.operator_count(); ++i)
    if (bids[static_cast<std::size_t>(i)].bids.size() !=
        static_cast<std::size_t>(scn.stations_per_operator[static_cast<std::size_t>(i)]))
      throw ParseError(bids_file + ": bid vector " + std::to_string(i) + " has wrong length");
  return bids;
}

int cmd_gen(const GenFlags& flags, const std::string& out_file) {
  const Scenario scn = generate(flags.to_params());
  const ConflictGraph graph = build_conflict_graph(scn);
  save_scenario(scn, out_file);
  std::cout << "wrote " << out_file << ": operators=" << scn.operator_count()
            << " stations=" << scn.station_count() << " edges=" << graph.edge_count() << "\n";
  return kOk;
}

int cmd_run(const std::string& scenario_file, const std::string& mechanism,
            const std::string& bids_file, const std::string& dump_graph_file,
            const std::string& out_file, int vcg_cap) {
  const Scenario scn = load_scenario(scenario_file);
  const ConflictGraph graph = build_conflict_graph(scn);
  const BidProfile bids = bids_for(scn, bids_file);
  if (!dump_graph_file.empty()) write_edge_list(graph, dump_graph_file);

  if (mechanism == "greedy") {
    const AuctionResult result = settle_utilities(run_auction(graph, bids), scn.truths);
    std::cout << "greedy: rounds=" << result.rounds.size()
              << " efficiency=" << allocation_efficiency(result.allocation)
              << " welfare=" << social_welfare(result.allocation, bids) << "\n";
    for (std::size_t i = 0; i < result.payments.size(); ++i)
      std::cout << "  operator " << i << ": payment=" << result.payments[i]
                << " utility=" << result.utilities[i] << "\n";
    if (!out_file.empty()) save_auction_result(result, out_file);
  } else {
    const VcgResult result = vcg_auction(graph, bids, vcg_cap);
    std::cout << "vcg: welfare=" << result.optimal_welfare
              << " efficiency=" << allocation_efficiency(result.allocation)
              << " search_nodes=" << result.explored_count << "\n";
    for (std::size_t i = 0; i < result.payments.size(); ++i)
      std::cout << "  operator " << i << ": payment=" << result.payments[i] << "\n";
    if (!out_file.empty()) save_vcg_result(result, out_file);
  }
  return kOk;
}

int cmd_compare(const GenFlags& flags, int batch, int vcg_cap, const std::string& out_file) {
  const auto rows = compare_batch(flags.to_params(), batch, vcg_cap, env_thread_cap());
  write_text_file(out_file, compare_csv(rows));
  const CompareSummary s = summarize(rows);
  std::cout << "instances=" << s.instances << " vcg_skipped=" << s.vcg_skipped << "\n";
  std::printf("mean_ratio=%.6f min_ratio=%.6f\n", s.mean_ratio, s.min_ratio);
  std::printf("mean_efficiency greedy=%.3f vcg=%.3f\n", s.mean_efficiency_greedy,
              s.mean_efficiency_vcg);
  return kOk;
}

int cmd_prop(const GenFlags& flags, int trials, int deviations, const std::string& out_dir) {
  const GenParams params = flags.to_params();
  const int workers = env_thread_cap();

  const auto reports = attack_strategy_proofness(params, trials, deviations, flags.seed, workers);
  const auto probes = probe_monotonicity(params, trials, flags.seed, workers);

  int profitable = 0;
  for (const DeviationReport& r : reports) {
    if (!r.profitable) continue;
    ++profitable;
    GenParams local = params;
    local.seed = flags.seed + static_cast<std::uint64_t>(r.scenario_id);
    const auto bundle = write_deviation_bundle(out_dir, generate(local), r);
    std::cerr << "profitable deviation: instance=" << r.scenario_id << " operator=" << r.op.index
              << " " << to_string(r.kind) << " utility " << r.truthful_utility << " -> "
              << r.deviated_utility << " (" << bundle.string() << ")\n";
  }
  int broken = 0;
  for (const MonotonicityProbe& p : probes) {
    if (p.held) continue;
    ++broken;
    GenParams local = params;
    local.seed = flags.seed + static_cast<std::uint64_t>(p.scenario_id);
    const auto bundle = write_monotonicity_bundle(out_dir, generate(local), p);
    std::cerr << "monotonicity failure: instance=" << p.scenario_id << " operator=" << p.op.index
              << " (" << bundle.string() << ")\n";
  }

  std::cout << "deviation reports: " << reports.size() << ", profitable: " << profitable << "\n";
  std::cout << "monotonicity probes: " << probes.size() << ", failed: " << broken << "\n";
  return (profitable == 0 && broken == 0) ? kOk : kViolation;
}

int cmd_bench(int operators, const std::string& sweep, const std::string& vcg_sweep, int repeats,
              std::uint64_t seed, int vcg_cap, const std::string& out_file) {
  if (repeats < 1) throw std::invalid_argument("bench: repeats must be >= 1");
  std::ostringstream csv;
  csv << "m,n,seed,mechanism,runtime_us,search_nodes\n";
  std::uint64_t row = 0;

  for (const int m : parse_sweep(sweep)) {
    for (int r = 0; r < repeats; ++r, ++row) {
      GenParams p;
      p.n_operators = operators;
      p.stations_per_operator = distribute_stations(m, operators);
      p.seed = seed + row;
      const Scenario scn = generate(p);
      const ConflictGraph graph = build_conflict_graph(scn);
      const BidProfile bids = truthful_bids(scn);
      const auto t0 = std::chrono::steady_clock::now();
      const AuctionResult result = run_auction(graph, bids);
      const auto t1 = std::chrono::steady_clock::now();
      (void)result;
      csv << m << ',' << operators << ',' << p.seed << ",greedy,"
          << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() << ",\n";
    }
  }

  if (!vcg_sweep.empty()) {
    const auto points = parse_sweep(vcg_sweep);
    for (const int m : points)
      if (m > vcg_cap) throw InstanceTooLargeError(m, vcg_cap);
    for (const int m : points) {
      for (int r = 0; r < repeats; ++r, ++row) {
        GenParams p;
        p.n_operators = operators;
        p.stations_per_operator = distribute_stations(m, operators);
        p.seed = seed + row;
        const Scenario scn = generate(p);
        const ConflictGraph graph = build_conflict_graph(scn);
        const BidProfile bids = truthful_bids(scn);
        const auto t0 = std::chrono::steady_clock::now();
        const VcgResult result = vcg_auction(graph, bids, vcg_cap);
        const auto t1 = std::chrono::steady_clock::now();
        csv << m << ',' << operators << ',' << p.seed << ",vcg,"
            << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() << ','
            << result.explored_count << '\n';
      }
    }
  }

  write_text_file(out_file, csv.str());
  std::cout << "wrote " << out_file << " (" << row << " rows)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectraux: greedy and exact spectrum auctions on interference conflict graphs"};
  app.require_subcommand(1);

  GenFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random scenario file");
  add_gen_flags(gen, gen_flags);
  gen->add_option("-o,--output", gen_out, "Scenario file (.scn.json)")->required();

  std::string run_scenario, run_mechanism = "greedy", run_bids, run_dump, run_out;
  int run_cap = kDefaultVcgCap;
  auto* run = app.add_subcommand("run", "Run one auction on a scenario file");
  run->add_option("scenario", run_scenario, "Scenario file")->required();
  run->add_option("--mechanism", run_mechanism, "greedy or vcg")
      ->check(CLI::IsMember({"greedy", "vcg"}))
      ->capture_default_str();
  run->add_option("--bids", run_bids, "Bid profile file (default: truthful)");
  run->add_option("--dump-graph", run_dump, "Write the conflict graph edge list here");
  run->add_option("--vcg-cap", run_cap, "Station cap for the exact search")->capture_default_str();
  run->add_option("-o,--output", run_out, "Result file (.result.json)");

  GenFlags cmp_flags;
  int cmp_batch = 100;
  int cmp_cap = kDefaultVcgCap;
  std::string cmp_out;
  auto* cmp = app.add_subcommand("compare", "Greedy vs exact welfare over a batch");
  add_gen_flags(cmp, cmp_flags);
  cmp->add_option("--batch", cmp_batch, "Instance count")->capture_default_str();
  cmp->add_option("--vcg-cap", cmp_cap, "Station cap for the exact search")->capture_default_str();
  cmp->add_option("-o,--output", cmp_out, "CSV file")->required();

  GenFlags prop_flags;
  int prop_trials = 1000;
  int prop_deviations = 10;
  std::string prop_out_dir = "counterexamples";
  auto* prop = app.add_subcommand("prop", "Randomized deviation and monotonicity campaign");
  add_gen_flags(prop, prop_flags);
  prop->add_option("--trials", prop_trials, "Instances to generate")->capture_default_str();
  prop->add_option("--deviations", prop_deviations, "Deviations per operator per instance")
      ->capture_default_str();
  prop->add_option("--out-dir", prop_out_dir, "Directory for counterexample bundles")
      ->capture_default_str();

  int bench_operators = 3;
  std::string bench_sweep = "10:1000:10";
  std::string bench_vcg_sweep;
  int bench_repeats = 1;
  std::uint64_t bench_seed = 1;
  int bench_cap = kDefaultVcgCap;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Runtime and search-size sweeps");
  bench->add_option("--operators", bench_operators, "Number of operators")->capture_default_str();
  bench->add_option("--stations-sweep", bench_sweep, "Greedy sweep of total m, START:STOP:STEP")
      ->capture_default_str();
  bench->add_option("--vcg-sweep", bench_vcg_sweep, "Optional exact-search sweep, START:STOP:STEP");
  bench->add_option("--repeats", bench_repeats, "Instances per sweep point")->capture_default_str();
  bench->add_option("--seed", bench_seed, "Base seed")->capture_default_str();
  bench->add_option("--vcg-cap", bench_cap, "Station cap for the exact search")
      ->capture_default_str();
  bench->add_option("-o,--output", bench_out, "CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIoError;
  }

  try {
    if (*gen) return cmd_gen(gen_flags, gen_out);
    if (*run) return cmd_run(run_scenario, run_mechanism, run_bids, run_dump, run_out, run_cap);
    if (*cmp) return cmd_compare(cmp_flags, cmp_batch, cmp_cap, cmp_out);
    if (*prop) return cmd_prop(prop_flags, prop_trials, prop_deviations, prop_out_dir);
    if (*bench)
      return cmd_bench(bench_operators, bench_sweep, bench_vcg_sweep, bench_repeats, bench_seed,
                       bench_cap, bench_out);
  } catch (const InstanceTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}
