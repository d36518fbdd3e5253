#include "spectraux/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spectraux/rng.hpp"

namespace spectraux {

using nlohmann::json;

std::vector<std::int32_t> resolve_station_counts(const GenParams& params) {
  if (params.n_operators < 1) throw std::invalid_argument("generate: needs at least one operator");
  std::vector<std::int32_t> counts;
  if (params.stations_per_operator.size() == 1) {
    counts.assign(static_cast<std::size_t>(params.n_operators), params.stations_per_operator[0]);
  } else if (params.stations_per_operator.size() ==
             static_cast<std::size_t>(params.n_operators)) {
    counts = params.stations_per_operator;
  } else {
    throw std::invalid_argument("generate: station counts must be one value or one per operator");
  }
  for (const auto c : counts)
    if (c < 1) throw std::invalid_argument("generate: station counts must be >= 1");
  return counts;
}

Scenario generate(const GenParams& params) {
  const auto counts = resolve_station_counts(params);
  if (params.region_side < 0) throw std::invalid_argument("generate: region side must be >= 0");
  if (params.radius_d < 0) throw std::invalid_argument("generate: radius must be >= 0");
  if (params.bid_max < 0) throw std::invalid_argument("generate: bid-max must be >= 0");

  Scenario scn;
  scn.stations_per_operator = counts;
  scn.interference_radius_d = params.radius_d;
  scn.region_side = params.region_side;
  scn.seed = params.seed;

  SplitMix64 rng(params.seed);
  for (std::int32_t i = 0; i < params.n_operators; ++i) {
    for (std::int32_t j = 0; j < counts[static_cast<std::size_t>(i)]; ++j) {
      const double x = rng.next_unit() * params.region_side;
      const double y = rng.next_unit() * params.region_side;
      scn.stations.push_back({OperatorId{i}, j, x, y});
    }
  }
  for (std::int32_t i = 0; i < params.n_operators; ++i) {
    ValuationVector v{OperatorId{i}, {}};
    v.values.reserve(static_cast<std::size_t>(counts[static_cast<std::size_t>(i)]));
    for (std::int32_t j = 0; j < counts[static_cast<std::size_t>(i)]; ++j)
      v.values.push_back(params.bid_max == 0 ? 0 : rng.next_in(1, params.bid_max));
    scn.truths.push_back(std::move(v));
  }

  validate_scenario(scn);
  return scn;
}

namespace {

constexpr int kSchemaVersion = 1;

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ParseError("cannot open " + file.string() + " for writing");
  out << text;
  if (!out) throw ParseError("write failed: " + file.string());
}

json read_json(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("cannot open " + file.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
}

// Field accessor that rewraps type/shape complaints with file + field context.
class Reader {
 public:
  Reader(const json& j, std::string where) : j_(j), where_(std::move(where)) {}

  const json& get(const char* key) const {
    if (!j_.is_object() || !j_.contains(key))
      throw ParseError(where_ + ": missing field '" + key + "'");
    return j_.at(key);
  }

  template <typename T>
  T value(const char* key) const {
    try {
      return get(key).get<T>();
    } catch (const json::exception& e) {
      throw ParseError(where_ + ": field '" + key + "': " + e.what());
    }
  }

  void check_schema() const {
    if (value<int>("schema") != kSchemaVersion)
      throw ParseError(where_ + ": unsupported schema version");
  }

  const std::string& where() const { return where_; }

 private:
  const json& j_;
  std::string where_;
};

json scenario_json(const Scenario& scn) {
  json stations = json::array();
  for (const BaseStation& st : scn.stations)
    stations.push_back({{"owner", st.owner.index}, {"x", st.x}, {"y", st.y}});
  json truths = json::array();
  for (const ValuationVector& v : scn.truths) truths.push_back(v.values);
  return json{{"schema", kSchemaVersion},
              {"operators", scn.stations_per_operator},
              {"stations", stations},
              {"truths", truths},
              {"d", scn.interference_radius_d},
              {"side", scn.region_side},
              {"seed", scn.seed}};
}

Scenario scenario_from_json(const json& j, const std::string& where) {
  const Reader r(j, where);
  r.check_schema();

  Scenario scn;
  scn.stations_per_operator = r.value<std::vector<std::int32_t>>("operators");
  scn.interference_radius_d = r.value<double>("d");
  scn.region_side = r.value<double>("side");
  scn.seed = r.value<std::uint64_t>("seed");

  const json& stations = r.get("stations");
  if (!stations.is_array()) throw ParseError(where + ": field 'stations': array expected");
  std::vector<std::int32_t> local_counter(scn.stations_per_operator.size(), 0);
  for (const json& js : stations) {
    const Reader rs(js, where + ": station");
    const auto owner = rs.value<std::int32_t>("owner");
    if (owner < 0 || static_cast<std::size_t>(owner) >= scn.stations_per_operator.size())
      throw ParseError(where + ": station owner out of range");
    scn.stations.push_back({OperatorId{owner},
                            local_counter[static_cast<std::size_t>(owner)]++,
                            rs.value<double>("x"), rs.value<double>("y")});
  }

  const auto truths = r.value<std::vector<std::vector<Money>>>("truths");
  for (std::size_t i = 0; i < truths.size(); ++i)
    scn.truths.push_back({OperatorId{static_cast<std::int32_t>(i)}, truths[i]});

  try {
    validate_scenario(scn);
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  return scn;
}

json allocation_json(const std::vector<std::vector<std::uint8_t>>& allocation) {
  json out = json::array();
  for (const auto& x : allocation) {
    json row = json::array();
    for (const auto bit : x) row.push_back(static_cast<int>(bit));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> allocation_from_json(const Reader& r) {
  const auto raw = r.value<std::vector<std::vector<int>>>("allocation");
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(raw.size());
  for (const auto& row : raw) {
    std::vector<std::uint8_t> bits;
    bits.reserve(row.size());
    for (const int b : row) {
      if (b != 0 && b != 1) throw ParseError(r.where() + ": allocation entries must be 0 or 1");
      bits.push_back(static_cast<std::uint8_t>(b));
    }
    out.push_back(std::move(bits));
  }
  return out;
}

}  // namespace

std::string scenario_to_string(const Scenario& scn) { return canonical(scenario_json(scn)); }

void save_scenario(const Scenario& scn, const std::filesystem::path& file) {
  write_text(file, scenario_to_string(scn));
}

Scenario load_scenario(const std::filesystem::path& file) {
  return scenario_from_json(read_json(file), file.string());
}

void save_bid_profile(const BidProfile& bids, const std::filesystem::path& file) {
  json rows = json::array();
  for (const BidVector& b : bids) rows.push_back(b.bids);
  write_text(file, canonical(json{{"schema", kSchemaVersion}, {"bids", rows}}));
}

BidProfile load_bid_profile(const std::filesystem::path& file) {
  const json j = read_json(file);
  const Reader r(j, file.string());
  r.check_schema();
  const auto rows = r.value<std::vector<std::vector<Money>>>("bids");
  BidProfile bids;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const Money x : rows[i])
      if (x < 0) throw ParseError(file.string() + ": bids must be non-negative");
    bids.push_back({OperatorId{static_cast<std::int32_t>(i)}, rows[i]});
  }
  return bids;
}

void save_auction_result(const AuctionResult& result, const std::filesystem::path& file) {
  json rounds = json::array();
  for (const RoundRecord& rec : result.rounds) {
    json jr{{"round_index", rec.round_index},
            {"winner", rec.winner.index},
            {"winner_residual_score", rec.winner_residual_score},
            {"allocated_stations", rec.allocated_stations},
            {"price", rec.price}};
    if (rec.critical_op)
      jr["critical_operator"] = rec.critical_op->index;
    else
      jr["critical_operator"] = nullptr;
    rounds.push_back(std::move(jr));
  }
  write_text(file, canonical(json{{"schema", kSchemaVersion},
                                  {"mechanism", "greedy"},
                                  {"allocation", allocation_json(result.allocation)},
                                  {"payments", result.payments},
                                  {"utilities", result.utilities},
                                  {"rounds", rounds}}));
}

AuctionResult load_auction_result(const std::filesystem::path& file) {
  const json j = read_json(file);
  const Reader r(j, file.string());
  r.check_schema();
  if (r.value<std::string>("mechanism") != "greedy")
    throw ParseError(file.string() + ": not a greedy auction result");

  AuctionResult result;
  result.allocation = allocation_from_json(r);
  result.payments = r.value<std::vector<Money>>("payments");
  result.utilities = r.value<std::vector<Money>>("utilities");
  for (const json& jr : r.get("rounds")) {
    const Reader rr(jr, file.string() + ": round");
    RoundRecord rec;
    rec.round_index = rr.value<int>("round_index");
    rec.winner = OperatorId{rr.value<std::int32_t>("winner")};
    rec.winner_residual_score = rr.value<Money>("winner_residual_score");
    rec.allocated_stations = rr.value<std::vector<StationId>>("allocated_stations");
    if (!rr.get("critical_operator").is_null())
      rec.critical_op = OperatorId{rr.value<std::int32_t>("critical_operator")};
    rec.price = rr.value<Money>("price");
    result.rounds.push_back(std::move(rec));
  }
  return result;
}

void save_vcg_result(const VcgResult& result, const std::filesystem::path& file) {
  write_text(file, canonical(json{{"schema", kSchemaVersion},
                                  {"mechanism", "vcg"},
                                  {"allocation", allocation_json(result.allocation)},
                                  {"payments", result.payments},
                                  {"optimal_welfare", result.optimal_welfare},
                                  {"explored_count", result.explored_count}}));
}

VcgResult load_vcg_result(const std::filesystem::path& file) {
  const json j = read_json(file);
  const Reader r(j, file.string());
  r.check_schema();
  if (r.value<std::string>("mechanism") != "vcg")
    throw ParseError(file.string() + ": not a vcg result");

  VcgResult result;
  result.allocation = allocation_from_json(r);
  result.payments = r.value<std::vector<Money>>("payments");
  result.optimal_welfare = r.value<Money>("optimal_welfare");
  result.explored_count = r.value<std::uint64_t>("explored_count");
  return result;
}

}  // namespace spectraux
