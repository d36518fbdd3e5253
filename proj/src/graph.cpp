#include "spectraux/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spectraux {

ConflictGraph::ConflictGraph(std::vector<std::int32_t> stations_per_operator,
                             const std::vector<std::pair<StationId, StationId>>& edges)
    : stations_per_operator_(std::move(stations_per_operator)) {
  if (stations_per_operator_.empty())
    throw std::invalid_argument("conflict graph: needs at least one operator");

  op_offset_.reserve(stations_per_operator_.size());
  StationId next = 0;
  for (std::size_t i = 0; i < stations_per_operator_.size(); ++i) {
    if (stations_per_operator_[i] < 0)
      throw std::invalid_argument("conflict graph: negative station count");
    op_offset_.push_back(next);
    next += stations_per_operator_[i];
    for (std::int32_t j = 0; j < stations_per_operator_[i]; ++j)
      owner_.push_back(OperatorId{static_cast<std::int32_t>(i)});
  }

  const auto m = static_cast<StationId>(owner_.size());
  std::vector<std::pair<StationId, StationId>> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= m || v >= m)
      throw std::invalid_argument("conflict graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("conflict graph: self-loop");
    if (owner_[static_cast<std::size_t>(u)] == owner_[static_cast<std::size_t>(v)])
      throw std::invalid_argument("conflict graph: stations of one operator cannot conflict");
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  adj_.resize(owner_.size());
  for (auto [u, v] : normalized) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  edge_count_ = normalized.size();
}

bool ConflictGraph::has_edge(StationId u, StationId v) const {
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<StationId, StationId>> ConflictGraph::edges() const {
  std::vector<std::pair<StationId, StationId>> out;
  out.reserve(edge_count_);
  for (StationId u = 0; u < station_count(); ++u)
    for (const StationId v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

ConflictGraph build_conflict_graph(const Scenario& scenario) {
  validate_scenario(scenario);
  const double d = scenario.interference_radius_d;
  const double d2 = d * d;
  const auto m = static_cast<StationId>(scenario.stations.size());

  std::vector<std::pair<StationId, StationId>> edges;
  for (StationId u = 0; u < m; ++u) {
    const BaseStation& a = scenario.stations[static_cast<std::size_t>(u)];
    for (StationId v = u + 1; v < m; ++v) {
      const BaseStation& b = scenario.stations[static_cast<std::size_t>(v)];
      if (a.owner == b.owner) continue;
      const double dx = a.x - b.x;
      const double dy = a.y - b.y;
      if (dx * dx + dy * dy < d2) edges.emplace_back(u, v);
    }
  }
  return {scenario.stations_per_operator, edges};
}

void write_edge_list(const ConflictGraph& graph, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

std::vector<StationId> ResidualView::alive_stations_of(OperatorId op) const {
  std::vector<StationId> out;
  const auto [first, last] = base->station_range(op);
  for (StationId s = first; s < last; ++s)
    if (is_alive(s)) out.push_back(s);
  return out;
}

std::vector<StationId> neighborhood_of_operator(const ResidualView& view, OperatorId op) {
  std::vector<StationId> out;
  const auto [first, last] = view.base->station_range(op);
  for (StationId s = first; s < last; ++s) {
    if (!view.is_alive(s)) continue;
    for (const StationId nb : view.base->neighbors(s))
      if (view.is_alive(nb)) out.push_back(nb);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ResidualView remove_closed_neighborhood(ResidualView view, OperatorId op) {
  const auto neighborhood = neighborhood_of_operator(view, op);
  for (const StationId s : view.alive_stations_of(op)) view.kill(s);
  for (const StationId s : neighborhood) view.kill(s);
  return view;
}

}  // namespace spectraux
