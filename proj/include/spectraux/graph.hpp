#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "spectraux/model.hpp"

namespace spectraux {

// Interference conflict graph. Vertices are base stations (global ids),
// edges connect stations of different operators that would interfere.
// Immutable once built. Stations of one operator never conflict with each
// other, so the constructor rejects intra-operator edges.
class ConflictGraph {
 public:
  // Edges may arrive in any order and orientation; duplicates are merged.
  ConflictGraph(std::vector<std::int32_t> stations_per_operator,
                const std::vector<std::pair<StationId, StationId>>& edges);

  int station_count() const { return static_cast<int>(owner_.size()); }
  int operator_count() const { return static_cast<int>(stations_per_operator_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  OperatorId owner(StationId s) const { return owner_[static_cast<std::size_t>(s)]; }
  std::int32_t local_index(StationId s) const {
    return s - op_offset_[static_cast<std::size_t>(owner_[static_cast<std::size_t>(s)].index)];
  }
  StationId station_id(OperatorId op, std::int32_t local) const {
    return op_offset_[static_cast<std::size_t>(op.index)] + local;
  }
  // Global ids of an operator's stations form the contiguous range
  // [first, first + count).
  std::pair<StationId, StationId> station_range(OperatorId op) const {
    const auto i = static_cast<std::size_t>(op.index);
    return {op_offset_[i], op_offset_[i] + stations_per_operator_[i]};
  }

  std::span<const StationId> neighbors(StationId s) const {
    return adj_[static_cast<std::size_t>(s)];
  }
  bool has_edge(StationId u, StationId v) const;

  // All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<StationId, StationId>> edges() const;

 private:
  std::vector<std::int32_t> stations_per_operator_;
  std::vector<StationId> op_offset_;
  std::vector<OperatorId> owner_;
  std::vector<std::vector<StationId>> adj_;  // sorted neighbor lists
  std::size_t edge_count_ = 0;
};

// Edge rule: different owners AND euclidean distance strictly below the
// scenario's interference radius. A distance of exactly d produces no edge.
ConflictGraph build_conflict_graph(const Scenario& scenario);

// One line "u v" per edge, u < v, sorted. Used by the CLI --dump-graph flag.
void write_edge_list(const ConflictGraph& graph, const std::filesystem::path& file);

// The alive subset of a ConflictGraph that the auction still iterates on.
// Cheap value type: copy freely, one byte per station.
struct ResidualView {
  explicit ResidualView(const ConflictGraph& graph)
      : base(&graph),
        alive(static_cast<std::size_t>(graph.station_count()), 1),
        alive_count(graph.station_count()) {}

  bool is_alive(StationId s) const { return alive[static_cast<std::size_t>(s)] != 0; }
  void kill(StationId s) {
    if (alive[static_cast<std::size_t>(s)]) {
      alive[static_cast<std::size_t>(s)] = 0;
      --alive_count;
    }
  }
  bool empty() const { return alive_count == 0; }

  // Alive stations of one operator, ascending global ids.
  std::vector<StationId> alive_stations_of(OperatorId op) const;

  const ConflictGraph* base;
  std::vector<std::uint8_t> alive;
  int alive_count = 0;
};

// Alive stations of OTHER operators adjacent to at least one alive station
// of `op`. Sorted, unique, never contains a station of `op` itself.
std::vector<StationId> neighborhood_of_operator(const ResidualView& view, OperatorId op);

// Removes op's alive stations together with their alive neighborhood.
// Strictly shrinks the view whenever op has at least one alive station.
ResidualView remove_closed_neighborhood(ResidualView view, OperatorId op);

}  // namespace spectraux
