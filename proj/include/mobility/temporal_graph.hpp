#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mobility/errors.hpp"

namespace mobility {

// One edge appearance. Vertices are indices into TemporalGraph::vertices();
// the pair {u,v} is unordered.
struct TemporalEvent {
    int u = 0;
    int v = 0;
    std::int64_t time = 0;
};

/// An incremental temporal graph: a fixed vertex set plus a list of edge
/// appearances with strictly increasing positive times (at most one edge
/// per time step). Immutable after construction.
class TemporalGraph {
public:
    TemporalGraph() = default;

    // Throws MobilityError on self loops, out-of-range indices, or times
    // that are not strictly increasing and positive.
    static TemporalGraph make(std::vector<std::string> vertices,
                              std::vector<TemporalEvent> events);

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex_name(int idx) const { return vertices_.at(static_cast<std::size_t>(idx)); }
    int vertex_index(std::string_view name) const;
    int require_vertex(std::string_view name) const;  // throws UnknownVertexError

    const std::vector<TemporalEvent>& events() const { return events_; }
    std::size_t event_count() const { return events_.size(); }

    bool is_single_valued() const { return single_valued_; }
    bool is_clique() const { return clique_; }

    bool has_edge(int u, int v) const;
    // Sorted appearance times of the pair {u,v}; empty when it never appears.
    const std::vector<std::int64_t>& times(int u, int v) const;
    // Number of distinct pairs that appear at least once.
    std::size_t footprint_edge_count() const { return multiplicity_.size(); }
    std::vector<std::pair<int, int>> footprint_edges() const;

private:
    std::uint64_t pair_key(int u, int v) const;

    std::vector<std::string> vertices_;
    std::unordered_map<std::string, int> index_;
    std::vector<TemporalEvent> events_;
    std::unordered_map<std::uint64_t, std::vector<std::int64_t>> multiplicity_;
    bool single_valued_ = true;
    bool clique_ = true;
};

/// Reads the line-based .tg format:
///   line 1: vertex count n; optional "v <token>" declarations;
///   then one event "<u> <v> <t>" per line, strictly increasing t;
///   '#' starts a comment, blank lines are ignored.
/// Vertices not declared explicitly are registered at first use.
TemporalGraph parse_graph(std::istream& in);
TemporalGraph parse_graph(const std::string& text);

/// Canonical text form: count, one "v" line per vertex in stored order,
/// then events. parse_graph(serialize_graph(g)) reproduces g exactly.
std::string serialize_graph(const TemporalGraph& g);

// Relabels event times to 1..M, preserving order. Idempotent; recognition
// verdicts only depend on event order, so they are invariant under this.
TemporalGraph canonical_times(const TemporalGraph& g);

TemporalGraph induced_subgraph(const TemporalGraph& g, const std::vector<std::string>& subset);
TemporalGraph induced_subgraph_indices(const TemporalGraph& g, const std::vector<int>& subset);

/// Resolves a comma-separated or listed set of vertex names to indices,
/// requiring each to exist and appear exactly once.
std::vector<int> ordering_from_names(const TemporalGraph& g, const std::vector<std::string>& names);
std::vector<std::string> ordering_to_names(const TemporalGraph& g, const std::vector<int>& ordering);

}  // namespace mobility
