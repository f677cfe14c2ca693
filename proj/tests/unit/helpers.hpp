#pragma once

#include <random>
#include <string>
#include <vector>

#include "mobility/temporal_graph.hpp"

namespace testutil {

// Builds a graph from whitespace-separated "uv" pairs of single-char names,
// timed 1..M, e.g. make_graph("abc", {"ab","ac","bc"}).
inline mobility::TemporalGraph make_graph(const std::string& verts,
                                          const std::vector<std::string>& pairs) {
    std::vector<std::string> names;
    for (char c : verts) names.emplace_back(1, c);
    std::vector<mobility::TemporalEvent> events;
    std::int64_t t = 1;
    for (const auto& p : pairs) {
        int u = static_cast<int>(verts.find(p[0]));
        int v = static_cast<int>(verts.find(p[1]));
        events.push_back({u, v, t++});
    }
    return mobility::TemporalGraph::make(names, std::move(events));
}

inline std::vector<int> order_of(const mobility::TemporalGraph& g, const std::string& verts) {
    std::vector<int> out;
    for (char c : verts) out.push_back(g.require_vertex(std::string(1, c)));
    return out;
}

inline std::string names_of(const mobility::TemporalGraph& g, const std::vector<int>& ordering) {
    std::string out;
    for (int v : ordering) out += g.vertex_name(v);
    return out;
}

}  // namespace testutil
