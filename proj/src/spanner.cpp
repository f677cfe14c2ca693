#include "mobility/spanner.hpp"

#include <algorithm>
#include <limits>

#include "mobility/schedule.hpp"

namespace mobility {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

// Earliest arrival at every vertex with at most `hops` edges, one sweep per
// hop budget; stops as soon as a budget increase changes nothing.
void single_source_hops(const TemporalGraph& g, int src, int* out_hops) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<std::int64_t> prev(static_cast<std::size_t>(n), kInf);
    std::vector<std::int64_t> cur(static_cast<std::size_t>(n), kInf);
    prev[static_cast<std::size_t>(src)] = 0;
    for (int v = 0; v < n; ++v) out_hops[v] = v == src ? 0 : -1;

    for (int budget = 1; budget <= n; ++budget) {
        cur = prev;
        for (const TemporalEvent& e : g.events()) {
            if (prev[static_cast<std::size_t>(e.u)] < e.time) {
                cur[static_cast<std::size_t>(e.v)] = std::min(cur[static_cast<std::size_t>(e.v)], e.time);
            }
            if (prev[static_cast<std::size_t>(e.v)] < e.time) {
                cur[static_cast<std::size_t>(e.u)] = std::min(cur[static_cast<std::size_t>(e.u)], e.time);
            }
        }
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            if (cur[static_cast<std::size_t>(v)] != prev[static_cast<std::size_t>(v)]) changed = true;
            if (cur[static_cast<std::size_t>(v)] != kInf && out_hops[v] == -1) out_hops[v] = budget;
        }
        if (!changed) break;
        prev.swap(cur);
    }
}

}  // namespace

ReachabilityMatrix reachability(const TemporalGraph& g) {
    const int n = static_cast<int>(g.vertex_count());
    ReachabilityMatrix m;
    m.n = n;
    m.min_hops.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int src = 0; src < n; ++src) {
        single_source_hops(g, src, m.min_hops.data() + static_cast<std::size_t>(src) * n);
    }
    return m;
}

TemporalGraph build_spanner(const TemporalGraph& g, const std::vector<int>& pi) {
    if (!graph_replays_from(g, pi).accepted()) {
        throw NotAcceptedError("ordering does not replay the graph");
    }
    if (pi.empty()) return g;
    const int first = pi.front();
    const int last = pi.back();
    std::vector<TemporalEvent> events;
    for (const TemporalEvent& e : g.events()) {
        if (e.u == first || e.v == first || e.u == last || e.v == last) events.push_back(e);
    }
    return TemporalGraph::make(g.vertices(), std::move(events));
}

SpannerCheck verify_spanner(const TemporalGraph& g, const TemporalGraph& h) {
    if (h.vertices() != g.vertices()) {
        throw NotASubgraphError("spanner must keep the graph's vertex set");
    }
    for (const TemporalEvent& e : h.events()) {
        const auto& ts = g.times(e.u, e.v);
        if (!std::binary_search(ts.begin(), ts.end(), e.time)) {
            throw NotASubgraphError("spanner event not present in the graph");
        }
    }

    const int n = static_cast<int>(g.vertex_count());
    ReachabilityMatrix rh = reachability(h);
    SpannerCheck out;
    out.connected = true;

    // Complete footprints reach every pair directly; skip the sweep then.
    const bool g_complete =
        g.footprint_edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2;
    if (g_complete) {
        for (int u = 0; u < n && out.connected; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u != v && !rh.reachable(u, v)) {
                    out.connected = false;
                    break;
                }
            }
        }
    } else {
        ReachabilityMatrix rg = reachability(g);
        for (int u = 0; u < n && out.connected; ++u) {
            for (int v = 0; v < n; ++v) {
                if (rg.reachable(u, v) && !rh.reachable(u, v)) {
                    out.connected = false;
                    break;
                }
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            out.max_hops = std::max(out.max_hops, rh.hops(u, v));
        }
    }
    return out;
}

}  // namespace mobility
