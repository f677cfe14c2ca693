#pragma once

#include <cstddef>
#include <vector>

#include "mobility/temporal_graph.hpp"

namespace mobility {

/// Pairwise strict temporal reachability with exact minimum hop counts.
struct ReachabilityMatrix {
    int n = 0;
    std::vector<int> min_hops;  // n*n, -1 when unreachable, 0 on the diagonal

    bool reachable(int u, int v) const { return hops(u, v) >= 0; }
    int hops(int u, int v) const { return min_hops[static_cast<std::size_t>(u) * n + v]; }
};

/// Per source: repeated time-ordered sweeps propagating earliest arrival with
/// a growing hop budget until stable. Exact for strict temporal paths.
ReachabilityMatrix reachability(const TemporalGraph& g);

/// The 2n-3 events incident to the first or last vertex of an accepting
/// ordering. Throws NotAcceptedError when pi does not replay g.
TemporalGraph build_spanner(const TemporalGraph& g, const std::vector<int>& pi);

struct SpannerCheck {
    bool connected = false;  // h preserves every reachable pair of g
    int max_hops = 0;        // over pairs connected in h
};

/// h must be a temporal subgraph of g over the same vertex names
/// (NotASubgraphError otherwise).
SpannerCheck verify_spanner(const TemporalGraph& g, const TemporalGraph& h);

}  // namespace mobility
