#include "mobility/clique.hpp"

#include <algorithm>
#include <string>

#include "mobility/schedule.hpp"

namespace mobility {

namespace {

// Dense single-valued time lookup; -1 marks a missing pair.
struct PairTimes {
    int n = 0;
    std::vector<std::int64_t> t;

    explicit PairTimes(const TemporalGraph& g) : n(static_cast<int>(g.vertex_count())) {
        t.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
        for (const TemporalEvent& e : g.events()) {
            at(e.u, e.v) = e.time;
            at(e.v, e.u) = e.time;
        }
    }

    std::int64_t& at(int u, int v) { return t[static_cast<std::size_t>(u) * n + v]; }
    std::int64_t get(int u, int v) const { return t[static_cast<std::size_t>(u) * n + v]; }
};

TriangleVerdict triangle_from_times(const PairTimes& times, int u, int v, int w) {
    const std::int64_t tuv = times.get(u, v);
    const std::int64_t tvw = times.get(v, w);
    const std::int64_t tuw = times.get(u, w);
    if (tuv < 0 || tvw < 0 || tuw < 0) {
        throw MissingEdgeError("triangle requires all three edges");
    }
    // The edge whose time is between the two others joins the extremes.
    if ((tvw < tuv) == (tuv < tuw)) return {{u, v}, w};
    if ((tuv < tvw) == (tvw < tuw)) return {{v, w}, u};
    return {{u, w}, v};
}

std::pair<int, int> extremal_from_times(const PairTimes& times, const std::vector<int>& subset) {
    if (subset.size() < 2) throw MobilityError("extremal_nodes needs at least two vertices");
    std::pair<int, int> x{subset[0], subset[1]};
    for (std::size_t i = 2; i < subset.size(); ++i) {
        TriangleVerdict tv = triangle_from_times(times, x.first, x.second, subset[i]);
        x = tv.extremes;
    }
    return x;
}

bool name_less(const TemporalGraph& g, int a, int b) {
    return g.vertex_name(a) < g.vertex_name(b);
}

void canonicalize_direction(const TemporalGraph& g, std::vector<int>& ordering) {
    if (ordering.size() >= 2 && name_less(g, ordering.back(), ordering.front())) {
        std::reverse(ordering.begin(), ordering.end());
    }
}

}  // namespace

TriangleVerdict triangle_extremities(const TemporalGraph& g, int u, int v, int w) {
    PairTimes times(g);
    return triangle_from_times(times, u, v, w);
}

std::pair<int, int> extremal_nodes(const TemporalGraph& g, const std::vector<int>& subset) {
    PairTimes times(g);
    return extremal_from_times(times, subset);
}

std::optional<std::vector<int>> vertex_sorting(const TemporalGraph& g,
                                               const std::vector<int>* scan_order) {
    const int n = static_cast<int>(g.vertex_count());
    if (!g.is_clique()) throw NotACliqueError("vertex_sorting requires a temporal clique");

    std::vector<int> all;
    if (scan_order != nullptr) {
        all = *scan_order;
        if (static_cast<int>(all.size()) != n) {
            throw VertexMismatchError("scan order must cover every vertex");
        }
    } else {
        all.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    }

    std::vector<int> ordering;
    if (n <= 2) {
        ordering = all;
        canonicalize_direction(g, ordering);
        return ordering;
    }

    PairTimes times(g);
    auto [a, z] = extremal_from_times(times, all);
    ordering.push_back(a);

    std::vector<int> remaining;
    for (int v : all) {
        if (v != a) remaining.push_back(v);
    }
    while (remaining.size() > 1) {
        auto [x, y] = extremal_from_times(times, remaining);
        int next;
        if (x == z) {
            next = y;
        } else if (y == z) {
            next = x;
        } else {
            return std::nullopt;  // the saved far end stopped being extremal
        }
        ordering.push_back(next);
        remaining.erase(std::find(remaining.begin(), remaining.end(), next));
    }
    ordering.push_back(z);
    canonicalize_direction(g, ordering);
    return ordering;
}

RecognitionOutcome recognize_clique(const TemporalGraph& g) {
    if (!g.is_clique()) throw NotACliqueError("recognize_clique requires a temporal clique");
    auto candidate = vertex_sorting(g);
    if (!candidate) {
        return RecognitionOutcome::reject_contradiction(
            {}, "no ordering is consistent with the triangle medians");
    }
    // The candidate is only a candidate: always verify by replaying.
    return graph_replays_from(g, *candidate);
}

}  // namespace mobility
