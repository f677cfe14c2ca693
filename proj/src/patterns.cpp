#include "mobility/patterns.hpp"

#include <algorithm>
#include <tuple>

namespace mobility {

namespace {

constexpr std::pair<int, int> AB{0, 1};
constexpr std::pair<int, int> BC{1, 2};
constexpr std::pair<int, int> AC{0, 2};

std::vector<OrderedPattern> build_clique4() {
    return {
        {"P1", 3, {{AC, 1}, {AB, 2}, {BC, 3}}, {}},
        {"P2", 3, {{AB, 1}, {BC, 2}, {AC, 3}}, {}},
        {"P3", 3, {{AC, 1}, {BC, 2}, {AB, 3}}, {}},
        {"P4", 3, {{BC, 1}, {AB, 2}, {AC, 3}}, {}},
    };
}

std::vector<OrderedPattern> build_atmost5() {
    return {
        {"Q1", 3, {{AC, 1}, {AB, 2}}, {BC}},
        {"Q2", 3, {{AC, 1}, {BC, 2}}, {AB}},
        {"Q3", 3, {{AB, 1}, {BC, 2}}, {AC}},
        {"Q4", 3, {{BC, 1}, {AB, 2}}, {AC}},
        {"Q5", 3, {{AC, 1}}, {AB, BC}},
    };
}

// Dense single-valued time lookup over vertex indices; -1 marks a non-edge.
struct EdgeTimes {
    int n;
    std::vector<std::int64_t> t;

    explicit EdgeTimes(const TemporalGraph& g) : n(static_cast<int>(g.vertex_count())) {
        if (!g.is_single_valued()) {
            throw MobilityError("pattern matching requires a single-valued graph");
        }
        t.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
        for (const TemporalEvent& e : g.events()) {
            t[static_cast<std::size_t>(e.u) * n + e.v] = e.time;
            t[static_cast<std::size_t>(e.v) * n + e.u] = e.time;
        }
    }

    std::int64_t get(int u, int v) const { return t[static_cast<std::size_t>(u) * n + v]; }
};

bool matches(const EdgeTimes& times, const OrderedPattern& p, const int* mapped) {
    std::int64_t prev = -1;
    for (const auto& [edge, rank] : p.timed_edges) {
        (void)rank;  // timed_edges are stored in rank order
        std::int64_t t = times.get(mapped[edge.first], mapped[edge.second]);
        if (t < 0 || t <= prev) return false;
        prev = t;
    }
    for (const auto& edge : p.forbidden_edges) {
        if (times.get(mapped[edge.first], mapped[edge.second]) >= 0) return false;
    }
    return true;
}

template <typename OnMatch>
void scan_triples(const TemporalGraph& g, const std::vector<int>& pi,
                  const std::vector<OrderedPattern>& patterns, OnMatch on_match) {
    EdgeTimes times(g);
    const int n = static_cast<int>(pi.size());
    int mapped[3];
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                mapped[0] = pi[static_cast<std::size_t>(i)];
                mapped[1] = pi[static_cast<std::size_t>(j)];
                mapped[2] = pi[static_cast<std::size_t>(k)];
                for (const OrderedPattern& p : patterns) {
                    if (matches(times, p, mapped)) {
                        if (!on_match(p, mapped)) return;
                    }
                }
            }
        }
    }
}

}  // namespace

const std::vector<OrderedPattern>& clique4_patterns() {
    static const std::vector<OrderedPattern> set = build_clique4();
    return set;
}

const std::vector<OrderedPattern>& atmost5_patterns() {
    static const std::vector<OrderedPattern> set = build_atmost5();
    return set;
}

const std::vector<OrderedPattern>& atmost_once_patterns() {
    static const std::vector<OrderedPattern> set = [] {
        std::vector<OrderedPattern> all = build_clique4();
        auto extra = build_atmost5();
        all.insert(all.end(), extra.begin(), extra.end());
        return all;
    }();
    return set;
}

std::vector<PatternViolation> violations(const TemporalGraph& g, const std::vector<int>& pi,
                                         const std::vector<OrderedPattern>& patterns) {
    std::vector<PatternViolation> out;
    scan_triples(g, pi, patterns, [&](const OrderedPattern& p, const int* mapped) {
        out.push_back({p.id, {mapped[0], mapped[1], mapped[2]}});
        return true;
    });
    std::sort(out.begin(), out.end(), [](const PatternViolation& a, const PatternViolation& b) {
        return std::tie(a.nodes, a.pattern_id) < std::tie(b.nodes, b.pattern_id);
    });
    return out;
}

bool excludes_patterns(const TemporalGraph& g, const std::vector<int>& pi,
                       const std::vector<OrderedPattern>& patterns) {
    bool clean = true;
    scan_triples(g, pi, patterns, [&](const OrderedPattern&, const int*) {
        clean = false;
        return false;
    });
    return clean;
}

std::optional<std::vector<int>> ordering_search(const TemporalGraph& g,
                                                const std::vector<OrderedPattern>& patterns,
                                                std::size_t bound) {
    const std::size_t n = g.vertex_count();
    if (n > bound) {
        throw BoundExceededError("ordering_search limited to " + std::to_string(bound) +
                                 " vertices");
    }
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    auto by_name = [&](int a, int b) { return g.vertex_name(a) < g.vertex_name(b); };
    std::sort(perm.begin(), perm.end(), by_name);
    do {
        if (excludes_patterns(g, perm, patterns)) return perm;
    } while (std::next_permutation(perm.begin(), perm.end(), by_name));
    return std::nullopt;
}

}  // namespace mobility
