#include "mobility/circular.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mobility {

namespace {

struct RawReplay {
    bool ok = false;
    std::vector<int> final_order;
    std::size_t fail_index = 0;
};

RawReplay replay_on_circle(const std::vector<int>& initial,
                           const std::vector<std::pair<int, int>>& crossings) {
    const int n = static_cast<int>(initial.size());
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<int> order = initial;
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) {
            throw UnknownVertexError("circular ordering is not a permutation");
        }
        pos[static_cast<std::size_t>(v)] = i;
    }
    RawReplay res;
    for (std::size_t k = 0; k < crossings.size(); ++k) {
        auto [u, v] = crossings[k];
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
            throw UnknownVertexError("crossing pair outside the ordering");
        }
        int pu = pos[static_cast<std::size_t>(u)];
        int pv = pos[static_cast<std::size_t>(v)];
        bool adjacent = (pu + 1) % n == pv || (pv + 1) % n == pu;
        if (!adjacent) {
            res.fail_index = k + 1;
            return res;
        }
        std::swap(order[static_cast<std::size_t>(pu)], order[static_cast<std::size_t>(pv)]);
        std::swap(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    }
    res.ok = true;
    res.final_order = std::move(order);
    return res;
}

std::vector<std::pair<int, int>> event_pairs(const TemporalGraph& g) {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.event_count());
    for (const TemporalEvent& e : g.events()) out.emplace_back(e.u, e.v);
    return out;
}

}  // namespace

std::vector<int> normalize_rotation(const TemporalGraph& g, std::vector<int> cycle) {
    if (cycle.empty()) return cycle;
    std::size_t best = 0;
    for (std::size_t i = 1; i < cycle.size(); ++i) {
        if (g.vertex_name(cycle[i]) < g.vertex_name(cycle[best])) best = i;
    }
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(best), cycle.end());
    return cycle;
}

CircularReplayResult circular_replay(const TemporalGraph& g, const std::vector<int>& initial,
                                     const std::vector<std::pair<int, int>>& crossings) {
    RawReplay raw = replay_on_circle(initial, crossings);
    CircularReplayResult res;
    res.ok = raw.ok;
    res.fail_index = raw.fail_index;
    if (raw.ok) res.final_order = normalize_rotation(g, std::move(raw.final_order));
    return res;
}

RecognitionOutcome recognize_circular_clique(const TemporalGraph& g, std::size_t bound) {
    if (!g.is_clique()) throw NotACliqueError("recognize_circular_clique requires a temporal clique");
    const std::size_t n = g.vertex_count();
    if (n > bound) {
        throw BoundExceededError("circular recognition limited to " + std::to_string(bound) +
                                 " vertices");
    }
    const auto crossings = event_pairs(g);
    if (n <= 1) {
        std::vector<int> trivial(n, 0);
        return RecognitionOutcome::accept(trivial, trivial);
    }
    auto by_name = [&](int a, int b) { return g.vertex_name(a) < g.vertex_name(b); };
    std::vector<int> rest;
    int anchor = 0;
    for (int v = 1; v < static_cast<int>(n); ++v) {
        if (by_name(v, anchor)) anchor = v;
    }
    for (int v = 0; v < static_cast<int>(n); ++v) {
        if (v != anchor) rest.push_back(v);
    }
    std::sort(rest.begin(), rest.end(), by_name);
    do {
        std::vector<int> cycle;
        cycle.reserve(n);
        cycle.push_back(anchor);
        cycle.insert(cycle.end(), rest.begin(), rest.end());
        RawReplay raw = replay_on_circle(cycle, crossings);
        if (raw.ok) {
            return RecognitionOutcome::accept(cycle, normalize_rotation(g, std::move(raw.final_order)));
        }
    } while (std::next_permutation(rest.begin(), rest.end(), by_name));
    return RecognitionOutcome::reject_contradiction({}, "no circular ordering replays the events");
}

namespace {

using PairSeq = std::vector<std::pair<int, int>>;

PairSeq rotated(const PairSeq& seq, int r) {
    PairSeq out;
    out.reserve(seq.size());
    for (auto [a, b] : seq) {
        int ra = (a + r) % 4;
        int rb = (b + r) % 4;
        out.emplace_back(std::min(ra, rb), std::max(ra, rb));
    }
    return out;
}

PairSeq rotation_canonical(const PairSeq& seq) {
    PairSeq best = rotated(seq, 0);
    for (int r = 1; r < 4; ++r) {
        PairSeq cand = rotated(seq, r);
        if (cand < best) best = cand;
    }
    return best;
}

}  // namespace

std::vector<CircularPrefixPattern> derive_circular_forbidden_prefixes() {
    PairSeq all_pairs;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) all_pairs.emplace_back(i, j);
    }
    std::vector<int> arrangement{0, 1, 2, 3};

    // Every completable prefix, the empty one included.
    std::set<PairSeq> good;
    std::sort(all_pairs.begin(), all_pairs.end());
    PairSeq order = all_pairs;
    std::vector<PairSeq> full_orders;
    do {
        full_orders.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    for (const PairSeq& full : full_orders) {
        if (!replay_on_circle(arrangement, full).ok) continue;
        for (std::size_t len = 0; len <= full.size(); ++len) {
            good.insert(PairSeq(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(len)));
        }
    }

    std::set<PairSeq> minimal;
    for (const PairSeq& full : full_orders) {
        for (std::size_t len = 1; len <= full.size(); ++len) {
            PairSeq prefix(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(len));
            if (good.count(prefix)) continue;
            PairSeq parent(prefix.begin(), prefix.end() - 1);
            if (good.count(parent)) minimal.insert(rotation_canonical(prefix));
            break;  // longer prefixes of this order cannot be minimal
        }
    }

    std::vector<CircularPrefixPattern> out;
    out.reserve(minimal.size());
    for (const PairSeq& seq : minimal) out.push_back({seq});
    return out;
}

namespace {

// Agents are listed in their circular-arrangement order.
bool prefix_matches_agents(const TemporalGraph& g, const std::array<int, 4>& agents,
                           const CircularPrefixPattern& pattern) {
    PairSeq induced;
    for (const TemporalEvent& e : g.events()) {
        int su = -1, sv = -1;
        for (int t = 0; t < 4; ++t) {
            if (agents[static_cast<std::size_t>(t)] == e.u) su = t;
            if (agents[static_cast<std::size_t>(t)] == e.v) sv = t;
        }
        if (su >= 0 && sv >= 0) induced.emplace_back(std::min(su, sv), std::max(su, sv));
        if (induced.size() >= pattern.crossings.size()) break;
    }
    if (induced.size() < pattern.crossings.size()) return false;
    for (int r = 0; r < 4; ++r) {
        bool match = true;
        for (std::size_t k = 0; k < pattern.crossings.size() && match; ++k) {
            auto [a, b] = pattern.crossings[k];
            int ra = (a + r) % 4;
            int rb = (b + r) % 4;
            match = std::pair<int, int>{std::min(ra, rb), std::max(ra, rb)} == induced[k];
        }
        if (match) return true;
    }
    return false;
}

}  // namespace

bool matches_circular_prefix(const TemporalGraph& g, const std::vector<int>& pi,
                             const CircularPrefixPattern& pattern) {
    const int n = static_cast<int>(g.vertex_count());
    if (n < 4) return false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                for (int l = k + 1; l < n; ++l) {
                    std::array<int, 4> agents{pi[static_cast<std::size_t>(i)], pi[static_cast<std::size_t>(j)],
                                              pi[static_cast<std::size_t>(k)], pi[static_cast<std::size_t>(l)]};
                    if (prefix_matches_agents(g, agents, pattern)) return true;
                }
            }
        }
    }
    return false;
}

bool any_circular_prefix_match(const TemporalGraph& g, const std::vector<int>& pi,
                               const std::vector<CircularPrefixPattern>& patterns) {
    for (const auto& p : patterns) {
        if (matches_circular_prefix(g, pi, p)) return true;
    }
    return false;
}

DiagonalState diagonal_class(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == 0) {
        if (j == 1) return DiagonalState::Pair01;
        if (j == 2) return DiagonalState::Pair02;
        return DiagonalState::Pair03;
    }
    if (i == 1) return j == 2 ? DiagonalState::Pair03 : DiagonalState::Pair02;
    return DiagonalState::Pair01;  // {2,3}
}

DiagonalState circular_automaton_step(DiagonalState state, DiagonalState crossing_class) {
    if (state == DiagonalState::Stuck) return state;
    if (crossing_class == state) return DiagonalState::Stuck;
    int s = static_cast<int>(state);
    int c = static_cast<int>(crossing_class);
    return static_cast<DiagonalState>(3 - s - c);
}

DiagonalState initial_diagonal_state(const std::array<int, 4>& circle_slots) {
    return diagonal_class(circle_slots[0], circle_slots[2]);
}

RecognitionOutcome check_circular_multicrossing(const TemporalGraph& g,
                                                const std::vector<int>& initial) {
    const int n = static_cast<int>(g.vertex_count());
    if (static_cast<int>(initial.size()) != n) {
        throw VertexMismatchError("initial ordering must cover all vertices");
    }
    if (n <= 3) return RecognitionOutcome::accept(initial);

    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(initial[static_cast<std::size_t>(i)])] = i;

    std::array<int, 4> verts{};
    for (int a = 0; a < n; ++a) {
        verts[0] = a;
        for (int b = a + 1; b < n; ++b) {
            verts[1] = b;
            for (int c = b + 1; c < n; ++c) {
                verts[2] = c;
                for (int d = c + 1; d < n; ++d) {
                    verts[3] = d;
                    // slots in circle order: sort slot ids by circular position
                    std::array<std::pair<int, int>, 4> by_pos;
                    for (int t = 0; t < 4; ++t) {
                        by_pos[static_cast<std::size_t>(t)] = {pos[static_cast<std::size_t>(verts[static_cast<std::size_t>(t)])], t};
                    }
                    std::sort(by_pos.begin(), by_pos.end());
                    std::array<int, 4> circle_slots{by_pos[0].second, by_pos[1].second,
                                                    by_pos[2].second, by_pos[3].second};
                    DiagonalState state = initial_diagonal_state(circle_slots);
                    for (std::size_t idx = 0; idx < g.event_count(); ++idx) {
                        const TemporalEvent& e = g.events()[idx];
                        int su = -1, sv = -1;
                        for (int t = 0; t < 4; ++t) {
                            if (verts[static_cast<std::size_t>(t)] == e.u) su = t;
                            if (verts[static_cast<std::size_t>(t)] == e.v) sv = t;
                        }
                        if (su < 0 || sv < 0) continue;
                        state = circular_automaton_step(state, diagonal_class(su, sv));
                        if (state == DiagonalState::Stuck) {
                            return RecognitionOutcome::reject_event(
                                idx + 1,
                                "4-subset {" + g.vertex_name(verts[0]) + "," + g.vertex_name(verts[1]) +
                                    "," + g.vertex_name(verts[2]) + "," + g.vertex_name(verts[3]) +
                                    "} cannot realize this crossing");
                        }
                    }
                }
            }
        }
    }
    return RecognitionOutcome::accept(initial);
}

}  // namespace mobility
