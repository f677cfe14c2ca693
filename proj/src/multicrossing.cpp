#include "mobility/multicrossing.hpp"

#include <algorithm>
#include <array>

namespace mobility {

std::vector<int> MulticrossingResult::some_ordering() const {
    std::vector<int> out;
    for (const auto& list : partition.lists) out.insert(out.end(), list.begin(), list.end());
    return out;
}

namespace {

// Paths over the vertex set: nbr holds up to two list neighbors per vertex;
// ends and list ids are tracked only for extremities so concatenation is O(1).
class PathPartition {
public:
    explicit PathPartition(int n) : n_(n), nbr_(static_cast<std::size_t>(n), {-1, -1}) {
        list_of_.resize(static_cast<std::size_t>(n));
        ends_.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            list_of_[static_cast<std::size_t>(v)] = v;
            ends_.push_back({v, v, true});
        }
    }

    bool neighbors(int u, int v) const {
        const auto& a = nbr_[static_cast<std::size_t>(u)];
        return a[0] == v || a[1] == v;
    }

    int degree(int v) const {
        const auto& a = nbr_[static_cast<std::size_t>(v)];
        return (a[0] != -1) + (a[1] != -1);
    }

    bool is_extremity(int v) const { return list_of_[static_cast<std::size_t>(v)] != -1; }

    bool joinable(int u, int v) const {
        int lu = list_of_[static_cast<std::size_t>(u)];
        int lv = list_of_[static_cast<std::size_t>(v)];
        return lu != -1 && lv != -1 && lu != lv;
    }

    // Precondition: joinable(u, v). Links u-v and exchanges them.
    void concat_and_swap(int u, int v) {
        int lu = list_of_[static_cast<std::size_t>(u)];
        int lv = list_of_[static_cast<std::size_t>(v)];
        int far_u = other_end(lu, u);
        int far_v = other_end(lv, v);
        add_neighbor(u, v);
        add_neighbor(v, u);
        ends_[static_cast<std::size_t>(lv)].alive = false;
        ends_[static_cast<std::size_t>(lu)].e0 = far_u;
        ends_[static_cast<std::size_t>(lu)].e1 = far_v;
        list_of_[static_cast<std::size_t>(u)] = (far_u == u) ? lu : -1;
        list_of_[static_cast<std::size_t>(v)] = -1;
        list_of_[static_cast<std::size_t>(far_u)] = lu;
        list_of_[static_cast<std::size_t>(far_v)] = lu;
        swap_adjacent(u, v);
    }

    // Precondition: neighbors(u, v). Exchanges their positions in the path.
    void swap_adjacent(int u, int v) {
        int x = other_neighbor(u, v);
        int y = other_neighbor(v, u);
        // x-u-v-y becomes x-v-u-y
        set_neighbors(u, v, y);
        set_neighbors(v, u, x);
        if (x != -1) replace_neighbor(x, u, v);
        if (y != -1) replace_neighbor(y, v, u);
        int lu = list_of_[static_cast<std::size_t>(u)];
        int lv = list_of_[static_cast<std::size_t>(v)];
        int list = lu != -1 ? lu : lv;
        if (list == -1) return;  // both interior, ends unchanged
        auto& e = ends_[static_cast<std::size_t>(list)];
        if (e.e0 == u) e.e0 = v; else if (e.e0 == v) e.e0 = u;
        if (e.e1 == u) e.e1 = v; else if (e.e1 == v) e.e1 = u;
        list_of_[static_cast<std::size_t>(u)] = (e.e0 == u || e.e1 == u) ? list : -1;
        list_of_[static_cast<std::size_t>(v)] = (e.e0 == v || e.e1 == v) ? list : -1;
    }

    // For the reject diagnostic only: walks u's path looking for v.
    bool same_list(int u, int v) const {
        int prev = -1;
        int cur = u;
        // walk to one end first
        while (true) {
            const auto& a = nbr_[static_cast<std::size_t>(cur)];
            int next = (a[0] != prev && a[0] != -1) ? a[0] : (a[1] != prev ? a[1] : -1);
            if (next == -1) break;
            prev = cur;
            cur = next;
        }
        prev = -1;
        while (cur != -1) {
            if (cur == v) return true;
            const auto& a = nbr_[static_cast<std::size_t>(cur)];
            int next = (a[0] != prev && a[0] != -1) ? a[0] : (a[1] != prev ? a[1] : -1);
            prev = cur;
            cur = next;
        }
        return false;
    }

    ListPartition collect() const {
        ListPartition out;
        for (const auto& e : ends_) {
            if (!e.alive) continue;
            std::vector<int> list;
            int prev = -1;
            int cur = e.e0;
            while (cur != -1) {
                list.push_back(cur);
                const auto& a = nbr_[static_cast<std::size_t>(cur)];
                int next = (a[0] != prev && a[0] != -1) ? a[0] : (a[1] != prev ? a[1] : -1);
                prev = cur;
                cur = next;
            }
            out.lists.push_back(std::move(list));
        }
        return out;
    }

private:
    struct Ends {
        int e0, e1;
        bool alive;
    };

    int other_end(int list, int v) const {
        const auto& e = ends_[static_cast<std::size_t>(list)];
        return e.e0 == v ? e.e1 : e.e0;
    }

    int other_neighbor(int v, int than) const {
        const auto& a = nbr_[static_cast<std::size_t>(v)];
        return a[0] == than ? a[1] : a[0];
    }

    void add_neighbor(int v, int w) {
        auto& a = nbr_[static_cast<std::size_t>(v)];
        (a[0] == -1 ? a[0] : a[1]) = w;
    }

    void set_neighbors(int v, int w0, int w1) {
        nbr_[static_cast<std::size_t>(v)] = {w0, w1};
    }

    void replace_neighbor(int v, int from, int to) {
        auto& a = nbr_[static_cast<std::size_t>(v)];
        (a[0] == from ? a[0] : a[1]) = to;
    }

    int n_;
    std::vector<std::array<int, 2>> nbr_;
    std::vector<int> list_of_;
    std::vector<Ends> ends_;
};

void canonicalize(const TemporalGraph& g, ListPartition& p) {
    for (auto& list : p.lists) {
        if (list.size() >= 2 && g.vertex_name(list.back()) < g.vertex_name(list.front())) {
            std::reverse(list.begin(), list.end());
        }
    }
    std::sort(p.lists.begin(), p.lists.end(), [&](const auto& a, const auto& b) {
        return g.vertex_name(a.front()) < g.vertex_name(b.front());
    });
}

MulticrossingResult run_partition_scan(const TemporalGraph& g, bool reversed) {
    const int n = static_cast<int>(g.vertex_count());
    PathPartition part(n);
    MulticrossingResult res;
    const auto& events = g.events();
    const std::size_t m = events.size();
    for (std::size_t i = 0; i < m; ++i) {
        const TemporalEvent& e = events[reversed ? m - 1 - i : i];
        if (part.neighbors(e.u, e.v)) {
            part.swap_adjacent(e.u, e.v);
        } else if (part.degree(e.u) <= 1 && part.degree(e.v) <= 1 && part.joinable(e.u, e.v)) {
            part.concat_and_swap(e.u, e.v);
        } else {
            res.fail_event = (reversed ? m - 1 - i : i) + 1;
            res.guard = part.same_list(e.u, e.v) ? MulticrossingResult::Guard::SameListNotAdjacent
                                                 : MulticrossingResult::Guard::NotJoinableExtremities;
            return res;
        }
    }
    res.accepted = true;
    res.partition = part.collect();
    canonicalize(g, res.partition);
    return res;
}

}  // namespace

MulticrossingResult recognize_multicrossing(const TemporalGraph& g) {
    return run_partition_scan(g, /*reversed=*/false);
}

MulticrossingResult initial_ordering_constraints(const TemporalGraph& g) {
    return run_partition_scan(g, /*reversed=*/true);
}

std::string triple_word(const TemporalGraph& g, int x, int y, int z,
                        const std::vector<int>& initial) {
    const int n = static_cast<int>(g.vertex_count());
    if (x == y || y == z || x == z || x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n) {
        throw UnknownVertexError("triple must name three distinct vertices");
    }
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < initial.size(); ++i) {
        pos[static_cast<std::size_t>(initial[i])] = static_cast<int>(i);
    }
    std::array<int, 3> triple{x, y, z};
    for (int v : triple) {
        if (pos[static_cast<std::size_t>(v)] < 0) {
            throw UnknownVertexError("initial ordering must cover the triple");
        }
    }
    // a, b, c = the triple in initial left-to-right order
    std::sort(triple.begin(), triple.end(),
              [&](int p, int q) { return pos[static_cast<std::size_t>(p)] < pos[static_cast<std::size_t>(q)]; });
    std::string word;
    for (const TemporalEvent& e : g.events()) {
        bool has_u = e.u == triple[0] || e.u == triple[1] || e.u == triple[2];
        bool has_v = e.v == triple[0] || e.v == triple[1] || e.v == triple[2];
        if (!has_u || !has_v) continue;
        int absent;
        if (e.u != triple[0] && e.v != triple[0]) absent = 0;
        else if (e.u != triple[1] && e.v != triple[1]) absent = 1;
        else absent = 2;
        word += static_cast<char>('A' + absent);
    }
    return word;
}

TripleState step_triple_automaton(TripleState state, char letter) {
    if (state == TripleState::Stuck) return state;
    switch (letter) {
        case 'A':  // crossing of b and c
            if (state == TripleState::MiddleA) return TripleState::Stuck;
            return state == TripleState::MiddleB ? TripleState::MiddleC : TripleState::MiddleB;
        case 'B':  // crossing of a and c
            if (state == TripleState::MiddleB) return TripleState::Stuck;
            return state == TripleState::MiddleA ? TripleState::MiddleC : TripleState::MiddleA;
        case 'C':  // crossing of a and b
            if (state == TripleState::MiddleC) return TripleState::Stuck;
            return state == TripleState::MiddleA ? TripleState::MiddleB : TripleState::MiddleA;
        default:
            throw MobilityError("letters must be A, B or C");
    }
}

TripleState run_triple_automaton(std::string_view word) {
    TripleState state = TripleState::MiddleB;
    for (char c : word) state = step_triple_automaton(state, c);
    return state;
}

RecognitionOutcome check_by_automaton(const TemporalGraph& g, const std::vector<int>& initial) {
    const int n = static_cast<int>(g.vertex_count());
    if (static_cast<int>(initial.size()) != n) {
        throw VertexMismatchError("initial ordering must cover all vertices");
    }
    // Group event indices by pair so each triple only touches its own events.
    std::vector<std::vector<std::pair<std::size_t, std::pair<int, int>>>> by_pair;
    std::unordered_map<std::uint64_t, std::size_t> pair_slot;
    for (std::size_t i = 0; i < g.event_count(); ++i) {
        const TemporalEvent& e = g.events()[i];
        int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        std::uint64_t key = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) + b;
        auto [it, fresh] = pair_slot.emplace(key, by_pair.size());
        if (fresh) by_pair.emplace_back();
        by_pair[it->second].push_back({i, {a, b}});
    }

    auto slot = [&](int a, int b) -> const std::vector<std::pair<std::size_t, std::pair<int, int>>>* {
        std::uint64_t key = static_cast<std::uint64_t>(std::min(a, b)) * static_cast<std::uint64_t>(n) +
                            static_cast<std::uint64_t>(std::max(a, b));
        auto it = pair_slot.find(key);
        return it == pair_slot.end() ? nullptr : &by_pair[it->second];
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                int a = initial[static_cast<std::size_t>(i)];
                int b = initial[static_cast<std::size_t>(j)];
                int c = initial[static_cast<std::size_t>(k)];
                // letters: C = ab, A = bc, B = ac
                const auto* ec = slot(a, b);
                const auto* ea = slot(b, c);
                const auto* eb = slot(a, c);
                std::size_t pc = 0, pa = 0, pb = 0;
                TripleState state = TripleState::MiddleB;
                while (true) {
                    std::size_t next_idx = SIZE_MAX;
                    char letter = 0;
                    if (ec && pc < ec->size() && (*ec)[pc].first < next_idx) {
                        next_idx = (*ec)[pc].first;
                        letter = 'C';
                    }
                    if (ea && pa < ea->size() && (*ea)[pa].first < next_idx) {
                        next_idx = (*ea)[pa].first;
                        letter = 'A';
                    }
                    if (eb && pb < eb->size() && (*eb)[pb].first < next_idx) {
                        next_idx = (*eb)[pb].first;
                        letter = 'B';
                    }
                    if (letter == 0) break;
                    if (letter == 'C') ++pc;
                    if (letter == 'A') ++pa;
                    if (letter == 'B') ++pb;
                    state = step_triple_automaton(state, letter);
                    if (state == TripleState::Stuck) {
                        return RecognitionOutcome::reject_event(
                            next_idx + 1, "triple {" + g.vertex_name(a) + "," + g.vertex_name(b) +
                                              "," + g.vertex_name(c) + "} cannot realize this crossing");
                    }
                }
            }
        }
    }
    RecognitionOutcome out = RecognitionOutcome::accept(initial);
    return out;
}

TemporalGraph impossibility_family(int k) {
    if (k < 3) throw MobilityError("impossibility_family requires k >= 3");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) names.push_back("v" + std::to_string(i));
    std::vector<TemporalEvent> events;
    std::int64_t t = 1;
    for (int i = 0; i + 1 < k; ++i) {
        events.push_back({i, i + 1, t++});
        events.push_back({i, i + 1, t++});
    }
    events.push_back({0, k - 1, t++});
    events.push_back({0, k - 1, t++});
    return TemporalGraph::make(std::move(names), std::move(events));
}

}  // namespace mobility
