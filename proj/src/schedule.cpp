#include "mobility/schedule.hpp"

#include <algorithm>
#include <cstdlib>

namespace mobility {

ReplayResult replay(const std::vector<int>& initial,
                    const std::vector<std::pair<int, int>>& crossings) {
    const int n = static_cast<int>(initial.size());
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<int> order = initial;
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) {
            throw UnknownVertexError("initial ordering is not a permutation");
        }
        pos[static_cast<std::size_t>(v)] = i;
    }
    ReplayResult res;
    for (std::size_t k = 0; k < crossings.size(); ++k) {
        auto [u, v] = crossings[k];
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
            throw UnknownVertexError("crossing pair outside the ordering");
        }
        int pu = pos[static_cast<std::size_t>(u)];
        int pv = pos[static_cast<std::size_t>(v)];
        if (std::abs(pu - pv) != 1) {
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

TemporalGraph schedule_to_graph(const Schedule& s, const std::vector<std::string>& names) {
    if (names.size() != s.initial.size()) {
        throw VertexMismatchError("one name per agent required");
    }
    ReplayResult r = replay(s.initial, s.crossings);
    if (!r.ok) {
        throw InvalidScheduleError(r.fail_index,
                                   "crossing " + std::to_string(r.fail_index) + " is not adjacent");
    }
    std::vector<TemporalEvent> events;
    events.reserve(s.crossings.size());
    for (std::size_t k = 0; k < s.crossings.size(); ++k) {
        events.push_back({s.crossings[k].first, s.crossings[k].second,
                          static_cast<std::int64_t>(k) + 1});
    }
    return TemporalGraph::make(names, std::move(events));
}

RecognitionOutcome graph_replays_from(const TemporalGraph& g, const std::vector<int>& initial) {
    std::vector<std::pair<int, int>> crossings;
    crossings.reserve(g.event_count());
    for (const TemporalEvent& e : g.events()) crossings.emplace_back(e.u, e.v);
    ReplayResult r = replay(initial, crossings);
    if (!r.ok) return RecognitionOutcome::reject_event(r.fail_index);
    return RecognitionOutcome::accept(initial, std::move(r.final_order));
}

}  // namespace mobility
