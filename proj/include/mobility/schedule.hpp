#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mobility/outcome.hpp"
#include "mobility/temporal_graph.hpp"

namespace mobility {

/// A line of agents plus a sequence of crossings. Each crossing swaps two
/// agents that are adjacent at that moment; agents are vertex indices.
struct Schedule {
    std::vector<int> initial;
    std::vector<std::pair<int, int>> crossings;
};

struct ReplayResult {
    bool ok = false;
    std::vector<int> final_order;  // set on success
    std::size_t fail_index = 0;    // 1-based index of the first infeasible crossing
};

/// Applies each crossing in turn; a crossing of a pair that is not currently
/// adjacent stops the replay and reports its 1-based index. O(T).
ReplayResult replay(const std::vector<int>& initial,
                    const std::vector<std::pair<int, int>>& crossings);

/// Builds the temporal graph of a schedule: crossing k becomes an event at
/// time k. Throws InvalidScheduleError when the replay fails.
TemporalGraph schedule_to_graph(const Schedule& s, const std::vector<std::string>& names);

/// Reads the graph's events in time order as crossings from `initial`.
RecognitionOutcome graph_replays_from(const TemporalGraph& g, const std::vector<int>& initial);

}  // namespace mobility
