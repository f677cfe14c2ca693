#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mobility/outcome.hpp"
#include "mobility/temporal_graph.hpp"

namespace mobility {

/// Result of the triangle median rule: the edge with the median time joins
/// the two agents that sit outside; the remaining agent starts between them.
struct TriangleVerdict {
    std::pair<int, int> extremes;
    int middle = -1;
};

/// Requires all three edges of {u,v,w} to be present exactly once
/// (MissingEdgeError otherwise).
TriangleVerdict triangle_extremities(const TemporalGraph& g, int u, int v, int w);

/// Folds the triangle rule over `subset` (|subset| >= 2), eliminating the
/// middle of a running triple; the order of `subset` fixes the pick order.
/// On recognizable cliques the result does not depend on that order.
std::pair<int, int> extremal_nodes(const TemporalGraph& g, const std::vector<int>& subset);

/// Candidate initial ordering for a temporal clique, or nullopt when the
/// extremal-pair bookkeeping contradicts itself. The returned ordering is
/// canonical: its first vertex name precedes its last. `scan_order`, when
/// given, fixes the internal consideration order (used to test that the
/// verdict is independent of it).
std::optional<std::vector<int>> vertex_sorting(const TemporalGraph& g,
                                               const std::vector<int>* scan_order = nullptr);

/// Full recognizer for 1D line mobility cliques: vertex sorting followed by a
/// replay of all events from the candidate ordering. Runs in O(n^2) = O(M).
/// Throws NotACliqueError when g is not a temporal clique.
RecognitionOutcome recognize_clique(const TemporalGraph& g);

}  // namespace mobility
