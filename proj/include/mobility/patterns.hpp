#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mobility/temporal_graph.hpp"

namespace mobility {

/// A small ordered temporal pattern: k nodes in fixed left-to-right order,
/// edges given by their relative appearance ranks, plus pairs required to be
/// non-edges in a match. Patterns are data so recognizers and tests can share
/// one matcher.
struct OrderedPattern {
    std::string id;
    int k = 3;
    // ((i, j), rank) with node positions i < j and ranks 1..m giving the
    // required relative appearance order of the present edges.
    std::vector<std::pair<std::pair<int, int>, int>> timed_edges;
    std::vector<std::pair<int, int>> forbidden_edges;
};

/// The four forbidden triangle patterns of the exactly-once line model: every
/// assignment where the median-time edge touches the middle node.
const std::vector<OrderedPattern>& clique4_patterns();

/// The five extra patterns with required non-edges for the at-most-once line
/// model.
const std::vector<OrderedPattern>& atmost5_patterns();

/// clique4 and atmost5 combined.
const std::vector<OrderedPattern>& atmost_once_patterns();

struct PatternViolation {
    std::string pattern_id;
    std::vector<int> nodes;  // matched vertices, listed in ordering position
};

/// All pattern matches of `patterns` in g under ordering `pi`, sorted by node
/// triple then pattern id. Empty result means `pi` excludes the set. O(n^3).
/// Requires a single-valued graph.
std::vector<PatternViolation> violations(const TemporalGraph& g, const std::vector<int>& pi,
                                         const std::vector<OrderedPattern>& patterns);

/// Early-exit variant of `violations`.
bool excludes_patterns(const TemporalGraph& g, const std::vector<int>& pi,
                       const std::vector<OrderedPattern>& patterns);

/// Brute-force search for an ordering with zero violations, scanning
/// orderings in lexicographic vertex-name order. Factorial cost; throws
/// BoundExceededError when vertex count exceeds `bound`.
std::optional<std::vector<int>> ordering_search(const TemporalGraph& g,
                                                const std::vector<OrderedPattern>& patterns,
                                                std::size_t bound = 8);

}  // namespace mobility
