#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mobility/outcome.hpp"
#include "mobility/temporal_graph.hpp"

namespace mobility {

/// Rotates a circular arrangement so the lexicographically smallest vertex
/// name comes first. Orientation is kept: reflections are distinct orderings.
std::vector<int> normalize_rotation(const TemporalGraph& g, std::vector<int> cycle);

struct CircularReplayResult {
    bool ok = false;
    std::vector<int> final_order;  // rotation-normalized
    std::size_t fail_index = 0;    // 1-based
};

/// Replays crossings on an oriented circle; adjacency includes the
/// wrap-around pair. Fails at the first crossing of non-adjacent agents.
CircularReplayResult circular_replay(const TemporalGraph& g, const std::vector<int>& initial,
                                     const std::vector<std::pair<int, int>>& crossings);

/// Brute force over all (n-1)! oriented circular orderings (rotations fixed
/// by anchoring the lexicographically smallest vertex). Witness is the
/// lexicographically least accepting ordering. Throws NotACliqueError /
/// BoundExceededError.
RecognitionOutcome recognize_circular_clique(const TemporalGraph& g, std::size_t bound = 9);

/// A forbidden prefix on four nodes placed clockwise as 0,1,2,3: the listed
/// crossings, in order, cannot start any full one-crossing schedule from that
/// arrangement, while every proper prefix can.
struct CircularPrefixPattern {
    std::vector<std::pair<int, int>> crossings;
};

/// Enumerates all 720 edge orders of the 4-clique against the canonical
/// arrangement and extracts the minimal non-completable prefixes,
/// deduplicated up to rotation of the arrangement.
std::vector<CircularPrefixPattern> derive_circular_forbidden_prefixes();

/// True when some rotation of `pi` maps a pattern's crossing list onto the
/// first events of the subsequence induced by a 4-subset of g. For 4-node
/// graphs this is plain prefix matching under rotation.
bool matches_circular_prefix(const TemporalGraph& g, const std::vector<int>& pi,
                             const CircularPrefixPattern& pattern);
bool any_circular_prefix_match(const TemporalGraph& g, const std::vector<int>& pi,
                               const std::vector<CircularPrefixPattern>& patterns);

/// For four agents on a circle: the partition of the 4-set into its two
/// non-adjacent ("diagonal") pairs, encoded by the partner of the smallest
/// slot (0: {s0,s1}/{s2,s3}, 1: {s0,s2}/{s1,s3}, 2: {s0,s3}/{s1,s2}).
enum class DiagonalState { Pair01, Pair02, Pair03, Stuck };

/// Which partition the slot pair {i, j} (0 <= i < j <= 3) belongs to.
DiagonalState diagonal_class(int i, int j);

/// Crossing one of the state's own diagonal pairs is impossible; crossing any
/// adjacent pair moves to the third partition.
DiagonalState circular_automaton_step(DiagonalState state, DiagonalState crossing_class);

/// Initial diagonal state of four agents from their circular arrangement
/// (given as slots of the sorted 4-subset, in circle order).
DiagonalState initial_diagonal_state(const std::array<int, 4>& circle_slots);

/// Accepts iff no 4-subset's crossing subsequence reaches Stuck when run from
/// its initial diagonal state; n <= 3 accepts unconditionally.
RecognitionOutcome check_circular_multicrossing(const TemporalGraph& g,
                                                const std::vector<int>& initial);

}  // namespace mobility
