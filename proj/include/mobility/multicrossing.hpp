#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mobility/outcome.hpp"
#include "mobility/temporal_graph.hpp"

namespace mobility {

/// Disjoint lists of vertices, each known to be consecutive (in one direction
/// or the other) in every ordering consistent with the events seen so far.
/// Any concatenation of the lists, each possibly reversed, is consistent.
struct ListPartition {
    std::vector<std::vector<int>> lists;
};

struct MulticrossingResult {
    enum class Guard { None, SameListNotAdjacent, NotJoinableExtremities };

    bool accepted = false;
    ListPartition partition;     // on accept: constraints on the final ordering
    std::size_t fail_event = 0;  // 1-based, on reject
    Guard guard = Guard::None;

    // One ordering consistent with the partition.
    std::vector<int> some_ordering() const;
};

/// Scans events once, maintaining the list partition: crossing vertices that
/// are list neighbors get exchanged; extremities of two distinct lists get
/// concatenated (so they become neighbors) and exchanged; anything else is a
/// rejection. O(n + M). The neighbor case is checked first, which settles
/// the length-2 list ambiguity where both vertices are also extremities.
MulticrossingResult recognize_multicrossing(const TemporalGraph& g);

/// Same scan over the time-reversed event sequence; the resulting partition
/// constrains the possible initial orderings.
MulticrossingResult initial_ordering_constraints(const TemporalGraph& g);

/// Current middle vertex of a tracked triple, or Stuck once an impossible
/// crossing was seen.
enum class TripleState { MiddleA, MiddleB, MiddleC, Stuck };

/// Events within a triple as letters: after renaming so the initial
/// left-to-right restriction is (a, b, c), each letter names the vertex NOT
/// involved: C = ab, A = bc, B = ac.
std::string triple_word(const TemporalGraph& g, int x, int y, int z,
                        const std::vector<int>& initial);

/// Runs the three-state feasibility automaton from MiddleB. Transitions:
/// A swaps b/c, B swaps a/c, C swaps a/b; a letter naming the current middle
/// vertex's opposite edge (A from a, B from b, C from c) sticks at Stuck.
TripleState run_triple_automaton(std::string_view word);
TripleState step_triple_automaton(TripleState state, char letter);

/// Accepts iff no vertex triple's letter word reaches Stuck. O(n^3 + M*n);
/// meant as an oracle and diagnostic next to recognize_multicrossing, which
/// needs no initial ordering.
RecognitionOutcome check_by_automaton(const TemporalGraph& g, const std::vector<int>& initial);

/// k vertices v1..vk with events (v1v2)^2 (v2v3)^2 ... (v(k-1)vk)^2 (v1vk)^2:
/// not a multicrossing graph, yet every (k-1)-vertex induced subgraph is.
TemporalGraph impossibility_family(int k);

}  // namespace mobility
