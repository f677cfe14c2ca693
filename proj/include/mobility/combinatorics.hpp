#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mobility/schedule.hpp"

namespace mobility {

using BigCount = boost::multiprecision::cpp_int;

/// Number of ways to sort the reverse permutation of n elements by adjacent
/// transpositions in the minimum number of steps:
/// (n choose 2)! / (1^(n-1) * 3^(n-2) * ... * (2n-3)^1), evaluated exactly.
BigCount count_reduced_words(int n);

/// Number of line mobility cliques on n nodes up to isomorphism:
/// count_reduced_words(n) / 2 for n >= 3, and 1 for n <= 2.
BigCount count_1d_cliques(int n);

/// Depth-first enumeration of every schedule from the identity ordering in
/// which each pair of agents crosses exactly once. The visitor may return
/// false to stop early. Throws BoundExceededError when n > bound.
void enumerate_clique_schedules(int n, const std::function<bool(const Schedule&)>& visit,
                                int bound = 6);
std::vector<Schedule> collect_clique_schedules(int n, int bound = 6);

/// Counts isomorphism classes by canonical form: the lexicographically least
/// event pair sequence over all vertex relabelings. Inputs must share the
/// same vertex count n <= max_n (BoundExceededError otherwise).
BigCount dedupe_isomorphism_classes(const std::vector<TemporalGraph>& graphs, int max_n = 5);

/// Edges between elements ordered oppositely by the two orderings.
std::vector<std::pair<int, int>> inversion_graph(const std::vector<int>& initial,
                                                 const std::vector<int>& final_order);

}  // namespace mobility
