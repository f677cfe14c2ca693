#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "mobility/clique.hpp"
#include "mobility/generators.hpp"
#include "mobility/schedule.hpp"

using namespace mobility;
using testutil::make_graph;
using testutil::names_of;
using testutil::order_of;

TEST_CASE("triangle extremities") {
    TemporalGraph g = make_graph("abc", {"ab", "ac", "bc"});
    TriangleVerdict t = triangle_extremities(g, 0, 1, 2);
    CHECK(t.middle == g.require_vertex("b"));

    // 12@1, 13@5, 23@6 -> median 5 on edge 13
    TemporalGraph g2 = parse_graph("3\n1 2 1\n1 3 5\n2 3 6\n");
    TriangleVerdict t2 = triangle_extremities(g2, 0, 1, 2);
    CHECK(t2.middle == g2.require_vertex("2"));

    // 13@3, 14@5, 34@2 -> median 3 on edge 13
    TemporalGraph g3 = parse_graph("3\n3 4 2\n1 3 3\n1 4 5\n");
    TriangleVerdict t3 =
        triangle_extremities(g3, g3.require_vertex("1"), g3.require_vertex("3"), g3.require_vertex("4"));
    CHECK(t3.middle == g3.require_vertex("4"));

    TemporalGraph missing = parse_graph("3\na b 1\na c 2\n");
    CHECK_THROWS_AS(triangle_extremities(missing, 0, 1, 2), MissingEdgeError);
}

TEST_CASE("extremal nodes") {
    TemporalGraph g = make_graph("abc", {"ab", "ac", "bc"});
    auto [x, y] = extremal_nodes(g, order_of(g, "abc"));
    CHECK(std::minmax(x, y) ==
          std::minmax(g.require_vertex("a"), g.require_vertex("c")));

    TemporalGraph g4 = parse_graph("4\n1 2 1\n3 4 2\n1 4 3\n2 4 4\n1 3 5\n2 3 6\n");
    auto [p, q] = extremal_nodes(g4, {0, 1, 2, 3});
    CHECK(std::minmax(p, q) ==
          std::minmax(g4.require_vertex("1"), g4.require_vertex("4")));

    auto pair2 = extremal_nodes(g, order_of(g, "bc"));
    CHECK(std::minmax(pair2.first, pair2.second) ==
          std::minmax(g.require_vertex("b"), g.require_vertex("c")));
}

TEST_CASE("vertex sorting") {
    TemporalGraph g4 = parse_graph("4\n1 2 1\n3 4 2\n1 4 3\n2 4 4\n1 3 5\n2 3 6\n");
    auto pi = vertex_sorting(g4);
    REQUIRE(pi.has_value());
    CHECK(names_of(g4, *pi) == "1234");

    TemporalGraph g3 = make_graph("abc", {"ab", "ac", "bc"});
    auto pi3 = vertex_sorting(g3);
    REQUIRE(pi3.has_value());
    CHECK(names_of(g3, *pi3) == "abc");

    TemporalGraph bad = parse_graph("4\n1 2 1\n3 4 2\n1 3 3\n2 4 4\n1 4 5\n2 3 6\n");
    CHECK_FALSE(vertex_sorting(bad).has_value());

    CHECK_THROWS_AS(vertex_sorting(parse_graph("3\nv c\na b 1\n")), NotACliqueError);
}

TEST_CASE("recognize_clique examples") {
    TemporalGraph g = make_graph("abc", {"ab", "ac", "bc"});
    RecognitionOutcome o = recognize_clique(g);
    REQUIRE(o.accepted());
    CHECK(names_of(g, o.ordering) == "abc");

    TemporalGraph bad = parse_graph("4\n1 2 1\n3 4 2\n1 3 3\n2 4 4\n1 4 5\n2 3 6\n");
    CHECK_FALSE(recognize_clique(bad).accepted());
}

TEST_CASE("all six 3-cliques are recognizable") {
    std::vector<std::string> edges{"ab", "ac", "bc"};
    std::sort(edges.begin(), edges.end());
    do {
        TemporalGraph g = make_graph("abc", edges);
        RecognitionOutcome o = recognize_clique(g);
        CHECK(o.accepted());
        CHECK(graph_replays_from(g, o.ordering).accepted());
    } while (std::next_permutation(edges.begin(), edges.end()));
}

TEST_CASE("small vertex counts") {
    TemporalGraph one = parse_graph("1\nv a\n");
    CHECK(recognize_clique(one).accepted());
    TemporalGraph two = make_graph("ab", {"ab"});
    RecognitionOutcome o = recognize_clique(two);
    REQUIRE(o.accepted());
    CHECK(names_of(two, o.ordering) == "ab");
    CHECK_THROWS_AS(recognize_clique(parse_graph("2\nv a\nv b\n")), NotACliqueError);
}

TEST_CASE("witness is canonical and its reverse also replays") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 3 + static_cast<int>(rng() % 4);
        Schedule s = random_schedule(n, static_cast<long long>(n) * (n - 1) / 2, rng(),
                                     ScheduleMode::Clique);
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
        TemporalGraph g = schedule_to_graph(s, names);
        RecognitionOutcome o = recognize_clique(g);
        REQUIRE(o.accepted());
        CHECK(g.vertex_name(o.ordering.front()) < g.vertex_name(o.ordering.back()));
        std::vector<int> rev(o.ordering.rbegin(), o.ordering.rend());
        CHECK(graph_replays_from(g, rev).accepted());
    }
}

TEST_CASE("no third ordering accepts") {
    // all 24 orderings of an accepted 4-clique: exactly pi and reverse(pi) replay
    TemporalGraph g = parse_graph("4\n1 2 1\n3 4 2\n1 4 3\n2 4 4\n1 3 5\n2 3 6\n");
    RecognitionOutcome o = recognize_clique(g);
    REQUIRE(o.accepted());
    std::vector<int> perm{0, 1, 2, 3};
    int accepting = 0;
    std::sort(perm.begin(), perm.end());
    do {
        if (graph_replays_from(g, perm).accepted()) ++accepting;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(accepting == 2);
}

TEST_CASE("verdict does not depend on the scan order") {
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 4 + static_cast<int>(rng() % 3);
        Schedule s = random_schedule(n, static_cast<long long>(n) * (n - 1) / 2, rng(),
                                     ScheduleMode::Clique);
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
        TemporalGraph g = schedule_to_graph(s, names);
        auto base = vertex_sorting(g);
        REQUIRE(base.has_value());
        std::vector<int> scan(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) scan[static_cast<std::size_t>(i)] = i;
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            std::shuffle(scan.begin(), scan.end(), rng);
            auto alt = vertex_sorting(g, &scan);
            REQUIRE(alt.has_value());
            CHECK(*alt == *base);
        }
    }
}
