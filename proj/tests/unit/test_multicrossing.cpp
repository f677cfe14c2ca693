#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <random>

#include "helpers.hpp"
#include "mobility/combinatorics.hpp"
#include "mobility/generators.hpp"
#include "mobility/multicrossing.hpp"
#include "mobility/schedule.hpp"

using namespace mobility;
using testutil::make_graph;
using testutil::names_of;

TEST_CASE("recognize_multicrossing examples") {
    TemporalGraph g = parse_graph("2\na b 1\na b 2\n");
    MulticrossingResult r = recognize_multicrossing(g);
    REQUIRE(r.accepted);
    REQUIRE(r.partition.lists.size() == 1);
    CHECK(names_of(g, r.partition.lists[0]) == "ab");

    TemporalGraph bad = parse_graph("4\na b 1\nc d 2\na c 3\nb d 4\n");
    MulticrossingResult rb = recognize_multicrossing(bad);
    CHECK_FALSE(rb.accepted);
    CHECK(rb.fail_event == 4);
    CHECK(rb.guard == MulticrossingResult::Guard::SameListNotAdjacent);

    TemporalGraph empty = parse_graph("3\nv a\nv b\nv c\n");
    MulticrossingResult re = recognize_multicrossing(empty);
    REQUIRE(re.accepted);
    CHECK(re.partition.lists.size() == 3);
}

TEST_CASE("initial ordering constraints") {
    TemporalGraph g = parse_graph("2\na b 1\n");
    MulticrossingResult r = initial_ordering_constraints(g);
    REQUIRE(r.accepted);
    REQUIRE(r.partition.lists.size() == 1);
    CHECK(r.partition.lists[0].size() == 2);

    CHECK_FALSE(initial_ordering_constraints(impossibility_family(3)).accepted);

    TemporalGraph empty = parse_graph("2\nv a\nv b\n");
    CHECK(initial_ordering_constraints(empty).partition.lists.size() == 2);
}

TEST_CASE("accepted graphs replay from a linearized initial partition") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        Schedule s = random_schedule(n, 1 + static_cast<long long>(rng() % 10), rng(),
                                     ScheduleMode::Multi);
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
        TemporalGraph g = schedule_to_graph(s, names);
        MulticrossingResult fwd = recognize_multicrossing(g);
        REQUIRE(fwd.accepted);
        MulticrossingResult init = initial_ordering_constraints(g);
        REQUIRE(init.accepted);
        CHECK(graph_replays_from(g, init.some_ordering()).accepted());
    }
}

TEST_CASE("triple words") {
    TemporalGraph g = parse_graph("3\nv z\nx y 1\nx y 5\n");
    std::vector<int> initial{g.require_vertex("x"), g.require_vertex("y"), g.require_vertex("z")};
    CHECK(triple_word(g, initial[0], initial[1], initial[2], initial) == "CC");

    TemporalGraph g2 = parse_graph("3\nv y\nx z 2\n");
    std::vector<int> init2{g2.require_vertex("x"), g2.require_vertex("y"), g2.require_vertex("z")};
    CHECK(triple_word(g2, init2[0], init2[1], init2[2], init2) == "B");

    TemporalGraph g3 = parse_graph("3\nx y 1\nx z 2\ny z 3\n");
    std::vector<int> init3{g3.require_vertex("x"), g3.require_vertex("y"), g3.require_vertex("z")};
    CHECK(triple_word(g3, init3[0], init3[1], init3[2], init3) == "CBA");
    CHECK_THROWS_AS(triple_word(g3, 0, 0, 1, init3), UnknownVertexError);
}

TEST_CASE("triple automaton") {
    CHECK(run_triple_automaton("") == TripleState::MiddleB);
    CHECK(run_triple_automaton("B") == TripleState::Stuck);
    CHECK(run_triple_automaton("CC") == TripleState::MiddleB);
    CHECK(run_triple_automaton("CB") == TripleState::MiddleC);
    CHECK(run_triple_automaton("CBA") == TripleState::MiddleB);
    CHECK(run_triple_automaton("BAAA") == TripleState::Stuck);
}

TEST_CASE("check_by_automaton examples") {
    TemporalGraph g = make_graph("abc", {"ab", "ac", "bc"});
    std::vector<int> abc{0, 1, 2};
    CHECK(check_by_automaton(g, abc).accepted());

    TemporalGraph g2 = parse_graph("3\nv a\nv b\na c 1\n");
    std::vector<int> init{g2.require_vertex("a"), g2.require_vertex("b"), g2.require_vertex("c")};
    RecognitionOutcome o = check_by_automaton(g2, init);
    CHECK_FALSE(o.accepted());
    CHECK(o.event_index == 1);

    TemporalGraph fam = impossibility_family(4);
    std::vector<int> natural{0, 1, 2, 3};
    CHECK_FALSE(check_by_automaton(fam, natural).accepted());
}

TEST_CASE("impossibility family") {
    TemporalGraph f3 = impossibility_family(3);
    CHECK(f3.event_count() == 6);
    CHECK(serialize_graph(f3) ==
          "3\nv v1\nv v2\nv v3\nv1 v2 1\nv1 v2 2\nv2 v3 3\nv2 v3 4\nv1 v3 5\nv1 v3 6\n");
    MulticrossingResult r = recognize_multicrossing(f3);
    CHECK_FALSE(r.accepted);
    CHECK(r.fail_event == 5);

    for (int k = 3; k <= 8; ++k) {
        TemporalGraph f = impossibility_family(k);
        CHECK_FALSE(recognize_multicrossing(f).accepted);
        for (int drop = 0; drop < k; ++drop) {
            std::vector<int> keep;
            for (int v = 0; v < k; ++v) {
                if (v != drop) keep.push_back(v);
            }
            TemporalGraph sub = induced_subgraph_indices(f, keep);
            CHECK(recognize_multicrossing(sub).accepted);
        }
    }
}

TEST_CASE("accepted single-valued graphs: footprint equals the inversion set") {
    std::mt19937_64 rng(43);
    int checked = 0;
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        // random single-valued event sequences, feasible or not
        std::vector<std::pair<int, int>> pool;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) pool.emplace_back(i, j);
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(rng() % (pool.size() + 1));
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
        std::vector<TemporalEvent> events;
        for (std::size_t t = 0; t < pool.size(); ++t) {
            events.push_back({pool[t].first, pool[t].second, static_cast<std::int64_t>(t) + 1});
        }
        TemporalGraph g = TemporalGraph::make(names, std::move(events));
        MulticrossingResult init = initial_ordering_constraints(g);
        if (!init.accepted) continue;
        std::vector<int> initial = init.some_ordering();
        RecognitionOutcome replayed = graph_replays_from(g, initial);
        REQUIRE(replayed.accepted());
        auto inversions = inversion_graph(initial, replayed.final_ordering);
        CHECK(g.footprint_edges() == inversions);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("million event scan stays fast") {
    const int n = 500;
    Schedule s = random_schedule(n, 1000000, 99, ScheduleMode::Multi);
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    TemporalGraph g = schedule_to_graph(s, names);
    auto start = std::chrono::steady_clock::now();
    MulticrossingResult r = recognize_multicrossing(g);
    auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(r.accepted);
    CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() < 2000);
}
