#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mobility/clique.hpp"
#include "mobility/generators.hpp"
#include "mobility/multicrossing.hpp"
#include "mobility/schedule.hpp"
#include "mobility/temporal_graph.hpp"

using namespace mobility;
using testutil::make_graph;

TEST_CASE("parse basic clique") {
    TemporalGraph g = parse_graph("3\na b 1\na c 2\nb c 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.event_count() == 3);
    CHECK(g.is_clique());
    CHECK(g.is_single_valued());
}

TEST_CASE("parse multiplicity") {
    TemporalGraph g = parse_graph("2\na b 1\na b 2\n");
    CHECK_FALSE(g.is_single_valued());
    int a = g.require_vertex("a");
    int b = g.require_vertex("b");
    CHECK(g.times(a, b) == std::vector<std::int64_t>{1, 2});
    CHECK(g.times(b, a) == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("parse rejects non-increasing times") {
    CHECK_THROWS_AS(parse_graph("2\na b 2\na b 1\n"), ParseError);
    try {
        parse_graph("2\na b 2\na b 1\n");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::NonIncreasingTime);
        CHECK(e.line() == 3);
    }
}

TEST_CASE("parse error kinds") {
    CHECK_THROWS_AS(parse_graph("1\na a 1\n"), ParseError);
    try {
        parse_graph("2\na a 1\n");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::SelfLoop);
    }
    try {
        parse_graph("2\na b 1\na c 2\n");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::UnknownVertex);
        CHECK(e.line() == 3);
    }
    try {
        parse_graph("x\n");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::Syntax);
    }
    // declared vertices never used
    CHECK_THROWS_AS(parse_graph("3\na b 1\n"), ParseError);
}

TEST_CASE("comments, blanks and declarations") {
    TemporalGraph g = parse_graph("# a clique\n3\n\nv c  # isolated until time 3\na b 1 # first\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.event_count() == 1);
    CHECK(g.vertices() == std::vector<std::string>{"c", "a", "b"});
}

TEST_CASE("serialize then parse is the identity") {
    TemporalGraph g = parse_graph("4\nv d\na b 1\na c 5\nb c 9\n");
    std::string text = serialize_graph(g);
    TemporalGraph h = parse_graph(text);
    CHECK(h.vertices() == g.vertices());
    CHECK(h.event_count() == g.event_count());
    CHECK(serialize_graph(h) == text);
}

TEST_CASE("canonical_times ranks and is idempotent") {
    TemporalGraph g = parse_graph("3\na b 5\na c 9\nb c 40\n");
    TemporalGraph c = canonical_times(g);
    CHECK(c.events()[0].time == 1);
    CHECK(c.events()[1].time == 2);
    CHECK(c.events()[2].time == 3);
    CHECK(serialize_graph(canonical_times(c)) == serialize_graph(c));

    TemporalGraph empty = parse_graph("1\nv a\n");
    CHECK(canonical_times(empty).event_count() == 0);
}

TEST_CASE("induced subgraph keeps order and times") {
    TemporalGraph g = make_graph("abc", {"ab", "ac", "bc"});
    TemporalGraph sub = induced_subgraph(g, {"a", "b"});
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.event_count() == 1);
    CHECK(sub.events()[0].time == 1);

    TemporalGraph all = induced_subgraph(g, {"a", "b", "c"});
    CHECK(serialize_graph(all) == serialize_graph(g));

    TemporalGraph lone = induced_subgraph(g, {"a"});
    CHECK(lone.event_count() == 0);

    CHECK_THROWS_AS(induced_subgraph(g, {"z"}), UnknownVertexError);
}

TEST_CASE("recognition verdicts are invariant under canonical_times") {
    TemporalGraph g = parse_graph("3\na b 7\na c 19\nb c 100\n");
    CHECK(recognize_clique(g).accepted() == recognize_clique(canonical_times(g)).accepted());

    TemporalGraph bad = parse_graph("4\na b 2\nc d 4\na c 8\nb d 16\n");
    CHECK(recognize_multicrossing(bad).accepted ==
          recognize_multicrossing(canonical_times(bad)).accepted);
}

TEST_CASE("round trip on random generated schedules") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        Schedule s = random_schedule(n, 8, rng(), ScheduleMode::Multi);
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        TemporalGraph g = schedule_to_graph(s, names);
        CHECK(serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g));
    }
}
