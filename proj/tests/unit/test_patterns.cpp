#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "mobility/clique.hpp"
#include "mobility/patterns.hpp"
#include "mobility/schedule.hpp"

using namespace mobility;
using testutil::make_graph;
using testutil::names_of;
using testutil::order_of;

TEST_CASE("violations on small cliques") {
    TemporalGraph g = make_graph("abc", {"ab", "bc", "ac"});
    auto v = violations(g, order_of(g, "abc"), clique4_patterns());
    REQUIRE(v.size() == 1);
    CHECK(v[0].pattern_id == "P2");
    CHECK(names_of(g, v[0].nodes) == "abc");

    TemporalGraph ok = make_graph("abc", {"ab", "ac", "bc"});
    CHECK(violations(ok, order_of(ok, "abc"), clique4_patterns()).empty());
}

TEST_CASE("forbidden edges must be absent") {
    // single edge ac: matches Q5 under order a,b,c
    TemporalGraph g = parse_graph("3\nv a\nv b\nv c\na c 1\n");
    auto v = violations(g, order_of(g, "abc"), atmost5_patterns());
    REQUIRE(v.size() == 1);
    CHECK(v[0].pattern_id == "Q5");

    // adding edge bc kills the Q5 match (bc forbidden) but enables none other
    TemporalGraph g2 = parse_graph("3\nv a\nv b\nv c\na c 1\nb c 2\n");
    auto v2 = violations(g2, order_of(g2, "abc"), atmost5_patterns());
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].pattern_id == "Q2");  // ac before bc with ab absent
    TemporalGraph g3 = parse_graph("3\nv a\nv b\nv c\nb c 1\na c 2\n");
    CHECK(violations(g3, order_of(g3, "abc"), atmost5_patterns()).empty());
}

TEST_CASE("ordering search") {
    TemporalGraph g = make_graph("abc", {"ab", "ac", "bc"});
    auto found = ordering_search(g, clique4_patterns());
    REQUIRE(found.has_value());
    CHECK(names_of(g, *found) == "abc");

    TemporalGraph g2 = make_graph("abc", {"ac", "ab", "bc"});
    auto found2 = ordering_search(g2, clique4_patterns());
    REQUIRE(found2.has_value());
    CHECK(names_of(g2, *found2) == "acb");
    CHECK(graph_replays_from(g2, *found2).accepted());

    TemporalGraph bad = parse_graph("4\n1 2 1\n3 4 2\n1 3 3\n2 4 4\n1 4 5\n2 3 6\n");
    CHECK_FALSE(ordering_search(bad, clique4_patterns()).has_value());

    TemporalGraph big = parse_graph("9\n" + [] {
        std::string s;
        int t = 1;
        for (char a = 'a'; a <= 'i'; ++a) {
            for (char b = static_cast<char>(a + 1); b <= 'i'; ++b) {
                s += std::string(1, a) + " " + std::string(1, b) + " " + std::to_string(t++) + "\n";
            }
        }
        return s;
    }());
    CHECK_THROWS_AS(ordering_search(big, clique4_patterns()), BoundExceededError);
}

TEST_CASE("mirror symmetry of violation sets") {
    auto mirror_pattern_id = [](const std::string& id) -> std::string {
        if (id == "P1") return "P3";
        if (id == "P3") return "P1";
        if (id == "P2") return "P4";
        if (id == "P4") return "P2";
        if (id == "Q1") return "Q2";
        if (id == "Q2") return "Q1";
        if (id == "Q3") return "Q4";
        if (id == "Q4") return "Q3";
        return id;  // Q5 is symmetric
    };
    std::mt19937_64 rng(31);
    const auto& patterns = atmost_once_patterns();
    for (int iter = 0; iter < 60; ++iter) {
        int n = 3 + static_cast<int>(rng() % 3);
        // random single-valued graph: random subset of pairs in random order
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
        std::vector<int> pi(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pi[static_cast<std::size_t>(i)] = i;
        std::shuffle(pi.begin(), pi.end(), rng);
        std::vector<int> rev(pi.rbegin(), pi.rend());

        auto direct = violations(g, pi, patterns);
        auto mirrored = violations(g, rev, patterns);
        // mirror each match: reverse the triple, map the pattern id
        std::vector<std::pair<std::string, std::vector<int>>> a, b;
        for (const auto& v : direct) a.push_back({v.pattern_id, v.nodes});
        for (const auto& v : mirrored) {
            std::vector<int> nodes(v.nodes.rbegin(), v.nodes.rend());
            b.push_back({mirror_pattern_id(v.pattern_id), nodes});
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("clique4 exclusion matches recognition on random 4-cliques") {
    std::vector<std::string> edges{"ab", "ac", "ad", "bc", "bd", "cd"};
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 30; ++iter) {
        std::shuffle(edges.begin(), edges.end(), rng);
        TemporalGraph g = make_graph("abcd", edges);
        bool via_patterns = ordering_search(g, clique4_patterns()).has_value();
        bool via_algorithm = recognize_clique(g).accepted();
        CHECK(via_patterns == via_algorithm);
    }
}
