#include "mobility/generators.hpp"

#include <algorithm>
#include <random>

namespace mobility {

using boost::multiprecision::cpp_int;

Rational::Rational(cpp_int n, cpp_int d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw MobilityError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    cpp_int g = boost::multiprecision::gcd(num < 0 ? cpp_int(-num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return {cpp_int(text), 1};
        return {cpp_int(text.substr(0, slash)), cpp_int(text.substr(slash + 1))};
    } catch (const std::exception&) {
        throw MobilityError("invalid rational '" + text + "'");
    }
}

Rational Rational::operator-(const Rational& o) const {
    return {num * o.den - o.num * den, den * o.den};
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw MobilityError("division by zero");
    return {num * o.den, den * o.num};
}

std::string Rational::str() const {
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

TemporalGraph constant_speed_graph(const ConstantSpeedConfig& cfg) {
    const int n = static_cast<int>(cfg.agents.size());
    if (n < 1) throw MobilityError("at least one agent required");
    for (int i = 0; i + 1 < n; ++i) {
        if (!(cfg.agents[static_cast<std::size_t>(i)].position <
              cfg.agents[static_cast<std::size_t>(i) + 1].position)) {
            throw MobilityError("positions must be strictly increasing");
        }
        if (!(cfg.agents[static_cast<std::size_t>(i) + 1].speed <
              cfg.agents[static_cast<std::size_t>(i)].speed)) {
            throw MobilityError("speeds must be strictly decreasing");
        }
    }
    struct Crossing {
        Rational time;
        int i, j;
    };
    std::vector<Crossing> crossings;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rational dt = (cfg.agents[static_cast<std::size_t>(j)].position -
                           cfg.agents[static_cast<std::size_t>(i)].position) /
                          (cfg.agents[static_cast<std::size_t>(i)].speed -
                           cfg.agents[static_cast<std::size_t>(j)].speed);
            crossings.push_back({std::move(dt), i, j});
        }
    }
    std::stable_sort(crossings.begin(), crossings.end(),
                     [](const Crossing& a, const Crossing& b) { return a.time < b.time; });
    for (std::size_t k = 0; k + 1 < crossings.size(); ++k) {
        if (crossings[k].time == crossings[k + 1].time) {
            throw CoincidentCrossingsError(
                "pairs share crossing time " + crossings[k].time.str());
        }
    }
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (const SpeedAgent& a : cfg.agents) names.push_back(a.name);
    std::vector<TemporalEvent> events;
    events.reserve(crossings.size());
    for (std::size_t k = 0; k < crossings.size(); ++k) {
        events.push_back({crossings[k].i, crossings[k].j, static_cast<std::int64_t>(k) + 1});
    }
    return TemporalGraph::make(std::move(names), std::move(events));
}

Schedule random_schedule(int n, long long T, std::uint64_t seed, ScheduleMode mode) {
    if (n < 1) throw MobilityError("random_schedule requires n >= 1");
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (mode == ScheduleMode::Clique && T != pairs) {
        throw MobilityError("clique schedules need exactly n(n-1)/2 crossings");
    }
    std::mt19937_64 rng(seed);
    Schedule s;
    s.initial.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.initial[static_cast<std::size_t>(i)] = i;
    std::vector<int> order = s.initial;

    if (mode == ScheduleMode::Multi) {
        if (n <= 1 && T > 0) throw MobilityError("no crossings possible with one agent");
        for (long long t = 0; t < T; ++t) {
            int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            int u = order[static_cast<std::size_t>(i)];
            int v = order[static_cast<std::size_t>(i) + 1];
            s.crossings.emplace_back(std::min(u, v), std::max(u, v));
            std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i) + 1]);
        }
        return s;
    }

    // Walk over adjacent positions whose pair has not crossed yet. An
    // adjacent pair is uncrossed exactly when it is still in initial order,
    // so until the ordering is fully reversed a candidate always exists.
    std::vector<char> crossed(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<int> candidates;        // positions i with (order[i], order[i+1]) uncrossed
    std::vector<int> slot(static_cast<std::size_t>(std::max(n - 1, 0)), -1);
    auto uncrossed = [&](int i) {
        int u = order[static_cast<std::size_t>(i)];
        int v = order[static_cast<std::size_t>(i) + 1];
        return crossed[static_cast<std::size_t>(u) * n + v] == 0;
    };
    auto refresh = [&](int i) {
        if (i < 0 || i + 1 > n - 1) return;
        bool want = uncrossed(i);
        int at = slot[static_cast<std::size_t>(i)];
        if (want && at == -1) {
            slot[static_cast<std::size_t>(i)] = static_cast<int>(candidates.size());
            candidates.push_back(i);
        } else if (!want && at != -1) {
            int last = candidates.back();
            candidates[static_cast<std::size_t>(at)] = last;
            slot[static_cast<std::size_t>(last)] = at;
            candidates.pop_back();
            slot[static_cast<std::size_t>(i)] = -1;
        }
    };
    for (int i = 0; i + 1 < n; ++i) refresh(i);
    for (long long t = 0; t < T; ++t) {
        int pick = static_cast<int>(rng() % candidates.size());
        int i = candidates[static_cast<std::size_t>(pick)];
        int u = order[static_cast<std::size_t>(i)];
        int v = order[static_cast<std::size_t>(i) + 1];
        crossed[static_cast<std::size_t>(u) * n + v] = 1;
        crossed[static_cast<std::size_t>(v) * n + u] = 1;
        s.crossings.emplace_back(std::min(u, v), std::max(u, v));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i) + 1]);
        refresh(i - 1);
        refresh(i);
        refresh(i + 1);
    }
    return s;
}

TemporalGraph seven_agent_fixture() {
    const std::vector<std::string> names{"a", "b", "c", "d", "e", "f", "g"};
    const char* crossings[] = {"ab", "cd", "ad", "ef", "eg", "ac", "af", "bd", "bc", "ag", "ae",
                               "bf", "bg", "be", "cf", "cg", "ce", "df", "dg", "de", "fg"};
    std::vector<TemporalEvent> events;
    std::int64_t t = 1;
    for (const char* pair : crossings) {
        events.push_back({pair[0] - 'a', pair[1] - 'a', t++});
    }
    return TemporalGraph::make(names, std::move(events));
}

}  // namespace mobility
