#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mobility/schedule.hpp"
#include "mobility/temporal_graph.hpp"

namespace mobility {

/// Exact rational, always reduced with a positive denominator.
struct Rational {
    boost::multiprecision::cpp_int num{0};
    boost::multiprecision::cpp_int den{1};

    Rational() = default;
    Rational(boost::multiprecision::cpp_int n, boost::multiprecision::cpp_int d);
    static Rational from_string(const std::string& text);  // "n" or "n/d"

    Rational operator-(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

    std::string str() const;
};

struct SpeedAgent {
    std::string name;
    Rational position;
    Rational speed;
};

/// Agents on a line, positions strictly increasing and speeds strictly
/// decreasing, so every pair meets exactly once at a positive time.
struct ConstantSpeedConfig {
    std::vector<SpeedAgent> agents;
};

/// Crossing of agents i < j happens at (p_j - p_i) / (s_i - s_j), computed
/// exactly; events are ordered by crossing time and relabeled 1..M. Two pairs
/// sharing a crossing time raise CoincidentCrossingsError.
TemporalGraph constant_speed_graph(const ConstantSpeedConfig& cfg);

enum class ScheduleMode { Clique, Multi };

/// Seeded random schedule from the identity ordering. Clique mode walks over
/// adjacent swaps whose pair has not crossed yet (T must be n(n-1)/2); multi
/// mode applies T uniform adjacent swaps. Same seed, same schedule, on every
/// platform (mt19937_64 with modulo draws).
Schedule random_schedule(int n, long long T, std::uint64_t seed, ScheduleMode mode);

/// The 21-event clique on agents a..g whose first ten crossings cannot be
/// produced by agents moving at constant speeds.
TemporalGraph seven_agent_fixture();

}  // namespace mobility
