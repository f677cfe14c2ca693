#include "mobility/combinatorics.hpp"

#include <algorithm>
#include <string>

namespace mobility {

BigCount count_reduced_words(int n) {
    if (n < 1) throw MobilityError("count_reduced_words requires n >= 1");
    BigCount numerator = 1;
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    for (long long i = 2; i <= pairs; ++i) numerator *= i;
    BigCount denominator = 1;
    for (int i = 1; i <= n - 1; ++i) {
        // factor (2i-1) appears with exponent n-i
        BigCount base = 2 * i - 1;
        for (int e = 0; e < n - i; ++e) denominator *= base;
    }
    return numerator / denominator;
}

BigCount count_1d_cliques(int n) {
    if (n < 1) throw MobilityError("count_1d_cliques requires n >= 1");
    if (n <= 2) return 1;  // a single clique exists; the halving pairing degenerates
    BigCount words = count_reduced_words(n);
    if (words % 2 != 0) {
        throw OddCountError("reduced word count for n=" + std::to_string(n) + " is odd");
    }
    return words / 2;
}

namespace {

struct Enumerator {
    int n;
    const std::function<bool(const Schedule&)>& visit;
    Schedule current;
    std::vector<int> order;           // current left-to-right arrangement
    std::vector<char> crossed;        // n*n matrix of pairs already used
    bool stopped = false;

    bool pair_crossed(int u, int v) const {
        return crossed[static_cast<std::size_t>(u) * n + v] != 0;
    }
    void set_crossed(int u, int v, char val) {
        crossed[static_cast<std::size_t>(u) * n + v] = val;
        crossed[static_cast<std::size_t>(v) * n + u] = val;
    }

    void run(long long remaining) {
        if (stopped) return;
        if (remaining == 0) {
            if (!visit(current)) stopped = true;
            return;
        }
        for (int i = 0; i + 1 < n && !stopped; ++i) {
            int u = order[static_cast<std::size_t>(i)];
            int v = order[static_cast<std::size_t>(i) + 1];
            if (pair_crossed(u, v)) continue;
            set_crossed(u, v, 1);
            std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i) + 1]);
            current.crossings.emplace_back(std::min(u, v), std::max(u, v));
            run(remaining - 1);
            current.crossings.pop_back();
            std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i) + 1]);
            set_crossed(u, v, 0);
        }
    }
};

}  // namespace

void enumerate_clique_schedules(int n, const std::function<bool(const Schedule&)>& visit,
                                int bound) {
    if (n < 1) throw MobilityError("enumerate_clique_schedules requires n >= 1");
    if (n > bound) {
        throw BoundExceededError("enumeration limited to n <= " + std::to_string(bound));
    }
    Enumerator e{n, visit, {}, {}, {}, false};
    e.current.initial.resize(static_cast<std::size_t>(n));
    e.order.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        e.current.initial[static_cast<std::size_t>(i)] = i;
        e.order[static_cast<std::size_t>(i)] = i;
    }
    e.crossed.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    e.run(static_cast<long long>(n) * (n - 1) / 2);
}

std::vector<Schedule> collect_clique_schedules(int n, int bound) {
    std::vector<Schedule> out;
    enumerate_clique_schedules(
        n,
        [&](const Schedule& s) {
            out.push_back(s);
            return true;
        },
        bound);
    return out;
}

namespace {

std::vector<std::pair<int, int>> relabeled_sequence(const TemporalGraph& g,
                                                    const std::vector<int>& sigma) {
    std::vector<std::pair<int, int>> seq;
    seq.reserve(g.event_count());
    for (const TemporalEvent& e : g.events()) {
        int a = sigma[static_cast<std::size_t>(e.u)];
        int b = sigma[static_cast<std::size_t>(e.v)];
        seq.emplace_back(std::min(a, b), std::max(a, b));
    }
    return seq;
}

}  // namespace

BigCount dedupe_isomorphism_classes(const std::vector<TemporalGraph>& graphs, int max_n) {
    std::vector<std::vector<std::pair<int, int>>> canon;
    for (const TemporalGraph& g : graphs) {
        const int n = static_cast<int>(g.vertex_count());
        if (n > max_n) {
            throw BoundExceededError("isomorphism dedup limited to n <= " + std::to_string(max_n));
        }
        if (!graphs.empty() && g.vertex_count() != graphs.front().vertex_count()) {
            throw VertexMismatchError("all graphs must have the same vertex count");
        }
        std::vector<int> sigma(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
        std::vector<std::pair<int, int>> best = relabeled_sequence(g, sigma);
        while (std::next_permutation(sigma.begin(), sigma.end())) {
            auto seq = relabeled_sequence(g, sigma);
            if (seq < best) best = std::move(seq);
        }
        canon.push_back(std::move(best));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    return BigCount(canon.size());
}

std::vector<std::pair<int, int>> inversion_graph(const std::vector<int>& initial,
                                                 const std::vector<int>& final_order) {
    if (initial.size() != final_order.size()) {
        throw VertexMismatchError("orderings must cover the same vertices");
    }
    const int n = static_cast<int>(initial.size());
    std::vector<int> pos_i(static_cast<std::size_t>(n), -1);
    std::vector<int> pos_f(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int u = initial[static_cast<std::size_t>(i)];
        int v = final_order[static_cast<std::size_t>(i)];
        if (u < 0 || u >= n || v < 0 || v >= n || pos_i[static_cast<std::size_t>(u)] != -1 ||
            pos_f[static_cast<std::size_t>(v)] != -1) {
            throw VertexMismatchError("orderings must be permutations of the same set");
        }
        pos_i[static_cast<std::size_t>(u)] = i;
        pos_f[static_cast<std::size_t>(v)] = i;
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool before_i = pos_i[static_cast<std::size_t>(u)] < pos_i[static_cast<std::size_t>(v)];
            bool before_f = pos_f[static_cast<std::size_t>(u)] < pos_f[static_cast<std::size_t>(v)];
            if (before_i != before_f) edges.emplace_back(u, v);
        }
    }
    return edges;
}

}  // namespace mobility
