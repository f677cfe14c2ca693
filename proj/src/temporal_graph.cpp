#include "mobility/temporal_graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace mobility {

namespace {

const std::vector<std::int64_t> kNoTimes;

bool valid_token(std::string_view tok) {
    if (tok.empty()) return false;
    for (char c : tok) {
        if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool parse_int64(std::string_view tok, std::int64_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

std::uint64_t TemporalGraph::pair_key(int u, int v) const {
    auto a = static_cast<std::uint64_t>(std::min(u, v));
    auto b = static_cast<std::uint64_t>(std::max(u, v));
    return a * vertices_.size() + b;
}

TemporalGraph TemporalGraph::make(std::vector<std::string> vertices,
                                  std::vector<TemporalEvent> events) {
    TemporalGraph g;
    g.vertices_ = std::move(vertices);
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
        if (!valid_token(g.vertices_[i])) {
            throw MobilityError("invalid vertex token '" + g.vertices_[i] + "'");
        }
        if (!g.index_.emplace(g.vertices_[i], static_cast<int>(i)).second) {
            throw MobilityError("duplicate vertex '" + g.vertices_[i] + "'");
        }
    }
    const int n = static_cast<int>(g.vertices_.size());
    std::int64_t prev = 0;
    for (const TemporalEvent& e : events) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw MobilityError("event endpoint out of range");
        }
        if (e.u == e.v) throw MobilityError("self loop");
        if (e.time <= prev) throw MobilityError("event times must be strictly increasing and positive");
        prev = e.time;
    }
    g.events_ = std::move(events);
    for (const TemporalEvent& e : g.events_) {
        auto& ts = g.multiplicity_[g.pair_key(e.u, e.v)];
        ts.push_back(e.time);
        if (ts.size() > 1) g.single_valued_ = false;
    }
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    g.clique_ = g.single_valued_ && g.multiplicity_.size() == pairs;
    return g;
}

int TemporalGraph::vertex_index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

int TemporalGraph::require_vertex(std::string_view name) const {
    int idx = vertex_index(name);
    if (idx < 0) throw UnknownVertexError("unknown vertex '" + std::string(name) + "'");
    return idx;
}

bool TemporalGraph::has_edge(int u, int v) const {
    return multiplicity_.count(pair_key(u, v)) != 0;
}

const std::vector<std::int64_t>& TemporalGraph::times(int u, int v) const {
    auto it = multiplicity_.find(pair_key(u, v));
    return it == multiplicity_.end() ? kNoTimes : it->second;
}

std::vector<std::pair<int, int>> TemporalGraph::footprint_edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(multiplicity_.size());
    const auto n = vertices_.size();
    for (const auto& [key, ts] : multiplicity_) {
        out.emplace_back(static_cast<int>(key / n), static_cast<int>(key % n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

TemporalGraph parse_graph(std::istream& in) {
    std::vector<std::string> vertices;
    std::unordered_map<std::string, int> index;
    std::vector<TemporalEvent> events;

    long declared = -1;
    std::int64_t prev_time = 0;
    std::string line;
    int lineno = 0;

    auto add_vertex = [&](const std::string& tok, bool implicit) -> int {
        auto it = index.find(tok);
        if (it != index.end()) {
            if (!implicit) {
                throw ParseError(ParseError::Kind::Syntax, lineno,
                                 "vertex '" + tok + "' declared twice");
            }
            return it->second;
        }
        if (static_cast<long>(vertices.size()) >= declared) {
            throw ParseError(ParseError::Kind::UnknownVertex, lineno,
                             "vertex '" + tok + "' exceeds declared count " + std::to_string(declared));
        }
        int id = static_cast<int>(vertices.size());
        vertices.push_back(tok);
        index.emplace(tok, id);
        return id;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;

        if (declared < 0) {
            std::int64_t n = 0;
            if (tok.size() != 1 || !parse_int64(tok[0], n) || n < 0) {
                throw ParseError(ParseError::Kind::Syntax, lineno, "expected vertex count");
            }
            declared = static_cast<long>(n);
            continue;
        }
        if (tok.size() == 2 && tok[0] == "v") {
            if (!valid_token(tok[1])) {
                throw ParseError(ParseError::Kind::Syntax, lineno, "invalid vertex token");
            }
            add_vertex(tok[1], /*implicit=*/false);
            continue;
        }
        if (tok.size() != 3) {
            throw ParseError(ParseError::Kind::Syntax, lineno, "expected '<u> <v> <t>'");
        }
        if (tok[0] == tok[1]) {
            throw ParseError(ParseError::Kind::SelfLoop, lineno, "self loop on '" + tok[0] + "'");
        }
        std::int64_t time = 0;
        if (!parse_int64(tok[2], time) || time <= 0) {
            throw ParseError(ParseError::Kind::Syntax, lineno, "time must be a positive integer");
        }
        if (time <= prev_time) {
            throw ParseError(ParseError::Kind::NonIncreasingTime, lineno,
                             "time " + std::to_string(time) + " does not increase");
        }
        int u = add_vertex(tok[0], /*implicit=*/true);
        int v = add_vertex(tok[1], /*implicit=*/true);
        events.push_back({u, v, time});
        prev_time = time;
    }

    if (declared < 0) throw ParseError(ParseError::Kind::Syntax, lineno + 1, "missing vertex count");
    if (static_cast<long>(vertices.size()) != declared) {
        throw ParseError(ParseError::Kind::Syntax, lineno + 1,
                         "declared " + std::to_string(declared) + " vertices, found " +
                             std::to_string(vertices.size()));
    }
    return TemporalGraph::make(std::move(vertices), std::move(events));
}

TemporalGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const TemporalGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const auto& name : g.vertices()) out << "v " << name << '\n';
    for (const TemporalEvent& e : g.events()) {
        out << g.vertex_name(e.u) << ' ' << g.vertex_name(e.v) << ' ' << e.time << '\n';
    }
    return out.str();
}

TemporalGraph canonical_times(const TemporalGraph& g) {
    std::vector<TemporalEvent> events = g.events();
    for (std::size_t i = 0; i < events.size(); ++i) {
        events[i].time = static_cast<std::int64_t>(i) + 1;
    }
    return TemporalGraph::make(g.vertices(), std::move(events));
}

TemporalGraph induced_subgraph_indices(const TemporalGraph& g, const std::vector<int>& subset) {
    std::vector<char> keep(g.vertex_count(), 0);
    for (int idx : subset) {
        if (idx < 0 || idx >= static_cast<int>(g.vertex_count())) {
            throw UnknownVertexError("vertex index out of range");
        }
        keep[static_cast<std::size_t>(idx)] = 1;
    }
    std::vector<std::string> vertices;
    std::vector<int> remap(g.vertex_count(), -1);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (keep[i]) {
            remap[i] = static_cast<int>(vertices.size());
            vertices.push_back(g.vertices()[i]);
        }
    }
    std::vector<TemporalEvent> events;
    for (const TemporalEvent& e : g.events()) {
        if (keep[static_cast<std::size_t>(e.u)] && keep[static_cast<std::size_t>(e.v)]) {
            events.push_back({remap[static_cast<std::size_t>(e.u)],
                              remap[static_cast<std::size_t>(e.v)], e.time});
        }
    }
    return TemporalGraph::make(std::move(vertices), std::move(events));
}

TemporalGraph induced_subgraph(const TemporalGraph& g, const std::vector<std::string>& subset) {
    std::vector<int> ids;
    ids.reserve(subset.size());
    for (const auto& name : subset) ids.push_back(g.require_vertex(name));
    return induced_subgraph_indices(g, ids);
}

std::vector<int> ordering_from_names(const TemporalGraph& g, const std::vector<std::string>& names) {
    if (names.size() != g.vertex_count()) {
        throw VertexMismatchError("ordering must list every vertex exactly once");
    }
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> out;
    out.reserve(names.size());
    for (const auto& name : names) {
        int idx = g.require_vertex(name);
        if (seen[static_cast<std::size_t>(idx)]) {
            throw VertexMismatchError("vertex '" + name + "' listed twice");
        }
        seen[static_cast<std::size_t>(idx)] = 1;
        out.push_back(idx);
    }
    return out;
}

std::vector<std::string> ordering_to_names(const TemporalGraph& g, const std::vector<int>& ordering) {
    std::vector<std::string> out;
    out.reserve(ordering.size());
    for (int idx : ordering) out.push_back(g.vertex_name(idx));
    return out;
}

}  // namespace mobility
