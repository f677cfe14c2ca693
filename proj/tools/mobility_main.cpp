// mobility: recognize, count, enumerate and generate 1D / circular mobility
// temporal graphs. Exit codes: 0 accept/success, 1 reject, 2 bad input/usage.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mobility/circular.hpp"
#include "mobility/clique.hpp"
#include "mobility/combinatorics.hpp"
#include "mobility/generators.hpp"
#include "mobility/multicrossing.hpp"
#include "mobility/patterns.hpp"
#include "mobility/schedule.hpp"
#include "mobility/spanner.hpp"
#include "mobility/temporal_graph.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mobility;

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitError = 2;

TemporalGraph load_graph(const std::string& path) {
    if (path == "-") return parse_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw MobilityError("cannot open '" + path + "'");
    return parse_graph(in);
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw MobilityError("cannot write '" + out_path + "'");
    out << text;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

json names_json(const TemporalGraph& g, const std::vector<int>& ordering) {
    json arr = json::array();
    for (int v : ordering) arr.push_back(g.vertex_name(v));
    return arr;
}

json partition_json(const TemporalGraph& g, const ListPartition& p) {
    json arr = json::array();
    for (const auto& list : p.lists) arr.push_back(names_json(g, list));
    return arr;
}

json outcome_json(const TemporalGraph& g, const RecognitionOutcome& o) {
    json j;
    j["verdict"] = o.accepted() ? "accept" : "reject";
    if (o.accepted()) {
        j["ordering"] = names_json(g, o.ordering);
        if (!o.final_ordering.empty()) j["final_ordering"] = names_json(g, o.final_ordering);
        return j;
    }
    switch (o.reason) {
        case RecognitionOutcome::Reason::BadEvent:
            j["reason"] = "bad_event";
            j["event_index"] = o.event_index;
            break;
        case RecognitionOutcome::Reason::PatternInstance:
            j["reason"] = "pattern";
            j["pattern"] = o.pattern_id;
            j["nodes"] = names_json(g, o.witness_nodes);
            break;
        case RecognitionOutcome::Reason::Contradiction:
            j["reason"] = "contradiction";
            break;
        default:
            j["reason"] = "reject";
            break;
    }
    if (!o.message.empty()) j["detail"] = o.message;
    return j;
}

void emit(const json& j, bool as_json, const std::string& human) {
    if (as_json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << human << "\n";
    }
}

std::string human_ordering(const TemporalGraph& g, const std::vector<int>& ordering) {
    std::string out;
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        if (i) out += ",";
        out += g.vertex_name(ordering[i]);
    }
    return out;
}

const std::vector<OrderedPattern>& pattern_set(const std::string& name) {
    if (name == "clique4") return clique4_patterns();
    if (name == "atmost5") return atmost5_patterns();
    if (name == "both") return atmost_once_patterns();
    throw MobilityError("unknown pattern set '" + name + "'");
}

std::optional<std::vector<int>> brute_force_replay_ordering(const TemporalGraph& g,
                                                            std::size_t bound) {
    const std::size_t n = g.vertex_count();
    if (n > bound) {
        throw BoundExceededError("replay search limited to " + std::to_string(bound) + " vertices");
    }
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    auto by_name = [&](int a, int b) { return g.vertex_name(a) < g.vertex_name(b); };
    std::sort(perm.begin(), perm.end(), by_name);
    do {
        if (graph_replays_from(g, perm).accepted()) return perm;
    } while (std::next_permutation(perm.begin(), perm.end(), by_name));
    return std::nullopt;
}

int cmd_recognize(const std::string& path, const std::string& model, bool as_json,
                  std::size_t bound) {
    TemporalGraph g = load_graph(path);
    json j{{"schema", "1"}, {"command", "recognize"}, {"model", model}};
    if (model == "clique") {
        RecognitionOutcome o = recognize_clique(g);
        j.update(outcome_json(g, o));
        emit(j, as_json,
             o.accepted() ? "accept " + human_ordering(g, o.ordering)
                          : "reject at event " + std::to_string(o.event_index));
        return o.accepted() ? kExitAccept : kExitReject;
    }
    if (model == "multi" || model == "atmost") {
        if (model == "atmost" && !g.is_single_valued()) {
            j["verdict"] = "reject";
            j["reason"] = "not_single_valued";
            emit(j, as_json, "reject: some pair appears more than once");
            return kExitReject;
        }
        MulticrossingResult r = recognize_multicrossing(g);
        if (!r.accepted) {
            j["verdict"] = "reject";
            j["reason"] = "bad_event";
            j["event_index"] = r.fail_event;
            j["detail"] = r.guard == MulticrossingResult::Guard::SameListNotAdjacent
                              ? "same list, not adjacent"
                              : "not joinable extremities";
            emit(j, as_json, "reject at event " + std::to_string(r.fail_event));
            return kExitReject;
        }
        j["verdict"] = "accept";
        j["final_lists"] = partition_json(g, r.partition);
        MulticrossingResult init = initial_ordering_constraints(g);
        if (init.accepted) {
            j["initial_lists"] = partition_json(g, init.partition);
            std::vector<int> initial = init.some_ordering();
            RecognitionOutcome replayed = graph_replays_from(g, initial);
            if (replayed.accepted()) {
                j["ordering"] = names_json(g, initial);
                j["final_ordering"] = names_json(g, replayed.final_ordering);
            }
        }
        emit(j, as_json, "accept");
        return kExitAccept;
    }
    if (model == "circular") {
        RecognitionOutcome o = recognize_circular_clique(g, bound);
        j.update(outcome_json(g, o));
        emit(j, as_json,
             o.accepted() ? "accept " + human_ordering(g, o.ordering) : "reject");
        return o.accepted() ? kExitAccept : kExitReject;
    }
    throw MobilityError("unknown model '" + model + "'");
}

int cmd_replay(const std::string& path, const std::string& order, bool as_json) {
    TemporalGraph g = load_graph(path);
    std::vector<int> initial = ordering_from_names(g, split_csv(order));
    RecognitionOutcome o = graph_replays_from(g, initial);
    json j{{"schema", "1"}, {"command", "replay"}};
    j.update(outcome_json(g, o));
    emit(j, as_json,
         o.accepted() ? "accept " + human_ordering(g, o.final_ordering)
                      : "reject at event " + std::to_string(o.event_index));
    return o.accepted() ? kExitAccept : kExitReject;
}

int cmd_patterns(const std::string& path, const std::string& set_name, const std::string& order,
                 bool as_json) {
    TemporalGraph g = load_graph(path);
    std::vector<int> pi = ordering_from_names(g, split_csv(order));
    auto all = violations(g, pi, pattern_set(set_name));
    json j{{"schema", "1"}, {"command", "patterns"}, {"set", set_name}};
    json arr = json::array();
    for (const auto& v : all) {
        arr.push_back({{"pattern", v.pattern_id}, {"nodes", names_json(g, v.nodes)}});
    }
    j["violations"] = arr;
    emit(j, as_json, std::to_string(all.size()) + " violation(s)");
    return all.empty() ? kExitAccept : kExitReject;
}

int cmd_count(int n, bool as_json) {
    BigCount words = count_reduced_words(n);
    BigCount cliques = count_1d_cliques(n);
    json j{{"schema", "1"},
           {"command", "count"},
           {"n", n},
           {"reduced_words", words.str()},
           {"cliques", cliques.str()}};
    emit(j, as_json, "R=" + words.str() + " C=" + cliques.str());
    return kExitAccept;
}

int cmd_enumerate(int n, const std::string& out_dir, bool as_json) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    long long written = 0;
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    enumerate_clique_schedules(n, [&](const Schedule& s) {
        if (!out_dir.empty()) {
            TemporalGraph g = schedule_to_graph(s, names);
            std::ostringstream file;
            file << out_dir << "/clique_" << n << "_" << written << ".tg";
            write_text(file.str(), serialize_graph(g));
        }
        ++written;
        return true;
    });
    json j{{"schema", "1"}, {"command", "enumerate"}, {"n", n}, {"count", written}};
    if (!out_dir.empty()) j["out"] = out_dir;
    emit(j, as_json, std::to_string(written) + " schedule(s)");
    return kExitAccept;
}

int cmd_spanner(const std::string& path, const std::string& out_path, bool as_json) {
    TemporalGraph g = load_graph(path);
    RecognitionOutcome o = recognize_clique(g);
    json j{{"schema", "1"}, {"command", "spanner"}};
    if (!o.accepted()) {
        j["verdict"] = "reject";
        j["detail"] = "not a 1D mobility clique";
        emit(j, as_json, "reject: not a 1D mobility clique");
        return kExitReject;
    }
    TemporalGraph h = build_spanner(g, o.ordering);
    SpannerCheck check = verify_spanner(g, h);
    j["size"] = h.event_count();
    j["connected"] = check.connected;
    j["max_hops"] = check.max_hops;
    if (!out_path.empty()) {
        write_text(out_path, serialize_graph(h));
        j["out"] = out_path;
    }
    emit(j, as_json,
         "size=" + std::to_string(h.event_count()) + " connected=" +
             (check.connected ? "true" : "false") + " max_hops=" + std::to_string(check.max_hops));
    return check.connected ? kExitAccept : kExitReject;
}

ConstantSpeedConfig load_speed_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MobilityError("cannot open '" + path + "'");
    ConstantSpeedConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_csv(line);
        if (fields.size() != 3) throw MobilityError("config lines are 'name,p,s'");
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        cfg.agents.push_back({trim(fields[0]), Rational::from_string(trim(fields[1])),
                              Rational::from_string(trim(fields[2]))});
    }
    return cfg;
}

int cmd_gen(const std::string& mode, int n, long long T, std::uint64_t seed,
            const std::string& config, const std::string& out_path) {
    TemporalGraph g;
    if (mode == "speed") {
        if (config.empty()) throw MobilityError("--config is required for speed mode");
        g = constant_speed_graph(load_speed_config(config));
    } else {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
        if (mode == "clique") {
            Schedule s = random_schedule(n, static_cast<long long>(n) * (n - 1) / 2, seed,
                                         ScheduleMode::Clique);
            g = schedule_to_graph(s, names);
        } else if (mode == "multi") {
            Schedule s = random_schedule(n, T, seed, ScheduleMode::Multi);
            g = schedule_to_graph(s, names);
        } else {
            throw MobilityError("unknown mode '" + mode + "'");
        }
    }
    write_text(out_path, serialize_graph(g));
    return kExitAccept;
}

int cmd_family(int k, const std::string& out_path) {
    write_text(out_path, serialize_graph(impossibility_family(k)));
    return kExitAccept;
}

int cmd_fixture(const std::string& name, const std::string& out_path) {
    if (name != "seven-agents") throw MobilityError("unknown fixture '" + name + "'");
    write_text(out_path, serialize_graph(seven_agent_fixture()));
    return kExitAccept;
}

int cmd_circular_prefixes(bool as_json) {
    const std::vector<std::string> names{"a", "b", "c", "d"};
    auto prefixes = derive_circular_forbidden_prefixes();
    json j{{"schema", "1"},
           {"command", "circular-prefixes"},
           {"order", names},
           {"prefixes", json::array()}};
    for (const auto& p : prefixes) {
        json seq = json::array();
        for (auto [a, b] : p.crossings) {
            seq.push_back(json::array({names[static_cast<std::size_t>(a)],
                                       names[static_cast<std::size_t>(b)]}));
        }
        j["prefixes"].push_back(seq);
    }
    emit(j, as_json, std::to_string(prefixes.size()) + " forbidden prefix(es)");
    return kExitAccept;
}

int cmd_oracle(const std::string& path, const std::string& model, bool as_json,
               std::size_t bound) {
    TemporalGraph g = load_graph(path);
    json j{{"schema", "1"}, {"command", "oracle"}, {"model", model}};
    bool accepted = false;
    if (model == "clique" || model == "atmost") {
        if (model == "clique" && !g.is_clique()) {
            throw NotACliqueError("input is not a temporal clique");
        }
        if (model == "atmost" && !g.is_single_valued()) {
            j["verdict"] = "reject";
            j["reason"] = "not_single_valued";
            emit(j, as_json, "reject");
            return kExitReject;
        }
        const auto& patterns = model == "clique" ? clique4_patterns() : atmost_once_patterns();
        auto found = ordering_search(g, patterns, bound);
        json ps{{"verdict", found ? "accept" : "reject"}};
        if (found) ps["ordering"] = names_json(g, *found);
        j["pattern_search"] = ps;
        auto replay_found = brute_force_replay_ordering(g, bound);
        json rs{{"verdict", replay_found ? "accept" : "reject"}};
        if (replay_found) rs["ordering"] = names_json(g, *replay_found);
        j["replay_search"] = rs;
        j["agree"] = found.has_value() == replay_found.has_value();
        accepted = replay_found.has_value();
    } else if (model == "multi") {
        auto replay_found = brute_force_replay_ordering(g, bound);
        json rs{{"verdict", replay_found ? "accept" : "reject"}};
        if (replay_found) rs["ordering"] = names_json(g, *replay_found);
        j["replay_search"] = rs;
        accepted = replay_found.has_value();
    } else if (model == "circular") {
        RecognitionOutcome o = recognize_circular_clique(g, bound);
        j["replay_search"] = outcome_json(g, o);
        accepted = o.accepted();
    } else {
        throw MobilityError("unknown model '" + model + "'");
    }
    j["verdict"] = accepted ? "accept" : "reject";
    emit(j, as_json, accepted ? "accept" : "reject");
    return accepted ? kExitAccept : kExitReject;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D and circular mobility temporal graph toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string path = "-";
    std::string model = "clique";
    std::string order;
    std::string set_name = "clique4";
    std::string out_path;
    std::string config;
    std::string fixture_name;
    std::string mode = "clique";
    int n = 0;
    int k = 3;
    long long T = 0;
    std::uint64_t seed = 0;
    std::size_t bound = 8;
    std::size_t circular_bound = 9;

    auto* recognize = app.add_subcommand("recognize", "decide membership for a model");
    recognize->add_option("--model", model, "clique|multi|circular|atmost");
    recognize->add_option("--bound", circular_bound, "search bound for the circular model");
    recognize->add_option("file", path, "input .tg file or '-'");

    auto* replay_cmd = app.add_subcommand("replay", "replay events from an ordering");
    replay_cmd->add_option("--order", order, "comma-separated vertex names")->required();
    replay_cmd->add_option("file", path);

    auto* patterns_cmd = app.add_subcommand("patterns", "list pattern violations");
    patterns_cmd->add_option("--set", set_name, "clique4|atmost5|both");
    patterns_cmd->add_option("--order", order)->required();
    patterns_cmd->add_option("file", path);

    auto* count_cmd = app.add_subcommand("count", "count schedules and cliques");
    count_cmd->add_option("--n", n)->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate clique schedules");
    enum_cmd->add_option("--n", n)->required();
    enum_cmd->add_option("--out", out_path, "directory for .tg files");

    auto* spanner_cmd = app.add_subcommand("spanner", "build and verify the 2n-3 spanner");
    spanner_cmd->add_option("--out", out_path, "write the spanner here");
    spanner_cmd->add_option("file", path);

    auto* gen_cmd = app.add_subcommand("gen", "generate instances");
    gen_cmd->add_option("--mode", mode, "clique|multi|speed");
    gen_cmd->add_option("--n", n);
    gen_cmd->add_option("--T", T, "crossing count (multi mode)");
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--config", config, "CSV: name,p,s with rational fields");
    gen_cmd->add_option("--out", out_path);

    auto* family_cmd = app.add_subcommand("family", "impossibility family instance");
    family_cmd->add_option("--k", k)->required();
    family_cmd->add_option("--out", out_path);

    auto* prefixes_cmd =
        app.add_subcommand("circular-prefixes", "derived circular forbidden prefixes");

    auto* fixture_cmd = app.add_subcommand("fixture", "built-in instances");
    fixture_cmd->add_option("name", fixture_name)->required();
    fixture_cmd->add_option("--out", out_path);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-checks");
    oracle_cmd->add_option("--model", model, "clique|multi|circular|atmost");
    oracle_cmd->add_option("--bound", bound, "vertex bound for factorial searches");
    oracle_cmd->add_option("file", path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (recognize->parsed()) {
            return cmd_recognize(path, model, as_json,
                                 model == "circular" ? circular_bound : bound);
        }
        if (replay_cmd->parsed()) return cmd_replay(path, order, as_json);
        if (patterns_cmd->parsed()) return cmd_patterns(path, set_name, order, as_json);
        if (count_cmd->parsed()) return cmd_count(n, as_json);
        if (enum_cmd->parsed()) return cmd_enumerate(n, out_path, as_json);
        if (spanner_cmd->parsed()) return cmd_spanner(path, out_path, as_json);
        if (gen_cmd->parsed()) return cmd_gen(mode, n, T, seed, config, out_path);
        if (family_cmd->parsed()) return cmd_family(k, out_path);
        if (prefixes_cmd->parsed()) return cmd_circular_prefixes(as_json);
        if (fixture_cmd->parsed()) return cmd_fixture(fixture_name, out_path);
        if (oracle_cmd->parsed()) return cmd_oracle(path, model, as_json, bound);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
