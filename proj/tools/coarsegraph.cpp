#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coarse/certificates.hpp"
#include "coarse/constructions.hpp"
#include "coarse/fatminor.hpp"
#include "coarse/graph.hpp"
#include "coarse/menger.hpp"
#include "coarse/quasiiso.hpp"
#include "coarse/treedecomp.hpp"

namespace {

using coarse::Dist;
using coarse::Graph;
using coarse::MinorModel;
using coarse::Rat;
using coarse::Vertex;
using coarse::VertexSet;
using nlohmann::json;

constexpr const char* kVersion = "coarsegraph 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << bytes;
}

Graph load_graph(const std::string& path) {
    try {
        return coarse::graph_from_string(slurp(path));
    } catch (const std::invalid_argument& e) {
        throw IoError(path + ": " + e.what());
    }
}

json load_json(const std::string& path) {
    try {
        return json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
}

void save_json(const std::string& path, const json& j) { spill(path, j.dump(2) + "\n"); }

// Builtin patterns plus file fallback.
Graph load_pattern(const std::string& spec) {
    auto path_like = spec.find('.') != std::string::npos || spec.find('/') != std::string::npos;
    if (path_like) return load_graph(spec);
    if (spec == "k2") return Graph(2, {{0, 1}});
    if (spec == "k3") return Graph(3, {{0, 1}, {0, 2}, {1, 2}});
    if (spec == "k4")
        return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (spec == "p3") return Graph(3, {{0, 1}, {1, 2}});
    if (spec == "p4") return Graph(4, {{0, 1}, {1, 2}, {2, 3}});
    if (spec == "c4") return Graph(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    throw IoError("unknown pattern \"" + spec + "\" (builtins: k2 k3 k4 p3 p4 c4)");
}

VertexSet parse_id_list(const std::string& csv) {
    VertexSet out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(static_cast<Vertex>(std::stoul(item)));
    return coarse::normalize_set(std::move(out));
}

struct Report {
    bool json_mode = false;
    json body = json::object();

    void emit() const {
        if (json_mode) {
            std::cout << body.dump(2) << "\n";
            return;
        }
        for (const auto& [key, value] : body.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>()
                                                           : value.dump())
                      << "\n";
    }
};

const char* verdict_name(coarse::VerdictKind k) {
    switch (k) {
        case coarse::VerdictKind::Found: return "found";
        case coarse::VerdictKind::NoneExhaustive: return "none-exhaustive";
        default: return "inconclusive";
    }
}

int verdict_exit(coarse::VerdictKind k) {
    switch (k) {
        case coarse::VerdictKind::Found: return kExitOk;
        case coarse::VerdictKind::NoneExhaustive: return kExitNegative;
        default: return kExitInconclusive;
    }
}

const char* violation_name(coarse::ViolationKind k) {
    switch (k) {
        case coarse::ViolationKind::MissingPart: return "missing-part";
        case coarse::ViolationKind::DisconnectedPart: return "disconnected-part";
        case coarse::ViolationKind::MissingIncidence: return "missing-incidence";
        default: return "separation-too-small";
    }
}

json model_verdict_json(const Graph& pattern, const coarse::VerifyReport& r) {
    json j;
    if (r.ok()) {
        j["verdict"] = "ok";
    } else {
        j["verdict"] = "violation";
        j["violation"] = violation_name(r.violation->kind);
        j["part_a"] = coarse::part_name(pattern, r.violation->a);
        if (r.violation->kind == coarse::ViolationKind::MissingIncidence ||
            r.violation->kind == coarse::ViolationKind::SeparationTooSmall)
            j["part_b"] = coarse::part_name(pattern, r.violation->b);
        if (r.violation->kind == coarse::ViolationKind::SeparationTooSmall)
            j["achieved"] = coarse::format_dist(r.violation->achieved);
    }
    if (r.min_separation.has_value())
        j["min_separation"] = coarse::format_rat(*r.min_separation);
    return j;
}

// ---- subcommand state ----------------------------------------------------

struct Options {
    bool json_mode = false;
    int threads = 1;

    std::string family, target;
    std::string graph_path, pattern_spec, model_path, out_path, labels_path;
    std::string domain_path, codomain_path, map_path, td_path, sets_path;
    std::string graph_out_path, s_csv, t_csv, kind, payload_path;
    std::string k_rat = "1", eps_rat = "1";
    std::uint32_t d = 1, s = 1, n = 4, t = 1, c = 1, q = 0;
    std::uint32_t k_int = 1, dist = 0, paths = 1;
    std::uint64_t budget = 10'000'000;
    std::size_t vertex_budget = coarse::kDefaultVertexBudget;
    std::size_t cap = 12;
    bool use_oracle = false;
};

int run_construct(const Options& o) {
    Graph graph;
    json labels = json::object();
    if (o.family == "tree-leaf-path") {
        auto r = coarse::build_tree_leaf_path(o.d);
        graph = std::move(r.graph);
        labels["root"] = r.root;
        labels["leaves"] = r.leaves;
    } else if (o.family == "n-gadget") {
        auto r = coarse::build_n_gadget({o.d, o.s}, o.vertex_budget);
        graph = std::move(r.graph);
        labels["root"] = r.root;
        labels["leaves"] = r.leaves;
        labels["thick"] = r.thick;
        labels["S"] = r.S;
        labels["T"] = r.T;
    } else if (o.family == "h") {
        auto r = coarse::build_h(o.n);
        graph = std::move(r.graph);
        labels["x"] = r.x;
        labels["y"] = r.y;
    } else if (o.family == "g") {
        coarse::AssemblyParams p =
            o.q > 0 ? coarse::paper_params(o.q) : coarse::AssemblyParams{o.n, o.d, o.s, o.t, o.c};
        auto r = coarse::build_g(p, o.vertex_budget);
        graph = std::move(r.graph);
        labels["x_hubs"] = r.x_hubs;
        labels["y_hubs"] = r.y_hubs;
        labels["gadget_offset"] = r.gadget_offset;
        std::array<Vertex, 3> S{}, T{};
        for (int i = 0; i < 3; ++i) {
            S[i] = r.gadget_offset + r.gadget.S[i];
            T[i] = r.gadget_offset + r.gadget.T[i];
        }
        labels["S"] = S;
        labels["T"] = T;
    } else {
        throw IoError("unknown family \"" + o.family + "\"");
    }
    spill(o.out_path, coarse::graph_to_string(graph));
    if (!o.labels_path.empty()) save_json(o.labels_path, labels);
    Report r{o.json_mode};
    r.body["family"] = o.family;
    r.body["vertices"] = graph.vertex_count();
    r.body["edges"] = graph.edge_count();
    r.emit();
    return kExitOk;
}

int run_verify_model(const Options& o) {
    Graph g = load_graph(o.graph_path);
    Graph pattern;
    MinorModel m = coarse::model_from_json(load_json(o.model_path), pattern);
    Rat k = coarse::parse_rat(o.k_rat);
    auto report = coarse::verify_model(g, pattern, m, k);
    Report r{o.json_mode, model_verdict_json(pattern, report)};
    r.body["fatness"] = coarse::format_rat(k);
    r.emit();
    return report.ok() ? kExitOk : kExitNegative;
}

int run_find_fat_minor(const Options& o) {
    Graph g = load_graph(o.graph_path);
    Graph pattern = load_pattern(o.pattern_spec);
    Rat k = coarse::parse_rat(o.k_rat);
    auto verdict = coarse::find_fat_minor(g, pattern, k, {o.budget});
    Report r{o.json_mode};
    r.body["verdict"] = verdict_name(verdict.kind);
    if (verdict.kind == coarse::VerdictKind::Found) {
        json cert = coarse::model_to_json(pattern, *verdict.model);
        if (!o.out_path.empty()) save_json(o.out_path, cert);
        if (o.json_mode) r.body["model"] = std::move(cert);
    }
    r.emit();
    return verdict_exit(verdict.kind);
}

int run_inflate(const Options& o) {
    Graph g = load_graph(o.graph_path);
    Graph pattern;
    MinorModel m3 = coarse::model_from_json(load_json(o.model_path), pattern);
    Report r{o.json_mode};
    try {
        MinorModel lifted = coarse::inflate_model(g, pattern, o.k_int, m3);
        json cert = coarse::model_to_json(pattern, lifted);
        if (!o.out_path.empty()) save_json(o.out_path, cert);
        r.body["verdict"] = "ok";
        r.body["fatness"] = coarse::format_rat(lifted.fatness);
        if (o.json_mode) r.body["model"] = std::move(cert);
        r.emit();
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        r.body["verdict"] = "violation";
        r.body["reason"] = e.what();
        r.emit();
        return kExitNegative;
    }
}

int run_merge_sets(const Options& o) {
    Graph g = load_graph(o.graph_path);
    std::vector<VertexSet> xs;
    for (const auto& row : load_json(o.sets_path))
        xs.push_back(coarse::normalize_set(row.get<VertexSet>()));
    auto merged = coarse::merge_close_sets(g, xs, coarse::parse_rat(o.eps_rat));
    json out;
    out["sets"] = merged.sets;
    out["index_map"] = merged.index_map;
    if (!o.out_path.empty()) save_json(o.out_path, out);
    Report r{o.json_mode};
    r.body["input_sets"] = xs.size();
    r.body["output_sets"] = merged.sets.size();
    if (o.json_mode) r.body["merged"] = std::move(out);
    r.emit();
    return kExitOk;
}

int qi_report(const coarse::VertexMap& m, Report r) {
    auto bad = coarse::check_quasi_isometry(m);
    if (!bad.has_value()) {
        r.body["verdict"] = "ok";
        r.emit();
        return kExitOk;
    }
    r.body["verdict"] = "violation";
    switch (bad->kind) {
        case coarse::QIViolationKind::LowerBound: r.body["violation"] = "lower-bound"; break;
        case coarse::QIViolationKind::UpperBound: r.body["violation"] = "upper-bound"; break;
        default: r.body["violation"] = "density"; break;
    }
    r.body["u"] = bad->u;
    if (bad->kind != coarse::QIViolationKind::Density) r.body["v"] = bad->v;
    r.body["achieved"] = coarse::format_dist(bad->achieved);
    r.body["required"] = coarse::format_dist(bad->required);
    r.emit();
    return kExitNegative;
}

int run_check_qi(const Options& o) {
    coarse::VertexMap m;
    m.domain = load_graph(o.domain_path);
    m.codomain = load_graph(o.codomain_path);
    coarse::map_from_json(load_json(o.map_path), m);
    return qi_report(m, Report{o.json_mode});
}

int run_power_qi(const Options& o) {
    Graph g = load_graph(o.graph_path);
    auto m = coarse::identity_into_power(g, o.k_int);
    if (!o.out_path.empty()) save_json(o.out_path, coarse::map_to_json(m));
    Report r{o.json_mode};
    r.body["k"] = o.k_int;
    return qi_report(m, std::move(r));
}

const char* td_violation_name(coarse::TDViolationKind k) {
    switch (k) {
        case coarse::TDViolationKind::VertexMissing: return "vertex-missing";
        case coarse::TDViolationKind::EdgeUncovered: return "edge-uncovered";
        default: return "occurrence-disconnected";
    }
}

int run_tree_decomp(const Options& o) {
    Report r{o.json_mode};
    if (o.target == "build") {
        coarse::TreeDecomposition td;
        Graph host;
        if (o.family == "tree-leaf-path") {
            td = coarse::decompose_tree_leaf_path(o.d);
            host = coarse::build_tree_leaf_path(o.d).graph;
        } else if (o.family == "n-gadget") {
            auto ng = coarse::build_n_gadget({o.d, o.s}, o.vertex_budget);
            td = coarse::decompose_n_gadget(ng);
            host = std::move(ng.graph);
        } else {
            throw IoError("tree-decomp build: unknown host \"" + o.family + "\"");
        }
        save_json(o.out_path, coarse::decomposition_to_json(td));
        if (!o.graph_out_path.empty()) spill(o.graph_out_path, coarse::graph_to_string(host));
        r.body["bags"] = td.bags.size();
        r.body["width"] = coarse::width(td);
        r.emit();
        return kExitOk;
    }
    if (o.target == "validate") {
        Graph g = load_graph(o.graph_path);
        auto td = coarse::decomposition_from_json(load_json(o.td_path));
        auto bad = coarse::validate(g, td);
        if (!bad.has_value()) {
            r.body["verdict"] = "ok";
            r.body["width"] = coarse::width(td);
            r.emit();
            return kExitOk;
        }
        r.body["verdict"] = "violation";
        r.body["violation"] = td_violation_name(bad->kind);
        if (bad->kind == coarse::TDViolationKind::EdgeUncovered)
            r.body["edge"] = json::array({bad->edge.u, bad->edge.v});
        else
            r.body["vertex"] = bad->vertex;
        r.emit();
        return kExitNegative;
    }
    if (o.target == "width") {
        auto td = coarse::decomposition_from_json(load_json(o.td_path));
        r.body["width"] = coarse::width(td);
        r.emit();
        return kExitOk;
    }
    if (o.target == "exact") {
        Graph g = load_graph(o.graph_path);
        r.body["treewidth"] = coarse::exact_treewidth(g, o.cap);
        r.emit();
        return kExitOk;
    }
    throw IoError("tree-decomp: unknown action \"" + o.target + "\"");
}

int run_spread_paths(const Options& o) {
    Graph g = load_graph(o.graph_path);
    coarse::SpreadPathQuery qy;
    qy.s = parse_id_list(o.s_csv);
    qy.t = parse_id_list(o.t_csv);
    qy.k = o.paths;
    qy.min_distance = o.dist;
    qy.budget = {o.budget};
    auto verdict =
        o.use_oracle ? coarse::triple_oracle(g, qy) : coarse::find_spread_paths(g, qy);
    Report r{o.json_mode};
    r.body["verdict"] = verdict_name(verdict.kind);
    if (verdict.kind == coarse::VerdictKind::Found) {
        json w = coarse::spread_witness_to_json(*verdict.witness);
        if (!o.out_path.empty()) save_json(o.out_path, w);
        if (o.json_mode) r.body["witness"] = std::move(w);
    }
    r.emit();
    return verdict_exit(verdict.kind);
}

int run_witness_2fat(const Options& o) {
    coarse::AssemblyParams p =
        o.q > 0 ? coarse::paper_params(o.q) : coarse::AssemblyParams{o.n, o.d, o.s, o.t, o.c};
    auto a = coarse::build_g(p, o.vertex_budget);
    MinorModel m = coarse::build_2fat_witness(a);
    Graph pattern = coarse::build_h(p.n).graph;
    save_json(o.out_path, coarse::model_to_json(pattern, m));
    if (!o.graph_out_path.empty()) spill(o.graph_out_path, coarse::graph_to_string(a.graph));
    Report r{o.json_mode};
    r.body["vertices"] = a.graph.vertex_count();
    r.body["fatness"] = coarse::format_rat(m.fatness);
    r.emit();
    return kExitOk;
}

int run_pipeline(const Options& o) {
    Graph g = load_graph(o.graph_path);
    Graph pattern = load_pattern(o.pattern_spec);
    Rat k(o.k_int);
    auto host_verdict = coarse::find_fat_minor(g, pattern, k, {o.budget});
    Graph power = coarse::power_graph(g, o.k_int);
    auto power_verdict = coarse::find_fat_minor(power, pattern, Rat(3), {o.budget});

    Report r{o.json_mode};
    r.body["host_verdict"] = verdict_name(host_verdict.kind);
    r.body["power_verdict"] = verdict_name(power_verdict.kind);

    bool consistent = true;
    if (power_verdict.kind == coarse::VerdictKind::Found) {
        MinorModel lifted = coarse::inflate_model(g, pattern, o.k_int, *power_verdict.model);
        bool ok = coarse::verify_model(g, pattern, lifted, k).ok();
        r.body["inflated_ok"] = ok;
        consistent = ok && host_verdict.kind != coarse::VerdictKind::NoneExhaustive;
    }
    if (host_verdict.kind == coarse::VerdictKind::NoneExhaustive &&
        power_verdict.kind == coarse::VerdictKind::Found)
        consistent = false;
    r.body["consistent"] = consistent;
    r.emit();
    if (!consistent) return kExitNegative;
    if (host_verdict.kind == coarse::VerdictKind::Inconclusive ||
        power_verdict.kind == coarse::VerdictKind::Inconclusive)
        return kExitInconclusive;
    return kExitOk;
}

int run_certify(const Options& o) {
    json payload = load_json(o.payload_path);
    json bundle;
    bundle["kind"] = o.kind;
    bundle["version"] = kVersion;
    json hashes;
    hashes["payload"] = coarse::content_hash(slurp(o.payload_path));
    int exit_code = kExitOk;
    json verdict;

    if (o.kind == "model" || o.kind == "witness-2fat") {
        Graph g = load_graph(o.graph_path);
        hashes["graph"] = coarse::content_hash(slurp(o.graph_path));
        Graph pattern;
        MinorModel m = coarse::model_from_json(payload, pattern);
        Rat k = o.kind == "witness-2fat" ? Rat(2) : coarse::parse_rat(o.k_rat);
        auto report = coarse::verify_model(g, pattern, m, k);
        verdict = model_verdict_json(pattern, report);
        verdict["fatness"] = coarse::format_rat(k);
        if (!report.ok()) exit_code = kExitNegative;
    } else if (o.kind == "qi-map") {
        coarse::VertexMap m;
        m.domain = load_graph(o.domain_path);
        m.codomain = load_graph(o.codomain_path);
        hashes["domain"] = coarse::content_hash(slurp(o.domain_path));
        hashes["codomain"] = coarse::content_hash(slurp(o.codomain_path));
        coarse::map_from_json(payload, m);
        verdict["verdict"] = coarse::check_quasi_isometry(m).has_value() ? "violation" : "ok";
        if (verdict["verdict"] != "ok") exit_code = kExitNegative;
    } else if (o.kind == "tree-decomposition") {
        Graph g = load_graph(o.graph_path);
        hashes["graph"] = coarse::content_hash(slurp(o.graph_path));
        auto td = coarse::decomposition_from_json(payload);
        auto bad = coarse::validate(g, td);
        verdict["verdict"] = bad.has_value() ? "violation" : "ok";
        verdict["width"] = coarse::width(td);
        if (bad.has_value()) exit_code = kExitNegative;
    } else if (o.kind == "spread-paths") {
        Graph g = load_graph(o.graph_path);
        hashes["graph"] = coarse::content_hash(slurp(o.graph_path));
        auto w = coarse::spread_witness_from_json(payload);
        VertexSet s = parse_id_list(o.s_csv), t = parse_id_list(o.t_csv);
        bool ok = w.paths.size() >= o.paths;
        for (const auto& p : w.paths) {
            ok = ok && !p.empty() && coarse::set_contains(s, p.front()) &&
                 coarse::set_contains(t, p.back());
            for (std::size_t i = 0; ok && i + 1 < p.size(); ++i)
                ok = g.has_edge(p[i], p[i + 1]);
        }
        for (std::size_t i = 0; ok && i < w.paths.size(); ++i)
            for (std::size_t j = i + 1; ok && j < w.paths.size(); ++j) {
                VertexSet a(w.paths[i]), b(w.paths[j]);
                ok = coarse::set_distance(g, coarse::normalize_set(std::move(a)),
                                          coarse::normalize_set(std::move(b))) >=
                     Dist(o.dist);
            }
        verdict["verdict"] = ok ? "ok" : "violation";
        if (!ok) exit_code = kExitNegative;
    } else {
        throw IoError("certify: unknown kind \"" + o.kind + "\"");
    }

    bundle["payload"] = std::move(payload);
    bundle["verdict"] = std::move(verdict);
    bundle["input_hashes"] = std::move(hashes);
    if (!o.out_path.empty()) save_json(o.out_path, bundle);
    Report r{o.json_mode};
    r.body = bundle["verdict"];
    r.body["kind"] = o.kind;
    r.emit();
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coarse graph toolkit: constructions, fat-minor models, quasi-isometries,"
                 " tree decompositions, and spread-path search"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json_mode, "machine-readable JSON reports");
    app.add_option("--threads", o.threads, "worker threads (verdicts are thread-count"
                                           " independent; default 1)")
        ->check(CLI::PositiveNumber);

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--n", o.n, "clique size");
        cmd->add_option("--d", o.d, "tree depth");
        cmd->add_option("--s", o.s, "segment length");
        cmd->add_option("--t", o.t, "clique subdivision length");
        cmd->add_option("--c", o.c, "connector length");
        cmd->add_option("--q", o.q, "paper scale parameter (overrides the above)");
        cmd->add_option("--vertex-budget", o.vertex_budget, "construction size limit");
    };

    auto* construct = app.add_subcommand("construct", "build a named graph family");
    construct->add_option("family", o.family, "tree-leaf-path | n-gadget | h | g")->required();
    add_params(construct);
    construct->add_option("--out", o.out_path, "graph output file")->required();
    construct->add_option("--labels", o.labels_path, "labels JSON output file");

    auto* verify = app.add_subcommand("verify-model", "check a fat-minor model certificate");
    verify->add_option("--graph", o.graph_path)->required();
    verify->add_option("--model", o.model_path)->required();
    verify->add_option("--k", o.k_rat, "fatness to check at")->required();

    auto* find = app.add_subcommand("find-fat-minor", "search for a k-fat pattern minor");
    find->add_option("--graph", o.graph_path)->required();
    find->add_option("--pattern", o.pattern_spec, "builtin name or graph file")->required();
    find->add_option("--k", o.k_rat)->required();
    find->add_option("--budget", o.budget, "search node budget");
    find->add_option("--out", o.out_path, "model certificate output");

    auto* inflate = app.add_subcommand("inflate", "lift a 3-fat power-graph model to a"
                                                  " k-fat model of the base graph");
    inflate->add_option("--graph", o.graph_path, "base graph")->required();
    inflate->add_option("--k", o.k_int, "power exponent and target fatness")->required();
    inflate->add_option("--model", o.model_path, "3-fat model in the power graph")->required();
    inflate->add_option("--out", o.out_path, "lifted model output");

    auto* merge = app.add_subcommand("merge-sets", "merge clusters closer than eps");
    merge->add_option("--graph", o.graph_path)->required();
    merge->add_option("--sets", o.sets_path, "JSON array of vertex id arrays")->required();
    merge->add_option("--eps", o.eps_rat)->required();
    merge->add_option("--out", o.out_path, "merged sets output");

    auto* check_qi = app.add_subcommand("check-qi", "verify a quasi-isometry certificate");
    check_qi->add_option("--domain", o.domain_path)->required();
    check_qi->add_option("--codomain", o.codomain_path)->required();
    check_qi->add_option("--map", o.map_path)->required();

    auto* power_qi = app.add_subcommand("power-qi", "check the identity into the k-th power");
    power_qi->add_option("--graph", o.graph_path)->required();
    power_qi->add_option("--k", o.k_int)->required();
    power_qi->add_option("--out", o.out_path, "map certificate output");

    auto* td = app.add_subcommand("tree-decomp", "tree decomposition operations");
    td->add_option("action", o.target, "build | validate | width | exact")->required();
    td->add_option("--host", o.family, "build: tree-leaf-path | n-gadget");
    td->add_option("--d", o.d);
    td->add_option("--s", o.s);
    td->add_option("--vertex-budget", o.vertex_budget);
    td->add_option("--graph", o.graph_path);
    td->add_option("--td", o.td_path, "decomposition certificate");
    td->add_option("--out", o.out_path, "build: decomposition output");
    td->add_option("--graph-out", o.graph_out_path, "build: host graph output");
    td->add_option("--cap", o.cap, "exact: vertex cap");

    auto* spread = app.add_subcommand("spread-paths", "search for pairwise-far (s,t)-paths");
    spread->add_option("--graph", o.graph_path)->required();
    spread->add_option("--k", o.paths, "number of paths")->required();
    spread->add_option("--dist", o.dist, "required pairwise distance")->required();
    spread->add_option("--s-labels", o.s_csv, "comma-separated s vertex ids")->required();
    spread->add_option("--t-labels", o.t_csv, "comma-separated t vertex ids")->required();
    spread->add_option("--budget", o.budget);
    spread->add_flag("--oracle", o.use_oracle, "use the exhaustive path-subset oracle");
    spread->add_option("--out", o.out_path, "witness output");

    auto* witness = app.add_subcommand("witness-2fat", "build the assembly and its verified"
                                                       " 2-fat model certificate");
    add_params(witness);
    witness->add_option("--out", o.out_path, "model certificate output")->required();
    witness->add_option("--graph-out", o.graph_out_path, "assembly graph output");

    auto* pipeline = app.add_subcommand("pipeline-theorem13", "fat minors in the host versus"
                                                              " 3-fat minors in its k-th power");
    pipeline->add_option("--host", o.graph_path)->required();
    pipeline->add_option("--pattern", o.pattern_spec)->required();
    pipeline->add_option("--k", o.k_int)->required();
    pipeline->add_option("--budget", o.budget);

    auto* certify = app.add_subcommand("certify", "re-verify a certificate and bundle it"
                                                  " with hashes");
    certify->add_option("--kind", o.kind,
                        "model | qi-map | tree-decomposition | spread-paths | witness-2fat")
        ->required();
    certify->add_option("--payload", o.payload_path)->required();
    certify->add_option("--graph", o.graph_path);
    certify->add_option("--domain", o.domain_path);
    certify->add_option("--codomain", o.codomain_path);
    certify->add_option("--k", o.k_rat);
    certify->add_option("--dist", o.dist);
    certify->add_option("--paths", o.paths);
    certify->add_option("--s-labels", o.s_csv);
    certify->add_option("--t-labels", o.t_csv);
    certify->add_option("--out", o.out_path, "bundle output");

    // let --json / --threads appear after the subcommand name as well
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(o);
        if (verify->parsed()) return run_verify_model(o);
        if (find->parsed()) return run_find_fat_minor(o);
        if (inflate->parsed()) return run_inflate(o);
        if (merge->parsed()) return run_merge_sets(o);
        if (check_qi->parsed()) return run_check_qi(o);
        if (power_qi->parsed()) return run_power_qi(o);
        if (td->parsed()) return run_tree_decomp(o);
        if (spread->parsed()) return run_spread_paths(o);
        if (witness->parsed()) return run_witness_2fat(o);
        if (pipeline->parsed()) return run_pipeline(o);
        if (certify->parsed()) return run_certify(o);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitIo;
}
