#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "folkman/arrowing.hpp"
#include "folkman/certificate.hpp"
#include "folkman/clique.hpp"
#include "folkman/gamma.hpp"
#include "folkman/graph6.hpp"
#include "folkman/instance.hpp"
#include "folkman/oracle.hpp"
#include "folkman/version.hpp"

namespace {

using namespace folkman;

Graph load_graph(const std::string& arg) {
    std::string text = arg;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) throw InvalidParameter("cannot open graph file " + arg);
        text.clear();
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) {
                text = line;
                break;
            }
        }
        if (text.empty()) throw ParseError("graph file " + arg + " holds no graph6 line", 0);
    }
    return graph6_decode(text);
}

GammaLabels gamma_labels(int p, int shift) {
    GammaLabels labels;
    const int c = 2 * p + 1;
    for (int i = 0; i < c; ++i) labels.v.push_back(shift + i + 1);
    for (int i = 0; i < c; ++i) labels.u.push_back(shift + c + i + 1);
    return labels;
}

constexpr const char* kHypothesisNote =
    "witness construction is defined for p >= 3 and m >= p+2 (the complete join "
    "factor K_{m-p-2} must be well-defined; m = p+2 makes it empty)";

// Everything the subcommands need once parsing is done.
struct Cli {
    // construct
    int gamma_p = 0;
    std::vector<int> witness_tuple;
    bool as_json = false;
    // shared graph input
    std::string graph_arg;
    std::vector<int> tuple;
    bool use_witness = false;
    bool use_sigma = false;
    // search knobs
    bool deterministic = false;
    long long budget = 0;
    int workers = 0;
    std::string order = "degree_desc";
    // verify
    std::string suite;
    std::string replay_path;
    int p = 0;
    int kmax = 16;
    int nmax = 12;
    int rmax = 4;
    // export
    std::string format = "graph6";
};

SearchConfig search_config(const Cli& cli) {
    SearchConfig cfg;
    cfg.deterministic = cli.deterministic;
    cfg.node_budget = cli.budget;
    cfg.worker_width = cli.workers;
    if (cli.order == "degree_desc")
        cfg.order = OrderPolicy::degree_descending;
    else if (cli.order == "degree_asc")
        cfg.order = OrderPolicy::degree_ascending;
    else
        cfg.order = OrderPolicy::index_ascending;
    return cfg;
}

struct ResolvedGraph {
    Graph graph;
    std::optional<VertexPermutation> sigma;  // when constructed in-process
    std::optional<GammaLabels> labels;
};

ResolvedGraph resolve_graph(const Cli& cli, const std::optional<ArrowInstance>& inst) {
    const int sources =
        (cli.graph_arg.empty() ? 0 : 1) + (cli.gamma_p > 0 ? 1 : 0) + (cli.use_witness ? 1 : 0);
    if (sources != 1)
        throw InvalidParameter("need exactly one graph source: graph6 argument, --gamma, or --witness");
    ResolvedGraph out;
    if (cli.gamma_p > 0) {
        GammaGraph gamma = build_gamma(cli.gamma_p);
        out.sigma = gamma.sigma;
        out.labels = gamma_labels(cli.gamma_p, 0);
        out.graph = std::move(gamma.graph);
    } else if (cli.use_witness) {
        if (!inst) throw InvalidParameter("--witness needs --tuple");
        out.graph = witness_graph(*inst);
        GammaGraph gamma = build_gamma(inst->p);
        const int k_block = inst->m - inst->p - 2;
        out.sigma = witness_sigma(gamma, k_block);
        out.labels = gamma_labels(inst->p, k_block);
    } else {
        out.graph = load_graph(cli.graph_arg);
    }
    return out;
}

int run_construct(const Cli& cli) {
    if ((cli.gamma_p > 0) + (!cli.witness_tuple.empty()) != 1)
        throw InvalidParameter("construct needs exactly one of --gamma or --witness");
    Graph g;
    std::optional<GammaLabels> labels;
    std::optional<ArrowInstance> inst;
    std::string what;
    if (cli.gamma_p > 0) {
        GammaGraph gamma = build_gamma(cli.gamma_p);
        g = std::move(gamma.graph);
        labels = gamma_labels(cli.gamma_p, 0);
        what = "gamma(p=" + std::to_string(cli.gamma_p) + ")";
    } else {
        inst = make_instance(cli.witness_tuple);
        g = witness_graph(*inst);
        labels = gamma_labels(inst->p, inst->m - inst->p - 2);
        what = "witness(m=" + std::to_string(inst->m) + ",p=" + std::to_string(inst->p) + ")";
    }
    if (!cli.as_json) {
        std::cout << graph6_encode(g) << '\n';
        return 0;
    }
    CheckReport rep;
    rep.check_id = "construct " + what;
    rep.cases_examined = 1;
    Certificate cert = make_check_certificate(rep, &g);
    cert.labels = labels;
    cert.instance = inst;
    if (inst) cert.notes = kHypothesisNote;
    std::cout << certificate_to_json(cert);
    return 0;
}

int run_clique(const Cli& cli) {
    Graph g = load_graph(cli.graph_arg);
    CliqueResult res = clique_number(g);
    if (cli.as_json) {
        std::cout << certificate_to_json(make_clique_certificate(g, res));
    } else {
        std::cout << "clique_number = " << res.size << "\nwitness =";
        for (int v : res.witness) std::cout << ' ' << v + 1;
        std::cout << '\n';
    }
    return 0;
}

int run_arrows(const Cli& cli) {
    if (cli.tuple.empty()) throw InvalidParameter("arrows needs --tuple");
    ArrowInstance inst = make_instance(cli.tuple);
    std::optional<ArrowInstance> inst_opt = inst;
    ResolvedGraph src = resolve_graph(cli, inst_opt);
    SearchConfig cfg = search_config(cli);
    if (cli.use_sigma) {
        if (!src.sigma)
            throw InvalidParameter(
                "--sigma needs a graph constructed in this invocation (--gamma or --witness)");
        cfg.symmetry_generators = {*src.sigma};
    }
    ArrowResult res = arrows(src.graph, inst, cfg);
    Certificate cert = make_arrow_certificate(src.graph, inst, res);
    cert.labels = src.labels;
    if (cli.use_witness) cert.notes = kHypothesisNote;
    std::cout << certificate_to_json(cert);
    return res.verdict == Verdict::arrows ? 0 : 1;
}

int run_bounds(const Cli& cli) {
    if (cli.tuple.empty()) throw InvalidParameter("bounds needs --tuple");
    ArrowInstance inst = make_instance(cli.tuple);
    BoundReport rep = bounds_report(inst);
    auto line = [&](const char* name, const BoundEntry& e, const char* window) {
        std::cout << name << " = ";
        if (e.valid)
            std::cout << e.value << '\n';
        else
            std::cout << "out of range (needs " << window << ")\n";
    };
    std::cout << "m = " << inst.m << ", p = " << inst.p << '\n';
    line("upper_main", rep.upper_main, "p >= 3 and m >= p+2");
    line("upper_large_m", rep.upper_large_m, "m >= 2p+2");
    line("upper_mid_m", rep.upper_mid_m, "p+3 <= m <= 2p+1");
    line("lower", rep.lower, "p >= 2");
    return 0;
}

int run_verify(const Cli& cli) {
    if (!cli.replay_path.empty()) {
        std::ifstream in(cli.replay_path);
        if (!in) throw InvalidParameter("cannot open certificate file " + cli.replay_path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        Certificate cert = certificate_from_json(text);
        replay_certificate(cert);
        std::cout << "replay ok: " << cert.verdict << '\n';
        return 0;
    }

    SearchConfig cfg = search_config(cli);
    CheckReport rep;
    std::optional<Graph> attach;
    if (cli.suite == "prop1") {
        rep = cli.tuple.empty() ? verify_prop1_sweep(cli.nmax, cli.rmax) : verify_prop1(cli.tuple);
    } else if (cli.suite == "paths") {
        rep = verify_path_complement(cli.kmax);
    } else if (cli.suite == "lemma1") {
        if (cli.p == 0) throw InvalidParameter("suite lemma1 needs --p");
        rep = verify_lemma1(cli.p);
    } else if (cli.suite == "lemmas23") {
        if (cli.p == 0) throw InvalidParameter("suite lemmas23 needs --p");
        rep = verify_lemmas_2_3(cli.p);
    } else if (cli.suite == "theorem1") {
        if (cli.p == 0) throw InvalidParameter("suite theorem1 needs --p");
        rep = verify_theorem1(cli.p, cfg);
        attach = build_gamma(cli.p).graph;
    } else if (cli.suite == "main") {
        if (cli.tuple.empty()) throw InvalidParameter("suite main needs --tuple");
        ArrowInstance inst = make_instance(cli.tuple);
        rep = verify_main(inst, cfg);
        attach = witness_graph(inst);
    } else {
        throw InvalidParameter("verify needs --suite or --replay");
    }
    Certificate cert = make_check_certificate(rep, attach ? &*attach : nullptr);
    std::cout << certificate_to_json(cert);
    return rep.pass ? 0 : 1;
}

int run_export(const Cli& cli) {
    Graph g = load_graph(cli.graph_arg);
    if (cli.format == "dimacs")
        std::cout << export_dimacs_col(g);
    else
        std::cout << graph6_encode(g) << '\n';
    return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"witness graphs and arrowing certificates for vertex Folkman bounds"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    Cli cli;

    auto* construct = app.add_subcommand("construct", "build Gamma_p or K_{m-p-2} + Gamma_p");
    construct->add_option("--gamma", cli.gamma_p, "p parameter of Gamma_p")->check(CLI::PositiveNumber);
    construct->add_option("--witness", cli.witness_tuple, "tuple a_1,...,a_r")->delimiter(',');
    construct->add_flag("--json", cli.as_json, "emit a certificate instead of bare graph6");

    auto* clique = app.add_subcommand("clique", "exact clique number with witness");
    clique->add_option("graph", cli.graph_arg, "graph6 string or file")->required();
    clique->add_flag("--json", cli.as_json, "emit a certificate");

    auto* arrows_cmd = app.add_subcommand("arrows", "decide G -> (a_1,...,a_r)");
    arrows_cmd->add_option("graph", cli.graph_arg, "graph6 string or file");
    arrows_cmd->add_option("--gamma", cli.gamma_p, "use Gamma_p as the graph")->check(CLI::PositiveNumber);
    arrows_cmd->add_flag("--witness", cli.use_witness, "use the witness graph of --tuple");
    arrows_cmd->add_option("--tuple", cli.tuple, "a_1,...,a_r")->required()->delimiter(',');
    arrows_cmd->add_flag("--sigma", cli.use_sigma, "use the rotation (constructed graphs only)");

    auto* bounds = app.add_subcommand("bounds", "published order bounds for the instance");
    bounds->add_option("--tuple", cli.tuple, "a_1,...,a_r")->required()->delimiter(',');

    auto* verify = app.add_subcommand("verify", "run a check suite or replay a certificate");
    verify->add_option("--suite", cli.suite, "one of prop1, paths, lemma1, lemmas23, theorem1, main")
        ->check(CLI::IsMember({"prop1", "paths", "lemma1", "lemmas23", "theorem1", "main"}));
    verify->add_option("--replay", cli.replay_path, "certificate JSON file to re-validate");
    verify->add_option("--p", cli.p, "parameter p for lemma1/lemmas23/theorem1");
    verify->add_option("--tuple", cli.tuple, "tuple for prop1/main")->delimiter(',');
    verify->add_option("--kmax", cli.kmax, "path length ceiling for the paths suite");
    verify->add_option("--nmax", cli.nmax, "tuple sum ceiling for the prop1 sweep");
    verify->add_option("--rmax", cli.rmax, "tuple length ceiling for the prop1 sweep");

    auto* exp = app.add_subcommand("export", "re-emit a graph");
    exp->add_option("graph", cli.graph_arg, "graph6 string or file")->required();
    exp->add_option("--format", cli.format, "graph6 or dimacs")
        ->check(CLI::IsMember({"graph6", "dimacs"}));

    for (CLI::App* cmd : {arrows_cmd, verify}) {
        cmd->add_flag("--deterministic", cli.deterministic, "sequential search, stable output");
        cmd->add_option("--budget", cli.budget, "search node budget (0 = unlimited)");
        cmd->add_option("--workers", cli.workers, "parallel workers (0 = hardware)");
        cmd->add_option("--order", cli.order, "vertex order: degree_desc, degree_asc, index")
            ->check(CLI::IsMember({"degree_desc", "degree_asc", "index"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(construct)) return run_construct(cli);
        if (app.got_subcommand(clique)) return run_clique(cli);
        if (app.got_subcommand(arrows_cmd)) return run_arrows(cli);
        if (app.got_subcommand(bounds)) return run_bounds(cli);
        if (app.got_subcommand(verify)) return run_verify(cli);
        if (app.got_subcommand(exp)) return run_export(cli);
        return 2;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return 3;
    } catch (const ReplayError& e) {
        std::cerr << "replay failed: " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

int main(int argc, char** argv) { return cli_main(argc, argv); }
