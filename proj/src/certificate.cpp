#include "folkman/certificate.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "folkman/graph6.hpp"
#include "folkman/version.hpp"

namespace folkman {

using nlohmann::json;

namespace {

Certificate base_certificate(std::string verdict) {
    Certificate cert;
    cert.schema_version = kSchemaVersion;
    cert.tool_version = kToolVersion;
    cert.verdict = std::move(verdict);
    return cert;
}

}  // namespace

Certificate make_arrow_certificate(const Graph& g, const ArrowInstance& inst,
                                   const ArrowResult& res) {
    Certificate cert =
        base_certificate(res.verdict == Verdict::arrows ? "arrows" : "not-arrows");
    cert.graph_g6 = graph6_encode(g);
    cert.instance = inst;
    cert.witness_coloring = res.witness;
    cert.stats = res.stats;
    return cert;
}

Certificate make_clique_certificate(const Graph& g, const CliqueResult& res) {
    Certificate cert = base_certificate("clique-value");
    cert.graph_g6 = graph6_encode(g);
    cert.clique_value = res.size;
    std::vector<int> clique;
    for (int v : res.witness) clique.push_back(v + 1);
    cert.witness_clique = std::move(clique);
    SearchStats stats;
    stats.nodes = res.nodes_explored;
    stats.deterministic = true;
    cert.stats = stats;
    return cert;
}

Certificate make_check_certificate(const CheckReport& rep, const Graph* g) {
    Certificate cert = base_certificate("check-report");
    if (g) cert.graph_g6 = graph6_encode(*g);
    cert.check = rep;
    return cert;
}

std::string certificate_to_json(const Certificate& cert) {
    json j;
    j["schema_version"] = cert.schema_version;
    j["tool_version"] = cert.tool_version;
    j["verdict"] = cert.verdict;
    if (cert.graph_g6) j["graph_g6"] = *cert.graph_g6;
    if (cert.instance) {
        json ji;
        ji["a"] = cert.instance->a;
        ji["m"] = cert.instance->m;
        ji["p"] = cert.instance->p;
        if (cert.instance->q) ji["q"] = *cert.instance->q;
        j["instance"] = ji;
    }
    if (cert.labels) {
        j["labels"] = json{{"v", cert.labels->v}, {"u", cert.labels->u}};
    }
    if (cert.witness_coloring) j["witness"]["coloring"] = cert.witness_coloring->colors;
    if (cert.witness_clique) j["witness"]["clique"] = *cert.witness_clique;
    if (cert.clique_value) j["clique_number"] = *cert.clique_value;
    if (cert.check) {
        json jc;
        jc["check_id"] = cert.check->check_id;
        jc["pass"] = cert.check->pass;
        jc["cases_examined"] = cert.check->cases_examined;
        if (!cert.check->counterexample.empty())
            jc["counterexample"] = cert.check->counterexample;
        if (!cert.check->notes.empty()) jc["notes"] = cert.check->notes;
        if (cert.check->search_nodes > 0) jc["search_nodes"] = cert.check->search_nodes;
        j["check"] = jc;
    }
    if (cert.stats) {
        json js;
        js["nodes"] = cert.stats->nodes;
        js["prunes"] = cert.stats->prunes;
        js["deterministic"] = cert.stats->deterministic;
        if (!cert.stats->deterministic) js["wall_ms"] = cert.stats->wall_ms;
        j["stats"] = js;
    }
    if (cert.notes) j["notes"] = *cert.notes;
    return j.dump(2) + "\n";
}

namespace {

void ensure_keys(const json& obj, const std::set<std::string>& allowed,
                 const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ParseError("unknown key \"" + it.key() + "\" in " + where, 0);
}

template <typename T>
T get_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        throw ParseError("missing key \"" + std::string(key) + "\" in " + where, 0);
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError("wrong type for \"" + std::string(key) + "\" in " + where, 0);
    }
}

}  // namespace

Certificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object()) throw ParseError("certificate must be a JSON object", 0);
    ensure_keys(j,
                {"schema_version", "tool_version", "verdict", "graph_g6", "instance", "labels",
                 "witness", "clique_number", "check", "stats", "notes"},
                "certificate");

    Certificate cert;
    cert.schema_version = get_field<std::string>(j, "schema_version", "certificate");
    if (cert.schema_version != kSchemaVersion)
        throw ParseError("unsupported schema_version \"" + cert.schema_version + "\"", 0);
    cert.tool_version = get_field<std::string>(j, "tool_version", "certificate");
    cert.verdict = get_field<std::string>(j, "verdict", "certificate");
    static const std::set<std::string> kVerdicts{"arrows", "not-arrows", "clique-value",
                                                 "check-report"};
    if (!kVerdicts.count(cert.verdict))
        throw ParseError("unknown verdict \"" + cert.verdict + "\"", 0);

    if (j.contains("graph_g6")) cert.graph_g6 = get_field<std::string>(j, "graph_g6", "certificate");
    if (j.contains("instance")) {
        const json& ji = j.at("instance");
        ensure_keys(ji, {"a", "m", "p", "q"}, "instance");
        ArrowInstance inst;
        inst.a = get_field<std::vector<int>>(ji, "a", "instance");
        inst.m = get_field<int>(ji, "m", "instance");
        inst.p = get_field<int>(ji, "p", "instance");
        if (ji.contains("q")) inst.q = get_field<int>(ji, "q", "instance");
        cert.instance = inst;
    }
    if (j.contains("labels")) {
        const json& jl = j.at("labels");
        ensure_keys(jl, {"v", "u"}, "labels");
        GammaLabels labels;
        labels.v = get_field<std::vector<int>>(jl, "v", "labels");
        labels.u = get_field<std::vector<int>>(jl, "u", "labels");
        cert.labels = labels;
    }
    if (j.contains("witness")) {
        const json& jw = j.at("witness");
        ensure_keys(jw, {"coloring", "clique"}, "witness");
        if (jw.contains("coloring")) {
            Coloring col;
            col.colors = get_field<std::vector<int>>(jw, "coloring", "witness");
            cert.witness_coloring = std::move(col);
        }
        if (jw.contains("clique"))
            cert.witness_clique = get_field<std::vector<int>>(jw, "clique", "witness");
    }
    if (j.contains("clique_number"))
        cert.clique_value = get_field<int>(j, "clique_number", "certificate");
    if (j.contains("check")) {
        const json& jc = j.at("check");
        ensure_keys(jc, {"check_id", "pass", "cases_examined", "counterexample", "notes",
                         "search_nodes"},
                    "check");
        CheckReport rep;
        rep.check_id = get_field<std::string>(jc, "check_id", "check");
        rep.pass = get_field<bool>(jc, "pass", "check");
        rep.cases_examined = get_field<long long>(jc, "cases_examined", "check");
        if (jc.contains("counterexample"))
            rep.counterexample = get_field<std::string>(jc, "counterexample", "check");
        if (jc.contains("notes")) rep.notes = get_field<std::string>(jc, "notes", "check");
        if (jc.contains("search_nodes"))
            rep.search_nodes = get_field<long long>(jc, "search_nodes", "check");
        cert.check = rep;
    }
    if (j.contains("stats")) {
        const json& js = j.at("stats");
        ensure_keys(js, {"nodes", "prunes", "wall_ms", "deterministic"}, "stats");
        SearchStats stats;
        stats.nodes = get_field<long long>(js, "nodes", "stats");
        stats.prunes = get_field<long long>(js, "prunes", "stats");
        stats.deterministic = get_field<bool>(js, "deterministic", "stats");
        if (js.contains("wall_ms")) stats.wall_ms = get_field<double>(js, "wall_ms", "stats");
        cert.stats = stats;
    }
    if (j.contains("notes")) cert.notes = get_field<std::string>(j, "notes", "certificate");
    return cert;
}

void replay_certificate(const Certificate& cert) {
    std::optional<Graph> graph;
    if (cert.graph_g6) {
        try {
            graph = graph6_decode(*cert.graph_g6);
        } catch (const ParseError& e) {
            throw ReplayError(std::string("graph6 does not decode: ") + e.what());
        }
        if (graph6_encode(*graph) != *cert.graph_g6)
            throw ReplayError("graph6 string is not in canonical encoding");
    }

    if (cert.instance) {
        ArrowInstance rebuilt;
        try {
            rebuilt = make_instance(cert.instance->a, cert.instance->q);
        } catch (const InvalidParameter& e) {
            throw ReplayError(std::string("instance does not validate: ") + e.what());
        }
        if (rebuilt.m != cert.instance->m || rebuilt.p != cert.instance->p)
            throw ReplayError("instance m/p do not match the tuple");
    }

    if (cert.verdict == "not-arrows") {
        if (!graph || !cert.instance || !cert.witness_coloring)
            throw ReplayError("not-arrows certificate is missing graph, instance, or witness");
        bool free_col;
        try {
            free_col = is_free_coloring(*graph, *cert.instance, *cert.witness_coloring);
        } catch (const InvalidParameter& e) {
            throw ReplayError(std::string("witness coloring malformed: ") + e.what());
        }
        if (!free_col) throw ReplayError("witness coloring is not free");
    } else if (cert.verdict == "arrows") {
        if (!graph || !cert.instance)
            throw ReplayError("arrows certificate is missing graph or instance");
        if (cert.witness_coloring) throw ReplayError("arrows certificate carries a coloring");
    } else if (cert.verdict == "clique-value") {
        if (!graph || !cert.clique_value || !cert.witness_clique)
            throw ReplayError("clique certificate is missing graph, value, or witness");
        const auto& clique = *cert.witness_clique;
        if (static_cast<int>(clique.size()) != *cert.clique_value)
            throw ReplayError("clique witness size does not match the claimed value");
        for (int v : clique)
            if (v < 1 || v > graph->vertex_count())
                throw ReplayError("clique witness vertex out of range");
        for (std::size_t x = 0; x < clique.size(); ++x)
            for (std::size_t y = x + 1; y < clique.size(); ++y)
                if (clique[x] == clique[y] || !graph->has_edge(clique[x] - 1, clique[y] - 1))
                    throw ReplayError("clique witness is not a clique");
    } else if (cert.verdict == "check-report") {
        if (!cert.check) throw ReplayError("check-report certificate carries no report");
        if (!cert.check->pass && cert.check->counterexample.empty())
            throw ReplayError("failing check-report carries no counterexample");
    }

    if (cert.labels) {
        if (!graph) throw ReplayError("labels present but no graph");
        std::vector<int> seen;
        for (int id : cert.labels->v) seen.push_back(id);
        for (int id : cert.labels->u) seen.push_back(id);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw ReplayError("duplicate vertex id in labels");
        for (int id : seen)
            if (id < 1 || id > graph->vertex_count())
                throw ReplayError("label vertex id out of range");
    }
}

}  // namespace folkman
