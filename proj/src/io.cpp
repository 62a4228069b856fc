#include "trexp/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace trexp {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw InputError("expected an integer for " + what + ", got '" + tok + "'");
    }
    if (used != tok.size()) throw InputError("expected an integer for " + what + ", got '" + tok + "'");
    return v;
}

void check_n(int n) {
    if (n < 0 || n > kMaxVertices) throw InputError("n must lie in [0, 64], got " + std::to_string(n));
}

// Shared validation: ids in range, no repeated vertex, no duplicate edge.
Structure build(bool hyper, int n, const std::vector<std::vector<int>>& rows) {
    check_n(n);
    const std::size_t arity = hyper ? 3 : 2;
    std::set<std::vector<int>> seen;
    for (const auto& r : rows) {
        if (r.size() != arity)
            throw InputError("edge with " + std::to_string(r.size()) + " ids in a " + (hyper ? "3graph" : "graph"));
        for (int v : r)
            if (v < 0 || v >= n) throw InputError("vertex id " + std::to_string(v) + " out of range for n=" + std::to_string(n));
        auto s = r;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("edge repeats a vertex (loop)");
        if (!seen.insert(s).second) throw InputError("duplicate edge");
    }
    if (hyper) {
        std::vector<Triple> es;
        for (const auto& r : rows) es.emplace_back(r[0], r[1], r[2]);
        std::sort(es.begin(), es.end());
        return TripleSystem(n, es);
    }
    std::vector<Edge> es;
    for (const auto& r : rows) es.emplace_back(r[0], r[1]);
    std::sort(es.begin(), es.end());
    return Graph(n, es);
}

bool kind_is_hyper(const std::string& kind) {
    if (kind == "graph") return false;
    if (kind == "3graph") return true;
    throw InputError("kind must be 'graph' or '3graph', got '" + kind + "'");
}

Structure parse_json_structure(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("n") || !j.contains("edges"))
        throw InputError("JSON structure needs kind, n and edges");
    try {
        const bool hyper = kind_is_hyper(j.at("kind").get<std::string>());
        const int n = j.at("n").get<int>();
        std::vector<std::vector<int>> rows = j.at("edges").get<std::vector<std::vector<int>>>();
        return build(hyper, n, rows);
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed JSON structure: ") + e.what());
    }
}

Json edges_json(const std::vector<Edge>& es) {
    Json a = Json::array();
    for (const Edge& e : es) a.push_back({e.u, e.v});
    return a;
}

Json vertices_json(const std::vector<Vertex>& vs) {
    Json a = Json::array();
    for (Vertex v : vs) a.push_back(v);
    return a;
}

Json triples_json(const std::vector<Triple>& es) {
    Json a = Json::array();
    for (const Triple& t : es) a.push_back({t[0], t[1], t[2]});
    return a;
}

template <class T>
Json optional_json(const std::optional<T>& x) {
    return x ? Json(*x) : Json(nullptr);
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    const std::filesystem::path p(path);
    std::error_code ec;
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Structure parse_structure(const std::string& text) {
    const std::string body = trim(text);
    if (!body.empty() && body.front() == '{') return parse_json_structure(body);
    std::istringstream in(text);
    std::string line;
    bool have_header = false, hyper = false;
    int n = -1;
    std::vector<std::vector<int>> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string tok; ls >> tok;) toks.push_back(tok);
        if (!have_header) {
            std::string kind;
            for (const auto& tok : toks) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) throw InputError("line " + std::to_string(lineno) + ": expected header kind=... n=...");
                const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "kind")
                    kind = val;
                else if (key == "n")
                    n = parse_int(val, "n");
                else
                    throw InputError("unknown header field '" + key + "'");
            }
            if (kind.empty() || n < 0) throw InputError("header needs kind= and n=");
            hyper = kind_is_hyper(kind);
            have_header = true;
            continue;
        }
        std::vector<int> row;
        for (const auto& tok : toks) row.push_back(parse_int(tok, "vertex id on line " + std::to_string(lineno)));
        rows.push_back(std::move(row));
    }
    if (!have_header) throw InputError("missing header line kind=graph|3graph n=N");
    return build(hyper, n, rows);
}

Structure read_structure(const std::string& path) { return parse_structure(read_file(path)); }

Graph read_graph(const std::string& path) {
    auto s = read_structure(path);
    if (auto* g = std::get_if<Graph>(&s)) return *g;
    throw InputError("'" + path + "' holds a 3graph, a graph was expected");
}

TripleSystem read_triple_system(const std::string& path) {
    auto s = read_structure(path);
    if (auto* h = std::get_if<TripleSystem>(&s)) return *h;
    throw InputError("'" + path + "' holds a graph, a 3graph was expected");
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream os;
    os << "kind=graph n=" << g.n() << "\n";
    for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
    return os.str();
}

std::string to_edgelist(const TripleSystem& h) {
    std::ostringstream os;
    os << "kind=3graph n=" << h.n() << "\n";
    for (const Triple& t : h.edges()) os << t[0] << " " << t[1] << " " << t[2] << "\n";
    return os.str();
}

Json to_json(const Graph& g) { return Json{{"kind", "graph"}, {"n", g.n()}, {"edges", edges_json(g.edges())}}; }

Json to_json(const TripleSystem& h) {
    return Json{{"kind", "3graph"}, {"n", h.n()}, {"edges", triples_json(h.edges())}};
}

Graph graph_from_json(const Json& j) {
    auto s = parse_json_structure(j.dump());
    if (auto* g = std::get_if<Graph>(&s)) return *g;
    throw InputError("expected a graph");
}

TripleSystem triple_system_from_json(const Json& j) {
    auto s = parse_json_structure(j.dump());
    if (auto* h = std::get_if<TripleSystem>(&s)) return *h;
    throw InputError("expected a 3graph");
}

Coloring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::array<int, 4>> rows;
    int max_id = -1, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string tok; ls >> tok;) toks.push_back(tok);
        if (toks.size() != 4) throw InputError("coloring line " + std::to_string(lineno) + ": expected 'u v w c'");
        std::array<int, 4> r{};
        for (std::size_t i = 0; i < 4; ++i) r[i] = parse_int(toks[i], "coloring line " + std::to_string(lineno));
        for (std::size_t i = 0; i < 3; ++i) {
            if (r[i] < 0) throw InputError("negative vertex id in coloring");
            max_id = std::max(max_id, r[i]);
        }
        if (r[3] < 0) throw InputError("negative colour in coloring");
        rows.push_back(r);
    }
    const int n = max_id + 1;
    check_n(n);
    if (n < 3) throw InputError("coloring needs at least 3 vertices");
    std::vector<int> colors(static_cast<std::size_t>(binom(n, 3)), -1);
    for (const auto& r : rows) {
        Triple t(r[0], r[1], r[2]);
        if (!t.distinct()) throw InputError("coloring triple repeats a vertex");
        auto& slot = colors[static_cast<std::size_t>(triple_index(n, t))];
        if (slot >= 0) throw InputError("coloring lists a triple twice");
        slot = r[3];
    }
    if (std::find(colors.begin(), colors.end(), -1) != colors.end())
        throw InputError("coloring does not cover every triple of [" + std::to_string(n) + "]");
    return make_coloring(n, std::move(colors));
}

Coloring read_coloring(const std::string& path) { return parse_coloring(read_file(path)); }

std::string to_coloring_text(const Coloring& chi) {
    std::ostringstream os;
    std::size_t i = 0;
    for (const Triple& t : all_triples(chi.n)) os << t[0] << " " << t[1] << " " << t[2] << " " << chi.colors[i++] << "\n";
    return os.str();
}

Json to_json(const CrosscutPair& p) {
    return Json{{"independent", vertices_json(p.independent)}, {"remainder", edges_json(p.remainder)}, {"cost", p.cost()}};
}

Json to_json(const TreeProfile& p) {
    Json pairs = Json::array();
    for (const auto& cp : p.crosscut_pairs) pairs.push_back(to_json(cp));
    return Json{{"tree", to_json(p.tree)},
                {"sigma", p.sigma},
                {"tau", p.tau},
                {"tauInd", optional_json(p.tau_ind)},
                {"bestPair", to_json(p.best_pair)},
                {"crosscutPairs", pairs},
                {"crosscutPairsOverflow", p.crosscut_pairs_overflow},
                {"criticalEdges", edges_json(p.critical_edges)},
                {"stronglyEdgeCritical", p.strongly_edge_critical},
                {"sigmaEqualsTauInd", p.sigma_equals_tau_ind}};
}

Json to_json(const Embedding& e) {
    Json triples = Json::array();
    const auto& es = e.pattern.edges();
    for (std::size_t i = 0; i < es.size() && i < e.expansion_map.size(); ++i) {
        const Vertex a = e.core_map[static_cast<std::size_t>(es[i].u)];
        const Vertex b = e.core_map[static_cast<std::size_t>(es[i].v)];
        triples.push_back({a, b, e.expansion_map[i]});
    }
    return Json{{"hostKind", e.host_kind == HostKind::Graph ? "graph" : "3graph"},
                {"pattern", to_json(e.pattern)},
                {"coreMap", vertices_json(e.core_map)},
                {"expansionMap", vertices_json(e.expansion_map)},
                {"imageTriples", triples}};
}

Embedding embedding_from_json(const Json& j) {
    try {
        Embedding e;
        e.pattern = graph_from_json(j.at("pattern"));
        e.core_map = j.at("coreMap").get<std::vector<Vertex>>();
        e.expansion_map = j.at("expansionMap").get<std::vector<Vertex>>();
        e.host_kind = j.at("hostKind").get<std::string>() == "graph" ? HostKind::Graph : HostKind::TripleSystem;
        if (e.core_map.size() != static_cast<std::size_t>(e.pattern.n()) ||
            e.expansion_map.size() != static_cast<std::size_t>(e.pattern.size()))
            throw InputError("embedding maps do not match the pattern");
        return e;
    } catch (const Json::exception& ex) {
        throw InputError(std::string("malformed embedding JSON: ") + ex.what());
    }
}

Json to_json(const RainbowCertificate& c) {
    Json j = to_json(c.embedding);
    j["colors"] = c.colors;
    return j;
}

Json to_json(const CleaningTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"pair", {s.pair.u, s.pair.v}}, {"type", s.type}, {"removed", triples_json(s.removed)}});
    return Json{{"k", t.k},
                {"t", t.t},
                {"input", to_json(t.input)},
                {"hStarSize", t.h_star.size()},
                {"h0", to_json(t.h0)},
                {"q", t.q()},
                {"removedPairs", steps},
                {"finalSystem", to_json(t.final_system)},
                {"superfull", optional_json(t.superfull)}};
}

CleaningTrace cleaning_trace_from_json(const Json& j) {
    try {
        CleaningTrace t;
        t.k = j.at("k").get<int>();
        t.t = j.at("t").get<int>();
        t.input = triple_system_from_json(j.at("input"));
        t.h0 = triple_system_from_json(j.at("h0"));
        for (const auto& s : j.at("removedPairs")) {
            CleaningStep st;
            auto p = s.at("pair").get<std::vector<int>>();
            if (p.size() != 2) throw InputError("pair must have two ids");
            st.pair = Edge(p[0], p[1]);
            st.type = s.at("type").get<int>();
            for (const auto& r : s.at("removed")) {
                auto v = r.get<std::vector<int>>();
                if (v.size() != 3) throw InputError("removed edge must have three ids");
                st.removed.emplace_back(v[0], v[1], v[2]);
            }
            t.steps.push_back(std::move(st));
        }
        t.final_system = triple_system_from_json(j.at("finalSystem"));
        if (!j.at("superfull").is_null()) t.superfull = j.at("superfull").get<bool>();
        t.h_star = t.input.filtered([&](const Triple& e) { return !t.h0.contains(e); });
        return t;
    } catch (const Json::exception& ex) {
        throw InputError(std::string("malformed trace JSON: ") + ex.what());
    }
}

Json to_json(const FullnessReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"name", e.name},
                           {"pattern", to_json(e.pattern)},
                           {"found", e.embedding.has_value()},
                           {"embedding", e.embedding ? to_json(*e.embedding) : Json(nullptr)}});
    return Json{{"k", r.k}, {"allFound", r.all_found()}, {"entries", entries}};
}

Json to_json(const TuranResult& r) {
    Json wit = Json::array();
    for (const auto& h : r.hypergraph_witnesses) wit.push_back(to_json(h));
    for (const auto& g : r.graph_witnesses) wit.push_back(to_json(g));
    return Json{{"mode", r.mode},
                {"n", r.n},
                {"pattern", to_json(r.pattern)},
                {"value", optional_json(r.value)},
                {"witnesses", wit},
                {"construction", r.construction},
                {"constructionValue", optional_json(r.construction_value)},
                {"constructionFree", optional_json(r.construction_free)},
                {"matchesConstruction", optional_json(r.matches_construction)},
                {"nodes", r.nodes}};
}

Json to_json(const ClosenessReport& r) {
    Json conds = Json::array();
    for (const auto& c : r.conditions)
        conds.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"holds", c.holds}});
    return Json{{"L", vertices_json(r.l)},
                {"delta", r.delta},
                {"conditions", conds},
                {"bipartizationExact", r.bipartization_exact},
                {"accepted", r.accepted}};
}

Json to_json(const AntiRamseyReport& r) {
    Json del = Json::array();
    for (const auto& [e, free] : r.deletion_free) del.push_back({{"edge", {e.u, e.v}}, {"baseFree", free}});
    return Json{{"n", r.n},
                {"tree", to_json(r.tree)},
                {"augmentation", to_json(r.augmentation)},
                {"sigma", r.sigma},
                {"tDefault", r.t_default},
                {"tUsed", r.t_used},
                {"deletions", del},
                {"defaultBaseFree", r.default_base_free},
                {"baseSize", r.base_size},
                {"lower", r.lower},
                {"upperFormula", r.upper_formula},
                {"colorCount", r.coloring.color_count},
                {"rainbowFree", optional_json(r.rainbow_free)},
                {"rainbowCopy", r.rainbow_copy ? to_json(*r.rainbow_copy) : Json(nullptr)}};
}

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Info: return "info";
    }
    return "info";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Json to_json(const SuiteReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
    return Json{{"suite", r.suite},
                {"maxN", r.max_n},
                {"passed", r.passed()},
                {"counts", {{"pass", r.count(CheckStatus::Pass)}, {"fail", r.count(CheckStatus::Fail)}, {"info", r.count(CheckStatus::Info)}}},
                {"checks", checks}};
}

std::string to_csv(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite,name,status,detail\n";
    for (const auto& c : r.checks)
        os << csv_field(r.suite) << "," << csv_field(c.name) << "," << status_name(c.status) << "," << csv_field(c.detail) << "\n";
    return os.str();
}

std::string to_csv(const TuranResult& r) {
    std::ostringstream os;
    os << "mode,n,value,construction,construction_value,construction_free\n";
    os << r.mode << "," << r.n << "," << (r.value ? std::to_string(*r.value) : "") << "," << csv_field(r.construction) << ","
       << (r.construction_value ? std::to_string(*r.construction_value) : "") << ","
       << (r.construction_free ? (*r.construction_free ? "true" : "false") : "") << "\n";
    return os.str();
}

}  // namespace trexp
