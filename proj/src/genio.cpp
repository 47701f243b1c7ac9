#include "kecs/genio.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "kecs/version.hpp"

namespace kecs {

std::uint64_t Rng::below(std::uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
}

double Rng::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

}  // namespace

MultiGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "el" || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": malformed header, expected 'p el <n> <m>'");
            continue;
        }
        if (tag == "e") {
            if (n == -1)
                throw ParseError("line " + std::to_string(lineno) + ": edge before header");
            int u, v;
            if (!(ls >> u >> v))
                throw ParseError("line " + std::to_string(lineno) + ": malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("line " + std::to_string(lineno) + ": vertex out of range 1.." +
                                 std::to_string(n));
            if (u == v)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": loop edge rejected, the model is loopless");
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw ParseError("line " + std::to_string(lineno) + ": unknown line type '" + tag + "'");
    }
    if (n == -1) throw ParseError("missing 'p el' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", found " +
                         std::to_string(edges.size()));
    return MultiGraph(n, edges);
}

std::string to_edge_list(const MultiGraph& g) {
    std::ostringstream out;
    out << "p el " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    return out.str();
}

MultiGraph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.empty()) throw ParseError("graph6: empty input");
    unsigned char c0 = static_cast<unsigned char>(s[0]);
    if (c0 == 126) throw ParseError("graph6: long-form sizes (n > 62) are not supported");
    if (c0 < 63 || c0 > 125) throw ParseError("graph6: malformed size byte");
    const int n = c0 - 63;
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const long long need = (bits + 5) / 6;
    if (static_cast<long long>(s.size()) - 1 < need) throw ParseError("graph6: truncated input");
    if (static_cast<long long>(s.size()) - 1 > need)
        throw ParseError("graph6: trailing characters");
    std::vector<std::pair<int, int>> edges;
    long long t = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
            unsigned char byte = static_cast<unsigned char>(s[1 + t / 6]);
            if (byte < 63 || byte > 126) throw ParseError("graph6: byte out of range");
            if ((byte - 63) >> (5 - t % 6) & 1) edges.emplace_back(i, j);
        }
    }
    return MultiGraph(n, edges);
}

MultiGraph gen_regular_bipartite(int half_n, int k, std::uint64_t seed) {
    if (half_n < 1) throw GraphError("gen_regular_bipartite: half_n must be positive");
    if (k < 0) throw GraphError("gen_regular_bipartite: k must be non-negative");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> perm(half_n);
    for (int j = 0; j < k; ++j) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = half_n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        for (int i = 0; i < half_n; ++i) edges.emplace_back(i, half_n + perm[i]);
    }
    return MultiGraph(2 * half_n, edges);
}

MultiGraph gen_random_bipartite(int nu, int nw, double p, int max_mult, std::uint64_t seed) {
    if (nu < 0 || nw < 0) throw GraphError("gen_random_bipartite: negative part size");
    if (p < 0.0 || p > 1.0) throw GraphError("gen_random_bipartite: probability out of [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < nu; ++u)
        for (int w = 0; w < nw; ++w)
            for (int t = 0; t < max_mult; ++t)
                if (rng.uniform01() < p) edges.emplace_back(u, nu + w);
    return MultiGraph(nu + nw, edges);
}

MultiGraph gen_nearly_bipartite(int nu, int nw, double p, int max_mult, int apex_degree,
                                std::uint64_t seed) {
    if (apex_degree < 0) throw GraphError("gen_nearly_bipartite: negative apex degree");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < nu; ++u)
        for (int w = 0; w < nw; ++w)
            for (int t = 0; t < max_mult; ++t)
                if (rng.uniform01() < p) edges.emplace_back(u, nu + w);
    const int apex = nu + nw;
    for (int t = 0; t < apex_degree; ++t) {
        // alternate sides so odd cycles through the apex are possible
        if (t % 2 == 0 && nu > 0)
            edges.emplace_back(apex, static_cast<int>(rng.below(nu)));
        else if (nw > 0)
            edges.emplace_back(apex, nu + static_cast<int>(rng.below(nw)));
        else if (nu > 0)
            edges.emplace_back(apex, static_cast<int>(rng.below(nu)));
    }
    return MultiGraph(nu + nw + 1, edges);
}

namespace {

MultiGraph make_cycle(int n) {
    if (n < 2) throw ParseError("cycle:<n> needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return MultiGraph(n, edges);
}

MultiGraph make_path(int n) {
    if (n < 1) throw ParseError("path:<n> needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return MultiGraph(n, edges);
}

MultiGraph make_star(int leaves) {
    if (leaves < 0) throw ParseError("star:<n> needs n >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return MultiGraph(leaves + 1, edges);
}

MultiGraph make_theta(const std::vector<int>& lens) {
    // two hubs joined by internally disjoint paths of the given edge lengths
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    for (int len : lens) {
        if (len < 1) throw ParseError("theta path length must be >= 1");
        int prev = 0;
        for (int t = 1; t < len; ++t) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return MultiGraph(next, edges);
}

}  // namespace

MultiGraph gen_named(const std::string& name) {
    if (name == "figure1") {
        // two triangles {0,1,2} and {3,4,5} joined by the middle edge 2-3
        return MultiGraph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    }
    if (name == "k33") {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 3; ++u)
            for (int w = 3; w < 6; ++w) edges.emplace_back(u, w);
        return MultiGraph(6, edges);
    }
    if (name == "k4") {
        return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    }
    if (name == "petersen") {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
        for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
        return MultiGraph(10, edges);
    }
    if (name == "cube") {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 8; ++u)
            for (int b = 0; b < 3; ++b)
                if (u < (u ^ (1 << b))) edges.emplace_back(u, u ^ (1 << b));
        return MultiGraph(8, edges);
    }
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string kind = name.substr(0, colon);
        std::string rest = name.substr(colon + 1);
        try {
            if (kind == "cycle") return make_cycle(std::stoi(rest));
            if (kind == "path") return make_path(std::stoi(rest));
            if (kind == "star") return make_star(std::stoi(rest));
            if (kind == "theta") {
                std::vector<int> lens;
                std::istringstream ls(rest);
                std::string tok;
                while (std::getline(ls, tok, ':')) lens.push_back(std::stoi(tok));
                if (lens.size() < 2) throw ParseError("theta needs at least two path lengths");
                return make_theta(lens);
            }
        } catch (const std::invalid_argument&) {
            throw ParseError("unknown named graph: " + name);
        }
    }
    throw ParseError("unknown named graph: " + name);
}

std::pair<EdgeSubgraph, EdgeColoring> figure1_a2(const MultiGraph& figure1) {
    if (figure1.vertex_count() != 6 || figure1.edge_count() != 7)
        throw GraphError("figure1_a2: not the figure1 instance");
    EdgeSubgraph sub(figure1, {0, 2, 3, 4, 6});
    EdgeColoring col(figure1, 2);
    col.set_color(0, 1);
    col.set_color(2, 2);
    col.set_color(3, 1);
    col.set_color(4, 2);
    col.set_color(6, 1);
    return {std::move(sub), std::move(col)};
}

nlohmann::json graph_to_json(const MultiGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

MultiGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph json needs 'n' and 'edges'");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return MultiGraph(j.at("n").get<int>(), edges);
}

std::string emit_certificate(const SolveResult& r, const MultiGraph& g,
                             std::optional<std::uint64_t> seed) {
    nlohmann::json coloring = nlohmann::json::array();
    for (int e : r.subgraph.members())
        coloring.push_back({e, r.coloring.color_of(e)});
    nlohmann::json payload = {
        {"schema", kCertificateSchema},
        {"graph", graph_to_json(g)},
        {"k", r.k},
        {"nu", r.nu},
        {"subgraph", r.subgraph.members()},
        {"coloring", coloring},
        {"method", method_name(r.method)},
        {"stats",
         {{"augmentations", r.stats.augmentations},
          {"flow_value", r.stats.flow_value},
          {"nodes_explored", r.stats.nodes_explored},
          {"budget_exhausted", r.stats.budget_exhausted},
          {"shortcut", r.stats.shortcut}}},
        {"tool", std::string(kToolName) + " " + kToolVersion},
        {"seed", seed ? nlohmann::json(*seed) : nlohmann::json(nullptr)},
    };
    return certificate_from_payload(payload);
}

std::string certificate_from_payload(const nlohmann::json& payload) {
    nlohmann::json cert = {{"payload", payload}, {"sha256", sha256_hex(payload.dump())}};
    return cert.dump();
}

CertificateCheck verify_certificate(const std::string& text) {
    CertificateCheck out;
    nlohmann::json cert = nlohmann::json::parse(text, nullptr, false);
    if (cert.is_discarded()) {
        out.violation = "malformed-json";
        return out;
    }
    if (!cert.is_object() || !cert.contains("payload") || !cert.contains("sha256")) {
        out.violation = "schema-mismatch";
        out.detail = "missing payload or sha256";
        return out;
    }
    const nlohmann::json& payload = cert["payload"];
    if (sha256_hex(payload.dump()) != cert["sha256"]) {
        out.violation = "digest-mismatch";
        return out;
    }
    static const std::set<std::string> expected_keys = {
        "schema", "graph", "k", "nu", "subgraph", "coloring", "method", "stats", "tool", "seed"};
    std::set<std::string> keys;
    for (auto it = payload.begin(); it != payload.end(); ++it) keys.insert(it.key());
    if (keys != expected_keys) {
        out.violation = "schema-mismatch";
        out.detail = "unexpected payload keys";
        return out;
    }
    if (payload["schema"] != kCertificateSchema) {
        out.violation = "schema-version";
        return out;
    }
    try {
        MultiGraph g = graph_from_json(payload["graph"]);
        const int k = payload["k"].get<int>();
        const long long nu = payload["nu"].get<long long>();
        if (k < 0) {
            out.violation = "k-negative";
            return out;
        }
        if (!method_from_name(payload["method"].get<std::string>())) {
            out.violation = "method-unknown";
            return out;
        }
        std::vector<int> members = payload["subgraph"].get<std::vector<int>>();
        std::set<int> member_set;
        for (int e : members) {
            if (e < 0 || e >= g.edge_count()) {
                out.violation = "edge-range";
                return out;
            }
            if (!member_set.insert(e).second) {
                out.violation = "duplicate-member";
                return out;
            }
        }
        if (static_cast<long long>(members.size()) != nu) {
            out.violation = "nu-mismatch";
            out.detail = "nu does not equal the subgraph size";
            return out;
        }
        // coloring must cover exactly the subgraph with colors in 1..k,
        // no color repeated at a vertex
        std::vector<std::vector<int>> vertex_colors(g.vertex_count());
        std::set<int> colored;
        for (const auto& pair : payload["coloring"]) {
            if (!pair.is_array() || pair.size() != 2) {
                out.violation = "coloring-format";
                return out;
            }
            int e = pair[0].get<int>();
            int c = pair[1].get<int>();
            if (e < 0 || e >= g.edge_count() || !member_set.count(e)) {
                out.violation = "coloring-domain";
                out.detail = "colored edge not in the subgraph";
                return out;
            }
            if (!colored.insert(e).second) {
                out.violation = "coloring-duplicate";
                return out;
            }
            if (c < 1 || c > k) {
                out.violation = "color-range";
                return out;
            }
            const Edge& ed = g.edge(e);
            for (int side : {ed.u, ed.v}) {
                for (int prev : vertex_colors[side]) {
                    if (prev == c) {
                        out.violation = "color-conflict";
                        out.detail = "two edges of color " + std::to_string(c) + " meet at vertex " +
                                     std::to_string(side);
                        return out;
                    }
                }
                vertex_colors[side].push_back(c);
            }
        }
        if (colored.size() != member_set.size()) {
            out.violation = "coloring-incomplete";
            return out;
        }
        // degree bound is implied by properness, still checked explicitly
        std::vector<int> deg(g.vertex_count(), 0);
        for (int e : members) {
            ++deg[g.edge(e).u];
            ++deg[g.edge(e).v];
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (deg[v] > k) {
                out.violation = "degree-exceeds-k";
                return out;
            }
        }
        out.ok = true;
        out.nu = nu;
        return out;
    } catch (const GraphError& e) {
        out.violation = "graph-invalid";
        out.detail = e.what();
        return out;
    } catch (const ParseError& e) {
        out.violation = "graph-invalid";
        out.detail = e.what();
        return out;
    } catch (const nlohmann::json::exception& e) {
        out.violation = "schema-mismatch";
        out.detail = e.what();
        return out;
    }
}

nlohmann::json report_to_json(const CheckReport& r) {
    nlohmann::json graph;
    graph["n"] = r.n;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : r.witness_edges) edges.push_back({u, v});
    graph["edges"] = edges;
    nlohmann::json j = {
        {"rule", r.rule},         {"graph", graph},
        {"k", r.k},               {"i", r.i},
        {"lhs", r.lhs},           {"rhs", r.rhs},
        {"verdict", verdict_name(r.verdict)},
        {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr)},
    };
    if (r.informational) j["informational"] = true;
    if (!r.witness_spectrum.empty()) j["spectrum"] = r.witness_spectrum;
    return j;
}

CheckReport report_from_json(const nlohmann::json& j) {
    CheckReport r;
    r.rule = j.at("rule").get<std::string>();
    r.k = j.at("k").get<int>();
    r.i = j.at("i").get<int>();
    r.lhs = j.at("lhs").get<long long>();
    r.rhs = j.at("rhs").get<long long>();
    std::string v = j.at("verdict").get<std::string>();
    r.verdict = v == "holds" ? Verdict::holds : v == "equality" ? Verdict::equality : Verdict::violated;
    if (j.contains("informational")) r.informational = j["informational"].get<bool>();
    if (j.contains("seed") && !j["seed"].is_null()) r.seed = j["seed"].get<unsigned long long>();
    if (j.contains("spectrum"))
        r.witness_spectrum = j["spectrum"].get<std::vector<long long>>();
    const nlohmann::json& graph = j.at("graph");
    r.n = graph.at("n").get<int>();
    for (const auto& e : graph.at("edges"))
        r.witness_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    r.m = static_cast<int>(r.witness_edges.size());
    return r;
}

}  // namespace kecs
