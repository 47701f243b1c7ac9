#include "kecs/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace kecs {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::equality: return "equality";
        case Verdict::violated: return "violated";
    }
    return "?";
}

long long NuSpectrum::at(int k) const {
    if (k < 0) throw std::out_of_range("spectrum index negative");
    if (k <= cap()) return values[k];
    if (saturated()) return m;
    throw std::out_of_range("spectrum index beyond unsaturated range");
}

namespace {

void fill_fingerprint(NuSpectrum& s, const MultiGraph& g) {
    s.n = g.vertex_count();
    s.m = g.edge_count();
    s.degrees = g.degree_multiset();
}

long long floor_div2(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// Try to add `e` to a colored subgraph, flipping one Kempe chain if needed.
// Works on any graph; gives up instead of flipping a chain that reaches the
// other endpoint (possible when the host has odd cycles).
bool try_insert_colored(EdgeSubgraph& h, EdgeColoring& c, int k, int e) {
    const Edge& ed = h.host().edge(e);
    if (h.degree(ed.u) >= k || h.degree(ed.v) >= k) return false;
    int common = c.lowest_common_free_color(ed.u, ed.v);
    if (common == 0) {
        int alpha = c.lowest_free_color(ed.u);
        int beta = c.lowest_free_color(ed.v);
        if (alpha == 0 || beta == 0) return false;
        KempePath chain = kempe_path(c, ed.v, alpha, beta);
        if (chain.is_cycle || chain.endpoint_u == ed.u || chain.endpoint_v == ed.u) return false;
        c = kempe_swap(c, chain);
        if (!c.misses(ed.u, alpha) || !c.misses(ed.v, alpha)) return false;
        common = alpha;
    }
    c.set_color(e, common);
    h.insert(e);
    return true;
}

// Oracle-backed spectrum for arbitrary graphs: k grows until nu_k = m. With
// structural hints enabled, a bipartizing apex vertex (when one exists)
// provides a warm start from a flow solve of G - apex and a proven cap
// nu_k(G-apex) + min(k, deg(apex)); the warm start is re-validated and the
// cap lets many instances skip the branch and bound entirely.
NuSpectrum oracle_spectrum(const MultiGraph& g, const SpectrumOptions& opt) {
    NuSpectrum s;
    fill_fingerprint(s, g);
    const int m = g.edge_count();

    std::optional<VertexDeletion> apex_del;
    int apex = -1;
    if (opt.structural_hints) {
        for (int v = 0; v < g.vertex_count() && apex < 0; ++v) {
            VertexDeletion del = delete_vertex(g, v);
            if (bipartition(del.graph).is_bipartite()) {
                apex = v;
                apex_del = std::move(del);
            }
        }
    }

    SolveResult prev;
    const int hard_k_cap = 2 * std::max(1, g.max_degree());
    for (int k = 0;; ++k) {
        if (k > hard_k_cap)
            throw std::logic_error("oracle_spectrum: spectrum failed to saturate");
        OracleOptions oo;
        oo.node_budget = opt.node_budget;

        SolveResult seed;
        bool have_seed = false;
        if (k > 0 && prev.subgraph.size() > 0) {
            // previous witness is a valid k-coloring with one color unused
            seed = prev;
            seed.k = k;
            have_seed = true;
        }
        if (apex >= 0 && k > 0) {
            SolveResult base = solve_flow(apex_del->graph, k);
            EdgeSubgraph sub(g);
            EdgeColoring col(g, k);
            for (int e = 0; e < m; ++e) {
                int ne = apex_del->edge_map[e];
                if (ne >= 0 && base.subgraph.contains(ne)) {
                    sub.insert(e);
                    col.set_color(e, base.coloring.color_of(ne));
                }
            }
            for (const auto& [eid, nb] : g.incident(apex)) try_insert_colored(sub, col, k, eid);
            long long cap = base.nu + std::min<long long>(k, g.degree(apex));
            oo.upper_bound = cap;
            if (!have_seed || sub.size() > seed.subgraph.size()) {
                seed.k = k;
                seed.nu = sub.size();
                seed.subgraph = std::move(sub);
                seed.coloring = std::move(col);
                have_seed = true;
            }
        }
        if (have_seed) oo.seed = &seed;

        SolveResult res = nu_oracle(g, k, oo);
        if (!res.exact())
            throw std::runtime_error("oracle spectrum: node budget exhausted at k=" +
                                     std::to_string(k));
        s.values.push_back(res.nu);
        s.methods.push_back(Method::oracle);
        prev = std::move(res);
        if (prev.nu == m) break;
    }
    return s;
}

}  // namespace

NuSpectrum spectrum(const MultiGraph& g, Method method, const SpectrumOptions& opt) {
    if (method == Method::oracle) {
        SpectrumOptions o = opt;
        o.structural_hints = false;  // plain per-method spectrum stays self-contained
        return oracle_spectrum(g, o);
    }
    NuSpectrum s;
    fill_fingerprint(s, g);
    const int cap = g.max_degree();
    for (int k = 0; k <= cap; ++k) {
        SolveResult r = method == Method::flow ? solve_flow(g, k) : solve_augmenting(g, k);
        s.values.push_back(r.nu);
        s.methods.push_back(method);
    }
    return s;
}

NuSpectrum spectrum_auto(const MultiGraph& g, const SpectrumOptions& opt) {
    if (bipartition(g).is_bipartite()) return spectrum(g, Method::flow, opt);
    return oracle_spectrum(g, opt);
}

CheckReport check_concavity(const NuSpectrum& s, bool graph_bipartite) {
    CheckReport rep;
    rep.rule = "concavity";
    rep.n = s.n;
    rep.m = s.m;
    rep.informational = !graph_bipartite;
    for (int k = 1; k < s.cap(); ++k) {
        ++rep.checks;
        long long left = s.values[k] - s.values[k - 1];
        long long right = s.values[k + 1] - s.values[k];
        if (left < right) {
            rep.k = k;
            rep.lhs = left;
            rep.rhs = right;
            rep.verdict = Verdict::violated;
            rep.witness_spectrum = s.values;
            return rep;
        }
    }
    rep.verdict = Verdict::holds;
    return rep;
}

CheckReport check_midpoint(const NuSpectrum& s, int k, int i, bool graph_bipartite) {
    if (i < 0 || k - i < 0) throw std::out_of_range("check_midpoint: k-i out of range");
    CheckReport rep;
    rep.rule = "midpoint";
    rep.n = s.n;
    rep.m = s.m;
    rep.k = k;
    rep.i = i;
    rep.informational = !graph_bipartite;
    rep.checks = 1;
    rep.lhs = 2 * s.at(k);
    rep.rhs = s.at(k - i) + s.at(k + i);
    rep.verdict = rep.lhs < rep.rhs  ? Verdict::violated
                  : rep.lhs == rep.rhs ? Verdict::equality
                                       : Verdict::holds;
    if (rep.violated()) rep.witness_spectrum = s.values;
    return rep;
}

CheckReport check_nearly_bipartite(const MultiGraph& g, const NuSpectrum& s) {
    auto b = odd_cycle_transversal_number(g, 1);
    if (!b) throw GraphError("check_nearly_bipartite: graph has b(G) > 1");
    CheckReport rep;
    rep.rule = "conj1";
    rep.n = s.n;
    rep.m = s.m;
    for (int k = 1; k <= s.cap(); ++k) {
        ++rep.checks;
        long long lhs = s.at(k);
        long long rhs = floor_div2(s.at(k - 1) + s.at(k + 1));
        if (lhs < rhs) {
            rep.k = k;
            rep.i = 1;
            rep.lhs = lhs;
            rep.rhs = rhs;
            rep.verdict = Verdict::violated;
            rep.witness_spectrum = s.values;
            return rep;
        }
    }
    rep.verdict = Verdict::holds;
    return rep;
}

CheckReport check_b_conjecture(const MultiGraph& g, const NuSpectrum& s, int b, bool floored) {
    CheckReport rep;
    rep.rule = floored ? "conj2floor" : "conj2";
    rep.n = s.n;
    rep.m = s.m;
    for (int k = 0; k <= s.cap(); ++k) {
        for (int i = 0; i <= k; ++i) {
            ++rep.checks;
            long long lhs, rhs;
            if (floored) {
                lhs = s.at(k);
                rhs = floor_div2(s.at(k - i) + s.at(k + i) - b);
            } else {
                lhs = 2 * s.at(k);
                rhs = s.at(k - i) + s.at(k + i) - b;
            }
            if (lhs < rhs) {
                rep.k = k;
                rep.i = i;
                rep.lhs = lhs;
                rep.rhs = rhs;
                rep.verdict = Verdict::violated;
                rep.witness_spectrum = s.values;
                return rep;
            }
        }
    }
    rep.verdict = Verdict::holds;
    return rep;
}

CheckReport check_cubic_bound(const MultiGraph& g, const NuSpectrum& s) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) throw GraphError("check_cubic_bound: graph is not 3-regular");
    CheckReport rep;
    rep.rule = "cubic";
    rep.n = s.n;
    rep.m = s.m;
    rep.k = 2;
    rep.checks = 1;
    rep.lhs = 4 * s.at(2);
    rep.rhs = s.n + 2 * s.at(3);
    rep.verdict = rep.lhs > rep.rhs  ? Verdict::violated
                  : rep.lhs == rep.rhs ? Verdict::equality
                                       : Verdict::holds;
    if (rep.violated()) rep.witness_spectrum = s.values;
    return rep;
}

CheckReport check_lemma5(const MultiGraph& g, const SolveResult& r) {
    if (!bipartition(g).is_bipartite())
        throw NotBipartiteError("check_lemma5: stated for bipartite graphs only");
    if (!r.exact()) throw GraphError("check_lemma5: solve result is not certified maximum");
    CheckReport rep;
    rep.rule = "lemma5";
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.k = r.k;
    for (const Edge& e : g.edges()) {
        if (r.subgraph.contains(e.id)) continue;
        ++rep.checks;
        int du = r.subgraph.degree(e.u);
        int dv = r.subgraph.degree(e.v);
        if (du != r.k && dv != r.k) {
            rep.lhs = std::max(du, dv);
            rep.rhs = r.k;
            rep.i = e.id;
            rep.verdict = Verdict::violated;
            return rep;
        }
    }
    rep.verdict = Verdict::holds;
    return rep;
}

CheckReport check_deletion_bounds(const MultiGraph& g, const SpectrumOptions& opt) {
    SpectrumOptions plain = opt;
    plain.structural_hints = false;  // this check is the evidence for those bounds
    NuSpectrum base = spectrum_auto(g, plain);
    CheckReport rep;
    rep.rule = "props34";
    rep.n = base.n;
    rep.m = base.m;
    const int K = g.max_degree();

    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexDeletion del = delete_vertex(g, v);
        NuSpectrum sub = spectrum_auto(del.graph, plain);
        for (int k = 0; k <= K; ++k) {
            ++rep.checks;
            if (base.at(k) > sub.at(k) + k) {
                rep.k = k;
                rep.i = v;
                rep.lhs = base.at(k);
                rep.rhs = sub.at(k) + k;
                rep.verdict = Verdict::violated;
                rep.witness_spectrum = base.values;
                return rep;
            }
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        EdgeDeletion del = delete_edge(g, e);
        NuSpectrum sub = spectrum_auto(del.graph, plain);
        for (int k = 0; k <= K; ++k) {
            rep.checks += 2;
            bool lower_ok = sub.at(k) <= base.at(k);
            bool upper_ok = base.at(k) <= sub.at(k) + 1;
            if (!lower_ok || !upper_ok) {
                rep.k = k;
                rep.i = e;
                rep.lhs = base.at(k);
                rep.rhs = sub.at(k) + (lower_ok ? 1 : 0);
                rep.verdict = Verdict::violated;
                rep.witness_spectrum = base.values;
                return rep;
            }
        }
    }
    rep.verdict = Verdict::holds;
    return rep;
}

}  // namespace kecs
