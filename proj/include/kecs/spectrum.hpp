#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kecs/solver.hpp"

namespace kecs {

/// nu_0..nu_K with per-entry solver provenance. For bipartite graphs K is
/// Delta(G) (nu_k = m for k >= Delta); for general graphs K is the first k
/// with nu_k = m (saturation).
struct NuSpectrum {
    std::vector<long long> values;
    std::vector<Method> methods;
    int n = 0;
    int m = 0;
    std::vector<int> degrees;  // sorted degree multiset

    int cap() const { return static_cast<int>(values.size()) - 1; }
    bool saturated() const { return !values.empty() && values.back() == m; }

    /// values[k], extended with m beyond the cap once saturated.
    long long at(int k) const;
};

enum class Verdict { holds, equality, violated };

std::string verdict_name(Verdict v);

struct CheckReport {
    std::string rule;
    int n = 0;
    int m = 0;
    int k = 0;
    int i = 0;
    long long lhs = 0;
    long long rhs = 0;
    Verdict verdict = Verdict::holds;
    /// Rules the statement only claims for bipartite graphs are reported but
    /// not binding on non-bipartite input.
    bool informational = false;
    long long checks = 0;  // comparisons performed by aggregate checks
    // violation witness, serialized so the report is independently re-checkable
    std::vector<std::pair<int, int>> witness_edges;
    std::vector<long long> witness_spectrum;
    std::optional<unsigned long long> seed;

    bool violated() const { return verdict == Verdict::violated; }
};

struct SpectrumOptions {
    long long node_budget = 200'000'000;
    /// Permit structural shortcuts (apex-deletion bounds, flow-derived warm
    /// starts) in the oracle path. Off wherever the run is itself the check
    /// of those structural facts.
    bool structural_hints = false;
};

/// Full spectrum with a fixed method. Bipartite methods throw NotBipartiteError
/// on non-bipartite input; the oracle saturates at the first k with nu_k = m.
NuSpectrum spectrum(const MultiGraph& g, Method method, const SpectrumOptions& opt = {});

/// Flow for bipartite input, oracle otherwise.
NuSpectrum spectrum_auto(const MultiGraph& g, const SpectrumOptions& opt = {});

/// Consecutive spectrum differences must be non-increasing. Reports the first
/// violating index. Informational for non-bipartite spectra.
CheckReport check_concavity(const NuSpectrum& s, bool graph_bipartite = true);

/// 2*nu_k >= nu_{k-i} + nu_{k+i}, exact integer arithmetic. Throws
/// std::out_of_range unless 0 <= k-i and k+i within the (saturated) range.
CheckReport check_midpoint(const NuSpectrum& s, int k, int i, bool graph_bipartite = true);

/// nu_k >= floor((nu_{k-1}+nu_{k+1})/2) for all valid k; requires b(G) <= 1.
CheckReport check_nearly_bipartite(const MultiGraph& g, const NuSpectrum& s);

/// 2*nu_k >= nu_{k-i} + nu_{k+i} - b for all (k, i); with floored=true checks
/// the weaker nu_k >= floor((nu_{k-i}+nu_{k+i}-b)/2) variant instead.
CheckReport check_b_conjecture(const MultiGraph& g, const NuSpectrum& s, int b,
                               bool floored = false);

/// 4*nu_2 <= n + 2*nu_3 for cubic graphs.
CheckReport check_cubic_bound(const MultiGraph& g, const NuSpectrum& s);

/// For a maximum subgraph H of a bipartite graph and any edge uv outside H,
/// deg_H(u) = k or deg_H(v) = k. Checked on a solver output.
CheckReport check_lemma5(const MultiGraph& g, const SolveResult& r);

/// nu_k(G) <= nu_k(G-v) + k and nu_k(G-e) <= nu_k(G) <= nu_k(G-e) + 1 over
/// all vertices, edges and k = 0..Delta(G).
CheckReport check_deletion_bounds(const MultiGraph& g, const SpectrumOptions& opt = {});

}  // namespace kecs
