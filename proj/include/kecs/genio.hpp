#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kecs/spectrum.hpp"

namespace kecs {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Deterministic RNG with explicit bounded draws, so generated instances are
/// reproducible across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    std::uint64_t below(std::uint64_t bound);  // bound > 0
    double uniform01();                        // [0, 1)

private:
    std::mt19937_64 eng_;
};

/// Edge-list format: `c` comment lines, one `p el <n> <m>` header, then m
/// lines `e <u> <v>` with 1-based vertices. Repeated lines encode parallel
/// edges; loops are rejected.
MultiGraph parse_edge_list(const std::string& text);
std::string to_edge_list(const MultiGraph& g);

/// graph6 import (simple graphs, short form n <= 62 only).
MultiGraph parse_graph6(const std::string& text);

/// Union of k uniformly random perfect matchings between parts of size
/// half_n; exactly k-regular, parallel edges kept.
MultiGraph gen_regular_bipartite(int half_n, int k, std::uint64_t seed);

/// Each of max_mult potential parallel edges per vertex pair is present
/// independently with probability p.
MultiGraph gen_random_bipartite(int nu, int nw, double p, int max_mult, std::uint64_t seed);

/// Random bipartite base plus one apex vertex with apex_degree edges
/// alternating into the two sides, so b(G) <= 1 by construction.
MultiGraph gen_nearly_bipartite(int nu, int nw, double p, int max_mult, int apex_degree,
                                std::uint64_t seed);

/// Named instances: figure1, k33, k4, petersen, cube, cycle:<n>, path:<n>,
/// star:<n>, theta:<a>:<b>:<c>.
MultiGraph gen_named(const std::string& name);

/// The colored 5-edge subgraph that goes with the figure1 instance: the two
/// triangle paths colored 1,2 with the middle edge colored 1. A maximum
/// 2-edge-colorable subgraph that still admits an augmenting path.
std::pair<EdgeSubgraph, EdgeColoring> figure1_a2(const MultiGraph& figure1);

nlohmann::json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& j);

/// Self-contained solve record: graph, k, nu, subgraph, coloring, method,
/// stats and a SHA-256 digest of the canonical payload. Re-checkable without
/// rerunning any solver.
std::string emit_certificate(const SolveResult& r, const MultiGraph& g,
                             std::optional<std::uint64_t> seed = std::nullopt);

/// Wrap an arbitrary payload with its digest. The digest binds the text;
/// verify_certificate still applies every semantic check to the payload.
std::string certificate_from_payload(const nlohmann::json& payload);

struct CertificateCheck {
    bool ok = false;
    std::string violation;  // named violation when !ok
    std::string detail;
    long long nu = -1;
};

CertificateCheck verify_certificate(const std::string& text);

nlohmann::json report_to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);

}  // namespace kecs
