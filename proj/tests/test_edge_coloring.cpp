#include <doctest.h>

#include "kecs/edge_coloring.hpp"
#include "kecs/genio.hpp"
#include "kecs/search.hpp"
#include "test_support.hpp"

using namespace kecs;

namespace {

EdgeSubgraph whole(const MultiGraph& g) {
    EdgeSubgraph sub(g);
    for (int e = 0; e < g.edge_count(); ++e) sub.insert(e);
    return sub;
}

}  // namespace

TEST_SUITE("edge_coloring") {

TEST_CASE("konig on C4 with two colors alternates") {
    MultiGraph g = test::cycle(4);
    EdgeColoring c = konig_color(whole(g), 2);
    CHECK(c.color_of(0) != c.color_of(1));
    CHECK(c.color_of(1) != c.color_of(2));
    CHECK(c.color_of(2) != c.color_of(3));
    CHECK(c.color_of(0) == c.color_of(2));
    CHECK(verify_coloring(whole(g), c, 2).ok);
}

TEST_CASE("konig on K33 with three colors gives three perfect matchings") {
    MultiGraph g = test::complete_bipartite(3, 3);
    EdgeColoring c = konig_color(whole(g), 3);
    CHECK(verify_coloring(whole(g), c, 3).ok);
    for (int col = 1; col <= 3; ++col) CHECK(c.color_class(col).size() == 3);
}

TEST_CASE("konig on a star uses one color per edge") {
    MultiGraph g = gen_named("star:5");
    EdgeColoring c = konig_color(whole(g), 5);
    CHECK(verify_coloring(whole(g), c, 5).ok);
    std::vector<bool> seen(6, false);
    for (int e = 0; e < 5; ++e) {
        CHECK(!seen[c.color_of(e)]);
        seen[c.color_of(e)] = true;
    }
}

TEST_CASE("konig preconditions") {
    MultiGraph tri = test::cycle(3);
    CHECK_THROWS_AS(konig_color(whole(tri), 2), NotBipartiteError);
    MultiGraph star = gen_named("star:3");
    CHECK_THROWS_AS(konig_color(whole(star), 2), DegreeExceedsKError);
}

TEST_CASE("kempe_path on a fully colored even cycle is the cycle") {
    MultiGraph g = test::cycle(4);
    EdgeColoring c = konig_color(whole(g), 2);
    KempePath p = kempe_path(c, 1, 1, 2);
    CHECK(p.is_cycle);
    CHECK(p.walk.size() == 4);
    CHECK(p.endpoint_u == p.endpoint_v);
}

TEST_CASE("kempe_path on a two-edge path") {
    MultiGraph g = test::path(3);  // edges 0-1, 1-2
    EdgeColoring c(g, 2);
    c.set_color(0, 1);
    c.set_color(1, 2);
    KempePath p = kempe_path(c, 0, 1, 2);
    CHECK(p.walk == std::vector<int>{0, 1});
    CHECK(p.endpoint_u == 0);
    CHECK(p.endpoint_v == 2);
    CHECK(!p.is_cycle);
}

TEST_CASE("kempe_path at a vertex missing both colors is empty") {
    MultiGraph g = test::path(3);
    EdgeColoring c(g, 3);
    c.set_color(0, 1);
    KempePath p = kempe_path(c, 2, 2, 3);
    CHECK(p.empty());
    CHECK(p.endpoint_u == 2);
    CHECK(p.endpoint_v == 2);
}

TEST_CASE("kempe_swap exchanges colors and flips endpoint incidence") {
    MultiGraph g = test::path(3);
    EdgeColoring c(g, 2);
    c.set_color(0, 1);
    c.set_color(1, 2);
    KempePath p = kempe_path(c, 0, 1, 2);
    EdgeColoring swapped = kempe_swap(c, p);
    CHECK(swapped.color_of(0) == 2);
    CHECK(swapped.color_of(1) == 1);
    // vertex 0 was incident to color 1, now misses it
    CHECK(swapped.misses(0, 1));
    CHECK(!swapped.misses(0, 2));
}

TEST_CASE("kempe_swap on the empty path is the identity") {
    MultiGraph g = test::path(3);
    EdgeColoring c(g, 3);
    c.set_color(0, 1);
    KempePath p = kempe_path(c, 2, 2, 3);
    EdgeColoring swapped = kempe_swap(c, p);
    CHECK(swapped.color_of(0) == 1);
    CHECK(swapped.colored_count() == 1);
}

TEST_CASE("double swap on a recomputed path restores the coloring") {
    MultiGraph g = test::complete_bipartite(3, 3);
    EdgeColoring c = konig_color(whole(g), 3);
    KempePath p = kempe_path(c, 0, 1, 2);
    EdgeColoring once = kempe_swap(c, p);
    KempePath p2 = kempe_path(once, 0, 1, 2);
    EdgeColoring twice = kempe_swap(once, p2);
    for (int e = 0; e < g.edge_count(); ++e) CHECK(twice.color_of(e) == c.color_of(e));
}

TEST_CASE("stale paths are rejected") {
    MultiGraph g = test::path(3);
    EdgeColoring c(g, 2);
    c.set_color(0, 1);
    c.set_color(1, 2);
    KempePath p = kempe_path(c, 0, 1, 2);
    EdgeColoring moved = kempe_swap(c, p);
    CHECK_THROWS_AS(kempe_swap(moved, p), StalePathError);
}

TEST_CASE("verify_coloring flags conflicts with the offending vertex") {
    MultiGraph g = test::cycle(4);
    EdgeSubgraph sub = whole(g);
    EdgeColoring c(g, 2);
    // bypass the safety in EdgeColoring by building a raw conflicting report:
    // color edges 0 (0-1) and 3 (3-0) both with 1 via two separate colorings
    // is impossible, so craft the conflict through a smaller k instead
    c.set_color(0, 1);
    c.set_color(1, 2);
    c.set_color(2, 1);
    c.set_color(3, 2);
    ColoringReport ok = verify_coloring(sub, c, 2);
    CHECK(ok.ok);
    // now check a coloring that is not total on the subgraph
    EdgeColoring partial(g, 2);
    partial.set_color(0, 1);
    ColoringReport bad = verify_coloring(sub, partial, 2);
    CHECK(!bad.ok);
    CHECK(bad.violations.size() == 3);
    CHECK(bad.violations[0].kind == "uncolored-member");
}

TEST_CASE("verify_coloring on the empty subgraph holds for any k") {
    MultiGraph g = test::cycle(4);
    EdgeSubgraph sub(g);
    EdgeColoring c(g, 0);
    CHECK(verify_coloring(sub, c, 0).ok);
    CHECK(verify_coloring(sub, c, 3).ok);
}

TEST_CASE("verify_coloring rejects colors outside the subgraph") {
    MultiGraph g = test::cycle(4);
    EdgeSubgraph sub(g, {0});
    EdgeColoring c(g, 2);
    c.set_color(0, 1);
    c.set_color(2, 1);
    ColoringReport rep = verify_coloring(sub, c, 2);
    CHECK(!rep.ok);
    CHECK(rep.violations[0].kind == "colored-nonmember");
}

TEST_CASE("konig colors every bipartite graph, exhaustive n <= 5 plus randoms") {
    for (int n = 1; n <= 5; ++n) {
        for_each_simple_graph(n, [&](const MultiGraph& g) {
            if (!bipartition(g).is_bipartite()) return;
            int delta = g.max_degree();
            for (int k = delta; k <= 2 * delta; ++k) {
                EdgeColoring c = konig_color(whole(g), k);
                CHECK(verify_coloring(whole(g), c, k).ok);
            }
        });
    }
    for (int trial = 0; trial < 200; ++trial) {
        MultiGraph g = gen_random_bipartite(1 + trial % 4, 1 + trial % 3, 0.6, 2, trial);
        int delta = g.max_degree();
        EdgeColoring c = konig_color(whole(g), delta == 0 ? 1 : delta);
        CHECK(verify_coloring(whole(g), c, delta == 0 ? 1 : delta).ok);
    }
}

TEST_CASE("every color class stays a matching after random swaps") {
    MultiGraph g = test::complete_bipartite(3, 4);
    EdgeColoring c = konig_color(whole(g), 4);
    Rng rng(7);
    for (int step = 0; step < 50; ++step) {
        int v = static_cast<int>(rng.below(g.vertex_count()));
        int a = 1 + static_cast<int>(rng.below(4));
        int b = 1 + static_cast<int>(rng.below(4));
        if (a == b) continue;
        KempePath p = kempe_path(c, v, a, b);
        c = kempe_swap(c, p);
        for (int col = 1; col <= 4; ++col) {
            std::vector<int> cls = c.color_class(col);
            std::vector<int> touched;
            for (int e : cls) {
                touched.push_back(g.edge(e).u);
                touched.push_back(g.edge(e).v);
            }
            std::sort(touched.begin(), touched.end());
            CHECK(std::adjacent_find(touched.begin(), touched.end()) == touched.end());
        }
    }
}

}  // TEST_SUITE
