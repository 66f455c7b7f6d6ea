#include <doctest.h>

#include <random>

#include "support/checks.hpp"
#include "support/oracles.hpp"
#include "support/random_ubergraph.hpp"
#include "ubergraph/format.hpp"
#include "ubergraph/isomorphism.hpp"
#include "ubergraph/levi.hpp"

using namespace ubergraph;

namespace {

Ubergraph nested_example() {
    return parse("vertex 1 2 3\n"
                 "edge e1 = { 1 }\n"
                 "edge e2 = { 1 3 }\n"
                 "edge e3 = { 1 3 e1 }\n"
                 "edge e4 = { 2 e2 }\n"
                 "edge e5 = { 1 e4 }\n");
}

Ubergraph flat_example() {
    return parse("vertex 1 2 3 4 5\n"
                 "edge e1 = { 1 }\n"
                 "edge e2 = { 1 3 }\n"
                 "edge e3 = { 2 3 }\n"
                 "edge e4 = { 1 3 5 }\n");
}

// True iff `map` is a digraph isomorphism d -> e (arcs preserved both ways).
bool digraph_iso_ok(const Digraph& d, const Digraph& e, const std::vector<std::size_t>& map) {
    if (map.size() != d.node_count() || d.node_count() != e.node_count()) return false;
    std::vector<bool> hit(e.node_count(), false);
    for (std::size_t m : map) {
        if (m >= e.node_count() || hit[m]) return false;
        hit[m] = true;
    }
    auto has_arc = [](const Digraph& g, std::size_t a, std::size_t b) {
        return std::find(g.out[a].begin(), g.out[a].end(), b) != g.out[a].end();
    };
    for (std::size_t a = 0; a < d.node_count(); ++a)
        for (std::size_t b = 0; b < d.node_count(); ++b)
            if (has_arc(d, a, b) != has_arc(e, map[a], map[b])) return false;
    return true;
}

IsoWitness invert(const Ubergraph& target, const IsoWitness& w) {
    IsoWitness inv;
    inv.vertex_map.resize(w.vertex_map.size());
    inv.edge_map.resize(w.edge_map.size());
    for (std::uint32_t i = 0; i < w.vertex_map.size(); ++i) inv.vertex_map[w.vertex_map[i]] = i;
    for (std::uint32_t i = 0; i < w.edge_map.size(); ++i) inv.edge_map[w.edge_map[i]] = i;
    (void)target;
    return inv;
}

} // namespace

TEST_CASE("direct search on fixed structures") {
    Ubergraph u = nested_example();

    SUBCASE("every structure matches itself") {
        for (const Ubergraph& g : {u, flat_example(), parse("")}) {
            auto w = is_isomorphic_direct(g, g);
            REQUIRE(w.has_value());
            CHECK(verify_witness(g, g, w->vertex_map, w->edge_map));
        }
    }
    SUBCASE("a relabeling is found and verified") {
        std::mt19937_64 rng(59);
        auto rel = testsupport::relabel(u, rng);
        auto w = is_isomorphic_direct(u, rel.graph);
        REQUIRE(w.has_value());
        CHECK(verify_witness(u, rel.graph, w->vertex_map, w->edge_map));
    }
    SUBCASE("different shapes are rejected") {
        CHECK_FALSE(is_isomorphic_direct(u, flat_example()).has_value());

        // Moving one membership changes the vertex degree profile: 1 has
        // degree 4 in the original but no vertex has degree 4 here.
        Ubergraph variant = parse("vertex 1 2 3\n"
                                  "edge e1 = { 1 }\n"
                                  "edge e2 = { 1 3 }\n"
                                  "edge e3 = { 1 3 e1 }\n"
                                  "edge e4 = { 2 e2 }\n"
                                  "edge e5 = { 2 e4 }\n");
        CHECK_FALSE(is_isomorphic_direct(u, variant).has_value());
        CHECK_FALSE(testsupport::oracle_is_isomorphic(u, variant));
    }
    SUBCASE("vertex sets beyond the budget are refused") {
        Ubergraph big = parse("vertex a b c d e f g h i j k");
        CHECK_UGT_ERROR(is_isomorphic_direct(big, big), too_large);
        CHECK(is_isomorphic_direct(big, big, 11).has_value());
    }
    SUBCASE("membership cycles have no well-defined nesting to recurse on") {
        Ubergraph cyc = parse("mode cyclic\nedge a = { b }\nedge b = { a }");
        CHECK_UGT_ERROR(is_isomorphic_direct(cyc, cyc), undefined_in_cyclic_mode);
    }
}

TEST_CASE("witness verification rejects corrupted maps") {
    Ubergraph u = nested_example();
    std::mt19937_64 rng(61);
    auto rel = testsupport::relabel(u, rng);
    auto w = is_isomorphic_direct(u, rel.graph);
    REQUIRE(w.has_value());

    auto bad_vertex = w->vertex_map;
    std::swap(bad_vertex[0], bad_vertex[1]); // 1 and 2 have different degrees
    CHECK_FALSE(verify_witness(u, rel.graph, bad_vertex, w->edge_map));

    auto bad_edge = w->edge_map;
    std::swap(bad_edge[0], bad_edge[1]);
    CHECK_FALSE(verify_witness(u, rel.graph, w->vertex_map, bad_edge));

    auto not_injective = w->vertex_map;
    not_injective[0] = not_injective[1];
    CHECK_FALSE(verify_witness(u, rel.graph, not_injective, w->edge_map));

    CHECK_FALSE(verify_witness(u, rel.graph, {}, {})); // wrong sizes
    CHECK_FALSE(verify_witness(u, flat_example(), w->vertex_map, w->edge_map));
}

TEST_CASE("digraph isomorphism") {
    SUBCASE("relabeled uber-Levi digraphs correspond") {
        std::mt19937_64 rng(67);
        for (int i = 0; i < 10; ++i) {
            Ubergraph u = testsupport::random_ubergraph(rng, 1, 5, 5);
            Digraph d = uber_levi(u).graph;
            Digraph e = uber_levi(testsupport::relabel(u, rng).graph).graph;
            auto map = is_levi_isomorphic(d, e);
            REQUIRE(map.has_value());
            CHECK(digraph_iso_ok(d, e, *map));
        }
    }
    SUBCASE("path and fork differ") {
        Digraph path{{"a", "b", "c"}, {{1}, {2}, {}}};
        Digraph fork{{"a", "b", "c"}, {{1, 2}, {}, {}}};
        CHECK_FALSE(is_levi_isomorphic(path, fork).has_value());
    }
    SUBCASE("a two-cycle is not two self-loops") {
        // Same node count, arc count, and in/out degrees everywhere; only the
        // loop structure distinguishes them.
        Digraph two_cycle{{"a", "b"}, {{1}, {0}}};
        Digraph self_loops{{"x", "y"}, {{0}, {1}}};
        CHECK_FALSE(is_levi_isomorphic(two_cycle, self_loops).has_value());
        CHECK(is_levi_isomorphic(two_cycle, two_cycle).has_value());
        CHECK(is_levi_isomorphic(self_loops, self_loops).has_value());
    }
    SUBCASE("arc-count mismatch") {
        Digraph one{{"a", "b"}, {{1}, {}}};
        Digraph none{{"a", "b"}, {{}, {}}};
        CHECK_FALSE(is_levi_isomorphic(one, none).has_value());
    }
}

TEST_CASE("full isomorphism decision through the membership digraph") {
    Ubergraph u = nested_example();
    std::mt19937_64 rng(71);

    SUBCASE("positive: relabelings, with verified witnesses") {
        for (int i = 0; i < 10; ++i) {
            auto rel = testsupport::relabel(u, rng);
            auto w = is_isomorphic(u, rel.graph);
            REQUIRE(w.has_value());
            CHECK(verify_witness(u, rel.graph, w->vertex_map, w->edge_map));
            CHECK(w->levi_map.size() == u.vertex_count() + u.edge_count());
        }
    }
    SUBCASE("negative: shape changes") {
        CHECK_FALSE(is_isomorphic(u, flat_example()).has_value());
        Ubergraph variant = parse("vertex 1 2 3\n"
                                  "edge e1 = { 1 }\n"
                                  "edge e2 = { 1 3 }\n"
                                  "edge e3 = { 1 3 e1 }\n"
                                  "edge e4 = { 2 e2 }\n"
                                  "edge e5 = { 2 e4 }\n");
        CHECK_FALSE(is_isomorphic(u, variant).has_value());
    }
    SUBCASE("equivalence properties") {
        auto r1 = testsupport::relabel(u, rng);
        auto r2 = testsupport::relabel(u, rng);

        auto w1 = is_isomorphic(u, r1.graph);
        auto w2 = is_isomorphic(r1.graph, r2.graph);
        REQUIRE(w1.has_value());
        REQUIRE(w2.has_value());

        IsoWitness inv = invert(u, *w1);
        CHECK(verify_witness(r1.graph, u, inv.vertex_map, inv.edge_map));

        IsoWitness composed;
        composed.vertex_map.resize(w1->vertex_map.size());
        composed.edge_map.resize(w1->edge_map.size());
        for (std::uint32_t i = 0; i < composed.vertex_map.size(); ++i)
            composed.vertex_map[i] = w2->vertex_map[w1->vertex_map[i]];
        for (std::uint32_t i = 0; i < composed.edge_map.size(); ++i)
            composed.edge_map[i] = w2->edge_map[w1->edge_map[i]];
        CHECK(verify_witness(u, r2.graph, composed.vertex_map, composed.edge_map));
    }
    SUBCASE("membership-cycle structures compare through their digraphs") {
        Ubergraph mutual = parse("mode cyclic\nedge a = { b }\nedge b = { a }");
        Ubergraph mutual2 = parse("mode cyclic\nedge p = { q }\nedge q = { p }");
        Ubergraph loops = parse("mode cyclic\nedge a = { a }\nedge b = { b }");

        auto w = is_isomorphic(mutual, mutual2);
        REQUIRE(w.has_value());
        CHECK(verify_witness(mutual, mutual2, w->vertex_map, w->edge_map));
        CHECK_FALSE(is_isomorphic(mutual, loops).has_value());

        auto rel = testsupport::relabel(parse("mode cyclic\n"
                                              "vertex x y\n"
                                              "edge a = { x a }\n"
                                              "edge b = { x y b }\n"),
                                        rng);
        Ubergraph self = parse("mode cyclic\nvertex x y\nedge a = { x a }\nedge b = { x y b }");
        auto ws = is_isomorphic(self, rel.graph);
        REQUIRE(ws.has_value());
        CHECK(verify_witness(self, rel.graph, ws->vertex_map, ws->edge_map));
    }
    SUBCASE("membership discipline is part of the structure") {
        Ubergraph wf = parse("vertex 1 2\nedge e = { 1 2 }");
        Ubergraph cyc = parse("mode cyclic\nvertex 1 2\nedge e = { 1 2 }");
        CHECK_FALSE(is_isomorphic(wf, cyc).has_value());
        CHECK(is_isomorphic(cyc, cyc).has_value());
    }
}

TEST_CASE("decision procedures agree with exhaustive search on random pairs") {
    std::mt19937_64 rng(73);

    SUBCASE("relabeled pairs: all three say yes") {
        for (int i = 0; i < 40; ++i) {
            Ubergraph a = testsupport::random_ubergraph(rng, 0, 4, 4);
            Ubergraph b = testsupport::relabel(a, rng).graph;
            CHECK(testsupport::oracle_is_isomorphic(a, b));
            CHECK(is_isomorphic_direct(a, b).has_value());
            CHECK(is_isomorphic(a, b).has_value());
            CHECK(testsupport::canonical_key(a) == testsupport::canonical_key(b));
        }
    }
    SUBCASE("independent pairs: all three agree either way") {
        int positives = 0;
        for (int i = 0; i < 120; ++i) {
            Ubergraph a = testsupport::random_ubergraph(rng, 0, 3, 3);
            Ubergraph b = testsupport::random_ubergraph(rng, 0, 3, 3);
            bool expected = testsupport::oracle_is_isomorphic(a, b);
            positives += expected;
            CHECK(is_isomorphic_direct(a, b).has_value() == expected);
            CHECK(is_isomorphic(a, b).has_value() == expected);
            CHECK((testsupport::canonical_key(a) == testsupport::canonical_key(b)) == expected);
        }
        CHECK(positives > 0); // the draw is small enough for collisions
    }
}
