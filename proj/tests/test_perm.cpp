#include "grr/catalog.hpp"
#include "grr/connection_set.hpp"
#include "grr/graph_aut.hpp"
#include "grr/group_spec.hpp"
#include "grr/perm.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace grr;

namespace {

// factorial brute-force automorphism oracle, n <= 8
std::vector<Permutation> brute_force_automorphisms(const std::vector<Bitset>& adj) {
    int n = int(adj.size());
    REQUIRE(n <= 8);
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::vector<Permutation> out;
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            for (int u = 0; u < n && ok; ++u)
                if (adj[v].test(u) != adj[img[v]].test(img[u])) ok = false;
        if (ok) out.push_back(Permutation{img});
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(out.begin(), out.end());
    return out;
}

Permutation cycle(int n, std::vector<int> c) {
    Permutation p = Permutation::identity(n);
    for (size_t i = 0; i < c.size(); ++i) p.img[c[i]] = c[(i + 1) % c.size()];
    return p;
}

}  // namespace

TEST_CASE("graph automorphism groups of basic shapes") {
    FiniteGroup c4 = cyclic(4);
    SUBCASE("edgeless graph has the full symmetric group") {
        CayleyGraph g = build_graph(c4, Bitset(4));
        CHECK(graph_automorphisms(g).order() == 24);
    }
    SUBCASE("the 4-cycle has the dihedral symmetry of the square") {
        Bitset s(4);
        s.set(1);
        s.set(3);
        CayleyGraph g = build_graph(c4, s);
        CHECK(graph_automorphisms(g).order() == 8);
    }
    SUBCASE("all 32 Cayley graphs of D3 match the factorial oracle") {
        FiniteGroup d3 = dihedral(3);
        ConnectionSetEnumerator en(d3);
        for (uint64_t i = 0; i < en.count(); ++i) {
            CayleyGraph g = build_graph(d3, en.decode(i));
            PermGroup aut = graph_automorphisms(g);
            auto oracle = brute_force_automorphisms(g.adj);
            CHECK(aut.order() == oracle.size());
            CHECK(aut.elements == oracle);
        }
    }
}

TEST_CASE("regular subgroup is always contained in the automorphism group") {
    std::mt19937_64 rng(5);
    auto groups = catalog_groups(8);
    for (const auto& g : groups) {
        ConnectionSetEnumerator en(g);
        for (int trial = 0; trial < 8; ++trial) {
            CayleyGraph graph = build_graph(g, en.decode(rng() % en.count()));
            PermGroup aut = graph_automorphisms(graph);
            for (int e = 0; e < g.n; ++e) CHECK(aut.contains(right_translation(g, e)));
        }
    }
}

TEST_CASE("is_grr basics") {
    CHECK_FALSE(is_grr(cyclic(4), Bitset(4)));
    FiniteGroup c3 = cyclic(3);
    ConnectionSetEnumerator en3(c3);
    for (uint64_t i = 0; i < en3.count(); ++i) CHECK_FALSE(is_grr(c3, en3.decode(i)));
    FiniteGroup q8 = quaternion();
    ConnectionSetEnumerator en8(q8);
    for (uint64_t i = 0; i < en8.count(); ++i) CHECK_FALSE(is_grr(q8, en8.decode(i)));
}

TEST_CASE("point stabilizers") {
    PermGroup triv = perm_group_from_elements(3, {Permutation::identity(3)});
    CHECK(point_stabilizer(triv, 0).order() == 1);

    PermGroup sym3 = perm_group_from_generators(3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})});
    REQUIRE(sym3.order() == 6);
    CHECK(point_stabilizer(sym3, 0).order() == 2);

    // orbit-stabilizer on random subgroups of Sym(5)
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> a(5), b(5);
        for (int i = 0; i < 5; ++i) a[i] = b[i] = i;
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        PermGroup p = perm_group_from_generators(5, {Permutation{a}, Permutation{b}});
        int v = int(rng() % 5);
        Bitset orbit(5);
        for (const auto& e : p.elements) orbit.set(e.img[v]);
        CHECK(point_stabilizer(p, v).order() * orbit.count() == p.order());
    }
}

TEST_CASE("normalizers") {
    PermGroup sym4 = perm_group_from_generators(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
    REQUIRE(sym4.order() == 24);
    SUBCASE("a group normalizes itself") {
        CHECK(normalizer_of_regular_subgroup(sym4, sym4).order() == 24);
    }
    SUBCASE("the 4-cycle subgroup has normalizer of order 8") {
        PermGroup c4 = perm_group_from_generators(4, {cycle(4, {0, 1, 2, 3})});
        CHECK(normalizer_of_regular_subgroup(sym4, c4).order() == 8);
    }
    SUBCASE("complete graph on D3: the regular subgroup has normalizer of order 36") {
        FiniteGroup d3 = dihedral(3);
        Bitset s = full_set(6);
        s.reset(0);
        PermGroup aut = graph_automorphisms(build_graph(d3, s));
        REQUIRE(aut.order() == 720);
        PermGroup reg = regular_representation(d3);
        CHECK(normalizer_of_regular_subgroup(aut, reg).order() == 36);
    }
    SUBCASE("H not inside P is rejected") {
        PermGroup c4 = perm_group_from_generators(4, {cycle(4, {0, 1, 2, 3})});
        PermGroup v4 = perm_group_from_generators(4, {cycle(4, {0, 1}), cycle(4, {2, 3})});
        CHECK_THROWS_AS(normalizer_of_regular_subgroup(c4, v4), std::invalid_argument);
    }
}

TEST_CASE("orbit fixing subgroups") {
    FiniteGroup d3 = dihedral(3);
    CayleyGraph empty = build_graph(d3, Bitset(6));
    PermGroup aut = graph_automorphisms(empty);
    REQUIRE(aut.order() == 720);

    SUBCASE("single orbit keeps everything") {
        CHECK(orbit_fixing_subgroup(aut, {full_set(6)}).order() == 720);
    }
    SUBCASE("singleton orbits keep only the identity") {
        std::vector<Bitset> orbits;
        for (int v = 0; v < 6; ++v) orbits.push_back(singleton(6, v));
        CHECK(orbit_fixing_subgroup(aut, orbits).order() == 1);
    }
    SUBCASE("rotation cosets of D3 under Sym(6) give (3!)^2") {
        Bitset rot(6), refl(6);
        for (int e : {0, 1, 2}) rot.set(e);
        for (int e : {3, 4, 5}) refl.set(e);
        CHECK(orbit_fixing_subgroup(aut, {rot, refl}).order() == 36);
    }
    SUBCASE("non-partition rejected") {
        CHECK_THROWS_AS(orbit_fixing_subgroup(aut, {full_set(6), singleton(6, 0)}),
                        std::invalid_argument);
    }
}

TEST_CASE("conjugation action on an embedded normal subgroup") {
    FiniteGroup d3 = dihedral(3);
    Bitset rot(6);
    for (int e : {0, 1, 2}) rot.set(e);

    SUBCASE("translations act as conjugation by the group element") {
        for (int k = 0; k < 6; ++k) {
            auto iota = conjugation_action_on_n(right_translation(d3, k), d3, rot);
            REQUIRE(iota.has_value());
            for (int e = rot.find_first(); e >= 0; e = rot.find_next(e))
                CHECK(iota->images[e] == d3.conj(e, k));
        }
    }
    SUBCASE("the identity permutation induces the identity automorphism") {
        auto iota = conjugation_action_on_n(Permutation::identity(6), d3, rot);
        REQUIRE(iota.has_value());
        CHECK(iota->is_identity());
    }
    SUBCASE("a permutation moving the carrier off itself fails") {
        auto bad = conjugation_action_on_n(cycle(6, {0, 3}), d3, rot);
        CHECK_FALSE(bad.has_value());
    }
    SUBCASE("automorphisms from census-style stabilizers verify as homomorphisms") {
        ConnectionSetEnumerator en(d3);
        for (uint64_t i = 0; i < en.count(); ++i) {
            PermGroup aut = graph_automorphisms(build_graph(d3, en.decode(i)));
            int hits = 0;
            for (const auto& f : aut.elements) {
                auto iota = conjugation_action_on_n(f, d3, rot);
                if (!iota) continue;
                ++hits;
                for (int a = rot.find_first(); a >= 0; a = rot.find_next(a))
                    for (int b = rot.find_first(); b >= 0; b = rot.find_next(b))
                        CHECK(iota->images[d3.mul(a, b)] ==
                              d3.mul(iota->images[a], iota->images[b]));
            }
            CHECK(hits >= 6);  // the regular subgroup always normalizes N
        }
    }
}
