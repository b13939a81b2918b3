#include "grr/catalog.hpp"
#include "grr/cayley_graph.hpp"
#include "grr/connection_set.hpp"
#include "grr/group_spec.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace grr;

TEST_CASE("enumeration counts and canonical order") {
    SUBCASE("C3 lists exactly its four inverse-closed subsets in slot order") {
        FiniteGroup c3 = cyclic(3);
        ConnectionSetEnumerator en(c3);
        REQUIRE(en.count() == 4);
        CHECK(en.decode(0).none());
        CHECK(en.decode(1) == singleton(3, 0));
        Bitset pair(3);
        pair.set(1);
        pair.set(2);
        CHECK(en.decode(2) == pair);
        CHECK(en.decode(3) == full_set(3));
    }
    SUBCASE("every subset of an elementary abelian group is inverse-closed") {
        ConnectionSetEnumerator en(elementary_abelian(2));
        CHECK(en.count() == 16);
    }
    SUBCASE("D3 has 32 inverse-closed subsets") {
        ConnectionSetEnumerator en(dihedral(3));
        CHECK(en.count() == 32);
    }
    SUBCASE("stream length is 2^c across the catalog") {
        for (const auto& g : catalog_groups(24)) {
            int c = c_value(g, full_set(g.n));
            if (c > 16) continue;
            ConnectionSetEnumerator en(g);
            std::set<Bitset> seen;
            for (uint64_t i = 0; i < en.count(); ++i) {
                Bitset s = en.decode(i);
                CHECK(is_inverse_closed(g, s));
                seen.insert(s);
            }
            CHECK(seen.size() == (uint64_t(1) << c));
        }
    }
    SUBCASE("index round-trip is exact on small groups") {
        for (const char* spec : {"C3", "C4", "EA2", "D3"}) {
            FiniteGroup g = parse_group_spec(spec);
            ConnectionSetEnumerator en(g);
            for (uint64_t i = 0; i < en.count(); ++i) CHECK(en.encode(en.decode(i)) == i);
        }
    }
    SUBCASE("budget enforced") {
        CHECK_THROWS_AS(ConnectionSetEnumerator(elementary_abelian(5), 30), budget_error);
    }
}

TEST_CASE("hex bit vectors round-trip") {
    std::mt19937_64 rng(17);
    for (int n : {3, 8, 12, 16, 40}) {
        for (int trial = 0; trial < 20; ++trial) {
            Bitset s(n);
            for (int e = 0; e < n; ++e)
                if (rng() & 1) s.set(e);
            CHECK(Bitset::from_hex(n, s.to_hex()) == s);
        }
    }
    CHECK_THROWS_AS(Bitset::from_hex(8, "0"), std::invalid_argument);    // wrong length
    CHECK_THROWS_AS(Bitset::from_hex(8, "zz"), std::invalid_argument);   // bad digit
    CHECK_THROWS_AS(Bitset::from_hex(3, "ff"), std::invalid_argument);   // bits past n
}

TEST_CASE("partition_range") {
    CHECK(partition_range(4, 1) == std::vector<std::pair<uint64_t, uint64_t>>{{0, 4}});
    CHECK(partition_range(4, 2) == std::vector<std::pair<uint64_t, uint64_t>>{{0, 2}, {2, 4}});
    auto four = partition_range(16, 4);
    REQUIRE(four.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(four[i].second - four[i].first == 4);
    // uneven totals stay contiguous and near-equal
    auto ranges = partition_range(10, 3);
    uint64_t covered = 0;
    for (auto [lo, hi] : ranges) {
        CHECK(lo == covered);
        covered = hi;
        CHECK(hi - lo >= 10 / 3);
        CHECK(hi - lo <= 10 / 3 + 1);
    }
    CHECK(covered == 10);
}

TEST_CASE("build_graph shapes") {
    FiniteGroup c4 = cyclic(4);
    SUBCASE("empty set gives the edgeless graph") {
        CayleyGraph g = build_graph(c4, Bitset(4));
        for (const auto& row : g.adj) CHECK(row.none());
    }
    SUBCASE("all non-identity elements give the complete graph") {
        Bitset s = full_set(4);
        s.reset(0);
        CayleyGraph g = build_graph(c4, s);
        CHECK(g.degree() == 3);
        for (int v = 0; v < 4; ++v) CHECK_FALSE(g.adj[v].test(v));
    }
    SUBCASE("C4 with the generator pair is a 4-cycle") {
        Bitset s(4);
        s.set(1);
        s.set(3);
        CayleyGraph g = build_graph(c4, s);
        for (int v = 0; v < 4; ++v) {
            CHECK(g.adj[v].count() == 2);
            CHECK(g.adj[v].test((v + 1) % 4));
            CHECK(g.adj[v].test((v + 3) % 4));
        }
    }
    SUBCASE("identity in S is dropped with a note") {
        Bitset s(4);
        s.set(0);
        CayleyGraph g = build_graph(c4, s);
        CHECK(g.loop_dropped);
        for (const auto& row : g.adj) CHECK(row.none());
    }
    SUBCASE("non-inverse-closed rejected") {
        Bitset s(4);
        s.set(1);
        CHECK_THROWS_AS(build_graph(c4, s), std::invalid_argument);
    }
}

TEST_CASE("right translations") {
    FiniteGroup c3 = cyclic(3);
    CHECK(right_translation(c3, 0).is_identity());
    Permutation rot = right_translation(c3, 1);
    CHECK(rot.img == std::vector<int>{1, 2, 0});

    FiniteGroup d4 = dihedral(4);
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        int a = int(rng() % d4.n), b = int(rng() % d4.n);
        CHECK(compose(right_translation(d4, a), right_translation(d4, b)) ==
              right_translation(d4, d4.mul(a, b)));
    }
}

TEST_CASE("adjacency symmetry and translation invariance, sampled") {
    auto groups = catalog_groups(16);
    std::mt19937_64 rng(20240809);
    int checked = 0;
    while (checked < 1000) {
        const FiniteGroup& g = groups[rng() % groups.size()];
        if (c_value(g, full_set(g.n)) > 16) continue;
        ConnectionSetEnumerator en(g);
        Bitset s = en.decode(rng() % en.count());
        CayleyGraph graph = build_graph(g, s);
        bool symmetric = true;
        for (int v = 0; v < g.n && symmetric; ++v)
            for (int u = graph.adj[v].find_first(); u >= 0; u = graph.adj[v].find_next(u))
                if (!graph.adj[u].test(v)) symmetric = false;
        CHECK(symmetric);
        bool invariant = true;
        for (int k = 0; k < 5 && invariant; ++k) {
            Permutation rho = right_translation(g, int(rng() % g.n));
            for (int v = 0; v < g.n && invariant; ++v)
                for (int u = 0; u < g.n && invariant; ++u)
                    if (graph.adj[v].test(u) != graph.adj[rho.img[v]].test(rho.img[u]))
                        invariant = false;
        }
        CHECK(invariant);
        ++checked;
    }
}
