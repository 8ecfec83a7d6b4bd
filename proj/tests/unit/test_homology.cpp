#include <catch2/catch_amalgamated.hpp>

#include <collapsible/corpus.hpp>
#include <collapsible/criteria.hpp>
#include <collapsible/homology.hpp>

#include "oracles.hpp"

using namespace collapsible;

TEST_CASE("projective plane has 2-torsion")
{
    const auto h = homology_integral(corpus("rp2_6"), false);
    REQUIRE(h.groups.size() == 3);
    CHECK(h.groups[0].betti == 1);
    CHECK(h.groups[1].betti == 0);
    CHECK(h.groups[1].torsion == std::vector<BigInt>{2});
    CHECK(h.groups[2].trivial());
    CHECK(homology_z2(corpus("rp2_6"), false) == std::vector<int>{1, 1, 1});
}

TEST_CASE("acyclic complexes")
{
    for (const char* name : {"dunce_hat_D", "ball_B", "simplex_4"}) {
        INFO(name);
        CHECK(homology_integral(corpus(name), true).trivial());
    }
    const auto s = homology_integral(corpus("gs_32"), true);
    CHECK(s.betti() == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("smith form of small matrices")
{
    using M = std::vector<std::vector<BigInt>>;
    CHECK(smith_invariants(M{{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
    CHECK(smith_invariants(M{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<BigInt>{2, 6, 12});
    CHECK(smith_invariants(M{{0, 0}, {0, 0}}).empty());
}

TEST_CASE("Z2 betti numbers agree with a dense elimination")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto k = random_2_complex(seed, 8, 14);
        INFO("seed " << seed);
        CHECK(homology_z2(k, false) == oracle::betti_z2(k));
    }
}

TEST_CASE("integral and Z2 ranks are consistent by universal coefficients")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto k = random_2_complex(seed, 8, 14);
        const auto h = homology_integral(k, false);
        const auto z2 = homology_z2(k, false);
        for (std::size_t i = 0; i < h.groups.size(); ++i) {
            int even = 0;
            for (const auto& t : h.groups[i].torsion)
                even += t % 2 == 0 ? 1 : 0;
            int below = 0;
            if (i > 0)
                for (const auto& t : h.groups[i - 1].torsion)
                    below += t % 2 == 0 ? 1 : 0;
            INFO("seed " << seed << " dim " << i);
            CHECK(z2[i] == h.groups[i].betti + even + below);
        }
    }
}

TEST_CASE("Cohen-Macaulay test")
{
    CHECK(is_cohen_macaulay(corpus("ball_B")));
    CHECK(is_cohen_macaulay(corpus("gs_32")));
    CHECK(is_cohen_macaulay(corpus("dunce_hat_D")));
    CHECK_FALSE(is_cohen_macaulay(corpus("rp2_6")));
    // two triangles sharing a vertex: the vertex link is disconnected
    const std::vector<Face> bowtie{{0, 1, 2}, {0, 3, 4}};
    CHECK_FALSE(is_cohen_macaulay(SimplicialComplex::from_facets(bowtie)));
    // not pure
    const std::vector<Face> mixed{{0, 1, 2}, {2, 3}};
    CHECK_FALSE(is_cohen_macaulay(SimplicialComplex::from_facets(mixed)));
}
