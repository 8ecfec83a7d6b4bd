#include <catch2/catch_amalgamated.hpp>

#include <collapsible/corpus.hpp>
#include <collapsible/criteria.hpp>
#include <collapsible/enumerator.hpp>
#include <collapsible/homology.hpp>
#include <collapsible/iso.hpp>

#include "oracles.hpp"

#include <set>

using namespace collapsible;

namespace {

// Every subset of the tetrahedra on n vertices that is a 3-ball using all of them.
std::size_t brute_force_balls(int n)
{
    const auto tets = simplex(n - 1).faces(3);
    std::set<std::vector<std::uint64_t>> classes;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << tets.size()); ++mask) {
        std::vector<Face> chosen;
        for (std::size_t i = 0; i < tets.size(); ++i)
            if ((mask >> i) & 1U)
                chosen.push_back(tets[i]);
        const auto k = SimplicialComplex::from_facets(chosen);
        if (k.num_vertices() != n || classify_small_manifold(k) != ManifoldClass::Manifold3WithBoundary)
            continue;
        if (!homology_integral(k, true).trivial())
            continue;
        if (classify_small_manifold(k.boundary_complex()) != ManifoldClass::Sphere2)
            continue;
        classes.insert(oracle::brute_canonical(k));
    }
    return classes.size();
}

} // namespace

TEST_CASE("closed 3-manifold census matches plain enumeration")
{
    for (int n = 5; n <= 7; ++n) {
        const auto r = enumerate_closed_3manifolds(n);
        INFO("n = " << n);
        REQUIRE(r.completeness == Verdict::Yes);
        CHECK(r.records.size() == census_count_unpruned(n));
        for (const auto& rec : r.records) {
            CHECK(rec.closed_manifold);
            CHECK(classify_small_manifold(rec.complex) == ManifoldClass::Manifold3Closed);
            CHECK(rec.complex.num_vertices() == n);
        }
    }
}

TEST_CASE("eight vertices: every closed 3-manifold is a sphere, D lies in three of them")
{
    const auto r = enumerate_closed_3manifolds(8);
    REQUIRE(r.completeness == Verdict::Yes);
    CHECK(r.records.size() == 39);
    for (const auto& rec : r.records)
        CHECK(homology_integral(rec.complex, true).betti() == std::vector<int>{0, 0, 0, 1});
    const auto hits = census_containment(r.records, corpus("dunce_hat_D"));
    REQUIRE(hits.size() == 3);
    std::vector<std::size_t> facets;
    for (const auto& h : hits)
        facets.push_back(h.complex.facets().size());
    std::sort(facets.begin(), facets.end());
    CHECK(facets == std::vector<std::size_t>{19, 20, 20});
    bool has_gs32 = false;
    for (const auto& h : hits)
        has_gs32 = has_gs32 || are_isomorphic(h.complex, corpus("gs_32")).has_value();
    CHECK(has_gs32);
    // fewer vertices cannot hold D at all
    for (int n = 5; n <= 7; ++n)
        CHECK(census_containment(enumerate_closed_3manifolds(n).records, corpus("dunce_hat_D")).empty());
}

TEST_CASE("ball enumeration matches brute force on 5 and 6 vertices")
{
    CHECK(enumerate_balls(4).balls.size() == 1);
    for (int n = 5; n <= 6; ++n) {
        const auto r = enumerate_balls(n);
        INFO("n = " << n);
        REQUIRE(r.completeness == Verdict::Yes);
        CHECK(r.uncertified.empty());
        CHECK(r.balls.size() == brute_force_balls(n));
    }
}

TEST_CASE("ball B is the only small ball around D")
{
    Budget budget;
    budget.nodes = 50'000'000;
    const auto d = corpus("dunce_hat_D");
    const auto r = search_balls_containing(d, 8, 12, budget);
    REQUIRE(r.completeness == Verdict::Yes);
    REQUIRE(r.balls.size() == 1);
    CHECK(are_isomorphic(r.balls[0], corpus("ball_B")));
    CHECK(r.uncertified.empty());
    CHECK(search_balls_containing(d, 8, 11, budget).balls.empty());
}

TEST_CASE("ball search wants the pattern on all n vertices")
{
    CHECK_THROWS_AS(search_balls_containing(corpus("dunce_hat_D"), 9, 12), std::invalid_argument);
}
