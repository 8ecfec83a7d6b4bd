#include <catch2/catch_amalgamated.hpp>

#include <collapsible/collapse.hpp>
#include <collapsible/corpus.hpp>
#include <collapsible/criteria.hpp>
#include <collapsible/shelling.hpp>

#include "oracles.hpp"

using namespace collapsible;

namespace {

// Pure 2-complexes: random_2_complex already returns triangles only.
bool pure_with_facets(const SimplicialComplex& k, std::size_t max)
{
    return k.is_pure() && k.facets().size() <= max;
}

} // namespace

TEST_CASE("check_shelling on hand-made orders")
{
    const auto s = simplex_boundary(3);
    const ShellingOrder good{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    CHECK_FALSE(check_shelling(s, good));
    // two triangles meeting in a vertex only
    const std::vector<Face> bowtie{{0, 1, 2}, {2, 3, 4}, {1, 2, 3}};
    const auto k = SimplicialComplex::from_facets(bowtie);
    CHECK(check_shelling(k, {{0, 1, 2}, {2, 3, 4}, {1, 2, 3}}) == 1U);
    CHECK_FALSE(check_shelling(k, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}));
    CHECK(check_shelling(k, {{0, 1, 2}, {1, 2, 3}}) == 2U);
}

TEST_CASE("shellability of the corpus")
{
    for (const char* name : {"ball_B", "gs_32", "simplex_boundary_4", "cyclic_4_8"}) {
        const auto k = corpus(name);
        const auto r = is_shellable(k);
        INFO(name);
        REQUIRE(r.verdict == Verdict::Yes);
        CHECK_FALSE(check_shelling(k, *r.order));
    }
    CHECK(is_shellable(corpus("dunce_hat_D")).verdict == Verdict::No);
    CHECK(is_shellable(corpus("rp2_6")).verdict == Verdict::No);
    CHECK_THROWS_AS(is_shellable(SimplicialComplex::from_facets(std::vector<Face>{{0, 1, 2}, {3, 4}})),
                    std::invalid_argument);
}

TEST_CASE("extendable shellability agrees with brute force")
{
    int yes = 0;
    int no = 0;
    int tried = 0;
    for (std::uint64_t seed = 1; tried < 120 && seed < 2000; ++seed) {
        const auto k = random_2_complex(seed, 7, 8);
        if (!pure_with_facets(k, 8) || k.dim() != 2)
            continue;
        ++tried;
        const bool expected = oracle::extendably_shellable(k.facets());
        const auto r = is_extendably_shellable(k);
        INFO("seed " << seed);
        REQUIRE(r.verdict != Verdict::Indeterminate);
        CHECK((r.verdict == Verdict::Yes) == expected);
        if (r.verdict == Verdict::No && r.order && r.order->size() < k.facets().size())
            CHECK(check_shelling(k, *r.order) == r.order->size()); // valid up to the dead end
        (expected ? yes : no) += 1;
    }
    CHECK(yes > 5);
    CHECK(no > 5);
}

TEST_CASE("reversed shellings give collapses")
{
    for (const char* name : {"ball_B", "gs_32", "simplex_3"}) {
        const auto k = corpus(name);
        const auto r = is_shellable(k);
        REQUIRE(r.order);
        const auto sc = shelling_to_collapse(k, *r.order);
        const auto replay = replay_certificate(sc.start, sc.certificate);
        INFO(name);
        REQUIRE(replay.valid);
        CHECK(replay.end.num_faces() == 1);
        // a sphere has to lose its last facet first
        CHECK((sc.start == k) == (std::string(name) != "gs_32"));
    }
    const ShellingOrder bad{{0, 1, 2, 3}};
    CHECK_THROWS_AS(shelling_to_collapse(corpus("ball_B"), bad), std::invalid_argument);
}

TEST_CASE("constructibility")
{
    CHECK(is_constructible(simplex(3)).verdict == Verdict::Yes);
    CHECK(is_constructible(corpus("ball_B")).verdict == Verdict::Yes);
    CHECK(is_constructible(corpus("simplex_boundary_3")).verdict == Verdict::Yes);
    // a pinched pair of triangles is not even strongly connected
    const std::vector<Face> bowtie{{0, 1, 2}, {0, 3, 4}};
    CHECK(is_constructible(SimplicialComplex::from_facets(bowtie)).verdict == Verdict::No);
    CHECK(is_constructible(corpus("dunce_hat_D")).verdict == Verdict::No);
}
