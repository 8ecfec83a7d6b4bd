#include <catch2/catch_amalgamated.hpp>

#include <collapsible/corpus.hpp>
#include <collapsible/criteria.hpp>
#include <collapsible/iso.hpp>

#include "oracles.hpp"

#include <random>

using namespace collapsible;

namespace {

SimplicialComplex shuffled(const SimplicialComplex& k, std::uint64_t seed, std::vector<int>& map)
{
    std::vector<int> targets(20);
    std::iota(targets.begin(), targets.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(targets.begin(), targets.end(), rng);
    map.assign(kMaxVertices, -1);
    for (int v : k.vertex_set().vertices())
        map[v] = targets[v];
    return k.relabel(map);
}

} // namespace

TEST_CASE("canonical form is invariant under relabeling")
{
    for (const char* name : {"gs_32", "ball_B", "dunce_hat_D", "rp2_6", "cyclic_4_8"}) {
        const auto k = corpus(name);
        const auto c = canonical_form(k);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            std::vector<int> map;
            INFO(name << " seed " << seed);
            CHECK(canonical_form(shuffled(k, seed, map)).facets == c.facets);
        }
        CHECK(c.relabeling.apply(k).facets() == c.facets);
    }
}

TEST_CASE("canonical form separates what brute force separates")
{
    for (std::uint64_t a = 1; a <= 25; ++a)
        for (std::uint64_t b = a + 1; b <= 25; ++b) {
            const auto ka = random_2_complex(a, 6, 6);
            const auto kb = random_2_complex(b, 6, 6);
            if (ka.num_vertices() != kb.num_vertices())
                continue;
            const bool same = oracle::brute_canonical(ka) == oracle::brute_canonical(kb);
            CHECK(same == (canonical_form(ka).facets == canonical_form(kb).facets));
            CHECK(same == are_isomorphic(ka, kb).has_value());
        }
}

TEST_CASE("isomorphisms found are real")
{
    const auto k = corpus("gs_32");
    std::vector<int> map;
    const auto other = shuffled(k, 11, map);
    const auto r = are_isomorphic(k, other);
    REQUIRE(r);
    CHECK(r->apply(k) == other);
    CHECK_FALSE(are_isomorphic(k, corpus("cyclic_4_8")));
    CHECK(is_canonical(SimplicialComplex::from_facets(canonical_form(k).facets)));
}

TEST_CASE("automorphism group orders")
{
    CHECK(automorphisms(simplex_boundary(3)).size() == 24);
    CHECK(automorphisms(corpus("rp2_6")).size() == 60);
    for (const auto& a : automorphisms(corpus("gs_32")))
        CHECK(a.apply(corpus("gs_32")) == corpus("gs_32"));
}

TEST_CASE("subcomplex containment")
{
    const auto host = corpus("gs_32");
    const auto d = corpus("dunce_hat_D");
    const auto e = contains_subcomplex(host, d);
    REQUIRE(e);
    CHECK(e->apply(d).is_subcomplex_of(host));
    CHECK_FALSE(contains_subcomplex(simplex_boundary(6), d));
    CHECK(contains_subcomplex(simplex_boundary(7), d)); // every triangle on 8 vertices is there
    CHECK_FALSE(contains_subcomplex(simplex_boundary(3), corpus("rp2_6")));
    const auto all = all_embeddings(host, d);
    CHECK(all.size() >= 1);
    for (const auto& r : all)
        CHECK(r.apply(d).is_subcomplex_of(host));
}
