#include <catch2/catch_amalgamated.hpp>

#include <collapsible/collapse.hpp>
#include <collapsible/corpus.hpp>
#include <collapsible/tree_collapse.hpp>

#include "oracles.hpp"

#include <set>

using namespace collapsible;

TEST_CASE("spanning tree counts match the matrix-tree theorem")
{
    CHECK(oracle::kirchhoff_tree_count(corpus("simplex_boundary_4")) == 125);
    CHECK(oracle::kirchhoff_tree_count(corpus("ball_B")) == 4494);
    for (const char* name : {"simplex_boundary_4", "ball_B", "simplex_boundary_3", "rp2_6"}) {
        const auto c = count_spanning_trees(corpus(name));
        INFO(name);
        REQUIRE(c.completeness == Verdict::Yes);
        CHECK(oracle::Int(c.count) == oracle::kirchhoff_tree_count(corpus(name)));
    }
    Budget small;
    small.nodes = 1000;
    CHECK(count_spanning_trees(corpus("gs_32"), small).completeness == Verdict::Indeterminate);
    CHECK(oracle::kirchhoff_tree_count(corpus("gs_32")) == 1'106'917'716);
}

TEST_CASE("enumerated trees are distinct spanning trees")
{
    const auto m = corpus("ball_B");
    std::set<std::vector<Face>> seen;
    for_each_spanning_tree(m, [&](const DualSpanningTree& t) {
        CHECK(t.edges.size() == m.facets().size() - 1);
        seen.insert(t.ridges());
        return true;
    });
    CHECK(seen.size() == 4494);
}

TEST_CASE("two tetrahedra glued along a triangle")
{
    const std::vector<Face> tets{{0, 1, 2, 3}, {1, 2, 3, 4}};
    const auto m = SimplicialComplex::from_facets(tets);
    CHECK(count_spanning_trees(m).count == 1);
    const auto t = sample_spanning_trees(m, 1, 1).front();
    REQUIRE(t.ridges() == std::vector<Face>{{1, 2, 3}});
    const auto kt = tree_complex(m, t);
    CHECK(kt.f_vector().to_string() == "(5,9,6)");
    const auto cert = tree_directed_collapse(m, Face{0, 1, 2, 3}, t);
    const auto replay = replay_certificate(delete_facet_open(m, Face{0, 1, 2, 3}), cert);
    REQUIRE(replay.valid);
    CHECK(replay.end == kt);
    CHECK_THROWS_AS(tree_directed_collapse(m, Face{0, 1, 2, 4}, t), std::invalid_argument);
}

TEST_CASE("tree-directed collapses of the sphere land on K^T")
{
    const auto m = corpus("gs_32");
    const auto trees = sample_spanning_trees(m, 25, 42);
    CHECK(sample_spanning_trees(m, 25, 42).front().ridges() == trees.front().ridges());
    for (const auto& t : trees) {
        const auto kt = tree_complex(m, t);
        // 38 triangles minus 18 tree ridges
        CHECK(kt.faces(2).size() == 20);
        CHECK(kt.euler_characteristic() == 1);
        for (Face f : {m.facets().front(), m.facets().back()}) {
            const auto replay = replay_certificate(delete_facet_open(m, f), tree_directed_collapse(m, f, t));
            REQUIRE(replay.valid);
            CHECK(replay.end == kt);
        }
    }
}

TEST_CASE("trees avoiding protected ridges")
{
    const auto m = corpus("gs_32");
    CHECK_FALSE(find_tree_avoiding(m, m.faces(2)));
    const auto d = corpus("dunce_hat_D_gs32");
    const auto t = find_tree_avoiding(m, d.faces(2));
    REQUIRE(t);
    const auto kt = tree_complex(m, *t);
    CHECK(d.is_subcomplex_of(kt));
    CHECK(collapse_to_point(kt, Strategy::ExhaustiveMemoized).verdict == Verdict::No);
}

TEST_CASE("facet independence on a small sphere")
{
    const auto r = facet_independence_experiment(corpus("simplex_boundary_4"));
    CHECK(r.facets.size() == 5);
    CHECK(r.constant);
    CHECK_FALSE(r.has_indeterminate);
    for (auto v : r.verdicts)
        CHECK(v == Verdict::Yes);
}

TEST_CASE("tree operations reject unsuitable complexes")
{
    CHECK_THROWS_AS(count_spanning_trees(corpus("dunce_hat_D")), TreeError); // an edge in three triangles
    const std::vector<Face> apart{{0, 1, 2}, {3, 4, 5}};
    CHECK_THROWS_AS(count_spanning_trees(SimplicialComplex::from_facets(apart)), TreeError);
}
