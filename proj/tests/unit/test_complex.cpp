#include <catch2/catch_amalgamated.hpp>

#include <collapsible/complex.hpp>
#include <collapsible/corpus.hpp>

using namespace collapsible;

TEST_CASE("face order is lexicographic on sorted vertices")
{
    CHECK(Face{0, 1, 2} < Face{0, 1, 2, 3});
    CHECK(Face{0, 1, 2, 3} < Face{0, 1, 3});
    CHECK(Face{0, 5} < Face{1});
    CHECK_FALSE(Face{2} < Face{2});
    CHECK(Face{3, 1, 2}.to_string() == "1 2 3");
    CHECK(Face{0, 1, 2, 3, 4}.subfaces(3).size() == 10);
}

TEST_CASE("face construction rejects bad vertex lists")
{
    const std::vector<int> dup{1, 1};
    const std::vector<int> big{64};
    CHECK_THROWS_AS(Face::from_vertices(dup), std::invalid_argument);
    CHECK_THROWS_AS(Face::from_vertices(big), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_vertex_lists({{0, -1}}), std::invalid_argument);
}

TEST_CASE("simplex boundaries have binomial face counts")
{
    for (int k = 1; k <= 6; ++k) {
        const auto s = simplex_boundary(k);
        long long binom = k + 1;
        for (int d = 0; d < k; ++d) {
            CHECK(static_cast<long long>(s.faces(d).size()) == binom);
            binom = binom * (k - d) / (d + 2);
        }
        CHECK(s.euler_characteristic() == (k % 2 == 1 ? 2 : 0));
    }
}

TEST_CASE("non-maximal input faces are pruned")
{
    const std::vector<Face> in{{0, 1}, {0, 1, 2}, {0, 1, 2}, {3}};
    const auto k = SimplicialComplex::from_facets(in);
    CHECK(k.facets().size() == 2);
    CHECK_FALSE(k.is_pure());
    CHECK(k.f_vector().to_string() == "(4,3,1)");
}

TEST_CASE("links, stars and boundaries")
{
    const auto s = simplex_boundary(4);
    CHECK(s.link(Face{0}) == simplex_boundary(3).relabel(std::vector<int>{1, 2, 3, 4}));
    CHECK(simplex(3).boundary_complex() == simplex_boundary(3));
    CHECK(s.star(Face{0, 1}).facets().size() == 3);
    CHECK_THROWS(s.link(Face{0, 9}));
}

TEST_CASE("open and generated facet removal differ")
{
    const auto s = simplex_boundary(3);
    const std::vector<Face> gone{{0, 1, 2}};
    CHECK(s.remove_facets_open(gone).f_vector().to_string() == "(4,6,3)");
    CHECK(s.remove_facets_generated(gone) == s.remove_facets_open(gone));
    const auto b = corpus("ball_B");
    const auto g = corpus("gs_32");
    const auto central = gs_32_central_tetrahedra();
    CHECK(g.remove_facets_generated(central) == b);
}

TEST_CASE("manifold recognition")
{
    CHECK(classify_small_manifold(simplex_boundary(3)) == ManifoldClass::Sphere2);
    CHECK(classify_small_manifold(simplex(2)) == ManifoldClass::Ball2);
    CHECK(classify_small_manifold(corpus("gs_32")) == ManifoldClass::Manifold3Closed);
    CHECK(classify_small_manifold(corpus("ball_B")) == ManifoldClass::Manifold3WithBoundary);
    // rp2 is a closed surface but not a sphere
    CHECK(classify_small_manifold(corpus("rp2_6")) == ManifoldClass::Other);
    CHECK(classify_small_manifold(corpus("dunce_hat_D")) == ManifoldClass::Other);
}

TEST_CASE("product with an interval")
{
    const auto edge = simplex(1);
    const std::vector<int> order{0, 1};
    const auto p = product_with_interval(edge, order);
    CHECK(p.facets().size() == 2);
    CHECK(classify_small_manifold(p) == ManifoldClass::Ball2);

    const auto d = corpus("dunce_hat_D");
    std::vector<int> ord;
    for (int v : d.vertex_set().vertices())
        ord.push_back(v);
    const auto dxi = product_with_interval(d, ord);
    CHECK(dxi.f_vector().to_string() == "(16,80,116,51)");
    CHECK(dxi.euler_characteristic() == 1);
    const std::vector<int> bad{0, 1, 2};
    CHECK_THROWS_AS(product_with_interval(d, bad), std::invalid_argument);
}

TEST_CASE("dual graph of a 3-sphere is connected and 4-regular")
{
    const auto g = corpus("gs_32").dual_graph();
    CHECK(g.nodes.size() == 19);
    CHECK(g.edges.size() == 38);
    CHECK(g.is_connected());
    std::vector<bool> none(g.edges.size(), false);
    CHECK_FALSE(g.is_connected(none));
}
