#include <catch2/catch_amalgamated.hpp>

#include <collapsible/corpus.hpp>
#include <collapsible/geometry.hpp>
#include <collapsible/iso.hpp>

#include <algorithm>

using namespace collapsible;

namespace {

PointConfig moment_curve(int n)
{
    PointConfig c;
    for (int t = 1; t <= n; ++t)
        c.points.push_back({Rational(t), Rational(t * t), Rational(t * t * t), Rational(t * t * t * t)});
    return c;
}

Point3 p3(int x, int y, int z)
{
    return {Rational(x), Rational(y), Rational(z)};
}

} // namespace

TEST_CASE("hull of the moment curve follows Gale's evenness rule")
{
    for (int n = 6; n <= 9; ++n) {
        auto hull = brute_force_facets(moment_curve(n));
        auto gale = gale_evenness_facets(n);
        std::sort(hull.begin(), hull.end());
        std::sort(gale.begin(), gale.end());
        INFO("n = " << n);
        CHECK(hull == gale);
    }
    CHECK(gale_evenness_facets(8).size() == 20);
}

TEST_CASE("degenerate point sets are rejected")
{
    PointConfig flat;
    for (int i = 0; i < 6; ++i)
        flat.points.push_back({Rational(i), Rational(i * i), Rational(i * i * i), Rational(0)});
    CHECK_THROWS_AS(brute_force_facets(flat), GeometryError);
}

TEST_CASE("realization of the sphere and its Schlegel diagram")
{
    const auto target = corpus("gs_32");
    const auto r = realize_search(target, 5000, 1);
    REQUIRE(r);
    const auto facets = brute_force_facets(r->config);
    CHECK(are_isomorphic(SimplicialComplex::from_facets(facets), target));
    for (Face f : target.facets())
        CHECK(std::find(facets.begin(), facets.end(), r->labels.apply(f)) != facets.end());

    const Face base = choose_schlegel_base(r->config, facets);
    const auto proj = schlegel(r->config, facets, base);
    CHECK(proj.tetrahedra.size() == 18);
    CHECK(verify_schlegel(proj));

    // D inside the diagram, in point labels
    std::vector<Face> tris;
    const auto d = corpus("dunce_hat_D_gs32");
    for (Face t : d.facets())
        tris.push_back(r->labels.apply(t));
    const auto gc = extract_embedding(proj, tris);
    CHECK(verify_embedding(gc).ok);
    const auto off = export_off(gc);
    CHECK(off_counts(off) == std::array<std::size_t, 3>{8, 17, 24});

    SECTION("moving an interior vertex far out breaks the diagram")
    {
        auto bad = proj;
        int inner = 0;
        while (base.contains(inner))
            ++inner;
        bad.coords[inner] = p3(50, 50, 50);
        CHECK_FALSE(verify_schlegel(bad));
    }
    SECTION("a base that is not a facet is refused")
    {
        Face not_facet;
        for (Face f : simplex(7).faces(3))
            if (std::find(facets.begin(), facets.end(), f) == facets.end()) {
                not_facet = f;
                break;
            }
        CHECK_THROWS_AS(schlegel(r->config, facets, not_facet), GeometryError);
    }
}

TEST_CASE("embedding check on hand-made triangles")
{
    GeometricComplex gc;
    gc.coords = {p3(0, 0, 0), p3(4, 0, 0), p3(0, 4, 0), p3(1, 1, -2), p3(1, 1, 2), p3(3, 3, 0), p3(0, 0, 5)};

    SECTION("two triangles sharing an edge")
    {
        gc.triangles = {{0, 1, 2}, {1, 2, 5}};
        CHECK(verify_embedding(gc).ok);
    }
    SECTION("interpenetrating triangles")
    {
        gc.triangles = {{0, 1, 2}, {3, 4, 6}};
        const auto e = verify_embedding(gc);
        CHECK_FALSE(e.ok);
        REQUIRE(e.offending);
    }
    SECTION("shared vertex but the second triangle folds back through the first")
    {
        gc.coords.push_back(p3(2, 1, 0));
        gc.coords.push_back(p3(1, 2, 0));
        // coplanar, overlapping: 0 7 8 lies inside 0 1 2
        gc.triangles = {{0, 1, 2}, {0, 7, 8}};
        CHECK_FALSE(verify_embedding(gc).ok);
    }
    SECTION("shared edge with coplanar overlap")
    {
        gc.coords.push_back(p3(1, 1, 0));
        gc.triangles = {{0, 1, 2}, {1, 2, 7}};
        CHECK_FALSE(verify_embedding(gc).ok);
    }
    SECTION("disjoint triangles")
    {
        gc.triangles = {{0, 1, 2}, {6, 4, 5}};
        CHECK(verify_embedding(gc).ok);
    }
}

TEST_CASE("exact coordinates round trip")
{
    const std::vector<std::vector<Rational>> pts{{Rational(1, 3), Rational(-7), Rational(0)},
                                                 {Rational(22, 7), Rational(5, 2), Rational(-1, 1000)}};
    CHECK(parse_coordinates(write_coordinates(pts)) == pts);
    CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
    CHECK(to_decimal(Rational(-2, 3), 2) == "-0.67");
    CHECK(to_decimal(Rational(5), 1) == "5.0");
}
