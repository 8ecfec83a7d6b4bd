#include <catch2/catch_amalgamated.hpp>

#include <collapsible/collapse.hpp>
#include <collapsible/corpus.hpp>
#include <collapsible/formats.hpp>
#include <collapsible/homology.hpp>
#include <collapsible/iso.hpp>

#include <filesystem>

using namespace collapsible;

#ifndef DATA_DIR
#error "DATA_DIR must point at the data/ directory"
#endif

TEST_CASE("facet lists round trip")
{
    for (const auto& name : corpus_names()) {
        const auto k = corpus(name);
        INFO(name);
        CHECK(parse_facet_list(serialize_facet_list(k)) == k);
    }
    const auto k = parse_facet_list("# comment\n0 1 2\n1 2 3\n");
    CHECK(k.facets().size() == 2);
}

TEST_CASE("parse errors carry positions")
{
    try {
        parse_facet_list("0 1 2\n0 x 2\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_facet_list("0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_facet_list("0 64\n"), ParseError);
    CHECK_THROWS_AS(parse_facet_list("0  1\n"), ParseError);
    CHECK_THROWS_AS(parse_facet_list("0 1\n\n1 2\n"), ParseError);
}

TEST_CASE("certificates and face sequences round trip")
{
    const auto b = corpus("ball_B");
    const auto r = collapse_to_point(b, Strategy::ExhaustiveMemoized);
    REQUIRE(r.certificate);
    const auto file = parse_certificate(serialize_certificate(b, *r.certificate));
    CHECK(file.start_hash == content_hash(b));
    CHECK(file.certificate == *r.certificate);

    const std::vector<Face> seq{{0, 1, 2, 3}, {0, 1, 2, 4}};
    const auto fs = parse_face_sequence(serialize_face_sequence("shelling order", b, seq));
    CHECK(fs.kind == "shelling order");
    CHECK(fs.complex_hash == content_hash(b));
    CHECK(fs.faces == seq);
}

TEST_CASE("hashes depend on the facets, not their order")
{
    const std::vector<Face> a{{0, 1, 2}, {1, 2, 3}};
    const std::vector<Face> b{{1, 2, 3}, {0, 1, 2}};
    CHECK(content_hash(SimplicialComplex::from_facets(a)) == content_hash(SimplicialComplex::from_facets(b)));
    CHECK(content_hash(corpus("gs_32")).size() == 16);
    CHECK(corpus_entry("gs_32").hash == content_hash(corpus("gs_32")));
}

TEST_CASE("shipped data files match the built-in corpus")
{
    for (const char* name : {"gs_32", "ball_B", "dunce_hat_D", "dunce_hat_D_gs32", "rp2_6"}) {
        const auto path = std::filesystem::path(DATA_DIR) / (std::string(name) + ".txt");
        INFO(path);
        REQUIRE(std::filesystem::exists(path));
        CHECK(parse_facet_list(read_file(path.string())) == corpus(name));
    }
}

TEST_CASE("the sphere as constructed from its two cones")
{
    const auto g = corpus("gs_32");
    CHECK(g.f_vector().to_string() == "(8,27,38,19)");
    CHECK(classify_small_manifold(g) == ManifoldClass::Manifold3Closed);
    CHECK(homology_integral(g, true).betti() == std::vector<int>{0, 0, 0, 1});
    const auto central = gs_32_central_tetrahedra();
    CHECK(central.size() == 7);
    CHECK(gs_32_red_cone().size() == 10);
    const auto b = corpus("ball_B");
    CHECK(b.facets().size() == 12);
    CHECK(b.num_vertices() == 8);
    CHECK(classify_small_manifold(b.boundary_complex()) == ManifoldClass::Sphere2);
}

TEST_CASE("D is an 8-vertex dunce hat inside the 2-skeleton of B")
{
    const auto d = corpus("dunce_hat_D");
    const auto dg = corpus("dunce_hat_D_gs32");
    CHECK(d.f_vector().to_string() == "(8,24,17)");
    CHECK(are_isomorphic(d, dg));
    CHECK(dg.is_subcomplex_of(corpus("ball_B")));
    CHECK(dg.is_subcomplex_of(corpus("gs_32").skeleton(2)));
    CHECK(is_canonical(d));
}

TEST_CASE("D regenerates from scratch")
{
    const auto der = derive_dunce_hat();
    CHECK(der.canonical == corpus("dunce_hat_D"));
    CHECK(der.labeled == corpus("dunce_hat_D_gs32"));
    CHECK(der.qualifying_cores >= 1);
    const auto replay = replay_certificate(corpus("ball_B"), der.certificate);
    REQUIRE(replay.valid);
    CHECK(replay.end == der.labeled);
}

TEST_CASE("unknown corpus names")
{
    CHECK_THROWS_AS(corpus("no_such_thing"), UnknownCorpusEntry);
    CHECK_THROWS_AS(corpus("cyclic_4_17"), UnknownCorpusEntry);
    CHECK(corpus("cyclic_4_8").facets().size() == 20);
}
