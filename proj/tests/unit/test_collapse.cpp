#include <catch2/catch_amalgamated.hpp>

#include <collapsible/collapse.hpp>
#include <collapsible/corpus.hpp>
#include <collapsible/criteria.hpp>
#include <collapsible/homology.hpp>

#include "oracles.hpp"

using namespace collapsible;

TEST_CASE("elementary collapse checks its preconditions")
{
    const auto t = simplex(2);
    CHECK(elementary_collapse(t, {Face{0, 1}, Face{0, 1, 2}}).facets().size() == 2);
    CHECK_THROWS_AS(elementary_collapse(t, {Face{0}, Face{0, 1}}), CollapseError);
    CHECK_THROWS_AS(elementary_collapse(t, {Face{0, 1}, Face{0, 1, 3}}), CollapseError);
    CHECK(free_faces(t).size() == 3);
    CHECK(free_faces(corpus("dunce_hat_D")).empty());
}

TEST_CASE("simplices collapse and spheres do not")
{
    for (int k = 1; k <= 5; ++k) {
        const auto r = collapse_to_point(simplex(k), Strategy::ExhaustiveMemoized);
        REQUIRE(r.verdict == Verdict::Yes);
        const auto replay = replay_certificate(simplex(k), *r.certificate);
        CHECK(replay.valid);
        CHECK(replay.end.num_faces() == 1);
        CHECK(collapse_to_point(simplex_boundary(k), Strategy::ExhaustiveMemoized).verdict == Verdict::No);
    }
}

TEST_CASE("dunce hat is contractible but not collapsible")
{
    const auto d = corpus("dunce_hat_D");
    CHECK(homology_integral(d, true).trivial());
    CHECK(collapse_to_point(d, Strategy::ExhaustiveMemoized).verdict == Verdict::No);
    CHECK(collapse_to_point(d, Strategy::GreedyRandomRestarts, 3).verdict == Verdict::Indeterminate);
}

TEST_CASE("ball B collapses, but not along every sequence")
{
    const auto b = corpus("ball_B");
    const auto yes = collapse_to_point(b, Strategy::ExhaustiveMemoized);
    REQUIRE(yes.verdict == Verdict::Yes);
    CHECK(replay_certificate(b, *yes.certificate).valid);

    const auto onto = collapses_onto(b, corpus("dunce_hat_D_gs32"), Strategy::ExhaustiveMemoized);
    REQUIRE(onto.verdict == Verdict::Yes);
    const auto replay = replay_certificate(b, *onto.certificate);
    REQUIRE(replay.valid);
    CHECK(replay.end == corpus("dunce_hat_D_gs32"));

    const auto ext = is_extendably_collapsible(b);
    REQUIRE(ext.verdict == Verdict::No);
    REQUIRE(ext.end);
    CHECK(replay_certificate(b, *ext.certificate).end == *ext.end);
    CHECK(free_faces(*ext.end).empty());
}

TEST_CASE("collapsing onto something that is not a subcomplex throws")
{
    CHECK_THROWS_AS(collapses_onto(simplex(2), simplex(3), Strategy::ExhaustiveMemoized), std::invalid_argument);
}

TEST_CASE("exhaustive search agrees with brute force on small 2-complexes")
{
    int yes = 0;
    int no = 0;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const auto k = random_2_complex(seed, 7, 9);
        const bool expected = oracle::collapsible_brute(k);
        INFO("seed " << seed);
        CHECK((collapse_to_point(k, Strategy::ExhaustiveMemoized).verdict == Verdict::Yes) == expected);
        CHECK(greedy_equals_search_dim2(k));
        (expected ? yes : no) += 1;
    }
    // the sample must exercise both answers
    CHECK(yes > 10);
    CHECK(no > 10);
}

TEST_CASE("replay reports the first bad step")
{
    const auto t = simplex(2);
    CollapseCertificate cert;
    cert.steps = {{Face{0, 1}, Face{0, 1, 2}}, {Face{0, 1}, Face{0, 1, 2}}};
    const auto r = replay_certificate(t, cert);
    CHECK_FALSE(r.valid);
    CHECK(r.failed_step == 1);
    CHECK_FALSE(r.reason.empty());
}

TEST_CASE("normalized certificates remove higher faces first")
{
    const auto k = simplex(3);
    const auto r = collapse_to_point(k, Strategy::GreedyRandomRestarts, 7);
    REQUIRE(r.verdict == Verdict::Yes);
    const auto n = normalize_certificate(k, *r.certificate);
    CHECK(replay_certificate(k, n).end == replay_certificate(k, *r.certificate).end);
    for (std::size_t i = 1; i < n.steps.size(); ++i)
        CHECK(n.steps[i - 1].coface.size() >= n.steps[i].coface.size());
}

TEST_CASE("sampled stuck cores of ball B are genuine")
{
    StuckCoreMode mode;
    mode.samples = 2000;
    const auto b = corpus("ball_B");
    const auto report = find_stuck_cores(b, mode, 5);
    REQUIRE_FALSE(report.cores.empty());
    bool point = false;
    for (const auto& c : report.cores) {
        CHECK(replay_certificate(b, c.certificate).end == c.core);
        CHECK(free_faces(c.core).empty());
        CHECK(homology_integral(c.core, true).trivial()); // collapses keep the homotopy type
        point = point || c.core.num_faces() == 1;
    }
    // random sequences almost never get stuck on B; the exhaustive search is what finds D
    CHECK(point);
}

TEST_CASE("budgets make searches indeterminate")
{
    Budget tiny;
    tiny.nodes = 3;
    CHECK(is_extendably_collapsible(corpus("ball_B"), tiny).verdict == Verdict::Indeterminate);
}
