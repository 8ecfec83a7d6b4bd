#include <collapsible/collapse.hpp>
#include <collapsible/corpus.hpp>
#include <collapsible/criteria.hpp>
#include <collapsible/enumerator.hpp>
#include <collapsible/formats.hpp>
#include <collapsible/geometry.hpp>
#include <collapsible/homology.hpp>
#include <collapsible/iso.hpp>
#include <collapsible/shelling.hpp>
#include <collapsible/tree_collapse.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace collapsible {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "PASS";
    case Status::Fail:
        return "FAIL";
    case Status::Indeterminate:
        break;
    }
    return "INDETERMINATE";
}

bool CriterionResult::blocking_failure() const
{
    return std::any_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status == Status::Fail && !c.known_gap; });
}

namespace {

Check check(std::string what, bool ok, std::string detail = {})
{
    return {std::move(what), ok ? Status::Pass : Status::Fail, std::move(detail), false};
}

Check check(std::string what, Verdict got, Verdict want, std::string detail = {})
{
    Check c{std::move(what), Status::Pass, std::move(detail), false};
    if (got == Verdict::Indeterminate)
        c.status = Status::Indeterminate;
    else if (got != want)
        c.status = Status::Fail;
    if (c.detail.empty())
        c.detail = "got " + to_string(got);
    return c;
}

std::string faces_text(const std::vector<Face>& faces)
{
    std::string s;
    for (Face f : faces) {
        if (!s.empty())
            s += ", ";
        for (int v : f.vertices())
            s += std::to_string(v);
    }
    return s;
}

bool is_point(const SimplicialComplex& k) { return k.facets().size() == 1 && k.facets()[0].size() == 1; }

bool replays_to_point(const SimplicialComplex& k, const CollapseCertificate& cert)
{
    const auto r = replay_certificate(k, cert);
    return r.valid && is_point(r.end);
}

std::vector<int> reduced_betti(const SimplicialComplex& k) { return homology_integral(k, true).betti(); }

/// Random maximal-or-truncated collapse sequence by uniformly chosen free pairs.
CollapseCertificate random_collapse(const SimplicialComplex& k, std::mt19937_64& rng, std::size_t max_steps)
{
    CollapseCertificate cert;
    auto cur = k;
    for (std::size_t i = 0; i < max_steps; ++i) {
        const auto free = free_faces(cur);
        if (free.empty())
            break;
        std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
        const auto step = free[pick(rng)];
        cert.steps.push_back(step);
        cur = elementary_collapse(cur, step);
    }
    return cert;
}

SimplicialComplex random_complex(std::mt19937_64& rng)
{
    // Closures of a few random faces of dimension 1..3 on up to 7 vertices.
    std::uniform_int_distribution<int> count(2, 7);
    std::uniform_int_distribution<int> vertex(0, 6);
    std::uniform_int_distribution<int> size(2, 4);
    std::vector<Face> faces;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
        Face f;
        const int s = size(rng);
        while (f.size() < s)
            f = f.with(vertex(rng));
        faces.push_back(f);
    }
    return SimplicialComplex::from_facets(faces);
}

CriterionResult start(std::string id, std::string title, double time_limit)
{
    CriterionResult r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.time_limit = time_limit;
    return r;
}

void finish(CriterionResult& r, double seconds)
{
    r.seconds = seconds;
    if (r.time_limit > 0) {
        std::ostringstream os;
        os.precision(3);
        os << seconds << " s (limit " << r.time_limit << " s)";
        r.checks.push_back(check("runtime within target", seconds <= r.time_limit, os.str()));
    }
    bool fail = false;
    bool indeterminate = false;
    for (const auto& c : r.checks) {
        fail = fail || c.status == Status::Fail;
        indeterminate = indeterminate || c.status == Status::Indeterminate;
    }
    r.status = fail ? Status::Fail : (indeterminate ? Status::Indeterminate : Status::Pass);
}

CriterionResult a1()
{
    auto r = start("A1", "corpus sphere gs_32", 1.0);
    const auto gs = corpus("gs_32");
    r.checks.push_back(check("f-vector (8,27,38,19)", gs.f_vector().counts == std::vector<std::int64_t>{8, 27, 38, 19},
                             gs.f_vector().to_string()));
    bool links = true;
    for (int v : gs.vertex_set().vertices())
        links = links && classify_small_manifold(gs.link(Face{v})) == ManifoldClass::Sphere2;
    r.checks.push_back(check("every vertex link is a 2-sphere", links));
    bool ridges = true;
    for (Face t : gs.faces(2))
        ridges = ridges && gs.ridge_degree(t) == 2;
    r.checks.push_back(check("every triangle in exactly 2 tetrahedra", ridges));
    const auto sh = is_shellable(gs);
    r.checks.push_back(check("is_shellable = Yes", sh.verdict, Verdict::Yes));
    if (sh.order) {
        r.checks.push_back(check("shelling order verifies", !check_shelling(gs, *sh.order).has_value()));
        r.artifacts.emplace_back("A1_gs_32_shelling.txt", serialize_face_sequence("shelling order", gs, *sh.order));
    }
    return r;
}

CriterionResult a2()
{
    auto r = start("A2", "ball B: collapsible, not extendably collapsible", 300.0);
    Budget budget;
    budget.nodes = 10'000'000;
    const auto gs = corpus("gs_32");
    const auto b = corpus("ball_B");
    const auto central = gs_32_central_tetrahedra();
    r.checks.push_back(check("ball_B = gs_32 minus the 7 central tetrahedra",
                             b.facets() == gs.remove_facets_generated(central).facets() && b.facets().size() == 12,
                             "removed " + faces_text(central)));
    r.checks.push_back(check("Manifold3WithBoundary", classify_small_manifold(b) == ManifoldClass::Manifold3WithBoundary));
    r.checks.push_back(
        check("boundary is a 2-sphere", classify_small_manifold(b.boundary_complex()) == ManifoldClass::Sphere2));

    const auto sh = is_shellable(b, budget);
    r.checks.push_back(check("is_shellable = Yes", sh.verdict, Verdict::Yes));
    if (sh.order) {
        r.checks.push_back(check("shelling order verifies", !check_shelling(b, *sh.order).has_value()));
        r.artifacts.emplace_back("A2_ball_B_shelling.txt", serialize_face_sequence("shelling order", b, *sh.order));
    }

    const auto ext = is_extendably_shellable(b, budget);
    auto ec = check("is_extendably_shellable = Yes", ext.verdict, Verdict::Yes);
    if (ext.verdict == Verdict::No && ext.order) {
        ec.known_gap = true;
        ec.detail = "got No: partial shelling " + faces_text(*ext.order) +
                    " cannot be continued (verified independently; see README)";
        r.artifacts.emplace_back("A2_ball_B_dead_end_shelling.txt",
                                 serialize_face_sequence("partial shelling", b, *ext.order));
    }
    r.checks.push_back(ec);

    const auto col = collapse_to_point(b, Strategy::ExhaustiveMemoized, 0, budget);
    r.checks.push_back(check("collapse_to_point = Yes", col.verdict, Verdict::Yes));
    if (col.certificate) {
        r.checks.push_back(check("collapse certificate replays to a point", replays_to_point(b, *col.certificate)));
        r.artifacts.emplace_back("A2_ball_B_collapse.cert", serialize_certificate(b, *col.certificate));
    }

    const auto xc = is_extendably_collapsible(b, budget);
    r.checks.push_back(check("is_extendably_collapsible = No", xc.verdict, Verdict::No));
    if (xc.verdict == Verdict::No && xc.certificate && xc.end) {
        const auto rep = replay_certificate(b, *xc.certificate);
        const bool ok = rep.valid && rep.end.facets() == xc.end->facets() && free_faces(*xc.end).empty() &&
                        !is_point(*xc.end);
        r.checks.push_back(check("stuck-core witness replays and has no free faces", ok,
                                 "core f-vector " + xc.end->f_vector().to_string()));
        r.artifacts.emplace_back("A2_stuck_core.txt", serialize_facet_list(*xc.end));
        r.artifacts.emplace_back("A2_stuck_core.cert", serialize_certificate(b, *xc.certificate));
    }
    return r;
}

CriterionResult a3()
{
    auto r = start("A3", "dunce hat D", 600.0);
    const auto derivation = derive_dunce_hat();
    const auto d = corpus("dunce_hat_D");
    r.checks.push_back(check("derive_dunce_hat reproduces the frozen entry", derivation.canonical.facets() == d.facets(),
                             std::to_string(derivation.qualifying_cores) + " qualifying cores"));
    r.checks.push_back(check("pure 2-dimensional on 8 vertices", d.is_pure() && d.dim() == 2 && d.num_vertices() == 8,
                             d.f_vector().to_string()));
    r.checks.push_back(check("chi = 1", d.euler_characteristic() == 1));
    r.checks.push_back(check("no free faces", free_faces(d).empty()));
    r.checks.push_back(check("reduced integral homology trivial", homology_integral(d, true).trivial()));
    r.checks.push_back(check("is_shellable = No", is_shellable(d).verdict, Verdict::No));
    r.checks.push_back(check("Cohen-Macaulay (Reisner)", is_cohen_macaulay(d)));
    r.checks.push_back(check("D embeds in gs_32", contains_subcomplex(corpus("gs_32"), d).has_value()));
    r.checks.push_back(check("D embeds in ball_B", contains_subcomplex(corpus("ball_B"), d).has_value()));
    Budget budget;
    budget.nodes = 50'000'000;
    const auto con = is_constructible(d, budget);
    auto cc = check("is_constructible = No", con.verdict, Verdict::No,
                    "got " + to_string(con.verdict) + " after " + std::to_string(con.stats.nodes_expanded) + " nodes");
    if (cc.status == Status::Indeterminate)
        cc.detail += " (degraded: budget exhausted)";
    r.checks.push_back(cc);
    r.artifacts.emplace_back("A3_dunce_hat_D.txt", serialize_facet_list(d));
    r.artifacts.emplace_back("A3_dunce_hat_D_gs32.txt", serialize_facet_list(derivation.labeled));
    return r;
}

CriterionResult a4()
{
    auto r = start("A4", "closed 3-manifold census", 1800.0);
    const std::map<int, std::size_t> expected{{5, 1}, {6, 2}, {7, 5}, {8, 39}};
    CensusResult census8;
    for (const auto& [n, want] : expected) {
        auto census = enumerate_closed_3manifolds(n);
        const std::string what = "n = " + std::to_string(n) + ": " + std::to_string(want) + " types";
        if (census.completeness != Verdict::Yes) {
            r.checks.push_back({what, Status::Indeterminate, "budget exhausted", false});
            continue;
        }
        r.checks.push_back(check(what, census.records.size() == want, std::to_string(census.records.size())));
        if (n <= 7) {
            const auto oracle = census_count_unpruned(n);
            r.checks.push_back(check("n = " + std::to_string(n) + " agrees with the unpruned oracle",
                                     oracle == census.records.size(), std::to_string(oracle)));
        }
        if (n == 8)
            census8 = std::move(census);
    }
    const auto d = corpus("dunce_hat_D");
    const auto hits = census_containment(census8.records, d);
    std::multiset<std::size_t> sizes;
    bool gs_hit = false;
    for (const auto& h : hits) {
        sizes.insert(h.complex.facets().size());
        gs_hit = gs_hit || (h.complex.facets().size() == 19 && are_isomorphic(h.complex, corpus("gs_32")).has_value());
    }
    std::string got;
    for (auto s : sizes)
        got += (got.empty() ? "" : ",") + std::to_string(s);
    r.checks.push_back(check("D lies in exactly 3 spheres, facet counts {19,20,20}",
                             sizes == std::multiset<std::size_t>{19, 20, 20}, "{" + got + "}"));
    r.checks.push_back(check("the 19-facet sphere is gs_32", gs_hit));
    std::string index;
    for (const auto& rec : census8.records)
        index += rec.hash + " " + rec.f_vector.to_string() + "\n";
    r.artifacts.emplace_back("A4_census_8.txt", index);
    return r;
}

CriterionResult a5()
{
    auto r = start("A5", "ball minimality for D", 4 * 3600.0);
    const auto d = corpus("dunce_hat_D_gs32");
    Budget budget;
    budget.nodes = 2'000'000'000;
    const auto eleven = search_balls_containing(d, 8, 11, budget);
    if (eleven.completeness != Verdict::Yes)
        r.checks.push_back({"no ball with <= 11 tetrahedra contains D", Status::Indeterminate, "budget exhausted", false});
    else
        r.checks.push_back(check("no ball with <= 11 tetrahedra contains D",
                                 eleven.balls.empty() && eleven.uncertified.empty(),
                                 std::to_string(eleven.stats.nodes_expanded) + " nodes"));
    const auto twelve = search_balls_containing(d, 8, 12, budget);
    if (twelve.completeness != Verdict::Yes) {
        r.checks.push_back(
            {"exactly one ball with <= 12 tetrahedra contains D", Status::Indeterminate, "budget exhausted", false});
    } else {
        const bool one = twelve.balls.size() == 1 && twelve.uncertified.empty();
        r.checks.push_back(check("exactly one ball with <= 12 tetrahedra contains D", one,
                                 std::to_string(twelve.balls.size()) + " found, " +
                                     std::to_string(twelve.stats.nodes_expanded) + " nodes"));
        if (one) {
            r.checks.push_back(
                check("it is isomorphic to ball_B", are_isomorphic(twelve.balls[0], corpus("ball_B")).has_value()));
            r.artifacts.emplace_back("A5_ball.txt", serialize_facet_list(twelve.balls[0]));
        }
    }
    return r;
}

CriterionResult a6(const CriteriaOptions& options)
{
    auto r = start("A6", "dual-tree collapse on gs_32", 900.0);
    const auto gs = corpus("gs_32");
    const auto trees = sample_spanning_trees(gs, 200, options.seed);
    bool sizes = true;
    std::optional<std::size_t> collapsible_tree;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const auto kt = tree_complex(gs, trees[i]);
        sizes = sizes && trees[i].edges.size() == 18 && kt.faces(2).size() == 20 && kt.facets().size() == 20;
        if (!collapsible_tree && collapse_to_point(kt, Strategy::ExhaustiveMemoized).verdict == Verdict::Yes)
            collapsible_tree = i;
    }
    r.checks.push_back(check("K^T has 20 triangles for 200 sampled trees", sizes));

    bool roots = true;
    const auto kt0 = tree_complex(gs, trees.front());
    for (Face f : gs.facets()) {
        const auto rep = replay_certificate(delete_facet_open(gs, f), tree_directed_collapse(gs, f, trees.front()));
        roots = roots && rep.valid && rep.end.facets() == kt0.facets();
    }
    r.checks.push_back(check("tree-directed collapse reaches K^T from all 19 roots", roots));

    const auto fi = facet_independence_experiment(gs);
    const bool all_yes = fi.verdicts.size() == 19 &&
                         std::all_of(fi.verdicts.begin(), fi.verdicts.end(), [](Verdict v) { return v == Verdict::Yes; });
    r.checks.push_back(check("M - F collapsible for all 19 facets", all_yes));
    r.checks.push_back(check("some sampled tree gives a collapsible K^T", collapsible_tree.has_value(),
                             collapsible_tree ? "tree #" + std::to_string(*collapsible_tree) : ""));

    const auto d = corpus("dunce_hat_D_gs32");
    const auto avoid = find_tree_avoiding(gs, d.facets());
    r.checks.push_back(check("a tree avoiding D's triangles exists", avoid.has_value()));
    if (avoid) {
        const auto kt = tree_complex(gs, *avoid);
        r.checks.push_back(check("that K^T contains D", d.is_subcomplex_of(kt)));
        StuckCoreMode mode;
        mode.exhaustive = true;
        const auto cores = find_stuck_cores(kt, mode);
        bool reaches_d = false;
        for (const auto& c : cores.cores)
            reaches_d = reaches_d || are_isomorphic(c.core, d).has_value();
        r.checks.push_back(check("exhaustive collapse of that K^T reaches D", reaches_d,
                                 std::to_string(cores.cores.size()) + " terminal classes"));
        r.artifacts.emplace_back("A6_tree_avoiding_D.txt",
                                 serialize_face_sequence("dual spanning tree", gs, avoid->ridges()));
    }
    return r;
}

CriterionResult a7(const CriteriaOptions& options)
{
    auto r = start("A7", "D x I collapses to a point and onto D", 1800.0);
    const auto d = corpus("dunce_hat_D");
    std::vector<int> order(static_cast<std::size_t>(d.num_vertices()));
    std::iota(order.begin(), order.end(), 0);
    const auto p = product_with_interval(d, order);
    r.checks.push_back(check("16 vertices, 51 tetrahedra", p.num_vertices() == 16 && p.facets().size() == 51,
                             p.f_vector().to_string()));
    Budget budget;
    budget.restarts = 100'000;
    const auto point = collapse_to_point(p, Strategy::GreedyRandomRestarts, options.seed, budget);
    r.checks.push_back(check("collapse_to_point = Yes", point.verdict, Verdict::Yes));
    if (point.certificate) {
        r.checks.push_back(check("certificate replays to a point", replays_to_point(p, *point.certificate)));
        r.artifacts.emplace_back("A7_DxI_point.cert", serialize_certificate(p, *point.certificate));
    }
    // The bottom copy D x {0} keeps the labels of D.
    const auto onto = collapses_onto(p, d, Strategy::GreedyRandomRestarts, options.seed, budget);
    r.checks.push_back(check("collapses_onto(D x I, D x {0}) = Yes", onto.verdict, Verdict::Yes));
    if (onto.certificate) {
        const auto rep = replay_certificate(p, *onto.certificate);
        r.checks.push_back(check("certificate replays to D", rep.valid && rep.end.facets() == d.facets()));
        r.artifacts.emplace_back("A7_DxI_onto_D.cert", serialize_certificate(p, *onto.certificate));
    }
    return r;
}

CriterionResult a8(const CriteriaOptions& options)
{
    auto r = start("A8", "geometric realization of D", 1800.0);
    const auto gs = corpus("gs_32");
    const auto found = realize_search(gs, 1'000'000, options.seed);
    r.checks.push_back(check("realize_search finds gs_32", found.has_value(),
                             found ? "trial " + std::to_string(found->trial) : "no match in 10^6 trials"));
    if (!found)
        return r;
    const auto facets = brute_force_facets(found->config);
    r.checks.push_back(
        check("hull facets isomorphic to gs_32", are_isomorphic(SimplicialComplex::from_facets(facets), gs).has_value()));
    const Face base = choose_schlegel_base(found->config, facets);
    const auto proj = schlegel(found->config, facets, base);
    r.checks.push_back(check("18 cells in the diagram", proj.tetrahedra.size() == 18));
    r.checks.push_back(check("verify_schlegel", verify_schlegel(proj), "base " + faces_text({base})));

    std::vector<Face> triangles;
    const auto d = corpus("dunce_hat_D_gs32");
    for (Face t : d.facets())
        triangles.push_back(found->labels.apply(t));
    const auto gc = extract_embedding(proj, triangles);
    const auto emb = verify_embedding(gc);
    r.checks.push_back(check("D embeds (all 136 triangle pairs)", emb.ok,
                             emb.offending ? "offending " + faces_text({emb.offending->first, emb.offending->second})
                                           : ""));
    const auto off = export_off(gc, 6);
    const auto counts = off_counts(off);
    r.checks.push_back(check("OFF with 8 vertices and 17 faces", counts[0] == 8 && counts[1] == 17));

    std::vector<std::vector<Rational>> pts4;
    for (const auto& p : found->config.points)
        pts4.emplace_back(p.begin(), p.end());
    std::vector<std::vector<Rational>> pts3;
    for (const auto& p : proj.coords)
        pts3.emplace_back(p.begin(), p.end());
    r.artifacts.emplace_back("A8_points_4d.txt", write_coordinates(pts4));
    r.artifacts.emplace_back("A8_schlegel_3d.txt", write_coordinates(pts3));
    r.artifacts.emplace_back("A8_dunce_hat.off", off);
    return r;
}

CriterionResult a9(const CriteriaOptions& options)
{
    auto r = start("A9", "property suites", 600.0);
    std::mt19937_64 rng(options.seed);

    // (i) reversed shellings of balls and punctured spheres
    std::vector<SimplicialComplex> shellable{corpus("ball_B"), corpus("gs_32"), simplex(3)};
    for (const auto& ball : enumerate_balls(6).balls)
        shellable.push_back(ball);
    for (int n = 5; n <= 7; ++n)
        for (const auto& rec : enumerate_closed_3manifolds(n).records) {
            shellable.push_back(rec.complex);
            for (Face f : rec.complex.facets())
                shellable.push_back(delete_facet_open(rec.complex, f));
        }
    std::size_t tried = 0;
    std::size_t good = 0;
    for (const auto& k : shellable) {
        if (!k.is_pure())
            continue;
        const auto sh = is_shellable(k);
        if (sh.verdict != Verdict::Yes)
            continue;
        ++tried;
        const auto sc = shelling_to_collapse(k, *sh.order);
        good += replays_to_point(sc.start, sc.certificate) ? 1 : 0;
    }
    r.checks.push_back(check("(i) shelling collapses replay to a point, >= 50 complexes", tried >= 50 && good == tried,
                             std::to_string(good) + "/" + std::to_string(tried)));

    // (ii)
    std::size_t agree = 0;
    for (int i = 0; i < 200; ++i)
        agree += greedy_equals_search_dim2(random_2_complex(rng(), 8, 15)) ? 1 : 0;
    r.checks.push_back(check("(ii) greedy equals search on 200 random 2-complexes", agree == 200,
                             std::to_string(agree) + "/200"));

    // (iii)
    std::size_t kept = 0;
    for (int i = 0; i < 100; ++i) {
        const auto k = random_complex(rng);
        const auto chi = k.euler_characteristic();
        const auto betti = reduced_betti(k);
        const auto cert = random_collapse(k, rng, 1000);
        bool ok = true;
        auto cur = k;
        for (const auto& step : cert.steps) {
            cur = elementary_collapse(cur, step);
            auto b = reduced_betti(cur);
            b.resize(betti.size(), 0);
            ok = ok && cur.euler_characteristic() == chi && b == betti;
        }
        kept += ok ? 1 : 0;
    }
    r.checks.push_back(check("(iii) collapses keep chi and reduced Betti numbers, 100 sequences", kept == 100,
                             std::to_string(kept) + "/100"));

    // (iv)
    std::size_t invariant = 0;
    std::size_t total = 0;
    for (const auto& name : corpus_names()) {
        const auto k = corpus(name);
        const auto base = canonical_form(k).facets;
        const auto verts = k.vertex_set().vertices();
        for (int i = 0; i < 100; ++i) {
            auto image = verts;
            std::shuffle(image.begin(), image.end(), rng);
            Relabeling map;
            for (std::size_t j = 0; j < verts.size(); ++j)
                map.set(verts[j], image[j]);
            ++total;
            invariant += canonical_form(map.apply(k)).facets == base ? 1 : 0;
        }
    }
    r.checks.push_back(check("(iv) canonical form invariant under 100 relabelings per corpus entry",
                             invariant == total, std::to_string(invariant) + "/" + std::to_string(total)));

    // (v)
    std::size_t same = 0;
    for (int i = 0; i < 100; ++i) {
        const auto k = random_complex(rng);
        const auto cert = random_collapse(k, rng, 1000);
        const auto norm = normalize_certificate(k, cert);
        const auto a = replay_certificate(k, cert);
        const auto b = replay_certificate(k, norm);
        bool monotone = true;
        for (std::size_t j = 1; j < norm.steps.size(); ++j)
            monotone = monotone && norm.steps[j].coface.dim() <= norm.steps[j - 1].coface.dim();
        same += (a.valid && b.valid && a.end.facets() == b.end.facets() && monotone) ? 1 : 0;
    }
    r.checks.push_back(check("(v) normalized certificates replay to the same end, 100 sequences", same == 100,
                             std::to_string(same) + "/100"));
    return r;
}

CriterionResult a10(const CriteriaOptions& options)
{
    auto r = start("A10", "8-vertex ball census (stretch)", 0);
    r.stretch = true;
    Budget budget;
    budget.nodes = options.ball_census_nodes;
    const auto balls = enumerate_balls(8, budget);
    if (balls.completeness != Verdict::Yes) {
        r.checks.push_back({"10211 balls on 8 vertices", Status::Indeterminate,
                            std::to_string(balls.balls.size()) + " found before the budget of " +
                                std::to_string(budget.nodes) + " nodes ran out",
                            false});
        return r;
    }
    r.checks.push_back(check("10211 balls on 8 vertices", balls.balls.size() == 10211 && balls.uncertified.empty(),
                             std::to_string(balls.balls.size()) + " certified, " +
                                 std::to_string(balls.uncertified.size()) + " uncertified"));
    return r;
}

} // namespace

SimplicialComplex random_2_complex(std::uint64_t seed, int max_vertices, int max_triangles)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> count(1, max_triangles);
    std::uniform_int_distribution<int> vertex(0, max_vertices - 1);
    std::vector<Face> faces;
    const int m = count(rng);
    while (static_cast<int>(faces.size()) < m) {
        Face f;
        while (f.size() < 3)
            f = f.with(vertex(rng));
        if (std::find(faces.begin(), faces.end(), f) == faces.end())
            faces.push_back(f);
    }
    return SimplicialComplex::from_facets(faces);
}

std::size_t census_count_unpruned(int n)
{
    if (n < 5 || n > 7)
        throw std::invalid_argument("census_count_unpruned: need 5 <= n <= 7");
    const auto tets = simplex(n - 1).faces(3);
    std::vector<int> mult(std::size_t{1} << n, 0);
    std::vector<int> last(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < tets.size(); ++i)
        for (Face t : tets[i].ridges())
            last[t.bits()] = static_cast<int>(i);
    std::vector<Face> chosen;
    std::set<std::vector<std::uint64_t>> types;
    std::vector<int> perm(static_cast<std::size_t>(n));
    const Face all((std::uint64_t{1} << n) - 1);

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == tets.size()) {
            if (chosen.empty())
                return;
            const auto k = SimplicialComplex::from_facets(chosen);
            if (k.vertex_set() != all || !k.is_connected())
                return;
            for (int v = 0; v < n; ++v)
                if (classify_small_manifold(k.link(Face{v})) != ManifoldClass::Sphere2)
                    return;
            std::vector<std::uint64_t> best;
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<std::uint64_t> img;
                for (Face f : chosen) {
                    std::uint64_t b = 0;
                    for (int v : f.vertices())
                        b |= std::uint64_t{1} << perm[v];
                    img.push_back(b);
                }
                std::sort(img.begin(), img.end());
                if (best.empty() || img < best)
                    best = img;
            } while (std::next_permutation(perm.begin(), perm.end()));
            types.insert(best);
            return;
        }
        const Face tet = tets[i];
        const auto sides = tet.ridges();
        // A triangle whose last tetrahedron was just decided must be closed up or unused.
        auto settled = [&] {
            for (Face t : sides)
                if (last[t.bits()] == static_cast<int>(i) && mult[t.bits()] == 1)
                    return false;
            return true;
        };
        if (std::all_of(sides.begin(), sides.end(), [&](Face t) { return mult[t.bits()] < 2; })) {
            for (Face t : sides)
                ++mult[t.bits()];
            chosen.push_back(tet);
            if (settled())
                rec(i + 1);
            chosen.pop_back();
            for (Face t : sides)
                --mult[t.bits()];
        }
        if (settled())
            rec(i + 1);
    };
    rec(0);
    return types.size();
}

std::vector<std::string> criteria_ids(Tier tier)
{
    switch (tier) {
    case Tier::Quick:
        return {"A1", "A2", "A3", "A6", "A9"};
    case Tier::Default:
        return {"A1", "A2", "A3", "A4", "A6", "A7", "A8", "A9"};
    case Tier::Full:
        break;
    }
    return {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10"};
}

CriterionResult run_criterion(const std::string& id, const CriteriaOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    if (id == "A1")
        r = a1();
    else if (id == "A2")
        r = a2();
    else if (id == "A3")
        r = a3();
    else if (id == "A4")
        r = a4();
    else if (id == "A5")
        r = a5();
    else if (id == "A6")
        r = a6(options);
    else if (id == "A7")
        r = a7(options);
    else if (id == "A8")
        r = a8(options);
    else if (id == "A9")
        r = a9(options);
    else if (id == "A10")
        r = a10(options);
    else
        throw std::invalid_argument("unknown criterion '" + id + "'");
    finish(r, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return r;
}

} // namespace collapsible
