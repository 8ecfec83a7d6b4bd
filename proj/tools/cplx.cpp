// Command-line front end. Exit codes: 0 Yes/pass, 1 No/fail, 2 indeterminate, 3 usage.
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

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

using namespace collapsible;
namespace fs = std::filesystem;

namespace {

constexpr int kUsage = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::Yes:
        return 0;
    case Verdict::No:
        return 1;
    case Verdict::Indeterminate:
        break;
    }
    return 2;
}

/// A facet-list file, or "corpus:<name>".
SimplicialComplex load(const std::string& source)
{
    if (source.rfind("corpus:", 0) == 0)
        return corpus(source.substr(7));
    if (!fs::exists(source))
        throw UsageError("no such file: " + source + " (use corpus:<name> for built-in complexes)");
    return parse_facet_list(read_file(source));
}

std::string stem(const std::string& source)
{
    if (source.rfind("corpus:", 0) == 0)
        return source.substr(7);
    return fs::path(source).stem().string();
}

Face parse_face(const std::string& text)
{
    const auto faces = parse_face_lines(text);
    if (faces.size() != 1)
        throw UsageError("expected one face, got '" + text + "'");
    return faces[0];
}

struct Common {
    std::uint64_t seed = 1;
    std::uint64_t budget = 10'000'000;
    std::string out = ".";
    bool deterministic = false;
    int jobs = 1;

    [[nodiscard]] Budget nodes() const
    {
        Budget b;
        b.nodes = budget;
        b.restarts = budget;
        return b;
    }

    /// Writes a collapse certificate after replaying it; a failed replay is a bug, never a witness.
    std::string write_certificate(const std::string& name, const SimplicialComplex& start,
                                  const CollapseCertificate& cert, const SimplicialComplex* expected_end = nullptr) const
    {
        const auto r = replay_certificate(start, cert);
        if (!r.valid || (expected_end && r.end != *expected_end))
            throw std::logic_error("certificate " + name + " does not replay: " + r.reason);
        return write(name, serialize_certificate(start, cert));
    }

    std::string write(const std::string& name, const std::string& contents) const
    {
        fs::create_directories(out);
        const auto path = (fs::path(out) / name).string();
        write_file(path, contents);
        return path;
    }
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--seed", c.seed, "random seed");
    cmd->add_option("--budget", c.budget, "search nodes (restarts for greedy search)");
    cmd->add_option("--out", c.out, "directory for witness files");
    cmd->add_flag("--deterministic", c.deterministic, "single lexicographic search order");
    cmd->add_option("--jobs", c.jobs, "worker cap (searches run single-threaded)");
}

void print_stats(const SearchStats& s)
{
    std::printf("nodes %llu, memo hits %llu\n", static_cast<unsigned long long>(s.nodes_expanded),
                static_cast<unsigned long long>(s.memo_hits));
}

int cmd_replay(const std::string& input, const std::string& cert_path)
{
    const auto k = load(input);
    const auto file = parse_certificate(read_file(cert_path));
    if (file.start_hash != content_hash(k))
        std::printf("warning: certificate was written for complex %s, this is %s\n", file.start_hash.c_str(),
                    content_hash(k).c_str());
    const auto r = replay_certificate(k, file.certificate);
    if (!r.valid) {
        std::printf("No: step %zu %s\n", r.failed_step + 1, r.reason.c_str());
        return 1;
    }
    std::printf("Yes: %zu steps, end f-vector %s\n", file.certificate.steps.size(), r.end.f_vector().to_string().c_str());
    return 0;
}

int cmd_info(const std::string& input)
{
    const auto k = load(input);
    std::printf("facets    %zu\n", k.facets().size());
    std::printf("dim       %d%s\n", k.dim(), k.is_pure() ? " (pure)" : "");
    std::printf("f-vector  %s\n", k.f_vector().to_string().c_str());
    std::printf("chi       %lld\n", static_cast<long long>(k.euler_characteristic()));
    std::printf("class     %s\n", to_string(classify_small_manifold(k)).c_str());
    std::printf("free      %zu\n", free_faces(k).size());
    std::printf("hash      %s\n", content_hash(k).c_str());
    return 0;
}

int cmd_collapse(const std::string& input, const std::optional<std::string>& onto, bool greedy, const Common& c)
{
    const auto k = load(input);
    CollapseOutcome r;
    const Strategy strategy = greedy ? Strategy::GreedyRandomRestarts : Strategy::ExhaustiveMemoized;
    if (c.deterministic && greedy && !onto) {
        const auto run = greedy_collapse(k);
        r.verdict = run.core.facets().size() == 1 && run.core.facets()[0].size() == 1 ? Verdict::Yes
                                                                                       : Verdict::Indeterminate;
        if (r.verdict == Verdict::Yes)
            r.certificate = run.certificate;
    } else if (onto) {
        r = collapses_onto(k, load(*onto), strategy, c.seed, c.nodes());
    } else {
        r = collapse_to_point(k, strategy, c.seed, c.nodes());
    }
    std::printf("%s\n", to_string(r.verdict).c_str());
    print_stats(r.stats);
    if (r.certificate)
        std::printf("certificate %s\n", c.write_certificate(stem(input) + ".collapse.cert", k, *r.certificate).c_str());
    return exit_code(r.verdict);
}

int cmd_extendable(const std::string& input, const Common& c)
{
    const auto k = load(input);
    const auto r = is_extendably_collapsible(k, c.nodes());
    std::printf("%s\n", to_string(r.verdict).c_str());
    print_stats(r.stats);
    if (r.verdict == Verdict::No && r.end && r.certificate) {
        std::printf("stuck core %s, f-vector %s\n",
                    c.write(stem(input) + ".stuck_core.txt", serialize_facet_list(*r.end)).c_str(),
                    r.end->f_vector().to_string().c_str());
        std::printf("certificate %s\n",
                    c.write_certificate(stem(input) + ".stuck_core.cert", k, *r.certificate, &*r.end).c_str());
    }
    return exit_code(r.verdict);
}

int cmd_shell(const std::string& input, bool extendable, bool to_collapse, const Common& c)
{
    const auto k = load(input);
    const auto r = extendable ? is_extendably_shellable(k, c.nodes()) : is_shellable(k, c.nodes());
    std::printf("%s\n", to_string(r.verdict).c_str());
    print_stats(r.stats);
    if (r.order) {
        const bool complete = r.order->size() == k.facets().size();
        const std::string kind = complete ? "shelling order" : "partial shelling";
        std::printf("%s %s\n", kind.c_str(),
                    c.write(stem(input) + (complete ? ".shelling.txt" : ".dead_end.txt"),
                            serialize_face_sequence(kind, k, *r.order))
                        .c_str());
        if (to_collapse && complete) {
            const auto sc = shelling_to_collapse(k, *r.order);
            std::printf("collapse %s\n",
                        c.write_certificate(stem(input) + ".shelling.cert", sc.start, sc.certificate).c_str());
        }
    }
    return exit_code(r.verdict);
}

int cmd_constructible(const std::string& input, const Common& c)
{
    const auto r = is_constructible(load(input), c.nodes());
    std::printf("%s\n", to_string(r.verdict).c_str());
    print_stats(r.stats);
    return exit_code(r.verdict);
}

int cmd_homology(const std::string& input, bool z2, bool reduced)
{
    const auto k = load(input);
    if (z2) {
        const auto b = homology_z2(k, reduced);
        for (std::size_t i = 0; i < b.size(); ++i)
            std::printf("H%zu = (Z2)^%d\n", i, b[i]);
        return 0;
    }
    const auto h = homology_integral(k, reduced);
    for (std::size_t i = 0; i < h.groups.size(); ++i) {
        std::string group;
        if (h.groups[i].betti > 0)
            group = "Z^" + std::to_string(h.groups[i].betti);
        for (const auto& t : h.groups[i].torsion)
            group += (group.empty() ? "Z/" : " + Z/") + t.str();
        std::printf("H%zu = %s\n", i, group.empty() ? "0" : group.c_str());
    }
    return 0;
}

int cmd_cm(const std::string& input)
{
    const bool cm = is_cohen_macaulay(load(input));
    std::printf("%s\n", cm ? "Yes" : "No");
    return cm ? 0 : 1;
}

std::string mapping_text(const Relabeling& r, Face domain)
{
    std::string s;
    for (int v : domain.vertices())
        s += std::to_string(v) + "->" + std::to_string(r.image(v)) + " ";
    return s;
}

int cmd_iso(const std::string& a, const std::string& b, const Common& c)
{
    const auto ka = load(a);
    const auto kb = load(b);
    const auto r = are_isomorphic(ka, kb);
    std::printf("%s\n", r ? "Yes" : "No");
    if (r) {
        if (r->apply(ka) != kb)
            throw std::logic_error("isomorphism does not map the facets");
        std::printf("%s\nmapping %s\n", mapping_text(*r, ka.vertex_set()).c_str(),
                    c.write(stem(a) + ".iso.txt", mapping_text(*r, ka.vertex_set()) + "\n").c_str());
    }
    return r ? 0 : 1;
}

int cmd_contains(const std::string& host, const std::string& pattern, const Common& c)
{
    const auto p = load(pattern);
    const auto h = load(host);
    const auto r = contains_subcomplex(h, p);
    std::printf("%s\n", r ? "Yes" : "No");
    if (r) {
        if (!r->apply(p).is_subcomplex_of(h))
            throw std::logic_error("embedding does not land in the host");
        std::printf("%s\nembedding %s\n", mapping_text(*r, p.vertex_set()).c_str(),
                    c.write(stem(pattern) + ".embedding.txt", mapping_text(*r, p.vertex_set()) + "\n").c_str());
    }
    return r ? 0 : 1;
}

int cmd_enumerate(int n, bool balls, const Common& c)
{
    if (balls) {
        const auto r = enumerate_balls(n, c.nodes());
        std::printf("%zu balls, %zu uncertified, %s\n", r.balls.size(), r.uncertified.size(),
                    to_string(r.completeness).c_str());
        print_stats(r.stats);
        std::string all;
        for (const auto& b : r.balls)
            all += serialize_facet_list(b) + "\n";
        std::printf("balls %s\n", c.write("balls_" + std::to_string(n) + ".txt", all).c_str());
        return exit_code(r.completeness);
    }
    const auto r = enumerate_closed_3manifolds(n, c.nodes());
    std::printf("%zu closed 3-manifolds, %s\n", r.records.size(), to_string(r.completeness).c_str());
    print_stats(r.stats);
    write_census(c.out, r.records);
    std::printf("census %s\n", (fs::path(c.out) / "index.txt").string().c_str());
    return exit_code(r.completeness);
}

int cmd_search_balls(const std::string& pattern, int n, int max_facets, const Common& c)
{
    const auto r = search_balls_containing(load(pattern), n, max_facets, c.nodes());
    std::printf("%zu balls, %zu uncertified, %s\n", r.balls.size(), r.uncertified.size(),
                to_string(r.completeness).c_str());
    print_stats(r.stats);
    for (std::size_t i = 0; i < r.balls.size(); ++i)
        std::printf("ball %s\n",
                    c.write("ball_" + std::to_string(i + 1) + ".txt", serialize_facet_list(r.balls[i])).c_str());
    if (r.completeness != Verdict::Yes)
        return 2;
    return r.balls.empty() ? 1 : 0;
}

int cmd_tree_collapse(const std::string& input, const std::optional<std::string>& root,
                      const std::optional<std::string>& avoid, bool independence, const Common& c)
{
    const auto m = load(input);
    if (independence) {
        const auto fi = facet_independence_experiment(m, c.nodes());
        for (std::size_t i = 0; i < fi.facets.size(); ++i)
            std::printf("%s %s\n", fi.facets[i].to_string().c_str(), to_string(fi.verdicts[i]).c_str());
        std::printf("constant %s\n", fi.constant ? "yes" : "no");
        if (fi.has_indeterminate)
            return 2;
        return fi.constant ? 0 : 1;
    }
    DualSpanningTree tree;
    if (avoid) {
        const auto p = load(*avoid);
        const auto t = find_tree_avoiding(m, p.facets());
        if (!t) {
            std::printf("No tree avoids %s\n", avoid->c_str());
            return 1;
        }
        tree = *t;
    } else {
        tree = sample_spanning_trees(m, 1, c.seed).front();
    }
    const Face f = root ? parse_face(*root) : m.facets().front();
    const auto kt = tree_complex(m, tree);
    const auto cert = tree_directed_collapse(m, f, tree);
    std::printf("K^T f-vector %s\n", kt.f_vector().to_string().c_str());
    std::printf("tree %s\n",
                c.write(stem(input) + ".tree.txt", serialize_face_sequence("dual spanning tree", m, tree.ridges())).c_str());
    std::printf("K^T %s\n", c.write(stem(input) + ".KT.txt", serialize_facet_list(kt)).c_str());
    std::printf("certificate %s\n",
                c.write_certificate(stem(input) + ".tree.cert", delete_facet_open(m, f), cert, &kt).c_str());
    const auto r = collapse_to_point(kt, Strategy::ExhaustiveMemoized, c.seed, c.nodes());
    std::printf("K^T collapsible: %s\n", to_string(r.verdict).c_str());
    return exit_code(r.verdict);
}

std::vector<std::vector<Rational>> as_rows(const std::vector<Point4>& pts)
{
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : pts)
        rows.emplace_back(p.begin(), p.end());
    return rows;
}

int cmd_realize(const std::string& input, std::uint64_t trials, const Common& c)
{
    const auto target = load(input);
    const auto r = realize_search(target, trials, c.seed);
    if (!r) {
        std::printf("No realization in %llu trials\n", static_cast<unsigned long long>(trials));
        return 2;
    }
    // Reorder so that point i belongs to target vertex i.
    std::vector<Point4> pts(r->config.points.size());
    for (int v : target.vertex_set().vertices())
        pts[v] = r->config.points[r->labels.image(v)];
    std::printf("Yes (trial %llu)\n", static_cast<unsigned long long>(r->trial));
    std::printf("coordinates %s\n", c.write(stem(input) + ".points.txt", write_coordinates(as_rows(pts))).c_str());
    return 0;
}

int cmd_schlegel(const std::string& coords, const std::optional<std::string>& base_text,
                 const std::optional<std::string>& pattern, int digits, const Common& c)
{
    PointConfig config;
    for (const auto& row : parse_coordinates(read_file(coords))) {
        if (row.size() != 4)
            throw UsageError("schlegel: coordinates must have 4 entries per line");
        config.points.push_back({row[0], row[1], row[2], row[3]});
    }
    const auto facets = brute_force_facets(config);
    const Face base = base_text ? parse_face(*base_text) : choose_schlegel_base(config, facets);
    const auto proj = schlegel(config, facets, base);
    const bool ok = verify_schlegel(proj);
    std::printf("base %s, %zu cells, verify %s\n", base.to_string().c_str(), proj.tetrahedra.size(), ok ? "Yes" : "No");
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : proj.coords)
        rows.emplace_back(p.begin(), p.end());
    std::printf("projected %s\n", c.write(stem(coords) + ".schlegel.txt", write_coordinates(rows)).c_str());
    if (!ok)
        return 1;
    if (pattern) {
        const auto p = load(*pattern);
        const auto gc = extract_embedding(proj, p.facets());
        const auto e = verify_embedding(gc);
        if (!e.ok) {
            std::printf("embedding fails at %s / %s\n", e.offending->first.to_string().c_str(),
                        e.offending->second.to_string().c_str());
            return 1;
        }
        std::printf("embedding verified, OFF %s\n", c.write(stem(*pattern) + ".off", export_off(gc, digits)).c_str());
    }
    return 0;
}

int cmd_corpus(const std::optional<std::string>& name)
{
    if (!name) {
        for (const auto& n : corpus_names()) {
            const auto e = corpus_entry(n);
            std::printf("%-18s %-14s %s\n", n.c_str(), e.complex.f_vector().to_string().c_str(), e.note.c_str());
        }
        return 0;
    }
    std::fputs(serialize_facet_list(corpus(*name)).c_str(), stdout);
    return 0;
}

int cmd_verify_paper(Tier tier, const Common& c)
{
    using nlohmann::json;
    CriteriaOptions options;
    options.seed = c.seed;
    json report;
    report["tier"] = tier == Tier::Quick ? "quick" : (tier == Tier::Full ? "full" : "default");
    report["seed"] = c.seed;
    std::string table;
    bool blocked = false;
    bool open = false;
    for (const auto& id : criteria_ids(tier)) {
        const auto r = run_criterion(id, options);
        json entry{{"id", r.id},      {"title", r.title},       {"status", to_string(r.status)},
                   {"seconds", r.seconds}, {"stretch", r.stretch}, {"checks", json::array()},
                   {"files", json::array()}};
        for (const auto& chk : r.checks)
            entry["checks"].push_back(
                {{"what", chk.what}, {"status", to_string(chk.status)}, {"detail", chk.detail}, {"known_gap", chk.known_gap}});
        for (const auto& [name, contents] : r.artifacts) {
            const auto path = c.write(name, contents);
            entry["files"].push_back(path);
        }
        report["criteria"].push_back(entry);
        char line[512];
        std::snprintf(line, sizeof line, "%-4s %-13s %7.1f s  %s%s\n", r.id.c_str(), to_string(r.status).c_str(),
                      r.seconds, r.title.c_str(), r.stretch ? " [stretch]" : "");
        table += line;
        for (const auto& chk : r.checks)
            if (chk.status != Status::Pass)
                table += "       " + to_string(chk.status) + (chk.known_gap ? " (known gap)" : "") + ": " + chk.what +
                         (chk.detail.empty() ? "" : " -- " + chk.detail) + "\n";
        std::fputs(line, stdout);
        std::fflush(stdout);
        if (!r.stretch) {
            blocked = blocked || r.blocking_failure();
            open = open || r.status == Status::Indeterminate;
        }
    }
    c.write("report.txt", table);
    c.write("report.json", report.dump(2) + "\n");
    std::printf("report %s\n", (fs::path(c.out) / "report.txt").string().c_str());
    return blocked ? 1 : (open ? 2 : 0);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"simplicial complexes: collapsibility, shellability, census, realization"};
    app.require_subcommand(1);
    Common common;
    std::string input;
    std::string second;
    std::optional<std::string> opt_a;
    std::optional<std::string> opt_b;
    bool flag_a = false;
    bool flag_b = false;
    int n = 8;
    int max_facets = 12;
    int digits = 6;
    std::uint64_t trials = 1'000'000;
    bool quick = false;
    bool full = false;

    auto* info = app.add_subcommand("info", "face counts and basic invariants");
    info->add_option("complex", input)->required();

    auto* replay = app.add_subcommand("replay", "check a collapse certificate");
    replay->add_option("complex", input)->required();
    replay->add_option("certificate", second)->required();

    auto* collapse = app.add_subcommand("collapse", "collapse to a point or onto a subcomplex");
    collapse->add_option("complex", input)->required();
    collapse->add_flag("--to-point", "collapse to a point (default)");
    collapse->add_option("--onto", opt_a, "subcomplex to keep");
    collapse->add_flag("--greedy", flag_a, "random greedy restarts instead of exhaustive search");
    add_common(collapse, common);

    auto* extendable = app.add_subcommand("extendable-collapse", "does every collapse sequence end at a point");
    extendable->add_option("complex", input)->required();
    add_common(extendable, common);

    auto* shell = app.add_subcommand("shell", "shellability");
    shell->add_option("complex", input)->required();
    shell->add_flag("--extendable", flag_a, "extendable shellability");
    shell->add_flag("--to-collapse", flag_b, "also write the collapse along the reversed shelling");
    add_common(shell, common);

    auto* constructible = app.add_subcommand("constructible", "constructibility");
    constructible->add_option("complex", input)->required();
    add_common(constructible, common);

    auto* homology = app.add_subcommand("homology", "integral (or Z2) homology");
    homology->add_option("complex", input)->required();
    homology->add_flag("--z2", flag_a, "Z2 coefficients");
    homology->add_flag("--reduced", flag_b, "reduced homology");

    auto* cm = app.add_subcommand("cm", "Cohen-Macaulay test (Reisner)");
    cm->add_option("complex", input)->required();

    auto* iso = app.add_subcommand("iso", "isomorphism test");
    iso->add_option("a", input)->required();
    iso->add_option("b", second)->required();
    iso->add_option("--out", common.out, "directory for the mapping file");

    auto* contains = app.add_subcommand("contains", "subcomplex embedding");
    contains->add_option("host", input)->required();
    contains->add_option("pattern", second)->required();
    contains->add_option("--out", common.out, "directory for the mapping file");

    auto* enumerate = app.add_subcommand("enumerate", "closed 3-manifold census or 3-ball census");
    enumerate->add_option("--n", n, "number of vertices")->required();
    enumerate->add_flag("--balls", flag_a, "enumerate 3-balls instead");
    add_common(enumerate, common);

    auto* search = app.add_subcommand("search-balls", "3-balls containing a pattern");
    search->add_option("pattern", input)->required();
    search->add_option("--n", n, "number of vertices");
    search->add_option("--max-facets", max_facets, "largest number of tetrahedra");
    add_common(search, common);

    auto* tree = app.add_subcommand("tree-collapse", "dual spanning tree collapse");
    tree->add_option("complex", input)->required();
    tree->add_option("--root", opt_a, "removed facet, e.g. \"0 1 3 4\"");
    tree->add_option("--avoid", opt_b, "complex whose triangles the tree must not cross");
    tree->add_flag("--independence", flag_a, "run collapse_to_point on M - F for every facet F");
    add_common(tree, common);

    auto* realize = app.add_subcommand("realize", "random search for a convex realization");
    realize->add_option("complex", input)->required();
    realize->add_option("--trials", trials);
    add_common(realize, common);

    auto* schlegel_cmd = app.add_subcommand("schlegel", "Schlegel diagram of realized points");
    schlegel_cmd->add_option("coordinates", input)->required();
    schlegel_cmd->add_option("--base", opt_a, "base facet");
    schlegel_cmd->add_option("--pattern", opt_b, "2-complex to embed and export as OFF");
    schlegel_cmd->add_option("--digits", digits, "decimal digits in OFF output");
    add_common(schlegel_cmd, common);

    auto* corpus_cmd = app.add_subcommand("corpus", "list built-in complexes or print one");
    corpus_cmd->add_option("name", opt_a);

    auto* verify = app.add_subcommand("verify-paper", "run the acceptance criteria and write a report");
    verify->add_flag("--quick", quick, "A1-A3, A6, A9");
    verify->add_flag("--full", full, "all criteria including the long searches");
    add_common(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*info)
            return cmd_info(input);
        if (*replay)
            return cmd_replay(input, second);
        if (*collapse)
            return cmd_collapse(input, opt_a, flag_a, common);
        if (*extendable)
            return cmd_extendable(input, common);
        if (*shell)
            return cmd_shell(input, flag_a, flag_b, common);
        if (*constructible)
            return cmd_constructible(input, common);
        if (*homology)
            return cmd_homology(input, flag_a, flag_b);
        if (*cm)
            return cmd_cm(input);
        if (*iso)
            return cmd_iso(input, second, common);
        if (*contains)
            return cmd_contains(input, second, common);
        if (*enumerate)
            return cmd_enumerate(n, flag_a, common);
        if (*search)
            return cmd_search_balls(input, n, max_facets, common);
        if (*tree)
            return cmd_tree_collapse(input, opt_a, opt_b, flag_a, common);
        if (*realize)
            return cmd_realize(input, trials, common);
        if (*schlegel_cmd)
            return cmd_schlegel(input, opt_a, opt_b, digits, common);
        if (*corpus_cmd)
            return cmd_corpus(opt_a);
        if (*verify) {
            if (quick && full)
                throw UsageError("--quick and --full exclude each other");
            return cmd_verify_paper(quick ? Tier::Quick : (full ? Tier::Full : Tier::Default), common);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        // a witness failed its own check: no verdict can be claimed
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // Bad input that got past parsing: wrong labels, degenerate points, invalid trees.
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
