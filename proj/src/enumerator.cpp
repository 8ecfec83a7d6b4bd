#include <collapsible/collapse.hpp>
#include <collapsible/enumerator.hpp>
#include <collapsible/formats.hpp>
#include <collapsible/iso.hpp>
#include <collapsible/shelling.hpp>

#include <algorithm>
#include <functional>
#include <array>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <set>
#include <stdexcept>

namespace collapsible {

namespace {

/// Tetrahedra on vertices 0..n-1 with triangle multiplicities, indexed by bitmask.
class TetSet {
public:
    explicit TetSet(int n) : n_(n), tri_(std::size_t{1} << n, 0), has_(std::size_t{1} << n, 0) {}

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<Face>& tets() const { return tets_; }
    [[nodiscard]] int mult(Face tri) const { return tri_[tri.bits()]; }
    [[nodiscard]] bool has(Face tet) const { return has_[tet.bits()] != 0; }

    [[nodiscard]] bool can_add(Face tet) const
    {
        if (has(tet))
            return false;
        for (Face t : tet.ridges())
            if (tri_[t.bits()] >= 2)
                return false;
        return true;
    }

    void add(Face tet)
    {
        tets_.push_back(tet);
        has_[tet.bits()] = 1;
        for (Face t : tet.ridges())
            ++tri_[t.bits()];
    }

    void pop()
    {
        const Face tet = tets_.back();
        tets_.pop_back();
        has_[tet.bits()] = 0;
        for (Face t : tet.ridges())
            --tri_[t.bits()];
    }

    /// Components of the link graph of an edge: each is a path or a cycle.
    struct LinkShape {
        int components = 0;
        int cycles = 0;
        /// Endpoints of paths (vertices w with edge+w in one tetrahedron).
        std::vector<int> ends;
    };

    [[nodiscard]] LinkShape edge_link(Face edge) const
    {
        LinkShape out;
        std::array<int, 64> parent{};
        std::array<int, 64> degree{};
        std::uint64_t verts = 0;
        std::iota(parent.begin(), parent.begin() + n_, 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        int link_edges = 0;
        for (Face t : tets_) {
            if (!edge.is_subset_of(t))
                continue;
            const Face opp = t.minus(edge);
            const int a = opp.min_vertex();
            const int b = opp.max_vertex();
            verts |= opp.bits();
            ++degree[a];
            ++degree[b];
            parent[find(a)] = find(b);
            ++link_edges;
        }
        if (link_edges == 0)
            return out;
        // Per component: vertex count versus edge count tells path from cycle.
        std::array<int, 64> cv{};
        std::array<int, 64> ce{};
        for (int v = 0; v < n_; ++v)
            if ((verts >> v) & 1U) {
                ++cv[find(v)];
                ce[find(v)] += degree[v];
                if (degree[v] == 1)
                    out.ends.push_back(v);
            }
        for (int v = 0; v < n_; ++v)
            if (cv[v] > 0) {
                ++out.components;
                if (ce[v] / 2 == cv[v])
                    ++out.cycles;
            }
        return out;
    }

    [[nodiscard]] Face used_vertices() const
    {
        Face v;
        for (Face t : tets_)
            v = v | t;
        return v;
    }

    [[nodiscard]] SimplicialComplex complex() const { return SimplicialComplex::from_facets(tets_); }

private:
    int n_;
    std::vector<Face> tets_;
    std::vector<std::uint8_t> tri_;
    std::vector<std::uint8_t> has_;
};

bool all_vertex_links_spheres(const SimplicialComplex& k)
{
    for (int v : k.vertex_set().vertices()) {
        const auto link = k.link(Face{v});
        if (!link.is_connected() || link.euler_characteristic() != 2)
            return false;
    }
    return true;
}

bool charge(SearchStats& stats, const Budget& budget, bool& out)
{
    if (stats.nodes_expanded >= budget.nodes) {
        out = true;
        return false;
    }
    ++stats.nodes_expanded;
    return true;
}

CensusRecord make_record(const SimplicialComplex& canonical, bool closed)
{
    return {canonical, canonical.f_vector(), closed, content_hash(canonical)};
}

void sort_records(std::vector<CensusRecord>& r)
{
    std::sort(r.begin(), r.end(), [](const CensusRecord& a, const CensusRecord& b) {
        if (a.complex.facets().size() != b.complex.facets().size())
            return a.complex.facets().size() < b.complex.facets().size();
        return lex_less(a.complex.facets(), b.complex.facets());
    });
}

} // namespace

CensusResult enumerate_closed_3manifolds(int n, Budget budget)
{
    if (n < 5 || n > 8)
        throw std::invalid_argument("enumerate_closed_3manifolds: need 5 <= n <= 8");
    CensusResult out;
    TetSet ts(n);
    bool exhausted = false;
    const Face all = Face((std::uint64_t{1} << n) - 1);

    std::function<void()> rec = [&]() {
        if (exhausted || !charge(out.stats, budget, exhausted))
            return;
        std::optional<Face> open;
        for (Face t : ts.tets())
            for (Face tri : t.ridges())
                if (ts.mult(tri) == 1 && (!open || tri < *open))
                    open = tri;
        if (!open) {
            if (ts.used_vertices() != all)
                return;
            const auto k = ts.complex();
            if (all_vertex_links_spheres(k) && is_canonical(k))
                out.records.push_back(make_record(k, true));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (open->contains(v))
                continue;
            const Face tet = open->with(v);
            if (!ts.can_add(tet))
                continue;
            ts.add(tet);
            bool ok = true;
            for (Face e : tet.subfaces(2)) {
                const auto shape = ts.edge_link(e);
                if (shape.components > 1 && shape.cycles > 0) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                rec();
            ts.pop();
        }
    };
    ts.add(Face{0, 1, 2, 3});
    ts.add(Face{0, 1, 2, 4});
    rec();
    sort_records(out.records);
    out.completeness = exhausted ? Verdict::Indeterminate : Verdict::Yes;
    return out;
}

std::vector<CensusRecord> census_containment(const std::vector<CensusRecord>& census, const SimplicialComplex& pattern)
{
    std::vector<CensusRecord> out;
    for (const auto& r : census)
        if (pattern.num_vertices() <= r.complex.num_vertices() && contains_subcomplex(r.complex, pattern))
            out.push_back(r);
    return out;
}

namespace {

/// Growth of 3-balls by boundary-or-glue decisions on open triangles.
class BallGrower {
public:
    BallGrower(int n, int max_facets, Budget budget, BallSearchResult& out)
        : ts_(n), n_(n), max_facets_(max_facets), budget_(budget), out_(out),
          boundary_(std::size_t{1} << n, 0), forbidden_(std::size_t{1} << n, 0),
          pattern_mask_(std::size_t{1} << n, 0), all_tets_(simplex(n - 1).faces(3))
    {
    }

    void set_pattern(const SimplicialComplex& p)
    {
        pattern = &p;
        for (Face f : p.facets())
            if (f.dim() == 2) {
                pattern_triangles.push_back(f);
                pattern_mask_[f.bits()] = 1;
            }
    }

    std::vector<Face> pattern_triangles;
    const SimplicialComplex* pattern = nullptr;
    bool require_canonical = false;

    void forbid(Face tet) { forbidden_[tet.bits()] = 1; }
    void allow(Face tet) { forbidden_[tet.bits()] = 0; }

    void run(Face start)
    {
        ts_.add(start);
        rec();
        ts_.pop();
    }

    [[nodiscard]] bool exhausted() const { return exhausted_; }

private:
    [[nodiscard]] bool valid_glue(Face tet) const
    {
        if (forbidden_[tet.bits()] || !ts_.can_add(tet))
            return false;
        for (Face t : tet.ridges())
            if (boundary_[t.bits()])
                return false;
        return true;
    }

    /// An edge link may have several paths while growing, but a finished
    /// component (a cycle, or a path ending in boundary triangles) must be all of it.
    [[nodiscard]] bool edge_ok(Face e) const
    {
        const auto shape = ts_.edge_link(e);
        if (shape.components <= 1)
            return true;
        return shape.cycles == 0 && !closed_path_exists(e, shape);
    }

    [[nodiscard]] bool closed_path_exists(Face e, const TetSet::LinkShape& shape) const
    {
        // Pair up ends by walking each path from one end.
        std::vector<std::pair<int, int>> link_edges;
        for (Face t : ts_.tets())
            if (e.is_subset_of(t)) {
                const Face opp = t.minus(e);
                link_edges.emplace_back(opp.min_vertex(), opp.max_vertex());
            }
        std::vector<char> done(64, 0);
        for (int start : shape.ends) {
            if (done[start])
                continue;
            int prev = -1;
            int cur = start;
            while (true) {
                int next = -1;
                for (auto [a, b] : link_edges) {
                    const int other = a == cur ? b : (b == cur ? a : -1);
                    if (other >= 0 && other != prev) {
                        next = other;
                        break;
                    }
                }
                if (next < 0)
                    break;
                prev = cur;
                cur = next;
                if (std::find(shape.ends.begin(), shape.ends.end(), cur) != shape.ends.end())
                    break;
            }
            done[start] = done[cur] = 1;
            if (boundary_[e.with(start).bits()] && boundary_[e.with(cur).bits()])
                return true;
        }
        return false;
    }

    /// The `room` best addable tetrahedra must be able to cover every
    /// uncovered pattern triangle, and each of those needs some addable tetrahedron.
    [[nodiscard]] bool coverable(int room) const
    {
        if (pattern_triangles.empty())
            return true;
        std::vector<int> counts;
        int missing = 0;
        for (Face tri : pattern_triangles) {
            if (ts_.mult(tri) > 0)
                continue;
            ++missing;
            bool any = false;
            for (int v = 0; v < n_ && !any; ++v)
                any = !tri.contains(v) && valid_glue(tri.with(v));
            if (!any)
                return false;
        }
        if (missing == 0)
            return true;
        if (room <= 0)
            return false;
        for (Face tet : all_tets_) {
            if (!valid_glue(tet))
                continue;
            int c = 0;
            for (Face tri : tet.ridges())
                c += pattern_mask_[tri.bits()] && ts_.mult(tri) == 0 ? 1 : 0;
            if (c > 0)
                counts.push_back(c);
        }
        const auto take = std::min<std::size_t>(counts.size(), static_cast<std::size_t>(room));
        std::partial_sort(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(take), counts.end(),
                          std::greater<>());
        return std::accumulate(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(take), 0) >= missing;
    }

    [[nodiscard]] int uncovered() const
    {
        int u = 0;
        for (Face t : pattern_triangles)
            u += ts_.mult(t) == 0 ? 1 : 0;
        return u;
    }

    void rec()
    {
        if (exhausted_ || !charge(out_.stats, budget_, exhausted_))
            return;
        const int room = max_facets_ - static_cast<int>(ts_.tets().size());
        if (!coverable(room))
            return;

        // Most constrained undecided open triangle.
        std::optional<Face> pick;
        std::vector<Face> pick_glues;
        for (Face t : ts_.tets())
            for (Face tri : t.ridges()) {
                if (ts_.mult(tri) != 1 || boundary_[tri.bits()])
                    continue;
                std::vector<Face> glues;
                if (room > 0)
                    for (int v = 0; v < n_; ++v)
                        if (!tri.contains(v) && valid_glue(tri.with(v)))
                            glues.push_back(tri.with(v));
                if (!pick || glues.size() < pick_glues.size() ||
                    (glues.size() == pick_glues.size() && tri < *pick)) {
                    pick = tri;
                    pick_glues = std::move(glues);
                }
            }
        // An uncovered pattern triangle with fewer choices is branched on
        // directly: option i forbids options before it, so subtrees are disjoint.
        std::optional<Face> need;
        std::vector<Face> need_tets;
        if (room > 0)
            for (Face tri : pattern_triangles) {
                if (ts_.mult(tri) > 0)
                    continue;
                std::vector<Face> tets;
                for (int v = 0; v < n_; ++v)
                    if (!tri.contains(v) && valid_glue(tri.with(v)))
                        tets.push_back(tri.with(v));
                if (!need || tets.size() < need_tets.size()) {
                    need = tri;
                    need_tets = std::move(tets);
                }
            }
        if (need && (!pick || need_tets.size() < pick_glues.size() + 1)) {
            for (std::size_t i = 0; i < need_tets.size() && !exhausted_; ++i) {
                const Face tet = need_tets[i];
                ts_.add(tet);
                const auto edges = tet.subfaces(2);
                if (std::all_of(edges.begin(), edges.end(), [&](Face e) { return edge_ok(e); }))
                    rec();
                ts_.pop();
                forbid(tet);
            }
            for (Face tet : need_tets)
                allow(tet);
            return;
        }
        if (!pick) {
            leaf();
            return;
        }
        const Face tri = *pick;
        // Boundary option.
        boundary_[tri.bits()] = 1;
        const auto sides = tri.ridges();
        if (std::all_of(sides.begin(), sides.end(), [&](Face e) { return edge_ok(e); }))
            rec();
        boundary_[tri.bits()] = 0;
        for (Face tet : pick_glues) {
            if (exhausted_)
                return;
            ts_.add(tet);
            const auto edges = tet.subfaces(2);
            if (std::all_of(edges.begin(), edges.end(), [&](Face e) { return edge_ok(e); }))
                rec();
            ts_.pop();
        }
    }

    void leaf()
    {
        if (uncovered() > 0 || ts_.used_vertices() != Face((std::uint64_t{1} << n_) - 1))
            return;
        const auto k = ts_.complex();
        if (require_canonical && !is_canonical(k))
            return;
        if (pattern && !pattern->is_subcomplex_of(k))
            return;
        if (classify_small_manifold(k) != ManifoldClass::Manifold3WithBoundary)
            return;
        if (classify_small_manifold(k.boundary_complex()) != ManifoldClass::Sphere2)
            return;
        const auto canonical = require_canonical ? k : SimplicialComplex::from_facets(canonical_form(k).facets);
        if (!seen_.insert(canonical.facets()).second)
            return;
        Budget small;
        small.nodes = 1'000'000;
        if (is_shellable(k, small).verdict == Verdict::Yes ||
            collapse_to_point(k, Strategy::ExhaustiveMemoized, 0, small).verdict == Verdict::Yes)
            out_.balls.push_back(canonical);
        else
            out_.uncertified.push_back(canonical);
    }

    TetSet ts_;
    int n_;
    int max_facets_;
    Budget budget_;
    BallSearchResult& out_;
    std::vector<std::uint8_t> boundary_;
    std::vector<std::uint8_t> forbidden_;
    std::vector<std::uint8_t> pattern_mask_;
    std::vector<Face> all_tets_;
    std::set<std::vector<Face>> seen_;
    bool exhausted_ = false;
};

void finish(BallSearchResult& out, bool exhausted)
{
    auto by_list = [](const SimplicialComplex& a, const SimplicialComplex& b) {
        if (a.facets().size() != b.facets().size())
            return a.facets().size() < b.facets().size();
        return lex_less(a.facets(), b.facets());
    };
    std::sort(out.balls.begin(), out.balls.end(), by_list);
    std::sort(out.uncertified.begin(), out.uncertified.end(), by_list);
    out.completeness = exhausted ? Verdict::Indeterminate : Verdict::Yes;
}

} // namespace

BallSearchResult search_balls_containing(const SimplicialComplex& pattern, int n, int max_facets, Budget budget)
{
    if (n < 4 || n > 16)
        throw std::invalid_argument("search_balls_containing: need 4 <= n <= 16");
    if (pattern.empty() || pattern.vertex_set() != Face((std::uint64_t{1} << n) - 1))
        throw std::invalid_argument("search_balls_containing: pattern must use exactly the vertices 0..n-1");
    if (pattern.dim() > 3)
        throw std::invalid_argument("search_balls_containing: pattern has dimension > 3");
    BallSearchResult out;
    if (max_facets < 1) {
        finish(out, false);
        return out;
    }
    BallGrower grower(n, max_facets, budget, out);
    grower.set_pattern(pattern);

    // Seed: the smallest tetrahedron on the first pattern face (any pattern
    // face lies in some tetrahedron of the ball).
    const Face first = pattern.facets().front();
    std::vector<Face> seeds;
    if (first.dim() == 3) {
        seeds.push_back(first);
    } else {
        for (Face tet : simplex(n - 1).faces(3))
            if (first.is_subset_of(tet))
                seeds.push_back(tet);
    }
    for (std::size_t i = 0; i < seeds.size() && !grower.exhausted(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            grower.forbid(seeds[j]);
        grower.run(seeds[i]);
        for (std::size_t j = 0; j < i; ++j)
            grower.allow(seeds[j]);
    }
    finish(out, grower.exhausted());
    return out;
}

BallSearchResult enumerate_balls(int n, Budget budget)
{
    if (n < 4 || n > 8)
        throw std::invalid_argument("enumerate_balls: need 4 <= n <= 8");
    BallSearchResult out;
    BallGrower grower(n, n * (n - 1) * (n - 2) * (n - 3) / 24, budget, out);
    grower.require_canonical = true;
    grower.run(Face{0, 1, 2, 3});
    finish(out, grower.exhausted());
    return out;
}

void write_census(const std::string& dir, const std::vector<CensusRecord>& records)
{
    std::filesystem::create_directories(dir);
    std::string index;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        char name[32];
        std::snprintf(name, sizeof name, "%03zu.txt", i + 1);
        write_file((std::filesystem::path(dir) / name).string(), serialize_facet_list(r.complex));
        index += r.hash + " " + r.f_vector.to_string() + " " + (r.closed_manifold ? "closed" : "-") + " " + name + "\n";
    }
    write_file((std::filesystem::path(dir) / "index.txt").string(), index);
}

} // namespace collapsible
