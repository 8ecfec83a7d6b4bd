#include <collapsible/complex.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace collapsible {

namespace {

const std::vector<Face> kNoFaces;

std::vector<Face> prune_to_maximal(std::vector<Face> faces)
{
    std::erase_if(faces, [](Face f) { return f.empty(); });
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (Face f : faces) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [f](Face g) { return f.is_subset_of(g); });
        if (!covered)
            kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
    std::vector<int> parent;
};

} // namespace

std::int64_t FVector::euler_characteristic() const
{
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        chi += (i % 2 == 0) ? counts[i] : -counts[i];
    return chi;
}

std::string FVector::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < counts.size(); ++i)
        os << (i ? "," : "") << counts[i];
    os << ')';
    return os.str();
}

bool DualGraph::is_connected() const
{
    return is_connected(std::vector<bool>(edges.size(), true));
}

bool DualGraph::is_connected(const std::vector<bool>& usable) const
{
    if (nodes.empty())
        return true;
    UnionFind uf(static_cast<int>(nodes.size()));
    int components = static_cast<int>(nodes.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (usable[i] && uf.unite(edges[i].a, edges[i].b))
            --components;
    return components == 1;
}

std::string to_string(ManifoldClass c)
{
    switch (c) {
    case ManifoldClass::Sphere2:
        return "Sphere2";
    case ManifoldClass::Ball2:
        return "Ball2";
    case ManifoldClass::Manifold3Closed:
        return "Manifold3Closed";
    case ManifoldClass::Manifold3WithBoundary:
        return "Manifold3WithBoundary";
    case ManifoldClass::Other:
        break;
    }
    return "Other";
}

SimplicialComplex SimplicialComplex::from_facets(std::span<const Face> faces)
{
    SimplicialComplex k;
    k.facets_ = prune_to_maximal(std::vector<Face>(faces.begin(), faces.end()));
    k.build_closure();
    return k;
}

SimplicialComplex SimplicialComplex::from_vertex_lists(const std::vector<std::vector<int>>& lists)
{
    std::vector<Face> faces;
    faces.reserve(lists.size());
    for (const auto& l : lists) {
        if (l.empty())
            throw std::invalid_argument("empty face in facet list");
        faces.push_back(Face::from_vertices(l));
    }
    return from_facets(faces);
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::span<const Face> faces)
{
    std::unordered_set<Face> set(faces.begin(), faces.end());
    set.erase(Face{});
    std::uint64_t all = 0;
    for (Face f : set)
        all |= f.bits();
    std::vector<Face> maximal;
    for (Face f : set) {
        bool is_max = true;
        for (std::uint64_t rest = all & ~f.bits(); rest != 0 && is_max; rest &= rest - 1)
            if (set.contains(f.with(std::countr_zero(rest))))
                is_max = false;
        if (is_max)
            maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());
    SimplicialComplex k;
    k.facets_ = std::move(maximal);
    k.build_closure();
    return k;
}

void SimplicialComplex::build_closure()
{
    index_.clear();
    by_dim_.clear();
    std::uint64_t verts = 0;
    for (Face f : facets_) {
        verts |= f.bits();
        // Enumerate all nonempty submasks.
        const std::uint64_t full = f.bits();
        for (std::uint64_t s = full; s != 0; s = (s - 1) & full)
            index_.insert(Face(s));
    }
    vertex_set_ = Face(verts);
    int top = -1;
    for (Face f : facets_)
        top = std::max(top, f.dim());
    by_dim_.resize(static_cast<std::size_t>(top + 1));
    for (Face f : index_)
        by_dim_[f.dim()].push_back(f);
    for (auto& v : by_dim_)
        std::sort(v.begin(), v.end());
}

const std::vector<Face>& SimplicialComplex::faces(int d) const
{
    if (d < 0 || d >= static_cast<int>(by_dim_.size()))
        return kNoFaces;
    return by_dim_[d];
}

std::vector<Face> SimplicialComplex::all_faces() const
{
    std::vector<Face> out;
    out.reserve(index_.size());
    for (const auto& v : by_dim_)
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::size_t SimplicialComplex::num_faces() const { return index_.size(); }

bool SimplicialComplex::is_pure() const
{
    return std::all_of(facets_.begin(), facets_.end(), [this](Face f) { return f.dim() == dim(); });
}

bool SimplicialComplex::contains(Face f) const { return index_.contains(f); }

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const
{
    return std::all_of(facets_.begin(), facets_.end(), [&](Face f) { return other.contains(f); });
}

FVector SimplicialComplex::f_vector() const
{
    FVector fv;
    for (const auto& v : by_dim_)
        fv.counts.push_back(static_cast<std::int64_t>(v.size()));
    return fv;
}

std::int64_t SimplicialComplex::euler_characteristic() const { return f_vector().euler_characteristic(); }

SimplicialComplex SimplicialComplex::link(Face f) const
{
    if (!f.empty() && !contains(f))
        throw std::invalid_argument("link: {" + f.to_string() + "} is not a face of the complex");
    std::vector<Face> parts;
    for (Face g : facets_)
        if (f.is_subset_of(g))
            parts.push_back(g.minus(f));
    return from_facets(parts);
}

SimplicialComplex SimplicialComplex::star(Face f) const
{
    if (!f.empty() && !contains(f))
        throw std::invalid_argument("star: {" + f.to_string() + "} is not a face of the complex");
    std::vector<Face> parts;
    for (Face g : facets_)
        if (f.is_subset_of(g))
            parts.push_back(g);
    return from_facets(parts);
}

int SimplicialComplex::ridge_degree(Face ridge) const
{
    int n = 0;
    for (Face g : facets_)
        if (ridge.is_subset_of(g))
            ++n;
    return n;
}

SimplicialComplex SimplicialComplex::boundary_complex() const
{
    if (!is_pure())
        throw std::invalid_argument("boundary_complex: complex is not pure");
    if (dim() < 1)
        return {};
    std::unordered_map<Face, int> degree;
    for (Face g : facets_)
        for (Face r : g.ridges())
            ++degree[r];
    std::vector<Face> boundary;
    for (auto [r, n] : degree)
        if (n == 1)
            boundary.push_back(r);
    return from_facets(boundary);
}

DualGraph SimplicialComplex::dual_graph() const
{
    DualGraph g;
    g.nodes = facets_;
    std::unordered_map<Face, std::vector<int>> by_ridge;
    for (std::size_t i = 0; i < facets_.size(); ++i)
        for (Face r : facets_[i].ridges())
            if (!r.empty())
                by_ridge[r].push_back(static_cast<int>(i));
    std::vector<Face> ridges;
    for (const auto& [r, owners] : by_ridge)
        ridges.push_back(r);
    std::sort(ridges.begin(), ridges.end());
    for (Face r : ridges) {
        const auto& owners = by_ridge[r];
        for (std::size_t i = 0; i < owners.size(); ++i)
            for (std::size_t j = i + 1; j < owners.size(); ++j)
                g.edges.push_back({owners[i], owners[j], r});
    }
    return g;
}

SimplicialComplex SimplicialComplex::skeleton(int d) const
{
    std::vector<Face> faces;
    for (int i = 0; i <= std::min(d, dim()); ++i)
        faces.insert(faces.end(), by_dim_[i].begin(), by_dim_[i].end());
    return from_closed_faces(faces);
}

SimplicialComplex SimplicialComplex::remove_facets_open(std::span<const Face> removed) const
{
    std::unordered_set<Face> gone;
    for (Face f : removed) {
        if (!std::binary_search(facets_.begin(), facets_.end(), f))
            throw std::invalid_argument("remove_facets: {" + f.to_string() + "} is not a facet");
        gone.insert(f);
    }
    std::vector<Face> faces;
    for (Face f : index_)
        if (!gone.contains(f))
            faces.push_back(f);
    return from_closed_faces(faces);
}

SimplicialComplex SimplicialComplex::remove_facets_generated(std::span<const Face> removed) const
{
    std::unordered_set<Face> gone;
    for (Face f : removed) {
        if (!std::binary_search(facets_.begin(), facets_.end(), f))
            throw std::invalid_argument("remove_facets: {" + f.to_string() + "} is not a facet");
        gone.insert(f);
    }
    std::vector<Face> rest;
    for (Face f : facets_)
        if (!gone.contains(f))
            rest.push_back(f);
    return from_facets(rest);
}

SimplicialComplex SimplicialComplex::relabel(std::span<const int> map) const
{
    std::vector<Face> out;
    out.reserve(facets_.size());
    for (Face f : facets_) {
        std::uint64_t bits = 0;
        for (int v : f.vertices()) {
            if (v >= static_cast<int>(map.size()) || map[v] < 0 || map[v] >= kMaxVertices)
                throw std::invalid_argument("relabel: vertex " + std::to_string(v) + " is unmapped");
            bits |= std::uint64_t{1} << map[v];
        }
        if (std::popcount(bits) != f.size())
            throw std::invalid_argument("relabel: map is not injective");
        out.emplace_back(bits);
    }
    return from_facets(out);
}

bool SimplicialComplex::is_connected() const
{
    if (empty())
        return true;
    UnionFind uf(kMaxVertices);
    int components = num_vertices();
    for (Face e : faces(1)) {
        const auto vs = e.vertices();
        if (uf.unite(vs[0], vs[1]))
            --components;
    }
    return components == 1;
}

SimplicialComplex simplex(int k)
{
    return SimplicialComplex::from_facets(std::vector<Face>{Face((std::uint64_t{1} << (k + 1)) - 1)});
}

SimplicialComplex simplex_boundary(int k)
{
    return SimplicialComplex::from_facets(Face((std::uint64_t{1} << (k + 1)) - 1).ridges());
}

namespace {

bool is_path_or_cycle(const SimplicialComplex& g)
{
    if (g.dim() != 1 || !g.is_pure() || !g.is_connected())
        return false;
    for (int v : g.vertex_set().vertices()) {
        int deg = 0;
        for (Face e : g.faces(1))
            deg += e.contains(v);
        if (deg > 2)
            return false;
    }
    return true;
}

ManifoldClass classify_surface(const SimplicialComplex& k)
{
    if (k.dim() != 2 || !k.is_pure() || !k.is_connected())
        return ManifoldClass::Other;
    bool closed = true;
    for (Face e : k.faces(1)) {
        const int d = k.ridge_degree(e);
        if (d > 2)
            return ManifoldClass::Other;
        closed = closed && d == 2;
    }
    for (int v : k.vertex_set().vertices())
        if (!is_path_or_cycle(k.link(Face{v})))
            return ManifoldClass::Other;
    if (closed)
        return k.euler_characteristic() == 2 ? ManifoldClass::Sphere2 : ManifoldClass::Other;
    const auto boundary = k.boundary_complex();
    if (boundary.is_connected() && k.euler_characteristic() == 1)
        return ManifoldClass::Ball2;
    return ManifoldClass::Other;
}

} // namespace

ManifoldClass classify_small_manifold(const SimplicialComplex& k)
{
    if (k.dim() == 2)
        return classify_surface(k);
    if (k.dim() != 3 || !k.is_pure() || !k.is_connected())
        return ManifoldClass::Other;
    bool closed = true;
    for (Face t : k.faces(2)) {
        const int d = k.ridge_degree(t);
        if (d > 2)
            return ManifoldClass::Other;
        closed = closed && d == 2;
    }
    for (int v : k.vertex_set().vertices()) {
        const auto c = classify_surface(k.link(Face{v}));
        if (c != ManifoldClass::Sphere2 && c != ManifoldClass::Ball2)
            return ManifoldClass::Other;
    }
    return closed ? ManifoldClass::Manifold3Closed : ManifoldClass::Manifold3WithBoundary;
}

int interval_shift(const SimplicialComplex& k)
{
    return k.empty() ? 0 : k.vertex_set().max_vertex() + 1;
}

SimplicialComplex product_with_interval(const SimplicialComplex& k, std::span<const int> order)
{
    const int shift = interval_shift(k);
    if (2 * shift > kMaxVertices)
        throw std::invalid_argument("product_with_interval: result would exceed 64 vertices");
    std::vector<int> pos(kMaxVertices, -1);
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        if (v < 0 || v >= kMaxVertices || !k.vertex_set().contains(v) || ((seen >> v) & 1U))
            throw std::invalid_argument("product_with_interval: order is not a permutation of the vertex set");
        seen |= std::uint64_t{1} << v;
        pos[v] = static_cast<int>(i);
    }
    if (seen != k.vertex_set().bits())
        throw std::invalid_argument("product_with_interval: order misses vertices");

    std::vector<Face> prisms;
    for (Face f : k.facets()) {
        auto vs = f.vertices();
        std::sort(vs.begin(), vs.end(), [&](int a, int b) { return pos[a] < pos[b]; });
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::uint64_t bits = 0;
            for (std::size_t j = 0; j <= i; ++j)
                bits |= std::uint64_t{1} << vs[j];
            for (std::size_t j = i; j < vs.size(); ++j)
                bits |= std::uint64_t{1} << (vs[j] + shift);
            prisms.emplace_back(bits);
        }
    }
    return SimplicialComplex::from_facets(prisms);
}

} // namespace collapsible
