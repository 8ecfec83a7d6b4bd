#include <collapsible/iso.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace collapsible {

Relabeling Relabeling::identity_on(Face vertices)
{
    Relabeling r;
    for (int v : vertices.vertices())
        r.set(v, v);
    return r;
}

Face Relabeling::apply(Face f) const
{
    std::uint64_t bits = 0;
    for (int v : f.vertices()) {
        if (map_[v] < 0)
            throw std::invalid_argument("relabeling leaves vertex " + std::to_string(v) + " unmapped");
        bits |= std::uint64_t{1} << map_[v];
    }
    return Face(bits);
}

Relabeling Relabeling::inverse() const
{
    Relabeling r;
    for (int v = 0; v < kMaxVertices; ++v)
        if (map_[v] >= 0)
            r.set(map_[v], v);
    return r;
}

Relabeling Relabeling::after(const Relabeling& first) const
{
    Relabeling r;
    for (int v = 0; v < kMaxVertices; ++v)
        if (first.image(v) >= 0)
            r.set(v, map_[first.image(v)]);
    return r;
}

namespace {

/**
 * Branch and bound over label assignments. Label k goes to some unlabeled
 * vertex; a facet with labeled image L and u unlabeled vertices can at best
 * become L ∪ {k, ..., k+u-1}, and the sorted list of those optimistic
 * images bounds every completion from below.
 */
class CanonicalSearch {
public:
    explicit CanonicalSearch(const SimplicialComplex& k)
    {
        vertices_ = k.vertex_set().vertices();
        if (static_cast<int>(vertices_.size()) > kMaxCanonicalVertices)
            throw std::invalid_argument("canonical_form: more than 16 vertices");
        facets_ = k.facets();
    }

    /// Minimise; returns the best list and the labels used.
    CanonicalForm run()
    {
        mode_ = Mode::Minimise;
        start();
        CanonicalForm out;
        out.facets = best_;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            out.relabeling.set(vertices_[i], best_label_[i]);
        return out;
    }

    /// Looks for a relabeling strictly below `reference`.
    bool finds_smaller_than(std::vector<Face> reference)
    {
        mode_ = Mode::BeatReference;
        best_ = std::move(reference);
        have_best_ = true;
        start();
        return found_smaller_;
    }

private:
    enum class Mode { Minimise, BeatReference };

    void start()
    {
        const std::size_t n = vertices_.size();
        image_.assign(facets_.size(), 0);
        unlabeled_.resize(facets_.size());
        for (std::size_t j = 0; j < facets_.size(); ++j)
            unlabeled_[j] = facets_[j].size();
        label_.assign(n, -1);
        if (n == 0) {
            if (mode_ == Mode::Minimise) {
                best_.clear();
                have_best_ = true;
            }
            return;
        }
        descend(0);
    }

    std::vector<Face> bound(int k) const
    {
        std::vector<Face> out(facets_.size());
        for (std::size_t j = 0; j < facets_.size(); ++j) {
            const std::uint64_t fill = ((std::uint64_t{1} << unlabeled_[j]) - 1) << k;
            out[j] = Face(image_[j] | fill);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void assign(std::size_t vi, int k)
    {
        label_[vi] = k;
        const int v = vertices_[vi];
        for (std::size_t j = 0; j < facets_.size(); ++j)
            if (facets_[j].contains(v)) {
                image_[j] |= std::uint64_t{1} << k;
                --unlabeled_[j];
            }
    }

    void unassign(std::size_t vi, int k)
    {
        label_[vi] = -1;
        const int v = vertices_[vi];
        for (std::size_t j = 0; j < facets_.size(); ++j)
            if (facets_[j].contains(v)) {
                image_[j] &= ~(std::uint64_t{1} << k);
                ++unlabeled_[j];
            }
    }

    void descend(int k)
    {
        if (found_smaller_)
            return;
        const int n = static_cast<int>(vertices_.size());
        struct Child {
            std::size_t vertex;
            std::vector<Face> lower;
        };
        std::vector<Child> children;
        for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
            if (label_[vi] >= 0)
                continue;
            assign(vi, k);
            auto lb = bound(k + 1);
            unassign(vi, k);
            if (have_best_ && !lex_less(lb, best_))
                continue;
            children.push_back({vi, std::move(lb)});
        }
        std::stable_sort(children.begin(), children.end(),
                         [](const Child& a, const Child& b) { return lex_less(a.lower, b.lower); });
        for (auto& child : children) {
            if (have_best_ && !lex_less(child.lower, best_))
                continue;
            assign(child.vertex, k);
            if (k + 1 == n) {
                // Fully labeled: the bound is exact.
                if (mode_ == Mode::BeatReference) {
                    found_smaller_ = true;
                } else {
                    best_ = child.lower;
                    have_best_ = true;
                    best_label_ = label_;
                }
            } else {
                descend(k + 1);
            }
            unassign(child.vertex, k);
            if (found_smaller_)
                return;
        }
    }

    Mode mode_ = Mode::Minimise;
    std::vector<int> vertices_;
    std::vector<Face> facets_;
    std::vector<std::uint64_t> image_;
    std::vector<int> unlabeled_;
    std::vector<int> label_;
    std::vector<Face> best_;
    std::vector<int> best_label_;
    bool have_best_ = false;
    bool found_smaller_ = false;
};

/// Backtracking over injective maps pattern -> host that keep every face a face.
class EmbeddingSearch {
public:
    EmbeddingSearch(const SimplicialComplex& host, const SimplicialComplex& pattern)
        : host_(host), pattern_(pattern)
    {
        order_vertices();
        host_profile_ = profiles(host_);
        pattern_profile_ = profiles(pattern_);
        // Faces to check once their last vertex (in search order) is placed.
        std::vector<int> position(kMaxVertices, -1);
        for (std::size_t i = 0; i < order_.size(); ++i)
            position[order_[i]] = static_cast<int>(i);
        closing_.resize(order_.size());
        for (Face f : pattern_.all_faces()) {
            if (f.size() < 2)
                continue;
            int last = -1;
            for (int v : f.vertices())
                last = std::max(last, position[v]);
            closing_[last].push_back(f);
        }
    }

    void run(std::size_t limit, const std::function<void(const Relabeling&)>& emit)
    {
        limit_ = limit;
        emit_ = emit;
        if (pattern_.num_vertices() > host_.num_vertices())
            return;
        descend(0);
    }

private:
    using Profile = std::vector<std::int64_t>;

    static std::vector<Profile> profiles(const SimplicialComplex& k)
    {
        std::vector<Profile> out(kMaxVertices);
        for (int v : k.vertex_set().vertices()) {
            Profile p(static_cast<std::size_t>(k.dim() + 1), 0);
            for (int d = 1; d <= k.dim(); ++d)
                for (Face f : k.faces(d))
                    p[d] += f.contains(v);
            out[v] = std::move(p);
        }
        return out;
    }

    static bool dominated(const Profile& small, const Profile& big)
    {
        for (std::size_t d = 0; d < small.size(); ++d) {
            const std::int64_t have = d < big.size() ? big[d] : 0;
            if (small[d] > have)
                return false;
        }
        return true;
    }

    void order_vertices()
    {
        const auto verts = pattern_.vertex_set().vertices();
        std::vector<int> degree(kMaxVertices, 0);
        for (Face e : pattern_.faces(1))
            for (int v : e.vertices())
                ++degree[v];
        std::uint64_t placed = 0;
        while (order_.size() < verts.size()) {
            int pick = -1;
            int best_links = -1;
            for (int v : verts) {
                if ((placed >> v) & 1U)
                    continue;
                int links = 0;
                for (Face e : pattern_.faces(1))
                    if (e.contains(v) && (e.without(v).bits() & placed))
                        ++links;
                if (pick < 0 || links > best_links || (links == best_links && degree[v] > degree[pick])) {
                    pick = v;
                    best_links = links;
                }
            }
            order_.push_back(pick);
            placed |= std::uint64_t{1} << pick;
        }
    }

    void descend(std::size_t i)
    {
        if (found_ >= limit_)
            return;
        if (i == order_.size()) {
            ++found_;
            emit_(map_);
            return;
        }
        const int p = order_[i];
        // Same id first (so a complex embeds into itself by the identity), then ascending.
        std::vector<int> candidates = host_.vertex_set().vertices();
        if (auto it = std::find(candidates.begin(), candidates.end(), p); it != candidates.end())
            std::rotate(candidates.begin(), it, it + 1);
        for (int h : candidates) {
            if ((used_ >> h) & 1U)
                continue;
            if (!dominated(pattern_profile_[p], host_profile_[h]))
                continue;
            map_.set(p, h);
            bool ok = true;
            for (Face f : closing_[i])
                if (!host_.contains(map_.apply(f))) {
                    ok = false;
                    break;
                }
            if (ok) {
                used_ |= std::uint64_t{1} << h;
                descend(i + 1);
                used_ &= ~(std::uint64_t{1} << h);
            }
            map_.set(p, -1);
            if (found_ >= limit_)
                return;
        }
    }

    const SimplicialComplex& host_;
    const SimplicialComplex& pattern_;
    std::vector<int> order_;
    std::vector<std::vector<Face>> closing_;
    std::vector<Profile> host_profile_;
    std::vector<Profile> pattern_profile_;
    Relabeling map_;
    std::uint64_t used_ = 0;
    std::size_t found_ = 0;
    std::size_t limit_ = 0;
    std::function<void(const Relabeling&)> emit_;
};

} // namespace

CanonicalForm canonical_form(const SimplicialComplex& k)
{
    return CanonicalSearch(k).run();
}

bool is_canonical(const SimplicialComplex& k)
{
    const int n = k.num_vertices();
    if (n > kMaxCanonicalVertices)
        throw std::invalid_argument("is_canonical: more than 16 vertices");
    if (k.vertex_set().bits() != (std::uint64_t{1} << n) - 1)
        return false;
    return !CanonicalSearch(k).finds_smaller_than(k.facets());
}

std::optional<Relabeling> are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (a.f_vector() != b.f_vector())
        return std::nullopt;
    const auto ca = canonical_form(a);
    const auto cb = canonical_form(b);
    if (ca.facets != cb.facets)
        return std::nullopt;
    return cb.relabeling.inverse().after(ca.relabeling);
}

std::vector<Relabeling> all_embeddings(const SimplicialComplex& host, const SimplicialComplex& pattern,
                                       std::size_t limit)
{
    std::vector<Relabeling> out;
    EmbeddingSearch(host, pattern).run(limit, [&](const Relabeling& r) { out.push_back(r); });
    return out;
}

std::optional<Relabeling> contains_subcomplex(const SimplicialComplex& host, const SimplicialComplex& pattern)
{
    auto found = all_embeddings(host, pattern, 1);
    if (found.empty())
        return std::nullopt;
    return found.front();
}

std::vector<Relabeling> automorphisms(const SimplicialComplex& k)
{
    if (k.num_vertices() > kMaxCanonicalVertices)
        throw std::invalid_argument("automorphisms: more than 16 vertices");
    auto all = all_embeddings(k, k);
    const auto id = Relabeling::identity_on(k.vertex_set());
    auto it = std::find(all.begin(), all.end(), id);
    if (it != all.end())
        std::rotate(all.begin(), it, it + 1);
    return all;
}

} // namespace collapsible
