#pragma once

#include <collapsible/face.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace collapsible {

/// Face counts f_0, f_1, ... of a complex.
struct FVector {
    std::vector<std::int64_t> counts;

    [[nodiscard]] std::int64_t euler_characteristic() const;
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// Facets as nodes, one edge per pair of facets sharing a ridge.
struct DualGraph {
    struct Edge {
        int a = 0;
        int b = 0;
        Face ridge;
    };

    std::vector<Face> nodes;
    std::vector<Edge> edges;

    [[nodiscard]] bool is_connected() const;
    /// Connectivity when only edges with `usable[i]` are kept.
    [[nodiscard]] bool is_connected(const std::vector<bool>& usable) const;
};

enum class ManifoldClass {
    Sphere2,
    Ball2,
    Manifold3Closed,
    Manifold3WithBoundary,
    Other,
};

std::string to_string(ManifoldClass c);

/**
 * Immutable finite simplicial complex on vertices 0..63.
 *
 * Defined by its inclusion-maximal faces; the full face lattice is computed
 * eagerly on construction. The empty complex (no faces at all) is a valid
 * value and has dimension -1.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Non-maximal and repeated faces are pruned.
    static SimplicialComplex from_facets(std::span<const Face> faces);
    /// Validating constructor for raw vertex lists; rejects duplicates, negatives and ids >= 64.
    static SimplicialComplex from_vertex_lists(const std::vector<std::vector<int>>& lists);
    /// Build from an arbitrary face family that is already closed under subsets.
    static SimplicialComplex from_closed_faces(std::span<const Face> faces);

    [[nodiscard]] const std::vector<Face>& facets() const { return facets_; }
    /// Faces of dimension d, lexicographically sorted. Empty for out-of-range d.
    [[nodiscard]] const std::vector<Face>& faces(int d) const;
    /// Every face, by ascending dimension.
    [[nodiscard]] std::vector<Face> all_faces() const;
    [[nodiscard]] std::size_t num_faces() const;

    [[nodiscard]] int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    [[nodiscard]] bool empty() const { return facets_.empty(); }
    [[nodiscard]] bool is_pure() const;
    [[nodiscard]] Face vertex_set() const { return vertex_set_; }
    [[nodiscard]] int num_vertices() const { return vertex_set_.size(); }
    [[nodiscard]] bool contains(Face f) const;
    [[nodiscard]] bool is_subcomplex_of(const SimplicialComplex& other) const;

    [[nodiscard]] FVector f_vector() const;
    [[nodiscard]] std::int64_t euler_characteristic() const;

    /// Faces g with g ∩ f = ∅ and g ∪ f ∈ K. Throws if f is not a face.
    [[nodiscard]] SimplicialComplex link(Face f) const;
    /// Closure of the facets containing f. Throws if f is not a face.
    [[nodiscard]] SimplicialComplex star(Face f) const;
    /// Closure of ridges in exactly one facet. Throws on non-pure input.
    [[nodiscard]] SimplicialComplex boundary_complex() const;
    [[nodiscard]] DualGraph dual_graph() const;
    [[nodiscard]] SimplicialComplex skeleton(int d) const;

    /// Number of facets containing each face of dimension dim()-1.
    [[nodiscard]] int ridge_degree(Face ridge) const;

    /// Delete the given facets as open cells; every proper face stays.
    [[nodiscard]] SimplicialComplex remove_facets_open(std::span<const Face> removed) const;
    /// Keep only the closure of the remaining facets.
    [[nodiscard]] SimplicialComplex remove_facets_generated(std::span<const Face> removed) const;

    /// Apply an injective vertex map given as map[old] = new (-1 = unmapped, which is an error).
    [[nodiscard]] SimplicialComplex relabel(std::span<const int> map) const;

    [[nodiscard]] bool is_connected() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.facets_ == b.facets_;
    }

private:
    void build_closure();

    std::vector<Face> facets_;
    std::vector<std::vector<Face>> by_dim_;
    std::unordered_set<Face> index_;
    Face vertex_set_;
};

/// The full simplex on vertices 0..k.
SimplicialComplex simplex(int k);
/// The boundary of the simplex on vertices 0..k.
SimplicialComplex simplex_boundary(int k);

/// Recognition of 2- and 3-manifolds (with or without boundary) by vertex links.
ManifoldClass classify_small_manifold(const SimplicialComplex& k);

/**
 * Staircase triangulation of K x I.
 *
 * `order` lists every vertex of K exactly once. Vertex v becomes (v, 0) = v
 * and (v, 1) = v + shift, where shift is one more than the largest vertex
 * of K. Throws std::invalid_argument if the order is not a permutation of
 * the vertex set or the result would exceed 64 vertices.
 */
SimplicialComplex product_with_interval(const SimplicialComplex& k, std::span<const int> order);

/// The vertex shift used by product_with_interval for K.
int interval_shift(const SimplicialComplex& k);

} // namespace collapsible
