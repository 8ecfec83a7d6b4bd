#pragma once

#include <collapsible/complex.hpp>

#include <optional>
#include <vector>

namespace collapsible {

/// Injective partial vertex map; image(v) == -1 means v is unmapped.
class Relabeling {
public:
    Relabeling() : map_(kMaxVertices, -1) {}
    static Relabeling identity_on(Face vertices);

    void set(int from, int to) { map_[from] = to; }
    [[nodiscard]] int image(int v) const { return map_[v]; }
    [[nodiscard]] Face apply(Face f) const;
    [[nodiscard]] SimplicialComplex apply(const SimplicialComplex& k) const { return k.relabel(map_); }
    [[nodiscard]] Relabeling inverse() const;
    /// (this ∘ first)(v) = this(first(v)).
    [[nodiscard]] Relabeling after(const Relabeling& first) const;
    [[nodiscard]] const std::vector<int>& map() const { return map_; }

    friend bool operator==(const Relabeling&, const Relabeling&) = default;

private:
    std::vector<int> map_;
};

struct CanonicalForm {
    /// Lexicographically minimal sorted facet list over all relabelings onto 0..n-1.
    std::vector<Face> facets;
    /// Maps the input's vertices to the canonical labels.
    Relabeling relabeling;
};

inline constexpr int kMaxCanonicalVertices = 16;

/// Throws std::invalid_argument above 16 vertices.
CanonicalForm canonical_form(const SimplicialComplex& k);

/// True iff the facet list of k already equals its canonical form.
/// Cheaper than canonical_form: stops at the first strictly smaller relabeling.
bool is_canonical(const SimplicialComplex& k);

/// Some relabeling mapping a onto b, if the complexes are isomorphic.
std::optional<Relabeling> are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// Injective vertex map under which every face of `pattern` is a face of `host`.
std::optional<Relabeling> contains_subcomplex(const SimplicialComplex& host, const SimplicialComplex& pattern);

/// Every embedding of `pattern` into `host`, up to `limit` of them.
std::vector<Relabeling> all_embeddings(const SimplicialComplex& host, const SimplicialComplex& pattern,
                                       std::size_t limit = SIZE_MAX);

/// The full automorphism group as vertex bijections (identity first).
std::vector<Relabeling> automorphisms(const SimplicialComplex& k);

} // namespace collapsible
