#pragma once

#include <collapsible/collapse.hpp>
#include <collapsible/complex.hpp>
#include <collapsible/outcome.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace collapsible {

/// Spanning tree of the dual graph; each edge joins two facets through a ridge.
struct DualSpanningTree {
    std::vector<DualGraph::Edge> edges;

    /// The ridges labeling tree edges, sorted.
    [[nodiscard]] std::vector<Face> ridges() const;
};

/// Tree enumeration needs a pure complex whose ridges lie in at most two facets.
class TreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Calls `visit` for every spanning tree until it returns false. Returns
/// Indeterminate if the budget (one unit per search node) ran out first.
Verdict for_each_spanning_tree(const SimplicialComplex& m, const std::function<bool(const DualSpanningTree&)>& visit,
                               Budget budget = {});

struct TreeCount {
    std::uint64_t count = 0;
    Verdict completeness = Verdict::Yes;
};

TreeCount count_spanning_trees(const SimplicialComplex& m, Budget budget = {});

/// Uniform random spanning trees (Wilson's loop-erased walks), reproducible per seed.
std::vector<DualSpanningTree> sample_spanning_trees(const SimplicialComplex& m, std::size_t count, std::uint64_t seed);

/// Ridges not crossed by T, together with the codimension-2 skeleton of M.
SimplicialComplex tree_complex(const SimplicialComplex& m, const DualSpanningTree& t);

/// M with the interior of facet F removed (all proper faces of F stay).
SimplicialComplex delete_facet_open(const SimplicialComplex& m, Face f);

/// Collapse of delete_facet_open(M, F) onto tree_complex(M, T), removing
/// facets outward from F along T (lexicographically first available edge each step).
CollapseCertificate tree_directed_collapse(const SimplicialComplex& m, Face f, const DualSpanningTree& t);

struct FacetIndependenceReport {
    std::vector<Face> facets;
    std::vector<Verdict> verdicts;
    bool constant = false;
    bool has_indeterminate = false;
};

/// collapse_to_point on M - F for every facet F.
FacetIndependenceReport facet_independence_experiment(const SimplicialComplex& m, Budget budget = {});

/// A spanning tree using only ridges outside `protected_ridges`, if one exists.
std::optional<DualSpanningTree> find_tree_avoiding(const SimplicialComplex& m, std::span<const Face> protected_ridges);

} // namespace collapsible
