#pragma once

#include <collapsible/complex.hpp>
#include <collapsible/outcome.hpp>

#include <functional>
#include <string>
#include <vector>

namespace collapsible {

struct CensusRecord {
    /// Canonical facet list.
    SimplicialComplex complex;
    FVector f_vector;
    bool closed_manifold = false;
    std::string hash;
};

struct CensusResult {
    /// Sorted by (facet count, canonical facet list).
    std::vector<CensusRecord> records;
    /// Indeterminate when the budget ran out (records are then partial).
    Verdict completeness = Verdict::Yes;
    SearchStats stats;
};

/**
 * Closed triangulated 3-manifolds using exactly n vertices, one per
 * isomorphism class (5 <= n <= 8).
 *
 * Generation starts from 0123 and 0124 (every class has such a labeling)
 * and repeatedly closes the lexicographically smallest triangle that lies in
 * only one tetrahedron, so each labeled complex is reached once. Edge links
 * must stay a single path or cycle. Leaves are kept when all n vertices
 * occur, every vertex link is a 2-sphere and the facet list is canonical.
 */
CensusResult enumerate_closed_3manifolds(int n, Budget budget = {});

/// Records containing `pattern` as a subcomplex up to relabeling.
std::vector<CensusRecord> census_containment(const std::vector<CensusRecord>& census,
                                             const SimplicialComplex& pattern);

struct BallSearchResult {
    /// Canonical facet lists of the balls found, sorted.
    std::vector<SimplicialComplex> balls;
    /// Candidates that are manifolds with 2-sphere boundary but got no
    /// shelling or collapse certificate within budget (never dropped silently).
    std::vector<SimplicialComplex> uncertified;
    Verdict completeness = Verdict::Yes;
    SearchStats stats;
};

/**
 * 3-balls on vertices 0..n-1 with at most max_facets tetrahedra that contain
 * `pattern` with its own labels. The pattern must use all n vertices, so
 * every ball containing a copy of it is found in some labeling.
 *
 * Balls are grown one tetrahedron at a time from a tetrahedron on the
 * pattern's first triangle. Each step takes the most constrained triangle
 * that lies in one tetrahedron and either declares it a boundary triangle
 * or glues a tetrahedron onto it.
 */
BallSearchResult search_balls_containing(const SimplicialComplex& pattern, int n, int max_facets,
                                         Budget budget = {});

/// All 3-balls with exactly n vertices, one per isomorphism class (stretch).
BallSearchResult enumerate_balls(int n, Budget budget = {});

/// One facet file per record plus index.txt ("hash f-vector flags" per line).
void write_census(const std::string& dir, const std::vector<CensusRecord>& records);

} // namespace collapsible
