#pragma once

#include <collapsible/collapse.hpp>
#include <collapsible/complex.hpp>
#include <collapsible/outcome.hpp>

#include <optional>
#include <vector>

namespace collapsible {

using ShellingOrder = std::vector<Face>;

struct ShellingOutcome {
    Verdict verdict = Verdict::Indeterminate;
    /// Yes: a complete shelling. No from the extendability test: a partial
    /// shelling that cannot be continued.
    std::optional<ShellingOrder> order;
    SearchStats stats;
};

/**
 * Index of the first facet that violates the shelling condition, or nullopt
 * for a valid shelling. Checked directly on complexes: each facet after the
 * first must meet the union of its predecessors in a nonempty pure
 * (d-1)-dimensional complex. An order that is not a permutation of the
 * facets fails at the first offending index.
 */
std::optional<std::size_t> check_shelling(const SimplicialComplex& k, const ShellingOrder& order);

/// Memoised on the set of used facets. Throws std::invalid_argument for
/// non-pure input or more than 64 facets.
ShellingOutcome is_shellable(const SimplicialComplex& k, Budget budget = {});

/// Yes iff every partial shelling extends to a complete one.
ShellingOutcome is_extendably_shellable(const SimplicialComplex& k, Budget budget = {});

struct ShellingCollapse {
    /// K itself, or K minus the last facet when that facet closes a sphere.
    SimplicialComplex start;
    CollapseCertificate certificate;
};

/**
 * Collapse along the reverse of a shelling order. Each facet is paired with
 * a free ridge, then the rest of its new faces go in decreasing dimension
 * (lexicographic within a dimension). Only the last facet may have its
 * whole boundary in the earlier ones; it is then removed as an open cell.
 * Throws std::invalid_argument for an invalid order, naming the index.
 */
ShellingCollapse shelling_to_collapse(const SimplicialComplex& k, const ShellingOrder& order);

struct ConstructibleOutcome {
    Verdict verdict = Verdict::Indeterminate;
    SearchStats stats;
};

/// Decided over facet bipartitions into two strongly connected parts,
/// memoised on facet subsets. Throws std::invalid_argument for non-pure
/// input or more than 64 facets.
ConstructibleOutcome is_constructible(const SimplicialComplex& k, Budget budget = {});

} // namespace collapsible
