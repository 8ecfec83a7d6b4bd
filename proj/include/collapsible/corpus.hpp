#pragma once

#include <collapsible/collapse.hpp>
#include <collapsible/complex.hpp>
#include <collapsible/outcome.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace collapsible {

struct CorpusEntry {
    std::string name;
    SimplicialComplex complex;
    std::string note;
    std::string hash;
};

/// Thrown for unknown corpus names; the message lists what is available.
class UnknownCorpusEntry : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Built-in complexes. Fixed names: gs_32, ball_B, dunce_hat_D (canonical
 * labels), dunce_hat_D_gs32 (the same D with the labels it has inside gs_32
 * and ball_B), rp2_6. Families: simplex_N, simplex_boundary_N, cyclic_4_N
 * (boundary of the cyclic 4-polytope, 5 <= N <= 16).
 */
CorpusEntry corpus_entry(const std::string& name);
SimplicialComplex corpus(const std::string& name);
/// Fixed names plus one example per family.
std::vector<std::string> corpus_names();

/// The seven central tetrahedra removed from gs_32 to obtain ball_B.
std::vector<Face> gs_32_central_tetrahedra();
/// The ten tetrahedra filling the red solid cone of the construction.
std::vector<Face> gs_32_red_cone();

/// Facets of the cyclic 4-polytope on n vertices via Gale's evenness condition.
std::vector<Face> gale_evenness_facets(int n);

struct DunceHatDerivation {
    /// D with the labels it carries inside ball_B.
    SimplicialComplex labeled;
    /// Canonical form of `labeled`.
    SimplicialComplex canonical;
    /// Collapse of ball_B onto `labeled`.
    CollapseCertificate certificate;
    /// Qualifying cores before the red-cone tie-break.
    std::size_t qualifying_cores = 0;
    StuckCoreReport report;
};

/**
 * Finds D from scratch: exhaustive stuck cores of ball_B, filtered to pure
 * 2-dimensional cores on 8 vertices with no free faces and trivial reduced
 * integral homology lying in skeleton(gs_32, 2). Several qualify; D is the
 * one that together with triangle 012 bounds the red solid cone.
 * Throws std::runtime_error if no core qualifies within the budget.
 */
DunceHatDerivation derive_dunce_hat(Budget budget = {});

} // namespace collapsible
