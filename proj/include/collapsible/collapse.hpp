#pragma once

#include <collapsible/complex.hpp>
#include <collapsible/outcome.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace collapsible {

/// Removal of `free_face` together with its unique proper coface.
struct CollapseStep {
    Face free_face;
    Face coface;

    friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

struct CollapseCertificate {
    std::vector<CollapseStep> steps;

    [[nodiscard]] std::size_t size() const { return steps.size(); }
    [[nodiscard]] bool empty() const { return steps.empty(); }
    friend bool operator==(const CollapseCertificate&, const CollapseCertificate&) = default;
};

/// Raised by elementary_collapse and normalize_certificate on an invalid step.
class CollapseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Strategy { ExhaustiveMemoized, GreedyRandomRestarts };

struct CollapseOutcome {
    Verdict verdict = Verdict::Indeterminate;
    /// Yes: collapse sequence reaching the goal. No from the extendability
    /// test: sequence reaching `end`, a stuck complex that is not a point.
    std::optional<CollapseCertificate> certificate;
    std::optional<SimplicialComplex> end;
    SearchStats stats;
};

/// Every free face paired with its unique coface, sorted by free face.
std::vector<CollapseStep> free_faces(const SimplicialComplex& k);

/// Throws CollapseError naming the violated condition.
SimplicialComplex elementary_collapse(const SimplicialComplex& k, const CollapseStep& step);

/**
 * Decide collapsibility.
 *
 * The exhaustive strategy explores collapse sequences that remove
 * top-dimensional pairs first (every collapse can be rearranged that way
 * without changing its endpoint), memoised on the set of remaining faces.
 * Once a state is at most 2-dimensional one greedy run settles it, since
 * greedy collapsing decides collapsibility there. The greedy strategy
 * draws random maximal sequences and never answers No.
 */
CollapseOutcome collapse_to_point(const SimplicialComplex& k, Strategy strategy, std::uint64_t seed = 0,
                                  Budget budget = {});

/// Collapse K onto the subcomplex H (exact labels); faces of H are never removed.
/// Throws std::invalid_argument if H is not a subcomplex of K.
CollapseOutcome collapses_onto(const SimplicialComplex& k, const SimplicialComplex& h, Strategy strategy,
                               std::uint64_t seed = 0, Budget budget = {});

struct StuckCore {
    SimplicialComplex core;
    CollapseCertificate certificate;
};

struct StuckCoreMode {
    bool exhaustive = false;
    std::uint64_t samples = 10'000;
    /// Deduplicate by isomorphism class; otherwise by exact facet list.
    bool up_to_isomorphism = true;
};

struct StuckCoreReport {
    /// Terminal complexes in discovery order, one per class (see StuckCoreMode).
    std::vector<StuckCore> cores;
    /// Indeterminate when an exhaustive search ran out of budget (list is partial).
    Verdict completeness = Verdict::Yes;
    SearchStats stats;
};

StuckCoreReport find_stuck_cores(const SimplicialComplex& k, StuckCoreMode mode, std::uint64_t seed = 0,
                                 Budget budget = {});

/// Yes only after every reachable terminal state turned out to be a point.
CollapseOutcome is_extendably_collapsible(const SimplicialComplex& k, Budget budget = {});

struct ReplayResult {
    bool valid = false;
    SimplicialComplex end;
    /// Index of the first invalid step when !valid.
    std::size_t failed_step = 0;
    std::string reason;
};

/// Polynomial-time verification of a collapse sequence.
ReplayResult replay_certificate(const SimplicialComplex& k, const CollapseCertificate& cert);

/// Same endpoints, steps sorted by non-increasing coface dimension (stable).
/// Throws CollapseError if `cert` does not replay on k.
CollapseCertificate normalize_certificate(const SimplicialComplex& k, const CollapseCertificate& cert);

/// Diagnostic for dim <= 2: one greedy run and the exhaustive search agree.
/// Throws std::invalid_argument when dim K > 2.
bool greedy_equals_search_dim2(const SimplicialComplex& k);

/// One deterministic greedy run (lexicographically first free pair each step).
StuckCore greedy_collapse(const SimplicialComplex& k);

} // namespace collapsible
