#pragma once

#include <collapsible/complex.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace collapsible {

enum class Status { Pass, Fail, Indeterminate };

std::string to_string(Status s);

struct Check {
    std::string what;
    Status status = Status::Fail;
    std::string detail;
    /// A failure analysed and recorded as not attainable; reported, never hidden.
    bool known_gap = false;
};

struct CriterionResult {
    std::string id;
    std::string title;
    Status status = Status::Fail;
    std::vector<Check> checks;
    double seconds = 0;
    /// Wall-clock target for the whole criterion.
    double time_limit = 0;
    bool stretch = false;
    /// Witness files: (file name, contents).
    std::vector<std::pair<std::string, std::string>> artifacts;

    /// Failed checks other than known gaps (time overruns included).
    [[nodiscard]] bool blocking_failure() const;
};

enum class Tier { Quick, Default, Full };

struct CriteriaOptions {
    std::uint64_t seed = 1;
    /// Search nodes for the stretch ball census.
    std::uint64_t ball_census_nodes = 5'000'000'000;
};

std::vector<std::string> criteria_ids(Tier tier);

/// Throws std::invalid_argument for an unknown id.
CriterionResult run_criterion(const std::string& id, const CriteriaOptions& options = {});

/// Number of closed 3-manifold types on n <= 7 vertices by plain include/exclude
/// over all tetrahedra, with types told apart by trying every vertex permutation.
std::size_t census_count_unpruned(int n);

/// Random pure 2-complex on at most `max_vertices` vertices with 1..max_triangles triangles.
SimplicialComplex random_2_complex(std::uint64_t seed, int max_vertices, int max_triangles);

} // namespace collapsible
