#pragma once

#include <collapsible/complex.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace collapsible {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse matrix of ∂_d : C_d -> C_{d-1}; faces oriented by ascending vertex order.
struct BoundaryMatrix {
    struct Entry {
        int row = 0;
        int col = 0;
        int value = 0;
    };

    int dim = 0;
    std::vector<Face> rows;
    std::vector<Face> cols;
    std::vector<Entry> entries;

    [[nodiscard]] std::vector<std::vector<BigInt>> dense() const;
};

/// ∂_d for d >= 1. With `augmented`, d == 0 gives the augmentation map C_0 -> Z.
BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d, bool augmented = false);

struct HomologyGroup {
    int betti = 0;
    /// Invariant factors >= 2 in divisibility order.
    std::vector<BigInt> torsion;

    [[nodiscard]] bool trivial() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/**
 * Homology in dimensions 0..dim K. The reduced variant augments the chain
 * complex with the empty face; the (-1)-dimensional group of the empty
 * complex is not represented.
 */
struct HomologyProfile {
    bool reduced = false;
    std::vector<HomologyGroup> groups;

    [[nodiscard]] bool trivial() const;
    [[nodiscard]] std::vector<int> betti() const;
};

std::vector<int> homology_z2(const SimplicialComplex& k, bool reduced);
HomologyProfile homology_integral(const SimplicialComplex& k, bool reduced);

/// Diagonal of a Smith normal form (nonzero entries only, divisibility order).
std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> m);

/**
 * Reisner's criterion with integer coefficients: K pure and every link
 * (including K itself as the link of the empty face) has vanishing reduced
 * homology below its top dimension and torsion-free top homology. This
 * certifies Cohen-Macaulayness over every field at once.
 */
bool is_cohen_macaulay(const SimplicialComplex& k);

} // namespace collapsible
