#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace collapsible {

/// Largest vertex id plus one. Faces are stored as one machine word of set bits.
inline constexpr int kMaxVertices = 64;

/**
 * A simplex given by its vertex set.
 *
 * Vertices are integers in [0, 64). The empty face is representable (it is
 * needed for links and Reisner's criterion) but complexes never store it.
 * Ordering is lexicographic on the ascending vertex sequence, so {0,1,2} <
 * {0,1,2,3} < {0,1,3}.
 */
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
    Face(std::initializer_list<int> vertices);

    /// Throws std::invalid_argument on duplicate or out-of-range vertices.
    static Face from_vertices(std::span<const int> vertices);

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
    [[nodiscard]] constexpr int dim() const { return size() - 1; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    [[nodiscard]] constexpr bool is_subset_of(Face other) const
    {
        return (bits_ & ~other.bits_) == 0;
    }
    [[nodiscard]] constexpr int min_vertex() const { return std::countr_zero(bits_); }
    [[nodiscard]] constexpr int max_vertex() const { return 63 - std::countl_zero(bits_); }

    [[nodiscard]] constexpr Face with(int v) const { return Face(bits_ | (std::uint64_t{1} << v)); }
    [[nodiscard]] constexpr Face without(int v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }
    [[nodiscard]] constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
    [[nodiscard]] constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
    [[nodiscard]] constexpr Face minus(Face o) const { return Face(bits_ & ~o.bits_); }

    [[nodiscard]] std::vector<int> vertices() const;

    /// All subfaces of the given size (lexicographic order).
    [[nodiscard]] std::vector<Face> subfaces(int size) const;
    /// Codimension-one subfaces.
    [[nodiscard]] std::vector<Face> ridges() const { return subfaces(size() - 1); }

    /// "0 1 2 3"
    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(Face a, Face b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator<(Face a, Face b) { return lex_less(a.bits_, b.bits_); }
    friend constexpr bool operator>(Face a, Face b) { return b < a; }
    friend constexpr bool operator<=(Face a, Face b) { return !(b < a); }
    friend constexpr bool operator>=(Face a, Face b) { return !(a < b); }

private:
    static constexpr bool lex_less(std::uint64_t a, std::uint64_t b)
    {
        const std::uint64_t diff = a ^ b;
        if (diff == 0)
            return false;
        const std::uint64_t low = diff & (~diff + 1);
        const std::uint64_t above = ~((low << 1) - 1);
        // The first differing element decides, unless the other sequence
        // has already ended (then it is a proper prefix and smaller).
        if (a & low)
            return (b & above) != 0;
        return (a & above) == 0;
    }

    std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of two sorted face lists.
bool lex_less(std::span<const Face> a, std::span<const Face> b);

} // namespace collapsible

template <>
struct std::hash<collapsible::Face> {
    std::size_t operator()(collapsible::Face f) const noexcept
    {
        std::uint64_t x = f.bits() + 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};
