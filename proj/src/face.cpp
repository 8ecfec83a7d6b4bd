#include <collapsible/face.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace collapsible {

Face::Face(std::initializer_list<int> vertices)
    : Face(from_vertices(std::span<const int>(vertices.begin(), vertices.size())))
{
}

Face Face::from_vertices(std::span<const int> vertices)
{
    std::uint64_t bits = 0;
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices)
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0, 64)");
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (bits & bit)
            throw std::invalid_argument("duplicate vertex " + std::to_string(v) + " in face");
        bits |= bit;
    }
    return Face(bits);
}

std::vector<int> Face::vertices() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

std::vector<Face> Face::subfaces(int k) const
{
    std::vector<Face> out;
    const auto vs = vertices();
    const int n = static_cast<int>(vs.size());
    if (k < 0 || k > n)
        return out;
    // Gosper-style walk over k-subsets of the vertex positions.
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        std::uint64_t bits = 0;
        for (int i : idx)
            bits |= std::uint64_t{1} << vs[i];
        out.emplace_back(bits);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::string Face::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int v : vertices()) {
        if (!first)
            os << ' ';
        os << v;
        first = false;
    }
    return os.str();
}

bool lex_less(std::span<const Face> a, std::span<const Face> b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace collapsible
