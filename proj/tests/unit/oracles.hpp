// Slow, direct reimplementations used to cross-check the library.
#pragma once

#include <collapsible/complex.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using collapsible::Face;
using collapsible::SimplicialComplex;
using Int = boost::multiprecision::cpp_int;

// Rank over GF(2) of the d-th boundary map, dense rows of bits.
inline int boundary_rank_z2(const SimplicialComplex& k, int d)
{
    if (d <= 0 || d > k.dim())
        return 0;
    const auto& rows = k.faces(d - 1);
    std::map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < rows.size(); ++i)
        index[rows[i].bits()] = i;
    std::vector<std::vector<bool>> m;
    for (Face f : k.faces(d)) {
        std::vector<bool> col(rows.size());
        for (Face r : f.ridges())
            col[index.at(r.bits())] = true;
        m.push_back(col);
    }
    int rank = 0;
    const std::size_t width = rows.size();
    for (std::size_t c = 0; c < width && rank < static_cast<int>(m.size()); ++c) {
        std::size_t p = rank;
        while (p < m.size() && !m[p][c])
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && m[r][c])
                for (std::size_t j = 0; j < width; ++j)
                    m[r][j] = m[r][j] != m[rank][j];
        ++rank;
    }
    return rank;
}

inline std::vector<int> betti_z2(const SimplicialComplex& k)
{
    std::vector<int> b;
    for (int d = 0; d <= k.dim(); ++d)
        b.push_back(static_cast<int>(k.faces(d).size()) - boundary_rank_z2(k, d) - boundary_rank_z2(k, d + 1));
    return b;
}

// Determinant of an integer matrix by fraction-free elimination.
inline Int determinant(std::vector<std::vector<Int>> a)
{
    const std::size_t n = a.size();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? Int(1) : sign * a[n - 1][n - 1];
}

// Matrix-tree theorem on the dual graph (facets adjacent through a ridge).
inline Int kirchhoff_tree_count(const SimplicialComplex& m)
{
    const auto& facets = m.facets();
    const std::size_t n = facets.size();
    std::vector<std::vector<Int>> lap(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((facets[i] & facets[j]).size() == facets[i].size() - 1) {
                lap[i][j] -= 1;
                lap[j][i] -= 1;
                lap[i][i] += 1;
                lap[j][j] += 1;
            }
    std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            minor[i - 1][j - 1] = lap[i][j];
    return determinant(minor);
}

// Shelling condition checked from pairwise intersections only.
inline bool shelling_step_ok(const std::vector<Face>& earlier, Face f)
{
    if (earlier.empty())
        return true;
    std::vector<Face> meets;
    for (Face g : earlier)
        meets.push_back(g & f);
    for (Face a : meets) {
        bool maximal = true;
        for (Face b : meets)
            if (a != b && a.is_subset_of(b))
                maximal = false;
        if (maximal && a.size() != f.size() - 1)
            return false;
    }
    return true;
}

// Every ordering of the facets, as a decision on extendability: does every
// valid prefix extend to a full shelling?
inline bool extendably_shellable(const std::vector<Face>& facets)
{
    std::map<std::uint64_t, bool> extendable; // used-set -> can be completed
    const std::size_t n = facets.size();
    std::function<bool(std::uint64_t, std::vector<Face>&)> completes = [&](std::uint64_t used,
                                                                           std::vector<Face>& seq) {
        if (seq.size() == n)
            return true;
        if (auto it = extendable.find(used); it != extendable.end())
            return it->second;
        bool any = false;
        for (std::size_t i = 0; i < n && !any; ++i)
            if (!((used >> i) & 1U) && shelling_step_ok(seq, facets[i])) {
                seq.push_back(facets[i]);
                any = completes(used | (std::uint64_t{1} << i), seq);
                seq.pop_back();
            }
        return extendable[used] = any;
    };
    // The outcome of a prefix depends only on its facet set, so walk all reachable sets.
    std::set<std::uint64_t> seen;
    std::function<bool(std::uint64_t, std::vector<Face>&)> all_extend = [&](std::uint64_t used,
                                                                            std::vector<Face>& seq) {
        if (!seen.insert(used).second)
            return true;
        if (!completes(used, seq))
            return false;
        for (std::size_t i = 0; i < n; ++i)
            if (!((used >> i) & 1U) && shelling_step_ok(seq, facets[i])) {
                seq.push_back(facets[i]);
                const bool ok = all_extend(used | (std::uint64_t{1} << i), seq);
                seq.pop_back();
                if (!ok)
                    return false;
            }
        return true;
    };
    std::vector<Face> seq;
    return all_extend(0, seq);
}

// Collapsibility by trying every elementary collapse, on explicit face sets.
inline bool collapsible_brute(const SimplicialComplex& k)
{
    std::map<std::vector<std::uint64_t>, bool> memo;
    std::function<bool(std::vector<Face>)> rec = [&](std::vector<Face> faces) {
        if (faces.size() == 1)
            return true;
        std::vector<std::uint64_t> key;
        for (Face f : faces)
            key.push_back(f.bits());
        std::sort(key.begin(), key.end());
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        bool ok = false;
        for (Face s : faces) {
            Face coface;
            int cofaces = 0;
            for (Face t : faces)
                if (t != s && s.is_subset_of(t)) {
                    ++cofaces;
                    coface = t;
                }
            if (cofaces != 1 || coface.size() != s.size() + 1)
                continue;
            std::vector<Face> rest;
            for (Face t : faces)
                if (t != s && t != coface)
                    rest.push_back(t);
            if (rec(rest)) {
                ok = true;
                break;
            }
        }
        return memo[key] = ok;
    };
    return rec(k.all_faces());
}

// Canonical key by trying every vertex permutation (n <= 8).
inline std::vector<std::uint64_t> brute_canonical(const SimplicialComplex& k)
{
    const auto vs = k.vertex_set().vertices();
    std::vector<int> perm(vs.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best;
    do {
        std::vector<Face> img;
        for (Face f : k.facets()) {
            std::uint64_t bits = 0;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (f.contains(vs[i]))
                    bits |= std::uint64_t{1} << perm[i];
            img.emplace_back(bits);
        }
        std::sort(img.begin(), img.end());
        std::vector<std::uint64_t> key;
        for (Face f : img)
            key.push_back(f.bits());
        if (best.empty() || key < best)
            best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace oracle
