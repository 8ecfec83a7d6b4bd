#include <collapsible/homology.hpp>

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace collapsible {

namespace {

std::unordered_map<Face, int> index_of(const std::vector<Face>& faces)
{
    std::unordered_map<Face, int> idx;
    for (std::size_t i = 0; i < faces.size(); ++i)
        idx.emplace(faces[i], static_cast<int>(i));
    return idx;
}

int rank_z2(const BoundaryMatrix& m)
{
    const std::size_t words = (m.cols.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(m.rows.size(), std::vector<std::uint64_t>(words, 0));
    for (const auto& e : m.entries)
        if (e.value % 2 != 0)
            rows[e.row][e.col / 64] ^= std::uint64_t{1} << (e.col % 64);
    int rank = 0;
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols.size() && next < rows.size(); ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = next;
        while (pivot < rows.size() && !(rows[pivot][w] & bit))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[next]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && (rows[r][w] & bit))
                for (std::size_t x = 0; x < words; ++x)
                    rows[r][x] ^= rows[next][x];
        ++next;
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<std::vector<BigInt>> BoundaryMatrix::dense() const
{
    std::vector<std::vector<BigInt>> out(rows.size(), std::vector<BigInt>(cols.size(), 0));
    for (const auto& e : entries)
        out[e.row][e.col] += e.value;
    return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d, bool augmented)
{
    BoundaryMatrix m;
    m.dim = d;
    m.cols = k.faces(d);
    if (d == 0) {
        if (augmented && !m.cols.empty()) {
            m.rows = {Face{}};
            for (std::size_t c = 0; c < m.cols.size(); ++c)
                m.entries.push_back({0, static_cast<int>(c), 1});
        }
        return m;
    }
    m.rows = k.faces(d - 1);
    const auto row_index = index_of(m.rows);
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
        const auto vs = m.cols[c].vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const int r = row_index.at(m.cols[c].without(vs[i]));
            m.entries.push_back({r, static_cast<int>(c), (i % 2 == 0) ? 1 : -1});
        }
    }
    return m;
}

std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero |entry| in the trailing block becomes the pivot.
            std::size_t pr = rows;
            std::size_t pc = cols;
            BigInt best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
                        best = abs(a[i][j]);
                        pr = i;
                        pc = j;
                    }
            if (pr == rows)
                goto done;
            std::swap(a[t], a[pr]);
            for (auto& row : a)
                std::swap(row[t], row[pc]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                clean = clean && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                clean = clean && a[t][j] == 0;
            }
            if (clean)
                break;
        }
        diag.push_back(abs(a[t][t]));
    }
done:
    // Diagonal -> invariant factors via repeated gcd/lcm.
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            const BigInt g = gcd(diag[i], diag[j]);
            const BigInt l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

bool HomologyProfile::trivial() const
{
    return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.trivial(); });
}

std::vector<int> HomologyProfile::betti() const
{
    std::vector<int> out;
    for (const auto& g : groups)
        out.push_back(g.betti);
    return out;
}

std::vector<int> homology_z2(const SimplicialComplex& k, bool reduced)
{
    const int top = k.dim();
    if (top < 0)
        return {};
    // rank[d] = rank of ∂_d, d = 0..top+1
    std::vector<int> rank(static_cast<std::size_t>(top + 2), 0);
    for (int d = 0; d <= top; ++d)
        rank[d] = rank_z2(boundary_matrix(k, d, reduced));
    std::vector<int> betti;
    for (int d = 0; d <= top; ++d)
        betti.push_back(static_cast<int>(k.faces(d).size()) - rank[d] - rank[d + 1]);
    return betti;
}

HomologyProfile homology_integral(const SimplicialComplex& k, bool reduced)
{
    HomologyProfile p;
    p.reduced = reduced;
    const int top = k.dim();
    if (top < 0)
        return p;
    std::vector<std::vector<BigInt>> invariants(static_cast<std::size_t>(top + 2));
    for (int d = 0; d <= top; ++d)
        invariants[d] = smith_invariants(boundary_matrix(k, d, reduced).dense());
    for (int d = 0; d <= top; ++d) {
        HomologyGroup g;
        g.betti = static_cast<int>(k.faces(d).size()) - static_cast<int>(invariants[d].size()) -
                  static_cast<int>(invariants[d + 1].size());
        for (const auto& x : invariants[d + 1])
            if (x > 1)
                g.torsion.push_back(x);
        p.groups.push_back(std::move(g));
    }
    return p;
}

bool is_cohen_macaulay(const SimplicialComplex& k)
{
    if (k.empty() || !k.is_pure())
        return false;
    std::vector<Face> faces = k.all_faces();
    faces.insert(faces.begin(), Face{});
    for (Face f : faces) {
        const auto link = k.link(f);
        const int link_dim = k.dim() - f.size();
        if (link_dim < 0)
            continue;
        const auto h = homology_integral(link, true);
        for (int i = 0; i < static_cast<int>(h.groups.size()); ++i) {
            if (i < link_dim && !h.groups[i].trivial())
                return false;
            if (i == link_dim && !h.groups[i].torsion.empty())
                return false;
        }
    }
    return true;
}

} // namespace collapsible
