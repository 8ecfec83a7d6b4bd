#include <collapsible/shelling.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace collapsible {

namespace {

void require_pure(const SimplicialComplex& k, const char* who)
{
    if (!k.is_pure())
        throw std::invalid_argument(std::string(who) + ": complex is not pure");
    if (k.facets().size() > 64)
        throw std::invalid_argument(std::string(who) + ": more than 64 facets");
}

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

/// Shelling condition on facet bitmasks.
class ShellTable {
public:
    explicit ShellTable(const SimplicialComplex& k) : facets_(k.facets()), n_(facets_.size())
    {
        diff_.resize(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                diff_[i * n_ + j] = facets_[i].minus(facets_[j]).bits();
    }

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] const std::vector<Face>& facets() const { return facets_; }

    /// Can facet i follow the facets in `used`?
    [[nodiscard]] bool fits(std::size_t i, std::uint64_t used) const
    {
        if (used == 0)
            return true;
        // Vertices v such that facet_i - v lies in a used facet.
        std::uint64_t m = 0;
        for (std::uint64_t u = used; u; u &= u - 1) {
            const std::uint64_t d = diff_[i * n_ + std::countr_zero(u)];
            if (std::popcount(d) == 1)
                m |= d;
        }
        if (m == 0)
            return false;
        // Every intersection must sit inside some facet_i - v with v in m.
        for (std::uint64_t u = used; u; u &= u - 1)
            if ((diff_[i * n_ + std::countr_zero(u)] & m) == 0)
                return false;
        return true;
    }

private:
    std::vector<Face> facets_;
    std::size_t n_;
    std::vector<std::uint64_t> diff_;
};

ShellingOrder order_from(const ShellTable& t, const std::vector<std::size_t>& idx)
{
    ShellingOrder out;
    for (std::size_t i : idx)
        out.push_back(t.facets()[i]);
    return out;
}

} // namespace

std::optional<std::size_t> check_shelling(const SimplicialComplex& k, const ShellingOrder& order)
{
    const auto& facets = k.facets();
    std::vector<Face> seen;
    const int d = k.dim();
    for (std::size_t j = 0; j < order.size(); ++j) {
        const Face f = order[j];
        if (!std::binary_search(facets.begin(), facets.end(), f) ||
            std::find(seen.begin(), seen.end(), f) != seen.end())
            return j;
        if (j > 0) {
            // Intersection of the closure of f with the earlier union.
            std::vector<Face> meet;
            for (Face g : seen)
                meet.push_back(f & g);
            const auto inter = SimplicialComplex::from_facets(meet);
            if (inter.empty() || inter.dim() != d - 1 || !inter.is_pure())
                return j;
        }
        seen.push_back(f);
    }
    if (order.size() != facets.size())
        return order.size();
    return std::nullopt;
}

ShellingOutcome is_shellable(const SimplicialComplex& k, Budget budget)
{
    require_pure(k, "is_shellable");
    ShellingOutcome out;
    if (k.empty()) {
        out.verdict = Verdict::Yes;
        out.order = ShellingOrder{};
        return out;
    }
    const ShellTable t(k);
    const std::uint64_t all = full_mask(t.size());
    std::unordered_set<std::uint64_t> dead;
    std::vector<std::size_t> path;
    bool exhausted = false;

    std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t used) {
        if (used == all)
            return true;
        if (dead.contains(used)) {
            ++out.stats.memo_hits;
            return false;
        }
        if (out.stats.nodes_expanded >= budget.nodes) {
            exhausted = true;
            return false;
        }
        ++out.stats.nodes_expanded;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if ((used >> i) & 1U || !t.fits(i, used))
                continue;
            path.push_back(i);
            if (dfs(used | (std::uint64_t{1} << i)))
                return true;
            path.pop_back();
            if (exhausted)
                return false;
        }
        dead.insert(used);
        return false;
    };
    if (dfs(0)) {
        out.verdict = Verdict::Yes;
        out.order = order_from(t, path);
    } else {
        out.verdict = exhausted ? Verdict::Indeterminate : Verdict::No;
    }
    return out;
}

ShellingOutcome is_extendably_shellable(const SimplicialComplex& k, Budget budget)
{
    require_pure(k, "is_extendably_shellable");
    ShellingOutcome out;
    if (k.empty()) {
        out.verdict = Verdict::Yes;
        return out;
    }
    const ShellTable t(k);
    const std::uint64_t all = full_mask(t.size());
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::size_t> path;
    bool exhausted = false;

    // A reachable dead end exists iff some partial shelling does not extend.
    std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t used) {
        if (used == all)
            return false;
        if (!seen.insert(used).second) {
            ++out.stats.memo_hits;
            return false;
        }
        if (out.stats.nodes_expanded >= budget.nodes) {
            exhausted = true;
            return false;
        }
        ++out.stats.nodes_expanded;
        bool moved = false;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if ((used >> i) & 1U || !t.fits(i, used))
                continue;
            moved = true;
            path.push_back(i);
            if (dfs(used | (std::uint64_t{1} << i)))
                return true;
            path.pop_back();
            if (exhausted)
                return false;
        }
        return !moved;
    };
    if (dfs(0)) {
        out.verdict = Verdict::No;
        out.order = order_from(t, path);
    } else {
        out.verdict = exhausted ? Verdict::Indeterminate : Verdict::Yes;
    }
    return out;
}

ShellingCollapse shelling_to_collapse(const SimplicialComplex& k, const ShellingOrder& order)
{
    if (auto bad = check_shelling(k, order))
        throw std::invalid_argument("shelling_to_collapse: not a shelling, first violation at index " +
                                    std::to_string(*bad));
    ShellingCollapse out;
    out.start = k;
    if (order.empty())
        return out;

    // Restriction face: vertices whose opposite ridge already appeared.
    std::vector<Face> restriction(order.size());
    for (std::size_t j = 1; j < order.size(); ++j) {
        Face r;
        for (int v : order[j].vertices()) {
            const Face ridge = order[j].without(v);
            for (std::size_t i = 0; i < j; ++i)
                if (ridge.is_subset_of(order[i])) {
                    r = r.with(v);
                    break;
                }
        }
        restriction[j] = r;
    }
    std::size_t last = order.size();
    if (order.size() > 1 && restriction.back() == order.back()) {
        const Face closing = order.back();
        out.start = k.remove_facets_open(std::span<const Face>(&closing, 1));
        --last;
    }
    for (std::size_t j = last; j-- > 0;) {
        const Face f = order[j];
        const Face r = restriction[j];
        if (j > 0 && r == f)
            throw std::invalid_argument("shelling_to_collapse: facet at index " + std::to_string(j) +
                                        " closes a sphere before the end; no collapse to a point");
        const int w = f.minus(r).min_vertex();
        // New faces are the interval [r, f]; pair s with s + w for s not containing w.
        std::vector<Face> lower;
        const Face free_part = f.minus(r).without(w);
        const std::uint64_t bits = free_part.bits();
        for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
            const Face s = r | Face(sub);
            if (s.size() > 0)
                lower.push_back(s);
            if (sub == 0)
                break;
        }
        std::sort(lower.begin(), lower.end(), [](Face a, Face b) {
            if (a.size() != b.size())
                return a.size() > b.size();
            return a < b;
        });
        for (Face s : lower)
            out.certificate.steps.push_back({s, s.with(w)});
    }
    return out;
}

namespace {

/// Recursive constructibility with memo tables per complex and per facet subset.
class ConstructSearch {
public:
    explicit ConstructSearch(std::uint64_t budget) : budget_(budget) {}

    /// nullopt when the budget ran out.
    std::optional<bool> decide(const SimplicialComplex& c)
    {
        if (c.facets().size() <= 1)
            return true;
        if (!c.is_pure())
            return false;
        const int d = c.dim();
        if (d == 0)
            return true;
        if (d == 1)
            return c.is_connected();
        if (auto it = memo_.find(c.facets()); it != memo_.end()) {
            ++stats.memo_hits;
            return it->second;
        }
        if (c.facets().size() > 64)
            throw std::invalid_argument("is_constructible: more than 64 facets in a subproblem");
        Subsets sub(*this, c);
        auto r = sub.solve(full_mask(c.facets().size()));
        if (r)
            memo_.emplace(c.facets(), *r);
        return r;
    }

    bool charge()
    {
        if (stats.nodes_expanded >= budget_) {
            out_of_budget = true;
            return false;
        }
        ++stats.nodes_expanded;
        return true;
    }

    SearchStats stats;
    bool out_of_budget = false;

private:
    using Bits = std::vector<std::uint64_t>;

    /// Facet subsets of one complex.
    class Subsets {
    public:
        Subsets(ConstructSearch& owner, const SimplicialComplex& c) : owner_(owner), c_(c)
        {
            faces_ = c.all_faces();
            words_ = (faces_.size() + 63) / 64;
            std::unordered_map<Face, int> index;
            for (std::size_t i = 0; i < faces_.size(); ++i)
                index.emplace(faces_[i], static_cast<int>(i));
            const auto& facets = c.facets();
            n_ = facets.size();
            closure_.assign(n_, Bits(words_, 0));
            adj_.assign(n_, 0);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::uint64_t s = facets[i].bits();; s = (s - 1) & facets[i].bits()) {
                    if (s != 0) {
                        const int x = index.at(Face(s));
                        closure_[i][x / 64] |= std::uint64_t{1} << (x % 64);
                    }
                    if (s == 0)
                        break;
                }
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    if (i != j && (facets[i] & facets[j]).size() == facets[i].size() - 1)
                        adj_[i] |= std::uint64_t{1} << j;
        }

        std::optional<bool> solve(std::uint64_t s)
        {
            if (std::popcount(s) == 1)
                return true;
            if (auto it = memo_.find(s); it != memo_.end()) {
                ++owner_.stats.memo_hits;
                return it->second;
            }
            if (!owner_.charge())
                return std::nullopt;
            std::optional<bool> result = false;
            if (connected(s))
                result = try_splits(s);
            if (result)
                memo_.emplace(s, *result);
            return result;
        }

    private:
        [[nodiscard]] bool connected(std::uint64_t s) const
        {
            if (s == 0)
                return false;
            std::uint64_t seen = s & -s;
            std::uint64_t frontier = seen;
            while (frontier) {
                const int i = std::countr_zero(frontier);
                frontier &= frontier - 1;
                const std::uint64_t fresh = adj_[i] & s & ~seen;
                seen |= fresh;
                frontier |= fresh;
            }
            return seen == s;
        }

        [[nodiscard]] Bits closure(std::uint64_t s) const
        {
            Bits out(words_, 0);
            for (; s; s &= s - 1) {
                const auto& c = closure_[std::countr_zero(s)];
                for (std::size_t w = 0; w < words_; ++w)
                    out[w] |= c[w];
            }
            return out;
        }

        /// Try s = a ∪ b with both parts strongly connected, smaller part b.
        std::optional<bool> try_splits(std::uint64_t s)
        {
            const int size = std::popcount(s);
            const std::uint64_t lowest = s & -s;
            bool budget_hit = false;
            bool found = false;
            std::uint64_t allowed = 0;

            auto report = [&](std::uint64_t part) {
                const int nb = std::popcount(part);
                if (2 * nb == size && (part & lowest))
                    return; // the same split is reached with the parts swapped
                const std::uint64_t rest = s & ~part;
                if (!connected(rest))
                    return;
                auto r = check_split(rest, part);
                if (!r)
                    budget_hit = true;
                else if (*r)
                    found = true;
            };
            // Each connected subset of `allowed` containing the root, once:
            // branch on including or excluding the lowest extension vertex.
            std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> grow =
                [&](std::uint64_t part, std::uint64_t ext, std::uint64_t excluded) {
                    if (found || budget_hit)
                        return;
                    if (ext == 0 || 2 * std::popcount(part) >= size) {
                        report(part);
                        return;
                    }
                    const std::uint64_t w = ext & -ext;
                    const std::uint64_t grown = part | w;
                    const std::uint64_t next = (ext | (adj_[std::countr_zero(w)] & allowed)) & ~grown & ~excluded;
                    grow(grown, next, excluded);
                    grow(part, ext & ~w, excluded | w);
                };
            for (std::uint64_t r = s; r && !found && !budget_hit; r &= r - 1) {
                const std::uint64_t root = r & -r;
                allowed = s & ~((root << 1) - 1);
                grow(root, adj_[std::countr_zero(root)] & allowed, 0);
            }
            if (budget_hit)
                return std::nullopt;
            return found;
        }

        std::optional<bool> check_split(std::uint64_t a, std::uint64_t b)
        {
            Bits meet = closure(a);
            const Bits cb = closure(b);
            for (std::size_t w = 0; w < words_; ++w)
                meet[w] &= cb[w];
            const int d = c_.dim();
            std::vector<Face> ridges;
            for (std::size_t w = 0; w < words_; ++w)
                for (std::uint64_t m = meet[w]; m; m &= m - 1) {
                    const Face f = faces_[w * 64 + std::countr_zero(m)];
                    if (f.dim() == d - 1)
                        ridges.push_back(f);
                }
            if (ridges.empty())
                return false;
            const auto inter = SimplicialComplex::from_facets(ridges);
            if (inter.num_faces() != static_cast<std::size_t>(std::accumulate(
                                         meet.begin(), meet.end(), 0,
                                         [](int acc, std::uint64_t x) { return acc + std::popcount(x); })))
                return false; // lower-dimensional maximal faces in the intersection
            auto r = owner_.decide(inter);
            if (!r || !*r)
                return r;
            r = solve(b);
            if (!r || !*r)
                return r;
            return solve(a);
        }

        ConstructSearch& owner_;
        const SimplicialComplex& c_;
        std::vector<Face> faces_;
        std::size_t words_ = 0;
        std::size_t n_ = 0;
        std::vector<Bits> closure_;
        std::vector<std::uint64_t> adj_;
        std::unordered_map<std::uint64_t, bool> memo_;
    };

    std::uint64_t budget_;
    std::map<std::vector<Face>, bool> memo_;
};

} // namespace

ConstructibleOutcome is_constructible(const SimplicialComplex& k, Budget budget)
{
    require_pure(k, "is_constructible");
    ConstructSearch search(budget.nodes);
    ConstructibleOutcome out;
    const auto r = search.decide(k);
    out.stats = search.stats;
    if (!r)
        out.verdict = Verdict::Indeterminate;
    else
        out.verdict = *r ? Verdict::Yes : Verdict::No;
    return out;
}

} // namespace collapsible
