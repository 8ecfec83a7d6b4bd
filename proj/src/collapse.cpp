#include <collapsible/collapse.hpp>
#include <collapsible/homology.hpp>
#include <collapsible/iso.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace collapsible {

namespace {

/// Face lattice of the start complex with immediate cover relations.
struct Lattice {
    explicit Lattice(const SimplicialComplex& k)
    {
        faces = k.all_faces();
        words = (faces.size() + 63) / 64;
        for (std::size_t i = 0; i < faces.size(); ++i)
            index.emplace(faces[i], static_cast<int>(i));
        up.resize(faces.size());
        down.resize(faces.size());
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (faces[i].size() < 2)
                continue;
            for (Face r : faces[i].ridges()) {
                const int j = index.at(r);
                down[i].push_back(j);
                up[j].push_back(static_cast<int>(i));
            }
        }
    }

    [[nodiscard]] int find(Face f) const
    {
        auto it = index.find(f);
        return it == index.end() ? -1 : it->second;
    }

    std::vector<Face> faces;
    std::size_t words = 0;
    std::unordered_map<Face, int> index;
    std::vector<std::vector<int>> up;
    std::vector<std::vector<int>> down;
};

/// Mutable set of surviving faces with incremental coface counts.
class State {
public:
    explicit State(const Lattice& lattice) : lat_(&lattice)
    {
        alive_.assign(lattice.words, 0);
        up_count_.resize(lattice.faces.size());
        for (std::size_t i = 0; i < lattice.faces.size(); ++i) {
            alive_[i / 64] |= std::uint64_t{1} << (i % 64);
            up_count_[i] = static_cast<int>(lattice.up[i].size());
        }
        alive_count_ = lattice.faces.size();
    }

    [[nodiscard]] bool alive(int i) const { return (alive_[i / 64] >> (i % 64)) & 1U; }
    [[nodiscard]] std::size_t alive_count() const { return alive_count_; }
    [[nodiscard]] const std::vector<std::uint64_t>& bits() const { return alive_; }
    [[nodiscard]] const Lattice& lattice() const { return *lat_; }

    /// Unique alive coface of i, or -1 if i is not free.
    [[nodiscard]] int unique_coface(int i) const
    {
        if (!alive(i) || up_count_[i] != 1)
            return -1;
        for (int j : lat_->up[i])
            if (alive(j))
                return j;
        return -1;
    }

    /// Free pairs, ordered by coface dimension (descending) then free face (lex).
    [[nodiscard]] std::vector<std::pair<int, int>> free_pairs() const
    {
        std::vector<std::pair<int, int>> out;
        for (std::size_t i = 0; i < lat_->faces.size(); ++i) {
            const int j = unique_coface(static_cast<int>(i));
            if (j >= 0)
                out.emplace_back(static_cast<int>(i), j);
        }
        std::stable_sort(out.begin(), out.end(), [this](auto a, auto b) {
            const int da = lat_->faces[a.second].dim();
            const int db = lat_->faces[b.second].dim();
            if (da != db)
                return da > db;
            return lat_->faces[a.first] < lat_->faces[b.first];
        });
        return out;
    }

    void apply(int f, int big)
    {
        kill(f);
        kill(big);
    }

    void undo(int f, int big)
    {
        revive(big);
        revive(f);
    }

    [[nodiscard]] int top_dim() const
    {
        int top = -1;
        for (std::size_t i = 0; i < lat_->faces.size(); ++i)
            if (alive(static_cast<int>(i)))
                top = std::max(top, lat_->faces[i].dim());
        return top;
    }

    [[nodiscard]] SimplicialComplex to_complex() const
    {
        std::vector<Face> faces;
        for (std::size_t i = 0; i < lat_->faces.size(); ++i)
            if (alive(static_cast<int>(i)))
                faces.push_back(lat_->faces[i]);
        return SimplicialComplex::from_closed_faces(faces);
    }

private:
    void kill(int i)
    {
        alive_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
        --alive_count_;
        for (int d : lat_->down[i])
            --up_count_[d];
    }

    void revive(int i)
    {
        alive_[i / 64] |= std::uint64_t{1} << (i % 64);
        ++alive_count_;
        for (int d : lat_->down[i])
            ++up_count_[d];
    }

    const Lattice* lat_;
    std::vector<std::uint64_t> alive_;
    std::vector<int> up_count_;
    std::size_t alive_count_ = 0;
};

/// Memo key: face set plus search phase, with a 128-bit hash; equality compares the full state.
struct MemoKey {
    std::uint64_t h1 = 0;
    std::uint64_t h2 = 0;
    int phase = 0;
    std::vector<std::uint64_t> bits;

    friend bool operator==(const MemoKey& a, const MemoKey& b)
    {
        return a.h1 == b.h1 && a.h2 == b.h2 && a.phase == b.phase && a.bits == b.bits;
    }
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept { return static_cast<std::size_t>(k.h1); }
};

std::uint64_t mix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

MemoKey make_key(const State& s, int phase)
{
    MemoKey k;
    k.phase = phase;
    k.bits = s.bits();
    std::uint64_t a = 0x243f6a8885a308d3ULL ^ static_cast<std::uint64_t>(phase);
    std::uint64_t b = 0x13198a2e03707344ULL + static_cast<std::uint64_t>(phase);
    for (std::uint64_t w : k.bits) {
        a = mix(a ^ w);
        b = mix(b + (w * 0xff51afd7ed558ccdULL));
    }
    k.h1 = a;
    k.h2 = b;
    return k;
}

CollapseStep to_step(const Lattice& lat, std::pair<int, int> p)
{
    return {lat.faces[p.first], lat.faces[p.second]};
}

/// Greedy run to a terminal state. With an rng, picks uniformly among the
/// top-dimensional free pairs; otherwise the first one.
template <typename Allowed>
std::vector<std::pair<int, int>> run_greedy(State& s, std::mt19937_64* rng, Allowed allowed)
{
    std::vector<std::pair<int, int>> steps;
    while (true) {
        auto pairs = s.free_pairs();
        std::erase_if(pairs, [&](auto p) { return !allowed(p); });
        if (pairs.empty())
            break;
        const int top = s.lattice().faces[pairs.front().second].dim();
        std::size_t n = 0;
        while (n < pairs.size() && s.lattice().faces[pairs[n].second].dim() == top)
            ++n;
        std::size_t pick = 0;
        if (rng)
            pick = std::uniform_int_distribution<std::size_t>(0, n - 1)(*rng);
        s.apply(pairs[pick].first, pairs[pick].second);
        steps.push_back(pairs[pick]);
    }
    return steps;
}

std::vector<std::pair<int, int>> run_greedy(State& s, std::mt19937_64* rng)
{
    return run_greedy(s, rng, [](auto) { return true; });
}

enum class MoveRule {
    /// Only pairs of the largest available coface dimension (complete for terminal states).
    MaxDimFirst,
    /// Coface dimension never increases along a sequence (complete for any target).
    NonIncreasing,
};

enum class Action { Continue, Prune, Stop };

/// Memoised depth-first exploration of collapse sequences.
class Explorer {
public:
    Explorer(const Lattice& lat, MoveRule rule, std::uint64_t node_budget)
        : Explorer(lat, State(lat), rule, node_budget, nullptr)
    {
    }

    /// Start from an arbitrary state; node counts go to `shared` when given.
    Explorer(const Lattice& lat, State start, MoveRule rule, std::uint64_t node_budget, SearchStats* shared)
        : lat_(lat), state_(std::move(start)), rule_(rule), budget_(node_budget), protected_(lat.faces.size(), 0),
          stats_ptr_(shared ? shared : &stats_)
    {
    }

    void protect(int i) { protected_[i] = 1; }
    [[nodiscard]] bool is_protected(int i) const { return protected_[i] != 0; }

    std::function<Action(State&, int)> on_state = [](State&, int) { return Action::Continue; };
    std::function<Action(State&)> on_terminal = [](State&) { return Action::Continue; };

    /// True if a callback asked to stop.
    bool run(int start_phase) { return dfs(start_phase); }

    [[nodiscard]] bool out_of_budget() const { return out_of_budget_; }
    [[nodiscard]] const SearchStats& stats() const { return *stats_ptr_; }
    [[nodiscard]] const std::vector<std::pair<int, int>>& path() const { return path_; }
    std::vector<std::pair<int, int>>& path() { return path_; }

private:
    bool dfs(int phase)
    {
        auto key = make_key(state_, rule_ == MoveRule::NonIncreasing ? phase : 0);
        if (seen_.contains(key)) {
            ++stats_ptr_->memo_hits;
            return false;
        }
        if (stats_ptr_->nodes_expanded >= budget_) {
            out_of_budget_ = true;
            return false;
        }
        seen_.insert(std::move(key));
        ++stats_ptr_->nodes_expanded;

        switch (on_state(state_, phase)) {
        case Action::Stop:
            return true;
        case Action::Prune:
            return false;
        case Action::Continue:
            break;
        }

        auto pairs = state_.free_pairs();
        std::erase_if(pairs, [&](auto p) {
            return protected_[p.first] || protected_[p.second] ||
                   (rule_ == MoveRule::NonIncreasing && lat_.faces[p.second].dim() > phase);
        });
        if (rule_ == MoveRule::MaxDimFirst && !pairs.empty()) {
            const int top = lat_.faces[pairs.front().second].dim();
            std::erase_if(pairs, [&](auto p) { return lat_.faces[p.second].dim() != top; });
        }
        if (pairs.empty())
            return on_terminal(state_) == Action::Stop;

        for (auto p : pairs) {
            state_.apply(p.first, p.second);
            path_.push_back(p);
            if (dfs(lat_.faces[p.second].dim()))
                return true;
            path_.pop_back();
            state_.undo(p.first, p.second);
            if (out_of_budget_)
                return false;
        }
        return false;
    }

    const Lattice& lat_;
    State state_;
    MoveRule rule_;
    std::uint64_t budget_;
    std::vector<char> protected_;
    std::unordered_set<MemoKey, MemoKeyHash> seen_;
    std::vector<std::pair<int, int>> path_;
    SearchStats stats_;
    SearchStats* stats_ptr_;
    bool out_of_budget_ = false;
};

CollapseCertificate to_certificate(const Lattice& lat, const std::vector<std::pair<int, int>>& steps)
{
    CollapseCertificate c;
    for (auto p : steps)
        c.steps.push_back(to_step(lat, p));
    return c;
}

struct ExhaustiveOptions {
    bool dim2_shortcut = true;
};

CollapseOutcome exhaustive_to_point(const SimplicialComplex& k, Budget budget, ExhaustiveOptions opts)
{
    const Lattice lat(k);
    Explorer ex(lat, MoveRule::MaxDimFirst, budget.nodes);
    std::vector<std::pair<int, int>> tail;
    ex.on_state = [&](State& s, int) {
        if (s.alive_count() == 1)
            return Action::Stop;
        if (opts.dim2_shortcut && s.top_dim() <= 2) {
            State copy = s;
            auto steps = run_greedy(copy, nullptr);
            if (copy.alive_count() == 1) {
                tail = std::move(steps);
                return Action::Stop;
            }
            return Action::Prune;
        }
        return Action::Continue;
    };
    CollapseOutcome out;
    const bool found = !k.empty() && ex.run(k.dim() + 1);
    out.stats = ex.stats();
    if (found) {
        auto steps = ex.path();
        steps.insert(steps.end(), tail.begin(), tail.end());
        out.verdict = Verdict::Yes;
        out.certificate = to_certificate(lat, steps);
        out.end = replay_certificate(k, *out.certificate).end;
    } else {
        out.verdict = ex.out_of_budget() ? Verdict::Indeterminate : Verdict::No;
    }
    return out;
}

} // namespace

std::vector<CollapseStep> free_faces(const SimplicialComplex& k)
{
    const Lattice lat(k);
    const State s(lat);
    std::vector<CollapseStep> out;
    for (auto p : s.free_pairs())
        out.push_back(to_step(lat, p));
    std::sort(out.begin(), out.end(), [](const CollapseStep& a, const CollapseStep& b) {
        return a.free_face < b.free_face;
    });
    return out;
}

SimplicialComplex elementary_collapse(const SimplicialComplex& k, const CollapseStep& step)
{
    const auto r = replay_certificate(k, CollapseCertificate{{step}});
    if (!r.valid)
        throw CollapseError(r.reason);
    return r.end;
}

ReplayResult replay_certificate(const SimplicialComplex& k, const CollapseCertificate& cert)
{
    const Lattice lat(k);
    State s(lat);
    ReplayResult r;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& st = cert.steps[i];
        const int f = lat.find(st.free_face);
        const int big = lat.find(st.coface);
        auto fail = [&](std::string why) {
            r.valid = false;
            r.failed_step = i;
            r.reason = "step " + std::to_string(i) + " ({" + st.free_face.to_string() + "} | {" +
                       st.coface.to_string() + "}): " + std::move(why);
            r.end = s.to_complex();
            return r;
        };
        if (f < 0 || !s.alive(f))
            return fail("free face is not in the complex");
        if (big < 0 || !s.alive(big))
            return fail("coface is not in the complex");
        if (!st.free_face.is_subset_of(st.coface) || st.coface.size() != st.free_face.size() + 1)
            return fail("coface does not cover the free face");
        if (s.unique_coface(f) != big)
            return fail("face is not free (it lies in more than one other face)");
        s.apply(f, big);
    }
    r.valid = true;
    r.end = s.to_complex();
    return r;
}

CollapseCertificate normalize_certificate(const SimplicialComplex& k, const CollapseCertificate& cert)
{
    const auto before = replay_certificate(k, cert);
    if (!before.valid)
        throw CollapseError("normalize_certificate: input does not replay: " + before.reason);
    CollapseCertificate out = cert;
    std::stable_sort(out.steps.begin(), out.steps.end(), [](const CollapseStep& a, const CollapseStep& b) {
        return a.coface.dim() > b.coface.dim();
    });
    const auto after = replay_certificate(k, out);
    if (!after.valid || !(after.end == before.end))
        throw CollapseError("normalize_certificate: reordered sequence failed: " + after.reason);
    return out;
}

StuckCore greedy_collapse(const SimplicialComplex& k)
{
    const Lattice lat(k);
    State s(lat);
    const auto steps = run_greedy(s, nullptr);
    return {s.to_complex(), to_certificate(lat, steps)};
}

CollapseOutcome collapse_to_point(const SimplicialComplex& k, Strategy strategy, std::uint64_t seed, Budget budget)
{
    if (strategy == Strategy::ExhaustiveMemoized)
        return exhaustive_to_point(k, budget, {});

    const Lattice lat(k);
    std::mt19937_64 rng(seed);
    CollapseOutcome out;
    for (std::uint64_t run = 0; run < budget.restarts; ++run) {
        State s(lat);
        const auto steps = run_greedy(s, &rng);
        ++out.stats.nodes_expanded;
        if (s.alive_count() == 1) {
            out.verdict = Verdict::Yes;
            out.certificate = to_certificate(lat, steps);
            out.end = s.to_complex();
            return out;
        }
    }
    out.verdict = Verdict::Indeterminate;
    return out;
}

CollapseOutcome collapses_onto(const SimplicialComplex& k, const SimplicialComplex& h, Strategy strategy,
                               std::uint64_t seed, Budget budget)
{
    if (!h.is_subcomplex_of(k))
        throw std::invalid_argument("collapses_onto: target is not a subcomplex");
    const Lattice lat(k);
    std::vector<char> keep(lat.faces.size(), 0);
    for (Face f : h.all_faces())
        keep[lat.find(f)] = 1;
    const std::size_t target = h.num_faces();
    CollapseOutcome out;

    if (strategy == Strategy::GreedyRandomRestarts) {
        std::mt19937_64 rng(seed);
        auto allowed = [&](std::pair<int, int> p) { return !keep[p.first] && !keep[p.second]; };
        for (std::uint64_t run = 0; run < budget.restarts; ++run) {
            State s(lat);
            const auto steps = run_greedy(s, &rng, allowed);
            ++out.stats.nodes_expanded;
            if (s.alive_count() == target) {
                out.verdict = Verdict::Yes;
                out.certificate = to_certificate(lat, steps);
                out.end = s.to_complex();
                return out;
            }
        }
        out.verdict = Verdict::Indeterminate;
        return out;
    }

    Explorer ex(lat, MoveRule::NonIncreasing, budget.nodes);
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (keep[i])
            ex.protect(static_cast<int>(i));
    ex.on_state = [&](State& s, int phase) {
        if (s.alive_count() == target)
            return Action::Stop;
        // A face above the current phase can no longer be removed.
        for (std::size_t i = 0; i < keep.size(); ++i)
            if (!keep[i] && s.alive(static_cast<int>(i)) && lat.faces[i].dim() > phase)
                return Action::Prune;
        return Action::Continue;
    };
    const bool found = ex.run(k.dim());
    out.stats = ex.stats();
    if (found) {
        out.verdict = Verdict::Yes;
        out.certificate = to_certificate(lat, ex.path());
        out.end = replay_certificate(k, *out.certificate).end;
    } else {
        out.verdict = ex.out_of_budget() ? Verdict::Indeterminate : Verdict::No;
    }
    return out;
}

namespace {

/// Deduplicates cores by isomorphism class when asked (exact facet list beyond 16 vertices).
class CoreCollector {
public:
    explicit CoreCollector(bool up_to_isomorphism) : iso_(up_to_isomorphism) {}

    bool add(SimplicialComplex core, CollapseCertificate cert)
    {
        std::vector<Face> key = iso_ && core.num_vertices() <= kMaxCanonicalVertices ? canonical_form(core).facets
                                                                                     : core.facets();
        if (!seen_.insert(std::move(key)).second)
            return false;
        cores_.push_back({std::move(core), std::move(cert)});
        return true;
    }

    std::vector<StuckCore> take() { return std::move(cores_); }

private:
    bool iso_;
    std::set<std::vector<Face>> seen_;
    std::vector<StuckCore> cores_;
};

} // namespace

namespace {

bool reduced_z2_acyclic(const SimplicialComplex& k)
{
    if (k.empty())
        return false;
    const auto betti = homology_z2(k, true);
    return std::all_of(betti.begin(), betti.end(), [](int b) { return b == 0; });
}

/**
 * Enumerates the terminal states reachable under MaxDimFirst.
 *
 * Removing a top face t needs a ridge of t lying in no other surviving top
 * face, so which top faces can still go depends only on the surviving set.
 * A run of the top phase is therefore a terminal surviving set R plus one
 * ridge per removed top face, subject to the picks being acyclic (each pick's
 * other cofaces go first). Both are enumerated directly instead of walking
 * every interleaving. Below dimension 3 on a Z2-acyclic start, the triangle
 * core (largest triangle set without a free edge) is unique, and when it is
 * connected or empty it is the whole terminal complex.
 */
class TerminalWalker {
public:
    using Path = std::vector<std::pair<int, int>>;
    std::function<Action(const State&, const Path&)> on_terminal;

    TerminalWalker(const Lattice& lat, bool acyclic, std::uint64_t node_budget)
        : lat_(lat), acyclic_(acyclic), budget_(node_budget)
    {
    }

    /// True if a callback asked to stop.
    bool run(const State& s) { return walk(s, {}); }

    [[nodiscard]] bool out_of_budget() const { return out_of_budget_; }
    [[nodiscard]] const SearchStats& stats() const { return stats_; }

private:
    bool charge()
    {
        if (stats_.nodes_expanded >= budget_) {
            out_of_budget_ = true;
            return false;
        }
        ++stats_.nodes_expanded;
        return true;
    }

    bool walk(const State& s, const Path& prefix)
    {
        const int top = s.top_dim();
        if (top <= 2)
            return walk_low(s, prefix);
        return walk_top(s, top, prefix);
    }

    bool explore(const State& s, const Path& prefix)
    {
        Explorer ex(lat_, s, MoveRule::MaxDimFirst, budget_, &stats_);
        bool stop = false;
        ex.on_terminal = [&](State& t) {
            Path full = prefix;
            full.insert(full.end(), ex.path().begin(), ex.path().end());
            const Action a = on_terminal(t, full);
            stop = a == Action::Stop;
            return a;
        };
        ex.run(s.top_dim() + 1);
        if (ex.out_of_budget())
            out_of_budget_ = true;
        return stop;
    }

    /// Alive triangles of s that survive iterated removal of triangles with a free edge.
    std::vector<int> triangle_core(const State& s) const
    {
        std::vector<int> tris;
        for (std::size_t i = 0; i < lat_.faces.size(); ++i)
            if (lat_.faces[i].dim() == 2 && s.alive(static_cast<int>(i)))
                tris.push_back(static_cast<int>(i));
        std::unordered_map<int, int> degree;
        for (int t : tris)
            for (int e : lat_.down[t])
                ++degree[e];
        std::vector<char> gone(tris.size(), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < tris.size(); ++i) {
                if (gone[i])
                    continue;
                const auto& edges = lat_.down[tris[i]];
                if (std::none_of(edges.begin(), edges.end(), [&](int e) { return degree[e] == 1; }))
                    continue;
                gone[i] = 1;
                changed = true;
                for (int e : edges)
                    --degree[e];
            }
        }
        std::vector<int> core;
        for (std::size_t i = 0; i < tris.size(); ++i)
            if (!gone[i])
                core.push_back(tris[i]);
        return core;
    }

    bool core_connected(const std::vector<int>& core) const
    {
        if (core.empty())
            return true;
        std::vector<Face> facets;
        for (int t : core)
            facets.push_back(lat_.faces[t]);
        return SimplicialComplex::from_facets(facets).is_connected();
    }

    bool walk_low(const State& s, const Path& prefix)
    {
        if (!charge())
            return false;
        if (!acyclic_)
            return explore(s, prefix);
        auto core = triangle_core(s);
        if (!core_connected(core))
            return explore(s, prefix);
        // Unique terminal complex: settle it once per core.
        if (!seen_cores_.insert(core).second) {
            ++stats_.memo_hits;
            return false;
        }
        State t = s;
        auto tail = run_greedy(t, nullptr);
        Path full = prefix;
        full.insert(full.end(), tail.begin(), tail.end());
        return on_terminal(t, full) == Action::Stop;
    }

    bool walk_top(const State& s, int top, const Path& prefix)
    {
        std::vector<int> tops;
        for (std::size_t i = 0; i < lat_.faces.size(); ++i)
            if (lat_.faces[i].dim() == top && s.alive(static_cast<int>(i)))
                tops.push_back(static_cast<int>(i));
        if (tops.size() > 64)
            return explore(s, prefix);

        const int n = static_cast<int>(tops.size());
        std::unordered_map<int, int> local;
        for (int i = 0; i < n; ++i)
            local.emplace(tops[i], i);
        // Per top face: its ridges with the mask of top faces containing each.
        struct Ridge {
            int face;
            std::uint64_t cofaces;
        };
        std::vector<std::vector<Ridge>> ridges(n);
        for (int i = 0; i < n; ++i)
            for (int r : lat_.down[tops[i]]) {
                std::uint64_t mask = 0;
                for (int u : lat_.up[r])
                    if (auto it = local.find(u); it != local.end())
                        mask |= std::uint64_t{1} << it->second;
                ridges[i].push_back({r, mask});
            }
        const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

        // Terminal surviving sets, found by a memoised walk over surviving masks.
        std::vector<std::uint64_t> terminals;
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> stack{all};
        seen.insert(all);
        while (!stack.empty()) {
            const std::uint64_t r = stack.back();
            stack.pop_back();
            if (!charge())
                return false;
            bool terminal = true;
            for (int i = 0; i < n; ++i) {
                if (!((r >> i) & 1U))
                    continue;
                const std::uint64_t bit = std::uint64_t{1} << i;
                if (std::none_of(ridges[i].begin(), ridges[i].end(),
                                 [&](const Ridge& x) { return (x.cofaces & r) == bit; }))
                    continue;
                terminal = false;
                if (seen.insert(r & ~bit).second)
                    stack.push_back(r & ~bit);
            }
            if (terminal)
                terminals.push_back(r);
        }
        std::sort(terminals.begin(), terminals.end());

        for (std::uint64_t r : terminals) {
            // No top face can go at all: lower-dimensional moves only.
            if (r == all)
                return explore(s, prefix);
            if (assign_picks(s, tops, ridges, r, prefix))
                return true;
            if (out_of_budget_)
                return false;
        }
        return false;
    }

    template <typename Ridges>
    bool assign_picks(const State& s, const std::vector<int>& tops, const Ridges& ridges, std::uint64_t survivors,
                      const Path& prefix)
    {
        const int n = static_cast<int>(tops.size());
        std::vector<int> order;
        for (int i = 0; i < n; ++i)
            if (!((survivors >> i) & 1U))
                order.push_back(i);
        // Candidate picks: ridges whose cofaces are all removed.
        std::vector<std::vector<std::pair<int, std::uint64_t>>> options(n);
        for (int i : order)
            for (const auto& x : ridges[i])
                if ((x.cofaces & survivors) == 0)
                    options[i].emplace_back(x.face, x.cofaces & ~(std::uint64_t{1} << i));
        std::vector<std::uint64_t> reach(n, 0); // transitive "must go before" sets
        std::vector<int> pick(n, -1);
        std::vector<std::uint64_t> deps(n, 0);
        bool stop = false;

        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (stop || out_of_budget_)
                return;
            if (k == order.size()) {
                stop = finish_assignment(s, tops, order, pick, deps, prefix);
                return;
            }
            const int t = order[k];
            const std::uint64_t tbit = std::uint64_t{1} << t;
            for (const auto& [face, before] : options[t]) {
                std::uint64_t closure = before;
                for (int u = 0; u < n; ++u)
                    if ((before >> u) & 1U)
                        closure |= reach[u];
                if (closure & tbit)
                    continue; // cycle
                const auto saved = reach;
                for (int x = 0; x < n; ++x)
                    if (x == t || ((reach[x] >> t) & 1U))
                        reach[x] |= closure;
                pick[t] = face;
                deps[t] = before;
                rec(k + 1);
                reach = saved;
                if (stop || out_of_budget_)
                    return;
            }
        };
        rec(0);
        return stop;
    }

    bool finish_assignment(const State& s, const std::vector<int>& tops, const std::vector<int>& order,
                           const std::vector<int>& pick, const std::vector<std::uint64_t>& deps, const Path& prefix)
    {
        if (!charge())
            return false;
        State t = s;
        Path path = prefix;
        std::uint64_t done = 0;
        std::size_t placed = 0;
        while (placed < order.size()) {
            for (int i : order) {
                const std::uint64_t bit = std::uint64_t{1} << i;
                if ((done & bit) || (deps[i] & ~done))
                    continue;
                t.apply(pick[i], tops[i]);
                path.emplace_back(pick[i], tops[i]);
                done |= bit;
                ++placed;
            }
        }
        return walk(t, path);
    }

    struct CoreHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept
        {
            std::uint64_t h = 0;
            for (int x : v)
                h = mix(h ^ static_cast<std::uint64_t>(x));
            return static_cast<std::size_t>(h);
        }
    };

    const Lattice& lat_;
    bool acyclic_;
    std::uint64_t budget_;
    SearchStats stats_;
    bool out_of_budget_ = false;
    std::unordered_set<std::vector<int>, CoreHash> seen_cores_;
};

} // namespace

StuckCoreReport find_stuck_cores(const SimplicialComplex& k, StuckCoreMode mode, std::uint64_t seed, Budget budget)
{
    const Lattice lat(k);
    CoreCollector collector(mode.up_to_isomorphism);
    StuckCoreReport report;
    if (!mode.exhaustive) {
        std::mt19937_64 rng(seed);
        for (std::uint64_t run = 0; run < mode.samples; ++run) {
            State s(lat);
            const auto steps = run_greedy(s, &rng);
            ++report.stats.nodes_expanded;
            collector.add(s.to_complex(), to_certificate(lat, steps));
        }
        report.cores = collector.take();
        return report;
    }
    TerminalWalker walker(lat, reduced_z2_acyclic(k), budget.nodes);
    walker.on_terminal = [&](const State& s, const TerminalWalker::Path& path) {
        collector.add(s.to_complex(), to_certificate(lat, path));
        return Action::Continue;
    };
    walker.run(State(lat));
    report.stats = walker.stats();
    report.completeness = walker.out_of_budget() ? Verdict::Indeterminate : Verdict::Yes;
    report.cores = collector.take();
    return report;
}

CollapseOutcome is_extendably_collapsible(const SimplicialComplex& k, Budget budget)
{
    const Lattice lat(k);
    CollapseOutcome out;
    auto stuck_at = [&](const State& s, const TerminalWalker::Path& path) {
        out.verdict = Verdict::No;
        out.certificate = to_certificate(lat, path);
        out.end = s.to_complex();
    };
    if (!reduced_z2_acyclic(k)) {
        // Not contractible, so no sequence reaches a point.
        State s(lat);
        const auto steps = run_greedy(s, nullptr);
        if (s.alive_count() != 1 || k.empty()) {
            stuck_at(s, steps);
            return out;
        }
    }
    TerminalWalker walker(lat, true, budget.nodes);
    walker.on_terminal = [&](const State& s, const TerminalWalker::Path& path) {
        if (s.alive_count() == 1)
            return Action::Continue;
        stuck_at(s, path);
        return Action::Stop;
    };
    const bool found = walker.run(State(lat));
    out.stats = walker.stats();
    if (!found)
        out.verdict = walker.out_of_budget() ? Verdict::Indeterminate : Verdict::Yes;
    return out;
}

bool greedy_equals_search_dim2(const SimplicialComplex& k)
{
    if (k.dim() > 2)
        throw std::invalid_argument("greedy_equals_search_dim2: complex has dimension > 2");
    const bool greedy = greedy_collapse(k).core.num_faces() == 1;
    const auto full = exhaustive_to_point(k, Budget{}, ExhaustiveOptions{.dim2_shortcut = false});
    if (full.verdict == Verdict::Indeterminate)
        return false;
    return greedy == (full.verdict == Verdict::Yes);
}

} // namespace collapsible
