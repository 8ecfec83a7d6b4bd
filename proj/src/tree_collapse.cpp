#include <collapsible/tree_collapse.hpp>

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

namespace collapsible {

namespace {

DualGraph checked_dual_graph(const SimplicialComplex& m)
{
    if (m.empty() || !m.is_pure())
        throw TreeError("dual tree: complex must be pure and nonempty");
    for (Face r : m.faces(m.dim() - 1))
        if (m.ridge_degree(r) > 2)
            throw TreeError("dual tree: ridge " + r.to_string() + " lies in more than two facets");
    auto g = m.dual_graph();
    if (!g.is_connected())
        throw TreeError("dual tree: dual graph is disconnected");
    return g;
}

/// Union-find with undo, for the include/exclude enumeration.
class UndoUnionFind {
public:
    explicit UndoUnionFind(int n) : parent_(n), size_(n, 1)
    {
        for (int i = 0; i < n; ++i)
            parent_[i] = i;
    }

    int find(int x) const
    {
        while (parent_[x] != x)
            x = parent_[x];
        return x;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
    }

    void undo()
    {
        const int b = history_.back();
        history_.pop_back();
        size_[parent_[b]] -= size_[b];
        parent_[b] = b;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

} // namespace

std::vector<Face> DualSpanningTree::ridges() const
{
    std::vector<Face> out;
    for (const auto& e : edges)
        out.push_back(e.ridge);
    std::sort(out.begin(), out.end());
    return out;
}

Verdict for_each_spanning_tree(const SimplicialComplex& m, const std::function<bool(const DualSpanningTree&)>& visit,
                               Budget budget)
{
    const auto g = checked_dual_graph(m);
    const int nodes = static_cast<int>(g.nodes.size());
    const std::size_t num_edges = g.edges.size();
    UndoUnionFind uf(nodes);
    std::vector<bool> usable(num_edges, true);
    DualSpanningTree tree;
    std::uint64_t spent = 0;
    bool exhausted = false;
    bool stopped = false;

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (stopped || exhausted)
            return;
        if (spent >= budget.nodes) {
            exhausted = true;
            return;
        }
        ++spent;
        if (static_cast<int>(tree.edges.size()) == nodes - 1) {
            stopped = !visit(tree);
            return;
        }
        if (i == num_edges)
            return;
        const auto& e = g.edges[i];
        if (uf.find(e.a) != uf.find(e.b)) {
            uf.unite(e.a, e.b);
            tree.edges.push_back(e);
            rec(i + 1);
            tree.edges.pop_back();
            uf.undo();
        }
        // Leaving the edge out is only allowed when it is not a bridge.
        usable[i] = false;
        if (g.is_connected(usable))
            rec(i + 1);
        usable[i] = true;
    };
    rec(0);
    return exhausted ? Verdict::Indeterminate : Verdict::Yes;
}

TreeCount count_spanning_trees(const SimplicialComplex& m, Budget budget)
{
    TreeCount out;
    out.completeness = for_each_spanning_tree(
        m,
        [&](const DualSpanningTree&) {
            ++out.count;
            return true;
        },
        budget);
    return out;
}

std::vector<DualSpanningTree> sample_spanning_trees(const SimplicialComplex& m, std::size_t count, std::uint64_t seed)
{
    const auto g = checked_dual_graph(m);
    const int nodes = static_cast<int>(g.nodes.size());
    std::vector<std::vector<int>> incident(nodes);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        incident[g.edges[i].a].push_back(static_cast<int>(i));
        incident[g.edges[i].b].push_back(static_cast<int>(i));
    }
    std::mt19937_64 rng(seed);
    std::vector<DualSpanningTree> out;
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<char> in_tree(nodes, 0);
        std::vector<int> next(nodes, -1);
        in_tree[0] = 1;
        DualSpanningTree tree;
        for (int start = 1; start < nodes; ++start) {
            for (int u = start; !in_tree[u];) {
                std::uniform_int_distribution<std::size_t> pick(0, incident[u].size() - 1);
                next[u] = incident[u][pick(rng)];
                const auto& e = g.edges[next[u]];
                u = e.a == u ? e.b : e.a;
            }
            for (int u = start; !in_tree[u];) {
                in_tree[u] = 1;
                const auto& e = g.edges[next[u]];
                tree.edges.push_back(e);
                u = e.a == u ? e.b : e.a;
            }
        }
        out.push_back(std::move(tree));
    }
    return out;
}

SimplicialComplex tree_complex(const SimplicialComplex& m, const DualSpanningTree& t)
{
    const auto perforated = t.ridges();
    const int d = m.dim();
    std::vector<Face> faces;
    for (Face r : m.faces(d - 1))
        if (!std::binary_search(perforated.begin(), perforated.end(), r))
            faces.push_back(r);
    if (d >= 2)
        for (Face f : m.faces(d - 2))
            faces.push_back(f);
    return SimplicialComplex::from_facets(faces);
}

SimplicialComplex delete_facet_open(const SimplicialComplex& m, Face f)
{
    const Face removed[] = {f};
    return m.remove_facets_open(removed);
}

CollapseCertificate tree_directed_collapse(const SimplicialComplex& m, Face f, const DualSpanningTree& t)
{
    const auto g = checked_dual_graph(m);
    const auto it = std::find(g.nodes.begin(), g.nodes.end(), f);
    if (it == g.nodes.end())
        throw TreeError("tree_directed_collapse: " + f.to_string() + " is not a facet");
    if (t.edges.size() + 1 != g.nodes.size())
        throw TreeError("tree_directed_collapse: tree has the wrong number of edges");
    for (const auto& e : t.edges)
        if (e.ridge.size() != f.size() - 1 ||
            !(e.ridge.is_subset_of(g.nodes.at(e.a)) && e.ridge.is_subset_of(g.nodes.at(e.b))))
            throw TreeError("tree_directed_collapse: edge " + e.ridge.to_string() + " is not a dual edge");

    std::vector<char> gone(g.nodes.size(), 0);
    gone[it - g.nodes.begin()] = 1;
    std::vector<char> used(t.edges.size(), 0);
    CollapseCertificate cert;
    for (std::size_t step = 0; step < t.edges.size(); ++step) {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < t.edges.size(); ++i) {
            const auto& e = t.edges[i];
            if (!used[i] && gone[e.a] != gone[e.b] && (!best || e.ridge < t.edges[*best].ridge))
                best = i;
        }
        if (!best)
            throw TreeError("tree_directed_collapse: edges do not form a spanning tree");
        const auto& e = t.edges[*best];
        const int next = gone[e.a] ? e.b : e.a;
        used[*best] = 1;
        gone[next] = 1;
        cert.steps.push_back({e.ridge, g.nodes[next]});
    }
    return cert;
}

FacetIndependenceReport facet_independence_experiment(const SimplicialComplex& m, Budget budget)
{
    FacetIndependenceReport out;
    for (Face f : m.facets()) {
        const auto v = collapse_to_point(delete_facet_open(m, f), Strategy::ExhaustiveMemoized, 0, budget).verdict;
        out.facets.push_back(f);
        out.verdicts.push_back(v);
        out.has_indeterminate = out.has_indeterminate || v == Verdict::Indeterminate;
    }
    out.constant = std::adjacent_find(out.verdicts.begin(), out.verdicts.end(), std::not_equal_to<>()) ==
                   out.verdicts.end();
    return out;
}

std::optional<DualSpanningTree> find_tree_avoiding(const SimplicialComplex& m, std::span<const Face> protected_ridges)
{
    const auto g = checked_dual_graph(m);
    const std::unordered_set<Face> avoid(protected_ridges.begin(), protected_ridges.end());
    std::vector<std::vector<int>> incident(g.nodes.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (!avoid.contains(g.edges[i].ridge)) {
            incident[g.edges[i].a].push_back(static_cast<int>(i));
            incident[g.edges[i].b].push_back(static_cast<int>(i));
        }
    std::vector<char> seen(g.nodes.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    DualSpanningTree tree;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int i : incident[u]) {
            const auto& e = g.edges[i];
            const int v = e.a == u ? e.b : e.a;
            if (!seen[v]) {
                seen[v] = 1;
                tree.edges.push_back(e);
                queue.push_back(v);
            }
        }
    }
    if (tree.edges.size() + 1 != g.nodes.size())
        return std::nullopt;
    return tree;
}

} // namespace collapsible
