#include "corrtree/mst.hpp"

#include <algorithm>
#include <tuple>

#include "corrtree/errors.hpp"

namespace corrtree {

double SpanningTree::total_distance() const {
    double total = 0.0;
    for (const auto& e : edges) total += e.distance;
    return total;
}

namespace {

SpanningTree kruskal_impl(const DistanceMatrix& dist, const CorrelationMatrix* corr) {
    const std::size_t n = dist.symbols.size();
    if (n == 0)
        throw ValidationError("cannot build a spanning tree over 0 nodes");

    SpanningTree tree;
    tree.symbols = dist.symbols;
    if (n == 1) return tree;

    struct Candidate {
        double distance;
        std::size_t u, v;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(n * (n - 1) / 2);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            candidates.push_back({dist.d(u, v), u, v});
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.distance, a.u, a.v) < std::tie(b.distance, b.u, b.v);
    });

    UnionFind uf(n);
    tree.edges.reserve(n - 1);
    for (const auto& c : candidates) {
        if (!uf.unite(c.u, c.v)) continue;
        TreeEdge edge;
        edge.u = c.u;
        edge.v = c.v;
        edge.distance = c.distance;
        edge.correlation = corr ? corr->c(c.u, c.v) : 1.0 - c.distance * c.distance / 2.0;
        tree.edges.push_back(edge);
        if (tree.edges.size() == n - 1) break;
    }
    return tree;
}

} // namespace

SpanningTree kruskal_mst(const DistanceMatrix& dist) {
    return kruskal_impl(dist, nullptr);
}

SpanningTree kruskal_mst(const DistanceMatrix& dist, const CorrelationMatrix& corr) {
    return kruskal_impl(dist, &corr);
}

double tree_path_max(const SpanningTree& tree, std::size_t i, std::size_t j) {
    const std::size_t n = tree.node_count();
    if (i >= n || j >= n)
        throw ValidationError("tree_path_max: node index out of range");
    if (i == j)
        throw ValidationError("tree_path_max: endpoints must differ");

    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (const auto& e : tree.edges) {
        adj[e.u].emplace_back(e.v, e.distance);
        adj[e.v].emplace_back(e.u, e.distance);
    }

    // Iterative DFS from i; max edge weight along the discovered path.
    std::vector<double> best(n, -1.0);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    best[i] = 0.0;
    while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        for (const auto& [next, w] : adj[cur]) {
            if (seen[next]) continue;
            seen[next] = true;
            best[next] = std::max(best[cur], w);
            stack.push_back(next);
        }
    }
    if (!seen[j])
        throw ValidationError("tree_path_max: nodes are not connected");
    return best[j];
}

std::vector<std::size_t> degree_profile(const SpanningTree& tree) {
    std::vector<std::size_t> degrees(tree.node_count(), 0);
    for (const auto& e : tree.edges) {
        ++degrees[e.u];
        ++degrees[e.v];
    }
    return degrees;
}

} // namespace corrtree
