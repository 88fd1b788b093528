#include "corrtree/hierarchy.hpp"

#include <algorithm>
#include <limits>

#include "corrtree/errors.hpp"
#include "corrtree/mst.hpp"

namespace corrtree {

namespace {

Dendrogram agglomerate(const DistanceMatrix& dist, Linkage linkage) {
    const std::size_t n = dist.symbols.size();
    if (n < 2)
        throw ValidationError("hierarchical clustering needs at least 2 symbols");

    Dendrogram dendro;
    dendro.symbols = dist.symbols;
    dendro.linkage = linkage;

    const std::size_t total = 2 * n - 1;
    // Working inter-cluster distances over all cluster ids (leaves + internals).
    Matrix w(total, total);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w(i, j) = dist.d(i, j);

    std::vector<std::size_t> min_member(total), size(total);
    std::vector<bool> active(total, false);
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i) {
        min_member[i] = i;
        size[i] = 1;
        active[i] = true;
        ids.push_back(i);
    }

    for (std::size_t step = 0; step < n - 1; ++step) {
        // Global minimum over active pairs. Ties resolved by the pair of
        // smallest member ids: (min of both, then the other cluster's min).
        double best = std::numeric_limits<double>::infinity();
        std::size_t bl = 0, br = 0;
        std::pair<std::size_t, std::size_t> best_key{total, total};
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                const std::size_t ca = ids[a], cb = ids[b];
                const double d = w(ca, cb);
                const auto key = std::minmax(min_member[ca], min_member[cb]);
                if (d < best || (d == best && key < best_key)) {
                    best = d;
                    best_key = key;
                    bl = ca;
                    br = cb;
                }
            }
        }

        if (min_member[br] < min_member[bl]) std::swap(bl, br);
        const std::size_t id = n + step;
        dendro.merges.push_back({bl, br, best, id});

        min_member[id] = std::min(min_member[bl], min_member[br]);
        size[id] = size[bl] + size[br];
        for (std::size_t other : ids) {
            if (other == bl || other == br) continue;
            double d;
            if (linkage == Linkage::single) {
                d = std::min(w(bl, other), w(br, other));
            } else {
                // UPGMA: exact cross-pair counts.
                d = (static_cast<double>(size[bl]) * w(bl, other) +
                     static_cast<double>(size[br]) * w(br, other)) /
                    static_cast<double>(size[bl] + size[br]);
            }
            w(id, other) = d;
            w(other, id) = d;
        }

        active[bl] = false;
        active[br] = false;
        active[id] = true;
        std::erase_if(ids, [&](std::size_t c) { return !active[c]; });
        ids.push_back(id);
    }
    return dendro;
}

std::vector<std::vector<std::size_t>> cluster_members(const Dendrogram& dendro) {
    const std::size_t n = dendro.leaf_count();
    std::vector<std::vector<std::size_t>> members(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) members[i] = {i};
    for (const auto& m : dendro.merges) {
        members[m.id] = members[m.left];
        members[m.id].insert(members[m.id].end(), members[m.right].begin(),
                             members[m.right].end());
    }
    return members;
}

} // namespace

Dendrogram single_linkage(const DistanceMatrix& dist) {
    return agglomerate(dist, Linkage::single);
}

Dendrogram average_linkage(const DistanceMatrix& dist) {
    return agglomerate(dist, Linkage::average);
}

UltrametricMatrix cophenetic_matrix(const Dendrogram& dendro) {
    const std::size_t n = dendro.leaf_count();
    if (dendro.merges.size() + 1 != n)
        throw ValidationError("dendrogram must have exactly N-1 merges");

    UltrametricMatrix ultra;
    ultra.symbols = dendro.symbols;
    ultra.u = Matrix(n, n);

    const auto members = cluster_members(dendro);
    for (const auto& m : dendro.merges)
        for (std::size_t x : members[m.left])
            for (std::size_t y : members[m.right]) {
                ultra.u(x, y) = m.height;
                ultra.u(y, x) = m.height;
            }
    return ultra;
}

std::vector<std::vector<std::string>> cut_clusters(const Dendrogram& dendro, std::size_t k) {
    const std::size_t n = dendro.leaf_count();
    if (k < 1 || k > n)
        throw ValidationError("cluster count k must be in [1, N]");

    UnionFind uf(n);
    const auto members = cluster_members(dendro);
    // Undo the last k-1 merges: apply only the first N-k.
    for (std::size_t s = 0; s + k < n; ++s)
        uf.unite(members[dendro.merges[s].left].front(),
                 members[dendro.merges[s].right].front());

    std::vector<std::vector<std::size_t>> by_root(n);
    for (std::size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);

    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t root = 0; root < n; ++root)
        if (!by_root[root].empty()) groups.push_back(std::move(by_root[root]));
    // Members are collected in ascending index order, so front() is the minimum.
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<std::vector<std::string>> clusters;
    for (const auto& group : groups) {
        std::vector<std::string> cluster;
        for (std::size_t i : group) cluster.push_back(dendro.symbols[i]);
        clusters.push_back(std::move(cluster));
    }
    return clusters;
}

} // namespace corrtree
