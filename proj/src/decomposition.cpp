#include "chaingrid/decomposition.hpp"

#include <algorithm>

namespace chaingrid {

namespace {

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Components of the graph on `verts` whose adjacency is the predicate;
// ordered by lowest vertex, each sorted.
template <typename Adj>
std::vector<std::vector<int>> subset_components(const std::vector<int>& verts, Adj adj) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> done(verts.size(), false);
    for (size_t s = 0; s < verts.size(); ++s) {
        if (done[s]) continue;
        std::vector<size_t> stack{s};
        std::vector<int> comp;
        done[s] = true;
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            comp.push_back(verts[i]);
            for (size_t j = 0; j < verts.size(); ++j)
                if (!done[j] && adj(verts[i], verts[j])) {
                    done[j] = true;
                    stack.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

struct NodeContext {
    const Graph* g;
    const std::vector<int>* side;  // 0 = x part, 1 = y part
};

bool skew_left_valid(const NodeContext& ctx, const std::vector<int>& verts, uint32_t mask) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j) {
            int u = verts[i], v = verts[j];
            if ((*ctx.side)[u] != 0 || (*ctx.side)[v] != 1) continue;
            bool u_left = (mask >> i) & 1, v_left = (mask >> j) & 1;
            if (u_left && !v_left && !ctx.g->adjacent(u, v)) return false;  // X1*Y2 complete
            if (!u_left && v_left && ctx.g->adjacent(u, v)) return false;   // X2*Y1 empty
        }
    return true;
}

// Lexicographically least valid left set for a skew join, or empty.
std::vector<int> find_skew_left(const NodeContext& ctx, const std::vector<int>& verts) {
    const size_t m = verts.size();
    if (m > 20) throw capacity_error("canonical_decompose: skew-join scan limited to 20 vertices");
    std::vector<int> best;
    for (uint32_t mask = 1; mask + 1 < (uint32_t{1} << m); ++mask) {
        if (!skew_left_valid(ctx, verts, mask)) continue;
        std::vector<int> left;
        for (size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) left.push_back(verts[i]);
        if (best.empty() || std::lexicographical_compare(left.begin(), left.end(),
                                                         best.begin(), best.end()))
            best = std::move(left);
    }
    return best;
}

std::unique_ptr<DecompositionTree> decompose_node(const NodeContext& ctx,
                                                  const std::vector<int>& verts) {
    auto node = std::make_unique<DecompositionTree>();
    for (int v : verts) ((*ctx.side)[v] == 0 ? node->part_x : node->part_y).push_back(v);
    if (verts.size() <= 1) {
        node->leaf = true;
        node->vertex = verts.empty() ? -1 : verts[0];
        return node;
    }

    auto split = [&](DecompOp op, const std::vector<int>& left) {
        std::vector<int> right;
        std::set_difference(verts.begin(), verts.end(), left.begin(), left.end(),
                            std::back_inserter(right));
        node->op = op;
        node->left = decompose_node(ctx, left);
        node->right = decompose_node(ctx, right);
        return std::move(node);
    };

    auto comps = subset_components(verts, [&](int u, int v) { return ctx.g->adjacent(u, v); });
    if (comps.size() > 1) return split(DecompOp::DisjointUnion, comps[0]);

    auto co_comps = subset_components(verts, [&](int u, int v) {
        return (*ctx.side)[u] != (*ctx.side)[v] && !ctx.g->adjacent(u, v);
    });
    if (co_comps.size() > 1) return split(DecompOp::Join, co_comps[0]);

    std::vector<int> left = find_skew_left(ctx, verts);
    if (!left.empty()) return split(DecompOp::SkewJoin, left);

    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (ctx.g->adjacent(verts[i], verts[j]))
                node->prime_edges.emplace_back(verts[i], verts[j]);
    return node;  // prime: no children, edges kept verbatim
}

std::vector<int> side_map(const Graph& g, const Bipartition& b) {
    if (!bipartition_valid(g, b)) throw input_error("canonical_decompose: invalid bipartition");
    std::vector<int> side(g.order(), -1);
    for (int v : b.part_x) side[v] = 0;
    for (int v : b.part_y) side[v] = 1;
    return side;
}

}  // namespace

PartedSubgraph compose(DecompOp op, const PartedSubgraph& g1, const PartedSubgraph& g2) {
    if (g1.graph.order() != g2.graph.order())
        throw input_error("compose: operands live in different universes");
    const int n = g1.graph.order();
    std::vector<int> owner(n, 0);
    auto claim = [&](const std::vector<int>& vs, int who) {
        for (int v : vs) {
            if (v < 0 || v >= n) throw input_error("compose: vertex out of range");
            if (owner[v] != 0) throw input_error("compose: overlapping vertex sets");
            owner[v] = who;
        }
    };
    claim(g1.part_x, 1);
    claim(g1.part_y, 1);
    claim(g2.part_x, 2);
    claim(g2.part_y, 2);

    PartedSubgraph out;
    out.graph = Graph(n);
    for (auto [u, v] : g1.graph.edges()) out.graph.add_edge(u, v);
    for (auto [u, v] : g2.graph.edges()) out.graph.add_edge(u, v);
    if (op == DecompOp::Join || op == DecompOp::SkewJoin)
        for (int x : g1.part_x)
            for (int y : g2.part_y) out.graph.add_edge(x, y);
    if (op == DecompOp::Join)
        for (int x : g2.part_x)
            for (int y : g1.part_y) out.graph.add_edge(x, y);
    out.part_x = sorted_union(g1.part_x, g2.part_x);
    out.part_y = sorted_union(g1.part_y, g2.part_y);
    return out;
}

PartedSubgraph recompose(const DecompositionTree& tree, int n) {
    if (tree.leaf || !tree.left) {
        PartedSubgraph out;
        out.graph = Graph(n);
        out.part_x = tree.part_x;
        out.part_y = tree.part_y;
        for (auto [u, v] : tree.prime_edges) out.graph.add_edge(u, v);
        return out;
    }
    return compose(tree.op, recompose(*tree.left, n), recompose(*tree.right, n));
}

std::unique_ptr<DecompositionTree> canonical_decompose(const Graph& g, const Bipartition& b) {
    std::vector<int> side = side_map(g, b);
    std::vector<int> verts(g.order());
    for (int v = 0; v < g.order(); ++v) verts[v] = v;
    NodeContext ctx{&g, &side};
    return decompose_node(ctx, verts);
}

bool is_canonically_prime(const Graph& g, const Bipartition& b) {
    if (g.order() <= 1) return true;
    std::vector<int> side = side_map(g, b);
    std::vector<int> verts(g.order());
    for (int v = 0; v < g.order(); ++v) verts[v] = v;
    NodeContext ctx{&g, &side};
    if (subset_components(verts, [&](int u, int v) { return g.adjacent(u, v); }).size() > 1)
        return false;
    if (subset_components(verts, [&](int u, int v) {
            return side[u] != side[v] && !g.adjacent(u, v);
        }).size() > 1)
        return false;
    return find_skew_left(ctx, verts).empty();
}

bool is_canonically_prime_brute_force(const Graph& g, const Bipartition& b) {
    const int n = g.order();
    if (n > 20) throw capacity_error("is_canonically_prime_brute_force: n > 20");
    if (n <= 1) return true;
    std::vector<int> side = side_map(g, b);
    for (uint32_t mask = 1; mask + 1 < (uint32_t{1} << n); ++mask) {
        bool du = true, join = true, skew = true;
        for (int u = 0; u < n && (du || join || skew); ++u)
            for (int v = 0; v < n; ++v) {
                if (side[u] != 0 || side[v] != 1) continue;
                bool ul = (mask >> u) & 1, vl = (mask >> v) & 1;
                if (ul == vl) continue;
                bool e = g.adjacent(u, v);
                if (e) du = false;
                if (!e) join = false;
                if (ul && !vl && !e) skew = false;  // X1*Y2 must be complete
                if (!ul && vl && e) skew = false;   // X2*Y1 must be empty
            }
        if (du || join || skew) return false;
    }
    return true;
}

std::unique_ptr<DecompositionTree> split_canonical_decompose(const Graph& g,
                                                             const SplitPartition& p) {
    Graph star = split_bipartite_transform(g, p);
    return canonical_decompose(star, Bipartition{p.clique, p.independent});
}

bool is_split_canonically_prime(const Graph& g, const SplitPartition& p) {
    Graph star = split_bipartite_transform(g, p);
    return is_canonically_prime(star, Bipartition{p.clique, p.independent});
}

}  // namespace chaingrid
