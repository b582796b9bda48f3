#include "chaingrid/graph.hpp"

#include <algorithm>
#include <numeric>

namespace chaingrid {

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<int> Graph::neighbours(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::neighbours_in(int v, const std::vector<int>& within) const {
    std::vector<int> out;
    for (int u : within)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

bool Embedding::valid(const Graph& pattern, const Graph& host) const {
    if (pattern_order != pattern.order()) return false;
    if (static_cast<int>(map.size()) != pattern_order) return false;
    std::vector<int> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : map)
        if (v < 0 || v >= host.order()) return false;
    for (int u = 0; u < pattern_order; ++u)
        for (int v = u + 1; v < pattern_order; ++v)
            if (pattern.adjacent(u, v) != host.adjacent(map[u], map[v])) return false;
    return true;
}

LabelPoset LabelPoset::antichain(int k) {
    LabelPoset p;
    p.size = k;
    p.leq.assign(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) p.leq[i][i] = true;
    return p;
}

LabelPoset LabelPoset::single() { return antichain(1); }

bool LabelPoset::validate() const {
    if (static_cast<int>(leq.size()) != size) return false;
    for (int a = 0; a < size; ++a) {
        if (static_cast<int>(leq[a].size()) != size) return false;
        if (!leq[a][a]) return false;
    }
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            for (int c = 0; c < size; ++c)
                if (leq[a][b] && leq[b][c] && !leq[a][c]) return false;
    return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& u) {
    for (int v : u)
        if (v < 0 || v >= g.order()) throw input_error("induced_subgraph: vertex out of range");
    Graph out(static_cast<int>(u.size()));
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            if (g.adjacent(u[i], u[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

namespace {

// Pattern vertex order for the backtracking search: greedy
// most-constrained-first. Start from the vertex of maximum degree, then
// repeatedly take the unplaced vertex with the most already-placed
// neighbours (ties by degree, then by index).
std::vector<int> search_order(const Graph& pattern) {
    const int m = pattern.order();
    std::vector<int> order;
    std::vector<bool> placed(m, false);
    for (int step = 0; step < m; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < m; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order)
                if (pattern.adjacent(v, u)) ++links;
            int deg = pattern.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    return order;
}

struct EmbedSearch {
    const Graph& pattern;
    const Graph& host;
    std::vector<int> order;      // pattern vertices in placement order
    std::vector<int> assign;     // assign[pattern vertex] = host vertex or -1
    std::vector<bool> used;      // host vertices in use
    size_t budget;
    std::vector<Embedding>* out; // when null, stop at the first hit
    std::optional<Embedding> first;

    EmbedSearch(const Graph& p, const Graph& h, size_t b, std::vector<Embedding>* o)
        : pattern(p), host(h), order(search_order(p)),
          assign(p.order(), -1), used(h.order(), false), budget(b), out(o) {}

    bool feasible(int pv, int hv) const {
        for (int u = 0; u < pattern.order(); ++u) {
            if (assign[u] < 0) continue;
            if (pattern.adjacent(pv, u) != host.adjacent(hv, assign[u])) return false;
        }
        return true;
    }

    // Returns false to abort the whole search (budget hit or first found).
    bool recurse(size_t depth) {
        if (depth == order.size()) {
            Embedding e{pattern.order(), assign};
            if (out) {
                out->push_back(e);
                return out->size() < budget;
            }
            first = e;
            return false;
        }
        int pv = order[depth];
        for (int hv = 0; hv < host.order(); ++hv) {
            if (used[hv] || !feasible(pv, hv)) continue;
            assign[pv] = hv;
            used[hv] = true;
            bool keep = recurse(depth + 1);
            used[hv] = false;
            assign[pv] = -1;
            if (!keep) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host) {
    if (pattern.order() == 0) return Embedding{0, {}};
    if (pattern.order() > host.order()) return std::nullopt;
    EmbedSearch s(pattern, host, 1, nullptr);
    s.recurse(0);
    return s.first;
}

std::vector<Embedding> enumerate_embeddings(const Graph& pattern, const Graph& host,
                                            size_t budget) {
    std::vector<Embedding> out;
    if (budget == 0) return out;
    if (pattern.order() == 0) {
        out.push_back(Embedding{0, {}});
        return out;
    }
    if (pattern.order() > host.order()) return out;
    EmbedSearch s(pattern, host, budget, &out);
    s.recurse(0);
    return out;
}

bool bipartition_valid(const Graph& g, const Bipartition& b) {
    std::vector<int> side(g.order(), -1);
    for (int v : b.part_x) {
        if (v < 0 || v >= g.order() || side[v] != -1) return false;
        side[v] = 0;
    }
    for (int v : b.part_y) {
        if (v < 0 || v >= g.order() || side[v] != -1) return false;
        side[v] = 1;
    }
    for (int v = 0; v < g.order(); ++v)
        if (side[v] == -1) return false;
    for (auto [u, v] : g.edges())
        if (side[u] == side[v]) return false;
    return true;
}

Graph bipartite_complement(const Graph& g, const Bipartition& b) {
    if (!bipartition_valid(g, b)) throw input_error("bipartite_complement: invalid bipartition");
    Graph out(g.order());
    for (int x : b.part_x)
        for (int y : b.part_y)
            if (!g.adjacent(x, y)) out.add_edge(x, y);
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    const int n = g.order();
    if (n != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg(n), dh(n);
    for (int v = 0; v < n; ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return false;
    }
    // Backtracking: map vertices of g (most-constrained-first order) onto
    // vertices of h of equal degree, preserving adjacency.
    std::vector<int> order = [&] {
        std::vector<int> o(n);
        std::iota(o.begin(), o.end(), 0);
        std::sort(o.begin(), o.end(), [&](int a, int b) {
            return dg[a] > dg[b] || (dg[a] == dg[b] && a < b);
        });
        return o;
    }();
    std::vector<int> assign(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        int gv = order[depth];
        for (int hv = 0; hv < n; ++hv) {
            if (used[hv] || dh[hv] != dg[gv]) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (assign[u] >= 0 && g.adjacent(gv, u) != h.adjacent(hv, assign[u]))
                    ok = false;
            if (!ok) continue;
            assign[gv] = hv;
            used[hv] = true;
            if (self(self, depth + 1)) return true;
            used[hv] = false;
            assign[gv] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(g.order(), false);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u = 0; u < g.order(); ++u)
                if (g.adjacent(v, u) && !seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

std::optional<Bipartition> find_bipartition(const Graph& g) {
    std::vector<int> colour(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < g.order(); ++u) {
                if (!g.adjacent(v, u)) continue;
                if (colour[u] == -1) {
                    colour[u] = 1 - colour[v];
                    stack.push_back(u);
                } else if (colour[u] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < g.order(); ++v)
        (colour[v] == 0 ? b.part_x : b.part_y).push_back(v);
    return b;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph matching_graph(int k) {
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

}  // namespace chaingrid
