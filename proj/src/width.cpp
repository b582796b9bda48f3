#include "chaingrid/width.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace chaingrid {

namespace {

uint32_t row_mask32(const Graph& g, int v) {
    // adjacency row packed into 32 bits (callers guarantee n <= 32)
    return static_cast<uint32_t>(g.row(v)[0]);
}

int gf2_rank(std::vector<uint64_t> rows) {
    int rank = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i]) continue;
        uint64_t pivot_bit = rows[i] & (~rows[i] + 1);
        ++rank;
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & pivot_bit) rows[j] ^= rows[i];
    }
    return rank;
}

}  // namespace

int cutrank_mask(const Graph& g, uint32_t a_mask) {
    const int n = g.order();
    if (n > 32) throw capacity_error("cutrank_mask: n > 32");
    uint32_t outside = (n == 32 ? ~uint32_t{0} : ((uint32_t{1} << n) - 1)) & ~a_mask;
    std::vector<uint64_t> rows;
    for (int v = 0; v < n; ++v)
        if ((a_mask >> v) & 1) rows.push_back(row_mask32(g, v) & outside);
    return gf2_rank(std::move(rows));
}

int cutrank(const Graph& g, const std::vector<int>& a) {
    uint32_t mask = 0;
    for (int v : a) {
        if (v < 0 || v >= g.order()) throw input_error("cutrank: vertex out of range");
        mask |= uint32_t{1} << v;
    }
    return cutrank_mask(g, mask);
}

RankWidthResult rank_width(const Graph& g, int max_vertices) {
    const int n = g.order();
    if (n > max_vertices) throw capacity_error("rank_width: over vertex ceiling");
    RankWidthResult result;
    if (n <= 1) return result;  // width 0, no witness tree needed below

    const uint32_t full = (uint32_t{1} << n) - 1;
    std::vector<int> cut(full + 1), best(full + 1, 0);
    std::vector<uint32_t> split(full + 1, 0);
    for (uint32_t s = 1; s <= full; ++s) cut[s] = cutrank_mask(g, s);
    for (uint32_t s = 1; s <= full; ++s) {
        if (__builtin_popcount(s) == 1) {
            best[s] = cut[s];
            continue;
        }
        int inner = INT32_MAX;
        uint32_t low = s & (~s + 1);  // fix lowest bit on one side to halve the scan
        for (uint32_t a = (s - 1) & s; a; a = (a - 1) & s) {
            if (!(a & low)) continue;
            int m = std::max(best[a], best[s & ~a]);
            if (m < inner) {
                inner = m;
                split[s] = a;
            }
        }
        best[s] = std::max(cut[s], inner);
    }
    result.width = best[full];

    auto build = [&](auto&& self, uint32_t s) -> std::unique_ptr<RankDecomposition> {
        auto node = std::make_unique<RankDecomposition>();
        node->subset = s;
        node->width = best[s];
        if (__builtin_popcount(s) >= 2) {
            node->left = self(self, split[s]);
            node->right = self(self, s & ~split[s]);
        }
        return node;
    };
    result.witness = build(build, full);
    return result;
}

// --- clique-width ------------------------------------------------------

std::unique_ptr<CwExpr> CwExpr::create(int vertex, int label) {
    auto e = std::make_unique<CwExpr>();
    e->kind = Kind::Create;
    e->vertex = vertex;
    e->a = label;
    return e;
}

std::unique_ptr<CwExpr> CwExpr::join(int la, int lb, std::unique_ptr<CwExpr> sub) {
    auto e = std::make_unique<CwExpr>();
    e->kind = Kind::Join;
    e->a = la;
    e->b = lb;
    e->left = std::move(sub);
    return e;
}

std::unique_ptr<CwExpr> CwExpr::relabel(int from, int to, std::unique_ptr<CwExpr> sub) {
    auto e = std::make_unique<CwExpr>();
    e->kind = Kind::Relabel;
    e->a = from;
    e->b = to;
    e->left = std::move(sub);
    return e;
}

std::unique_ptr<CwExpr> CwExpr::unite(std::unique_ptr<CwExpr> l, std::unique_ptr<CwExpr> r) {
    auto e = std::make_unique<CwExpr>();
    e->kind = Kind::Union;
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

LabelledGraph evaluate_cw_expr(const CwExpr& expr, int n) {
    LabelledGraph out;
    out.graph = Graph(n);
    out.labels.assign(n, 0);
    // Each recursion returns the vertices of its subterm; relabels and
    // joins act on that scope only.
    auto walk = [&](auto&& self, const CwExpr& e) -> std::vector<int> {
        switch (e.kind) {
            case CwExpr::Kind::Create:
                if (e.vertex < 0 || e.vertex >= n)
                    throw input_error("evaluate_cw_expr: vertex out of range");
                if (out.labels[e.vertex] != 0)
                    throw input_error("evaluate_cw_expr: vertex created twice");
                out.labels[e.vertex] = e.a;
                return {e.vertex};
            case CwExpr::Kind::Union: {
                std::vector<int> scope = self(self, *e.left);
                std::vector<int> right = self(self, *e.right);
                scope.insert(scope.end(), right.begin(), right.end());
                return scope;
            }
            case CwExpr::Kind::Relabel: {
                std::vector<int> scope = self(self, *e.left);
                for (int v : scope)
                    if (out.labels[v] == e.a) out.labels[v] = e.b;
                return scope;
            }
            case CwExpr::Kind::Join: {
                std::vector<int> scope = self(self, *e.left);
                for (int u : scope)
                    for (int v : scope)
                        if (u != v && out.labels[u] == e.a && out.labels[v] == e.b &&
                            !out.graph.adjacent(u, v))
                            out.graph.add_edge(u, v);
                return scope;
            }
        }
        throw input_error("evaluate_cw_expr: unknown node kind");
    };
    walk(walk, expr);
    return out;
}

int cw_expr_alphabet(const CwExpr& expr) {
    int m = 0;
    auto walk = [&](auto&& self, const CwExpr& e) -> void {
        m = std::max({m, e.a, e.b});
        if (e.left) self(self, *e.left);
        if (e.right) self(self, *e.right);
    };
    walk(walk, expr);
    return m;
}

namespace {

struct CwState {
    uint32_t set = 0;                  // vertices present
    std::vector<uint32_t> classes;     // label classes, canonical (sorted)
    std::vector<uint64_t> missing;     // pair bitmap words (edges of G[set] not yet built)

    // provenance for witness reconstruction
    enum class Origin { Leaf, Merge, Union } origin = Origin::Leaf;
    int parent1 = -1, parent2 = -1;
    int merge_i = -1, merge_j = -1;                 // Merge: class indices of parent1
    std::vector<std::pair<int, int>> matching;      // Union: (class of p1, class of p2)
    std::vector<uint64_t> missing_before;           // before saturation
};

struct PairSpace {
    int n = 0;
    int words = 0;
    int index(int u, int v) const {
        if (u > v) std::swap(u, v);
        return u * n + v;
    }
    void set(std::vector<uint64_t>& w, int u, int v) const {
        int i = index(u, v);
        w[i / 64] |= uint64_t{1} << (i % 64);
    }
    bool test(const std::vector<uint64_t>& w, int u, int v) const {
        int i = index(u, v);
        return (w[i / 64] >> (i % 64)) & 1;
    }
};

struct CwSearch {
    const Graph& g;
    int n;
    int k;
    PairSpace ps;
    std::vector<uint32_t> adj;  // adjacency masks

    std::vector<CwState> arena;
    std::unordered_set<std::string> seen;
    size_t state_cap = 4'000'000;

    CwSearch(const Graph& graph, int alphabet) : g(graph), n(graph.order()), k(alphabet) {
        ps.n = n;
        ps.words = (n * n + 63) / 64;
        adj.resize(n);
        for (int v = 0; v < n; ++v) adj[v] = static_cast<uint32_t>(g.row(v)[0]);
    }

    std::string key(const CwState& s) const {
        std::string out;
        out.reserve(4 + s.classes.size() * 4 + s.missing.size() * 8);
        auto put32 = [&](uint32_t x) { out.append(reinterpret_cast<const char*>(&x), 4); };
        put32(s.set);
        put32(static_cast<uint32_t>(s.classes.size()));
        for (uint32_t c : s.classes) put32(c);
        for (uint64_t w : s.missing) out.append(reinterpret_cast<const char*>(&w), 8);
        return out;
    }

    // Clears missing pairs between fully-adjacent class pairs (the eta
    // operations that are always safe to apply immediately).
    void saturate(CwState& s) const {
        for (size_t i = 0; i < s.classes.size(); ++i)
            for (size_t j = i + 1; j < s.classes.size(); ++j) {
                uint32_t a = s.classes[i], b = s.classes[j];
                bool full = true;
                for (int v = 0; v < n && full; ++v)
                    if ((a >> v) & 1)
                        if ((adj[v] & b) != b) full = false;
                if (!full) continue;
                for (int u = 0; u < n; ++u) {
                    if (!((a >> u) & 1)) continue;
                    for (int v = 0; v < n; ++v)
                        if ((b >> v) & 1) {
                            int idx = ps.index(u, v);
                            s.missing[idx / 64] &= ~(uint64_t{1} << (idx % 64));
                        }
                }
            }
    }

    bool viable(const CwState& s) const {
        // a missing edge inside one class can never be built
        for (uint32_t c : s.classes)
            for (int u = 0; u < n; ++u) {
                if (!((c >> u) & 1)) continue;
                for (int v = u + 1; v < n; ++v)
                    if ((c >> v) & 1 && ps.test(s.missing, u, v)) return false;
            }
        // vertices sharing a class must look identical to the outside
        uint32_t outside = ~s.set;
        for (uint32_t c : s.classes) {
            int first = -1;
            for (int v = 0; v < n; ++v) {
                if (!((c >> v) & 1)) continue;
                if (first == -1) {
                    first = v;
                } else if ((adj[v] & outside) != (adj[first] & outside)) {
                    return false;
                }
            }
        }
        return true;
    }

    void canonicalize(CwState& s) const {
        std::sort(s.classes.begin(), s.classes.end());
    }

    // Returns arena index, or -1 if duplicate/dead/over budget.
    int insert(CwState s) {
        s.missing_before = s.missing;
        saturate(s);
        if (!viable(s)) return -1;
        canonicalize(s);
        std::string h = key(s);
        if (seen.count(h)) return -1;
        if (arena.size() >= state_cap)
            throw capacity_error("clique_width: state budget exhausted");
        seen.insert(h);
        arena.push_back(std::move(s));
        return static_cast<int>(arena.size()) - 1;
    }

    bool complete(const CwState& s) const {
        if (s.set != (n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1)) return false;
        for (uint64_t w : s.missing) if (w) return false;
        return true;
    }

    // Enumerate union states of a and b: pick a partial matching of the
    // two class lists; unmatched classes stay separate. Total classes
    // after the union must be <= k.
    template <typename Sink>
    void unions(int ia, int ib, Sink&& sink) {
        // copies: the sink may grow the arena and invalidate references
        const CwState a = arena[ia];
        const CwState b = arena[ib];
        if (a.set & b.set) return;
        std::vector<uint64_t> base = a.missing;
        for (size_t w = 0; w < base.size(); ++w) base[w] |= b.missing[w];
        for (int u = 0; u < n; ++u) {
            if (!((a.set >> u) & 1)) continue;
            uint32_t cross = adj[u] & b.set;
            for (int v = 0; v < n; ++v)
                if ((cross >> v) & 1) ps.set(base, u, v);
        }
        const int ca = static_cast<int>(a.classes.size());
        const int cb = static_cast<int>(b.classes.size());
        std::vector<int> match_of_a(ca, -1);
        std::vector<bool> used_b(cb, false);
        auto rec = [&](auto&& self, int i, int matched) -> void {
            if (i == ca) {
                int total = ca + cb - matched;
                if (total > k) return;
                CwState s;
                s.set = a.set | b.set;
                s.missing = base;
                s.origin = CwState::Origin::Union;
                s.parent1 = ia;
                s.parent2 = ib;
                for (int x = 0; x < ca; ++x) {
                    if (match_of_a[x] >= 0) {
                        s.classes.push_back(a.classes[x] | b.classes[match_of_a[x]]);
                        s.matching.emplace_back(x, match_of_a[x]);
                    } else {
                        s.classes.push_back(a.classes[x]);
                    }
                }
                for (int y = 0; y < cb; ++y)
                    if (!used_b[y]) s.classes.push_back(b.classes[y]);
                sink(std::move(s));
                return;
            }
            self(self, i + 1, matched);  // leave class i of a unmatched
            for (int y = 0; y < cb; ++y) {
                if (used_b[y]) continue;
                used_b[y] = true;
                match_of_a[i] = y;
                self(self, i + 1, matched + 1);
                match_of_a[i] = -1;
                used_b[y] = false;
            }
        };
        rec(rec, 0, 0);
    }

    template <typename Sink>
    void merges(int idx, Sink&& sink) {
        const CwState s0 = arena[idx];  // copy: sink may grow the arena
        for (size_t i = 0; i < s0.classes.size(); ++i)
            for (size_t j = i + 1; j < s0.classes.size(); ++j) {
                CwState s;
                s.set = s0.set;
                s.missing = s0.missing;
                s.origin = CwState::Origin::Merge;
                s.parent1 = idx;
                s.merge_i = static_cast<int>(i);
                s.merge_j = static_cast<int>(j);
                for (size_t t = 0; t < s0.classes.size(); ++t)
                    if (t != i && t != j) s.classes.push_back(s0.classes[t]);
                s.classes.push_back(s0.classes[i] | s0.classes[j]);
                sink(std::move(s));
            }
    }

    // Runs the search; returns the index of a complete state or -1.
    int run() {
        for (int v = 0; v < n; ++v) {
            CwState s;
            s.set = uint32_t{1} << v;
            s.classes = {s.set};
            s.missing.assign(ps.words, 0);
            insert(s);
        }
        size_t next = 0;
        int found = -1;
        while (next < arena.size() && found < 0) {
            size_t idx = next++;
            if (complete(arena[idx])) return static_cast<int>(idx);
            auto sink = [&](CwState s) {
                int at = insert(std::move(s));
                if (at >= 0 && complete(arena[at]) && found < 0) found = at;
            };
            merges(static_cast<int>(idx), sink);
            if (found >= 0) break;
            for (size_t other = 0; other <= idx && found < 0; ++other)
                unions(static_cast<int>(idx), static_cast<int>(other), sink);
        }
        return found;
    }

    // --- witness reconstruction ---

    // class index of the child that contains the given parent class mask
    static int class_containing(const CwState& child, uint32_t mask) {
        for (size_t i = 0; i < child.classes.size(); ++i)
            if ((child.classes[i] & mask) == mask) return static_cast<int>(i);
        throw std::logic_error("clique_width: witness class lookup failed");
    }

    std::unique_ptr<CwExpr> joins_for_saturation(const CwState& s,
                                                 const std::vector<int>& labels,
                                                 std::unique_ptr<CwExpr> sub) const {
        for (size_t i = 0; i < s.classes.size(); ++i)
            for (size_t j = i + 1; j < s.classes.size(); ++j) {
                bool cleared = false;
                for (int u = 0; u < n && !cleared; ++u) {
                    if (!((s.classes[i] >> u) & 1)) continue;
                    for (int v = 0; v < n && !cleared; ++v)
                        if ((s.classes[j] >> v) & 1 && ps.test(s.missing_before, u, v) &&
                            !ps.test(s.missing, u, v))
                            cleared = true;
                }
                if (cleared)
                    sub = CwExpr::join(labels[i], labels[j], std::move(sub));
            }
        return sub;
    }

    std::unique_ptr<CwExpr> build(int idx, const std::vector<int>& labels) const {
        const CwState& s = arena[idx];
        switch (s.origin) {
            case CwState::Origin::Leaf: {
                int v = __builtin_ctz(s.set);
                return CwExpr::create(v, labels[0]);
            }
            case CwState::Origin::Merge: {
                const CwState& p = arena[s.parent1];
                // Child classes (pre-canonicalization order): parent
                // classes except i,j, then the merged class last.
                std::vector<uint32_t> raw;
                for (size_t t = 0; t < p.classes.size(); ++t)
                    if (static_cast<int>(t) != s.merge_i && static_cast<int>(t) != s.merge_j)
                        raw.push_back(p.classes[t]);
                uint32_t merged = p.classes[s.merge_i] | p.classes[s.merge_j];
                raw.push_back(merged);
                // Map to canonical order to read off the child labels.
                std::vector<int> parent_labels(p.classes.size(), 0);
                auto label_of_child_mask = [&](uint32_t mask) {
                    return labels[class_containing(s, mask)];
                };
                std::vector<bool> used(k + 1, false);
                for (size_t t = 0; t < p.classes.size(); ++t) {
                    if (static_cast<int>(t) == s.merge_j) continue;
                    int l = label_of_child_mask(p.classes[t] |
                                                (static_cast<int>(t) == s.merge_i
                                                     ? p.classes[s.merge_j]
                                                     : 0u));
                    parent_labels[t] = l;
                    used[l] = true;
                }
                int fresh = 0;
                for (int l = 1; l <= k; ++l)
                    if (!used[l]) { fresh = l; break; }
                if (fresh == 0) throw std::logic_error("clique_width: no fresh label");
                parent_labels[s.merge_j] = fresh;
                auto sub = build(s.parent1, parent_labels);
                sub = CwExpr::relabel(fresh, parent_labels[s.merge_i], std::move(sub));
                return joins_for_saturation(s, labels, std::move(sub));
            }
            case CwState::Origin::Union: {
                const CwState& p1 = arena[s.parent1];
                const CwState& p2 = arena[s.parent2];
                std::vector<int> l1(p1.classes.size()), l2(p2.classes.size());
                std::vector<int> matched_of_1(p1.classes.size(), -1);
                for (auto [x, y] : s.matching) matched_of_1[x] = y;
                std::vector<bool> matched_2(p2.classes.size(), false);
                for (auto [x, y] : s.matching) matched_2[y] = true;
                for (size_t x = 0; x < p1.classes.size(); ++x) {
                    uint32_t mask = p1.classes[x];
                    if (matched_of_1[x] >= 0) mask |= p2.classes[matched_of_1[x]];
                    l1[x] = labels[class_containing(s, mask)];
                }
                for (size_t y = 0; y < p2.classes.size(); ++y) {
                    uint32_t mask = p2.classes[y];
                    l2[y] = labels[class_containing(s, mask)];
                }
                auto sub = CwExpr::unite(build(s.parent1, l1), build(s.parent2, l2));
                return joins_for_saturation(s, labels, std::move(sub));
            }
        }
        throw std::logic_error("clique_width: bad state origin");
    }
};

}  // namespace

CliqueWidthResult clique_width(const Graph& g, int max_vertices, int max_k) {
    const int n = g.order();
    if (n > max_vertices) throw capacity_error("clique_width: over vertex ceiling");
    CliqueWidthResult result;
    if (n == 0) return result;
    if (max_k <= 0) max_k = n;
    for (int k = 1; k <= max_k; ++k) {
        CwSearch search(g, k);
        int final_state = search.run();
        if (final_state < 0) continue;
        result.width = k;
        std::vector<int> labels(search.arena[final_state].classes.size());
        for (size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i) + 1;
        result.witness = search.build(final_state, labels);
        return result;
    }
    throw std::logic_error("clique_width: no expression found up to max_k");
}

std::unique_ptr<CwExpr> chain_3expression(int n) {
    if (n < 1) throw input_error("chain_3expression: n must be >= 1");
    auto a_vertex = [n](int j) { return j - 1; };
    auto b_vertex = [n](int j) { return n + j - 1; };
    if (n == 1) {
        auto t = CwExpr::unite(CwExpr::create(a_vertex(1), 1), CwExpr::create(b_vertex(1), 2));
        return CwExpr::join(1, 2, std::move(t));
    }
    // Invariant between steps: a_1..a_{j-1} carry label 1, b_1..b_{j-1}
    // carry label 2. Step j introduces b_j and a_j through label 3.
    std::unique_ptr<CwExpr> t = CwExpr::create(b_vertex(1), 2);
    t = CwExpr::unite(std::move(t), CwExpr::create(a_vertex(1), 3));
    t = CwExpr::join(3, 2, std::move(t));
    t = CwExpr::relabel(3, 1, std::move(t));
    for (int j = 2; j <= n; ++j) {
        t = CwExpr::unite(std::move(t), CwExpr::create(b_vertex(j), 3));
        t = CwExpr::relabel(3, 2, std::move(t));
        t = CwExpr::unite(std::move(t), CwExpr::create(a_vertex(j), 3));
        t = CwExpr::join(3, 2, std::move(t));
        t = CwExpr::relabel(3, 1, std::move(t));
    }
    return t;
}

}  // namespace chaingrid
