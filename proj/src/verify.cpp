#include "chaingrid/verify.hpp"

#include "chaingrid/classes.hpp"
#include "chaingrid/decomposition.hpp"
#include "chaingrid/grids.hpp"
#include "chaingrid/letters.hpp"
#include "chaingrid/width.hpp"
#include "chaingrid/wqo.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace chaingrid {

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n > 7) throw capacity_error("for_each_graph: n must be in 0..7");
    const int pairs = n * (n - 1) / 2;
    for (uint32_t mask = 0; mask < (uint32_t{1} << pairs); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v);
        fn(g);
    }
}

void for_each_bipartite_structure(
    int a, int b, const std::function<void(const Graph&, const Bipartition&)>& fn) {
    if (a < 0 || b < 0 || a * b > 20)
        throw capacity_error("for_each_bipartite_structure: too many cross pairs");
    Bipartition parts;
    for (int v = 0; v < a; ++v) parts.part_x.push_back(v);
    for (int v = 0; v < b; ++v) parts.part_y.push_back(a + v);
    for (uint32_t mask = 0; mask < (uint32_t{1} << (a * b)); ++mask) {
        Graph g(a + b);
        int bit = 0;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, a + v);
        fn(g, parts);
    }
}

void for_each_split_structure(
    int c, int i, const std::function<void(const Graph&, const SplitPartition&)>& fn) {
    if (c < 0 || i < 0 || c * i > 20)
        throw capacity_error("for_each_split_structure: too many cross pairs");
    SplitPartition p;
    for (int v = 0; v < c; ++v) p.clique.push_back(v);
    for (int v = 0; v < i; ++v) p.independent.push_back(c + v);
    for (uint32_t mask = 0; mask < (uint32_t{1} << (c * i)); ++mask) {
        Graph g(c + i);
        for (int u = 0; u < c; ++u)
            for (int v = u + 1; v < c; ++v) g.add_edge(u, v);
        int bit = 0;
        for (int u = 0; u < c; ++u)
            for (int v = 0; v < i; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, c + v);
        fn(g, p);
    }
}

uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw capacity_error("canonical_code: n > 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t code = 0;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (g.adjacent(perm[u], perm[v])) code |= uint64_t{1} << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph random_graph(int n, std::mt19937& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) g.add_edge(u, v);
    return g;
}

bool SuiteOutcome::pass() const {
    for (const CheckOutcome& c : checks)
        if (!c.pass) return false;
    return true;
}

SuiteOutcome run_suite(const Suite& suite) {
    SuiteOutcome out;
    out.suite = suite.name;
    for (const Check& check : suite.checks) {
        CheckOutcome co;
        co.name = check.name;
        auto start = std::chrono::steady_clock::now();
        try {
            co.pass = check.fn();
        } catch (const std::exception&) {
            co.pass = false;
        }
        auto stop = std::chrono::steady_clock::now();
        co.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        out.checks.push_back(std::move(co));
    }
    return out;
}

nlohmann::json suite_outcome_to_json(const SuiteOutcome& outcome) {
    nlohmann::json j;
    j["suite"] = outcome.suite;
    j["checks"] = nlohmann::json::array();
    for (const CheckOutcome& c : outcome.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"millis", c.millis}});
    return j;
}

namespace {

// ---- criterion 1 ------------------------------------------------------

bool pivot_check(int n) {
    return pivot_x_to_y(n).first == y_grid(2 * n, 2 * n).graph;
}

// ---- criterion 2 ------------------------------------------------------

bool cross_check(int n) {
    Embedding zy = zy_cross_embedding(n, CrossDirection::Z_into_Y);
    GridGraph y_host = y_grid(2 * n, 2 * n);
    if (!zy.valid(z_grid(n, n).graph, y_host.graph)) return false;
    for (int v : zy.map)
        if (y_host.row_of(v) == 1) return false;
    Embedding yz = zy_cross_embedding(n, CrossDirection::Y_into_Z);
    return yz.valid(y_grid(n, n).graph, z_grid(2 * n, 2 * n).graph);
}

// ---- criterion 3 ------------------------------------------------------

bool z_universality_check() {
    Graph host = z_grid(5, 5).graph;
    std::set<std::pair<int, uint64_t>> seen;
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n)
        for_each_graph(n, [&](const Graph& g) {
            if (!ok || !seen.insert({n, canonical_code(g)}).second) return;
            if (is_bichain(g).verdict && !find_embedding(g, host)) ok = false;
        });
    return ok;
}

// ---- criterion 4 ------------------------------------------------------

bool x_universality_check(int samples) {
    GridGraph big = x_grid(10, 10);
    Graph small = x_grid(5, 5).graph;
    std::mt19937 rng(20260823u);
    for (int s = 0; s < samples; ++s) {
        std::set<int> picked;
        while (static_cast<int>(picked.size()) < 5)
            picked.insert(static_cast<int>(rng() % big.graph.order()));
        Graph sub = induced_subgraph(big.graph, {picked.begin(), picked.end()});
        if (!find_embedding(sub, small)) return false;
    }
    return true;
}

// ---- criterion 5 ------------------------------------------------------

bool letter_grid_match(const LetterSystem& l, const GridGraph& grid) {
    Graph decoded = decode_letter_graph(l);
    const int n = grid.cols, k = grid.rows;
    if (decoded.order() != grid.graph.order()) return false;
    std::vector<int> to_grid(decoded.order());
    for (int p = 0; p < decoded.order(); ++p) {
        int block = p / n + 1;
        int letter = l.word[p];
        to_grid[p] = grid.vertex(letter, k + 1 - block);
    }
    for (int p = 0; p < decoded.order(); ++p)
        for (int q = p + 1; q < decoded.order(); ++q)
            if (decoded.adjacent(p, q) != grid.graph.adjacent(to_grid[p], to_grid[q]))
                return false;
    return true;
}

bool z_letter_check(int max_n, int max_k) {
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= max_k; ++k)
            if (!letter_grid_match(z_letter_encoding(n, k), z_grid(n, k))) return false;
    return true;
}

bool zsplit_letter_check(int max_n, int max_k) {
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= max_k; ++k)
            if (!letter_grid_match(zsplit_letter_encoding(n, k), zsplit_grid(n, k)))
                return false;
    return true;
}

// ---- criterion 6 ------------------------------------------------------

bool rankwidth_invariance_check(int from, int to) {
    std::mt19937 rng(7u);
    for (int s = 0; s < to; ++s) {
        Graph g = random_graph(1 + s % 7, rng);
        if (s < from) continue;
        int rw = rank_width(g).width;
        for (int v = 0; v < g.order(); ++v)
            if (rank_width(local_complement(g, v)).width != rw) return false;
        for (auto [u, v] : g.edges())
            if (rank_width(pivot(g, u, v)).width != rw) return false;
    }
    return true;
}

// ---- criterion 7 ------------------------------------------------------

bool sandwich_holds(const Graph& g) {
    int rw = rank_width(g).width;
    CliqueWidthResult cw = clique_width(g);
    if (cw.witness) {
        LabelledGraph rebuilt = evaluate_cw_expr(*cw.witness, g.order());
        if (rebuilt.graph != g) return false;
        if (cw_expr_alphabet(*cw.witness) > cw.width) return false;
    }
    return rw <= cw.width && cw.width <= (1 << (rw + 1)) - 1;
}

bool sandwich_small_check() {
    std::set<std::pair<int, uint64_t>> seen;
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n)
        for_each_graph(n, [&](const Graph& g) {
            if (!ok || !seen.insert({n, canonical_code(g)}).second) return;
            if (!sandwich_holds(g)) ok = false;
        });
    return ok;
}

bool sandwich_seeded_check(int samples) {
    std::mt19937 rng(11u);
    for (int s = 0; s < samples; ++s)
        if (!sandwich_holds(random_graph(6, rng))) return false;
    return true;
}

// ---- criterion 8 ------------------------------------------------------

bool chain_expression_check(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        auto expr = chain_3expression(n);
        if (cw_expr_alphabet(*expr) > 3) return false;
        if (evaluate_cw_expr(*expr, 2 * n).graph != chain_universal(n)) return false;
    }
    return true;
}

bool chain_width_check(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        if (clique_width(chain_universal(n)).width > 3) return false;
    return true;
}

// ---- criterion 9 ------------------------------------------------------

bool split_equivalence_check(int max_n) {
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n)
        for (int c = 0; c <= n && ok; ++c)
            for_each_split_structure(c, n - c, [&](const Graph& g, const SplitPartition&) {
                if (!ok) return;
                bool forbidden_free = !split_permutation_forbidden_witness(g).has_value();
                if (forbidden_free != (dilworth_number(g) <= 2)) ok = false;
            });
    return ok;
}

bool bichain_equivalence_check(int max_n) {
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n)
        for (int a = 0; a <= n && ok; ++a)
            for_each_bipartite_structure(a, n - a, [&](const Graph& g, const Bipartition&) {
                if (!ok) return;
                bool forbidden_free = !bichain_forbidden_witness(g).has_value();
                if (forbidden_free != bichain_chain_certificate(g).has_value()) ok = false;
            });
    return ok;
}

bool star_equivalence_check(int max_n) {
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n)
        for (int c = 0; c <= n && ok; ++c)
            for_each_split_structure(c, n - c, [&](const Graph& g, const SplitPartition& p) {
                if (!ok) return;
                Graph star = split_bipartite_transform(g, p);
                if (is_split_permutation(g).verdict != is_bichain(star).verdict) ok = false;
            });
    return ok;
}

// ---- criterion 10 -----------------------------------------------------

bool scirc_antichain_check(int from, int to) {
    std::vector<LabelledGraph> graphs;
    for (int k = from; k <= to; ++k) graphs.push_back(s_circ(k));
    return verify_antichain(graphs, LabelPoset::antichain(2)).valid();
}

bool tcirc_antichain_check(int from, int to) {
    std::vector<LabelledGraph> graphs;
    for (int k = from; k <= to; ++k) graphs.push_back(t_circ(k));
    return verify_antichain(graphs, LabelPoset::antichain(2)).valid();
}

bool embedding_on_consecutive_pairs(const AntichainGraph& pat, const AntichainGraph& host,
                                    const Embedding& e) {
    std::vector<int> t(pat.k + 1, 0);
    for (int i = 1; i <= pat.k; ++i) {
        int a = e.map[pat.x_vertex(i)], b = e.map[pat.y_vertex(i)];
        int found = 0;
        for (int c = 1; c <= host.k; ++c)
            if ((a == host.x_vertex(c) && b == host.y_vertex(c)) ||
                (a == host.y_vertex(c) && b == host.x_vertex(c)))
                found = c;
        if (found == 0) return false;
        t[i] = found;
    }
    std::vector<int> sorted(t.begin() + 1, t.end());
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i + 1] != sorted[i] + 1) return false;
    return true;
}

bool s_embedding_check(int max_k) {
    for (int k = 3; k <= max_k; ++k) {
        AntichainGraph host = s_graph(k);
        for (int j = 3; j < k; ++j) {
            AntichainGraph pat = s_graph(j);
            auto all = enumerate_embeddings(pat.graph, host.graph, 1000000);
            if (all.empty() || all.size() >= 1000000) return false;
            for (const Embedding& e : all)
                if (!embedding_on_consecutive_pairs(pat, host, e)) return false;
        }
    }
    return true;
}

// ---- criterion 11 -----------------------------------------------------

bool column_interval_check(int max_n) {
    GridGraph host = z_grid(6, 6);
    std::set<std::pair<int, uint64_t>> seen;
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n)
        for (int a = 0; a <= n && ok; ++a)
            for_each_bipartite_structure(a, n - a, [&](const Graph& g, const Bipartition& b) {
                if (!ok || !seen.insert({g.order(), canonical_code(g)}).second) return;
                if (!is_bichain(g).verdict || !is_canonically_prime(g, b)) return;
                auto all = enumerate_embeddings(g, host.graph, 5000000);
                if (all.size() >= 5000000) {
                    ok = false;
                    return;
                }
                for (const Embedding& e : all)
                    if (!is_interval(columns_occupied(e, host))) {
                        ok = false;
                        return;
                    }
            });
    return ok;
}

// ---- criterion 12 -----------------------------------------------------

// The budget is a cap: when fewer embeddings exist, the enumeration was
// exhaustive and the check covers all of them.
bool column_structure_check(size_t budget) {
    ColumnStructureReport report = x_embedding_column_structure(2, 4, 9, budget);
    return report.all_pass() && report.embeddings_checked > 0;
}

// ---- criterion 13 -----------------------------------------------------

bool decomposition_check(int max_n) {
    bool ok = true;
    for (int n = 1; n <= max_n && ok; ++n)
        for (int a = 0; a <= n && ok; ++a)
            for_each_bipartite_structure(a, n - a, [&](const Graph& g, const Bipartition& b) {
                if (!ok) return;
                auto tree = canonical_decompose(g, b);
                PartedSubgraph back = recompose(*tree, g.order());
                if (back.graph != g) ok = false;
                if (is_canonically_prime(g, b) != is_canonically_prime_brute_force(g, b))
                    ok = false;
            });
    return ok;
}

}  // namespace

std::vector<Suite> verification_suites() {
    std::vector<Suite> suites;

    Suite pivot{"pivot-lemma", "pivoted bottom-row X-grids equal Y-grids", {}};
    for (int n = 1; n <= 5; ++n)
        pivot.checks.push_back({"n=" + std::to_string(n), [n] { return pivot_check(n); }});
    suites.push_back(std::move(pivot));

    Suite cross{"cross-embedding", "Z- and Y-grids embed into each other", {}};
    for (int n = 2; n <= 4; ++n)
        cross.checks.push_back({"n=" + std::to_string(n), [n] { return cross_check(n); }});
    suites.push_back(std::move(cross));

    suites.push_back({"z-universality",
                      "every bichain graph on <= 5 vertices embeds into z_grid(5,5)",
                      {{"all classes", [] { return z_universality_check(); }}}});

    suites.push_back({"x-universality",
                      "5-vertex induced subgraphs of x_grid(10,10) embed into x_grid(5,5)",
                      {{"500 samples", [] { return x_universality_check(500); }}}});

    suites.push_back({"letter-encoding",
                      "letter systems decode to the matching grids",
                      {{"z grids n,k<=8", [] { return z_letter_check(8, 8); }},
                       {"zsplit grids n,k<=6", [] { return zsplit_letter_check(6, 6); }}}});

    suites.push_back({"rankwidth-invariance",
                      "local complementation and pivots preserve rank-width",
                      {{"graphs 1-100", [] { return rankwidth_invariance_check(0, 100); }},
                       {"graphs 101-200", [] { return rankwidth_invariance_check(100, 200); }}}});

    suites.push_back({"width-sandwich",
                      "rank-width bounds clique-width on both sides",
                      {{"all graphs <= 5 vertices", [] { return sandwich_small_check(); }},
                       {"150 seeded 6-vertex graphs", [] { return sandwich_seeded_check(150); }}}});

    suites.push_back({"chain-width",
                      "universal chain graphs have 3-label expressions",
                      {{"expression evaluates n<=12", [] { return chain_expression_check(12); }},
                       {"exact width <= 3 for n<=4", [] { return chain_width_check(4); }}}});

    suites.push_back(
        {"recognizer-equivalence",
         "forbidden-subgraph and structural recognizers agree",
         {{"split: forbidden-free iff Dilworth <= 2", [] { return split_equivalence_check(7); }},
          {"bipartite: forbidden-free iff 2-chain", [] { return bichain_equivalence_check(7); }},
          {"split-perm iff bichain transform", [] { return star_equivalence_check(7); }}}});

    suites.push_back({"antichain",
                      "labelled antichains and unlabelled chain embeddings",
                      {{"scirc 3..8 antichain", [] { return scirc_antichain_check(3, 8); }},
                       {"s embeddings land on consecutive pairs",
                        [] { return s_embedding_check(7); }},
                       {"tcirc 3..6 antichain", [] { return tcirc_antichain_check(3, 6); }}}});

    suites.push_back({"column-interval",
                      "prime bichain embeddings occupy column intervals of z_grid(6,6)",
                      {{"all prime classes <= 6 vertices", [] { return column_interval_check(6); }}}});

    suites.push_back({"column-structure",
                      "X-grid embeddings contain column-aligned sub-grids",
                      {{"n=2 host 4x9 budget 100000",
                        [] { return column_structure_check(100000); }}}});

    suites.push_back({"decomposition",
                      "recomposition identity and primality agreement",
                      {{"all bipartite structures <= 7 vertices",
                        [] { return decomposition_check(7); }}}});

    return suites;
}

}  // namespace chaingrid
