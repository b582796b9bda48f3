#include "chaingrid/classes.hpp"

#include <algorithm>
#include <numeric>

namespace chaingrid {

namespace {

// N(x) subseteq N(y) u {y}
bool nbhd_leq(const Graph& g, int x, int y) {
    for (int w = 0; w < g.order(); ++w)
        if (g.adjacent(x, w) && w != y && !g.adjacent(y, w)) return false;
    return true;
}

}  // namespace

NeighbourhoodPreorder neighbourhood_preorder(const Graph& g) {
    const int n = g.order();
    NeighbourhoodPreorder p;
    p.leq.assign(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            p.leq[x][y] = (x == y) || nbhd_leq(g, x, y);
    return p;
}

int dilworth_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    NeighbourhoodPreorder p = neighbourhood_preorder(g);
    // Quotient by mutual comparability (twins), then Dilworth on the
    // resulting poset: max antichain = #elements - max matching in the
    // strict-order bipartite graph.
    std::vector<int> cls(n, -1);
    std::vector<int> reps;
    for (int v = 0; v < n; ++v) {
        for (int r = 0; r < static_cast<int>(reps.size()); ++r)
            if (p.le(v, reps[r]) && p.le(reps[r], v)) {
                cls[v] = r;
                break;
            }
        if (cls[v] == -1) {
            cls[v] = static_cast<int>(reps.size());
            reps.push_back(v);
        }
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> below(q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            if (a != b && p.le(reps[a], reps[b])) below[a].push_back(b);
    std::vector<int> match(q, -1);
    std::vector<bool> seen;
    auto augment = [&](auto&& self, int a) -> bool {
        for (int b : below[a]) {
            if (seen[b]) continue;
            seen[b] = true;
            if (match[b] == -1 || self(self, match[b])) {
                match[b] = a;
                return true;
            }
        }
        return false;
    };
    int matching = 0;
    for (int a = 0; a < q; ++a) {
        seen.assign(q, false);
        if (augment(augment, a)) ++matching;
    }
    return q - matching;
}

int dilworth_number_brute_force(const Graph& g) {
    const int n = g.order();
    if (n > 20) throw capacity_error("dilworth_number_brute_force: n > 20");
    NeighbourhoodPreorder p = neighbourhood_preorder(g);
    int best = 0;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        bool anti = true;
        for (int x = 0; x < n && anti; ++x) {
            if (!((mask >> x) & 1)) continue;
            for (int y = x + 1; y < n && anti; ++y) {
                if (!((mask >> y) & 1)) continue;
                if (p.le(x, y) || p.le(y, x)) anti = false;
            }
        }
        if (anti) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

std::optional<std::vector<int>> is_chain_part(const Graph& g, const std::vector<int>& part) {
    std::vector<int> order = part;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da < db || (da == db && a < b);
    });
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        // consecutive neighbourhoods must nest
        for (int w = 0; w < g.order(); ++w)
            if (g.adjacent(order[i], w) && !g.adjacent(order[i + 1], w)) return std::nullopt;
    }
    return order;
}

RecognitionReport is_k_chain(const Graph& g, const Bipartition& b, int k) {
    if (!bipartition_valid(g, b)) throw input_error("is_k_chain: invalid bipartition");
    if (k != 1 && k != 2) throw input_error("is_k_chain: k must be 1 or 2");
    RecognitionReport report;
    report.bipartition = b;
    report.chains.resize(2);
    const std::vector<int>* parts[2] = {&b.part_x, &b.part_y};
    for (int side = 0; side < 2; ++side) {
        const std::vector<int>& part = *parts[side];
        if (k == 1) {
            auto chain = is_chain_part(g, part);
            if (!chain) return report;  // verdict stays false
            report.chains[side].push_back(*chain);
            continue;
        }
        // 2-colour the incomparability graph of neighbourhood inclusion.
        const int m = static_cast<int>(part.size());
        std::vector<std::vector<bool>> incomp(m, std::vector<bool>(m, false));
        for (int a = 0; a < m; ++a)
            for (int c = a + 1; c < m; ++c)
                if (!nbhd_leq(g, part[a], part[c]) && !nbhd_leq(g, part[c], part[a]))
                    incomp[a][c] = incomp[c][a] = true;
        std::vector<int> colour(m, -1);
        for (int s = 0; s < m; ++s) {
            if (colour[s] != -1) continue;
            colour[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u = 0; u < m; ++u) {
                    if (!incomp[v][u]) continue;
                    if (colour[u] == -1) {
                        colour[u] = 1 - colour[v];
                        stack.push_back(u);
                    } else if (colour[u] == colour[v]) {
                        return report;  // odd incomparability cycle: no 2-chain split
                    }
                }
            }
        }
        for (int c = 0; c < 2; ++c) {
            std::vector<int> chain_vertices;
            for (int a = 0; a < m; ++a)
                if (colour[a] == c) chain_vertices.push_back(part[a]);
            if (chain_vertices.empty()) continue;
            auto chain = is_chain_part(g, chain_vertices);
            if (!chain)
                throw std::logic_error("is_k_chain: colour class is not a chain");
            report.chains[side].push_back(*chain);
        }
    }
    report.verdict = true;
    return report;
}

namespace {

struct Forbidden {
    std::string name;
    Graph graph;
};

const std::vector<Forbidden>& bichain_forbidden_list() {
    static const std::vector<Forbidden> list = {
        {"C3", cycle_graph(3)},   {"C5", cycle_graph(5)},
        {"C6", cycle_graph(6)},   {"3K2", matching_graph(3)},
        {"C7", cycle_graph(7)},   {"P7", path_graph(7)},
    };
    return list;
}

const std::vector<Forbidden>& split_forbidden_list() {
    static const std::vector<Forbidden> list = {
        {"2K2", matching_graph(2)},
        {"C4", cycle_graph(4)},
        {"C5", cycle_graph(5)},
    };
    return list;
}

const std::vector<Forbidden>& split_permutation_forbidden_list() {
    static const std::vector<Forbidden> list = {
        {"2K2", matching_graph(2)},
        {"C4", cycle_graph(4)},
        {"C5", cycle_graph(5)},
        {"Sun3", sun3_graph()},
        {"Co-sun3", co_sun3_graph()},
        {"Rising-sun", rising_sun_graph()},
        {"Co-rising-sun", co_rising_sun_graph()},
    };
    return list;
}

std::optional<std::pair<std::string, Embedding>> scan_forbidden(
    const Graph& g, const std::vector<Forbidden>& list) {
    for (const Forbidden& f : list)
        if (auto e = find_embedding(f.graph, g))
            return std::make_pair(f.name, *e);
    return std::nullopt;
}

void attach_witness(RecognitionReport& report, const std::string& name, const Embedding& e,
                    const std::vector<Forbidden>& list) {
    report.forbidden_name = name;
    report.witness = e;
    for (const Forbidden& f : list)
        if (f.name == name) report.forbidden = f.graph;
}

}  // namespace

std::optional<std::pair<std::string, Embedding>> bichain_forbidden_witness(const Graph& g) {
    return scan_forbidden(g, bichain_forbidden_list());
}

std::optional<RecognitionReport> bichain_chain_certificate(const Graph& g) {
    auto base = find_bipartition(g);
    if (!base) return std::nullopt;
    auto comps = components(g);
    if (comps.size() > 20) throw capacity_error("bichain_chain_certificate: too many components");
    std::vector<int> base_side(g.order(), 0);
    for (int v : base->part_y) base_side[v] = 1;
    // Try every per-component colour swap; chain structure can depend on
    // which colour class of each component joins which part.
    for (uint32_t swaps = 0; swaps < (uint32_t{1} << comps.size()); ++swaps) {
        Bipartition b;
        for (size_t c = 0; c < comps.size(); ++c) {
            bool flip = (swaps >> c) & 1;
            for (int v : comps[c])
                ((base_side[v] ^ flip) == 0 ? b.part_x : b.part_y).push_back(v);
        }
        RecognitionReport r = is_k_chain(g, b, 2);
        if (r.verdict) return r;
    }
    return std::nullopt;
}

RecognitionReport is_bichain(const Graph& g) {
    auto forbidden = bichain_forbidden_witness(g);
    auto certificate = bichain_chain_certificate(g);
    if (forbidden.has_value() == certificate.has_value())
        throw std::logic_error("is_bichain: forbidden-subgraph and 2-chain routes disagree");
    if (certificate) return *certificate;
    RecognitionReport report;
    attach_witness(report, forbidden->first, forbidden->second, bichain_forbidden_list());
    return report;
}

std::optional<std::pair<std::string, Embedding>> split_forbidden_witness(const Graph& g) {
    return scan_forbidden(g, split_forbidden_list());
}

RecognitionReport is_split(const Graph& g) {
    auto forbidden = split_forbidden_witness(g);
    auto partition = find_split_partition(g);
    if (forbidden.has_value() == partition.has_value())
        throw std::logic_error("is_split: forbidden-subgraph and degree routes disagree");
    RecognitionReport report;
    if (partition) {
        report.verdict = true;
        report.split = partition;
    } else {
        attach_witness(report, forbidden->first, forbidden->second, split_forbidden_list());
    }
    return report;
}

std::optional<std::pair<std::string, Embedding>> split_permutation_forbidden_witness(
    const Graph& g) {
    return scan_forbidden(g, split_permutation_forbidden_list());
}

RecognitionReport is_split_permutation(const Graph& g) {
    auto forbidden = split_permutation_forbidden_witness(g);
    auto partition = find_split_partition(g);
    bool structural = partition.has_value() && dilworth_number(g) <= 2;
    if (forbidden.has_value() == structural)
        throw std::logic_error(
            "is_split_permutation: forbidden-subgraph and Dilworth routes disagree");
    RecognitionReport report;
    if (structural) {
        report.verdict = true;
        report.split = partition;
    } else {
        attach_witness(report, forbidden->first, forbidden->second,
                       split_permutation_forbidden_list());
    }
    return report;
}

}  // namespace chaingrid
