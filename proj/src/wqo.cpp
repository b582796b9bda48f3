#include "chaingrid/wqo.hpp"

#include <algorithm>
#include <set>

namespace chaingrid {

namespace {

struct LabelledSearch {
    const Graph& pattern;
    const Graph& host;
    const std::vector<bool>& allowed;  // allowed[pv * host.order() + hv]
    std::vector<int> assign;
    std::vector<bool> used;

    bool recurse(int pv) {
        if (pv == pattern.order()) return true;
        for (int hv = 0; hv < host.order(); ++hv) {
            if (used[hv] || !allowed[static_cast<size_t>(pv) * host.order() + hv]) continue;
            bool ok = true;
            for (int u = 0; u < pv && ok; ++u)
                if (pattern.adjacent(pv, u) != host.adjacent(hv, assign[u])) ok = false;
            if (!ok) continue;
            assign[pv] = hv;
            used[hv] = true;
            if (recurse(pv + 1)) return true;
            used[hv] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> labelled_embeds(const LabelledGraph& h, const LabelledGraph& g,
                                         const LabelPoset& p) {
    auto check_labels = [&](const LabelledGraph& lg) {
        if (static_cast<int>(lg.labels.size()) != lg.graph.order())
            throw input_error("labelled_embeds: label count mismatch");
        for (int l : lg.labels)
            if (l < 0 || l >= p.size) throw input_error("labelled_embeds: label outside poset");
    };
    check_labels(h);
    check_labels(g);
    const int m = h.graph.order(), n = g.graph.order();
    if (m > n) return std::nullopt;
    std::vector<bool> allowed(static_cast<size_t>(m) * n, false);
    for (int pv = 0; pv < m; ++pv)
        for (int hv = 0; hv < n; ++hv)
            allowed[static_cast<size_t>(pv) * n + hv] = p.le(h.labels[pv], g.labels[hv]);
    LabelledSearch s{h.graph, g.graph, allowed,
                     std::vector<int>(m, -1), std::vector<bool>(n, false)};
    if (!s.recurse(0)) return std::nullopt;
    return Embedding{m, s.assign};
}

bool AntichainCertificate::valid() const {
    for (size_t i = 0; i < embeds.size(); ++i)
        for (size_t j = 0; j < embeds[i].size(); ++j)
            if (i != j && embeds[i][j]) return false;
    return true;
}

AntichainCertificate verify_antichain(const std::vector<LabelledGraph>& graphs,
                                      const LabelPoset& p) {
    AntichainCertificate cert;
    cert.graphs = graphs;
    const size_t m = graphs.size();
    cert.embeds.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            cert.embeds[i][j] = labelled_embeds(graphs[i], graphs[j], p).has_value();
    return cert;
}

std::vector<int> columns_occupied(const Embedding& e, const GridGraph& host) {
    if (host.cols * host.rows != host.graph.order())
        throw input_error("columns_occupied: host lacks a coordinate layout");
    std::set<int> cols;
    for (int v : e.map) {
        if (v < 0 || v >= host.graph.order())
            throw input_error("columns_occupied: image outside host");
        cols.insert(host.col_of(v));
    }
    return {cols.begin(), cols.end()};
}

bool is_interval(const std::vector<int>& sorted_columns) {
    for (size_t i = 0; i + 1 < sorted_columns.size(); ++i)
        if (sorted_columns[i + 1] != sorted_columns[i] + 1) return false;
    return true;
}

std::optional<Embedding> embed_in_bounded_columns(const Graph& g, int width, int max_rows) {
    if (width < 1) throw input_error("embed_in_bounded_columns: width must be positive");
    if (max_rows <= 0) max_rows = 2 * std::max(1, g.order());
    for (int r = 1; r <= max_rows; ++r)
        if (auto e = find_embedding(g, z_grid(width, r).graph)) return e;
    return std::nullopt;
}

namespace {

// Tries to pick `n` image rows per host column in window [c, c+n-1] so
// that consecutive columns interleave as in x_grid(n,n): picking rows
// r_{t,1} < ... < r_{t,n} per column t, the x-rule j >= j' reproduces
// the pattern exactly when r_{t+1,j} <= r_{t,j} < r_{t+1,j+1}.
bool window_has_aligned_copy(const std::vector<std::vector<int>>& rows_by_col, int n) {
    const int cols = static_cast<int>(rows_by_col.size());
    std::vector<std::vector<int>> chosen(cols);
    auto pick = [&](auto&& self, int t) -> bool {
        if (t == cols) return true;
        const std::vector<int>& avail = rows_by_col[t];  // sorted ascending
        const int a = static_cast<int>(avail.size());
        std::vector<int> idx(n);
        auto next_combo = [&]() {
            int i = n - 1;
            while (i >= 0 && idx[i] == a - n + i) --i;
            if (i < 0) return false;
            ++idx[i];
            for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        };
        for (int j = 0; j < n; ++j) idx[j] = j;
        do {
            chosen[t].clear();
            for (int j = 0; j < n; ++j) chosen[t].push_back(avail[idx[j]]);
            if (t > 0) {
                bool ok = true;
                for (int j = 0; j < n && ok; ++j) {
                    if (chosen[t][j] > chosen[t - 1][j]) ok = false;
                    if (j + 1 < n && chosen[t - 1][j] >= chosen[t][j + 1]) ok = false;
                }
                if (!ok) continue;
            }
            if (self(self, t + 1)) return true;
        } while (next_combo());
        return false;
    };
    for (int t = 0; t < cols; ++t)
        if (static_cast<int>(rows_by_col[t].size()) < n) return false;
    return pick(pick, 0);
}

}  // namespace

ColumnStructureReport x_embedding_column_structure(int n, int m, int rows, size_t budget) {
    if (n < 1) throw input_error("x_embedding_column_structure: n must be positive");
    if (m < n || rows < 4 * n - 1)
        throw input_error("x_embedding_column_structure: host too small");
    GridGraph pattern = x_grid(n, 4 * n - 1);
    GridGraph host = x_grid(m, rows);
    std::vector<Embedding> found = enumerate_embeddings(pattern.graph, host.graph, budget);

    ColumnStructureReport report;
    report.embeddings_checked = found.size();
    for (size_t e = 0; e < found.size(); ++e) {
        bool pass = false;
        for (int c = 1; c + n - 1 <= m && !pass; ++c) {
            std::vector<std::vector<int>> rows_by_col(n);
            for (int v : found[e].map) {
                int col = host.col_of(v);
                if (col >= c && col < c + n) rows_by_col[col - c].push_back(host.row_of(v));
            }
            for (auto& r : rows_by_col) std::sort(r.begin(), r.end());
            pass = window_has_aligned_copy(rows_by_col, n);
        }
        if (pass)
            ++report.passes;
        else
            report.failing.push_back(e);
    }
    return report;
}

}  // namespace chaingrid
