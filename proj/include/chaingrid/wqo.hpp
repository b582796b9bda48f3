#ifndef CHAINGRID_WQO_HPP
#define CHAINGRID_WQO_HPP

#include "chaingrid/graph.hpp"
#include "chaingrid/grids.hpp"

namespace chaingrid {

/// Induced embedding that additionally satisfies label(v) <= label(w)
/// in the poset for every pattern vertex v mapped to w.
std::optional<Embedding> labelled_embeds(const LabelledGraph& h, const LabelledGraph& g,
                                         const LabelPoset& p);

struct AntichainCertificate {
    std::vector<LabelledGraph> graphs;
    std::vector<std::vector<bool>> embeds;  // embeds[i][j]: graph i into graph j

    /// Valid iff no off-diagonal embedding exists.
    bool valid() const;
};

AntichainCertificate verify_antichain(const std::vector<LabelledGraph>& graphs,
                                      const LabelPoset& p);

/// Sorted host columns hit by the embedding's image.
std::vector<int> columns_occupied(const Embedding& e, const GridGraph& host);

bool is_interval(const std::vector<int>& sorted_columns);

/// Searches rows = 1..max_rows for an induced embedding of g into the
/// Z-grid on `width` columns and that many rows; first one found.
/// max_rows = 0 means the default 2 * |V(g)|.
std::optional<Embedding> embed_in_bounded_columns(const Graph& g, int width, int max_rows = 0);

struct ColumnStructureReport {
    size_t embeddings_checked = 0;
    size_t passes = 0;
    std::vector<size_t> failing;  // indices (enumeration order) without a sub-copy

    bool all_pass() const { return failing.empty(); }
};

/// Enumerates induced embeddings of x_grid(n, 4n-1) into x_grid(m, rows)
/// (at most `budget` of them, deterministic order) and checks that each
/// image contains a copy of x_grid(n,n) occupying n contiguous host
/// columns, one pattern column per host column.
ColumnStructureReport x_embedding_column_structure(int n, int m, int rows, size_t budget);

}  // namespace chaingrid

#endif
