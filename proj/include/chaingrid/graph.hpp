#ifndef CHAINGRID_GRAPH_HPP
#define CHAINGRID_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaingrid {

/// Raised when an argument violates a documented precondition.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a graph exceeds the documented size ceiling of an
/// exhaustive operation.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1, stored as one bitset row
/// per vertex. Immutable in spirit: operations return new graphs.
class Graph {
public:
    Graph() : n_(0), words_(0) {}
    explicit Graph(int n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {
        if (n < 0) throw input_error("Graph: negative order");
    }

    int order() const { return n_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("Graph: self-loop");
        set_bit(u, v);
        set_bit(v, u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        clear_bit(u, v);
        clear_bit(v, u);
    }

    void toggle_edge(int u, int v) {
        if (u == v) throw input_error("Graph: self-loop");
        if (adjacent(u, v)) remove_edge(u, v); else add_edge(u, v);
    }

    int degree(int v) const;
    int edge_count() const;
    std::vector<int> neighbours(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    /// Neighbourhood of v restricted to the given vertex set.
    std::vector<int> neighbours_in(int v, const std::vector<int>& within) const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    /// Raw bitset row (words_ 64-bit words).
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    int words() const { return words_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw input_error("Graph: vertex out of range");
    }
    void set_bit(int u, int v) {
        bits_[static_cast<size_t>(u) * words_ + v / 64] |= (uint64_t{1} << (v % 64));
    }
    void clear_bit(int u, int v) {
        bits_[static_cast<size_t>(u) * words_ + v / 64] &= ~(uint64_t{1} << (v % 64));
    }

    int n_;
    int words_;
    std::vector<uint64_t> bits_;
};

/// Two disjoint independent sets covering V.
struct Bipartition {
    std::vector<int> part_x;
    std::vector<int> part_y;
};

/// Injective map witnessing an induced copy of a pattern inside a host.
struct Embedding {
    int pattern_order = 0;
    std::vector<int> map;  // map[pattern vertex] = host vertex

    /// Checks injectivity and the induced condition against the two graphs.
    bool valid(const Graph& pattern, const Graph& host) const;
};

/// Finite quasi-order on a label set {0..size-1}. leq must be reflexive
/// and transitive; validate() checks both by enumeration.
struct LabelPoset {
    int size = 0;
    std::vector<std::vector<bool>> leq;  // leq[a][b] means a <= b

    static LabelPoset antichain(int k);  // k mutually incomparable labels
    static LabelPoset single();          // the trivial one-element poset
    bool le(int a, int b) const { return leq.at(a).at(b); }
    bool validate() const;
};

struct LabelledGraph {
    Graph graph;
    std::vector<int> labels;  // one label per vertex
};

// --- core operations -------------------------------------------------

/// Subgraph induced by U; vertex i of the result is U[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& u);

/// First induced embedding of pattern into host in the documented search
/// order (pattern vertices most-constrained-first, host candidates by
/// increasing index), or nullopt.
std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host);

/// All induced embeddings in deterministic order, truncated at budget.
std::vector<Embedding> enumerate_embeddings(const Graph& pattern, const Graph& host,
                                            size_t budget);

/// Complement the edges across the bipartition; parts stay independent.
Graph bipartite_complement(const Graph& g, const Bipartition& b);

/// Full complement (used by width/decomposition helpers).
Graph complement(const Graph& g);

/// Exact isomorphism test by backtracking with degree pruning.
bool are_isomorphic(const Graph& g, const Graph& h);

/// Checks that b partitions V(g) into two independent sets.
bool bipartition_valid(const Graph& g, const Bipartition& b);

/// A proper 2-colouring if one exists (component by component, colour 0
/// assigned to the lowest vertex of each component).
std::optional<Bipartition> find_bipartition(const Graph& g);

bool is_connected(const Graph& g);

/// Connected components as sorted vertex lists, ordered by lowest vertex.
std::vector<std::vector<int>> components(const Graph& g);

// --- small named graphs (used throughout the tests and recognizers) ---

Graph path_graph(int n);         // P_n
Graph cycle_graph(int n);        // C_n
Graph complete_graph(int n);     // K_n
Graph matching_graph(int k);     // kK_2: vertices 2i -- 2i+1
Graph complete_bipartite(int a, int b);

}  // namespace chaingrid

#endif
