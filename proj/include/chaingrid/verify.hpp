#ifndef CHAINGRID_VERIFY_HPP
#define CHAINGRID_VERIFY_HPP

#include "chaingrid/graph.hpp"
#include "chaingrid/transforms.hpp"

#include <functional>
#include <json.hpp>
#include <random>
#include <string>

namespace chaingrid {

// --- enumeration helpers (shared with the unit tests) -----------------

/// All 2^(n(n-1)/2) labelled graphs on n vertices.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

/// All bipartite structures: parts {0..a-1}, {a..a+b-1} and every cross
/// edge subset.
void for_each_bipartite_structure(
    int a, int b, const std::function<void(const Graph&, const Bipartition&)>& fn);

/// All split structures: clique {0..c-1}, independent set {c..c+i-1} and
/// every cross edge subset.
void for_each_split_structure(
    int c, int i, const std::function<void(const Graph&, const SplitPartition&)>& fn);

/// Canonical form for isomorphism dedup: minimum upper-triangle bit code
/// over all vertex permutations (n <= 8).
uint64_t canonical_code(const Graph& g);

/// Erdos-Renyi graph with edge probability 1/2.
Graph random_graph(int n, std::mt19937& rng);

// --- verification suites ----------------------------------------------

struct CheckOutcome {
    std::string name;
    bool pass = false;
    long long millis = 0;
};

struct SuiteOutcome {
    std::string suite;
    std::vector<CheckOutcome> checks;

    bool pass() const;
};

struct Check {
    std::string name;
    std::function<bool()> fn;
};

struct Suite {
    std::string name;
    std::string summary;
    std::vector<Check> checks;
};

/// The registry, one suite per acceptance criterion, with the default
/// desk-scale sizes.
std::vector<Suite> verification_suites();

SuiteOutcome run_suite(const Suite& suite);

nlohmann::json suite_outcome_to_json(const SuiteOutcome& outcome);

}  // namespace chaingrid

#endif
