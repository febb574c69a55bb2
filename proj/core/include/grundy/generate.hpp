#pragma once

#include "grundy/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace grundy {

using Rng = std::mt19937_64;

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// One hub (vertex 0) and n-1 leaves.
Graph star_graph(int n);

/// Starts from K_{k+1} and repeatedly attaches a new vertex to a uniformly
/// chosen existing k-clique. Chordal by construction. Requires n >= k+1.
Graph k_tree(int n, int k, Rng& rng);

/// k_tree(n, k) with each edge kept independently with probability keep_prob.
Graph partial_k_tree(int n, int k, double keep_prob, Rng& rng);

struct SplitPartition {
    std::vector<int> independent;
    std::vector<int> clique;
};

/// Independent set of size s (vertices 0..s-1), clique of size c, each cross
/// pair joined with probability cross_prob. The generating partition is
/// written to *partition when non-null.
Graph split_graph(int s, int c, double cross_prob, Rng& rng,
                  SplitPartition* partition = nullptr);

/// Erdos-Renyi G(n, p).
Graph gnp(int n, double p, Rng& rng);

/// Graph on n labeled vertices selected by an edge bitmask. Bit 0 is the
/// pair (0,1), then (0,2), ..., (0,n-1), (1,2), ... Requires n*(n-1)/2 <= 63.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_limit(int n); // 1 << (n*(n-1)/2)

/// Parsed form of a generator spec string, e.g. "ktree:n=20,k=2",
/// "split:s=5,c=5,p=0.5", "partial_ktree:n=9,k=2,keep=0.7", "gnp:n=7,p=0.5".
struct FamilySpec {
    enum class Kind { path, cycle, complete, star, ktree, partial_ktree, split, gnp };

    Kind kind;
    int n = 0;
    int k = 0;
    int s = 0;
    int c = 0;
    double p = 0.0; // cross/keep/edge probability depending on family
    std::string text;

    bool randomized() const noexcept;
    /// k when the family is a (partial) k-tree, otherwise nullopt.
    std::optional<int> ktree_k() const noexcept;
};

FamilySpec parse_family_spec(std::string_view text); // throws ParseError

struct Generated {
    Graph graph;
    std::optional<SplitPartition> split;
};

/// Deterministic for a fixed (spec, seed) pair.
Generated generate(const FamilySpec& spec, std::uint64_t seed);

} // namespace grundy
