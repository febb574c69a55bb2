#pragma once

#include "grundy/errors.hpp"

#include <span>
#include <utility>
#include <vector>

namespace grundy {

/// Undirected simple graph over dense vertex ids 0..n-1.
///
/// Adjacency lists are kept sorted ascending, so membership tests are
/// O(log d). Values are cheap to copy for the sizes this library targets;
/// treat a constructed graph as immutable when sharing across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph from an unordered edge list. Duplicate edges are
    /// silently dropped; self-loops and out-of-range endpoints throw GraphError.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    long long edge_count() const noexcept { return m_; }

    int degree(int v) const;
    int max_degree() const noexcept;
    std::span<const int> neighbors(int v) const;
    bool has_edge(int u, int v) const;

    /// Inserts edge u-v; duplicates are ignored, self-loops rejected.
    void add_edge(int u, int v);
    /// Removes edge u-v; throws GraphError if absent.
    void remove_edge(int u, int v);
    /// Appends an isolated vertex and returns its id.
    int add_vertex();

    /// Edge list with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Checks the simple-graph invariants: sorted adjacency, symmetry,
    /// no loops, ids in range. Used by the debug-mode validator and tests.
    bool validate() const noexcept;

private:
    void require_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new; // -1 for vertices that were dropped
    std::vector<int> new_to_old;
};

/// Subgraph induced by `keep` (deduplicated). Kept vertices are renumbered
/// 0..|keep|-1 in ascending old-id order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep);

/// One atomic topology mutation.
struct GraphChange {
    enum class Kind { add_vertex, remove_vertex, add_edge, remove_edge };

    Kind kind;
    int u = -1;                 // edge endpoint or target vertex
    int v = -1;                 // second edge endpoint
    std::vector<int> neighbors; // add_vertex only

    static GraphChange add_vertex(std::vector<int> neighbors);
    static GraphChange remove_vertex(int v);
    static GraphChange add_edge(int u, int v);
    static GraphChange remove_edge(int u, int v);
};

struct ApplyResult {
    Graph graph;
    /// old id -> new id; -1 for the removed vertex. Identity except for
    /// remove_vertex, which compacts by moving the last vertex into the
    /// freed slot.
    std::vector<int> id_map;
    int new_vertex = -1; // set by add_vertex
};

/// Applies a change, returning the mutated graph and the id remapping.
/// Invalid changes (missing vertex, duplicate or missing edge, self-loop)
/// throw GraphError.
ApplyResult apply_change(const Graph& g, const GraphChange& change);

} // namespace grundy
