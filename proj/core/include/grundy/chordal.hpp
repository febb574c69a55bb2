#pragma once

#include "grundy/graph.hpp"

#include <span>
#include <vector>

namespace grundy {

/// True iff every pair of distinct neighbors of v is adjacent. Vertices of
/// degree 0 or 1 are simplicial.
bool is_simplicial(const Graph& g, int v);

/// All simplicial vertices, ascending.
std::vector<int> simplicial_vertices(const Graph& g);

struct PeelResult {
    bool chordal = false;
    /// Full perfect elimination order when chordal; otherwise the peeled
    /// prefix up to the point where no simplicial vertex remained.
    std::vector<int> order;
    /// Vertices of the stuck residual graph; empty iff chordal.
    std::vector<int> residual;
};

/// Iterative peel: find a simplicial vertex, remove it, repeat. Among
/// simplicial candidates the smallest vertex id is taken, so the result is
/// deterministic. Only vertices whose neighborhood changed are re-examined.
PeelResult perfect_elimination_order(const Graph& g);

struct WaveResult {
    bool chordal = false;
    /// Round-by-round simplicial sets: wave i holds every vertex that is
    /// simplicial in the residual graph at round i, ids ascending.
    std::vector<std::vector<int>> waves;
    std::vector<int> residual;
};

/// Peels every simplicial vertex of the residual graph per round. The
/// concatenation of the waves is itself a valid perfect elimination order.
WaveResult elimination_waves(const Graph& g);

/// True iff for every position i, the neighbors of order[i] among the later
/// vertices form a clique. Throws std::invalid_argument if order is not a
/// permutation of the vertex set.
bool verify_peo(const Graph& g, std::span<const int> order);

/// Recognition via the peel; the empty graph is chordal.
bool is_chordal(const Graph& g);

/// True iff both g and its complement are chordal.
bool is_split(const Graph& g);

struct CliqueResult {
    int size = 0;
    std::vector<int> members;
};

/// Maximum clique of a chordal graph: 1 + the largest later-neighborhood
/// along a perfect elimination order. Throws NotChordalError.
CliqueResult max_clique_chordal(const Graph& g);

} // namespace grundy
