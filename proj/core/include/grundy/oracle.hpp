#pragma once

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"

#include <vector>

namespace grundy::oracle {

/// Size caps for the exponential routines; inputs above a cap are refused
/// with OracleCapError rather than allowed to run away.
struct OracleLimits {
    int max_n_orderings = 9; // Grundy-number enumeration
    int max_n_subsets = 20;  // independence number, induced-cycle search
    int max_n_coloring = 12; // chromatic-number backtracking
};

struct GrundyExact {
    int gamma = 0;
    /// Lexicographically smallest vertex order whose first-fit run uses
    /// gamma colors.
    std::vector<int> witness_order;
};

/// Gamma(g) as the worst case over all first-fit runs. Dispatches to plain
/// ordering enumeration for small n and to the state-deduplicating search
/// for n >= 8.
GrundyExact grundy_number_exact(const Graph& g, const OracleLimits& limits = {});

/// The two strategies behind grundy_number_exact, exposed so they can be
/// cross-validated against each other.
GrundyExact grundy_by_enumeration(const Graph& g);
GrundyExact grundy_by_state_dfs(const Graph& g);

int chromatic_number_exact(const Graph& g, const OracleLimits& limits = {});

int independence_number_exact(const Graph& g, const OracleLimits& limits = {});

/// Definitional chordality: no vertex subset induces a cycle of length >= 4.
bool is_chordal_by_definition(const Graph& g, const OracleLimits& limits = {});

/// Every coloring of g that satisfies is_grundy_coloring. Hard cap n <= 6.
std::vector<Coloring> enumerate_grundy_colorings(const Graph& g);

} // namespace grundy::oracle
