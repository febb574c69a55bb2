#pragma once

#include "grundy/graph.hpp"
#include "grundy/oracle.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grundy {

struct BoundCheck {
    std::string name;
    bool holds = false;
};

/// Per-graph record of the Grundy-related quantities and which of the
/// standard inequalities hold for it. Checks are reported, never asserted:
/// a false entry surfaces as data for the caller to act on.
struct BoundsReport {
    int n = 0;
    int delta = 0;        // maximum degree
    int gamma_greedy = 0; // colors used by one greedy first-fit run
    std::optional<int> gamma_exact;
    std::optional<int> chi_exact;
    std::optional<int> alpha_exact;
    std::optional<int> gamma_complement;
    std::optional<int> chi_complement;
    std::optional<int> ktree_k;
    std::vector<BoundCheck> checks;

    bool all_hold() const;
    const BoundCheck* find(std::string_view name) const;
};

/// Fills gamma_greedy from a greedy first-fit run (along a perfect
/// elimination order when g is chordal, ascending vertex ids otherwise).
/// When with_oracle is set, computes the exact quantities for g and its
/// complement and evaluates each named inequality; propagates OracleCapError
/// if g exceeds the limits. ktree_k enables the partial-k-tree log bound.
BoundsReport grundy_bounds(const Graph& g, bool with_oracle,
                           const oracle::OracleLimits& limits = {},
                           std::optional<int> ktree_k = std::nullopt);

} // namespace grundy
