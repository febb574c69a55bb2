#pragma once

#include "grundy/graph.hpp"

#include <span>
#include <vector>

namespace grundy {

/// Total vertex coloring; colors[v] is the 1-based color of vertex v.
struct Coloring {
    std::vector<int> colors;

    int size() const noexcept { return static_cast<int>(colors.size()); }
    int max_color() const noexcept;
    /// Number of distinct colors actually used.
    int color_count() const;
};

/// Colors the vertices in the given order, giving each the least positive
/// color absent among its already-colored neighbors. `order` must be a
/// permutation of the vertex set (throws std::invalid_argument otherwise).
Coloring first_fit_color(const Graph& g, std::span<const int> order);

enum class ColorDirection { peo, reverse_peo };

struct GreedyResult {
    Coloring coloring;
    std::vector<int> peo;        // elimination order found for g
    std::vector<int> order_used; // order first-fit ran along
};

/// Two-stage coloring of a chordal graph: compute a perfect elimination
/// ordering, then first-fit along it (direction peo) or along its reverse
/// (reverse_peo, which uses exactly omega(g) colors). Throws NotChordalError.
GreedyResult greedy_grundy_chordal(const Graph& g,
                                   ColorDirection direction = ColorDirection::peo);

/// True iff no edge has equal endpoint colors. Throws std::invalid_argument
/// if the coloring is partial (wrong size or a color < 1).
bool is_proper(const Graph& g, const Coloring& c);

/// True iff c is proper and every vertex with color i has, for each j < i,
/// at least one neighbor colored j.
bool is_grundy_coloring(const Graph& g, const Coloring& c);

} // namespace grundy
