#pragma once

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"

#include <vector>

namespace grundy {

struct RecolorResult {
    Graph graph;
    Coloring coloring;
    /// old id -> new id, as in ApplyResult.
    std::vector<int> id_map;
    int new_vertex = -1;
    /// Vertices that received a color during repair (including a vertex the
    /// change added).
    int recolored = 0;
};

/// Applies `change` to g and repairs `before` into a coloring of the new
/// graph that is proper and Grundy-valid again. Vertices whose properness or
/// smaller-color witnesses broke are uncolored (transitively, to a fixpoint)
/// and then re-colored first-fit in ascending id order. Throws GraphError on
/// an invalid change and std::invalid_argument when `before` is not a valid
/// Grundy coloring of g.
RecolorResult recolor_after_change(const Graph& g, const Coloring& before,
                                   const GraphChange& change);

} // namespace grundy
