#include "grundy/recolor.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

namespace grundy {

namespace {

// Violation against the current partial coloring: a same-colored neighbor,
// or a missing witness color j < c(v) among colored neighbors.
bool violated(const Graph& g, const std::vector<int>& colors, int v) {
    const int cv = colors[v];
    std::vector<char> seen(static_cast<std::size_t>(cv), 0);
    int found = 0;
    for (int w : g.neighbors(v)) {
        const int cw = colors[w];
        if (cw == cv) return true;
        if (cw >= 1 && cw < cv && !seen[cw]) {
            seen[cw] = 1;
            ++found;
        }
    }
    return found < cv - 1;
}

} // namespace

RecolorResult recolor_after_change(const Graph& g, const Coloring& before,
                                   const GraphChange& change) {
    if (!is_grundy_coloring(g, before))
        throw std::invalid_argument("coloring is not Grundy-valid for the graph");

    ApplyResult applied = apply_change(g, change);
    const Graph& h = applied.graph;
    const int n = h.vertex_count();

    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (int old = 0; old < g.vertex_count(); ++old)
        if (applied.id_map[old] >= 0) colors[applied.id_map[old]] = before.colors[old];

    std::deque<int> work;
    std::vector<char> queued(static_cast<std::size_t>(n), 0);
    auto push = [&](int v) {
        if (v >= 0 && v < n && !queued[v]) {
            queued[v] = 1;
            work.push_back(v);
        }
    };

    switch (change.kind) {
    case GraphChange::Kind::add_edge:
    case GraphChange::Kind::remove_edge:
        push(applied.id_map[change.u]);
        push(applied.id_map[change.v]);
        break;
    case GraphChange::Kind::remove_vertex:
        // Former neighbors may have lost a witness.
        for (int w : g.neighbors(change.u)) push(applied.id_map[w]);
        break;
    case GraphChange::Kind::add_vertex:
        // The new vertex starts uncolored; nothing existing can break.
        break;
    }

    // Uncoloring a vertex can strip a witness from its neighbors, so iterate
    // to a fixpoint. Each vertex is uncolored at most once.
    while (!work.empty()) {
        const int v = work.front();
        work.pop_front();
        queued[v] = 0;
        if (colors[v] == 0) continue;
        if (!violated(h, colors, v)) continue;
        colors[v] = 0;
        for (int w : h.neighbors(v))
            if (colors[w] != 0) push(w);
    }

    RecolorResult r;
    std::vector<int> stamp(static_cast<std::size_t>(n) + 2, -1);
    int step = 0;
    for (int v = 0; v < n; ++v) {
        if (colors[v] != 0) continue;
        for (int w : h.neighbors(v))
            if (colors[w] != 0) stamp[colors[w]] = step;
        int c = 1;
        while (stamp[c] == step) ++c;
        colors[v] = c;
        ++step;
        ++r.recolored;
    }

    r.graph = std::move(applied.graph);
    r.coloring = Coloring{std::move(colors)};
    r.id_map = std::move(applied.id_map);
    r.new_vertex = applied.new_vertex;
    assert(is_grundy_coloring(r.graph, r.coloring));
    return r;
}

} // namespace grundy
