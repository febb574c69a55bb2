#include "grundy/coloring.hpp"

#include "grundy/chordal.hpp"
#include "grundy/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace grundy {

int Coloring::max_color() const noexcept {
    int m = 0;
    for (int c : colors) m = std::max(m, c);
    return m;
}

int Coloring::color_count() const {
    const int m = max_color();
    if (m == 0) return 0;
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    int k = 0;
    for (int c : colors)
        if (c >= 1 && !seen[c]) {
            seen[c] = 1;
            ++k;
        }
    return k;
}

namespace {

void require_permutation(const Graph& g, std::span<const int> order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order is not a permutation of the vertex set");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("order is not a permutation of the vertex set");
        seen[v] = 1;
    }
}

void require_total(const Graph& g, const Coloring& c) {
    if (c.size() != g.vertex_count())
        throw std::invalid_argument("partial coloring: size mismatch");
    for (int col : c.colors)
        if (col < 1) throw std::invalid_argument("partial coloring: color < 1");
}

} // namespace

Coloring first_fit_color(const Graph& g, std::span<const int> order) {
    require_permutation(g, order);
    const int n = g.vertex_count();
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    std::vector<int> stamp(static_cast<std::size_t>(n) + 2, -1);
    int step = 0;
    for (int v : order) {
        for (int w : g.neighbors(v))
            if (colors[w] != 0) stamp[colors[w]] = step;
        int c = 1;
        while (stamp[c] == step) ++c;
        colors[v] = c;
        ++step;
    }
    return Coloring{std::move(colors)};
}

GreedyResult greedy_grundy_chordal(const Graph& g, ColorDirection direction) {
    PeelResult peel = perfect_elimination_order(g);
    if (!peel.chordal) throw NotChordalError();
    GreedyResult r;
    r.peo = std::move(peel.order);
    r.order_used = r.peo;
    if (direction == ColorDirection::reverse_peo)
        std::reverse(r.order_used.begin(), r.order_used.end());
    r.coloring = first_fit_color(g, r.order_used);
    return r;
}

bool is_proper(const Graph& g, const Coloring& c) {
    require_total(g, c);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && c.colors[u] == c.colors[v]) return false;
    return true;
}

bool is_grundy_coloring(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) return false;
    const int n = g.vertex_count();
    std::vector<char> seen;
    for (int v = 0; v < n; ++v) {
        const int cv = c.colors[v];
        if (cv == 1) continue;
        seen.assign(static_cast<std::size_t>(cv), 0);
        int found = 0;
        for (int w : g.neighbors(v)) {
            const int cw = c.colors[w];
            if (cw < cv && !seen[cw]) {
                seen[cw] = 1;
                ++found;
            }
        }
        if (found < cv - 1) return false;
    }
    return true;
}

} // namespace grundy
