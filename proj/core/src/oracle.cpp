#include "grundy/oracle.hpp"

#include "grundy/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>

namespace grundy::oracle {

namespace {

void require_cap(const char* cap_name, int cap, int n) {
    if (n > cap) throw OracleCapError(cap_name, cap, n);
}

int mex_color(const Graph& g, const std::vector<int>& colors, int v) {
    std::uint32_t used = 0; // colors fit in deg(v)+1 <= 32 at oracle sizes
    for (int w : g.neighbors(v)) {
        const int c = colors[w];
        if (c >= 1 && c <= 32) used |= std::uint32_t{1} << (c - 1);
    }
    return std::countr_one(used) + 1;
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;
    return adj;
}

} // namespace

GrundyExact grundy_by_enumeration(const Graph& g) {
    const int n = g.vertex_count();
    GrundyExact best;
    if (n == 0) return best;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> colors(static_cast<std::size_t>(n));
    do {
        std::fill(colors.begin(), colors.end(), 0);
        int used = 0;
        for (int v : order) {
            const int c = mex_color(g, colors, v);
            colors[v] = c;
            used = std::max(used, c);
        }
        if (used > best.gamma) {
            best.gamma = used;
            best.witness_order = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

namespace {

// The color a first-fit run can still reach depends only on the current
// partial coloring, not on the order that produced it, so the search
// deduplicates states by the coloring vector.
class GrundyStateSearch {
public:
    explicit GrundyStateSearch(const Graph& g)
        : g_(g), n_(g.vertex_count()), colors_(static_cast<std::size_t>(n_), 0) {}

    GrundyExact run() {
        GrundyExact result;
        if (n_ == 0) return result;
        result.gamma = dfs(0, 0);
        // Rebuild the lexicographically smallest witness by always taking the
        // smallest next vertex that still attains the optimum.
        std::fill(colors_.begin(), colors_.end(), 0);
        int current_max = 0;
        for (int step = 0; step < n_; ++step) {
            for (int v = 0; v < n_; ++v) {
                if (colors_[v] != 0) continue;
                const int c = mex_color(g_, colors_, v);
                colors_[v] = c;
                if (dfs(step + 1, std::max(current_max, c)) == result.gamma) {
                    result.witness_order.push_back(v);
                    current_max = std::max(current_max, c);
                    break;
                }
                colors_[v] = 0;
            }
        }
        return result;
    }

private:
    int dfs(int colored, int current_max) {
        if (colored == n_) return current_max;
        std::string key(colors_.begin(), colors_.end());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        int best = 0;
        for (int v = 0; v < n_; ++v) {
            if (colors_[v] != 0) continue;
            const int c = mex_color(g_, colors_, v);
            colors_[v] = c;
            best = std::max(best, dfs(colored + 1, std::max(current_max, c)));
            colors_[v] = 0;
        }
        memo_.emplace(std::move(key), best);
        return best;
    }

    const Graph& g_;
    const int n_;
    std::vector<int> colors_;
    std::unordered_map<std::string, int> memo_;
};

} // namespace

GrundyExact grundy_by_state_dfs(const Graph& g) { return GrundyStateSearch(g).run(); }

GrundyExact grundy_number_exact(const Graph& g, const OracleLimits& limits) {
    require_cap("max_n_orderings", limits.max_n_orderings, g.vertex_count());
    if (g.vertex_count() >= 8) return grundy_by_state_dfs(g);
    return grundy_by_enumeration(g);
}

namespace {

bool colorable_with(const Graph& g, const std::vector<int>& order, int k) {
    const int n = g.vertex_count();
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    // Backtracking with canonical color symmetry breaking: a vertex may open
    // at most one new color beyond those already used.
    std::vector<int> max_used(static_cast<std::size_t>(n) + 1, 0);
    int idx = 0;
    std::vector<int> attempt(static_cast<std::size_t>(n), 0);
    while (idx >= 0 && idx < n) {
        const int v = order[idx];
        const int limit = std::min(k, max_used[idx] + 1);
        int c = attempt[idx] + 1;
        bool placed = false;
        for (; c <= limit; ++c) {
            bool conflict = false;
            for (int w : g.neighbors(v))
                if (colors[w] == c) {
                    conflict = true;
                    break;
                }
            if (!conflict) {
                colors[v] = c;
                attempt[idx] = c;
                max_used[idx + 1] = std::max(max_used[idx], c);
                placed = true;
                break;
            }
        }
        if (placed) {
            ++idx;
            if (idx < n) attempt[idx] = 0;
        } else {
            colors[v] = 0;
            attempt[idx] = 0;
            --idx;
            if (idx >= 0) colors[order[idx]] = 0;
        }
    }
    return idx == n;
}

int greedy_clique_lower_bound(const Graph& g) {
    const int n = g.vertex_count();
    int best = n > 0 ? 1 : 0;
    for (int start = 0; start < n; ++start) {
        std::vector<int> clique{start};
        for (int v : g.neighbors(start)) {
            bool ok = true;
            for (int u : clique)
                if (u != start && !g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

} // namespace

int chromatic_number_exact(const Graph& g, const OracleLimits& limits) {
    const int n = g.vertex_count();
    require_cap("max_n_coloring", limits.max_n_coloring, n);
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });

    const int lb = greedy_clique_lower_bound(g);
    for (int k = lb; k <= n; ++k)
        if (colorable_with(g, order, k)) return k;
    return n;
}

namespace {

int mis_search(const std::vector<std::uint64_t>& adj, std::uint64_t avail, int count,
               int& best) {
    best = std::max(best, count);
    if (avail == 0) return best;
    if (count + std::popcount(avail) <= best) return best;
    // Branch on the highest-degree available vertex.
    int pick = -1, pick_deg = -1;
    for (std::uint64_t rest = avail; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        const int d = std::popcount(adj[v] & avail);
        if (d > pick_deg) {
            pick_deg = d;
            pick = v;
        }
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    mis_search(adj, avail & ~bit & ~adj[pick], count + 1, best);
    mis_search(adj, avail & ~bit, count, best);
    return best;
}

} // namespace

int independence_number_exact(const Graph& g, const OracleLimits& limits) {
    const int n = g.vertex_count();
    require_cap("max_n_subsets", limits.max_n_subsets, n);
    if (n == 0) return 0;
    const auto adj = adjacency_masks(g);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    int best = 0;
    return mis_search(adj, all, 0, best);
}

bool is_chordal_by_definition(const Graph& g, const OracleLimits& limits) {
    const int n = g.vertex_count();
    require_cap("max_n_subsets", limits.max_n_subsets, n);
    if (n < 4) return true;
    const auto adj = adjacency_masks(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < total; ++s) {
        if (std::popcount(s) < 4) continue;
        // Induced cycle: every member has exactly two neighbors inside s and
        // the induced subgraph is connected.
        bool all_degree_two = true;
        for (std::uint64_t rest = s; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::popcount(adj[v] & s) != 2) {
                all_degree_two = false;
                break;
            }
        }
        if (!all_degree_two) continue;
        std::uint64_t visited = 0;
        std::uint64_t frontier = s & (~s + 1); // lowest bit of s
        while (frontier) {
            visited |= frontier;
            std::uint64_t next = 0;
            for (std::uint64_t rest = frontier; rest;) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                next |= adj[v] & s;
            }
            frontier = next & ~visited;
        }
        if (visited == s) return false; // found an induced cycle of length >= 4
    }
    return true;
}

std::vector<Coloring> enumerate_grundy_colorings(const Graph& g) {
    const int n = g.vertex_count();
    require_cap("grundy enumeration (hard cap)", 6, n);
    std::vector<Coloring> out;
    if (n == 0) {
        out.push_back(Coloring{});
        return out;
    }
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    // A vertex colored i needs i-1 distinctly colored neighbors, so colors
    // beyond deg(v)+1 can never appear in a valid coloring.
    std::vector<int> limit(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) limit[v] = std::min(n, g.degree(v) + 1);

    auto recurse = [&](auto&& self, int v) -> void {
        if (v == n) {
            Coloring c{colors};
            if (is_grundy_coloring(g, c)) out.push_back(std::move(c));
            return;
        }
        for (int c = 1; c <= limit[v]; ++c) {
            colors[v] = c;
            self(self, v + 1);
        }
        colors[v] = 0;
    };
    recurse(recurse, 0);
    return out;
}

} // namespace grundy::oracle
