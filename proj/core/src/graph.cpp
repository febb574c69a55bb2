#include "grundy/graph.hpp"

#include <algorithm>
#include <cassert>

namespace grundy {

Graph::Graph(int n) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::require_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw GraphError("vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(vertex_count()) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    assert(g.validate());
    return g;
}

void Graph::add_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return; // already present
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v)
        throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
    au.erase(it);
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --m_;
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
}

int Graph::degree(int v) const {
    require_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return static_cast<int>(d);
}

std::span<const int> Graph::neighbors(int v) const {
    require_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const int w = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::validate() const noexcept {
    long long half_edges = 0;
    for (int u = 0; u < vertex_count(); ++u) {
        const auto& a = adj_[u];
        if (!std::is_sorted(a.begin(), a.end())) return false;
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
        for (int v : a) {
            if (v < 0 || v >= vertex_count() || v == u) return false;
            if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u)) return false;
        }
        half_edges += static_cast<long long>(a.size());
    }
    return half_edges == 2 * m_;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        std::size_t i = static_cast<std::size_t>(
            std::upper_bound(nb.begin(), nb.end(), u) - nb.begin());
        for (int v = u + 1; v < n; ++v) {
            if (i < nb.size() && nb[i] == v) {
                ++i;
                continue;
            }
            out.add_edge(u, v);
        }
    }
    assert(out.validate());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
    InducedSubgraph r;
    const int n = g.vertex_count();
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    for (int v : kept)
        if (v < 0 || v >= n)
            throw GraphError("unknown vertex " + std::to_string(v) + " in keep set");

    r.old_to_new.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) r.old_to_new[kept[i]] = static_cast<int>(i);
    r.new_to_old = kept;

    Graph h(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (int w : g.neighbors(kept[i])) {
            const int j = r.old_to_new[w];
            if (j > static_cast<int>(i)) h.add_edge(static_cast<int>(i), j);
        }
    r.graph = std::move(h);
    assert(r.graph.validate());
    return r;
}

GraphChange GraphChange::add_vertex(std::vector<int> neighbors) {
    GraphChange c;
    c.kind = Kind::add_vertex;
    c.neighbors = std::move(neighbors);
    return c;
}

GraphChange GraphChange::remove_vertex(int v) {
    GraphChange c;
    c.kind = Kind::remove_vertex;
    c.u = v;
    return c;
}

GraphChange GraphChange::add_edge(int u, int v) {
    GraphChange c;
    c.kind = Kind::add_edge;
    c.u = u;
    c.v = v;
    return c;
}

GraphChange GraphChange::remove_edge(int u, int v) {
    GraphChange c;
    c.kind = Kind::remove_edge;
    c.u = u;
    c.v = v;
    return c;
}

ApplyResult apply_change(const Graph& g, const GraphChange& change) {
    const int n = g.vertex_count();
    ApplyResult r;

    auto identity_map = [&] {
        r.id_map.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) r.id_map[i] = i;
    };

    switch (change.kind) {
    case GraphChange::Kind::add_edge: {
        if (change.u == change.v)
            throw GraphError("add_edge endpoints must be distinct");
        Graph h = g;
        if (h.has_edge(change.u, change.v))
            throw GraphError("edge " + std::to_string(change.u) + "-" +
                             std::to_string(change.v) + " already present");
        h.add_edge(change.u, change.v);
        r.graph = std::move(h);
        identity_map();
        break;
    }
    case GraphChange::Kind::remove_edge: {
        Graph h = g;
        h.remove_edge(change.u, change.v);
        r.graph = std::move(h);
        identity_map();
        break;
    }
    case GraphChange::Kind::add_vertex: {
        Graph h = g;
        const int nv = h.add_vertex();
        for (int w : change.neighbors) h.add_edge(nv, w);
        r.graph = std::move(h);
        identity_map();
        r.new_vertex = nv;
        break;
    }
    case GraphChange::Kind::remove_vertex: {
        const int v = change.u;
        if (v < 0 || v >= n)
            throw GraphError("vertex " + std::to_string(v) + " out of range [0, " +
                             std::to_string(n) + ")");
        identity_map();
        r.id_map[v] = -1;
        if (v != n - 1) r.id_map[n - 1] = v;
        Graph h(n - 1);
        for (auto [a, b] : g.edges()) {
            if (a == v || b == v) continue;
            h.add_edge(r.id_map[a], r.id_map[b]);
        }
        r.graph = std::move(h);
        break;
    }
    }
    assert(r.graph.validate());
    return r;
}

} // namespace grundy
