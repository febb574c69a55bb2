#include "grundy/chordal.hpp"

#include "grundy/errors.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace grundy {

bool is_simplicial(const Graph& g, int v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) return false;
    return true;
}

std::vector<int> simplicial_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_simplicial(g, v)) out.push_back(v);
    return out;
}

namespace {

// Incremental simplicial tracking for the peel. Removing a vertex can only
// turn its neighbors simplicial (a subset of a clique is a clique), so a
// vertex that became simplicial never needs re-examination. For vertices
// that are not simplicial we cache one non-adjacent neighbor pair; while
// both witnesses are alive the vertex cannot have become simplicial, which
// keeps rechecks O(1) in the common case.
class Peeler {
public:
    explicit Peeler(const Graph& g)
        : g_(g),
          alive_(static_cast<std::size_t>(g.vertex_count()), true),
          witness_(static_cast<std::size_t>(g.vertex_count()), {-1, -1}),
          alive_count_(g.vertex_count()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (scan(v)) candidates_.insert(v);
    }

    int alive_count() const noexcept { return alive_count_; }
    const std::set<int>& candidates() const noexcept { return candidates_; }

    void remove(int v) {
        alive_[v] = false;
        candidates_.erase(v);
        --alive_count_;
        for (int u : g_.neighbors(v)) {
            if (!alive_[u] || candidates_.count(u)) continue;
            auto [x, y] = witness_[u];
            if (x != v && y != v) continue; // witness pair intact
            if (scan(u)) candidates_.insert(u);
        }
    }

    std::vector<int> alive_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (alive_[v]) out.push_back(v);
        return out;
    }

private:
    // True if v is simplicial in the residual graph; otherwise records a
    // non-adjacent alive neighbor pair.
    bool scan(int v) {
        buf_.clear();
        for (int w : g_.neighbors(v))
            if (alive_[w]) buf_.push_back(w);
        for (std::size_t i = 0; i < buf_.size(); ++i)
            for (std::size_t j = i + 1; j < buf_.size(); ++j)
                if (!g_.has_edge(buf_[i], buf_[j])) {
                    witness_[v] = {buf_[i], buf_[j]};
                    return false;
                }
        return true;
    }

    const Graph& g_;
    std::vector<char> alive_;
    std::vector<std::pair<int, int>> witness_;
    std::set<int> candidates_;
    std::vector<int> buf_;
    int alive_count_;
};

} // namespace

PeelResult perfect_elimination_order(const Graph& g) {
    PeelResult r;
    Peeler peeler(g);
    r.order.reserve(static_cast<std::size_t>(g.vertex_count()));
    while (peeler.alive_count() > 0) {
        if (peeler.candidates().empty()) {
            r.residual = peeler.alive_vertices();
            r.chordal = false;
            return r;
        }
        const int v = *peeler.candidates().begin();
        r.order.push_back(v);
        peeler.remove(v);
    }
    r.chordal = true;
    return r;
}

WaveResult elimination_waves(const Graph& g) {
    WaveResult r;
    Peeler peeler(g);
    while (peeler.alive_count() > 0) {
        if (peeler.candidates().empty()) {
            r.residual = peeler.alive_vertices();
            r.chordal = false;
            return r;
        }
        std::vector<int> wave(peeler.candidates().begin(), peeler.candidates().end());
        for (int v : wave) peeler.remove(v);
        r.waves.push_back(std::move(wave));
    }
    r.chordal = true;
    return r;
}

bool verify_peo(const Graph& g, std::span<const int> order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order is not a permutation of the vertex set");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("order is not a permutation of the vertex set");
        pos[v] = i;
    }
    std::vector<int> later;
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        later.clear();
        for (int w : g.neighbors(v))
            if (pos[w] > i) later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).chordal; }

bool is_split(const Graph& g) { return is_chordal(g) && is_chordal(complement(g)); }

CliqueResult max_clique_chordal(const Graph& g) {
    const PeelResult peel = perfect_elimination_order(g);
    if (!peel.chordal) throw NotChordalError();
    const int n = g.vertex_count();
    CliqueResult best;
    if (n == 0) return best;
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[peel.order[i]] = i;
    for (int i = 0; i < n; ++i) {
        const int v = peel.order[i];
        std::vector<int> members{v};
        for (int w : g.neighbors(v))
            if (pos[w] > i) members.push_back(w);
        if (static_cast<int>(members.size()) > best.size) {
            best.size = static_cast<int>(members.size());
            std::sort(members.begin(), members.end());
            best.members = std::move(members);
        }
    }
    return best;
}

} // namespace grundy
