#include "grundy/generate.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <map>
#include <stdexcept>

namespace grundy {

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be positive");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be positive");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star: n must be positive");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

Graph k_tree(int n, int k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("ktree: k must be positive");
    if (n <= k) throw std::invalid_argument("ktree: n must exceed k");
    Graph g(n);
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) g.add_edge(i, j);

    // All k-subsets of the initial K_{k+1}, then k new k-cliques per vertex.
    std::vector<std::vector<int>> cliques;
    for (int drop = 0; drop <= k; ++drop) {
        std::vector<int> q;
        for (int i = 0; i <= k; ++i)
            if (i != drop) q.push_back(i);
        cliques.push_back(std::move(q));
    }
    for (int v = k + 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
        const std::vector<int> q = cliques[pick(rng)];
        for (int u : q) g.add_edge(v, u);
        for (int drop = 0; drop < k; ++drop) {
            std::vector<int> nq;
            nq.reserve(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                if (i != drop) nq.push_back(q[i]);
            nq.push_back(v);
            cliques.push_back(std::move(nq));
        }
    }
    assert(g.validate());
    return g;
}

Graph partial_k_tree(int n, int k, double keep_prob, Rng& rng) {
    if (keep_prob < 0.0 || keep_prob > 1.0)
        throw std::invalid_argument("partial_ktree: keep must be in [0, 1]");
    const Graph full = k_tree(n, k, rng);
    std::bernoulli_distribution keep(keep_prob);
    std::vector<std::pair<int, int>> kept;
    for (auto e : full.edges())
        if (keep(rng)) kept.push_back(e);
    return Graph::from_edges(n, kept);
}

Graph split_graph(int s, int c, double cross_prob, Rng& rng, SplitPartition* partition) {
    if (s < 0 || c < 0 || s + c < 1)
        throw std::invalid_argument("split: need s >= 0, c >= 0, s + c >= 1");
    if (cross_prob < 0.0 || cross_prob > 1.0)
        throw std::invalid_argument("split: p must be in [0, 1]");
    Graph g(s + c);
    for (int i = s; i < s + c; ++i)
        for (int j = i + 1; j < s + c; ++j) g.add_edge(i, j);
    std::bernoulli_distribution cross(cross_prob);
    for (int i = 0; i < s; ++i)
        for (int j = s; j < s + c; ++j)
            if (cross(rng)) g.add_edge(i, j);
    if (partition) {
        partition->independent.clear();
        partition->clique.clear();
        for (int i = 0; i < s; ++i) partition->independent.push_back(i);
        for (int j = s; j < s + c; ++j) partition->clique.push_back(j);
    }
    return g;
}

Graph gnp(int n, double p, Rng& rng) {
    if (n < 1) throw std::invalid_argument("gnp: n must be positive");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p must be in [0, 1]");
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

std::uint64_t edge_mask_limit(int n) {
    const int pairs = n * (n - 1) / 2;
    if (n < 0 || pairs > 63) throw std::invalid_argument("edge mask supports at most 63 pairs");
    return std::uint64_t{1} << pairs;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (mask >= edge_mask_limit(n)) throw std::invalid_argument("edge mask out of range");
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) g.add_edge(i, j);
    return g;
}

bool FamilySpec::randomized() const noexcept {
    switch (kind) {
    case Kind::ktree:
    case Kind::partial_ktree:
    case Kind::split:
    case Kind::gnp:
        return true;
    default:
        return false;
    }
}

std::optional<int> FamilySpec::ktree_k() const noexcept {
    if (kind == Kind::ktree || kind == Kind::partial_ktree) return k;
    return std::nullopt;
}

namespace {

long long parse_ll(std::string_view sv, std::string_view key) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc{} || ptr != sv.data() + sv.size())
        throw ParseError("bad integer for '" + std::string(key) + "' in family spec");
    return value;
}

double parse_double(std::string_view sv, std::string_view key) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(std::string(sv), &pos);
        if (pos != sv.size()) throw std::invalid_argument("trailing");
        return value;
    } catch (const std::exception&) {
        throw ParseError("bad number for '" + std::string(key) + "' in family spec");
    }
}

} // namespace

FamilySpec parse_family_spec(std::string_view text) {
    FamilySpec spec;
    spec.text = std::string(text);

    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    static const std::map<std::string_view, FamilySpec::Kind> kinds = {
        {"path", FamilySpec::Kind::path},
        {"cycle", FamilySpec::Kind::cycle},
        {"complete", FamilySpec::Kind::complete},
        {"star", FamilySpec::Kind::star},
        {"ktree", FamilySpec::Kind::ktree},
        {"partial_ktree", FamilySpec::Kind::partial_ktree},
        {"split", FamilySpec::Kind::split},
        {"gnp", FamilySpec::Kind::gnp},
    };
    const auto kit = kinds.find(name);
    if (kit == kinds.end())
        throw ParseError("unknown family '" + std::string(name) + "'");
    spec.kind = kit->second;

    std::map<std::string, std::string, std::less<>> kv;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos || eq == 0)
                throw ParseError("expected key=value in family spec, got '" +
                                 std::string(item) + "'");
            kv.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }

    auto take_int = [&](const char* key, int& out) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw ParseError("family '" + std::string(name) + "' requires '" + key + "'");
        out = static_cast<int>(parse_ll(it->second, key));
        kv.erase(it);
    };
    auto take_double = [&](const char* key, double& out) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw ParseError("family '" + std::string(name) + "' requires '" + key + "'");
        out = parse_double(it->second, key);
        kv.erase(it);
    };

    switch (spec.kind) {
    case FamilySpec::Kind::path:
    case FamilySpec::Kind::cycle:
    case FamilySpec::Kind::complete:
    case FamilySpec::Kind::star:
        take_int("n", spec.n);
        break;
    case FamilySpec::Kind::ktree:
        take_int("n", spec.n);
        take_int("k", spec.k);
        break;
    case FamilySpec::Kind::partial_ktree:
        take_int("n", spec.n);
        take_int("k", spec.k);
        take_double("keep", spec.p);
        break;
    case FamilySpec::Kind::split:
        take_int("s", spec.s);
        take_int("c", spec.c);
        take_double("p", spec.p);
        break;
    case FamilySpec::Kind::gnp:
        take_int("n", spec.n);
        take_double("p", spec.p);
        break;
    }
    if (!kv.empty())
        throw ParseError("unknown key '" + kv.begin()->first + "' for family '" +
                         std::string(name) + "'");
    return spec;
}

Generated generate(const FamilySpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    Generated out;
    switch (spec.kind) {
    case FamilySpec::Kind::path:
        out.graph = path_graph(spec.n);
        break;
    case FamilySpec::Kind::cycle:
        out.graph = cycle_graph(spec.n);
        break;
    case FamilySpec::Kind::complete:
        out.graph = complete_graph(spec.n);
        break;
    case FamilySpec::Kind::star:
        out.graph = star_graph(spec.n);
        break;
    case FamilySpec::Kind::ktree:
        out.graph = k_tree(spec.n, spec.k, rng);
        break;
    case FamilySpec::Kind::partial_ktree:
        out.graph = partial_k_tree(spec.n, spec.k, spec.p, rng);
        break;
    case FamilySpec::Kind::split: {
        SplitPartition part;
        out.graph = split_graph(spec.s, spec.c, spec.p, rng, &part);
        out.split = std::move(part);
        break;
    }
    case FamilySpec::Kind::gnp:
        out.graph = gnp(spec.n, spec.p, rng);
        break;
    }
    return out;
}

} // namespace grundy
