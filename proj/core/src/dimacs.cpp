#include "grundy/dimacs.hpp"

#include <algorithm>
#include <sstream>

namespace grundy {

namespace {

bool read_int(std::istringstream& in, long long& out) {
    return static_cast<bool>(in >> out);
}

} // namespace

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_p = false;
    long long n = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_p) throw ParseError("duplicate problem line", lineno);
            std::string fmt;
            long long m = 0;
            if (!(ls >> fmt) || fmt != "edge" || !read_int(ls, n) || !read_int(ls, m) ||
                n < 0 || m < 0)
                throw ParseError("malformed problem line, expected 'p edge N M'", lineno);
            if (n > 100'000'000)
                throw ParseError("vertex count " + std::to_string(n) + " too large", lineno);
            have_p = true;
            edges.reserve(static_cast<std::size_t>(std::min(m, 1LL << 20)));
            continue;
        }
        if (tag == "e") {
            if (!have_p) throw ParseError("missing problem line", lineno);
            long long u = 0, v = 0;
            if (!read_int(ls, u) || !read_int(ls, v))
                throw ParseError("malformed edge line", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("edge endpoint out of range 1.." + std::to_string(n), lineno);
            if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), lineno);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError("malformed token '" + tag + "'", lineno);
    }
    if (!have_p) throw ParseError("missing problem line");
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    write_dimacs(g, out);
    return out.str();
}

std::string format_order(std::span<const int> order) {
    std::ostringstream out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out << ' ';
        out << order[i] + 1;
    }
    return out.str();
}

std::vector<int> parse_order(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
            out.push_back(v - 1);
        } catch (const std::exception&) {
            throw ParseError("bad vertex id '" + tok + "' in order");
        }
    }
    return out;
}

std::string format_coloring(const Coloring& c) {
    std::ostringstream out;
    for (int v = 0; v < c.size(); ++v) out << "v " << v + 1 << ' ' << c.colors[v] << '\n';
    return out.str();
}

} // namespace grundy
