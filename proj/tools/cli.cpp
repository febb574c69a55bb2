#include "cli.hpp"

#include "grundy/bounds.hpp"
#include "grundy/chordal.hpp"
#include "grundy/coloring.hpp"
#include "grundy/dimacs.hpp"
#include "grundy/errors.hpp"
#include "grundy/generate.hpp"
#include "grundy/graph.hpp"
#include "grundy/oracle.hpp"
#include "grundy/recolor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace grundy::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Io {
    std::string format; // "json" or "text"
    std::ostream& out;
    std::ostream& err;
};

json ids_1based(std::span<const int> xs) {
    json a = json::array();
    for (int x : xs) a.push_back(x + 1);
    return a;
}

json waves_1based(const std::vector<std::vector<int>>& waves) {
    json a = json::array();
    for (const auto& w : waves) a.push_back(ids_1based(w));
    return a;
}

json bounds_to_json(const BoundsReport& r) {
    json o{{"n", r.n}, {"delta", r.delta}, {"gamma_greedy", r.gamma_greedy}};
    if (r.gamma_exact) o["gamma_exact"] = *r.gamma_exact;
    if (r.chi_exact) o["chi_exact"] = *r.chi_exact;
    if (r.alpha_exact) o["alpha_exact"] = *r.alpha_exact;
    if (r.gamma_complement) o["gamma_complement"] = *r.gamma_complement;
    if (r.chi_complement) o["chi_complement"] = *r.chi_complement;
    if (r.ktree_k) o["ktree_k"] = *r.ktree_k;
    for (const auto& c : r.checks) o[c.name] = c.holds;
    return o;
}

long long elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

/// Every command emits one report with this envelope.
int finish(Io& io, const std::string& command, json input, json output,
           Clock::time_point t0, int exit_status, const std::string& text) {
    if (io.format == "json") {
        json report{{"command", command},
                    {"input", std::move(input)},
                    {"output", std::move(output)},
                    {"timing_ms", elapsed_ms(t0)},
                    {"exit_status", exit_status}};
        io.out << report.dump(2) << '\n';
    } else {
        io.out << text;
    }
    return exit_status;
}

int finish_error(Io& io, const std::string& command, const std::string& message,
                 Clock::time_point t0, int exit_status) {
    io.err << "error: " << message << '\n';
    if (io.format == "json") {
        json report{{"command", command},
                    {"input", nullptr},
                    {"output", nullptr},
                    {"error", message},
                    {"timing_ms", elapsed_ms(t0)},
                    {"exit_status", exit_status}};
        io.out << report.dump(2) << '\n';
    }
    return exit_status;
}

Graph load_graph(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot read '" + path + "'");
    return parse_dimacs(f);
}

oracle::OracleLimits limits_from_cap(std::optional<int> cap_n) {
    oracle::OracleLimits limits;
    if (cap_n) {
        limits.max_n_orderings = *cap_n;
        limits.max_n_coloring = *cap_n;
        limits.max_n_subsets = *cap_n;
    }
    return limits;
}

ColorDirection parse_direction(const std::string& s) {
    return s == "reverse-peo" ? ColorDirection::reverse_peo : ColorDirection::peo;
}

// ---------------------------------------------------------------- gen

int cmd_gen(Io& io, const std::string& spec_text, std::uint64_t seed,
            const std::string& out_path) {
    const auto t0 = Clock::now();
    const FamilySpec spec = parse_family_spec(spec_text);
    Generated gen = generate(spec, seed);

    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write '" + out_path + "'");
    write_dimacs(gen.graph, f);
    f.close();

    json output{{"n", gen.graph.vertex_count()},
                {"m", gen.graph.edge_count()},
                {"path", out_path}};
    if (gen.split) {
        output["split_independent"] = ids_1based(gen.split->independent);
        output["split_clique"] = ids_1based(gen.split->clique);
    }
    std::ostringstream text;
    text << spec.text << " (seed " << seed << "): n=" << gen.graph.vertex_count()
         << " m=" << gen.graph.edge_count() << " -> " << out_path << '\n';
    return finish(io, "gen", json{{"family", spec.text}, {"seed", seed}}, output, t0, 0,
                  text.str());
}

// ---------------------------------------------------------------- recognize

int cmd_recognize(Io& io, const std::string& path) {
    const auto t0 = Clock::now();
    const Graph g = load_graph(path);

    const PeelResult peel = perfect_elimination_order(g);
    const WaveResult waves = elimination_waves(g);
    const bool split = is_split(g);

    json output{{"n", g.vertex_count()},
                {"m", g.edge_count()},
                {"max_degree", g.max_degree()},
                {"chordal", peel.chordal},
                {"split", split}};
    std::ostringstream text;
    text << "n=" << g.vertex_count() << " m=" << g.edge_count()
         << " max_degree=" << g.max_degree() << '\n';
    text << "chordal: " << (peel.chordal ? "yes" : "no") << '\n';
    text << "split: " << (split ? "yes" : "no") << '\n';
    if (peel.chordal) {
        output["peo"] = ids_1based(peel.order);
        output["peo_verified"] = verify_peo(g, peel.order);
        text << "peo: " << format_order(peel.order) << '\n';
    } else {
        output["residual"] = ids_1based(peel.residual);
        text << "residual: " << format_order(peel.residual) << '\n';
    }
    output["waves"] = waves_1based(waves.waves);
    for (std::size_t i = 0; i < waves.waves.size(); ++i)
        text << "wave " << i + 1 << ": " << format_order(waves.waves[i]) << '\n';
    return finish(io, "recognize", json{{"path", path}}, output, t0, 0, text.str());
}

// ---------------------------------------------------------------- color

int cmd_color(Io& io, const std::string& path, const std::string& direction,
              const std::string& order_override) {
    const auto t0 = Clock::now();
    const Graph g = load_graph(path);

    json input{{"path", path}};
    Coloring coloring;
    std::vector<int> order_used;
    std::optional<std::vector<int>> peo;

    if (!order_override.empty()) {
        order_used = parse_order(order_override);
        coloring = first_fit_color(g, order_used);
        input["order"] = order_override;
    } else {
        input["direction"] = direction;
        GreedyResult r;
        try {
            r = greedy_grundy_chordal(g, parse_direction(direction));
        } catch (const NotChordalError&) {
            throw NotChordalError(
                "graph is not chordal; pass --order to first-fit color it anyway");
        }
        coloring = std::move(r.coloring);
        order_used = std::move(r.order_used);
        peo = std::move(r.peo);
    }

    const bool proper = is_proper(g, coloring);
    const bool grundy_ok = is_grundy_coloring(g, coloring);
    const int exit_status = proper && grundy_ok ? 0 : 1;

    json output{{"n", g.vertex_count()},
                {"order", ids_1based(order_used)},
                {"colors", coloring.colors},
                {"color_count", coloring.color_count()},
                {"proper", proper},
                {"grundy", grundy_ok}};
    if (peo) output["peo"] = ids_1based(*peo);

    std::ostringstream text;
    text << format_coloring(coloring);
    text << "order: " << format_order(order_used) << '\n';
    text << "colors used: " << coloring.color_count() << '\n';
    text << "proper: " << (proper ? "yes" : "no") << " grundy: " << (grundy_ok ? "yes" : "no")
         << '\n';
    return finish(io, "color", input, output, t0, exit_status, text.str());
}

// ---------------------------------------------------------------- exact

int cmd_exact(Io& io, const std::string& path, const std::string& which,
              std::optional<int> cap_n) {
    const auto t0 = Clock::now();
    const Graph g = load_graph(path);
    const auto limits = limits_from_cap(cap_n);

    json output{{"n", g.vertex_count()}};
    std::ostringstream text;
    if (which == "gamma" || which == "all") {
        const auto ge = oracle::grundy_number_exact(g, limits);
        output["gamma"] = ge.gamma;
        output["gamma_witness"] = ids_1based(ge.witness_order);
        text << "gamma = " << ge.gamma << " (witness: " << format_order(ge.witness_order)
             << ")\n";
    }
    if (which == "chi" || which == "all") {
        const int chi = oracle::chromatic_number_exact(g, limits);
        output["chi"] = chi;
        text << "chi = " << chi << '\n';
    }
    if (which == "alpha" || which == "all") {
        const int alpha = oracle::independence_number_exact(g, limits);
        output["alpha"] = alpha;
        text << "alpha = " << alpha << '\n';
    }
    json input{{"path", path}, {"which", which}};
    return finish(io, "exact", input, output, t0, 0, text.str());
}

// ---------------------------------------------------------------- check-bounds

long long parse_exhaustive_n(const std::string& s) {
    // accepts "n=4" or plain "4"
    std::string digits = s;
    if (digits.rfind("n=", 0) == 0) digits = digits.substr(2);
    try {
        std::size_t pos = 0;
        const long long n = std::stoll(digits, &pos);
        if (pos != digits.size()) throw std::invalid_argument(digits);
        return n;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad --exhaustive value '" + s + "', expected n=<int>");
    }
}

int cmd_check_bounds(Io& io, const std::string& path, const std::string& exhaustive,
                     const std::string& family, int count, std::uint64_t seed,
                     std::optional<int> cap_n) {
    const auto t0 = Clock::now();
    const int sources = (!path.empty()) + (!exhaustive.empty()) + (!family.empty());
    if (sources != 1)
        throw std::invalid_argument(
            "check-bounds needs exactly one of: an input file, --exhaustive, --family");
    const auto limits = limits_from_cap(cap_n);

    struct Agg {
        long long evaluated = 0;
        long long violations = 0;
    };
    std::map<std::string, Agg> agg;
    json violations = json::array();
    long long total = 0, evaluated = 0, skipped = 0;
    json input;
    json single_report;

    auto run_instance = [&](const std::string& label, const Graph& g,
                            std::optional<int> ktree_k) {
        ++total;
        BoundsReport rep;
        try {
            rep = grundy_bounds(g, true, limits, ktree_k);
        } catch (const OracleCapError& e) {
            ++skipped;
            io.err << "warning: skipping " << label << ": " << e.what() << '\n';
            return;
        }
        ++evaluated;
        for (const auto& c : rep.checks) {
            auto& a = agg[c.name];
            ++a.evaluated;
            if (!c.holds) {
                ++a.violations;
                if (violations.size() < 20)
                    violations.push_back(
                        json{{"instance", label}, {"check", c.name}, {"report", bounds_to_json(rep)}});
            }
        }
        if (total == 1) single_report = bounds_to_json(rep);
    };

    if (!path.empty()) {
        input = json{{"path", path}};
        run_instance(path, load_graph(path), std::nullopt);
    } else if (!exhaustive.empty()) {
        const long long n = parse_exhaustive_n(exhaustive);
        if (n < 1 || n > 5)
            throw std::invalid_argument("--exhaustive supports n=1..5");
        input = json{{"exhaustive_n", n}};
        const std::uint64_t end = edge_mask_limit(static_cast<int>(n));
        for (std::uint64_t mask = 0; mask < end; ++mask)
            run_instance("n=" + std::to_string(n) + "#" + std::to_string(mask),
                         graph_from_edge_mask(static_cast<int>(n), mask), std::nullopt);
    } else {
        const FamilySpec spec = parse_family_spec(family);
        if (count < 1) throw std::invalid_argument("--count must be positive");
        input = json{{"family", spec.text}, {"count", count}, {"seed", seed}};
        for (int i = 0; i < count; ++i) {
            const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
            Generated gen = generate(spec, s);
            run_instance(spec.text + "#" + std::to_string(i) + " seed=" + std::to_string(s),
                         gen.graph, spec.ktree_k());
        }
    }

    json checks = json::object();
    bool all_hold = true;
    for (const auto& [name, a] : agg) {
        checks[name] = json{{"evaluated", a.evaluated}, {"violations", a.violations}};
        if (a.violations > 0) all_hold = false;
    }
    const int exit_status = all_hold ? 0 : 1;

    json output{{"instances", total},
                {"evaluated", evaluated},
                {"skipped", skipped},
                {"checks", checks},
                {"all_hold", all_hold},
                {"violations", violations}};
    if (total == 1 && !single_report.is_null()) output["report"] = single_report;

    std::ostringstream text;
    text << "instances: " << total << " evaluated: " << evaluated << " skipped: " << skipped
         << '\n';
    for (const auto& [name, a] : agg)
        text << name << ": " << a.evaluated << " evaluated, " << a.violations
             << " violations\n";
    text << (all_hold ? "all checks hold" : "CHECK VIOLATIONS FOUND") << '\n';
    return finish(io, "check-bounds", input, output, t0, exit_status, text.str());
}

// ---------------------------------------------------------------- mutate

struct ScriptStep {
    int lineno = 0;
    std::string text;
    enum class Kind { add_edge, remove_edge, add_vertex, remove_vertex } kind;
    int u = 0, v = 0;           // 1-based
    std::vector<int> neighbors; // 1-based
    int expected_new = 0;       // 1-based id the script expects for add_vertex
};

std::vector<ScriptStep> parse_change_script(std::istream& in) {
    std::vector<ScriptStep> steps;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string cleaned = line;
        for (char& ch : cleaned)
            if (ch == ':') ch = ' ';
        std::istringstream ls(cleaned);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag[0] == '#') continue;

        ScriptStep step;
        step.lineno = lineno;
        step.text = line;
        auto read_id = [&](int& out) {
            long long x = 0;
            if (!(ls >> x) || x < 1)
                throw ParseError("expected a positive 1-based vertex id", lineno);
            out = static_cast<int>(x);
        };
        if (tag == "ae" || tag == "re") {
            step.kind = tag == "ae" ? ScriptStep::Kind::add_edge : ScriptStep::Kind::remove_edge;
            read_id(step.u);
            read_id(step.v);
        } else if (tag == "rv") {
            step.kind = ScriptStep::Kind::remove_vertex;
            read_id(step.u);
        } else if (tag == "av") {
            step.kind = ScriptStep::Kind::add_vertex;
            read_id(step.expected_new);
            long long x = 0;
            while (ls >> x) {
                if (x < 1) throw ParseError("expected a positive 1-based vertex id", lineno);
                step.neighbors.push_back(static_cast<int>(x));
            }
        } else {
            throw ParseError("unknown change '" + tag + "'", lineno);
        }
        std::string extra;
        if (ls >> extra) throw ParseError("trailing token '" + extra + "'", lineno);
        steps.push_back(std::move(step));
    }
    return steps;
}

int cmd_mutate(Io& io, const std::string& path, const std::string& script_path,
               const std::string& direction) {
    const auto t0 = Clock::now();
    Graph g = load_graph(path);

    std::ifstream sf(script_path, std::ios::binary);
    if (!sf) throw std::invalid_argument("cannot read '" + script_path + "'");
    const std::vector<ScriptStep> script = parse_change_script(sf);

    Coloring coloring;
    if (is_chordal(g)) {
        coloring = greedy_grundy_chordal(g, parse_direction(direction)).coloring;
    } else {
        std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
        for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
        coloring = first_fit_color(g, order);
    }

    json steps = json::array();
    std::ostringstream text;
    bool all_verified = true;
    long long total_recolored = 0;
    int exit_status = 0;

    for (const ScriptStep& s : script) {
        GraphChange change = GraphChange::remove_vertex(0);
        switch (s.kind) {
        case ScriptStep::Kind::add_edge:
            change = GraphChange::add_edge(s.u - 1, s.v - 1);
            break;
        case ScriptStep::Kind::remove_edge:
            change = GraphChange::remove_edge(s.u - 1, s.v - 1);
            break;
        case ScriptStep::Kind::remove_vertex:
            change = GraphChange::remove_vertex(s.u - 1);
            break;
        case ScriptStep::Kind::add_vertex: {
            std::vector<int> nbrs;
            for (int w : s.neighbors) nbrs.push_back(w - 1);
            change = GraphChange::add_vertex(std::move(nbrs));
            break;
        }
        }
        try {
            if (s.kind == ScriptStep::Kind::add_vertex &&
                s.expected_new != g.vertex_count() + 1)
                throw GraphError("script expects new vertex " + std::to_string(s.expected_new) +
                                 " but the next id is " + std::to_string(g.vertex_count() + 1));
            RecolorResult rr = recolor_after_change(g, coloring, change);
            const bool proper = is_proper(rr.graph, rr.coloring);
            const bool grundy_ok = is_grundy_coloring(rr.graph, rr.coloring);
            if (!proper || !grundy_ok) all_verified = false;
            total_recolored += rr.recolored;
            steps.push_back(json{{"line", s.lineno},
                                 {"change", s.text},
                                 {"recolored", rr.recolored},
                                 {"proper", proper},
                                 {"grundy", grundy_ok},
                                 {"n", rr.graph.vertex_count()},
                                 {"m", rr.graph.edge_count()}});
            text << "line " << s.lineno << ": " << s.text << " -> recolored " << rr.recolored
                 << (proper && grundy_ok ? "" : " VERIFICATION FAILED") << '\n';
            g = std::move(rr.graph);
            coloring = std::move(rr.coloring);
        } catch (const GraphError& e) {
            steps.push_back(json{{"line", s.lineno}, {"change", s.text}, {"error", e.what()}});
            text << "line " << s.lineno << ": " << s.text << " -> error: " << e.what() << '\n';
            io.err << "error at line " << s.lineno << ": " << e.what() << '\n';
            exit_status = 1;
            break;
        }
    }
    if (!all_verified) exit_status = 1;

    json output{{"step_count", steps.size()},
                {"steps", steps},
                {"total_recolored", total_recolored},
                {"all_verified", all_verified},
                {"final",
                 json{{"n", g.vertex_count()},
                      {"m", g.edge_count()},
                      {"colors", coloring.colors},
                      {"color_count", coloring.color_count()}}}};
    text << "steps: " << steps.size() << " recolored total: " << total_recolored << '\n';
    text << (all_verified ? "all steps verified" : "VERIFICATION FAILURES") << '\n';

    json input{{"path", path}, {"script", script_path}, {"direction", direction}};
    return finish(io, "mutate", input, output, t0, exit_status, text.str());
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chordal-graph recognition and Grundy coloring toolkit"};
    app.name("grundy");

    std::string format = "json";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family into a DIMACS file");
    std::string gen_spec, gen_out;
    std::uint64_t gen_seed = 0;
    gen->add_option("spec", gen_spec,
                    "family spec: path|cycle|complete|star:n=N, ktree:n=N,k=K, "
                    "partial_ktree:n=N,k=K,keep=P, split:s=S,c=C,p=P, gnp:n=N,p=P")
        ->required();
    gen->add_option("-o,--out", gen_out, "output DIMACS path")->required();
    gen->add_option("--seed", gen_seed, "PRNG seed (default 0)");

    // recognize
    auto* rec = app.add_subcommand("recognize", "chordality, split test, PEO and waves");
    std::string rec_path;
    rec->add_option("input", rec_path, "DIMACS .col file")->required();

    // color
    auto* col = app.add_subcommand("color", "greedy coloring along a PEO (or given order)");
    std::string col_path, col_direction = "peo", col_order;
    col->add_option("input", col_path, "DIMACS .col file")->required();
    col->add_option("--direction", col_direction, "coloring direction")
        ->check(CLI::IsMember({"peo", "reverse-peo"}));
    col->add_option("--order", col_order,
                    "explicit 1-based vertex order; allows non-chordal input");

    // exact
    auto* exa = app.add_subcommand("exact", "exact gamma/chi/alpha via the oracle");
    std::string exa_path, exa_which = "all";
    std::optional<int> exa_cap;
    exa->add_option("input", exa_path, "DIMACS .col file")->required();
    exa->add_option("--which", exa_which)->check(CLI::IsMember({"gamma", "chi", "alpha", "all"}));
    exa->add_option("--cap-n", exa_cap, "override the oracle size caps");

    // check-bounds
    auto* chk = app.add_subcommand("check-bounds", "evaluate the inequality battery");
    std::string chk_path, chk_exhaustive, chk_family;
    int chk_count = 1;
    std::uint64_t chk_seed = 0;
    std::optional<int> chk_cap;
    chk->add_option("input", chk_path, "DIMACS .col file");
    chk->add_option("--exhaustive", chk_exhaustive, "all labeled graphs on n vertices (n=1..5)");
    chk->add_option("--family", chk_family, "generator spec to sweep");
    chk->add_option("--count", chk_count, "instances to generate for --family");
    chk->add_option("--seed", chk_seed, "base seed; instance i uses seed+i");
    chk->add_option("--cap-n", chk_cap, "override the oracle size caps");

    // mutate
    auto* mut = app.add_subcommand("mutate", "apply a change script, repairing the coloring");
    std::string mut_path, mut_script, mut_direction = "peo";
    mut->add_option("input", mut_path, "DIMACS .col file")->required();
    mut->add_option("script", mut_script, "change script: ae u v | re u v | av v: n1 n2 .. | rv v")
        ->required();
    mut->add_option("--direction", mut_direction, "initial coloring direction")
        ->check(CLI::IsMember({"peo", "reverse-peo"}));

    for (auto* sub : {gen, rec, col, exa, chk, mut}) sub->fallthrough();
    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("grundy");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    Io io{format, out, err};
    const auto t0 = Clock::now();
    std::string command = "";
    try {
        if (gen->parsed()) {
            command = "gen";
            return cmd_gen(io, gen_spec, gen_seed, gen_out);
        }
        if (rec->parsed()) {
            command = "recognize";
            return cmd_recognize(io, rec_path);
        }
        if (col->parsed()) {
            command = "color";
            return cmd_color(io, col_path, col_direction, col_order);
        }
        if (exa->parsed()) {
            command = "exact";
            return cmd_exact(io, exa_path, exa_which, exa_cap);
        }
        if (chk->parsed()) {
            command = "check-bounds";
            return cmd_check_bounds(io, chk_path, chk_exhaustive, chk_family, chk_count,
                                    chk_seed, chk_cap);
        }
        if (mut->parsed()) {
            command = "mutate";
            return cmd_mutate(io, mut_path, mut_script, mut_direction);
        }
        err << "error: no command\n";
        return 2;
    } catch (const ParseError& e) {
        return finish_error(io, command, e.what(), t0, 2);
    } catch (const OracleCapError& e) {
        return finish_error(io, command, e.what(), t0, 1);
    } catch (const NotChordalError& e) {
        return finish_error(io, command, e.what(), t0, 1);
    } catch (const GraphError& e) {
        return finish_error(io, command, e.what(), t0, 1);
    } catch (const std::invalid_argument& e) {
        return finish_error(io, command, e.what(), t0, 2);
    } catch (const std::exception& e) {
        return finish_error(io, command, e.what(), t0, 1);
    }
}

} // namespace grundy::cli
