#include "lexelim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lexelim/algorithms.hpp"
#include "lexelim/chordal.hpp"
#include "lexelim/configurations.hpp"
#include "lexelim/elimination.hpp"
#include "lexelim/generators.hpp"
#include "lexelim/graph_io.hpp"

namespace lexelim {

namespace {

// Kinds listed by `recognize`: the Truemper-related configurations.
constexpr std::array<ConfigKind, 17> kReportedKinds{
    ConfigKind::Hole,      ConfigKind::FourHole,   ConfigKind::LongHole,       ConfigKind::EvenHole,
    ConfigKind::Theta,     ConfigKind::SquareTheta, ConfigKind::Prism,         ConfigKind::Pyramid,
    ConfigKind::Wheel,     ConfigKind::OneWheel,   ConfigKind::TwoWheel,       ConfigKind::ThreeWheel,
    ConfigKind::UniversalWheel, ConfigKind::EvenWheel, ConfigKind::OddWheel,   ConfigKind::DHole,
    ConfigKind::Cap,
};

constexpr std::array<ClassId, 10> kReportedClasses{
    ClassId::C1, ClassId::C2, ClassId::C3, ClassId::C4, ClassId::C5,
    ClassId::C6, ClassId::C7, ClassId::C8, ClassId::OddSignable, ClassId::EvenSignable,
};

std::string join(std::span<const Vertex> ids, char sep) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(ids[i]);
    }
    return s;
}

void print_certificate(std::ostream& out, const Certificate& c) {
    out << "CERTIFICATE i=" << c.position << " W=" << join(c.witness, ',') << '\n';
    out << "REASON " << to_string(c.kind) << " vertex=" << c.vertex;
    if (!c.pattern.empty()) out << " pattern=" << c.pattern;
    out << '\n';
}

WeightedGraph load(const std::string& file, std::istream& in) {
    if (file == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_graph(buf.str());
    }
    return read_graph_file(file);
}

std::pair<std::uint64_t, std::uint64_t> parse_ratio(const std::string& s) {
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const auto v = std::stoull(s, &used);
            if (used == s.size()) return {v, 1};
        } else {
            const auto num = std::stoull(s.substr(0, slash), &used);
            if (used == slash) {
                const std::string rest = s.substr(slash + 1);
                const auto den = std::stoull(rest, &used);
                if (used == rest.size()) return {num, den};
            }
        }
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidParameter, "expected a ratio 'num/den', got '" + s + "'");
}

std::size_t count_arg(const std::vector<std::string>& params, std::size_t i) {
    if (i >= params.size()) throw Error(ErrorCode::InvalidParameter, "missing parameter");
    try {
        std::size_t used = 0;
        const auto v = std::stoull(params[i], &used);
        if (used == params[i].size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidParameter, "expected a count, got '" + params[i] + "'");
}

int cmd_order(const WeightedGraph& wg, const std::string& cls, std::ostream& out, std::ostream& err) {
    const auto c = parse_class_id(cls);
    if (!c || !family_for(*c)) {
        err << "error: class '" << cls << "' has no elimination family\n";
        return kExitInput;
    }
    const Graph& g = wg.graph;
    const VertexOrdering o = g.empty() ? VertexOrdering{} : lexbfs(g, 0);
    out << join(o.vertices(), ' ') << '\n';
    if (auto cert = check_elimination_ordering(g, o, *family_for(*c))) {
        print_certificate(out, *cert);
        return kExitCertificate;
    }
    out << "ELIMINATION OK " << to_string(*c) << '\n';
    return kExitOk;
}

int cmd_clique(const WeightedGraph& wg, const std::string& algo, bool verify, std::size_t cap,
               std::ostream& out) {
    Certified<CliqueResult> r;
    if (algo == "chordal") {
        r = max_clique_chordal(wg);
    } else if (algo == "ehf") {
        r = max_clique_ehf(wg);
    } else if (algo == "c2") {
        r = max_clique_c2(wg);
    } else if (algo == "c3") {
        r = max_clique_c3(wg, verify);
    } else if (algo == "c4") {
        wg.graph.materialize_matrix();
        r = max_clique_c4(wg, verify);
    } else if (algo == "c6") {
        wg.graph.materialize_matrix();
        r = max_clique_c6(wg, verify);
    } else {
        r = max_clique_bruteforce(wg, std::min(cap, kBruteForceCliqueCap));
    }
    if (auto* cert = std::get_if<Certificate>(&r)) {
        print_certificate(out, *cert);
        return kExitCertificate;
    }
    const auto& res = std::get<CliqueResult>(r);
    out << "WEIGHT " << res.weight << '\n' << "CLIQUE " << join(res.clique, ' ') << '\n';
    return kExitOk;
}

int cmd_recognize(const WeightedGraph& wg, std::size_t cap, std::ostream& out) {
    const Graph& g = wg.graph;
    std::vector<ClassId> members;
    if (is_chordal(g)) {
        members.assign(kReportedClasses.begin(), kReportedClasses.end());
    } else {
        KindSet found;
        for (ConfigKind k : kReportedKinds) {
            if (auto w = contains_configuration(g, k, cap)) {
                found.insert(k);
                out << to_string(k) << ' ' << join(w->vertices, ' ') << '\n';
            }
        }
        for (ClassId c : kReportedClasses) {
            if (!found.intersects(forbidden_kinds(c))) members.push_back(c);
        }
    }
    out << "CLASSES:";
    for (ClassId c : members) out << ' ' << to_string(c);
    out << '\n';
    return kExitOk;
}

int cmd_color(const WeightedGraph& wg, std::ostream& out) {
    auto r = color_universally_signable(wg.graph);
    if (auto* cert = std::get_if<Certificate>(&r)) {
        print_certificate(out, *cert);
        return kExitCertificate;
    }
    const auto& c = std::get<Coloring>(r);
    out << "COLORS " << c.count << '\n' << "COLORING";
    for (int x : c.color) out << ' ' << x;
    out << '\n';
    return kExitOk;
}

Graph generate(const std::string& kind, const std::vector<std::string>& params, Seed seed) {
    if (kind == "theta" || kind == "prism" || kind == "pyramid") {
        ConfigParams p;
        p.kind = *parse_config_kind(kind);
        for (std::size_t i = 0; i < 3; ++i) p.lengths[i] = count_arg(params, i);
        return gen_configuration(p).graph;
    }
    if (kind == "wheel") {
        ConfigParams p;
        p.kind = ConfigKind::Wheel;
        p.rim = count_arg(params, 0);
        for (std::size_t i = 1; i < params.size(); ++i) p.spokes.push_back(count_arg(params, i));
        return gen_configuration(p).graph;
    }
    if (kind == "hole") {
        ConfigParams p;
        p.kind = ConfigKind::Hole;
        p.rim = count_arg(params, 0);
        return gen_configuration(p).graph;
    }
    if (kind == "random") {
        if (params.size() != 2) throw Error(ErrorCode::InvalidParameter, "usage: random <n> <num/den>");
        const auto [num, den] = parse_ratio(params[1]);
        return gen_random(count_arg(params, 0), num, den, seed);
    }
    if (kind == "chordal") {
        if (params.empty() || params.size() > 2) {
            throw Error(ErrorCode::InvalidParameter, "usage: chordal <n> [num/den]");
        }
        const auto [num, den] = params.size() == 2 ? parse_ratio(params[1]) : std::pair<std::uint64_t, std::uint64_t>{1, 2};
        return gen_chordal(count_arg(params, 0), num, den, seed);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown generator '" + kind + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"LexBFS elimination orderings, configuration recognition and clique algorithms"};
    app.require_subcommand(1);
    app.fallthrough();
    std::size_t cap = kDefaultBruteForceCap;
    Seed seed = 0;
    app.add_option("--cap", cap, "Vertex limit for brute-force searches")->capture_default_str();

    std::string file;
    std::string cls;
    auto* order = app.add_subcommand("order", "Print a LexBFS ordering and verify it for a class");
    order->add_option("file", file, "Graph file, '-' for stdin")->required();
    order->add_option("--class", cls, "c1..c8, 4hf-odd-signable or stf-even-signable")->required();

    std::string algo = "chordal";
    bool verify = false;
    auto* clique = app.add_subcommand("clique", "Maximum weighted clique");
    clique->add_option("file", file, "Graph file, '-' for stdin")->required();
    clique->add_option("--algo", algo, "Algorithm")
        ->check(CLI::IsMember({"chordal", "ehf", "c2", "c3", "c4", "c6", "brute"}))
        ->capture_default_str();
    clique->add_flag("--verify", verify, "Verify the elimination ordering first (c3, c4, c6)");

    auto* recognize = app.add_subcommand("recognize", "List configurations and class memberships");
    recognize->add_option("file", file, "Graph file, '-' for stdin")->required();

    auto* color = app.add_subcommand("color", "Color a universally signable graph");
    color->add_option("file", file, "Graph file, '-' for stdin")->required();

    std::string kind;
    std::vector<std::string> params;
    std::string output;
    bool dimacs = false;
    auto* gen = app.add_subcommand("generate", "Write a generated graph in the plain dialect");
    gen->add_option("kind", kind, "theta|prism|pyramid <l1 l2 l3>, wheel <rim> <spokes...>, hole <len>, "
                                  "random <n> <num/den>, chordal <n> [num/den]")
        ->required();
    gen->add_option("params", params, "Generator parameters");
    gen->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    gen->add_option("-o,--output", output, "Output file (default stdout)");
    gen->add_flag("--dimacs", dimacs, "Write the DIMACS dialect");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*gen) {
            const std::string text =
                write_graph(WeightedGraph(generate(kind, params, seed)), dimacs ? Dialect::Dimacs : Dialect::Plain);
            if (output.empty()) {
                out << text;
            } else {
                std::ofstream f(output);
                if (!f) {
                    err << "error: cannot write " << output << '\n';
                    return kExitInput;
                }
                f << text;
            }
            return kExitOk;
        }
        const WeightedGraph wg = load(file, in);
        if (*order) return cmd_order(wg, cls, out, err);
        if (*clique) return cmd_clique(wg, algo, verify, cap, out);
        if (*recognize) return cmd_recognize(wg, cap, out);
        if (*color) return cmd_color(wg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace lexelim
