#include "lexelim/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace lexelim {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class T>
T number(std::string_view tok, std::size_t line) {
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        fail(line, "expected a number, got '" + std::string(tok) + "'");
    }
    return value;
}

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++no;
        auto tokens = split(text.substr(start, end - start));
        if (!tokens.empty()) lines.push_back({no, std::move(tokens)});
        start = end + 1;
    }
    return lines;
}

Graph checked_graph(std::size_t n, const std::vector<Edge>& edges, const std::vector<std::size_t>& at) {
    try {
        return build_graph(n, edges);
    } catch (const Error& e) {
        // Re-run the checks edge by edge to report the offending line.
        std::vector<Edge> seen;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            auto [u, v] = edges[k];
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
                fail(at[k], "vertex out of range");
            }
            if (u == v) fail(at[k], "self-loop");
            Edge key{std::min(u, v), std::max(u, v)};
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) fail(at[k], "duplicate edge");
            seen.push_back(key);
        }
        fail(at.empty() ? 1 : at.back(), e.what());
    }
}

WeightedGraph parse_plain(const std::vector<Line>& lines) {
    if (lines.empty()) fail(1, "empty input");
    const Line& head = lines[0];
    if (head.tokens.size() != 2) fail(head.number, "expected header 'n m'");
    const auto n = number<std::size_t>(head.tokens[0], head.number);
    const auto m = number<std::size_t>(head.tokens[1], head.number);
    std::vector<Edge> edges;
    std::vector<std::size_t> at;
    std::vector<Weight> weights(n, 1);
    std::size_t k = 1;
    for (; k < lines.size() && edges.size() < m; ++k) {
        const Line& l = lines[k];
        if (l.tokens.size() != 2) fail(l.number, "expected edge 'u v'");
        edges.emplace_back(number<Vertex>(l.tokens[0], l.number), number<Vertex>(l.tokens[1], l.number));
        at.push_back(l.number);
    }
    if (edges.size() < m) fail(lines.back().number, "expected " + std::to_string(m) + " edges");
    if (k < lines.size()) {
        const Line& l = lines[k];
        if (l.tokens[0] != "weights") fail(l.number, "unexpected content after edges");
        if (l.tokens.size() != n + 1) fail(l.number, "expected " + std::to_string(n) + " weights");
        for (std::size_t i = 0; i < n; ++i) {
            weights[i] = number<Weight>(l.tokens[i + 1], l.number);
            if (weights[i] < 0) fail(l.number, "negative weight");
        }
        ++k;
    }
    if (k < lines.size()) fail(lines[k].number, "unexpected content after weights");
    return WeightedGraph(checked_graph(n, edges, at), std::move(weights));
}

WeightedGraph parse_dimacs(const std::vector<Line>& lines) {
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::vector<std::size_t> at;
    std::vector<Weight> weights;
    for (const Line& l : lines) {
        const auto tag = l.tokens[0];
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) fail(l.number, "second 'p' line");
            if (l.tokens.size() != 4 || (l.tokens[1] != "edge" && l.tokens[1] != "col")) {
                fail(l.number, "expected 'p edge n m'");
            }
            n = number<std::size_t>(l.tokens[2], l.number);
            m = number<std::size_t>(l.tokens[3], l.number);
            weights.assign(n, 1);
            have_header = true;
            continue;
        }
        if (!have_header) fail(l.number, "expected 'p edge n m' before data");
        if (tag == "e") {
            if (l.tokens.size() != 3) fail(l.number, "expected 'e u v'");
            const auto u = number<Vertex>(l.tokens[1], l.number);
            const auto v = number<Vertex>(l.tokens[2], l.number);
            if (u < 1 || v < 1) fail(l.number, "DIMACS ids start at 1");
            edges.emplace_back(u - 1, v - 1);
            at.push_back(l.number);
        } else if (tag == "n") {
            if (l.tokens.size() != 3) fail(l.number, "expected 'n v w'");
            const auto v = number<std::size_t>(l.tokens[1], l.number);
            const auto w = number<Weight>(l.tokens[2], l.number);
            if (v < 1 || v > n) fail(l.number, "vertex out of range");
            if (w < 0) fail(l.number, "negative weight");
            weights[v - 1] = w;
        } else {
            fail(l.number, "unknown line type '" + std::string(tag) + "'");
        }
    }
    if (!have_header) fail(1, "missing 'p edge n m' line");
    if (edges.size() != m) {
        fail(lines.back().number, "header promises " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    return WeightedGraph(checked_graph(n, edges, at), std::move(weights));
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
    const auto lines = tokenize(text);
    if (!lines.empty() && (lines[0].tokens[0] == "c" || lines[0].tokens[0] == "p")) {
        return parse_dimacs(lines);
    }
    return parse_plain(lines);
}

WeightedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string write_graph(const WeightedGraph& wg, Dialect dialect) {
    const Graph& g = wg.graph;
    const bool weighted = std::any_of(wg.weights.begin(), wg.weights.end(), [](Weight w) { return w != 1; });
    std::ostringstream out;
    if (dialect == Dialect::Plain) {
        out << g.order() << ' ' << g.size() << '\n';
        for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
        if (weighted) {
            out << "weights";
            for (Weight w : wg.weights) out << ' ' << w;
            out << '\n';
        }
    } else {
        out << "p edge " << g.order() << ' ' << g.size() << '\n';
        for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
        if (weighted) {
            for (std::size_t v = 0; v < g.order(); ++v) out << "n " << v + 1 << ' ' << wg.weights[v] << '\n';
        }
    }
    return out.str();
}

}  // namespace lexelim
