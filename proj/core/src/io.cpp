#include "oramsey/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "oramsey/errors.hpp"

namespace oramsey::io {

namespace {

// Splits into lines, keeping 1-based line numbers. A single trailing newline
// is allowed; blank lines anywhere else are garbage.
class LineReader {
public:
    explicit LineReader(std::string_view text) {
        std::size_t start = 0;
        while (start < text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            auto line = text.substr(start, end - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            lines_.push_back(line);
            start = end + 1;
        }
    }

    bool done() const { return next_ == lines_.size(); }
    std::size_t line_number() const { return next_; }  // of the line last taken

    std::string_view take(const char* expecting) {
        if (done())
            throw ParseError(std::string("unexpected end of input, expected ") + expecting,
                             lines_.size() + 1);
        return lines_[next_++];
    }

    void expect_end() {
        if (!done()) throw ParseError("trailing garbage after the last record", next_ + 1);
    }

private:
    std::vector<std::string_view> lines_;
    std::size_t next_ = 0;
};

std::vector<std::size_t> parse_numbers(std::string_view line, std::size_t count, std::size_t lineno) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    };
    for (std::size_t k = 0; k < count; ++k) {
        skip_ws();
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc{})
            throw ParseError("expected " + std::to_string(count) + " non-negative integers", lineno);
        pos = static_cast<std::size_t>(ptr - line.data());
        out.push_back(value);
    }
    skip_ws();
    if (pos != line.size()) throw ParseError("trailing garbage on line", lineno);
    return out;
}

void check_pair(std::size_t a, std::size_t b, std::size_t n, std::size_t lineno, const char* kind) {
    if (a < 1 || b < 1 || a > n || b > n)
        throw ParseError(std::string(kind) + " endpoint outside 1.." + std::to_string(n), lineno);
}

}  // namespace

OrderedGraph parse_ordered_graph(std::string_view text) {
    LineReader in(text);
    const auto header = parse_numbers(in.take("header \"n m\""), 2, 1);
    const std::size_t n = header[0], m = header[1];
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        auto line = in.take("an edge line");
        const auto lineno = in.line_number();
        const auto ij = parse_numbers(line, 2, lineno);
        check_pair(ij[0], ij[1], n, lineno, "edge");
        if (ij[0] >= ij[1]) throw ParseError("edge must satisfy i < j", lineno);
        edges.push_back({ij[0] - 1, ij[1] - 1});
    }
    in.expect_end();
    std::vector<std::size_t> order(edges.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return edges[a] < edges[b]; });
    for (std::size_t k = 1; k < order.size(); ++k)
        if (edges[order[k]] == edges[order[k - 1]])
            throw ParseError("duplicate edge", std::max(order[k], order[k - 1]) + 2);
    return OrderedGraph(n, std::move(edges));
}

std::string format_ordered_graph(const OrderedGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

ColoredCompleteGraph parse_coloring(std::string_view text) {
    LineReader in(text);
    const std::size_t n = parse_numbers(in.take("header \"N\""), 1, 1)[0];
    std::vector<std::string_view> rows;
    for (std::size_t k = 1; k < n; ++k) {
        auto line = in.take("a colour row");
        const auto lineno = in.line_number();
        if (line.size() != n - k)
            throw ParseError("colour row " + std::to_string(k) + " must hold " + std::to_string(n - k) +
                                 " characters, found " + std::to_string(line.size()),
                             lineno);
        for (char ch : line)
            if (ch != 'R' && ch != 'B') throw ParseError("colour characters must be R or B", lineno);
        rows.push_back(line);
    }
    in.expect_end();
    return ColoredCompleteGraph::from_function(n, [&](Vertex i, Vertex j) {
        return rows[i][j - i - 1] == 'R' ? Color::Red : Color::Blue;
    });
}

std::string format_coloring(const ColoredCompleteGraph& c) {
    const auto n = c.vertex_count();
    std::string out = std::to_string(n) + "\n";
    for (Vertex i = 0; i + 1 < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) out += c.color(i, j) == Color::Red ? 'R' : 'B';
        out += '\n';
    }
    return out;
}

Digraph parse_digraph(std::string_view text) {
    LineReader in(text);
    const auto header = parse_numbers(in.take("header \"n m\""), 2, 1);
    const std::size_t n = header[0], m = header[1];
    std::vector<Arc> arcs;
    arcs.reserve(m);
    std::vector<std::pair<Arc, std::size_t>> sorted;
    for (std::size_t k = 0; k < m; ++k) {
        auto line = in.take("an arc line");
        const auto lineno = in.line_number();
        const auto uv = parse_numbers(line, 2, lineno);
        check_pair(uv[0], uv[1], n, lineno, "arc");
        if (uv[0] == uv[1]) throw ParseError("loop arc", lineno);
        arcs.push_back({uv[0] - 1, uv[1] - 1});
        sorted.push_back({arcs.back(), lineno});
    }
    in.expect_end();
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k].first == sorted[k - 1].first)
            throw ParseError("duplicate arc", std::max(sorted[k].second, sorted[k - 1].second));
    return Digraph(n, std::move(arcs));
}

std::string format_digraph(const Digraph& d) {
    std::ostringstream out;
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const auto& a : d.arcs()) out << a.from + 1 << ' ' << a.to + 1 << '\n';
    return out.str();
}

Tournament parse_tournament(std::string_view text) {
    LineReader in(text);
    const std::size_t n = parse_numbers(in.take("header \"N\""), 1, 1)[0];
    std::vector<std::vector<char>> dir(n);
    for (Vertex j = 1; j < n; ++j) {
        dir[j].resize(j);
        for (Vertex i = 0; i < j; ++i) {
            auto line = in.take("an orientation line");
            if (line != ">" && line != "<")
                throw ParseError("orientation line must be '>' or '<'", in.line_number());
            dir[j][i] = line[0];
        }
    }
    in.expect_end();
    return Tournament::from_function(n, [&](Vertex u, Vertex v) { return dir[v][u] == '>'; });
}

std::string format_tournament(const Tournament& t) {
    const auto n = t.vertex_count();
    std::string out = std::to_string(n) + "\n";
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            out += t.beats(i, j) ? '>' : '<';
            out += '\n';
        }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string(), 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
}

}  // namespace oramsey::io
