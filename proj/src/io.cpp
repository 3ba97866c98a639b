#include "majority/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace majority {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> read_lines(std::istream& in)
{
    std::vector<Line> lines;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r')
            text.pop_back();
        std::istringstream ss(text);
        Line line{number, {}};
        std::string tok;
        while (ss >> tok)
            line.tokens.push_back(tok);
        if (line.tokens.empty() || line.tokens.front().front() == '#')
            continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what)
{
    throw Error(ErrorKind::parse_error, "line " + std::to_string(line.number) + ": " + what);
}

template <class Int>
Int to_int(const Line& line, const std::string& tok)
{
    Int value{};
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || end != tok.data() + tok.size())
        fail(line, "expected an integer, got '" + tok + "'");
    return value;
}

double to_double(const Line& line, const std::string& tok)
{
    double value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || end != tok.data() + tok.size())
        fail(line, "expected a number, got '" + tok + "'");
    return value;
}

Vertex to_vertex(const Line& line, const std::string& tok, int n)
{
    const auto v = to_int<int>(line, tok);
    if (v < 0 || v >= n)
        fail(line, "vertex " + tok + " out of range");
    return v;
}

std::pair<int, int> header(const std::vector<Line>& lines, const char* what)
{
    if (lines.empty())
        throw Error(ErrorKind::parse_error, std::string("empty ") + what);
    const Line& h = lines.front();
    if (h.tokens.size() != 2)
        fail(h, std::string("expected header 'n m' for ") + what);
    const int n = to_int<int>(h, h.tokens[0]);
    const int m = to_int<int>(h, h.tokens[1]);
    if (n < 0 || m < 0)
        fail(h, "negative size in header");
    if (static_cast<int>(lines.size()) - 1 != m)
        fail(h, "header announces " + std::to_string(m) + " records, found " + std::to_string(lines.size() - 1));
    return {n, m};
}

void seen_once(std::vector<char>& seen, const Line& line, Vertex v)
{
    if (seen[v])
        fail(line, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
}

} // namespace

Digraph parse_digraph(std::istream& in)
{
    const auto lines = read_lines(in);
    const auto [n, m] = header(lines, "edge list");
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens.size() != 2)
            fail(l, "expected 'u v'");
        arcs.emplace_back(to_int<int>(l, l.tokens[0]), to_int<int>(l, l.tokens[1]));
    }
    return Digraph(n, arcs);
}

std::string format_digraph(const Digraph& d)
{
    std::string s = std::to_string(d.size()) + " " + std::to_string(d.arc_count()) + "\n";
    for (auto [u, v] : d.arcs())
        s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

Coloring parse_coloring(std::istream& in, int n)
{
    Coloring c(n, kUncolored);
    std::vector<char> seen(n, 0);
    for (const Line& l : read_lines(in)) {
        if (l.tokens.size() != 2)
            fail(l, "expected 'v c'");
        const Vertex v = to_vertex(l, l.tokens[0], n);
        seen_once(seen, l, v);
        c[v] = to_int<int>(l, l.tokens[1]);
        if (c[v] == kUncolored)
            fail(l, "color out of range");
    }
    return c;
}

std::string format_coloring(const Coloring& c)
{
    std::string s;
    for (std::size_t v = 0; v < c.size(); ++v)
        if (c[v] != kUncolored)
            s += std::to_string(v) + " " + std::to_string(c[v]) + "\n";
    return s;
}

ListAssignment parse_lists(std::istream& in, int n)
{
    ListAssignment lists(n);
    std::vector<char> seen(n, 0);
    for (const Line& l : read_lines(in)) {
        const Vertex v = to_vertex(l, l.tokens[0], n);
        seen_once(seen, l, v);
        for (std::size_t i = 1; i < l.tokens.size(); ++i)
            lists[v].push_back(to_int<int>(l, l.tokens[i]));
        std::sort(lists[v].begin(), lists[v].end());
        lists[v].erase(std::unique(lists[v].begin(), lists[v].end()), lists[v].end());
    }
    return lists;
}

std::string format_lists(const ListAssignment& lists)
{
    std::string s;
    for (std::size_t v = 0; v < lists.size(); ++v) {
        s += std::to_string(v);
        for (Color c : lists[v])
            s += " " + std::to_string(c);
        s += "\n";
    }
    return s;
}

FractionalColoring parse_fractional(std::istream& in)
{
    FractionalColoring f;
    for (const Line& l : read_lines(in)) {
        if (l.tokens.size() < 2 || l.tokens[1] != ":")
            fail(l, "expected 'w : v1 v2 ...'");
        WeightedSet ws;
        ws.weight = to_double(l, l.tokens[0]);
        for (std::size_t i = 2; i < l.tokens.size(); ++i)
            ws.vertices.push_back(to_int<int>(l, l.tokens[i]));
        std::sort(ws.vertices.begin(), ws.vertices.end());
        if (std::adjacent_find(ws.vertices.begin(), ws.vertices.end()) != ws.vertices.end())
            fail(l, "repeated vertex");
        f.push_back(std::move(ws));
    }
    return f;
}

std::string format_double(double x)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string format_fractional(const FractionalColoring& f)
{
    std::string s;
    for (const auto& ws : f) {
        s += format_double(ws.weight) + " :";
        for (Vertex v : ws.vertices)
            s += " " + std::to_string(v);
        s += "\n";
    }
    return s;
}

VertexPartition parse_partition(std::istream& in, int n)
{
    std::vector<int> part(n, -1);
    std::vector<char> seen(n, 0);
    int parts = 0;
    for (const Line& l : read_lines(in)) {
        if (l.tokens.size() != 2)
            fail(l, "expected 'v part'");
        const Vertex v = to_vertex(l, l.tokens[0], n);
        seen_once(seen, l, v);
        part[v] = to_int<int>(l, l.tokens[1]);
        if (part[v] < 0)
            fail(l, "negative part index");
        parts = std::max(parts, part[v] + 1);
    }
    VertexPartition p{std::vector<VertexSet>(parts)};
    for (Vertex v = 0; v < n; ++v) {
        if (part[v] < 0)
            throw Error(ErrorKind::parse_error, "vertex " + std::to_string(v) + " has no part");
        p.parts[part[v]].push_back(v);
    }
    return p;
}

std::string format_partition(const VertexPartition& p, int n)
{
    const auto part = p.part_of(n);
    std::string s;
    for (Vertex v = 0; v < n; ++v)
        s += std::to_string(v) + " " + std::to_string(part[v]) + "\n";
    return s;
}

Hypergraph parse_hypergraph(std::istream& in)
{
    const auto lines = read_lines(in);
    const auto [n, m] = header(lines, "hypergraph");
    Hypergraph h{n, {}};
    h.edges.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens.size() != 3)
            fail(l, "expected three vertex ids");
        h.edges.push_back({to_int<int>(l, l.tokens[0]), to_int<int>(l, l.tokens[1]), to_int<int>(l, l.tokens[2])});
    }
    validate(h);
    return h;
}

std::string format_hypergraph(const Hypergraph& h)
{
    std::string s = std::to_string(h.n) + " " + std::to_string(h.edges.size()) + "\n";
    for (const auto& e : h.edges)
        s += std::to_string(e[0]) + " " + std::to_string(e[1]) + " " + std::to_string(e[2]) + "\n";
    return s;
}

std::string format_layout(const GadgetLayout& layout)
{
    std::string s;
    for (std::size_t e = 0; e < layout.size(); ++e) {
        s += std::to_string(e);
        for (Vertex v : layout[e])
            s += " " + std::to_string(v);
        s += "\n";
    }
    return s;
}

std::string to_dot(const Digraph& d)
{
    std::string s = "digraph D {\n";
    for (Vertex v = 0; v < d.size(); ++v)
        s += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : d.arcs())
        s += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
    return s + "}\n";
}

} // namespace majority
