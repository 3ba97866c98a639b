#include "majority/verify.hpp"

#include <algorithm>
#include <charconv>

namespace majority {

MajorityParam::MajorityParam(long long a, long long b) : a_(a), b_(b)
{
    if (!(b > 0 && a > 0 && a <= b))
        throw Error(ErrorKind::param_out_of_range,
                    "majority parameter " + std::to_string(a) + "/" + std::to_string(b) + " needs 0 < a <= b");
}

std::string MajorityParam::to_string() const
{
    return std::to_string(a_) + "/" + std::to_string(b_);
}

MajorityParam MajorityParam::parse(const std::string& text)
{
    auto read = [&](std::string_view s) {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw Error(ErrorKind::parse_error, "bad majority parameter '" + text + "'");
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return {read(text), 1};
    std::string_view view(text);
    return {read(view.substr(0, slash)), read(view.substr(slash + 1))};
}

std::vector<Vertex> verify_majority(const Digraph& d, const Coloring& c, const MajorityParam& alpha)
{
    if (static_cast<int>(c.size()) != d.size())
        throw Error(ErrorKind::partial_coloring,
                    "coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(d.size()) + " vertices");
    for (Vertex v = 0; v < d.size(); ++v)
        if (c[v] == kUncolored)
            throw Error(ErrorKind::partial_coloring, "vertex " + std::to_string(v) + " is uncolored", {v});

    std::vector<Vertex> violations;
    for (Vertex v = 0; v < d.size(); ++v) {
        long long same = 0;
        for (Vertex w : d.out(v))
            same += c[w] == c[v];
        if (!alpha.allows(same, d.out_degree(v)))
            violations.push_back(v);
    }
    return violations;
}

std::vector<char> membership(int n, std::span<const Vertex> s)
{
    std::vector<char> in_s(n, 0);
    for (Vertex v : s)
        in_s[v] = 1;
    return in_s;
}

bool is_popular(const Digraph& d, const std::vector<char>& in_s, Vertex v)
{
    if (!in_s[v])
        return false;
    int inside = 0;
    for (Vertex w : d.out(v))
        inside += in_s[w];
    return 2 * inside > d.out_degree(v);
}

bool is_popular(const Digraph& d, std::span<const Vertex> s, Vertex v)
{
    return is_popular(d, membership(d.size(), s), v);
}

std::vector<Vertex> popular_vertices(const Digraph& d, std::span<const Vertex> s)
{
    auto in_s = membership(d.size(), s);
    std::vector<Vertex> result;
    for (Vertex v : s)
        if (is_popular(d, in_s, v))
            result.push_back(v);
    std::sort(result.begin(), result.end());
    return result;
}

bool is_stable(const Digraph& d, std::span<const Vertex> s)
{
    auto in_s = membership(d.size(), s);
    return std::none_of(s.begin(), s.end(), [&](Vertex v) { return is_popular(d, in_s, v); });
}

double total_weight(const FractionalColoring& f)
{
    double total = 0.0;
    for (const auto& entry : f)
        total += entry.weight;
    return total;
}

FractionalCheck verify_fractional(const Digraph& d, const FractionalColoring& f, double tolerance)
{
    FractionalCheck check;
    std::vector<double> coverage(d.size(), 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& entry = f[i];
        for (Vertex v : entry.vertices)
            if (v < 0 || v >= d.size()) {
                check.bad_entry = i;
                check.reason = "entry " + std::to_string(i) + " names vertex " + std::to_string(v) + " out of range";
                return check;
            }
        if (!(entry.weight >= 0.0)) {
            check.bad_entry = i;
            check.reason = "entry " + std::to_string(i) + " has negative weight";
            return check;
        }
        if (!is_stable(d, entry.vertices)) {
            check.bad_entry = i;
            check.reason = "entry " + std::to_string(i) + " is not a stable set";
            return check;
        }
        for (Vertex v : entry.vertices)
            coverage[v] += entry.weight;
    }
    for (Vertex v = 0; v < d.size(); ++v)
        if (coverage[v] < 1.0 - tolerance) {
            check.uncovered_vertex = v;
            check.reason = "vertex " + std::to_string(v) + " covered with weight " + std::to_string(coverage[v]);
            return check;
        }
    check.ok = true;
    return check;
}

} // namespace majority
