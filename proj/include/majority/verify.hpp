#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "majority/digraph.hpp"

namespace majority {

/// Threshold alpha = a/b: a vertex may share its colour with at most
/// alpha * d+(v) out-neighbours.
class MajorityParam {
public:
    /// Throws Error(param_out_of_range) unless 0 < a <= b.
    MajorityParam(long long a, long long b);

    static MajorityParam half() { return {1, 2}; }
    static MajorityParam one_over(long long k) { return {1, k}; }

    long long numerator() const noexcept { return a_; }
    long long denominator() const noexcept { return b_; }

    /// same * b <= a * degree, in exact integer arithmetic.
    bool allows(long long same, long long degree) const noexcept { return same * b_ <= a_ * degree; }

    std::string to_string() const;
    /// Parses "a/b" (or a bare integer for a/1).
    static MajorityParam parse(const std::string& text);

private:
    long long a_;
    long long b_;
};

/// Vertex -> colour. kUncolored marks a missing colour.
using Coloring = std::vector<Color>;
inline constexpr Color kUncolored = std::numeric_limits<Color>::min();

/// Vertices violating the alpha-majority condition, ascending. Throws
/// Error(partial_coloring) if some vertex is uncoloured.
std::vector<Vertex> verify_majority(const Digraph& d, const Coloring& c, const MajorityParam& alpha);

inline bool is_majority_coloring(const Digraph& d, const Coloring& c, const MajorityParam& alpha)
{
    return verify_majority(d, c, alpha).empty();
}

/// Membership mask for a vertex set (helper for the popularity checks).
std::vector<char> membership(int n, std::span<const Vertex> s);

bool is_popular(const Digraph& d, std::span<const Vertex> s, Vertex v);
bool is_popular(const Digraph& d, const std::vector<char>& in_s, Vertex v);
bool is_stable(const Digraph& d, std::span<const Vertex> s);

/// Popular members of s, ascending.
std::vector<Vertex> popular_vertices(const Digraph& d, std::span<const Vertex> s);

struct WeightedSet {
    VertexSet vertices;
    double weight = 0.0;

    bool operator==(const WeightedSet&) const = default;
};

using FractionalColoring = std::vector<WeightedSet>;

double total_weight(const FractionalColoring& f);

inline constexpr double kCoverageTolerance = 1e-9;

struct FractionalCheck {
    bool ok = false;
    std::optional<std::size_t> bad_entry;  // unstable set or negative weight
    std::optional<Vertex> uncovered_vertex;
    std::string reason;
};

FractionalCheck verify_fractional(const Digraph& d, const FractionalColoring& f,
                                  double tolerance = kCoverageTolerance);

} // namespace majority
