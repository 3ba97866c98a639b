#include "majority/lp.hpp"

#include <cmath>
#include <limits>

#include "majority/error.hpp"

namespace majority {

Rational to_rational(double x)
{
    if (!std::isfinite(x))
        throw Error(ErrorKind::param_out_of_range, "non-finite value in exact conversion");
    if (x == 0.0)
        return Rational(0);
    int exponent = 0;
    double mantissa = std::frexp(x, &exponent); // x = mantissa * 2^exponent, |mantissa| in [0.5,1)
    auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational r(scaled);
    boost::multiprecision::cpp_int power = 1;
    power <<= std::abs(exponent);
    if (exponent >= 0)
        r *= power;
    else
        r /= power;
    return r;
}

namespace {

// Solves M z = rhs for square nonsingular M. Returns false when singular.
bool solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs, std::vector<Rational>& z)
{
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return false;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k)
                m[r][k] -= f * m[col][k];
            rhs[r] -= f * rhs[col];
        }
    }
    z.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        z[i] = rhs[i] / m[i][i];
    return true;
}

// Re-solves the final basis exactly and checks optimality conditions.
void certify(const std::vector<std::vector<double>>& rows, const std::vector<double>& b, const std::vector<double>& c,
             const std::vector<std::size_t>& basis, LpSolution& sol)
{
    const std::size_t n = rows.size();
    const std::size_t m = c.size();
    // column j of [-A | I]
    auto entry = [&](std::size_t i, std::size_t j) -> Rational {
        if (j < m)
            return -to_rational(rows[i][j]);
        return Rational(j - m == i ? 1 : 0);
    };
    auto cost = [&](std::size_t j) -> Rational { return j < m ? to_rational(c[j]) : Rational(0); };

    std::vector<std::vector<Rational>> basis_matrix(n, std::vector<Rational>(n));
    std::vector<std::vector<Rational>> basis_transpose(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            basis_matrix[i][k] = entry(i, basis[k]);
            basis_transpose[k][i] = basis_matrix[i][k];
        }
    std::vector<Rational> rhs(n), cb(n), x, pi;
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = -to_rational(b[i]);
        cb[i] = cost(basis[i]);
    }
    if (!solve_exact(basis_matrix, rhs, x) || !solve_exact(basis_transpose, cb, pi))
        return;
    for (const auto& xi : x)
        if (xi < 0)
            return;
    for (std::size_t j = 0; j < m + n; ++j) {
        Rational reduced = cost(j);
        for (std::size_t i = 0; i < n; ++i)
            reduced -= pi[i] * entry(i, j);
        if (reduced < 0)
            return;
    }
    Rational value = 0;
    sol.exact_primal.assign(m, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        value += cb[k] * x[k];
        if (basis[k] < m)
            sol.exact_primal[basis[k]] = x[k];
    }
    sol.exact_dual.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        sol.exact_dual[i] = -pi[i];
    sol.exact_value = value.str();
    sol.certified = true;
}

} // namespace

LpSolution solve_covering_lp(const std::vector<std::vector<double>>& rows, const std::vector<double>& b,
                             const std::vector<double>& c, const LpOptions& options)
{
    const std::size_t n = rows.size();
    const std::size_t m = c.size();
    if (b.size() != n)
        throw Error(ErrorKind::param_out_of_range, "right-hand side size mismatch");
    for (const auto& r : rows)
        if (r.size() != m)
            throw Error(ErrorKind::param_out_of_range, "ragged constraint matrix");
    for (double cj : c)
        if (cj < 0)
            throw Error(ErrorKind::param_out_of_range, "covering LP needs non-negative costs");

    const std::size_t width = m + n;
    const double tol = options.pivot_tolerance;
    // Row i encodes  -A_i w + s_i = -b_i.
    std::vector<std::vector<double>> t(n, std::vector<double>(width, 0.0));
    std::vector<double> rhs(n);
    std::vector<double> reduced(width, 0.0);
    std::vector<std::size_t> basis(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            t[i][j] = -rows[i][j];
        t[i][m + i] = 1.0;
        rhs[i] = -b[i];
        basis[i] = m + i;
    }
    for (std::size_t j = 0; j < m; ++j)
        reduced[j] = c[j];

    LpSolution sol;
    for (;;) {
        std::size_t leave = n;
        for (std::size_t i = 0; i < n; ++i)
            if (rhs[i] < -tol && (leave == n || basis[i] < basis[leave]))
                leave = i;
        if (leave == n)
            break;
        if (++sol.iterations > options.max_iterations)
            throw Error(ErrorKind::coverage_failure, "simplex iteration limit reached");

        std::size_t enter = width;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < width; ++j) {
            if (t[leave][j] >= -tol)
                continue;
            double ratio = reduced[j] / -t[leave][j];
            if (ratio < best - tol) {
                best = ratio;
                enter = j;
            }
        }
        if (enter == width)
            throw Error(ErrorKind::coverage_failure, "covering LP is infeasible (row " + std::to_string(leave) + ")");

        const double pivot = t[leave][enter];
        for (double& x : t[leave])
            x /= pivot;
        rhs[leave] /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == leave || t[i][enter] == 0.0)
                continue;
            const double f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                t[i][j] -= f * t[leave][j];
            rhs[i] -= f * rhs[leave];
            t[i][enter] = 0.0;
        }
        const double f = reduced[enter];
        for (std::size_t j = 0; j < width; ++j)
            reduced[j] -= f * t[leave][j];
        reduced[enter] = 0.0;
        basis[leave] = enter;
    }

    sol.primal.assign(m, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        if (basis[i] < m)
            sol.primal[basis[i]] = std::max(0.0, rhs[i]);
    sol.dual.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        sol.dual[i] = std::max(0.0, reduced[m + i]);
    for (std::size_t j = 0; j < m; ++j)
        sol.value += c[j] * sol.primal[j];
    for (std::size_t i = 0; i < n; ++i)
        sol.dual_value += b[i] * sol.dual[i];

    certify(rows, b, c, basis, sol);
    if (sol.certified) {
        for (std::size_t j = 0; j < m; ++j)
            sol.primal[j] = sol.exact_primal[j].convert_to<double>();
        Rational dual_value = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sol.dual[i] = sol.exact_dual[i].convert_to<double>();
            dual_value += to_rational(b[i]) * sol.exact_dual[i];
        }
        sol.dual_value = dual_value.convert_to<double>();
        Rational value = 0;
        for (std::size_t j = 0; j < m; ++j)
            value += to_rational(c[j]) * sol.exact_primal[j];
        sol.value = value.convert_to<double>();
    }
    return sol;
}

} // namespace majority
