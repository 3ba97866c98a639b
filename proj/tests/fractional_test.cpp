#include <doctest.h>

#include <cmath>

#include "majority/exact.hpp"
#include "majority/fractional.hpp"
#include "majority/generate.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Mixed red/blue structure: a red triangle, a red path into a blue
// vertex, red vertices into blue ones and blue vertices of several degrees.
Digraph mixed_digraph()
{
    return make(12, {{0, 1}, {1, 2}, {2, 0},            // red triangle
                     {3, 4}, {4, 5}, {5, 6},            // red chain ending at blue 6
                     {6, 7}, {6, 8}, {6, 9},            // blue, three out-neighbours
                     {7, 6}, {8, 9}, {9, 10}, {9, 11},  // red 7, 8 and blue 9
                     {10, 0}, {10, 3}, {11, 5}});
}

} // namespace

TEST_CASE("sampler parameters")
{
    CHECK_THROWS_AS((SamplerParams{0.0, 0.5}.validate()), Error);
    CHECK_THROWS_AS((SamplerParams{0.5, 1.0}.validate()), Error);
    SamplerParams{}.validate();
}

TEST_CASE("samples are stable and deterministic")
{
    std::mt19937_64 gen(71);
    for (int t = 0; t < 100; ++t) {
        const auto d = t % 2 ? random_digraph(15, 0.15, gen) : random_bounded_out(15, 2, gen);
        for (std::uint64_t trial = 0; trial < 50; ++trial) {
            const auto s = sample_X_4c(d, {}, 99, trial);
            CHECK(is_stable(d, s.stable));
            CHECK(std::includes(s.x.begin(), s.x.end(), s.stable.begin(), s.stable.end()));
            const auto again = sample_X_4c(d, {}, 99, trial);
            CHECK(again.x == s.x);
        }
    }
}

TEST_CASE("no arcs: nothing is popular")
{
    const Digraph d(3);
    long long hits = 0;
    for (std::uint64_t trial = 0; trial < 2000; ++trial) {
        const auto s = sample_X_4c(d, {}, 5, trial);
        CHECK(s.stable == s.x);
        hits += static_cast<long long>(s.x.size());
    }
    CHECK(std::abs(hits / 6000.0 - 0.4503) < 0.03);
}

TEST_CASE("red triangle keeps at most one vertex when all are indicated")
{
    // With p1 close to 1 almost every trial indicates the whole triangle.
    const auto c3 = dicycle(3);
    const SamplerParams params{0.999999, 0.5};
    std::array<long long, 3> count{};
    const long long trials = 100000;
    for (long long t = 0; t < trials; ++t) {
        const auto s = sample_X_4c(c3, params, 17, static_cast<std::uint64_t>(t));
        CHECK(s.x.size() <= 1);
        for (Vertex v : s.x)
            ++count[v];
    }
    for (long long c : count) {
        const double f = static_cast<double>(c) / trials;
        const double sigma = std::sqrt(f * (1 - f) / trials);
        CHECK(std::abs(f - 1.0 / 3) < 3 * sigma + 1e-5);
    }
}

TEST_CASE("estimates for an isolated vertex and a red vertex into a blue one")
{
    const auto d = make(3, {{1, 2}}); // 0 isolated, 1 red, 2 blue sink
    SamplerChoice four_c;
    const auto est = estimate_nonpopular_inclusion(d, four_c, 100000, 3, 1);
    CHECK(std::abs(est.frequency[0] - 0.4503) < 3 * est.standard_error[0]);
    CHECK(std::abs(est.frequency[1] - 0.4594 * (1 - 0.4503)) < 3 * est.standard_error[1]);
}

TEST_CASE("estimates do not depend on the worker count")
{
    const auto d = mixed_digraph();
    const auto one = estimate_nonpopular_inclusion(d, {}, 5000, 8, 1);
    const auto four = estimate_nonpopular_inclusion(d, {}, 5000, 8, 4);
    CHECK(one.hits == four.hits);
}

TEST_CASE("estimates respect the common lower bound")
{
    const auto d = mixed_digraph();
    const auto est = estimate_nonpopular_inclusion(d, {}, 40000, 1, 2);
    for (Vertex v = 0; v < d.size(); ++v)
        CHECK(est.frequency[v] >= 0.252513 - 3 * est.standard_error[v]);
}

TEST_CASE("case bounds")
{
    const auto b = case_lower_bounds();
    CHECK(b.minimum == doctest::Approx(0.252513).epsilon(1e-6 / 0.252513));
    CHECK(b.attained_by == "blue");
    CHECK(1 / b.minimum < 3.9602);
    CHECK(b.cases[0].value == doctest::Approx(0.252532).epsilon(1e-5));
    CHECK(case_lower_bounds({0.5, 0.5}).cases[4].value == doctest::Approx(0.25));
}

TEST_CASE("binomial tails")
{
    const auto t = binomial_tail_check(0.4594, 41);
    CHECK(t.holds);
    CHECK(t.tail[0] == 0);
    CHECK(static_cast<double>(t.three) == doctest::Approx(0.439234).epsilon(1e-6));
    const double p = 0.4594;
    CHECK(static_cast<double>(t.tail[3]) == doctest::Approx(3 * p * p - 2 * p * p * p));
    CHECK(static_cast<double>(t.tail[2]) == doctest::Approx(p * p));
    CHECK(t.tail[2] < t.three);
    CHECK_THROWS_AS(binomial_tail_check(0.5, 10), Error);
    CHECK_THROWS_AS(binomial_tail_check(0.3, 61), Error);
}

TEST_CASE("high-degree sampler")
{
    CHECK_THROWS_AS(highdeg_probability(2), Error);
    CHECK_THROWS_AS(highdeg_probability(3), Error);
    CHECK(highdeg_probability(9) > 0);
    const auto k12 = complete_bidirected(12);
    for (std::uint64_t t = 0; t < 200; ++t)
        CHECK(is_stable(k12, sample_X_highdeg(k12, 11, 4, t).stable));
    try {
        sample_X_highdeg(dicycle(12), 11, 4, 0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::degree_too_low);
    }
}

TEST_CASE("fractional colouring from samples")
{
    auto one = fractional_from_samples(Digraph(1), {}, 16, 1);
    CHECK(verify_fractional(Digraph(1), one.coloring).ok);
    CHECK(one.weight == doctest::Approx(1.0));

    const auto c4 = dicycle(4);
    auto f = fractional_from_samples(c4, {}, 512, 2);
    CHECK(verify_fractional(c4, f.coloring).ok);
    CHECK(f.weight >= 2.0 - 1e-9);

    CHECK_THROWS_AS(fractional_from_samples(c4, {}, 0, 2), Error);
}

TEST_CASE("sampled weight is never below the exact optimum")
{
    std::mt19937_64 gen(73);
    for (int t = 0; t < 40; ++t) {
        const auto d = random_digraph(3 + t % 7, 0.35, gen);
        const auto exact = exact_fractional_weight(d);
        const auto f = fractional_from_samples(d, {}, 256, static_cast<std::uint64_t>(t));
        CHECK(verify_fractional(d, f.coloring).ok);
        CHECK(f.weight >= exact.primal_value - 1e-9);
    }
    const auto k10 = complete_bidirected(10);
    SamplerChoice high{SamplerKind::high_degree, {}, 9};
    const auto f = fractional_from_samples(k10, high, 256, 3);
    CHECK(verify_fractional(k10, f.coloring).ok);
}
