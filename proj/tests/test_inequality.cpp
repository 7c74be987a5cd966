#include "bookramsey/error.hpp"
#include "bookramsey/inequality.hpp"
#include "bookramsey/interval.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bookramsey;

namespace {

double inside(Interval i, std::mt19937_64& rng)
{
    return std::uniform_real_distribution<double>(i.lo(), i.hi())(rng);
}

Interval random_interval(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> pick(lo, hi);
    const double a = pick(rng);
    const double b = pick(rng);
    return {std::min(a, b), std::max(a, b)};
}

} // namespace

TEST_CASE("interval operations enclose point results")
{
    // A correctly rounded point result never leaves an outward-rounded enclosure.
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20000; ++i) {
        const Interval a = random_interval(rng, -3.0, 3.0);
        const Interval b = random_interval(rng, -3.0, 3.0);
        const Interval d = random_interval(rng, 0.1, 5.0);
        const double x = inside(a, rng);
        const double y = inside(b, rng);
        const double z = inside(d, rng);
        CHECK((a + b).contains(x + y));
        CHECK((a - b).contains(x - y));
        CHECK((a * b).contains(x * y));
        CHECK((a / d).contains(x / z));
        CHECK(sqrt_clamped(d).contains(std::sqrt(z)));
    }
}

TEST_CASE("interval rounding is strict where it must be")
{
    const Interval third = Interval::ratio(1.0, 3.0);
    CHECK(third.lo() < third.hi());
    CHECK(third.contains(1.0 / 3.0));
    const Interval exact = Interval(0.5) * Interval(4.0);
    CHECK(exact.lo() == 2.0);
    CHECK(exact.hi() == 2.0);
    const Interval zero = Interval(0.0) * Interval(-1.0, 1.0);
    CHECK(zero.lo() == 0.0);
    CHECK(zero.hi() == 0.0);
    CHECK(sqrt_clamped(Interval(-1.0, 4.0)).lo() == 0.0);
    CHECK(sqrt_clamped(Interval(-1.0, 4.0)).hi() == 2.0);
}

TEST_CASE("spot values of the gap function")
{
    CHECK(std::abs(inequality_gap(1.0 / 9.0, 0.25) - 2.0 * std::sqrt(2.0) / 9.0) <= 1e-12);
    CHECK(std::abs(inequality_gap(0.0, 1.0 / 6.0)) <= 1e-12);
    CHECK(inequality_gap(0.01, 0.17) > 0.0);
    CHECK_THROWS_AS(inequality_gap(0.5, 0.2), ArgumentError); // lambda above alpha / s
}

TEST_CASE("gap is nonnegative on a feasible grid")
{
    for (int i = 0; i <= 200; ++i) {
        const double alpha = 1.0 / 6.0 + (0.25 - 1.0 / 6.0) * i / 200.0;
        const double s = 1.5 + 3.0 * alpha;
        const double lo = std::max(0.0, 1.0 - 2.0 / s);
        const double hi = alpha / s;
        for (int j = 0; j <= 200; ++j) {
            const double lambda = lo + (hi - lo) * j / 200.0;
            CHECK(inequality_gap(lambda, alpha) >= -1e-12);
        }
    }
}

TEST_CASE("certification over the full range")
{
    const auto cert = certify_no_solution(1.0 / 6.0, 0.25, 1e-6, 80, true);
    CHECK(cert.verdict == InequalityVerdict::nonnegative_certified);
    CHECK(cert.unresolved.empty());
    CHECK(cert.minimum.lo() <= 0.0);
    CHECK(cert.minimum.hi() == 0.0);
    CHECK(cert.minimum.lo() > -1e-5);
    // Every touching box sits on the feasible-region boundary, at the corner lambda = 0.
    for (const auto& t : cert.touching) {
        CHECK(t.box.lambda.lo() == 0.0);
        CHECK(t.box.alpha.contains(1.0 / 6.0));
        CHECK(t.gap.lo() <= 0.0);
    }
    CHECK_FALSE(cert.touching.empty());
    CHECK(cert.leaves_positive > 0);
    CHECK_FALSE(cert.leaves.empty());
}

TEST_CASE("leaf enclosures contain point evaluations")
{
    const auto cert = certify_no_solution(1.0 / 6.0, 0.25, 1e-6, 80, true);
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int i = 0; checked < 1000 && i < 100000; ++i) {
        const auto& leaf = cert.leaves[rng() % cert.leaves.size()];
        const double lambda = inside(leaf.x, rng);
        const double y = inside(leaf.y, rng);
        const double alpha = leaf.chart == Chart::direct ? y : 1.0 / 6.0 + y * lambda;
        const double s = 1.5 + 3.0 * alpha;
        if (lambda > alpha / s || lambda < 1.0 - 2.0 / s || alpha > 0.25)
            continue; // outside the feasible region
        const double g = inequality_gap(lambda, alpha);
        CHECK(g >= leaf.gap.lo() - 1e-12);
        CHECK(g <= leaf.gap.hi() + 1e-12);
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("sub-ranges and argument errors")
{
    const auto inner = certify_no_solution(0.2, 0.24, 1e-6);
    CHECK(inner.verdict == InequalityVerdict::nonnegative_certified);
    CHECK(inner.minimum.lo() > 0.0);
    CHECK(inner.touching.empty());

    const auto coarse = certify_no_solution(1.0 / 6.0, 0.25, 1e-6, 3);
    CHECK(coarse.verdict == InequalityVerdict::inconclusive);
    CHECK_FALSE(coarse.unresolved.empty());

    CHECK_THROWS_AS(certify_no_solution(0.1, 0.25, 1e-6), ArgumentError);
    CHECK_THROWS_AS(certify_no_solution(0.2, 0.3, 1e-6), ArgumentError);
    CHECK_THROWS_AS(certify_no_solution(0.2, 0.19, 1e-6), ArgumentError);
    CHECK_THROWS_AS(certify_no_solution(0.2, 0.24, 0.0), ArgumentError);
}
