#include "bookramsey/bounds.hpp"
#include "bookramsey/error.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bookramsey;

namespace {

// Reference values computed to 40 digits with mpmath.
constexpr double crossing_ref = 0.2007205543710575479633128804620334060241;
constexpr double p_star_018 = 0.4853945037741196262780103497089507528337;
constexpr double three_block_018 = 2.039130023446084585576097834915028690915;
constexpr double p_star_02 = 0.4648162415120035689602595775098346845829;
constexpr double three_block_02 = 2.094813673457063811498459004658798919;
constexpr double random_03 = 2.395445115010332226913939565601604267905;
constexpr double random_07_k3 = 6.728832554159374970900868287482305274999;
constexpr double chernoff_2 = 0.1931471805599453094172321214581765680755;

bool near(double a, double b, double tol = 1e-12)
{
    return std::abs(a - b) <= tol;
}

} // namespace

TEST_CASE("curve values against high precision references")
{
    CHECK(near(random_bound(1.0), 4.0));
    CHECK(near(random_bound(1.0, 3), 8.0));
    CHECK(near(random_bound(0.3), random_03));
    CHECK(near(random_bound(0.7, 3), random_07_k3));
    CHECK(near(p_star(0.18), p_star_018));
    CHECK(near(three_block_bound(0.18), three_block_018));
    CHECK(near(p_star(0.2), p_star_02));
    CHECK(near(three_block_bound(0.2), three_block_02));
    CHECK(near(chernoff_exponent(2.0), chernoff_2));
    CHECK(chernoff_exponent(1.0) == 0.0);
}

TEST_CASE("boundary values")
{
    CHECK(near(mid_upper(1.0 / 6.0), 2.0, 1e-15));
    CHECK(near(mid_upper(0.25), 2.25, 1e-15));
    CHECK(near(random_bound(0.25), 2.25, 1e-15));
    CHECK(near(p_star(1.0 / 6.0), 0.5, 1e-15));
    CHECK(near(three_block_bound(1.0 / 6.0), 2.0, 1e-15));
    CHECK(near(three_block_limit(), crossing_ref, 1e-16));
    CHECK(near(crossing_alpha(), crossing_ref, 1e-13));
    CHECK(near(three_block_bound(three_block_limit()), random_bound(three_block_limit()), 1e-9));
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(random_bound(0.0), ArgumentError);
    CHECK_THROWS_AS(random_bound(1.1), ArgumentError);
    CHECK_THROWS_AS(random_bound(0.5, 1), ArgumentError);
    CHECK_THROWS_AS(mid_upper(0.1), ArgumentError);
    CHECK_THROWS_AS(mid_upper(0.3), ArgumentError);
    CHECK_THROWS_AS(p_star(0.16), ArgumentError);
    CHECK_THROWS_AS(three_block_bound(0.21), ArgumentError);
    CHECK_THROWS_AS(chernoff_exponent(0.5), ArgumentError);
}

TEST_CASE("p_star solves alpha (1 + 2p^2) = (1 - p)^2")
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> pick(1.0 / 6.0, three_block_limit());
    for (int i = 0; i < 100; ++i) {
        const double a = pick(rng);
        const double p = p_star(a);
        CHECK(near(a * (1.0 + 2.0 * p * p), (1.0 - p) * (1.0 - p)));
        CHECK(p > 0.0);
        CHECK(p <= 0.5);
    }
}

TEST_CASE("claim discriminants vanish")
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> pick(1e-3, 1.0);
    for (int i = 0; i < 100; ++i) {
        const auto d = claim_discriminants(pick(rng));
        CHECK(near(d.delta1, 0.0));
        CHECK(near(d.delta2, 0.0));
        CHECK(near(d.cd_identity, 0.0));
    }
}

TEST_CASE("construction expectations")
{
    const auto r = construction_expectations(600, 0.5, 300);
    CHECK(near(r.expected_red_intra, 298.0));
    CHECK(near(r.expected_blue_cross, 50.0));
    CHECK(near(r.expected_red_cross, 50.0 + 199.0));
    CHECK(near(r.eta, 0.0));
    CHECK(near(r.red_page_target, 300.0));
    CHECK(near(r.blue_page_target, 50.0));
    CHECK_THROWS_AS(construction_expectations(601, 0.5), ArgumentError);
    CHECK_THROWS_AS(construction_expectations(600, 1.5), ArgumentError);
}

TEST_CASE("regime table")
{
    auto p = best_known(0.1);
    CHECK(p.regime == Regime::exact_small);
    CHECK(p.best_lower == 2.0);
    CHECK(p.best_upper == 2.0);
    CHECK_FALSE(p.mid_ub.has_value());
    CHECK_FALSE(p.three_block_lb.has_value());

    p = best_known(1.0 / 6.0);
    CHECK(p.regime == Regime::three_block);
    CHECK(near(p.best_lower, 2.0, 1e-9));
    CHECK(near(p.best_upper, 2.0, 1e-9));

    p = best_known(0.19);
    CHECK(p.regime == Regime::three_block);
    CHECK(p.best_lower == three_block_bound(0.19));
    CHECK(p.best_upper == mid_upper(0.19));
    CHECK(p.best_lower > p.random_lb);

    p = best_known(0.22);
    CHECK(p.regime == Regime::random_mid);
    CHECK(p.best_lower == random_bound(0.22));
    CHECK(p.best_upper == mid_upper(0.22));

    p = best_known(0.25);
    CHECK(p.regime == Regime::random_mid);
    CHECK(near(p.best_lower, 2.25, 1e-15));
    CHECK(near(p.best_upper, 2.25, 1e-15));

    p = best_known(0.6);
    CHECK(p.regime == Regime::random_tight);
    CHECK(p.best_lower == p.best_upper);
    CHECK(regime_name(Regime::random_mid) == std::string("random_mid"));
}

TEST_CASE("bounds are ordered and continuous")
{
    double previous_lower = 0.0;
    for (int i = 1; i <= 2000; ++i) {
        const double a = i / 2000.0;
        const auto p = best_known(a);
        CHECK(p.best_lower <= p.best_upper + 1e-12);
        CHECK(p.best_lower >= previous_lower - 1e-12);
        previous_lower = p.best_lower;
    }
}

TEST_CASE("alpha parsing")
{
    CHECK(parse_alpha("1/6") == 1.0 / 6.0);
    CHECK(parse_alpha("0.25") == 0.25);
    CHECK(parse_alpha("1") == 1.0);
    CHECK_THROWS_AS(parse_alpha("1/0"), ArgumentError);
    CHECK_THROWS_AS(parse_alpha("a/6"), ArgumentError);
    CHECK_THROWS_AS(parse_alpha(""), ArgumentError);
    CHECK_THROWS_AS(parse_alpha("0.2x"), ArgumentError);
}
