#include "bookramsey/bounds.hpp"

#include "bookramsey/error.hpp"

#include <charconv>
#include <cmath>

namespace bookramsey {

namespace {

constexpr double sixth = 1.0 / 6.0;

double p_star_formula(double alpha)
{
    return (1.0 - std::sqrt(alpha * (3.0 - 2.0 * alpha))) / (1.0 - 2.0 * alpha);
}

double three_block_formula(double alpha)
{
    const double p = p_star_formula(alpha);
    return 3.0 / (1.0 + 2.0 * p * p);
}

void require_three_block_domain(double alpha)
{
    require(alpha >= sixth && alpha <= three_block_limit(),
            "alpha must lie in [1/6, (52 - 16 sqrt 3) / 121] for the three-block bound");
}

} // namespace

double random_bound(double alpha, int k)
{
    require(alpha > 0.0 && alpha <= 1.0, "alpha must lie in (0, 1]");
    require(k >= 2, "base order k must be at least 2");
    return std::pow(std::pow(alpha, 1.0 / k) + 1.0, k);
}

double mid_upper(double alpha)
{
    require(alpha >= sixth && alpha <= 0.25, "alpha must lie in [1/6, 1/4] for the mid-range upper bound");
    return 1.5 + 3.0 * alpha;
}

double three_block_limit()
{
    return (52.0 - 16.0 * std::sqrt(3.0)) / 121.0;
}

double p_star(double alpha)
{
    require_three_block_domain(alpha);
    return p_star_formula(alpha);
}

double three_block_bound(double alpha)
{
    require_three_block_domain(alpha);
    return three_block_formula(alpha);
}

double crossing_alpha()
{
    // The formulas extend past the three-block domain; the bracket needs them there.
    auto gap = [](double alpha) { return three_block_formula(alpha) - random_bound(alpha, 2); };
    double lo = 0.17;
    double hi = 0.25;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ClaimDiscriminants claim_discriminants(double alpha)
{
    require(alpha > 0.0 && alpha <= 1.0, "alpha must lie in (0, 1]");
    ClaimDiscriminants out;
    const double root = std::sqrt(alpha);
    out.c = root + 1.0;
    out.d = 1.0 + 1.0 / root;
    const double c = out.c;
    const double d = out.d;
    out.delta1 = (2.0 * d / 3.0) * (2.0 * d / 3.0) - 4.0 * (c + d) * (d - 1.0) / 9.0;
    out.delta2 = d * d - (d + c) * (d - 1.0);
    out.cd_identity = c * d - c - d;
    return out;
}

double chernoff_exponent(double c)
{
    require(c >= 1.0, "Chernoff ratio c must be at least 1");
    return std::log(c) - 1.0 + 1.0 / c;
}

ExpectationReport construction_expectations(int n_vertices, double p, std::optional<int> book_n)
{
    require(n_vertices >= 3 && n_vertices % 3 == 0, "vertex count must be a positive multiple of 3");
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    ExpectationReport r;
    r.n_vertices = n_vertices;
    r.p = p;
    const double third = n_vertices / 3.0;
    r.expected_red_intra = third - 2.0 + 2.0 * third * p * p;
    r.expected_blue_cross = third * (1.0 - p) * (1.0 - p);
    r.expected_red_cross = third * p * p + (2.0 * third - 2.0) * p;
    if (book_n) {
        require(*book_n >= 1, "book size must be positive");
        const double q = 1.0 + 2.0 * p * p;
        r.book_n = book_n;
        r.eta = 3.0 / q - static_cast<double>(n_vertices) / *book_n;
        const double shrink = 1.0 - q * r.eta / 3.0;
        r.red_page_target = shrink * *book_n;
        r.blue_page_target = shrink * (1.0 - p) * (1.0 - p) / q * *book_n;
    }
    return r;
}

const char* regime_name(Regime r)
{
    switch (r) {
    case Regime::exact_small:
        return "exact_small";
    case Regime::three_block:
        return "three_block";
    case Regime::random_mid:
        return "random_mid";
    case Regime::random_tight:
        return "random_tight";
    }
    return "unknown";
}

BoundPoint best_known(double alpha)
{
    require(alpha > 0.0 && alpha <= 1.0, "alpha must lie in (0, 1]");
    BoundPoint point;
    point.alpha = alpha;
    point.random_lb = random_bound(alpha, 2);
    if (alpha >= sixth && alpha <= 0.25)
        point.mid_ub = mid_upper(alpha);
    if (alpha >= sixth && alpha <= three_block_limit())
        point.three_block_lb = three_block_bound(alpha);

    if (alpha < sixth) {
        point.regime = Regime::exact_small;
        point.best_lower = point.best_upper = 2.0;
    } else if (alpha < three_block_limit()) {
        point.regime = Regime::three_block;
        point.best_lower = *point.three_block_lb;
        point.best_upper = *point.mid_ub;
    } else if (alpha <= 0.25) {
        point.regime = Regime::random_mid;
        point.best_lower = point.random_lb;
        point.best_upper = *point.mid_ub;
    } else {
        point.regime = Regime::random_tight;
        point.best_lower = point.best_upper = point.random_lb;
    }
    return point;
}

double parse_alpha(std::string_view text)
{
    auto parse_number = [](std::string_view part) {
        double value = 0.0;
        const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc{} || end != part.data() + part.size())
            throw ArgumentError("'" + std::string(part) + "' is not a number");
        return value;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return parse_number(text);
    long long num = 0;
    long long den = 0;
    const auto numerator = text.substr(0, slash);
    const auto denominator = text.substr(slash + 1);
    const auto r1 = std::from_chars(numerator.data(), numerator.data() + numerator.size(), num);
    const auto r2 = std::from_chars(denominator.data(), denominator.data() + denominator.size(), den);
    if (numerator.empty() || denominator.empty() || r1.ec != std::errc{} || r2.ec != std::errc{} ||
        r1.ptr != numerator.data() + numerator.size() || r2.ptr != denominator.data() + denominator.size())
        throw ArgumentError("'" + std::string(text) + "' is not a fraction of integers");
    require(den != 0, "fraction has a zero denominator");
    return static_cast<double>(num) / static_cast<double>(den);
}

} // namespace bookramsey
