#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace bookramsey {

// Closed interval with directed rounding. Each endpoint is computed in
// round-to-nearest together with its exact rounding error (TwoSum, or an fma
// residual for products, quotients and roots); an endpoint moves one ulp
// outward only when the rounded value lies on the wrong side of the exact one.
// Exact results such as 0 * x stay exact.
class Interval {
public:
    constexpr Interval() = default;
    constexpr Interval(double point) : lo_(point), hi_(point) {}
    constexpr Interval(double lo, double hi) : lo_(lo), hi_(hi) {}

    constexpr double lo() const noexcept { return lo_; }
    constexpr double hi() const noexcept { return hi_; }
    constexpr double width() const noexcept { return hi_ - lo_; }
    constexpr double mid() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }
    constexpr bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }

    // Tight enclosure of the real number num / den.
    static Interval ratio(double num, double den) { return Interval(num) / Interval(den); }

    friend Interval operator+(Interval a, Interval b) { return {sum_down(a.lo_, b.lo_), sum_up(a.hi_, b.hi_)}; }
    friend Interval operator-(Interval a) { return {-a.hi_, -a.lo_}; }
    friend Interval operator-(Interval a, Interval b) { return a + (-b); }

    friend Interval operator*(Interval a, Interval b)
    {
        const double xs[] = {a.lo_, a.hi_};
        const double ys[] = {b.lo_, b.hi_};
        double lo = inf;
        double hi = -inf;
        for (double x : xs)
            for (double y : ys) {
                lo = std::min(lo, product_down(x, y));
                hi = std::max(hi, product_up(x, y));
            }
        return {lo, hi};
    }

    // Divisor must not contain zero.
    friend Interval operator/(Interval a, Interval b)
    {
        const double xs[] = {a.lo_, a.hi_};
        const double ys[] = {b.lo_, b.hi_};
        double lo = inf;
        double hi = -inf;
        for (double x : xs)
            for (double y : ys) {
                lo = std::min(lo, quotient_down(x, y));
                hi = std::max(hi, quotient_up(x, y));
            }
        return {lo, hi};
    }

    // Square root of the nonnegative part. Sound only where the caller knows
    // the argument is nonnegative at every point it cares about.
    friend Interval sqrt_clamped(Interval a)
    {
        return {a.lo_ <= 0.0 ? 0.0 : root_down(a.lo_), a.hi_ <= 0.0 ? 0.0 : root_up(a.hi_)};
    }

private:
    static constexpr double inf = std::numeric_limits<double>::infinity();
    // Below this magnitude fma residuals may themselves be rounded.
    static constexpr double tiny = 0x1.0p-960;

    static double next_down(double x) { return std::nextafter(x, -inf); }
    static double next_up(double x) { return std::nextafter(x, inf); }

    // s + err == a + b exactly (TwoSum).
    static double sum_error(double a, double b, double s)
    {
        const double bb = s - a;
        return (a - (s - bb)) + (b - bb);
    }
    static double sum_down(double a, double b)
    {
        const double s = a + b;
        return sum_error(a, b, s) < 0.0 ? next_down(s) : s;
    }
    static double sum_up(double a, double b)
    {
        const double s = a + b;
        return sum_error(a, b, s) > 0.0 ? next_up(s) : s;
    }

    static double product_down(double a, double b)
    {
        const double p = a * b;
        if (a == 0.0 || b == 0.0)
            return 0.0;
        if (std::fabs(p) < tiny)
            return next_down(p);
        return std::fma(a, b, -p) < 0.0 ? next_down(p) : p;
    }
    static double product_up(double a, double b)
    {
        const double p = a * b;
        if (a == 0.0 || b == 0.0)
            return 0.0;
        if (std::fabs(p) < tiny)
            return next_up(p);
        return std::fma(a, b, -p) > 0.0 ? next_up(p) : p;
    }

    // a = q * b + r exactly; the exact quotient exceeds q iff r / b > 0.
    static double quotient_down(double a, double b)
    {
        const double q = a / b;
        if (a == 0.0)
            return 0.0;
        if (std::fabs(q) < tiny)
            return next_down(q);
        const double r = std::fma(-q, b, a);
        return (r != 0.0 && (r < 0.0) != (b < 0.0)) ? next_down(q) : q;
    }
    static double quotient_up(double a, double b)
    {
        const double q = a / b;
        if (a == 0.0)
            return 0.0;
        if (std::fabs(q) < tiny)
            return next_up(q);
        const double r = std::fma(-q, b, a);
        return (r != 0.0 && (r > 0.0) == (b > 0.0)) ? next_up(q) : q;
    }

    static double root_down(double a)
    {
        const double s = std::sqrt(a);
        if (a < tiny)
            return next_down(s);
        return std::fma(-s, s, a) < 0.0 ? next_down(s) : s;
    }
    static double root_up(double a)
    {
        const double s = std::sqrt(a);
        if (a < tiny)
            return next_up(s);
        return std::fma(-s, s, a) > 0.0 ? next_up(s) : s;
    }

    double lo_ = 0.0;
    double hi_ = 0.0;
};

} // namespace bookramsey
