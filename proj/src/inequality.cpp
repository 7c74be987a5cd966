#include "bookramsey/inequality.hpp"

#include "bookramsey/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bookramsey {

namespace {

constexpr double radicand_slack = 1e-12;

struct PendingBox {
    Chart chart;
    Interval x;
    Interval y;
    int depth;
};

Interval split_low(Interval i) { return {i.lo(), i.mid()}; }
Interval split_high(Interval i) { return {i.mid(), i.hi()}; }

Interval real_sixth() { return Interval::ratio(1.0, 6.0); }

Interval corner_alpha(Interval lambda, Interval t) { return real_sixth() + t * lambda; }

Box to_original(const PendingBox& b)
{
    if (b.chart == Chart::direct)
        return {b.x, b.y};
    return {b.x, corner_alpha(b.x, b.y)};
}

} // namespace

const char* verdict_name(InequalityVerdict v)
{
    return v == InequalityVerdict::nonnegative_certified ? "nonnegative_certified" : "inconclusive";
}

double inequality_gap(double lambda, double alpha)
{
    const double s = 1.5 + 3.0 * alpha;
    auto radicand = [](double value) {
        require(value >= -radicand_slack, "point lies outside the feasible region of the inequality");
        return std::max(0.0, value);
    };
    const double r1 = radicand((1.0 - lambda) * lambda);
    const double r2 = radicand((alpha / s - lambda) * lambda);
    const double r3 = radicand((1.0 / s - (1.0 - lambda) / 2.0) * (1.0 - lambda));
    return std::sqrt(r1) - std::sqrt(r2) - std::sqrt(r3);
}

Interval enclose_gap_direct(Interval lambda, Interval alpha, bool& boundary, bool& infeasible)
{
    const Interval one(1.0);
    const Interval s = Interval(1.5) + Interval(3.0) * alpha;
    const Interval upper = alpha / s;
    const Interval inverse = one / s;
    const Interval rest = one - lambda;

    const Interval r1 = rest * lambda;
    const Interval r2 = (upper - lambda) * lambda;
    const Interval r3 = (inverse - rest * Interval(0.5)) * rest;

    infeasible = r1.hi() < 0.0 || r2.hi() < 0.0 || r3.hi() < 0.0;
    boundary = r1.lo() < 0.0 || r2.lo() < 0.0 || r3.lo() < 0.0;
    return sqrt_clamped(r1) - sqrt_clamped(r2) - sqrt_clamped(r3);
}

namespace {

// G = g / sqrt(lambda) in corner coordinates. With alpha = 1/6 + t lambda we
// have s = 2 + 3 t lambda, and the third radicand of g equals
// lambda (1/2 - 3t / (2s)) (1 - lambda).
Interval corner_scaled_gap(Interval lambda, Interval t, bool& boundary, bool& infeasible)
{
    const Interval one(1.0);
    const Interval t_lambda = t * lambda;
    const Interval alpha = real_sixth() + t_lambda;
    const Interval s = Interval(2.0) + Interval(3.0) * t_lambda;
    const Interval rest = one - lambda;

    const Interval q1 = rest;
    const Interval q2 = alpha / s - lambda;
    const Interval q3 = (Interval(0.5) - Interval(3.0) * t / (Interval(2.0) * s)) * rest;

    infeasible = q1.hi() < 0.0 || q2.hi() < 0.0 || q3.hi() < 0.0;
    boundary = lambda.lo() <= 0.0 || q1.lo() < 0.0 || q2.lo() < 0.0 || q3.lo() < 0.0;
    return sqrt_clamped(q1) - sqrt_clamped(q2) - sqrt_clamped(q3);
}

} // namespace

Interval enclose_gap_corner(Interval lambda, Interval t, bool& boundary, bool& infeasible)
{
    return sqrt_clamped(lambda) * corner_scaled_gap(lambda, t, boundary, infeasible);
}

IntervalCertificate certify_no_solution(double alpha_lo, double alpha_hi, double tolerance, int max_depth,
                                        bool keep_leaves)
{
    require(tolerance > 0.0, "tolerance must be positive");
    require(max_depth >= 1, "max depth must be at least 1");
    require(alpha_lo <= alpha_hi, "alpha range is empty");
    require(alpha_lo >= 1.0 / 6.0 - 1e-12 && alpha_hi <= 0.25, "alpha range must lie within [1/6, 1/4]");

    IntervalCertificate cert;
    cert.alpha_lo = alpha_lo;
    cert.alpha_hi = alpha_hi;
    cert.tolerance = tolerance;
    cert.max_depth = max_depth;

    double min_lower = std::numeric_limits<double>::infinity();
    double min_upper = std::numeric_limits<double>::infinity();
    // g(0, 1/6) = 0 exactly.
    if (alpha_lo <= 1.0 / 6.0)
        min_upper = 0.0;

    auto enclose = [](Chart chart, Interval x, Interval y, bool& boundary, bool& infeasible) {
        return chart == Chart::direct ? enclose_gap_direct(x, y, boundary, infeasible)
                                      : enclose_gap_corner(x, y, boundary, infeasible);
    };

    std::vector<PendingBox> stack;
    stack.push_back({Chart::direct, {corner_split, 1.0}, {alpha_lo, alpha_hi}, 0});
    stack.push_back({Chart::corner, {0.0, corner_split}, {0.0, corner_t_max}, 0});

    while (!stack.empty()) {
        const PendingBox box = stack.back();
        stack.pop_back();
        ++cert.boxes_processed;
        cert.deepest = std::max(cert.deepest, box.depth);

        const Box original = to_original(box);
        if (original.alpha.lo() > alpha_hi || original.alpha.hi() < alpha_lo) {
            ++cert.leaves_infeasible;
            continue;
        }

        bool boundary = false;
        bool infeasible = false;
        const Interval gap = enclose(box.chart, box.x, box.y, boundary, infeasible);
        if (infeasible) {
            ++cert.leaves_infeasible;
            continue;
        }

        auto record_leaf = [&] {
            min_lower = std::min(min_lower, gap.lo());
            if (keep_leaves)
                cert.leaves.push_back({box.chart, box.x, box.y, gap, boundary});
            // Upper end of the minimum from the box midpoint, when it is certainly feasible.
            bool mid_boundary = false;
            bool mid_infeasible = false;
            const Interval at_mid =
                enclose(box.chart, Interval(box.x.mid()), Interval(box.y.mid()), mid_boundary, mid_infeasible);
            if (!mid_boundary && !mid_infeasible)
                min_upper = std::min(min_upper, at_mid.hi());
        };

        if (gap.lo() > 0.0) {
            ++cert.leaves_positive;
            record_leaf();
            continue;
        }

        const bool small = std::max(original.lambda.width(), original.alpha.width()) <= tolerance;
        if (small || box.depth >= max_depth) {
            record_leaf();
            if (boundary && small)
                cert.touching.push_back({original, gap});
            else
                cert.unresolved.push_back({original, gap});
            continue;
        }

        bool split_x = true;
        if (box.chart == Chart::direct) {
            split_x = box.x.width() >= box.y.width();
        } else {
            // Once the scaled part is positive, only the sqrt(lambda) factor
            // pins gap.lo() at 0; refine lambda alone then.
            bool b = false;
            bool f = false;
            const bool only_lambda_pins = box.x.lo() <= 0.0 && corner_scaled_gap(box.x, box.y, b, f).lo() >= 0.0;
            split_x = only_lambda_pins || box.x.width() / corner_split >= box.y.width() / corner_t_max;
        }
        if (split_x) {
            stack.push_back({box.chart, split_high(box.x), box.y, box.depth + 1});
            stack.push_back({box.chart, split_low(box.x), box.y, box.depth + 1});
        } else {
            stack.push_back({box.chart, box.x, split_high(box.y), box.depth + 1});
            stack.push_back({box.chart, box.x, split_low(box.y), box.depth + 1});
        }
    }

    cert.minimum = Interval(min_lower, std::max(min_lower, min_upper));
    cert.verdict = cert.unresolved.empty() ? InequalityVerdict::nonnegative_certified : InequalityVerdict::inconclusive;
    return cert;
}

} // namespace bookramsey
