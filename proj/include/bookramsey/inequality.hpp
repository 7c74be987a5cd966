#pragma once

#include "bookramsey/interval.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bookramsey {

// The mid-range upper bound closes with the two-variable inequality
//
//   g(lambda, alpha) = sqrt((1 - lambda) lambda)
//                    - sqrt((alpha / s - lambda) lambda)
//                    - sqrt((1 / s - (1 - lambda) / 2) (1 - lambda)),   s = 3/2 + 3 alpha,
//
// which must be nonnegative wherever all three radicands are nonnegative
// (lambda in [0, 1], alpha in [1/6, 1/4]). The feasible lambda range at a
// given alpha is [1 - 2/s, alpha/s]; it collapses to {1/9} at alpha = 1/4
// and g vanishes only at the corner (0, 1/6).

// Point value in double precision. Radicands down to -1e-12 are treated as 0;
// anything more negative is outside the feasible region and raises ArgumentError.
double inequality_gap(double lambda, double alpha);

struct Box {
    Interval lambda;
    Interval alpha;
};

enum class InequalityVerdict { nonnegative_certified, inconclusive };
const char* verdict_name(InequalityVerdict v);

// Boxes are searched in two charts. The direct chart uses (lambda, alpha) for
// lambda >= corner_split. The corner chart covers lambda <= corner_split with
// coordinates (lambda, t), alpha = 1/6 + t lambda, where g = sqrt(lambda) G
// and G stays bounded away from zero; without it the sqrt(lambda) cancellation
// near (0, 1/6) defeats plain interval bisection.
enum class Chart { direct, corner };

inline constexpr double corner_split = 1.0 / 32.0;
inline constexpr double corner_t_max = 0.75;

struct LeafBox {
    Chart chart = Chart::direct;
    Interval x; // lambda
    Interval y; // alpha (direct) or t (corner)
    Interval gap;
    bool boundary = false;
};

struct TouchingBox {
    Box box; // original coordinates
    Interval gap;
};

struct IntervalCertificate {
    std::string function = "g(lambda,alpha) = sqrt((1-lambda)lambda) - sqrt((alpha/(c+d alpha)-lambda)lambda) - "
                           "sqrt((1/(c+d alpha)-(1-lambda)/2)(1-lambda)), c=3/2, d=3";
    double lambda_lo = 0.0;
    double lambda_hi = 1.0;
    double alpha_lo = 0.0;
    double alpha_hi = 0.0;
    double tolerance = 0.0;
    int max_depth = 0;

    InequalityVerdict verdict = InequalityVerdict::inconclusive;
    // Encloses the minimum of g over the feasible part of the box.
    Interval minimum;
    // Leaves whose enclosure still contains 0 at tolerance width; all lie on
    // the feasible-region boundary when the verdict is certified.
    std::vector<TouchingBox> touching;
    // Leaves that could not be certified and are not boundary boxes.
    std::vector<TouchingBox> unresolved;

    std::uint64_t boxes_processed = 0;
    std::uint64_t leaves_positive = 0;
    std::uint64_t leaves_infeasible = 0;
    int deepest = 0;
    // Only filled when requested.
    std::vector<LeafBox> leaves;
};

// Enclosure of g over a direct-chart box; boundary is set when some radicand
// enclosure straddles zero. Radicands are clamped at zero, which is sound for
// the feasible points of the box.
Interval enclose_gap_direct(Interval lambda, Interval alpha, bool& boundary, bool& infeasible);
// Enclosure of g over a corner-chart box (lambda, t).
Interval enclose_gap_corner(Interval lambda, Interval t, bool& boundary, bool& infeasible);

IntervalCertificate certify_no_solution(double alpha_lo, double alpha_hi, double tolerance, int max_depth = 80,
                                        bool keep_leaves = false);

} // namespace bookramsey
