#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace bookramsey {

// Leading constants of r(B_{alpha n}, B_n) / n. Inputs outside a formula's
// range raise ArgumentError.

// (alpha^{1/k} + 1)^k, 0 < alpha <= 1, k >= 2.
double random_bound(double alpha, int k = 2);

// 3/2 + 3 alpha, 1/6 <= alpha <= 1/4.
double mid_upper(double alpha);

// Right end of the three-block regime, (52 - 16 sqrt 3) / 121.
double three_block_limit();

// Cross-edge red probability (1 - sqrt(alpha (3 - 2 alpha))) / (1 - 2 alpha)
// for 1/6 <= alpha <= three_block_limit().
double p_star(double alpha);

// 3 / (1 + 2 p_star(alpha)^2), same domain as p_star.
double three_block_bound(double alpha);

// Root of three_block_bound - random_bound on [0.17, 0.25] by bisection.
double crossing_alpha();

struct ClaimDiscriminants {
    double c = 0.0;
    double d = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
    double cd_identity = 0.0;
};

// With c = sqrt(alpha) + 1 and d = 1 + 1/sqrt(alpha), all three quantities vanish.
ClaimDiscriminants claim_discriminants(double alpha);

// ln c - 1 + 1/c, c >= 1.
double chernoff_exponent(double c);

struct ExpectationReport {
    int n_vertices = 0;
    double p = 0.0;
    double expected_red_intra = 0.0;
    double expected_blue_cross = 0.0;
    double expected_red_cross = 0.0;
    // Filled when a book size n is given: N = (3 / (1 + 2p^2) - eta) n.
    std::optional<int> book_n;
    double eta = 0.0;
    double red_page_target = 0.0;
    double blue_page_target = 0.0;
};

ExpectationReport construction_expectations(int n_vertices, double p, std::optional<int> book_n = std::nullopt);

enum class Regime { exact_small, three_block, random_mid, random_tight };
const char* regime_name(Regime r);

struct BoundPoint {
    double alpha = 0.0;
    double random_lb = 0.0;
    std::optional<double> mid_ub;
    std::optional<double> three_block_lb;
    double best_lower = 0.0;
    double best_upper = 0.0;
    Regime regime = Regime::exact_small;
};

BoundPoint best_known(double alpha);

// Accepts a decimal ("0.25", "1e-1") or a fraction "a/b" of integers.
double parse_alpha(std::string_view text);

} // namespace bookramsey
