#pragma once

#include "bookramsey/constructions.hpp"
#include "bookramsey/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bookramsey {

// Witness that r(B_m, B_n) >= N + 1: a coloring of K_N with no red B_m and no
// blue B_n. Page counts are stored as measured so that re-measuring the
// witness can be compared field by field.
struct LowerBoundCertificate {
    std::string spec_record = "explicit";
    int n_vertices = 0;
    std::string witness;
    int red_pages = 0;
    bool red_has_base = true;
    int blue_pages = 0;
    bool blue_has_base = true;
    int target_m = 1;
    int target_n = 1;

    std::string statement() const;
};

struct TargetCheck {
    BookMeasurement red;
    BookMeasurement blue;
    std::optional<LowerBoundCertificate> certificate;
    // First offending book (red checked before blue) when certification fails.
    std::optional<BookMeasurement> violation;

    bool certified() const noexcept { return certificate.has_value(); }
};

TargetCheck verify_target(const ColoredCompleteGraph& g, int m, int n, const std::string& spec_record = "explicit");

// Decodes the witness and re-runs verify_target with the recorded targets.
TargetCheck reverify(const LowerBoundCertificate& certificate);

struct TrialResult {
    std::uint64_t seed = 0;
    int red_pages = 0;
    int blue_pages = 0;
    bool success = false;
};

struct MonteCarloReport {
    ConstructionSpec spec;
    int m = 1;
    int n = 1;
    int trials = 0;
    std::uint64_t base_seed = 0;
    int successes = 0;
    std::vector<TrialResult> per_trial;
    // From the lowest-index successful trial, if any.
    std::optional<LowerBoundCertificate> certificate;

    double success_rate() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / trials; }
};

// Trial i uses seed rng::derive_seed(base_seed, i). workers = 0 picks the
// hardware concurrency; the report does not depend on the worker count.
MonteCarloReport mc_certify(const ConstructionSpec& spec, int m, int n, int trials, std::uint64_t base_seed,
                            unsigned workers = 0);

// Both codegree matrices of a coloring, kept exact under single-edge flips.
// A flip of (u, v) touches only rows and columns u and v. Book sizes are read
// from per-color histograms of edge codegrees.
class IncrementalCodegrees {
public:
    explicit IncrementalCodegrees(ColoredCompleteGraph g);

    const ColoredCompleteGraph& graph() const noexcept { return g_; }
    int codegree(Vertex u, Vertex v, Color c) const;
    // Largest page count over edges of color c; 0 when the color has no edge.
    int book_pages(Color c) const noexcept { return max_[index(c)]; }
    std::size_t edge_count(Color c) const noexcept { return edges_[index(c)]; }

    void flip(Vertex u, Vertex v);

private:
    static constexpr std::size_t index(Color c) noexcept { return static_cast<std::size_t>(c); }
    int& cell(Color c, Vertex u, Vertex v)
    {
        return codeg_[index(c)][static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }
    void histogram_add(Color c, int value);
    void histogram_remove(Color c, int value);
    void shift_pair(Vertex a, Vertex b, Color changed, int delta);

    ColoredCompleteGraph g_;
    int n_;
    std::vector<int> codeg_[2];
    std::vector<std::size_t> histogram_[2];
    std::size_t edges_[2] = {0, 0};
    int max_[2] = {0, 0};
};

struct AnnealSchedule {
    double initial_temperature = 1.0;
    double cooling_factor = 0.97;
    // 0 means 10 proposals per vertex pair.
    int steps_per_temperature = 0;
    double floor_temperature = 1e-3;
};

struct AnnealParams {
    int n_vertices = 0;
    int m = 1;
    int n = 1;
    // Non-positive weights fall back to 1/m and 1/n.
    double weight_red = 0.0;
    double weight_blue = 0.0;
    AnnealSchedule schedule;
    std::uint64_t seed = 0;
};

struct SearchOutcome {
    AnnealParams params;
    ColoredCompleteGraph best;
    double best_cost = 0.0;
    int red_pages = 0;
    int blue_pages = 0;
    // Best-so-far cost at the end of each temperature level.
    std::vector<double> trace;
    std::uint64_t proposals = 0;
};

double anneal_cost(int red_pages, int blue_pages, const AnnealParams& params);
SearchOutcome anneal(const AnnealParams& params);

enum class ExhaustiveResult { all_colorings_contain_target, witness_found };

struct ExhaustiveVerdict {
    int n_vertices = 0;
    int m = 1;
    int n = 1;
    ExhaustiveResult verdict = ExhaustiveResult::all_colorings_contain_target;
    std::optional<ColoredCompleteGraph> witness;
    // Complete colorings reached past pruning, and partial assignments visited.
    std::uint64_t colorings_examined = 0;
    std::uint64_t nodes_visited = 0;
};

// Exact decision for n_vertices <= 8: depth-first over edges with pruning on
// books already forced by the assigned edges. Vertex 0's red neighbours are
// restricted to a prefix {1, ..., r}, which any coloring reaches by relabeling.
ExhaustiveVerdict exhaustive(int n_vertices, int m, int n);

} // namespace bookramsey
