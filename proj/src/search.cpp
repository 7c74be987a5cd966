#include "bookramsey/search.hpp"

#include "bookramsey/error.hpp"
#include "bookramsey/rng.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <random>
#include <thread>

namespace bookramsey {

std::string LowerBoundCertificate::statement() const
{
    return "r(B_" + std::to_string(target_m) + ",B_" + std::to_string(target_n) + ") >= " + std::to_string(n_vertices + 1);
}

TargetCheck verify_target(const ColoredCompleteGraph& g, int m, int n, const std::string& spec_record)
{
    require(m >= 1 && n >= 1, "book targets must be positive");
    TargetCheck check;
    check.red = book_size(g, Color::red);
    check.blue = book_size(g, Color::blue);
    if (check.red.pages >= m) {
        check.violation = check.red;
        return check;
    }
    if (check.blue.pages >= n) {
        check.violation = check.blue;
        return check;
    }
    LowerBoundCertificate cert;
    cert.spec_record = spec_record;
    cert.n_vertices = g.size();
    cert.witness = encode_witness(g);
    cert.red_pages = check.red.pages;
    cert.red_has_base = check.red.has_base();
    cert.blue_pages = check.blue.pages;
    cert.blue_has_base = check.blue.has_base();
    cert.target_m = m;
    cert.target_n = n;
    check.certificate = std::move(cert);
    return check;
}

TargetCheck reverify(const LowerBoundCertificate& certificate)
{
    const ColoredCompleteGraph g = decode_witness(certificate.witness);
    if (g.size() != certificate.n_vertices)
        throw ParseError("certificate vertex count disagrees with its witness");
    return verify_target(g, certificate.target_m, certificate.target_n, certificate.spec_record);
}

MonteCarloReport mc_certify(const ConstructionSpec& spec, int m, int n, int trials, std::uint64_t base_seed,
                            unsigned workers)
{
    require(is_randomized(spec), std::string("Monte Carlo needs a randomized construction, got '") + kind_name(spec) +
                                     "'; use verify_target for deterministic ones");
    require(trials >= 1, "Monte Carlo needs at least one trial");
    require(m >= 1 && n >= 1, "book targets must be positive");
    validate(spec);

    MonteCarloReport report;
    report.spec = spec;
    report.m = m;
    report.n = n;
    report.trials = trials;
    report.base_seed = base_seed;
    report.per_trial.resize(static_cast<std::size_t>(trials));

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(trials));

    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < trials; i = next++) {
            TrialResult& trial = report.per_trial[static_cast<std::size_t>(i)];
            trial.seed = rng::derive_seed(base_seed, static_cast<std::uint64_t>(i));
            const ColoredCompleteGraph g = build(with_seed(spec, trial.seed));
            trial.red_pages = book_size(g, Color::red).pages;
            trial.blue_pages = book_size(g, Color::blue).pages;
            trial.success = trial.red_pages < m && trial.blue_pages < n;
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(work);
        work();
    }

    for (const TrialResult& trial : report.per_trial) {
        if (!trial.success)
            continue;
        ++report.successes;
        if (!report.certificate) {
            const ConstructionSpec seeded = with_seed(spec, trial.seed);
            report.certificate = verify_target(build(seeded), m, n, to_record(seeded)).certificate;
        }
    }
    return report;
}

IncrementalCodegrees::IncrementalCodegrees(ColoredCompleteGraph g)
    : g_(std::move(g)), n_(g_.size())
{
    const auto n = static_cast<std::size_t>(n_);
    for (Color c : {Color::red, Color::blue}) {
        codeg_[index(c)].assign(n * n, 0);
        histogram_[index(c)].assign(std::max<std::size_t>(n, 2) - 1, 0);
    }
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            for (Color c : {Color::red, Color::blue}) {
                const int value = bookramsey::codegree(g_, u, v, c);
                cell(c, u, v) = value;
                cell(c, v, u) = value;
            }
            const Color c = g_.color(u, v);
            histogram_add(c, cell(c, u, v));
        }
    }
}

int IncrementalCodegrees::codegree(Vertex u, Vertex v, Color c) const
{
    require(u != v && u >= 0 && v >= 0 && u < n_ && v < n_, "codegree needs two distinct vertices in range");
    return codeg_[index(c)][static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
}

void IncrementalCodegrees::histogram_add(Color c, int value)
{
    auto& hist = histogram_[index(c)];
    ++hist[static_cast<std::size_t>(value)];
    ++edges_[index(c)];
    max_[index(c)] = std::max(max_[index(c)], value);
}

void IncrementalCodegrees::histogram_remove(Color c, int value)
{
    auto& hist = histogram_[index(c)];
    --hist[static_cast<std::size_t>(value)];
    --edges_[index(c)];
    int& top = max_[index(c)];
    while (top > 0 && hist[static_cast<std::size_t>(top)] == 0)
        --top;
}

// Adds delta to the c-codegree of (a, b), keeping the histogram of the
// color (a, b) itself carries in step.
void IncrementalCodegrees::shift_pair(Vertex a, Vertex b, Color changed, int delta)
{
    const Color own = g_.color(a, b);
    const int before = cell(changed, a, b);
    cell(changed, a, b) = before + delta;
    cell(changed, b, a) = before + delta;
    if (own == changed) {
        histogram_remove(own, before);
        histogram_add(own, before + delta);
    }
}

void IncrementalCodegrees::flip(Vertex u, Vertex v)
{
    const Color old_color = g_.color(u, v);
    const Color new_color = opposite(old_color);

    histogram_remove(old_color, cell(old_color, u, v));
    for (Vertex w = 0; w < n_; ++w) {
        if (w == u || w == v)
            continue;
        // v stops being an old-color common neighbour of (u, w) and starts
        // being a new-color one, depending on the color of vw; same for u and (v, w).
        const Color vw = g_.color(v, w);
        shift_pair(u, w, vw, vw == old_color ? -1 : +1);
        const Color uw = g_.color(u, w);
        shift_pair(v, w, uw, uw == old_color ? -1 : +1);
    }
    g_.set_color(u, v, new_color);
    histogram_add(new_color, cell(new_color, u, v));
}

double anneal_cost(int red_pages, int blue_pages, const AnnealParams& params)
{
    const double wr = params.weight_red > 0 ? params.weight_red : 1.0 / params.m;
    const double wb = params.weight_blue > 0 ? params.weight_blue : 1.0 / params.n;
    return wr * std::max(0, red_pages - (params.m - 1)) + wb * std::max(0, blue_pages - (params.n - 1));
}

SearchOutcome anneal(const AnnealParams& params)
{
    require(params.n_vertices >= 4, "annealing needs at least 4 vertices");
    require(params.m >= 1 && params.n >= 1, "book targets must be positive");
    const AnnealSchedule& schedule = params.schedule;
    require(schedule.cooling_factor > 0.0 && schedule.cooling_factor < 1.0, "cooling factor must lie in (0, 1)");
    require(schedule.initial_temperature > 0.0 && schedule.floor_temperature > 0.0,
            "temperatures must be positive");
    require(schedule.steps_per_temperature >= 0, "steps per temperature must be nonnegative");

    const int n = params.n_vertices;
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
    const std::uint64_t steps = schedule.steps_per_temperature > 0
                                    ? static_cast<std::uint64_t>(schedule.steps_per_temperature)
                                    : 10 * pairs;

    std::mt19937_64 engine(params.seed);
    IncrementalCodegrees state(random_coloring(n, 0.5, params.seed));
    auto current_cost = [&] {
        return anneal_cost(state.book_pages(Color::red), state.book_pages(Color::blue), params);
    };

    SearchOutcome outcome{params, state.graph(), current_cost(), state.book_pages(Color::red),
                          state.book_pages(Color::blue), {}, 0};
    double cost = outcome.best_cost;

    for (double temperature = schedule.initial_temperature;
         temperature >= schedule.floor_temperature && outcome.best_cost > 0.0;
         temperature *= schedule.cooling_factor) {
        for (std::uint64_t step = 0; step < steps && outcome.best_cost > 0.0; ++step) {
            std::uint64_t pick = engine() % pairs;
            // Unrank pick into u < v.
            Vertex u = 0;
            while (pick >= static_cast<std::uint64_t>(n - 1 - u)) {
                pick -= static_cast<std::uint64_t>(n - 1 - u);
                ++u;
            }
            const Vertex v = u + 1 + static_cast<Vertex>(pick);

            ++outcome.proposals;
            state.flip(u, v);
            const double proposed = current_cost();
            const double delta = proposed - cost;
            if (delta <= 0.0 || rng::to_unit(engine()) < std::exp(-delta / temperature)) {
                cost = proposed;
                if (cost < outcome.best_cost) {
                    outcome.best = state.graph();
                    outcome.best_cost = cost;
                    outcome.red_pages = state.book_pages(Color::red);
                    outcome.blue_pages = state.book_pages(Color::blue);
                }
            } else {
                state.flip(u, v);
            }
        }
        outcome.trace.push_back(outcome.best_cost);
    }
    return outcome;
}

namespace {

struct ExhaustiveSearch {
    int n;
    int target[2];
    std::vector<VertexPair> order;
    std::uint32_t rows[2][8] = {};
    ExhaustiveVerdict& verdict;
    std::vector<Color> assignment;

    static int count(std::uint32_t bits) { return std::popcount(bits); }

    // True when assigning (u, v) color c completed a book that meets the target.
    bool forces_book(Vertex u, Vertex v, Color c) const
    {
        const auto& r = rows[static_cast<std::size_t>(c)];
        const int t = target[static_cast<std::size_t>(c)];
        const std::uint32_t common = r[u] & r[v];
        if (count(common) >= t)
            return true;
        for (std::uint32_t bits = common; bits != 0; bits &= bits - 1) {
            const int w = std::countr_zero(bits);
            if (count(r[u] & r[w]) >= t || count(r[v] & r[w]) >= t)
                return true;
        }
        return false;
    }

    bool descend(std::size_t depth)
    {
        ++verdict.nodes_visited;
        if (depth == order.size()) {
            ++verdict.colorings_examined;
            return true;
        }
        const auto [u, v] = order[depth];
        for (Color c : {Color::red, Color::blue}) {
            // Vertex 0's red neighbourhood is a prefix of 1..n-1.
            if (u == 0 && v >= 2 && c == Color::red && !(rows[0][0] >> (v - 1) & 1u))
                continue;
            auto& r = rows[static_cast<std::size_t>(c)];
            r[u] |= 1u << v;
            r[v] |= 1u << u;
            assignment[depth] = c;
            if (!forces_book(u, v, c) && descend(depth + 1))
                return true;
            r[u] &= ~(1u << v);
            r[v] &= ~(1u << u);
        }
        return false;
    }
};

} // namespace

ExhaustiveVerdict exhaustive(int n_vertices, int m, int n)
{
    require(n_vertices >= 1 && n_vertices <= 8, "exhaustive search supports 1 to 8 vertices");
    require(m >= 1 && n >= 1, "book targets must be positive");

    ExhaustiveVerdict verdict;
    verdict.n_vertices = n_vertices;
    verdict.m = m;
    verdict.n = n;

    ExhaustiveSearch search{n_vertices, {m, n}, {}, {}, verdict, {}};
    for (Vertex v = 1; v < n_vertices; ++v)
        for (Vertex u = 0; u < v; ++u)
            search.order.emplace_back(u, v);
    search.assignment.assign(search.order.size(), Color::blue);

    if (search.descend(0)) {
        verdict.verdict = ExhaustiveResult::witness_found;
        ColoredCompleteGraph g(n_vertices);
        for (std::size_t i = 0; i < search.order.size(); ++i)
            if (search.assignment[i] == Color::red)
                g.set_color(search.order[i].first, search.order[i].second, Color::red);
        verdict.witness = std::move(g);
    }
    return verdict;
}

} // namespace bookramsey
