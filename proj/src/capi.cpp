#include "bookramsey/bookramsey.h"

#include "bookramsey/bounds.hpp"
#include "bookramsey/constructions.hpp"
#include "bookramsey/error.hpp"
#include "bookramsey/inequality.hpp"
#include "bookramsey/report.hpp"
#include "bookramsey/search.hpp"

#include <string>

struct br_graph {
    bookramsey::ColoredCompleteGraph graph;
};

struct br_document {
    std::string text;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
br_status guarded(Fn&& fn)
{
    try {
        fn();
        return BR_OK;
    } catch (const bookramsey::ArgumentError& e) {
        last_error = e.what();
        return BR_ERR_ARGUMENT;
    } catch (const bookramsey::ParseError& e) {
        last_error = e.what();
        return BR_ERR_PARSE;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BR_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return BR_ERR_INTERNAL;
    }
}

bool null_arg(const void* p, const char* name, br_status& status)
{
    if (p != nullptr)
        return false;
    last_error = std::string(name) + " must not be NULL";
    status = BR_ERR_NULL;
    return true;
}

#define BR_REQUIRE_NONNULL(ptr)                                                                                        \
    do {                                                                                                               \
        br_status status_ = BR_OK;                                                                                     \
        if (null_arg(ptr, #ptr, status_))                                                                              \
            return status_;                                                                                            \
    } while (0)

bookramsey::Color to_color(br_color c)
{
    if (c != BR_RED && c != BR_BLUE)
        throw bookramsey::ArgumentError("unknown color value");
    return c == BR_RED ? bookramsey::Color::red : bookramsey::Color::blue;
}

br_document* make_document(std::string text)
{
    return new br_document{std::move(text)};
}

void fill_target(const bookramsey::TargetCheck& check, br_target_result* out)
{
    out->certified = check.certified() ? 1 : 0;
    out->red_pages = check.red.pages;
    out->red_has_base = check.red.has_base() ? 1 : 0;
    out->blue_pages = check.blue.pages;
    out->blue_has_base = check.blue.has_base() ? 1 : 0;
    out->violation_color = -1;
    out->violation_base[0] = out->violation_base[1] = -1;
    if (check.violation) {
        out->violation_color = check.violation->color == bookramsey::Color::red ? BR_RED : BR_BLUE;
        for (std::size_t i = 0; i < 2 && i < check.violation->base.size(); ++i)
            out->violation_base[i] = check.violation->base[i];
    }
}

} // namespace

extern "C" {

const char* br_last_error(void)
{
    return last_error.c_str();
}

const char* br_version(void)
{
    return "1.0.0";
}

const char* br_document_text(const br_document* doc)
{
    return doc ? doc->text.c_str() : "";
}

size_t br_document_size(const br_document* doc)
{
    return doc ? doc->text.size() : 0;
}

void br_document_free(br_document* doc)
{
    delete doc;
}

br_status br_graph_from_red_pairs(int n_vertices, const int* red_pairs, size_t pair_count, br_graph** out)
{
    BR_REQUIRE_NONNULL(out);
    if (pair_count > 0)
        BR_REQUIRE_NONNULL(red_pairs);
    return guarded([&] {
        std::vector<bookramsey::VertexPair> pairs;
        pairs.reserve(pair_count);
        for (size_t i = 0; i < pair_count; ++i)
            pairs.emplace_back(red_pairs[2 * i], red_pairs[2 * i + 1]);
        *out = new br_graph{bookramsey::ColoredCompleteGraph::from_red_relation(n_vertices, pairs)};
    });
}

br_status br_graph_from_witness(const char* witness, br_graph** out)
{
    BR_REQUIRE_NONNULL(witness);
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = new br_graph{bookramsey::decode_witness(witness)}; });
}

br_status br_graph_construct(const char* spec_record, br_graph** out)
{
    BR_REQUIRE_NONNULL(spec_record);
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = new br_graph{bookramsey::build(bookramsey::parse_record(spec_record))}; });
}

void br_graph_free(br_graph* g)
{
    delete g;
}

br_status br_graph_vertex_count(const br_graph* g, int* out)
{
    BR_REQUIRE_NONNULL(g);
    BR_REQUIRE_NONNULL(out);
    *out = g->graph.size();
    return BR_OK;
}

br_status br_graph_is_red(const br_graph* g, int u, int v, int* out)
{
    BR_REQUIRE_NONNULL(g);
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = g->graph.is_red(u, v) ? 1 : 0; });
}

br_status br_graph_flip(br_graph* g, int u, int v)
{
    BR_REQUIRE_NONNULL(g);
    return guarded([&] { g->graph.flip(u, v); });
}

br_status br_graph_witness(const br_graph* g, br_document** out)
{
    BR_REQUIRE_NONNULL(g);
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = make_document(bookramsey::encode_witness(g->graph)); });
}

br_status br_graph_codegree(const br_graph* g, int u, int v, br_color color, int* out)
{
    BR_REQUIRE_NONNULL(g);
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = bookramsey::codegree(g->graph, u, v, to_color(color)); });
}

br_status br_graph_book_size(const br_graph* g, br_color color, int k, br_book* out)
{
    BR_REQUIRE_NONNULL(g);
    BR_REQUIRE_NONNULL(out);
    return guarded([&] {
        const auto book = bookramsey::book_size_k(g->graph, to_color(color), k);
        *out = br_book{color, k, book.has_base() ? 1 : 0, {-1, -1, -1, -1}, book.pages};
        for (std::size_t i = 0; i < book.base.size() && i < 4; ++i)
            out->base[i] = book.base[i];
    });
}

br_status br_graph_turan_floor(const br_graph* g, br_color color, int* floor, int* witness, int* witness_size)
{
    BR_REQUIRE_NONNULL(g);
    BR_REQUIRE_NONNULL(floor);
    return guarded([&] {
        const auto result = bookramsey::turan_independence_floor(g->graph, to_color(color));
        *floor = result.floor;
        if (witness_size)
            *witness_size = static_cast<int>(result.witness.size());
        if (witness)
            for (std::size_t i = 0; i < result.witness.size(); ++i)
                witness[i] = result.witness[i];
    });
}

br_status br_graph_pair_density(const br_graph* g, const int* first, size_t first_size, const int* second,
                                size_t second_size, double* red_density, double* blue_density)
{
    BR_REQUIRE_NONNULL(g);
    BR_REQUIRE_NONNULL(first);
    BR_REQUIRE_NONNULL(second);
    return guarded([&] {
        const auto report = bookramsey::pair_density(g->graph, {first, first_size}, {second, second_size});
        if (red_density)
            *red_density = report.red_density();
        if (blue_density)
            *blue_density = report.blue_density();
    });
}

br_status br_verify_target(const br_graph* g, int m, int n, const char* spec_record, br_target_result* out,
                           br_document** certificate)
{
    BR_REQUIRE_NONNULL(g);
    BR_REQUIRE_NONNULL(out);
    return guarded([&] {
        const auto check = bookramsey::verify_target(g->graph, m, n, spec_record ? spec_record : "explicit");
        fill_target(check, out);
        if (certificate)
            *certificate = check.certificate ? make_document(bookramsey::format_certificate(*check.certificate)) : nullptr;
    });
}

br_status br_reverify_certificate(const char* text, br_target_result* out, int* matches)
{
    BR_REQUIRE_NONNULL(text);
    BR_REQUIRE_NONNULL(out);
    return guarded([&] {
        const auto recorded = bookramsey::parse_certificate(text);
        const auto check = bookramsey::reverify(recorded);
        fill_target(check, out);
        if (matches)
            *matches = check.certified() && check.red.pages == recorded.red_pages &&
                               check.red.has_base() == recorded.red_has_base &&
                               check.blue.pages == recorded.blue_pages &&
                               check.blue.has_base() == recorded.blue_has_base
                           ? 1
                           : 0;
    });
}

br_status br_mc_certify(const char* spec_record, int m, int n, int trials, uint64_t base_seed, unsigned workers,
                        br_mc_summary* out, br_document** report, br_document** certificate)
{
    BR_REQUIRE_NONNULL(spec_record);
    BR_REQUIRE_NONNULL(out);
    return guarded([&] {
        const auto result = bookramsey::mc_certify(bookramsey::parse_record(spec_record), m, n, trials, base_seed, workers);
        *out = br_mc_summary{result.trials, result.successes, result.success_rate(), result.certificate ? 1 : 0};
        if (report)
            *report = make_document(bookramsey::format_mc_report(result));
        if (certificate)
            *certificate = result.certificate ? make_document(bookramsey::format_certificate(*result.certificate)) : nullptr;
    });
}

void br_anneal_defaults(br_anneal_params* params)
{
    if (!params)
        return;
    const bookramsey::AnnealSchedule schedule;
    *params = br_anneal_params{0,   1,   1,   0.0, 0.0, schedule.initial_temperature, schedule.cooling_factor,
                               schedule.steps_per_temperature, schedule.floor_temperature, 0};
}

br_status br_anneal(const br_anneal_params* params, br_anneal_summary* out, br_document** report,
                    br_document** certificate)
{
    BR_REQUIRE_NONNULL(params);
    BR_REQUIRE_NONNULL(out);
    return guarded([&] {
        bookramsey::AnnealParams p;
        p.n_vertices = params->n_vertices;
        p.m = params->m;
        p.n = params->n;
        p.weight_red = params->weight_red;
        p.weight_blue = params->weight_blue;
        p.schedule = {params->initial_temperature, params->cooling_factor, params->steps_per_temperature,
                      params->floor_temperature};
        p.seed = params->seed;
        const auto outcome = bookramsey::anneal(p);
        *out = br_anneal_summary{outcome.best_cost, outcome.red_pages, outcome.blue_pages, outcome.proposals};
        if (report)
            *report = make_document(bookramsey::format_search_outcome(outcome));
        if (certificate) {
            *certificate = nullptr;
            const auto check = bookramsey::verify_target(outcome.best, p.m, p.n);
            if (check.certificate)
                *certificate = make_document(bookramsey::format_certificate(*check.certificate));
        }
    });
}

br_status br_exhaustive(int n_vertices, int m, int n, br_exhaustive_summary* out, br_document** report)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] {
        const auto verdict = bookramsey::exhaustive(n_vertices, m, n);
        *out = br_exhaustive_summary{verdict.verdict == bookramsey::ExhaustiveResult::witness_found ? 1 : 0,
                                     verdict.colorings_examined, verdict.nodes_visited};
        if (report)
            *report = make_document(bookramsey::format_exhaustive(verdict));
    });
}

br_status br_parse_alpha(const char* text, double* out)
{
    BR_REQUIRE_NONNULL(text);
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = bookramsey::parse_alpha(text); });
}

br_status br_random_bound(double alpha, int k, double* out)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = bookramsey::random_bound(alpha, k); });
}

br_status br_mid_upper(double alpha, double* out)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = bookramsey::mid_upper(alpha); });
}

br_status br_p_star(double alpha, double* out)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = bookramsey::p_star(alpha); });
}

br_status br_three_block_bound(double alpha, double* out)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = bookramsey::three_block_bound(alpha); });
}

br_status br_crossing_alpha(double* out)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = bookramsey::crossing_alpha(); });
}

br_status br_chernoff_exponent(double c, double* out)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = bookramsey::chernoff_exponent(c); });
}

br_status br_claim_discriminants(double alpha, double out[3])
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] {
        const auto d = bookramsey::claim_discriminants(alpha);
        out[0] = d.delta1;
        out[1] = d.delta2;
        out[2] = d.cd_identity;
    });
}

br_status br_construction_expectations(int n_vertices, double p, br_expectations* out)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] {
        const auto r = bookramsey::construction_expectations(n_vertices, p);
        *out = br_expectations{r.expected_red_intra, r.expected_blue_cross, r.expected_red_cross};
    });
}

br_status br_best_known(double alpha, br_bound_point* out)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] {
        const auto p = bookramsey::best_known(alpha);
        *out = br_bound_point{p.alpha,
                              p.random_lb,
                              p.mid_ub ? 1 : 0,
                              p.mid_ub.value_or(0.0),
                              p.three_block_lb ? 1 : 0,
                              p.three_block_lb.value_or(0.0),
                              p.best_lower,
                              p.best_upper,
                              bookramsey::regime_name(p.regime)};
    });
}

br_status br_bounds_csv(double alpha_min, double alpha_max, int steps, br_document** out)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = make_document(bookramsey::bounds_csv(alpha_min, alpha_max, steps)); });
}

br_status br_inequality_gap(double lambda, double alpha, double* out)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] { *out = bookramsey::inequality_gap(lambda, alpha); });
}

br_status br_certify_no_solution(double alpha_lo, double alpha_hi, double tolerance, int max_depth,
                                 br_interval_summary* out, br_document** report)
{
    BR_REQUIRE_NONNULL(out);
    return guarded([&] {
        const auto cert = bookramsey::certify_no_solution(alpha_lo, alpha_hi, tolerance, max_depth);
        *out = br_interval_summary{cert.verdict == bookramsey::InequalityVerdict::nonnegative_certified ? 1 : 0,
                                   cert.minimum.lo(),
                                   cert.minimum.hi(),
                                   cert.touching.size(),
                                   cert.unresolved.size(),
                                   cert.boxes_processed};
        if (report)
            *report = make_document(bookramsey::format_interval_certificate(cert));
    });
}

} // extern "C"
