#include "bookramsey/bookramsey.h"

#include <doctest.h>

#include <cmath>
#include <string>

namespace {

std::string text(br_document* doc)
{
    std::string s(br_document_text(doc), br_document_size(doc));
    br_document_free(doc);
    return s;
}

} // namespace

TEST_CASE("graph handles")
{
    const int pairs[] = {0, 1, 1, 2};
    br_graph* g = nullptr;
    REQUIRE(br_graph_from_red_pairs(4, pairs, 2, &g) == BR_OK);
    int n = 0;
    CHECK(br_graph_vertex_count(g, &n) == BR_OK);
    CHECK(n == 4);
    int red = 0;
    CHECK(br_graph_is_red(g, 1, 0, &red) == BR_OK);
    CHECK(red == 1);
    CHECK(br_graph_flip(g, 0, 1) == BR_OK);
    CHECK(br_graph_is_red(g, 0, 1, &red) == BR_OK);
    CHECK(red == 0);
    CHECK(br_graph_flip(g, 2, 2) == BR_ERR_ARGUMENT);
    CHECK(std::string(br_last_error()).find("loop") != std::string::npos);

    int codeg = -1;
    CHECK(br_graph_codegree(g, 0, 1, BR_BLUE, &codeg) == BR_OK);
    CHECK(codeg == 1);

    br_document* w = nullptr;
    REQUIRE(br_graph_witness(g, &w) == BR_OK);
    const std::string witness = text(w);
    br_graph* h = nullptr;
    REQUIRE(br_graph_from_witness(witness.c_str(), &h) == BR_OK);
    CHECK(br_graph_is_red(h, 1, 2, &red) == BR_OK);
    CHECK(red == 1);
    br_graph_free(h);
    br_graph_free(g);

    CHECK(br_graph_from_witness("3:z", &h) == BR_ERR_PARSE);
    CHECK(br_graph_from_witness(nullptr, &h) == BR_ERR_NULL);
    CHECK(br_graph_vertex_count(nullptr, &n) == BR_ERR_NULL);
    br_graph_free(nullptr);
}

TEST_CASE("construction, books and certificates")
{
    br_graph* g = nullptr;
    REQUIRE(br_graph_construct("kind=paley;q=29", &g) == BR_OK);
    br_book book{};
    REQUIRE(br_graph_book_size(g, BR_RED, 2, &book) == BR_OK);
    CHECK(book.pages == 6);
    CHECK(book.has_base == 1);
    REQUIRE(br_graph_book_size(g, BR_BLUE, 3, &book) == BR_OK);
    CHECK(book.k == 3);
    CHECK(br_graph_book_size(g, BR_BLUE, 7, &book) == BR_ERR_ARGUMENT);

    br_target_result result{};
    br_document* cert = nullptr;
    REQUIRE(br_verify_target(g, 7, 7, "kind=paley;q=29", &result, &cert) == BR_OK);
    CHECK(result.certified == 1);
    CHECK(result.violation_color == -1);
    const std::string cert_text = text(cert);
    CHECK(cert_text.find("statement: r(B_7,B_7) >= 30") != std::string::npos);

    int matches = 0;
    br_target_result again{};
    REQUIRE(br_reverify_certificate(cert_text.c_str(), &again, &matches) == BR_OK);
    CHECK(matches == 1);
    CHECK(again.red_pages == 6);

    cert = nullptr;
    REQUIRE(br_verify_target(g, 6, 7, nullptr, &result, &cert) == BR_OK);
    CHECK(result.certified == 0);
    CHECK(result.violation_color == BR_RED);
    CHECK(cert == nullptr);
    br_graph_free(g);

    CHECK(br_graph_construct("kind=paley;q=28", &g) == BR_ERR_ARGUMENT);
    CHECK(br_graph_construct("kind=nope", &g) == BR_ERR_PARSE);
    CHECK(br_reverify_certificate("junk", &again, &matches) == BR_ERR_PARSE);
}

TEST_CASE("turan floor and density")
{
    br_graph* g = nullptr;
    REQUIRE(br_graph_construct("kind=blocks;k=2;n=3", &g) == BR_OK);
    int floor = 0;
    int witness[8];
    int size = 0;
    REQUIRE(br_graph_turan_floor(g, BR_RED, &floor, witness, &size) == BR_OK);
    CHECK(floor >= 1);
    CHECK(size >= floor);
    const int a[] = {0, 1, 2, 3};
    const int b[] = {4, 5, 6, 7};
    double red = 0.0;
    double blue = 0.0;
    REQUIRE(br_graph_pair_density(g, a, 4, b, 4, &red, &blue) == BR_OK);
    CHECK(red == 1.0);
    CHECK(blue == 0.0);
    br_graph_free(g);
}

TEST_CASE("searches")
{
    br_mc_summary mc{};
    br_document* report = nullptr;
    br_document* cert = nullptr;
    REQUIRE(br_mc_certify("kind=random;n_vertices=30;blue_probability=0.5;seed=0", 12, 12, 6, 3, 2, &mc, &report,
                          &cert) == BR_OK);
    CHECK(mc.trials == 6);
    CHECK(text(report).find("trials: 6") != std::string::npos);
    CHECK((cert != nullptr) == (mc.has_certificate == 1));
    if (cert)
        br_document_free(cert);
    CHECK(br_mc_certify("kind=paley;q=13", 3, 3, 5, 1, 1, &mc, nullptr, nullptr) == BR_ERR_ARGUMENT);

    br_anneal_params params{};
    br_anneal_defaults(&params);
    params.n_vertices = 9;
    params.m = 2;
    params.n = 2;
    params.seed = 7;
    br_anneal_summary summary{};
    report = nullptr;
    cert = nullptr;
    REQUIRE(br_anneal(&params, &summary, &report, &cert) == BR_OK);
    CHECK(summary.best_cost == 0.0);
    REQUIRE(cert != nullptr);
    const std::string cert_text = text(cert);
    br_document_free(report);
    int matches = 0;
    br_target_result result{};
    REQUIRE(br_reverify_certificate(cert_text.c_str(), &result, &matches) == BR_OK);
    CHECK(matches == 1);

    br_exhaustive_summary ex{};
    REQUIRE(br_exhaustive(6, 1, 1, &ex, nullptr) == BR_OK);
    CHECK(ex.witness_found == 0);
    CHECK(br_exhaustive(9, 1, 1, &ex, nullptr) == BR_ERR_ARGUMENT);
}

TEST_CASE("bounds")
{
    double v = 0.0;
    REQUIRE(br_parse_alpha("1/6", &v) == BR_OK);
    CHECK(v == 1.0 / 6.0);
    CHECK(br_parse_alpha("x", &v) == BR_ERR_ARGUMENT);
    REQUIRE(br_random_bound(1.0, 2, &v) == BR_OK);
    CHECK(v == 4.0);
    REQUIRE(br_mid_upper(0.25, &v) == BR_OK);
    CHECK(v == 2.25);
    CHECK(br_mid_upper(0.5, &v) == BR_ERR_ARGUMENT);
    REQUIRE(br_p_star(1.0 / 6.0, &v) == BR_OK);
    CHECK(std::abs(v - 0.5) < 1e-15);
    REQUIRE(br_three_block_bound(1.0 / 6.0, &v) == BR_OK);
    CHECK(std::abs(v - 2.0) < 1e-15);
    REQUIRE(br_crossing_alpha(&v) == BR_OK);
    CHECK(std::abs(v - (52.0 - 16.0 * std::sqrt(3.0)) / 121.0) < 1e-12);
    REQUIRE(br_chernoff_exponent(1.0, &v) == BR_OK);
    CHECK(v == 0.0);
    double d[3];
    REQUIRE(br_claim_discriminants(0.3, d) == BR_OK);
    CHECK(std::abs(d[0]) < 1e-12);

    br_expectations e{};
    REQUIRE(br_construction_expectations(600, 0.5, &e) == BR_OK);
    CHECK(std::abs(e.expected_red_intra - 298.0) < 1e-12);

    br_bound_point p{};
    REQUIRE(br_best_known(0.1, &p) == BR_OK);
    CHECK(std::string(p.regime) == "exact_small");
    CHECK(p.has_mid_ub == 0);

    br_document* csv = nullptr;
    REQUIRE(br_bounds_csv(0.05, 1.0, 10, &csv) == BR_OK);
    CHECK(text(csv).rfind("alpha,random_lb", 0) == 0);
    CHECK(br_bounds_csv(0.5, 0.1, 10, &csv) == BR_ERR_ARGUMENT);
}

TEST_CASE("inequality")
{
    double g = 0.0;
    REQUIRE(br_inequality_gap(1.0 / 9.0, 0.25, &g) == BR_OK);
    CHECK(std::abs(g - 2.0 * std::sqrt(2.0) / 9.0) < 1e-12);
    br_interval_summary s{};
    br_document* report = nullptr;
    REQUIRE(br_certify_no_solution(1.0 / 6.0, 0.25, 1e-6, 80, &s, &report) == BR_OK);
    CHECK(s.certified == 1);
    CHECK(s.unresolved_boxes == 0);
    CHECK(text(report).find("verdict: nonnegative_certified") != std::string::npos);
    CHECK(br_version() != nullptr);
}
