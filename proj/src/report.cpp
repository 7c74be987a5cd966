#include "bookramsey/report.hpp"

#include "bookramsey/error.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

namespace bookramsey {

namespace {

std::string format_interval(Interval i)
{
    return "[" + format_real(i.lo()) + ", " + format_real(i.hi()) + "]";
}

std::string format_pages(int pages, bool has_base)
{
    return has_base ? std::to_string(pages) : std::to_string(pages) + " no-base";
}

std::vector<std::string_view> body_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto newline = text.find('\n');
        auto line = text.substr(0, newline);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty() && line.front() != '#')
            lines.push_back(line);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    }
    return lines;
}

std::string_view expect_field(std::string_view line, std::string_view key)
{
    if (line.size() < key.size() + 2 || line.substr(0, key.size()) != key || line.substr(key.size(), 2) != ": ")
        throw ParseError("certificate line '" + std::string(line) + "' should start with '" + std::string(key) + ": '");
    return line.substr(key.size() + 2);
}

int parse_int(std::string_view text, std::string_view what)
{
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        throw ParseError("certificate field " + std::string(what) + " is not an integer: '" + std::string(text) + "'");
    return value;
}

void parse_pages(std::string_view text, int& pages, bool& has_base, std::string_view what)
{
    constexpr std::string_view marker = " no-base";
    has_base = true;
    if (text.size() > marker.size() && text.substr(text.size() - marker.size()) == marker) {
        has_base = false;
        text.remove_suffix(marker.size());
    }
    pages = parse_int(text, what);
}

} // namespace

std::string format_real(double value)
{
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, end);
}

std::string format_certificate(const LowerBoundCertificate& cert)
{
    std::ostringstream out;
    out << "format-version: " << certificate_format_version << '\n'
        << "spec: " << cert.spec_record << '\n'
        << "n-vertices: " << cert.n_vertices << '\n'
        << "witness-hex: " << cert.witness << '\n'
        << "red-pages: " << format_pages(cert.red_pages, cert.red_has_base) << '\n'
        << "blue-pages: " << format_pages(cert.blue_pages, cert.blue_has_base) << '\n'
        << "statement: " << cert.statement() << '\n';
    return out.str();
}

LowerBoundCertificate parse_certificate(std::string_view text)
{
    const auto lines = body_lines(text);
    if (lines.size() != 7)
        throw ParseError("certificate needs exactly 7 fields, found " + std::to_string(lines.size()));

    const int version = parse_int(expect_field(lines[0], "format-version"), "format-version");
    if (version != certificate_format_version)
        throw ParseError("unsupported certificate format version " + std::to_string(version));

    LowerBoundCertificate cert;
    cert.spec_record = std::string(expect_field(lines[1], "spec"));
    cert.n_vertices = parse_int(expect_field(lines[2], "n-vertices"), "n-vertices");
    cert.witness = std::string(expect_field(lines[3], "witness-hex"));
    parse_pages(expect_field(lines[4], "red-pages"), cert.red_pages, cert.red_has_base, "red-pages");
    parse_pages(expect_field(lines[5], "blue-pages"), cert.blue_pages, cert.blue_has_base, "blue-pages");

    const std::string statement(expect_field(lines[6], "statement"));
    int m = 0;
    int n = 0;
    int bound = 0;
    char tail = 0;
    if (std::sscanf(statement.c_str(), "r(B_%d,B_%d) >= %d%c", &m, &n, &bound, &tail) != 3)
        throw ParseError("certificate statement '" + statement + "' is not 'r(B_m,B_n) >= N+1'");
    cert.target_m = m;
    cert.target_n = n;
    if (bound != cert.n_vertices + 1)
        throw ParseError("certificate statement bound disagrees with n-vertices");
    if (cert.statement() != statement)
        throw ParseError("certificate statement '" + statement + "' is not in canonical form");
    return cert;
}

std::string format_book(const BookMeasurement& book)
{
    std::ostringstream out;
    out << color_name(book.color) << " book: pages " << book.pages << ", base ";
    if (!book.has_base()) {
        out << "none (no-base)";
    } else {
        out << '{';
        for (std::size_t i = 0; i < book.base.size(); ++i)
            out << (i ? "," : "") << book.base[i];
        out << '}';
    }
    return out.str();
}

std::string format_mc_report(const MonteCarloReport& report)
{
    std::ostringstream out;
    out << "spec: " << to_record(report.spec) << '\n'
        << "description: " << describe(report.spec) << '\n'
        << "target-m: " << report.m << '\n'
        << "target-n: " << report.n << '\n'
        << "trials: " << report.trials << '\n'
        << "base-seed: " << report.base_seed << '\n'
        << "successes: " << report.successes << '\n'
        << "success-rate: " << format_real(report.success_rate()) << '\n';
    for (std::size_t i = 0; i < report.per_trial.size(); ++i) {
        const TrialResult& t = report.per_trial[i];
        out << "trial: " << i << " seed=" << t.seed << " red-pages=" << t.red_pages << " blue-pages=" << t.blue_pages
            << " success=" << (t.success ? "yes" : "no") << '\n';
    }
    if (report.certificate)
        out << "certificate-spec: " << report.certificate->spec_record << '\n'
            << "certificate-statement: " << report.certificate->statement() << '\n';
    else
        out << "certificate-statement: none\n";
    return out.str();
}

std::string format_search_outcome(const SearchOutcome& outcome)
{
    const AnnealParams& p = outcome.params;
    std::ostringstream out;
    out << "n-vertices: " << p.n_vertices << '\n'
        << "target-m: " << p.m << '\n'
        << "target-n: " << p.n << '\n'
        << "weight-red: " << format_real(p.weight_red > 0 ? p.weight_red : 1.0 / p.m) << '\n'
        << "weight-blue: " << format_real(p.weight_blue > 0 ? p.weight_blue : 1.0 / p.n) << '\n'
        << "initial-temperature: " << format_real(p.schedule.initial_temperature) << '\n'
        << "cooling-factor: " << format_real(p.schedule.cooling_factor) << '\n'
        << "steps-per-temperature: " << p.schedule.steps_per_temperature << '\n'
        << "floor-temperature: " << format_real(p.schedule.floor_temperature) << '\n'
        << "seed: " << p.seed << '\n'
        << "proposals: " << outcome.proposals << '\n'
        << "best-cost: " << format_real(outcome.best_cost) << '\n'
        << "red-pages: " << outcome.red_pages << '\n'
        << "blue-pages: " << outcome.blue_pages << '\n'
        << "witness-hex: " << encode_witness(outcome.best) << '\n'
        << "trace:";
    for (double cost : outcome.trace)
        out << ' ' << format_real(cost);
    out << '\n';
    return out.str();
}

std::string format_exhaustive(const ExhaustiveVerdict& verdict)
{
    std::ostringstream out;
    out << "n-vertices: " << verdict.n_vertices << '\n'
        << "target-m: " << verdict.m << '\n'
        << "target-n: " << verdict.n << '\n'
        << "verdict: "
        << (verdict.verdict == ExhaustiveResult::witness_found ? "witness_found" : "all_colorings_contain_target")
        << '\n'
        << "colorings-examined: " << verdict.colorings_examined << '\n'
        << "nodes-visited: " << verdict.nodes_visited << '\n'
        << "witness-hex: " << (verdict.witness ? encode_witness(*verdict.witness) : std::string("none")) << '\n';
    return out.str();
}

std::string format_interval_certificate(const IntervalCertificate& cert)
{
    std::ostringstream out;
    out << "function: " << cert.function << '\n'
        << "lambda-range: " << format_interval({cert.lambda_lo, cert.lambda_hi}) << '\n'
        << "alpha-range: " << format_interval({cert.alpha_lo, cert.alpha_hi}) << '\n'
        << "tolerance: " << format_real(cert.tolerance) << '\n'
        << "max-depth: " << cert.max_depth << '\n'
        << "verdict: " << verdict_name(cert.verdict) << '\n'
        << "minimum-enclosure: " << format_interval(cert.minimum) << '\n'
        << "boxes-processed: " << cert.boxes_processed << '\n'
        << "leaves-positive: " << cert.leaves_positive << '\n'
        << "leaves-infeasible: " << cert.leaves_infeasible << '\n'
        << "deepest-split: " << cert.deepest << '\n'
        << "touching-boxes: " << cert.touching.size() << '\n';
    for (const TouchingBox& t : cert.touching)
        out << "touching: lambda=" << format_interval(t.box.lambda) << " alpha=" << format_interval(t.box.alpha)
            << " g=" << format_interval(t.gap) << '\n';
    out << "unresolved-boxes: " << cert.unresolved.size() << '\n';
    for (const TouchingBox& t : cert.unresolved)
        out << "unresolved: lambda=" << format_interval(t.box.lambda) << " alpha=" << format_interval(t.box.alpha)
            << " g=" << format_interval(t.gap) << '\n';
    return out.str();
}

std::string bounds_csv(double alpha_min, double alpha_max, int steps)
{
    require(alpha_min > 0.0 && alpha_min < alpha_max && alpha_max <= 1.0,
            "alpha range must satisfy 0 < alpha_min < alpha_max <= 1");
    require(steps >= 2, "bounds table needs at least 2 rows");
    std::ostringstream out;
    out << "alpha,random_lb,mid_ub,three_block_lb,best_lower,best_upper,regime\n";
    auto optional_cell = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
    for (int i = 0; i < steps; ++i) {
        const double alpha =
            i == steps - 1 ? alpha_max : alpha_min + (alpha_max - alpha_min) * i / static_cast<double>(steps - 1);
        const BoundPoint p = best_known(alpha);
        out << format_real(p.alpha) << ',' << format_real(p.random_lb) << ',' << optional_cell(p.mid_ub) << ','
            << optional_cell(p.three_block_lb) << ',' << format_real(p.best_lower) << ',' << format_real(p.best_upper)
            << ',' << regime_name(p.regime) << '\n';
    }
    return out.str();
}

} // namespace bookramsey
