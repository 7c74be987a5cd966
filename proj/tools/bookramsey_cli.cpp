// Command-line front end. Talks to the library only through the C interface.
//
// Exit codes: 0 success, 1 usage error, 2 verification failed, 3 inconclusive.

#include "bookramsey/bookramsey.h"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_verification_failed = 2;
constexpr int exit_inconclusive = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DocumentDeleter {
    void operator()(br_document* d) const { br_document_free(d); }
};
using Document = std::unique_ptr<br_document, DocumentDeleter>;

struct GraphDeleter {
    void operator()(br_graph* g) const { br_graph_free(g); }
};
using Graph = std::unique_ptr<br_graph, GraphDeleter>;

// Argument and parse failures from the library are usage errors at this level.
void check(br_status status)
{
    if (status == BR_OK)
        return;
    if (status == BR_ERR_INTERNAL)
        throw std::runtime_error(br_last_error());
    throw UsageError(br_last_error());
}

std::string text_of(const Document& doc)
{
    return std::string(br_document_text(doc.get()), br_document_size(doc.get()));
}

std::string real(double value)
{
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

double alpha_value(const std::string& text)
{
    double value = 0.0;
    check(br_parse_alpha(text.c_str(), &value));
    return value;
}

// Effective configuration of one run, echoed as '#' header lines.
struct RunConfig {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> settings;
    std::string out_path;
    bool no_timestamp = false;

    void set(std::string key, std::string value) { settings.emplace_back(std::move(key), std::move(value)); }

    std::string header() const
    {
        std::ostringstream out;
        out << "# bookramsey " << br_version() << ' ' << subcommand << '\n';
        for (const auto& [key, value] : settings)
            out << "# " << key << ": " << value << '\n';
        if (!no_timestamp) {
            const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm utc{};
            gmtime_r(&now, &utc);
            char stamp[32];
            std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
            out << "# timestamp: " << stamp << '\n';
        }
        return out.str();
    }
};

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    file << text;
    if (!file)
        throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::string describe_book(const char* color, int pages, int has_base, const int* base)
{
    std::ostringstream out;
    out << color << " book with " << pages << " pages";
    if (has_base && base)
        out << " on base {" << base[0] << "," << base[1] << "}";
    if (!has_base)
        out << " (no base)";
    return out.str();
}

// ---- bounds ---------------------------------------------------------------

struct BoundsOptions {
    std::string alpha_min = "0.05";
    std::string alpha_max = "1";
    int steps = 100;
    std::string format = "csv";
};

int run_bounds(const BoundsOptions& o, RunConfig cfg)
{
    const double lo = alpha_value(o.alpha_min);
    const double hi = alpha_value(o.alpha_max);
    cfg.set("alpha-min", o.alpha_min + " (" + real(lo) + ")");
    cfg.set("alpha-max", o.alpha_max + " (" + real(hi) + ")");
    cfg.set("steps", std::to_string(o.steps));
    cfg.set("format", o.format);

    br_document* raw = nullptr;
    check(br_bounds_csv(lo, hi, o.steps, &raw));
    Document csv(raw);
    std::string body = text_of(csv);
    if (o.format == "text") {
        // key=value per row, same columns as the CSV.
        std::istringstream lines(body);
        std::string header_line;
        std::getline(lines, header_line);
        std::vector<std::string> columns;
        std::stringstream hs(header_line);
        for (std::string col; std::getline(hs, col, ',');)
            columns.push_back(col);
        std::ostringstream out;
        for (std::string line; std::getline(lines, line);) {
            std::stringstream ls(line);
            out << "row:";
            std::size_t i = 0;
            for (std::string cell; std::getline(ls, cell, ','); ++i)
                out << ' ' << columns[i] << '=' << (cell.empty() ? "undefined" : cell);
            out << '\n';
        }
        body = out.str();
    }
    write_output(cfg.out_path, cfg.header() + body);
    return exit_ok;
}

// ---- certify / verify -------------------------------------------------------

struct CertifyOptions {
    std::string kind;
    int q = 0;
    int k = 2;
    int block_n = 0;
    int vertices = 0;
    double probability = 0.5;
    std::uint64_t seed = 1;
    int m = 1;
    int n = 1;
};

std::string certify_record(const CertifyOptions& o)
{
    if (o.kind == "paley")
        return "kind=paley;q=" + std::to_string(o.q);
    if (o.kind == "blocks")
        return "kind=blocks;k=" + std::to_string(o.k) + ";n=" + std::to_string(o.block_n);
    if (o.kind == "random")
        return "kind=random;n_vertices=" + std::to_string(o.vertices) + ";blue_probability=" + real(o.probability) +
               ";seed=" + std::to_string(o.seed);
    return "kind=three_block;n_vertices=" + std::to_string(o.vertices) + ";p=" + real(o.probability) +
           ";seed=" + std::to_string(o.seed);
}

int report_check(const br_target_result& result, int m, int n, int n_vertices, const std::string& certificate_text,
                 RunConfig& cfg)
{
    if (!result.certified) {
        const bool red = result.violation_color == BR_RED;
        std::cerr << "verification failed: "
                  << describe_book(red ? "red" : "blue", red ? result.red_pages : result.blue_pages, 1,
                                   result.violation_base)
                  << " meets target " << (red ? m : n) << '\n';
        return exit_verification_failed;
    }
    const std::string statement =
        "r(B_" + std::to_string(m) + ",B_" + std::to_string(n) + ") >= " + std::to_string(n_vertices + 1);
    write_output(cfg.out_path, cfg.header() + certificate_text);
    if (!cfg.out_path.empty() && cfg.out_path != "-")
        std::cout << statement << '\n';
    return exit_ok;
}

int run_certify(const CertifyOptions& o, RunConfig cfg)
{
    const std::string record = certify_record(o);
    cfg.subcommand += " " + o.kind;
    cfg.set("spec", record);
    cfg.set("m", std::to_string(o.m));
    cfg.set("n", std::to_string(o.n));

    br_graph* raw = nullptr;
    check(br_graph_construct(record.c_str(), &raw));
    Graph graph(raw);
    int n_vertices = 0;
    check(br_graph_vertex_count(graph.get(), &n_vertices));

    br_target_result result{};
    br_document* cert_raw = nullptr;
    check(br_verify_target(graph.get(), o.m, o.n, record.c_str(), &result, &cert_raw));
    Document cert(cert_raw);
    return report_check(result, o.m, o.n, n_vertices, cert ? text_of(cert) : std::string(), cfg);
}

int run_verify(const std::string& path, RunConfig cfg)
{
    const std::string text = read_file(path);
    br_target_result result{};
    int matches = 0;
    check(br_reverify_certificate(text.c_str(), &result, &matches));
    cfg.set("certificate", path);
    std::ostringstream out;
    out << "certified: " << (result.certified ? "yes" : "no") << '\n'
        << "red-pages: " << result.red_pages << (result.red_has_base ? "" : " no-base") << '\n'
        << "blue-pages: " << result.blue_pages << (result.blue_has_base ? "" : " no-base") << '\n'
        << "matches-record: " << (matches ? "yes" : "no") << '\n';
    write_output(cfg.out_path, cfg.header() + out.str());
    return result.certified && matches ? exit_ok : exit_verification_failed;
}

// ---- Monte Carlo -------------------------------------------------------------

struct McOptions {
    std::string kind;
    std::string alpha = "1";
    int book_n = 0;
    double eta = 0.1;
    int trials = 20;
    std::uint64_t seed = 1;
    unsigned workers = 0;
    std::string certificate_path;
};

int run_mc(const McOptions& o, RunConfig cfg)
{
    if (o.trials < 1)
        throw UsageError("--trials must be at least 1");
    if (o.book_n < 1)
        throw UsageError("--book-n must be at least 1");
    const double alpha = alpha_value(o.alpha);
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw UsageError("--alpha must lie in (0, 1]");

    // Red avoids B_{book-n}, blue avoids B_{round(alpha book-n)}.
    const int m = o.book_n;
    const int n = static_cast<int>(std::floor(alpha * o.book_n + 0.5));
    if (n < 1)
        throw UsageError("alpha * book-n rounds to 0 pages");

    std::string record;
    int n_vertices = 0;
    double probability = 0.0;
    if (o.kind == "three-block") {
        double bound = 0.0;
        check(br_p_star(alpha, &probability));
        check(br_three_block_bound(alpha, &bound));
        n_vertices = 3 * static_cast<int>(std::floor((bound - o.eta) * o.book_n / 3.0));
        record = "kind=three_block;n_vertices=" + std::to_string(n_vertices) + ";p=" + real(probability) +
                 ";seed=" + std::to_string(o.seed);
    } else {
        double bound = 0.0;
        check(br_random_bound(alpha, 2, &bound));
        // Red edges with probability 1 / (sqrt(alpha) + 1) so the red book is the long one.
        probability = std::sqrt(alpha) / (std::sqrt(alpha) + 1.0);
        n_vertices = static_cast<int>(std::floor((bound - o.eta) * o.book_n));
        record = "kind=random;n_vertices=" + std::to_string(n_vertices) + ";blue_probability=" + real(probability) +
                 ";seed=" + std::to_string(o.seed);
    }
    cfg.subcommand += " " + o.kind;
    cfg.set("alpha", o.alpha + " (" + real(alpha) + ")");
    cfg.set("book-n", std::to_string(o.book_n));
    cfg.set("eta", real(o.eta));
    cfg.set("n-vertices", std::to_string(n_vertices));
    cfg.set(o.kind == "three-block" ? "p" : "blue-probability", real(probability));
    cfg.set("target-m", std::to_string(m));
    cfg.set("target-n", std::to_string(n) + " (round-half-up of alpha * book-n)");
    cfg.set("trials", std::to_string(o.trials));
    cfg.set("seed", std::to_string(o.seed));

    br_mc_summary summary{};
    br_document* report_raw = nullptr;
    br_document* cert_raw = nullptr;
    check(br_mc_certify(record.c_str(), m, n, o.trials, o.seed, o.workers, &summary, &report_raw, &cert_raw));
    Document report(report_raw);
    Document cert(cert_raw);
    write_output(cfg.out_path, cfg.header() + text_of(report));
    if (!o.certificate_path.empty() && cert)
        write_output(o.certificate_path, cfg.header() + text_of(cert));
    return summary.successes > 0 ? exit_ok : exit_inconclusive;
}

// ---- search / exhaustive / inequality -----------------------------------------

int run_search(const br_anneal_params& params, const std::string& certificate_path, RunConfig cfg)
{
    cfg.set("vertices", std::to_string(params.n_vertices));
    cfg.set("m", std::to_string(params.m));
    cfg.set("n", std::to_string(params.n));
    cfg.set("seed", std::to_string(params.seed));
    br_anneal_summary summary{};
    br_document* report_raw = nullptr;
    br_document* cert_raw = nullptr;
    check(br_anneal(&params, &summary, &report_raw, &cert_raw));
    Document report(report_raw);
    Document cert(cert_raw);
    write_output(cfg.out_path, cfg.header() + text_of(report));
    if (!certificate_path.empty() && cert)
        write_output(certificate_path, cfg.header() + text_of(cert));
    return summary.best_cost == 0.0 ? exit_ok : exit_inconclusive;
}

int run_exhaustive(int vertices, int m, int n, RunConfig cfg)
{
    cfg.set("vertices", std::to_string(vertices));
    cfg.set("m", std::to_string(m));
    cfg.set("n", std::to_string(n));
    br_exhaustive_summary summary{};
    br_document* raw = nullptr;
    check(br_exhaustive(vertices, m, n, &summary, &raw));
    Document report(raw);
    write_output(cfg.out_path, cfg.header() + text_of(report));
    return exit_ok;
}

int run_inequality(const std::string& alpha_min, const std::string& alpha_max, double tolerance, int max_depth,
                   RunConfig cfg)
{
    const double lo = alpha_value(alpha_min);
    const double hi = alpha_value(alpha_max);
    cfg.set("alpha-min", alpha_min + " (" + real(lo) + ")");
    cfg.set("alpha-max", alpha_max + " (" + real(hi) + ")");
    cfg.set("tol", real(tolerance));
    cfg.set("max-depth", std::to_string(max_depth));
    br_interval_summary summary{};
    br_document* raw = nullptr;
    check(br_certify_no_solution(lo, hi, tolerance, max_depth, &summary, &raw));
    Document report(raw);
    write_output(cfg.out_path, cfg.header() + text_of(report));
    return summary.certified ? exit_ok : exit_inconclusive;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Book Ramsey numbers: constructions, certificates, bound curves and inequality certification"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("-o,--out", cfg.out_path, "Write the main output here instead of standard output");
    app.add_flag("--no-timestamp", cfg.no_timestamp, "Leave the timestamp out of the output header");

    std::optional<int> code;
    auto run = [&](auto&& fn) { return [&, fn] { code = fn(); }; };

    // bounds
    BoundsOptions bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate the bound curves over an alpha range");
    bounds_cmd->add_option("--alpha-min", bounds.alpha_min, "Smallest alpha (decimal or a/b)");
    bounds_cmd->add_option("--alpha-max", bounds.alpha_max, "Largest alpha (decimal or a/b)");
    bounds_cmd->add_option("--steps", bounds.steps, "Number of rows (>= 2)");
    bounds_cmd->add_option("--format", bounds.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
    bounds_cmd->callback(run([&] {
        cfg.subcommand = "bounds";
        return run_bounds(bounds, cfg);
    }));

    // certify <construction>
    CertifyOptions certify;
    auto* certify_cmd = app.add_subcommand("certify", "Build a construction and certify r(B_m,B_n) > N");
    certify_cmd->require_subcommand(1);
    auto add_targets = [&](CLI::App* cmd, bool n_required) {
        cmd->add_option("--m", certify.m, "Red book target (no red B_m)");
        auto* opt = cmd->add_option("--n", certify.n, "Blue book target (no blue B_n)");
        if (n_required)
            opt->required();
    };
    auto* paley_cmd = certify_cmd->add_subcommand("paley", "Paley coloring over GF(q)");
    paley_cmd->add_option("--q", certify.q, "Prime power q = 1 mod 4")->required();
    add_targets(paley_cmd, true);
    paley_cmd->callback(run([&] {
        certify.kind = "paley";
        cfg.subcommand = "certify";
        return run_certify(certify, cfg);
    }));

    auto* blocks_cmd = certify_cmd->add_subcommand("blocks", "k blue blocks of size n+k-1, red between blocks");
    blocks_cmd->add_option("--k", certify.k, "Number of blocks (>= 2)");
    blocks_cmd->add_option("--n", certify.block_n, "Block parameter n; also the blue target")->required();
    blocks_cmd->add_option("--m", certify.m, "Red book target");
    blocks_cmd->callback(run([&] {
        certify.kind = "blocks";
        certify.n = certify.block_n;
        cfg.subcommand = "certify";
        return run_certify(certify, cfg);
    }));

    auto* random_cmd = certify_cmd->add_subcommand("random", "Independent random coloring");
    random_cmd->add_option("--vertices", certify.vertices, "Number of vertices")->required();
    random_cmd->add_option("--blue-probability", certify.probability, "Probability that an edge is blue");
    random_cmd->add_option("--seed", certify.seed, "Seed");
    add_targets(random_cmd, true);
    random_cmd->callback(run([&] {
        certify.kind = "random";
        cfg.subcommand = "certify";
        return run_certify(certify, cfg);
    }));

    auto* three_cmd = certify_cmd->add_subcommand("three-block", "Three red blocks, random cross edges");
    three_cmd->add_option("--vertices", certify.vertices, "Number of vertices (multiple of 3)")->required();
    three_cmd->add_option("--p", certify.probability, "Cross-edge red probability");
    three_cmd->add_option("--seed", certify.seed, "Seed");
    add_targets(three_cmd, true);
    three_cmd->callback(run([&] {
        certify.kind = "three-block";
        cfg.subcommand = "certify";
        return run_certify(certify, cfg);
    }));

    // verify <certificate>
    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "Re-measure a certificate file");
    verify_cmd->add_option("certificate", verify_path, "Certificate file")->required();
    verify_cmd->callback(run([&] {
        cfg.subcommand = "verify";
        return run_verify(verify_path, cfg);
    }));

    // mc <construction>
    McOptions mc;
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo certification of a randomized construction");
    mc_cmd->require_subcommand(1);
    for (const char* kind : {"three-block", "random"}) {
        auto* cmd = mc_cmd->add_subcommand(kind, std::string("Scaled ") + kind + " construction");
        cmd->add_option("--alpha", mc.alpha, "Book ratio alpha (decimal or a/b)")->required();
        cmd->add_option("--book-n", mc.book_n, "Red book target n; blue target is round(alpha n)")->required();
        cmd->add_option("--eta", mc.eta, "Slack: N = (leading constant - eta) n");
        cmd->add_option("--trials", mc.trials, "Number of trials (>= 1)");
        cmd->add_option("--seed", mc.seed, "Base seed");
        cmd->add_option("--workers", mc.workers, "Worker threads (0 = all cores)");
        cmd->add_option("--certificate", mc.certificate_path, "Write the first successful certificate here");
        cmd->callback(run([&, kind] {
            mc.kind = kind;
            cfg.subcommand = "mc";
            return run_mc(mc, cfg);
        }));
    }

    // search
    br_anneal_params anneal{};
    br_anneal_defaults(&anneal);
    std::string search_certificate;
    auto* search_cmd = app.add_subcommand("search", "Simulated annealing for a book-avoiding coloring");
    search_cmd->add_option("--vertices", anneal.n_vertices, "Number of vertices (>= 4)")->required();
    search_cmd->add_option("--m", anneal.m, "Red book target")->required();
    search_cmd->add_option("--n", anneal.n, "Blue book target")->required();
    search_cmd->add_option("--seed", anneal.seed, "Seed");
    search_cmd->add_option("--weight-red", anneal.weight_red, "Red excess weight (default 1/m)");
    search_cmd->add_option("--weight-blue", anneal.weight_blue, "Blue excess weight (default 1/n)");
    search_cmd->add_option("--initial-temperature", anneal.initial_temperature, "Starting temperature");
    search_cmd->add_option("--cooling", anneal.cooling_factor, "Cooling factor in (0, 1)");
    search_cmd->add_option("--steps", anneal.steps_per_temperature, "Proposals per temperature (0 = 10 per pair)");
    search_cmd->add_option("--floor-temperature", anneal.floor_temperature, "Stop below this temperature");
    search_cmd->add_option("--certificate", search_certificate, "Write a certificate here for a cost-0 witness");
    search_cmd->callback(run([&] {
        cfg.subcommand = "search";
        return run_search(anneal, search_certificate, cfg);
    }));

    // exhaustive
    int ex_vertices = 0;
    int ex_m = 1;
    int ex_n = 1;
    auto* exhaustive_cmd = app.add_subcommand("exhaustive", "Decide r(B_m,B_n) > N exactly for N <= 8");
    exhaustive_cmd->add_option("--vertices", ex_vertices, "Number of vertices (<= 8)")->required();
    exhaustive_cmd->add_option("--m", ex_m, "Red book target")->required();
    exhaustive_cmd->add_option("--n", ex_n, "Blue book target")->required();
    exhaustive_cmd->callback(run([&] {
        cfg.subcommand = "exhaustive";
        return run_exhaustive(ex_vertices, ex_m, ex_n, cfg);
    }));

    // inequality
    std::string in_alpha_min = "1/6";
    std::string in_alpha_max = "1/4";
    double tolerance = 1e-6;
    int max_depth = 80;
    auto* inequality_cmd = app.add_subcommand("inequality", "Certify the mid-range inequality by interval bisection");
    inequality_cmd->add_option("--alpha-min", in_alpha_min, "Lower alpha (decimal or a/b)");
    inequality_cmd->add_option("--alpha-max", in_alpha_max, "Upper alpha (decimal or a/b)");
    inequality_cmd->add_option("--tol", tolerance, "Box width at which bisection stops");
    inequality_cmd->add_option("--max-depth", max_depth, "Bisection depth limit");
    inequality_cmd->callback(run([&] {
        cfg.subcommand = "inequality";
        return run_inequality(in_alpha_min, in_alpha_max, tolerance, max_depth, cfg);
    }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? exit_ok : exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return code.value_or(exit_usage);
}
