#include "bookramsey/constructions.hpp"

#include "bookramsey/error.hpp"
#include "bookramsey/field.hpp"
#include "bookramsey/rng.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace bookramsey {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string format_double(double value)
{
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, end);
}

void require_probability(double p, const char* name)
{
    require(p >= 0.0 && p <= 1.0, std::string(name) + " must lie in [0, 1]");
}

} // namespace

const char* kind_name(const ConstructionSpec& spec)
{
    return std::visit(overloaded{
                          [](const RandomSpec&) { return "random"; },
                          [](const ThreeBlockSpec&) { return "three_block"; },
                          [](const PaleySpec&) { return "paley"; },
                          [](const BlockSpec&) { return "blocks"; },
                      },
                      spec);
}

bool is_randomized(const ConstructionSpec& spec)
{
    return std::holds_alternative<RandomSpec>(spec) || std::holds_alternative<ThreeBlockSpec>(spec);
}

int vertex_count(const ConstructionSpec& spec)
{
    return std::visit(overloaded{
                          [](const RandomSpec& s) { return s.n_vertices; },
                          [](const ThreeBlockSpec& s) { return s.n_vertices; },
                          [](const PaleySpec& s) { return s.q; },
                          [](const BlockSpec& s) { return s.k * (s.n + s.k - 1); },
                      },
                      spec);
}

ConstructionSpec with_seed(const ConstructionSpec& spec, std::uint64_t seed)
{
    ConstructionSpec out = spec;
    if (auto* r = std::get_if<RandomSpec>(&out))
        r->seed = seed;
    else if (auto* t = std::get_if<ThreeBlockSpec>(&out))
        t->seed = seed;
    return out;
}

void validate(const ConstructionSpec& spec)
{
    std::visit(overloaded{
                   [](const RandomSpec& s) {
                       require(s.n_vertices >= 2, "random coloring needs at least 2 vertices");
                       require(s.n_vertices <= max_construction_vertices, "random coloring exceeds the vertex cap");
                       require_probability(s.blue_probability, "blue probability");
                   },
                   [](const ThreeBlockSpec& s) {
                       require(s.n_vertices >= 3 && s.n_vertices % 3 == 0,
                               "three-block coloring needs a positive vertex count divisible by 3");
                       require(s.n_vertices <= max_construction_vertices, "three-block coloring exceeds the vertex cap");
                       require_probability(s.p, "cross-edge red probability");
                   },
                   [](const PaleySpec& s) {
                       const auto [p, e] = prime_power(s.q);
                       require(p != 0 && s.q % 4 == 1,
                               "Paley order " + std::to_string(s.q) + " must be a prime power congruent to 1 mod 4");
                   },
                   [](const BlockSpec& s) {
                       require(s.k >= 2, "block coloring needs k >= 2");
                       require(s.n >= 1, "block coloring needs n >= 1");
                       require(static_cast<long long>(s.k) * (s.n + s.k - 1) <= max_construction_vertices,
                               "block coloring exceeds the vertex cap");
                   },
               },
               spec);
}

std::string to_record(const ConstructionSpec& spec)
{
    std::ostringstream out;
    out << "kind=" << kind_name(spec);
    std::visit(overloaded{
                   [&](const RandomSpec& s) {
                       out << ";n_vertices=" << s.n_vertices << ";blue_probability=" << format_double(s.blue_probability)
                           << ";seed=" << s.seed;
                   },
                   [&](const ThreeBlockSpec& s) {
                       out << ";n_vertices=" << s.n_vertices << ";p=" << format_double(s.p) << ";seed=" << s.seed;
                   },
                   [&](const PaleySpec& s) { out << ";q=" << s.q; },
                   [&](const BlockSpec& s) { out << ";k=" << s.k << ";n=" << s.n; },
               },
               spec);
    return out.str();
}

ConstructionSpec parse_record(std::string_view record)
{
    std::map<std::string, std::string, std::less<>> fields;
    while (!record.empty()) {
        const auto semicolon = record.find(';');
        const auto item = record.substr(0, semicolon);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw ParseError("spec record item '" + std::string(item) + "' is not key=value");
        if (!fields.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))).second)
            throw ParseError("duplicate key '" + std::string(item.substr(0, eq)) + "' in spec record");
        record = semicolon == std::string_view::npos ? std::string_view{} : record.substr(semicolon + 1);
    }

    auto take = [&](const char* key) {
        auto it = fields.find(key);
        if (it == fields.end())
            throw ParseError(std::string("spec record is missing '") + key + "'");
        std::string value = it->second;
        fields.erase(it);
        return value;
    };
    auto parse_int = [](const std::string& text, const char* key) {
        long long value = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size())
            throw ParseError(std::string("spec record field '") + key + "' is not an integer");
        return value;
    };
    auto parse_seed = [](const std::string& text) {
        std::uint64_t value = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size())
            throw ParseError("spec record seed is not an unsigned 64-bit integer");
        return value;
    };
    auto parse_real = [](const std::string& text, const char* key) {
        double value = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size())
            throw ParseError(std::string("spec record field '") + key + "' is not a decimal number");
        return value;
    };

    const std::string kind = take("kind");
    ConstructionSpec spec;
    if (kind == "random") {
        RandomSpec s;
        s.n_vertices = static_cast<int>(parse_int(take("n_vertices"), "n_vertices"));
        s.blue_probability = parse_real(take("blue_probability"), "blue_probability");
        s.seed = parse_seed(take("seed"));
        spec = s;
    } else if (kind == "three_block") {
        ThreeBlockSpec s;
        s.n_vertices = static_cast<int>(parse_int(take("n_vertices"), "n_vertices"));
        s.p = parse_real(take("p"), "p");
        s.seed = parse_seed(take("seed"));
        spec = s;
    } else if (kind == "paley") {
        spec = PaleySpec{static_cast<int>(parse_int(take("q"), "q"))};
    } else if (kind == "blocks") {
        BlockSpec s;
        s.k = static_cast<int>(parse_int(take("k"), "k"));
        s.n = static_cast<int>(parse_int(take("n"), "n"));
        spec = s;
    } else {
        throw ParseError("unknown construction kind '" + kind + "'");
    }
    if (!fields.empty())
        throw ParseError("unexpected key '" + fields.begin()->first + "' in spec record");
    validate(spec);
    return spec;
}

std::string describe(const ConstructionSpec& spec)
{
    return std::visit(
        overloaded{
            [](const RandomSpec& s) {
                return "random coloring of K_" + std::to_string(s.n_vertices) + ", each edge blue with probability " +
                       format_double(s.blue_probability) + ", seed " + std::to_string(s.seed);
            },
            [](const ThreeBlockSpec& s) {
                return "three red blocks of " + std::to_string(s.n_vertices / 3) +
                       " vertices, cross edges red with probability " + format_double(s.p) + ", seed " +
                       std::to_string(s.seed);
            },
            [](const PaleySpec& s) {
                return "Paley coloring over GF(" + std::to_string(s.q) + "), red = nonzero square differences";
            },
            [](const BlockSpec& s) {
                return std::to_string(s.k) + " blue blocks of " + std::to_string(s.n + s.k - 1) +
                       " vertices, all cross edges red";
            },
        },
        spec);
}

ColoredCompleteGraph random_coloring(int n_vertices, double blue_probability, std::uint64_t seed)
{
    validate(RandomSpec{n_vertices, blue_probability, seed});
    ColoredCompleteGraph g(n_vertices);
    const auto n = static_cast<std::uint64_t>(n_vertices);
    for (Vertex u = 0; u < n_vertices; ++u)
        for (Vertex v = u + 1; v < n_vertices; ++v)
            if (!(rng::uniform(seed, rng::pair_index(n, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v))) <
                  blue_probability))
                g.set_color(u, v, Color::red);
    return g;
}

ColoredCompleteGraph three_block(int n_vertices, double p, std::uint64_t seed)
{
    validate(ThreeBlockSpec{n_vertices, p, seed});
    ColoredCompleteGraph g(n_vertices);
    const int block = n_vertices / 3;
    const auto n = static_cast<std::uint64_t>(n_vertices);
    for (Vertex u = 0; u < n_vertices; ++u) {
        for (Vertex v = u + 1; v < n_vertices; ++v) {
            const bool same_block = u / block == v / block;
            if (same_block ||
                rng::uniform(seed, rng::pair_index(n, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v))) <
                    p)
                g.set_color(u, v, Color::red);
        }
    }
    return g;
}

ColoredCompleteGraph paley(int q)
{
    validate(PaleySpec{q});
    const FieldTable field = FieldTable::build(q);
    ColoredCompleteGraph g(q);
    for (Vertex u = 0; u < q; ++u)
        for (Vertex v = u + 1; v < q; ++v)
            if (field.is_square(field.sub(u, v)))
                g.set_color(u, v, Color::red);
    return g;
}

ColoredCompleteGraph block_coloring(int k, int n)
{
    validate(BlockSpec{k, n});
    const int block = n + k - 1;
    ColoredCompleteGraph g(k * block);
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (u / block != v / block)
                g.set_color(u, v, Color::red);
    return g;
}

ColoredCompleteGraph build(const ConstructionSpec& spec)
{
    return std::visit(overloaded{
                          [](const RandomSpec& s) { return random_coloring(s.n_vertices, s.blue_probability, s.seed); },
                          [](const ThreeBlockSpec& s) { return three_block(s.n_vertices, s.p, s.seed); },
                          [](const PaleySpec& s) { return paley(s.q); },
                          [](const BlockSpec& s) { return block_coloring(s.k, s.n); },
                      },
                      spec);
}

} // namespace bookramsey
