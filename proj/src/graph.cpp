#include "bookramsey/graph.hpp"

#include "bookramsey/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace bookramsey {

namespace {

using Word = ColoredCompleteGraph::Word;

constexpr std::size_t word_index(Vertex v) { return static_cast<std::size_t>(v) / ColoredCompleteGraph::word_bits; }
constexpr Word bit_mask(Vertex v) { return Word{1} << (static_cast<unsigned>(v) % ColoredCompleteGraph::word_bits); }

int popcount_and(std::span<const Word> a, std::span<const Word> b)
{
    int total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += std::popcount(a[i] & b[i]);
    return total;
}

template <typename Fn>
void for_each_bit(std::span<const Word> bits, Fn&& fn)
{
    for (std::size_t w = 0; w < bits.size(); ++w) {
        Word word = bits[w];
        while (word != 0) {
            const int offset = std::countr_zero(word);
            fn(static_cast<Vertex>(w * ColoredCompleteGraph::word_bits + static_cast<std::size_t>(offset)));
            word &= word - 1;
        }
    }
}

} // namespace

const char* color_name(Color c) noexcept
{
    return c == Color::red ? "red" : "blue";
}

ColoredCompleteGraph::ColoredCompleteGraph(int n_vertices)
    : n_(n_vertices), words_(0)
{
    require(n_vertices >= 1, "graph needs at least one vertex");
    words_ = (static_cast<std::size_t>(n_) + word_bits - 1) / word_bits;
    red_.assign(words_ * static_cast<std::size_t>(n_), 0);
    blue_.assign(words_ * static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) {
        Word* row = row_ptr(blue_, v);
        for (Vertex w = 0; w < n_; ++w)
            if (w != v)
                row[word_index(w)] |= bit_mask(w);
    }
}

ColoredCompleteGraph ColoredCompleteGraph::from_red_relation(int n_vertices, std::span<const VertexPair> red_pairs)
{
    ColoredCompleteGraph g(n_vertices);
    for (const auto& [u, v] : red_pairs) {
        if (u == v)
            throw ArgumentError("red relation contains a loop at vertex " + std::to_string(u));
        g.set_color(u, v, Color::red);
    }
    return g;
}

void ColoredCompleteGraph::check_pair(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw ArgumentError("vertex out of range [0, " + std::to_string(n_) + ")");
    if (u == v)
        throw ArgumentError("pair (" + std::to_string(u) + ", " + std::to_string(v) + ") is a loop");
}

bool ColoredCompleteGraph::is_red(Vertex u, Vertex v) const
{
    check_pair(u, v);
    return (red_[static_cast<std::size_t>(u) * words_ + word_index(v)] & bit_mask(v)) != 0;
}

void ColoredCompleteGraph::set_color(Vertex u, Vertex v, Color c)
{
    check_pair(u, v);
    auto assign = [&](Vertex a, Vertex b) {
        Word& red_word = row_ptr(red_, a)[word_index(b)];
        Word& blue_word = row_ptr(blue_, a)[word_index(b)];
        if (c == Color::red) {
            red_word |= bit_mask(b);
            blue_word &= ~bit_mask(b);
        } else {
            red_word &= ~bit_mask(b);
            blue_word |= bit_mask(b);
        }
    };
    assign(u, v);
    assign(v, u);
}

void ColoredCompleteGraph::flip(Vertex u, Vertex v)
{
    set_color(u, v, opposite(color(u, v)));
}

std::span<const Word> ColoredCompleteGraph::row(Vertex v, Color c) const
{
    if (v < 0 || v >= n_)
        throw ArgumentError("vertex out of range [0, " + std::to_string(n_) + ")");
    const auto& rows = c == Color::red ? red_ : blue_;
    return {rows.data() + static_cast<std::size_t>(v) * words_, words_};
}

int ColoredCompleteGraph::degree(Vertex v, Color c) const
{
    int total = 0;
    for (Word w : row(v, c))
        total += std::popcount(w);
    return total;
}

std::size_t ColoredCompleteGraph::edge_count(Color c) const
{
    std::size_t twice = 0;
    for (Vertex v = 0; v < n_; ++v)
        twice += static_cast<std::size_t>(degree(v, c));
    return twice / 2;
}

ColoredCompleteGraph ColoredCompleteGraph::swapped() const
{
    ColoredCompleteGraph out = *this;
    std::swap(out.red_, out.blue_);
    return out;
}

int codegree(const ColoredCompleteGraph& g, Vertex u, Vertex v, Color c)
{
    if (u == v)
        throw ArgumentError("codegree needs two distinct vertices");
    return popcount_and(g.row(u, c), g.row(v, c));
}

BookMeasurement book_size(const ColoredCompleteGraph& g, Color c)
{
    BookMeasurement best;
    best.color = c;
    best.k = 2;
    for (Vertex u = 0; u < g.size(); ++u) {
        const auto row_u = g.row(u, c);
        for_each_bit(row_u, [&](Vertex v) {
            if (v <= u)
                return;
            const int pages = popcount_and(row_u, g.row(v, c));
            if (!best.has_base() || pages > best.pages) {
                best.base = {u, v};
                best.pages = pages;
            }
        });
    }
    return best;
}

namespace {

// Depth-first enumeration of same-color cliques in increasing vertex order.
// `common` holds the joint neighbourhood of the current partial base.
struct CliqueBookSearch {
    const ColoredCompleteGraph& g;
    Color color;
    int k;
    std::vector<Vertex> base;
    std::vector<std::vector<Word>> common_by_depth;
    BookMeasurement best;

    void extend(int depth)
    {
        const auto& common = common_by_depth[static_cast<std::size_t>(depth)];
        if (depth == k) {
            int pages = 0;
            for (Word w : common)
                pages += std::popcount(w);
            if (!best.has_base() || pages > best.pages) {
                best.base = base;
                best.pages = pages;
            }
            return;
        }
        const Vertex last = base.empty() ? -1 : base.back();
        for_each_bit(common, [&](Vertex v) {
            if (v <= last)
                return;
            auto& next = common_by_depth[static_cast<std::size_t>(depth) + 1];
            const auto row = g.row(v, color);
            for (std::size_t i = 0; i < next.size(); ++i)
                next[i] = common[i] & row[i];
            base.push_back(v);
            extend(depth + 1);
            base.pop_back();
        });
    }
};

} // namespace

BookMeasurement book_size_k(const ColoredCompleteGraph& g, Color c, int k)
{
    require(k >= 2 && k <= 4, "book base order k must lie in [2, 4]");
    if (k == 2)
        return book_size(g, c);

    CliqueBookSearch search{g, c, k, {}, {}, {}};
    search.best.color = c;
    search.best.k = k;
    search.common_by_depth.assign(static_cast<std::size_t>(k) + 1, std::vector<Word>(g.words_per_row(), 0));
    auto& all = search.common_by_depth[0];
    for (Vertex v = 0; v < g.size(); ++v)
        all[word_index(v)] |= bit_mask(v);
    search.extend(0);
    return search.best;
}

TuranFloor turan_independence_floor(const ColoredCompleteGraph& g, Color c)
{
    const auto n = static_cast<std::size_t>(g.size());
    const std::size_t edges = g.edge_count(c);

    TuranFloor result;
    result.average_degree = 2.0 * static_cast<double>(edges) / static_cast<double>(n);
    // ceil(n / (1 + 2e/n)) = ceil(n^2 / (n + 2e)) in exact integers.
    const std::size_t numerator = n * n;
    const std::size_t denominator = n + 2 * edges;
    result.floor = static_cast<int>((numerator + denominator - 1) / denominator);

    std::vector<bool> alive(n, true);
    std::vector<int> degree(n);
    for (std::size_t v = 0; v < n; ++v)
        degree[v] = g.degree(static_cast<Vertex>(v), c);

    auto remove = [&](Vertex v) {
        alive[static_cast<std::size_t>(v)] = false;
        for_each_bit(g.row(v, c), [&](Vertex w) {
            if (alive[static_cast<std::size_t>(w)])
                --degree[static_cast<std::size_t>(w)];
        });
    };

    for (;;) {
        Vertex pick = -1;
        for (std::size_t v = 0; v < n; ++v)
            if (alive[v] && (pick < 0 || degree[v] < degree[static_cast<std::size_t>(pick)]))
                pick = static_cast<Vertex>(v);
        if (pick < 0)
            break;
        result.witness.push_back(pick);
        std::vector<Vertex> doomed{pick};
        for_each_bit(g.row(pick, c), [&](Vertex w) {
            if (alive[static_cast<std::size_t>(w)])
                doomed.push_back(w);
        });
        for (Vertex v : doomed)
            if (alive[static_cast<std::size_t>(v)])
                remove(v);
    }
    return result;
}

DensityReport pair_density(const ColoredCompleteGraph& g, std::span<const Vertex> first,
                           std::span<const Vertex> second)
{
    require(!first.empty() && !second.empty(), "density needs two nonempty vertex sets");
    std::vector<bool> in_first(static_cast<std::size_t>(g.size()), false);
    for (Vertex v : first) {
        require(v >= 0 && v < g.size(), "vertex out of range in density set");
        in_first[static_cast<std::size_t>(v)] = true;
    }
    DensityReport report{{first.begin(), first.end()}, {second.begin(), second.end()}, 0, 0};
    for (Vertex v : second) {
        require(v >= 0 && v < g.size(), "vertex out of range in density set");
        require(!in_first[static_cast<std::size_t>(v)], "density sets must be disjoint");
    }
    for (Vertex u : first)
        for (Vertex v : second)
            report.red_edges += g.is_red(u, v) ? 1 : 0;
    report.cross_pairs = first.size() * second.size();
    return report;
}

std::string encode_witness(const ColoredCompleteGraph& g)
{
    static constexpr char digits[] = "0123456789abcdef";
    const int n = g.size();
    std::string out = std::to_string(n) + ":";
    unsigned nibble = 0;
    int filled = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            nibble = (nibble << 1) | (g.is_red(u, v) ? 1u : 0u);
            if (++filled == 4) {
                out.push_back(digits[nibble]);
                nibble = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(digits[nibble << (4 - filled)]);
    return out;
}

ColoredCompleteGraph decode_witness(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0)
        throw ParseError("witness must look like '<n>:<hex>'");
    int n = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + colon, n);
    if (ec != std::errc{} || end != text.data() + colon || n < 1)
        throw ParseError("witness vertex count is not a positive integer");

    const auto hex = text.substr(colon + 1);
    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (hex.size() != (pairs + 3) / 4)
        throw ParseError("witness for " + std::to_string(n) + " vertices needs " + std::to_string((pairs + 3) / 4) +
                         " hex digits, got " + std::to_string(hex.size()));

    std::vector<bool> bits;
    bits.reserve(hex.size() * 4);
    for (char ch : hex) {
        unsigned value = 0;
        if (ch >= '0' && ch <= '9')
            value = static_cast<unsigned>(ch - '0');
        else if (ch >= 'a' && ch <= 'f')
            value = static_cast<unsigned>(ch - 'a' + 10);
        else
            throw ParseError(std::string("invalid hex digit '") + ch + "' in witness");
        for (int b = 3; b >= 0; --b)
            bits.push_back(((value >> b) & 1u) != 0);
    }
    for (std::size_t i = pairs; i < bits.size(); ++i)
        if (bits[i])
            throw ParseError("witness padding bits must be zero");

    ColoredCompleteGraph g(n);
    std::size_t index = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (bits[index++])
                g.set_color(u, v, Color::red);
    return g;
}

} // namespace bookramsey
