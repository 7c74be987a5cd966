#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bookramsey {

enum class Color : std::uint8_t { red = 0, blue = 1 };

constexpr Color opposite(Color c) noexcept
{
    return c == Color::red ? Color::blue : Color::red;
}

const char* color_name(Color c) noexcept;

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;

// Two-colored complete graph on vertices [0, n). Red adjacency is stored as
// packed bit rows; blue rows are kept as the complement on distinct pairs so
// that both colors intersect in O(n / 64).
class ColoredCompleteGraph {
public:
    using Word = std::uint64_t;
    static constexpr int word_bits = 64;

    // Every distinct pair blue.
    explicit ColoredCompleteGraph(int n_vertices);

    static ColoredCompleteGraph from_red_relation(int n_vertices, std::span<const VertexPair> red_pairs);

    int size() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool is_red(Vertex u, Vertex v) const;
    Color color(Vertex u, Vertex v) const { return is_red(u, v) ? Color::red : Color::blue; }
    bool has(Vertex u, Vertex v, Color c) const { return u != v && color(u, v) == c; }

    void set_color(Vertex u, Vertex v, Color c);
    void flip(Vertex u, Vertex v);

    std::span<const Word> row(Vertex v, Color c) const;

    int degree(Vertex v, Color c) const;
    std::size_t edge_count(Color c) const;

    // Same vertex set with every edge color exchanged.
    ColoredCompleteGraph swapped() const;

    friend bool operator==(const ColoredCompleteGraph& a, const ColoredCompleteGraph& b)
    {
        return a.n_ == b.n_ && a.red_ == b.red_;
    }

private:
    void check_pair(Vertex u, Vertex v) const;
    Word* row_ptr(std::vector<Word>& rows, Vertex v) { return rows.data() + static_cast<std::size_t>(v) * words_; }

    int n_;
    std::size_t words_;
    std::vector<Word> red_;
    std::vector<Word> blue_;
};

// Number of common neighbours of u and v in the given color.
int codegree(const ColoredCompleteGraph& g, Vertex u, Vertex v, Color c);

struct BookMeasurement {
    Color color = Color::red;
    int k = 2;
    // Empty when the color has no k-clique ("no base"); pages is then 0.
    std::vector<Vertex> base;
    int pages = 0;

    bool has_base() const noexcept { return !base.empty(); }
};

// Largest book (k = 2): max over same-color edges of the same-color codegree.
BookMeasurement book_size(const ColoredCompleteGraph& g, Color c);

// Largest k-book for k in [2, 4]: max over same-color k-cliques of joint codegree.
BookMeasurement book_size_k(const ColoredCompleteGraph& g, Color c, int k);

struct TuranFloor {
    int floor = 0;
    double average_degree = 0.0;
    std::vector<Vertex> witness;
};

// ceil(n / (1 + d)) with d the average degree in c, plus a greedy independent
// set (repeated minimum-degree removal) of at least that size.
TuranFloor turan_independence_floor(const ColoredCompleteGraph& g, Color c);

struct DensityReport {
    std::vector<Vertex> first;
    std::vector<Vertex> second;
    std::size_t red_edges = 0;
    std::size_t cross_pairs = 0;

    double red_density() const { return static_cast<double>(red_edges) / static_cast<double>(cross_pairs); }
    double blue_density() const
    {
        return static_cast<double>(cross_pairs - red_edges) / static_cast<double>(cross_pairs);
    }
};

DensityReport pair_density(const ColoredCompleteGraph& g, std::span<const Vertex> first,
                           std::span<const Vertex> second);

// Witness text: "<n>:<hex>", where hex packs the red relation over pairs u < v
// in row-major order, most significant bit of each nibble first, zero padded.
std::string encode_witness(const ColoredCompleteGraph& g);
ColoredCompleteGraph decode_witness(std::string_view text);

} // namespace bookramsey
