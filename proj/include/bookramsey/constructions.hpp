#pragma once

#include "bookramsey/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace bookramsey {

struct RandomSpec {
    int n_vertices = 0;
    double blue_probability = 0.5;
    std::uint64_t seed = 0;
};

// Three red cliques [0, N/3), [N/3, 2N/3), [2N/3, N); cross edges red with probability p.
struct ThreeBlockSpec {
    int n_vertices = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};

struct PaleySpec {
    int q = 0;
};

// k blue cliques of size n + k - 1, red between them.
struct BlockSpec {
    int k = 2;
    int n = 1;
};

using ConstructionSpec = std::variant<RandomSpec, ThreeBlockSpec, PaleySpec, BlockSpec>;

const char* kind_name(const ConstructionSpec& spec);
bool is_randomized(const ConstructionSpec& spec);
int vertex_count(const ConstructionSpec& spec);
// Copy of a randomized spec with its seed replaced; deterministic specs are returned unchanged.
ConstructionSpec with_seed(const ConstructionSpec& spec, std::uint64_t seed);

// Throws ArgumentError when the parameters break the kind's invariants.
void validate(const ConstructionSpec& spec);

// "kind=paley;q=29", "kind=random;n_vertices=570;blue_probability=0.5;seed=1", ...
// Probabilities use the shortest decimal that round-trips.
std::string to_record(const ConstructionSpec& spec);
ConstructionSpec parse_record(std::string_view record);
std::string describe(const ConstructionSpec& spec);

ColoredCompleteGraph build(const ConstructionSpec& spec);

ColoredCompleteGraph random_coloring(int n_vertices, double blue_probability, std::uint64_t seed);
ColoredCompleteGraph three_block(int n_vertices, double p, std::uint64_t seed);
ColoredCompleteGraph paley(int q);
ColoredCompleteGraph block_coloring(int k, int n);

inline constexpr int max_construction_vertices = 10000;

} // namespace bookramsey
