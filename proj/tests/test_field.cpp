#include "bookramsey/error.hpp"
#include "bookramsey/field.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace bookramsey;

TEST_CASE("prime power detection")
{
    CHECK(prime_power(2) == std::pair{2, 1});
    CHECK(prime_power(9) == std::pair{3, 2});
    CHECK(prime_power(125) == std::pair{5, 3});
    CHECK(prime_power(1024) == std::pair{2, 10});
    CHECK(prime_power(12) == std::pair{0, 0});
    CHECK(prime_power(1) == std::pair{0, 0});
}

TEST_CASE("rejected orders")
{
    CHECK_THROWS_AS(FieldTable::build(6), ArgumentError);
    CHECK_THROWS_AS(FieldTable::build(16), ArgumentError);    // e = 4
    CHECK_THROWS_AS(FieldTable::build(10007), ArgumentError); // prime above the cap
    CHECK_THROWS_AS(FieldTable::build(1), ArgumentError);
}

TEST_CASE("prime fields are integers mod p")
{
    for (int p : {5, 13, 29, 101}) {
        const auto f = FieldTable::build(p);
        CHECK(f.characteristic() == p);
        CHECK(f.extension_degree() == 1);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                CHECK(f.add(a, b) == (a + b) % p);
                CHECK(f.mul(a, b) == a * b % p);
            }
        for (int a = 0; a < p; ++a)
            CHECK(f.is_square(a) == oracle::is_residue(a, p));
    }
}

TEST_CASE("extension fields satisfy the field axioms")
{
    for (int q : {4, 8, 9, 25, 27, 49}) {
        const auto f = FieldTable::build(q);
        CAPTURE(q);
        REQUIRE(f.modulus().size() == static_cast<std::size_t>(f.extension_degree() + 1));
        CHECK(f.modulus().back() == 1);
        std::set<int> squares;
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.mul(a, 1) == a);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                squares.insert(f.mul(a, a));
            }
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; c += 3) {
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // Odd q: exactly (q - 1) / 2 nonzero squares, matching is_square.
        if (q % 2 == 1) {
            CHECK(squares.size() == static_cast<std::size_t>(f.square_count()));
            for (int a = 1; a < q; ++a)
                CHECK(f.is_square(a) == (squares.count(a) == 1));
        }
        CHECK_THROWS_AS(f.inv(0), ArgumentError);
    }
}

TEST_CASE("primitive element generates the multiplicative group")
{
    for (int q : {9, 25, 121, 125, 343}) {
        const auto f = FieldTable::build(q);
        std::set<int> seen;
        int x = 1;
        for (int i = 0; i < q - 1; ++i) {
            seen.insert(x);
            x = f.mul(x, f.primitive_element());
        }
        CHECK(x == 1);
        CHECK(seen.size() == static_cast<std::size_t>(q - 1));
    }
}

TEST_CASE("GF(9) modulus is the first monic irreducible")
{
    // x^2 + 1 over GF(3): lower coefficients (1, 0) encode as 1, and it has no root.
    const auto f = FieldTable::build(9);
    const auto m = f.modulus();
    CHECK(std::vector<int>(m.begin(), m.end()) == std::vector<int>{1, 0, 1});
}
