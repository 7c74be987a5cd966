#pragma once

#include <span>
#include <utility>
#include <vector>

namespace bookramsey {

// Finite field GF(p^e), e in {1, 2, 3}, q <= 10^4.
//
// Elements are integers in [0, q): the base-p digits of an element are the
// coefficients of its polynomial representative (digit i multiplies x^i).
// For e > 1 the field is GF(p)[x] / (m(x)) with m the first monic irreducible
// of degree e when candidates are ordered by the integer encoding of their
// non-leading coefficients. Multiplication goes through discrete log / antilog
// tables over the smallest primitive element.
class FieldTable {
public:
    static FieldTable build(int q);

    int order() const noexcept { return q_; }
    int characteristic() const noexcept { return p_; }
    int extension_degree() const noexcept { return e_; }
    // Coefficients c_0 .. c_e of the modulus (c_e = 1); {0, 1} for prime fields.
    std::span<const int> modulus() const noexcept { return modulus_; }
    int primitive_element() const noexcept { return generator_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const;
    int inv(int a) const;

    // True for nonzero squares only.
    bool is_square(int a) const;
    int square_count() const noexcept { return (q_ - 1) / 2; }

private:
    FieldTable() = default;

    int q_ = 0;
    int p_ = 0;
    int e_ = 0;
    int generator_ = 0;
    std::vector<int> modulus_;
    std::vector<int> exp_; // exp_[i] = g^i, i in [0, q - 1)
    std::vector<int> log_; // log_[a] for a != 0
};

// Returns (p, e) when q = p^e for a prime p, otherwise (0, 0).
std::pair<int, int> prime_power(int q);

} // namespace bookramsey
