#include "bookramsey/field.hpp"

#include "bookramsey/error.hpp"

#include <string>

namespace bookramsey {

namespace {

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

using Poly = std::vector<int>; // coefficients, index = power, fixed length e

Poly to_poly(int a, int p, int e)
{
    Poly out(static_cast<std::size_t>(e));
    for (auto& digit : out) {
        digit = a % p;
        a /= p;
    }
    return out;
}

int from_poly(const Poly& poly, int p)
{
    int value = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        value = value * p + *it;
    return value;
}

// (a * b) mod monic m, all over GF(p). a and b have length e, m has length e+1.
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, int p)
{
    const std::size_t e = a.size();
    std::vector<int> product(2 * e - 1, 0);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j)
            product[i + j] = (product[i + j] + a[i] * b[j]) % p;
    for (std::size_t deg = product.size() - 1; deg >= e; --deg) {
        const int lead = product[deg];
        if (lead != 0)
            for (std::size_t i = 0; i <= e; ++i)
                product[deg - e + i] = ((product[deg - e + i] - lead * m[i]) % p + p) % p;
        if (deg == e)
            break;
    }
    product.resize(e);
    return product;
}

// Degree 2 and 3 polynomials are irreducible iff they have no root.
bool has_root(const Poly& m, int p)
{
    for (int x = 0; x < p; ++x) {
        int value = 0;
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            value = (value * x + *it) % p;
        if (value == 0)
            return true;
    }
    return false;
}

} // namespace

std::pair<int, int> prime_power(int q)
{
    if (q < 2)
        return {0, 0};
    int p = 2;
    while (q % p != 0)
        ++p;
    if (!is_prime(p))
        return {0, 0};
    int e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    return q == 1 ? std::pair{p, e} : std::pair{0, 0};
}

FieldTable FieldTable::build(int q)
{
    const auto [p, e] = prime_power(q);
    if (p == 0 || e < 1 || e > 3 || q > 10000)
        throw ArgumentError("field order " + std::to_string(q) +
                            " is not a prime power p^e with e <= 3 and q <= 10^4");

    FieldTable f;
    f.q_ = q;
    f.p_ = p;
    f.e_ = e;

    if (e == 1) {
        f.modulus_ = {0, 1};
    } else {
        const int tail_count = q; // p^e choices for the non-leading coefficients
        for (int tail = 0; tail < tail_count; ++tail) {
            Poly m = to_poly(tail, p, e);
            m.push_back(1);
            if (!has_root(m, p)) {
                f.modulus_ = m;
                break;
            }
        }
    }

    auto multiply = [&](int a, int b) {
        if (e == 1)
            return a * b % p;
        return from_poly(mul_mod(to_poly(a, p, e), to_poly(b, p, e), f.modulus_, p), p);
    };

    f.exp_.assign(static_cast<std::size_t>(q - 1), 0);
    f.log_.assign(static_cast<std::size_t>(q), -1);
    for (int g = 1; g < q; ++g) {
        std::fill(f.log_.begin(), f.log_.end(), -1);
        int power = 1;
        int i = 0;
        for (; i < q - 1; ++i) {
            if (f.log_[static_cast<std::size_t>(power)] >= 0)
                break;
            f.exp_[static_cast<std::size_t>(i)] = power;
            f.log_[static_cast<std::size_t>(power)] = i;
            power = multiply(power, g);
        }
        if (i == q - 1 && power == 1) {
            f.generator_ = g;
            return f;
        }
    }
    throw ArgumentError("no primitive element found for GF(" + std::to_string(q) + ")");
}

int FieldTable::add(int a, int b) const
{
    if (e_ == 1)
        return (a + b) % p_;
    int result = 0;
    int place = 1;
    for (int i = 0; i < e_; ++i) {
        result += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return result;
}

int FieldTable::neg(int a) const
{
    if (e_ == 1)
        return (p_ - a) % p_;
    int result = 0;
    int place = 1;
    for (int i = 0; i < e_; ++i) {
        result += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return result;
}

int FieldTable::mul(int a, int b) const
{
    if (a == 0 || b == 0)
        return 0;
    const int sum = log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)];
    return exp_[static_cast<std::size_t>(sum % (q_ - 1))];
}

int FieldTable::inv(int a) const
{
    if (a == 0)
        throw ArgumentError("zero has no multiplicative inverse");
    const int l = log_[static_cast<std::size_t>(a)];
    return exp_[static_cast<std::size_t>((q_ - 1 - l) % (q_ - 1))];
}

bool FieldTable::is_square(int a) const
{
    return a != 0 && log_[static_cast<std::size_t>(a)] % 2 == 0;
}

} // namespace bookramsey
