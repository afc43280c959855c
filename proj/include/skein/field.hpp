#ifndef SKEIN_FIELD_HPP
#define SKEIN_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "laurent.hpp"

namespace skein {

// Coefficient fields used for specializing A. A field descriptor carries any
// runtime data (the modulus) and performs the arithmetic on its value_type.

struct RationalField {
    using value_type = mpq_class;

    value_type from_integer(const Int& n) const { return value_type(n); }
    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    bool is_zero(const value_type& x) const { return x == 0; }
    value_type add(const value_type& x, const value_type& y) const { return x + y; }
    value_type sub(const value_type& x, const value_type& y) const { return x - y; }
    value_type mul(const value_type& x, const value_type& y) const { return x * y; }
    value_type inverse(const value_type& x) const {
        if (x == 0) {
            throw std::domain_error("zero has no inverse");
        }
        return value_type(1) / x;
    }
    std::string describe() const { return "Q"; }
};

/// Z/pZ for a prime p < 2^32.
class PrimeField {
public:
    using value_type = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) {
            throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
        }
        if (p >= (std::uint64_t{1} << 32)) {
            throw std::invalid_argument("modulus must be below 2^32");
        }
    }

    std::uint64_t modulus() const noexcept { return p_; }

    value_type from_integer(const Int& n) const {
        Int r = n % Int(static_cast<unsigned long>(p_));
        if (r < 0) {
            r += static_cast<unsigned long>(p_);
        }
        return r.get_ui();
    }
    value_type from_signed(long long n) const {
        long long r = n % static_cast<long long>(p_);
        return static_cast<value_type>(r < 0 ? r + static_cast<long long>(p_) : r);
    }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type x) const { return x == 0; }
    value_type add(value_type x, value_type y) const { return (x + y) % p_; }
    value_type sub(value_type x, value_type y) const { return (x + p_ - y) % p_; }
    value_type mul(value_type x, value_type y) const { return (x * y) % p_; }
    value_type pow(value_type base, std::uint64_t e) const {
        value_type r = 1;
        base %= p_;
        while (e > 0) {
            if (e & 1U) {
                r = mul(r, base);
            }
            base = mul(base, base);
            e >>= 1U;
        }
        return r;
    }
    value_type inverse(value_type x) const {
        if (x % p_ == 0) {
            throw std::domain_error("zero has no inverse");
        }
        return pow(x, p_ - 2);
    }
    std::string describe() const { return "GF(" + std::to_string(p_) + ")"; }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) {
            return false;
        }
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                return false;
            }
        }
        return true;
    }

private:
    std::uint64_t p_;
};

/// Substitution homomorphism Z[A^{+-1}] -> F sending A to x.
template <class Field>
typename Field::value_type evaluate(const LaurentPoly& p, const typename Field::value_type& x, const Field& field) {
    if (field.is_zero(x)) {
        throw std::domain_error("cannot evaluate a Laurent polynomial at A = 0");
    }
    if (p.is_zero()) {
        return field.zero();
    }
    const auto x_inv = field.inverse(x);
    const int lo = p.min_exponent();
    const int hi = p.max_exponent();
    // Horner in x from the top, then rescale by x^lo.
    auto acc = field.zero();
    for (int e = hi; e >= lo; --e) {
        acc = field.add(field.mul(acc, x), field.from_integer(p.coefficient(e)));
    }
    auto scale = field.one();
    const auto& step = lo < 0 ? x_inv : x;
    for (int i = 0; i < (lo < 0 ? -lo : lo); ++i) {
        scale = field.mul(scale, step);
    }
    return field.mul(acc, scale);
}

/// Integer evaluation at A = 1 or A = -1, the two points used by the
/// vanishing criterion. Exact and cheap.
inline Int evaluate_at_unit(const LaurentPoly& p, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("evaluate_at_unit expects +1 or -1");
    }
    Int total = 0;
    for (const auto& [e, c] : p.terms()) {
        if (sign == -1 && (e % 2 != 0)) {
            total -= c;
        } else {
            total += c;
        }
    }
    return total;
}

}  // namespace skein

#endif
