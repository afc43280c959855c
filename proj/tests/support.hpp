#pragma once

#include <cstdint>
#include <iostream>
#include <random>

#include <gmpxx.h>

#include "skein/skein.hpp"

namespace testing_support {

using skein::LaurentPoly;
using skein::SkeinElement;

inline std::uint64_t test_seed() {
    static const std::uint64_t seed = [] {
        std::uint64_t s = skein::seed_from_env(0x5EEDULL);
        std::cerr << "[property seed " << s << "]\n";
        return s;
    }();
    return seed;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(test_seed());
    return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline LaurentPoly random_laurent(int max_terms = 5, int span = 6, int coeff = 9) {
    LaurentPoly p;
    int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) {
        p.add_term(uniform(-span, span), uniform(-coeff, coeff));
    }
    return p;
}

inline LaurentPoly random_nonzero_laurent(int max_terms = 5, int span = 6, int coeff = 9) {
    LaurentPoly p;
    while (p.is_zero()) {
        p = random_laurent(max_terms, span, coeff);
    }
    return p;
}

inline SkeinElement random_element(skein::Basis basis, int max_terms = 4, int max_index = 3) {
    SkeinElement e(basis);
    int n = uniform(0, max_terms);
    for (int t = 0; t < n; ++t) {
        e.add_term({uniform(0, max_index), uniform(0, max_index), uniform(0, max_index)}, random_laurent(3, 4, 5));
    }
    return e;
}

// Independent numeric oracle: evaluates elements at a point (A, x1, x2, x3)
// of Q^4 with its own Chebyshev recurrence, so symbolic results can be
// checked against plain arithmetic.

inline mpq_class cheb_value(int n, const mpq_class& x) {
    if (n == -1) {
        return 0;
    }
    if (n < -1) {
        return -cheb_value(-n - 2, x);
    }
    mpq_class a = 0;  // S_{-1}
    mpq_class b = 1;  // S_0
    for (int i = 0; i < n; ++i) {
        mpq_class c = x * b - a;
        a = b;
        b = c;
    }
    return b;
}

inline mpq_class qpow(const mpq_class& x, int e) {
    mpq_class r = 1;
    mpq_class base = e < 0 ? mpq_class(1) / x : x;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) {
        r *= base;
    }
    return r;
}

inline mpq_class laurent_at(const LaurentPoly& p, const mpq_class& A) {
    mpq_class s = 0;
    for (const auto& [e, c] : p.terms()) {
        s += mpq_class(c) * qpow(A, e);
    }
    return s;
}

struct Point {
    mpq_class A, x1, x2, x3;
};

inline Point random_point() {
    // A avoids 0 and +-1; the x's are small integers.
    mpq_class A;
    do {
        A = mpq_class(uniform(2, 5) * (uniform(0, 1) ? 1 : -1), uniform(1, 3));
        A.canonicalize();
    } while (abs(A) == 1);
    return {A, uniform(-4, 4), uniform(-4, 4), uniform(-4, 4)};
}

inline mpq_class value_at(const SkeinElement& e, const Point& p) {
    mpq_class s = 0;
    for (const auto& [idx, c] : e.terms()) {
        mpq_class v = laurent_at(c, p.A);
        if (e.basis() == skein::Basis::chebyshev) {
            v *= cheb_value(idx.i, p.x1) * cheb_value(idx.j, p.x2) * cheb_value(idx.k, p.x3);
        } else {
            v *= qpow(p.x1, idx.i) * qpow(p.x2, idx.j) * qpow(p.x3, idx.k);
        }
        s += v;
    }
    return s;
}

// -A^k + A^-k at a point.
inline mpq_class g_at(int k, const mpq_class& A) { return -qpow(A, k) + qpow(A, -k); }

// C(m,n)S_q(a2) at a point straight from the four-term formula.
inline mpq_class relator_formula_at(int m, int n, int q, const Point& p) {
    auto S = cheb_value;
    return g_at(m + n + 2, p.A) * S(m, p.x1) * S(n, p.x3) * S(q, p.x2) +
           g_at(m + n, p.A) * S(m - 1, p.x1) * S(n - 1, p.x3) * (S(q + 1, p.x2) + S(q - 1, p.x2)) +
           g_at(m + n - 2, p.A) * S(m - 2, p.x1) * S(n - 2, p.x3) * S(q, p.x2);
}

}  // namespace testing_support
