#ifndef SKEIN_SKEIN_ELEMENT_HPP
#define SKEIN_SKEIN_ELEMENT_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "laurent.hpp"

namespace skein {

/// Integer polynomial in one variable, coefficients ascending.
using IntPoly = std::vector<Int>;

/// Chebyshev polynomial of the second kind S_n for any integer n, with
/// S_{-1} = 0, S_{-2} = -1 and S_n = -S_{-n-2} below that.
inline IntPoly chebyshev(int n) {
    if (n == -1) {
        return {};
    }
    if (n < -1) {
        IntPoly p = chebyshev(-n - 2);
        for (auto& c : p) {
            c = -c;
        }
        return p;
    }
    IntPoly prev{};       // S_{-1}
    IntPoly cur{Int(1)};  // S_0
    for (int k = 0; k < n; ++k) {
        IntPoly next(cur.size() + 1, Int(0));
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i] -= prev[i];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Sign and nonnegative index of S_n after applying the reflection rule.
/// Returns nullopt for n = -1, where S_n vanishes.
inline std::optional<std::pair<int, int>> normalize_chebyshev_index(int n) {
    if (n >= 0) {
        return std::pair{1, n};
    }
    if (n == -1) {
        return std::nullopt;
    }
    return std::pair{-1, -n - 2};
}

enum class Basis { monomial, chebyshev };

inline const char* to_string(Basis b) { return b == Basis::monomial ? "monomial" : "chebyshev"; }

enum class Variable { a1, a2, a3 };

/// Exponents (monomial basis) or Chebyshev indices of a1, a2, a3.
struct MonomialIndex {
    int i = 0;  // a1
    int j = 0;  // a2
    int k = 0;  // a3

    int degree() const noexcept { return i + j + k; }
    int& operator[](Variable v) { return v == Variable::a1 ? i : v == Variable::a2 ? j : k; }
    int operator[](Variable v) const { return v == Variable::a1 ? i : v == Variable::a2 ? j : k; }

    friend auto operator<=>(const MonomialIndex&, const MonomialIndex&) = default;

    std::string to_string() const {
        return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    }
};

inline std::ostream& operator<<(std::ostream& os, const MonomialIndex& m) { return os << m.to_string(); }

namespace detail {

// x^n written in the Chebyshev basis: entry t is the coefficient of S_t.
inline const IntPoly& power_in_chebyshev(int n) {
    static std::mutex mutex;
    static std::deque<IntPoly> table{IntPoly{Int(1)}};
    std::lock_guard lock(mutex);
    while (static_cast<int>(table.size()) <= n) {
        const IntPoly& last = table.back();
        IntPoly next(last.size() + 1, Int(0));
        for (std::size_t t = 0; t < last.size(); ++t) {
            if (last[t] == 0) {
                continue;
            }
            next[t + 1] += last[t];
            if (t > 0) {
                next[t - 1] += last[t];
            }
        }
        table.push_back(std::move(next));
    }
    return table[static_cast<std::size_t>(n)];
}

inline const IntPoly& chebyshev_in_powers(int n) {
    static std::mutex mutex;
    static std::deque<IntPoly> table;
    std::lock_guard lock(mutex);
    while (static_cast<int>(table.size()) <= n) {
        table.push_back(chebyshev(static_cast<int>(table.size())));
    }
    return table[static_cast<std::size_t>(n)];
}

}  // namespace detail

/// Element of the free Z[A^{+-1}]-module on triples (i,j,k), read either as
/// a1^i a2^j a3^k or as S_i(a1) S_j(a2) S_k(a3). Zero coefficients are never
/// stored and all stored indices are nonnegative.
class SkeinElement {
public:
    using TermMap = std::map<MonomialIndex, LaurentPoly>;

    explicit SkeinElement(Basis basis = Basis::chebyshev) : basis_(basis) {}

    static SkeinElement basis_element(MonomialIndex idx, const LaurentPoly& coeff = LaurentPoly(1),
                                      Basis basis = Basis::chebyshev) {
        SkeinElement e(basis);
        e.add_term(idx, coeff);
        return e;
    }

    /// The empty link with coefficient c.
    static SkeinElement constant(const LaurentPoly& c, Basis basis = Basis::chebyshev) {
        return basis_element({0, 0, 0}, c, basis);
    }

    Basis basis() const noexcept { return basis_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    LaurentPoly coefficient(const MonomialIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? LaurentPoly{} : it->second;
    }

    void add_term(const MonomialIndex& idx, const LaurentPoly& c) {
        if (idx.i < 0 || idx.j < 0 || idx.k < 0) {
            throw std::invalid_argument("negative basis index " + idx.to_string());
        }
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    int max_degree() const {
        int d = -1;
        for (const auto& [idx, c] : terms_) {
            d = std::max(d, idx.degree());
        }
        return d;
    }

    SkeinElement operator-() const {
        SkeinElement out(basis_);
        for (const auto& [idx, c] : terms_) {
            out.terms_.emplace(idx, -c);
        }
        return out;
    }

    SkeinElement& operator+=(const SkeinElement& rhs) { return accumulate(rhs, false); }
    SkeinElement& operator-=(const SkeinElement& rhs) { return accumulate(rhs, true); }

    friend SkeinElement operator+(SkeinElement lhs, const SkeinElement& rhs) { return lhs += rhs; }
    friend SkeinElement operator-(SkeinElement lhs, const SkeinElement& rhs) { return lhs -= rhs; }

    friend SkeinElement operator*(const LaurentPoly& s, const SkeinElement& e) {
        SkeinElement out(e.basis_);
        if (s.is_zero()) {
            return out;
        }
        for (const auto& [idx, c] : e.terms_) {
            out.terms_.emplace(idx, s * c);
        }
        return out;
    }
    friend SkeinElement operator*(const SkeinElement& e, const LaurentPoly& s) { return s * e; }

    /// Multiplication by A^k.
    SkeinElement shifted(int k) const {
        SkeinElement out(basis_);
        for (const auto& [idx, c] : terms_) {
            out.terms_.emplace(idx, c.shifted(k));
        }
        return out;
    }

    /// Product with one of the generators a1, a2, a3.
    SkeinElement times(Variable v) const {
        SkeinElement out(basis_);
        for (const auto& [idx, c] : terms_) {
            MonomialIndex up = idx;
            ++up[v];
            out.add_term(up, c);
            if (basis_ == Basis::chebyshev && idx[v] > 0) {
                MonomialIndex down = idx;
                --down[v];
                out.add_term(down, c);
            }
        }
        return out;
    }

    /// Equality as module elements; operands in different bases are compared
    /// after converting the right-hand side.
    friend bool operator==(const SkeinElement& lhs, const SkeinElement& rhs);

    std::string to_string() const {
        if (is_zero()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto& [idx, c] : terms_) {
            if (!first) {
                os << " + ";
            }
            first = false;
            os << "(" << c << ")";
            if (basis_ == Basis::chebyshev) {
                os << "*S" << idx.to_string();
            } else {
                os << "*a" << idx.to_string();
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const SkeinElement& e) { return os << e.to_string(); }

private:
    SkeinElement& accumulate(const SkeinElement& rhs, bool subtract);

    Basis basis_;
    TermMap terms_;
};

namespace detail {

// Expands one index along one variable into the target basis.
inline const IntPoly& expansion(Basis target, int n) {
    return target == Basis::chebyshev ? power_in_chebyshev(n) : chebyshev_in_powers(n);
}

inline SkeinElement change_basis(const SkeinElement& e, Basis target) {
    if (e.basis() == target) {
        return e;
    }
    SkeinElement out(target);
    for (const auto& [idx, c] : e.terms()) {
        const IntPoly& xi = expansion(target, idx.i);
        const IntPoly& xj = expansion(target, idx.j);
        const IntPoly& xk = expansion(target, idx.k);
        for (std::size_t a = 0; a < xi.size(); ++a) {
            if (xi[a] == 0) {
                continue;
            }
            for (std::size_t b = 0; b < xj.size(); ++b) {
                if (xj[b] == 0) {
                    continue;
                }
                Int ab = xi[a] * xj[b];
                for (std::size_t d = 0; d < xk.size(); ++d) {
                    if (xk[d] == 0) {
                        continue;
                    }
                    Int w = ab * xk[d];
                    out.add_term({static_cast<int>(a), static_cast<int>(b), static_cast<int>(d)}, LaurentPoly(w) * c);
                }
            }
        }
    }
    return out;
}

}  // namespace detail

inline SkeinElement to_chebyshev(const SkeinElement& e) { return detail::change_basis(e, Basis::chebyshev); }
inline SkeinElement to_monomial(const SkeinElement& e) { return detail::change_basis(e, Basis::monomial); }
inline SkeinElement in_basis(const SkeinElement& e, Basis b) { return detail::change_basis(e, b); }

inline bool operator==(const SkeinElement& lhs, const SkeinElement& rhs) {
    if (lhs.basis_ != rhs.basis_) {
        return lhs.terms_ == in_basis(rhs, lhs.basis_).terms_;
    }
    return lhs.terms_ == rhs.terms_;
}

inline SkeinElement& SkeinElement::accumulate(const SkeinElement& rhs, bool subtract) {
    const SkeinElement* src = &rhs;
    SkeinElement converted;
    if (rhs.basis_ != basis_) {
        converted = in_basis(rhs, basis_);
        src = &converted;
    }
    for (const auto& [idx, c] : src->terms_) {
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            terms_.emplace(idx, subtract ? -c : c);
            continue;
        }
        if (subtract) {
            it->second -= c;
        } else {
            it->second += c;
        }
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
    return *this;
}

/// S_m(a1) S_q(a2) S_n(a3) for arbitrary integer indices, in the Chebyshev
/// basis. Negative indices are reflected immediately.
inline SkeinElement chebyshev_term(int m, int q, int n, const LaurentPoly& coeff = LaurentPoly(1)) {
    SkeinElement e(Basis::chebyshev);
    auto s1 = normalize_chebyshev_index(m);
    auto s2 = normalize_chebyshev_index(q);
    auto s3 = normalize_chebyshev_index(n);
    if (!s1 || !s2 || !s3 || coeff.is_zero()) {
        return e;
    }
    int sign = s1->first * s2->first * s3->first;
    e.add_term({s1->second, s2->second, s3->second}, sign < 0 ? -coeff : coeff);
    return e;
}

/// Commutative product of the skein algebra of the pair of pants. The result
/// is in the basis of the left operand.
inline SkeinElement operator*(const SkeinElement& lhs, const SkeinElement& rhs) {
    const Basis basis = lhs.basis();
    const SkeinElement r = in_basis(rhs, basis);
    SkeinElement out(basis);
    for (const auto& [li, lc] : lhs.terms()) {
        for (const auto& [ri, rc] : r.terms()) {
            LaurentPoly c = lc * rc;
            if (basis == Basis::monomial) {
                out.add_term({li.i + ri.i, li.j + ri.j, li.k + ri.k}, c);
                continue;
            }
            // S_p S_q = sum_{t=0}^{min(p,q)} S_{|p-q|+2t}, one variable at a time.
            auto range = [](int p, int q) { return std::pair{p > q ? p - q : q - p, std::min(p, q)}; };
            auto [bi, ni] = range(li.i, ri.i);
            auto [bj, nj] = range(li.j, ri.j);
            auto [bk, nk] = range(li.k, ri.k);
            for (int ti = 0; ti <= ni; ++ti) {
                for (int tj = 0; tj <= nj; ++tj) {
                    for (int tk = 0; tk <= nk; ++tk) {
                        out.add_term({bi + 2 * ti, bj + 2 * tj, bk + 2 * tk}, c);
                    }
                }
            }
        }
    }
    return out;
}

/// Coefficientwise A -> A^-1; indices are untouched.
inline SkeinElement mirror(const SkeinElement& e) {
    SkeinElement out(e.basis());
    for (const auto& [idx, c] : e.terms()) {
        out.add_term(idx, mirror(c));
    }
    return out;
}

/// Coefficientwise specialization of A; zero values are dropped.
template <class Field>
std::map<MonomialIndex, typename Field::value_type> evaluate(const SkeinElement& e,
                                                             const typename Field::value_type& x,
                                                             const Field& field) {
    if (field.is_zero(x)) {
        throw std::domain_error("cannot specialize A = 0");
    }
    std::map<MonomialIndex, typename Field::value_type> out;
    for (const auto& [idx, c] : e.terms()) {
        auto v = evaluate(c, x, field);
        if (!field.is_zero(v)) {
            out.emplace(idx, std::move(v));
        }
    }
    return out;
}

/// Integer specialization at A = +1 or -1, zero values dropped.
inline std::map<MonomialIndex, Int> evaluate_at_unit(const SkeinElement& e, int sign) {
    std::map<MonomialIndex, Int> out;
    for (const auto& [idx, c] : e.terms()) {
        Int v = evaluate_at_unit(c, sign);
        if (v != 0) {
            out.emplace(idx, v);
        }
    }
    return out;
}

}  // namespace skein

#endif
