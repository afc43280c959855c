#ifndef SKEIN_LAURENT_HPP
#define SKEIN_LAURENT_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace skein {

using Int = mpz_class;

/// Integer Laurent polynomial in one variable A, i.e. an element of Z[A, A^-1].
///
/// Stored densely between the lowest and highest nonzero exponent. The
/// coefficient vector never starts or ends with a zero, and the zero
/// polynomial is the empty vector, so structural equality is ring equality.
class LaurentPoly {
public:
    using Term = std::pair<int, Int>;

    LaurentPoly() = default;

    LaurentPoly(long c) {
        if (c != 0) {
            coeffs_.emplace_back(c);
        }
    }

    LaurentPoly(const Int& c) {
        if (c != 0) {
            coeffs_.push_back(c);
        }
    }

    LaurentPoly(std::initializer_list<Term> terms) {
        for (const auto& [e, c] : terms) {
            add_term(e, c);
        }
    }

    static LaurentPoly monomial(const Int& c, int exponent) {
        LaurentPoly p;
        if (c != 0) {
            p.low_ = exponent;
            p.coeffs_.push_back(c);
        }
        return p;
    }

    /// A^exponent
    static LaurentPoly power(int exponent) { return monomial(1, exponent); }

    static LaurentPoly from_terms(const std::vector<Term>& terms) {
        LaurentPoly p;
        for (const auto& [e, c] : terms) {
            p.add_term(e, c);
        }
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    int min_exponent() const {
        require_nonzero("min_exponent");
        return low_;
    }

    int max_exponent() const {
        require_nonzero("max_exponent");
        return low_ + static_cast<int>(coeffs_.size()) - 1;
    }

    Int coefficient(int exponent) const {
        if (is_zero() || exponent < low_ || exponent > max_exponent()) {
            return 0;
        }
        return coeffs_[static_cast<std::size_t>(exponent - low_)];
    }

    const Int& leading_coefficient() const {
        require_nonzero("leading_coefficient");
        return coeffs_.back();
    }

    /// Nonzero terms, exponents ascending.
    std::vector<Term> terms() const {
        std::vector<Term> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) {
                out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
            }
        }
        return out;
    }

    std::size_t term_count() const {
        return static_cast<std::size_t>(std::count_if(
            coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c != 0; }));
    }

    void add_term(int exponent, const Int& c) {
        if (c == 0) {
            return;
        }
        if (is_zero()) {
            low_ = exponent;
            coeffs_.push_back(c);
            return;
        }
        int high = max_exponent();
        if (exponent < low_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - exponent), Int(0));
            low_ = exponent;
        } else if (exponent > high) {
            coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(exponent - high), Int(0));
        }
        coeffs_[static_cast<std::size_t>(exponent - low_)] += c;
        normalize();
    }

    /// Multiplication by A^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly out = *this;
        if (!out.is_zero()) {
            out.low_ += k;
        }
        return out;
    }

    LaurentPoly operator-() const {
        LaurentPoly out = *this;
        for (auto& c : out.coeffs_) {
            c = -c;
        }
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& rhs) { return accumulate(rhs, false); }
    LaurentPoly& operator-=(const LaurentPoly& rhs) { return accumulate(rhs, true); }

    LaurentPoly& operator*=(const LaurentPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }

    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        LaurentPoly out;
        if (lhs.is_zero() || rhs.is_zero()) {
            return out;
        }
        out.low_ = lhs.low_ + rhs.low_;
        out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            if (lhs.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                if (rhs.coeffs_[j] != 0) {
                    out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
                }
            }
        }
        out.normalize();
        return out;
    }

    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        return lhs.coeffs_.size() == rhs.coeffs_.size() &&
               (lhs.coeffs_.empty() || lhs.low_ == rhs.low_) && lhs.coeffs_ == rhs.coeffs_;
    }

    std::string to_string() const {
        if (is_zero()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms()) {
            Int mag = abs(c);
            if (first) {
                if (c < 0) {
                    os << "-";
                }
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) {
                os << mag << "*";
            }
            os << "A";
            if (e != 1) {
                os << "^" << e;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    void require_nonzero(const char* what) const {
        if (is_zero()) {
            throw std::domain_error(std::string(what) + " of the zero Laurent polynomial");
        }
    }

    LaurentPoly& accumulate(const LaurentPoly& rhs, bool subtract) {
        if (rhs.is_zero()) {
            return *this;
        }
        if (is_zero()) {
            *this = subtract ? -rhs : rhs;
            return *this;
        }
        int lo = std::min(low_, rhs.low_);
        int hi = std::max(max_exponent(), rhs.max_exponent());
        if (lo < low_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Int(0));
            low_ = lo;
        }
        coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Int(0));
        std::size_t offset = static_cast<std::size_t>(rhs.low_ - low_);
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            if (subtract) {
                coeffs_[offset + i] -= rhs.coeffs_[i];
            } else {
                coeffs_[offset + i] += rhs.coeffs_[i];
            }
        }
        normalize();
        return *this;
    }

    void normalize() {
        std::size_t back = coeffs_.size();
        while (back > 0 && coeffs_[back - 1] == 0) {
            --back;
        }
        coeffs_.resize(back);
        std::size_t front = 0;
        while (front < coeffs_.size() && coeffs_[front] == 0) {
            ++front;
        }
        if (front > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(front));
            low_ += static_cast<int>(front);
        }
        if (coeffs_.empty()) {
            low_ = 0;
        }
    }

    int low_ = 0;
    std::vector<Int> coeffs_;
};

/// The substitution A -> A^-1.
inline LaurentPoly mirror(const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> flipped;
    for (const auto& [e, c] : p.terms()) {
        flipped.emplace_back(-e, c);
    }
    return LaurentPoly::from_terms(flipped);
}

/// Highest minus lowest exponent. Undefined for zero.
inline int breadth(const LaurentPoly& p) {
    if (p.is_zero()) {
        throw std::domain_error("breadth undefined for the zero polynomial");
    }
    return p.max_exponent() - p.min_exponent();
}

/// -A^k + A^-k. Every relator coefficient has this shape.
inline LaurentPoly antisymmetric_unit(int k) {
    return LaurentPoly::monomial(-1, k) + LaurentPoly::monomial(1, -k);
}

/// Returns q with a = q*b, or nullopt when no such q exists in Z[A^{+-1}].
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by the zero Laurent polynomial");
    }
    if (a.is_zero()) {
        return LaurentPoly{};
    }
    const int q_low = a.min_exponent() - b.min_exponent();
    const int b_high = b.max_exponent();
    const Int& b_lead = b.leading_coefficient();
    LaurentPoly quotient;
    LaurentPoly rest = a;
    while (!rest.is_zero()) {
        int e = rest.max_exponent() - b_high;
        if (e < q_low) {
            return std::nullopt;
        }
        const Int& top = rest.leading_coefficient();
        if (!mpz_divisible_p(top.get_mpz_t(), b_lead.get_mpz_t())) {
            return std::nullopt;
        }
        Int c = top / b_lead;
        LaurentPoly t = LaurentPoly::monomial(c, e);
        quotient += t;
        rest -= t * b;
    }
    return quotient;
}

}  // namespace skein

#endif
