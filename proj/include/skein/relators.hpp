#ifndef SKEIN_RELATORS_HPP
#define SKEIN_RELATORS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "skein_element.hpp"

namespace skein {

enum class Family { C, Cbar };

inline const char* to_string(Family f) { return f == Family::C ? "C" : "Cbar"; }

struct LeadingTerm {
    MonomialIndex monomial;
    LaurentPoly coefficient;
};

/// One handle-sliding relator C(m,n)S_q(a2) or Cbar(q,n)S_m(a1), stored in
/// the Chebyshev basis.
struct Relator {
    Family family = Family::C;
    int m = 0;
    int n = 0;
    int q = 0;
    SkeinElement element{Basis::chebyshev};
    /// Empty when the relator is degenerate (see relator_leading).
    std::optional<LeadingTerm> leading;

    std::string label() const {
        return std::string(to_string(family)) + "(m=" + std::to_string(m) + ",n=" + std::to_string(n) +
               ",q=" + std::to_string(q) + ")";
    }
};

namespace detail {

// The four-term shape shared by both families, with the "outer" index o
// carried by the first generator, the sliding index n by a3 and the
// multiplier index s by the remaining generator:
//   g(o+n+2) S_o S_n S_s + g(o+n) S_{o-1} S_{n-1} (S_{s+1} + S_{s-1})
//   + g(o+n-2) S_{o-2} S_{n-2} S_s,    g(k) = -A^k + A^-k.
// `place` turns (outer, multiplier, a3) indices into an element; `coef`
// supplies the weight for each g(k) slot.
template <class Place, class Coef>
SkeinElement four_terms(int o, int n, int s, Place place, Coef coef) {
    SkeinElement e(Basis::chebyshev);
    e += place(o, s, n, coef(o + n + 2));
    LaurentPoly mid = coef(o + n);
    e += place(o - 1, s + 1, n - 1, mid);
    e += place(o - 1, s - 1, n - 1, mid);
    e += place(o - 2, s, n - 2, coef(o + n - 2));
    return e;
}

template <class Place>
SkeinElement four_terms(int o, int n, int s, Place place) {
    return four_terms(o, n, s, place, antisymmetric_unit);
}

inline SkeinElement place_c(int a1, int a2, int a3, const LaurentPoly& c) { return chebyshev_term(a1, a2, a3, c); }
inline SkeinElement place_cbar(int a2, int a1, int a3, const LaurentPoly& c) { return chebyshev_term(a1, a2, a3, c); }

// Positions where the displayed terms live, skipping those that vanish
// because some index is -1.
template <class Pos>
std::vector<MonomialIndex> term_positions(int o, int n, int s, Pos pos) {
    std::vector<MonomialIndex> out;
    const int shape[4][3] = {{o, s, n}, {o - 1, s + 1, n - 1}, {o - 1, s - 1, n - 1}, {o - 2, s, n - 2}};
    for (const auto& t : shape) {
        auto x = normalize_chebyshev_index(t[0]);
        auto y = normalize_chebyshev_index(t[1]);
        auto z = normalize_chebyshev_index(t[2]);
        if (x && y && z) {
            out.push_back(pos(x->second, y->second, z->second));
        }
    }
    return out;
}

}  // namespace detail

/// C(m,n) for any (m,n), in the Chebyshev basis.
inline SkeinElement c_closed(int m, int n) { return detail::four_terms(m, n, 0, detail::place_c); }

/// Cbar(q,n): the same shape with the roles of a1 and a2 exchanged.
inline SkeinElement cbar_closed(int q, int n) { return detail::four_terms(q, n, 0, detail::place_cbar); }

/// Graded lexicographic order on Chebyshev triples: total degree first, then
/// a1, then a3, then a2.
struct MonomialOrder {
    static auto key(const MonomialIndex& x) { return std::tuple{x.degree(), x.i, x.k, x.j}; }
    bool less(const MonomialIndex& x, const MonomialIndex& y) const { return key(x) < key(y); }
    bool operator()(const MonomialIndex& x, const MonomialIndex& y) const { return less(x, y); }
};

/// Leading term of a relator: the largest position among its displayed
/// terms, with the coefficient the element actually carries there. A zero
/// coefficient at that position (cancellation, or the whole relator being
/// zero) makes the relator degenerate and yields nullopt.
inline std::optional<LeadingTerm> relator_leading(Family family, int m, int n, int q, const SkeinElement& element,
                                                  const MonomialOrder& order = {}) {
    std::vector<MonomialIndex> positions =
        family == Family::C
            ? detail::term_positions(m, n, q, [](int a1, int a2, int a3) { return MonomialIndex{a1, a2, a3}; })
            : detail::term_positions(q, n, m, [](int a2, int a1, int a3) { return MonomialIndex{a1, a2, a3}; });
    if (positions.empty()) {
        return std::nullopt;
    }
    MonomialIndex top = positions.front();
    for (const auto& p : positions) {
        if (order.less(top, p)) {
            top = p;
        }
    }
    LaurentPoly c = element.coefficient(top);
    if (c.is_zero()) {
        return std::nullopt;
    }
    return LeadingTerm{top, c};
}

/// C(m,n)S_q(a2), expanded directly from the four-term shape.
inline Relator relator(int m, int n, int q) {
    if (m < 0 || q < 0) {
        throw std::invalid_argument("relator requires m >= 0 and q >= 0");
    }
    Relator r{Family::C, m, n, q, detail::four_terms(m, n, q, detail::place_c), std::nullopt};
    r.leading = relator_leading(Family::C, m, n, q, r.element);
    return r;
}

/// Cbar(q,n)S_m(a1).
inline Relator relator_bar(int q, int n, int m) {
    if (m < 0 || q < 0) {
        throw std::invalid_argument("relator_bar requires m >= 0 and q >= 0");
    }
    Relator r{Family::Cbar, m, n, q, detail::four_terms(q, n, m, detail::place_cbar), std::nullopt};
    r.leading = relator_leading(Family::Cbar, m, n, q, r.element);
    return r;
}

inline Relator make_relator(Family f, int m, int n, int q) { return f == Family::C ? relator(m, n, q) : relator_bar(q, n, m); }

/// Candidate rules for the first negative column P(m,-1), m >= 2, of the
/// appendix sequences. Only kink_form reproduces the closed form; the other
/// two are kept so the discrepancy can be reported.
enum class MinusOneRule {
    shifted_index,  // A P(m-1,0) a2 + A^-1 P(m-1,1)
    figure_index,   // A P(m,0) a2 + A^-1 P(m,1)
    kink_form,      // A P(m,1) - A^2 P(m,0) a3
};

inline const char* to_string(MinusOneRule r) {
    switch (r) {
        case MinusOneRule::shifted_index:
            return "shifted_index";
        case MinusOneRule::figure_index:
            return "figure_index";
        case MinusOneRule::kink_form:
            return "kink_form";
    }
    return "?";
}

/// Memo tables for the appendix sequences P, Q, PP, N, NN. Every value is
/// built by its own recurrence in the monomial basis; N and NN use the
/// mirrored recurrences rather than the mirror map, so N = mirror(P) is a
/// genuine check.
///
/// Not thread-safe; confine an instance to one computation.
class SequenceCache {
public:
    explicit SequenceCache(MinusOneRule rule = MinusOneRule::kink_form) : rule_(rule) {}

    MinusOneRule rule() const noexcept { return rule_; }

    const SkeinElement& p_seq(int m, int n) { return kink_seq(Kind::P, m, n); }
    const SkeinElement& q_seq(int m, int n) { return kink_seq(Kind::Q, m, n); }
    const SkeinElement& n_seq(int m, int n) { return kink_seq(Kind::N, m, n); }
    const SkeinElement& pp_seq(int m, int n) { return framed_seq(false, m, n); }
    const SkeinElement& nn_seq(int m, int n) { return framed_seq(true, m, n); }

    /// C(m,n) assembled from the sequences:
    ///   -A^3 P + A^-3 N for m, n >= 0;  P - N for m >= 1, n < 0;
    ///   C(0,n) = -C(0,-n) for n < 0;  C(m,n) = -C(-m,-n) for m < 0.
    /// Returned in the monomial basis.
    SkeinElement c_via_recurrence(int m, int n) {
        if (m < 0) {
            return -c_via_recurrence(-m, -n);
        }
        if (n >= 0) {
            return n_seq(m, n).shifted(-3) - p_seq(m, n).shifted(3);
        }
        if (m == 0) {
            return -c_via_recurrence(0, -n);
        }
        return p_seq(m, n) - n_seq(m, n);
    }

    void clear() {
        for (auto& t : kink_) {
            t.clear();
        }
        framed_[0].clear();
        framed_[1].clear();
    }

private:
    enum class Kind { P = 0, Q = 1, N = 2 };
    using Table = std::map<std::pair<int, int>, SkeinElement>;

    static SkeinElement mono(int i, int j, int k, const LaurentPoly& c) {
        return SkeinElement::basis_element({i, j, k}, c, Basis::monomial);
    }
    static LaurentPoly a(int e) { return LaurentPoly::power(e); }

    std::optional<SkeinElement> kink_initial(Kind kind, int m, int n) const {
        const int s = kind == Kind::N ? -1 : 1;
        if (kind == Kind::Q) {
            if (m == 0 && n == 0) {
                return mono(0, 0, 0, LaurentPoly::monomial(-1, -5));
            }
            if ((m == 1 && n == 0) || (m == 0 && n == 1)) {
                return SkeinElement(Basis::monomial);
            }
            if (m == 1 && n == 1) {
                return mono(0, 1, 0, LaurentPoly::monomial(-1, -1));
            }
            if (m == 1 && n == -1) {
                return mono(0, 1, 0, LaurentPoly(-1));
            }
            return std::nullopt;
        }
        if (m == 0 && n == 0) {
            // -A^-3(-A^2 - A^-2), or its mirror
            return mono(0, 0, 0, a(-s) + a(-5 * s));
        }
        if (m == 1 && n == 0) {
            return mono(1, 0, 0, 1);
        }
        if (m == 0 && n == 1) {
            return mono(0, 0, 1, 1);
        }
        if (m == 1 && n == 1) {
            return mono(1, 0, 1, a(s)) + mono(0, 1, 0, a(-s));
        }
        if (m == 1 && n == -1) {
            return mono(0, 1, 0, 1);
        }
        return std::nullopt;
    }

    const SkeinElement& kink_seq(Kind kind, int m, int n) {
        if (m < 0 || (n < 0 && m < 1)) {
            throw std::out_of_range("sequence index (" + std::to_string(m) + "," + std::to_string(n) +
                                    ") outside the recurrence domain");
        }
        Table& table = kink_[static_cast<int>(kind)];
        if (auto it = table.find({m, n}); it != table.end()) {
            return it->second;
        }
        SkeinElement v = kink_compute(kind, m, n);
        return table.emplace(std::pair{m, n}, std::move(v)).first->second;
    }

    SkeinElement kink_compute(Kind kind, int m, int n) {
        if (auto init = kink_initial(kind, m, n)) {
            return *init;
        }
        const int s = kind == Kind::N ? -1 : 1;
        auto X = [&](int mm, int nn) -> const SkeinElement& { return kink_seq(kind, mm, nn); };
        if (n == 0) {
            return a(s) * X(m - 1, 0).times(Variable::a1) - a(2 * s) * X(m - 2, 0);
        }
        if (n == 1) {
            if (m == 0) {
                throw std::logic_error("unreachable");
            }
            return a(s) * X(m, 0).times(Variable::a3) + X(m - 1, 0).times(Variable::a2) +
                   a(-2 * s) * X(m - 2, 1);
        }
        if (n >= 2) {
            return a(s) * X(m, n - 1).times(Variable::a3) - a(2 * s) * X(m, n - 2);
        }
        if (n == -1) {
            switch (rule_) {
                case MinusOneRule::shifted_index:
                    return a(s) * X(m - 1, 0).times(Variable::a2) + a(-s) * X(m - 1, 1);
                case MinusOneRule::figure_index:
                    return a(s) * X(m, 0).times(Variable::a2) + a(-s) * X(m, 1);
                case MinusOneRule::kink_form:
                    return a(s) * X(m, 1) - a(2 * s) * X(m, 0).times(Variable::a3);
            }
        }
        if (n == -2) {
            return a(s) * X(m, 0) + a(-s) * X(m, -1).times(Variable::a3);
        }
        return a(-s) * X(m, n + 1).times(Variable::a3) - a(-2 * s) * X(m, n + 2);
    }

    const SkeinElement& framed_seq(bool mirrored, int m, int n) {
        if (m < 0) {
            throw std::out_of_range("sequence index (" + std::to_string(m) + "," + std::to_string(n) +
                                    ") outside the recurrence domain");
        }
        Table& table = framed_[mirrored ? 1 : 0];
        if (auto it = table.find({m, n}); it != table.end()) {
            return it->second;
        }
        SkeinElement v = framed_compute(mirrored, m, n);
        return table.emplace(std::pair{m, n}, std::move(v)).first->second;
    }

    SkeinElement framed_compute(bool mirrored, int m, int n) {
        const int s = mirrored ? -1 : 1;
        auto X = [&](int mm, int nn) -> const SkeinElement& { return framed_seq(mirrored, mm, nn); };
        if (n >= 0 && m <= 1 && n <= 1) {
            return mono(m, 0, n, 1);
        }
        if (n == 0) {
            return X(m - 1, 0).times(Variable::a1) - X(m - 2, 0);
        }
        if (n == 1) {
            return X(m, 0).times(Variable::a3) + a(-2 * s) * X(m - 1, 0).times(Variable::a2) +
                   a(-4 * s) * X(m - 2, 1);
        }
        if (n >= 2) {
            return X(m, n - 1).times(Variable::a3) - X(m, n - 2);
        }
        if (n == -1) {
            return a(3 * s) * X(m, 1) - a(3 * s) * X(m, 0).times(Variable::a3);
        }
        if (n == -2) {
            return X(m, -1).times(Variable::a3) + a(3 * s) * X(m, 0);
        }
        return X(m, n + 1).times(Variable::a3) - X(m, n + 2);
    }

    MinusOneRule rule_;
    Table kink_[3];
    Table framed_[2];
};

/// For each rule, the parameters 1 <= m <= max_m, 1 <= k <= max_n at which
/// P(m,-k) - N(m,-k) disagrees with the closed form C(m,-k).
struct MinusOneRuleReport {
    MinusOneRule rule;
    std::vector<std::pair<int, int>> mismatches;
    bool matches() const { return mismatches.empty(); }
};

inline std::vector<MinusOneRuleReport> compare_minus_one_rules(int max_m, int max_n) {
    std::vector<MinusOneRuleReport> out;
    for (auto rule : {MinusOneRule::shifted_index, MinusOneRule::figure_index, MinusOneRule::kink_form}) {
        SequenceCache cache(rule);
        MinusOneRuleReport rep{rule, {}};
        for (int m = 1; m <= max_m; ++m) {
            for (int k = 1; k <= max_n; ++k) {
                if (!(cache.c_via_recurrence(m, -k) == to_monomial(c_closed(m, -k)))) {
                    rep.mismatches.emplace_back(m, -k);
                }
            }
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace skein

#endif
