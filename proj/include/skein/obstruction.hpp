#ifndef SKEIN_OBSTRUCTION_HPP
#define SKEIN_OBSTRUCTION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "relators.hpp"
#include "skein_element.hpp"
#include "witness.hpp"

namespace skein {

/// alpha_{n1,n3,n2} is the image of S_{n1}(a1)S_{n3}(a3)S_{n2}(a2). Keys use
/// the Chebyshev triple (n1, n2, n3) = (i, j, k).
inline MonomialIndex alpha_index(int n1, int n3, int n2) { return {n1, n2, n3}; }

inline std::string alpha_name(const MonomialIndex& idx) {
    return "alpha_{" + std::to_string(idx.i) + "," + std::to_string(idx.k) + "," + std::to_string(idx.j) + "}";
}

/// sum f_idx(A) alpha_idx = 0
struct AlphaConstraint {
    std::map<MonomialIndex, LaurentPoly> terms;

    friend bool operator==(const AlphaConstraint&, const AlphaConstraint&) = default;

    void add(const MonomialIndex& idx, const LaurentPoly& c) {
        if (c.is_zero()) {
            return;
        }
        LaurentPoly& slot = terms[idx];
        slot += c;
        if (slot.is_zero()) {
            terms.erase(idx);
        }
    }

    std::string to_string() const {
        if (terms.empty()) {
            return "0 = 0";
        }
        std::string out;
        for (const auto& [idx, c] : terms) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + c.to_string() + ")*" + alpha_name(idx);
        }
        return out + " = 0";
    }
};

inline AlphaConstraint extract_constraint(const Relator& r) {
    AlphaConstraint c;
    for (const auto& [idx, coeff] : r.element.terms()) {
        c.terms.emplace(idx, coeff);
    }
    return c;
}

enum class Justification { domain_cancellation, substitution, breadth };

inline const char* to_string(Justification j) {
    switch (j) {
        case Justification::domain_cancellation:
            return "domain-cancellation";
        case Justification::substitution:
            return "substitution";
        case Justification::breadth:
            return "breadth";
    }
    return "?";
}

struct DescentStep {
    std::string tag;
    Family family;
    int m, n, q;
    AlphaConstraint constraint;
    /// Facts alpha = 0 substituted into the constraint.
    std::vector<MonomialIndex> substituted;
    /// What remains after substitution.
    AlphaConstraint reduced;
    std::string fact;
    Justification justification;
    /// The nonzero multiplier cancelled, or u_n for a recurrence link.
    LaurentPoly multiplier;
    /// v_n for a recurrence link, zero otherwise.
    LaurentPoly partner;
    /// Induction quantity 2m + n for diagonal facts, -1 otherwise.
    int t = -1;
};

struct BreadthLink {
    int n;
    int breadth_u;
    int breadth_v;
    int decrement() const { return breadth_u - breadth_v; }
};

struct DescentCertificate {
    int depth = 0;
    /// alpha_{0,0,0} is the image of the empty link, nonzero in the quotient.
    NonzeroWitness base;
    std::vector<DescentStep> steps;
    std::vector<BreadthLink> breadth_chain;
    /// Places where a cited vanishing fact is used at the edge of its range.
    std::vector<std::string> tight_edges;
};

class DescentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline LaurentPoly gk(int k) { return antisymmetric_unit(k); }

// Adds c * S_{n1}(a1)S_{n3}(a3)S_{n2}(a2) with index reflection.
inline void add_alpha(AlphaConstraint& a, int n1, int n3, int n2, const LaurentPoly& c) {
    const SkeinElement e = chebyshev_term(n1, n2, n3, c);
    for (const auto& [idx, v] : e.terms()) {
        a.add(idx, v);
    }
}

class DescentBuilder {
public:
    DescentBuilder(int depth, bool full_range) : depth_(depth), full_range_(full_range) {}

    DescentCertificate run() {
        DescentCertificate cert;
        cert.depth = depth_;
        auto base = certify_nonzero_mod_relations(SkeinElement::constant(1));
        if (!base) {
            throw DescentError("empty link has no nonzero witness");
        }
        cert.base = *base;

        // Collect the diagonal facts alpha_{m,m,k} = 0 (k > m) that the links need.
        std::set<std::pair<int, int>> diag;
        for (int n = 1; n <= depth_; ++n) {
            demand(diag, n - 1, n + 1);
            demand(diag, n - 2, n);
        }
        if (full_range_) {
            // Every alpha_{m,m,k}, k > m, up to the largest t on the demand path.
            int t_max = 0;
            for (const auto& [m, k] : diag) {
                t_max = std::max(t_max, 2 * m + k);
            }
            for (int m = 0; 3 * m < t_max; ++m) {
                for (int k = m + 1; 2 * m + k <= t_max; ++k) {
                    diag.insert({m, k});
                }
            }
        }
        int axis_top = 0;
        for (const auto& [m, k] : diag) {
            if (m == 0) {
                axis_top = std::max(axis_top, k);
            }
        }
        axis_top = std::max(axis_top, 2);
        for (int k = 1; k <= axis_top; ++k) {
            cert.steps.push_back(axis_step(k));
        }
        std::vector<std::pair<int, int>> rest;
        for (const auto& mk : diag) {
            if (mk.first >= 1) {
                rest.push_back(mk);
            }
        }
        std::sort(rest.begin(), rest.end(), [](const auto& x, const auto& y) {
            return std::pair{2 * x.first + x.second, x.first} < std::pair{2 * y.first + y.second, y.first};
        });
        for (const auto& [m, k] : rest) {
            cert.steps.push_back(diagonal_step(m, k, cert.tight_edges));
        }
        for (int n = 1; n <= depth_; ++n) {
            cert.steps.push_back(link_step(n));
            const DescentStep& s = cert.steps.back();
            cert.breadth_chain.push_back({n, breadth(s.multiplier), breadth(s.partner)});
            if (cert.breadth_chain.back().decrement() != 4) {
                throw DescentError("breadth link " + std::to_string(n) + " does not drop by 4");
            }
        }
        return cert;
    }

private:
    void demand(std::set<std::pair<int, int>>& diag, int m, int k) {
        if (m < 0 || !diag.insert({m, k}).second) {
            return;
        }
        if (m == 0) {
            return;  // the axis steps cover every k up to the largest demanded
        }
        if (m == 1) {
            demand(diag, 0, k + 1);
            demand(diag, 0, k - 1);
            return;
        }
        demand(diag, m - 1, k + 1);
        demand(diag, m - 1, k - 1);
        demand(diag, m - 2, k);
    }

    bool known_zero(const MonomialIndex& idx) const { return zero_.count(idx) > 0; }

    // Checks the transcribed constraint against the stated one, substitutes
    // known vanishing alphas and returns the remainder.
    DescentStep make_step(const std::string& tag, const Relator& r, const AlphaConstraint& stated) {
        DescentStep s{tag, r.family, r.m, r.n, r.q, extract_constraint(r), {}, {}, "", Justification::domain_cancellation,
                      LaurentPoly{}, LaurentPoly{}, -1};
        if (!(s.constraint == stated)) {
            throw DescentError(tag + ": " + r.label() + " gives " + s.constraint.to_string() + " but the stated form is " +
                               stated.to_string());
        }
        for (const auto& [idx, c] : s.constraint.terms) {
            if (known_zero(idx)) {
                s.substituted.push_back(idx);
            } else {
                s.reduced.terms.emplace(idx, c);
            }
        }
        for (const auto& [idx, c] : s.reduced.terms) {
            if (evaluate_at_unit(c, 1) != 0 || evaluate_at_unit(c, -1) != 0) {
                throw DescentError(tag + ": coefficient " + c.to_string() + " does not vanish at A = +-1");
            }
        }
        return s;
    }

    // Finishes a vanishing step: exactly `target` must remain, with a nonzero
    // coefficient that the integral domain lets us cancel.
    DescentStep conclude_zero(DescentStep s, const MonomialIndex& target) {
        if (s.reduced.terms.size() != 1 || s.reduced.terms.begin()->first != target) {
            throw DescentError(s.tag + ": after substitution expected only " + alpha_name(target) + ", got " +
                               s.reduced.to_string());
        }
        s.multiplier = s.reduced.terms.begin()->second;
        if (s.multiplier.is_zero()) {
            throw DescentError(s.tag + ": cancelled multiplier is zero");
        }
        s.justification = Justification::domain_cancellation;
        s.fact = alpha_name(target) + " = 0";
        zero_.insert(target);
        return s;
    }

    // Cbar(k,0)S_0(a1): g(k+2) alpha_{0,0,k} - g(k-2) alpha_{0,0,k-2} = 0.
    DescentStep axis_step(int k) {
        AlphaConstraint stated;
        add_alpha(stated, 0, 0, k, gk(k + 2));
        add_alpha(stated, 0, 0, k - 2, -gk(k - 2));
        return conclude_zero(make_step("axis-a2-vanishing", relator_bar(k, 0, 0), stated), alpha_index(0, 0, k));
    }

    // C(m,m)S_k(a2):
    //   g(2m+2) alpha_{m,m,k} + g(2m) (alpha_{m-1,m-1,k+1} + alpha_{m-1,m-1,k-1})
    //   + g(2m-2) alpha_{m-2,m-2,k} = 0
    static AlphaConstraint diagonal_form(int m, int k) {
        AlphaConstraint stated;
        add_alpha(stated, m, m, k, gk(2 * m + 2));
        add_alpha(stated, m - 1, m - 1, k + 1, gk(2 * m));
        add_alpha(stated, m - 1, m - 1, k - 1, gk(2 * m));
        add_alpha(stated, m - 2, m - 2, k, gk(2 * m - 2));
        return stated;
    }

    DescentStep diagonal_step(int m, int k, std::vector<std::string>& tight) {
        const std::string tag = m == 1 ? "a1a3-diagonal-vanishing" : "diagonal-vanishing";
        DescentStep s = make_step(tag, relator(m, m, k), diagonal_form(m, k));
        s.t = 2 * m + k;
        if (m == 2 && k == 3) {
            tight.push_back(tag + " t=" + std::to_string(s.t) + ": uses alpha_{1,1,2} = 0, the smallest case of " +
                            "the a1a3 vanishing range (n >= 2)");
        }
        if (m == 1 && k == 2) {
            tight.push_back(tag + " t=4: uses alpha_{0,0,1} = 0, which needs the separate k = 1 axis step");
        }
        return conclude_zero(std::move(s), alpha_index(m, m, k));
    }

    // C(n,n)S_n(a2) reduces to u_n alpha_{n,n,n} + v_n alpha_{n-1,n-1,n-1} = 0.
    DescentStep link_step(int n) {
        DescentStep s = make_step("diagonal-recurrence", relator(n, n, n), diagonal_form(n, n));
        const MonomialIndex top = alpha_index(n, n, n);
        const MonomialIndex below = alpha_index(n - 1, n - 1, n - 1);
        if (s.reduced.terms.size() != 2 || !s.reduced.terms.count(top) || !s.reduced.terms.count(below)) {
            throw DescentError("diagonal-recurrence n=" + std::to_string(n) + ": unexpected remainder " +
                               s.reduced.to_string());
        }
        const LaurentPoly u = s.reduced.terms.at(top);
        const LaurentPoly v = s.reduced.terms.at(below);
        if (!(u == gk(2 * n + 2)) || !(v == gk(2 * n))) {
            throw DescentError("diagonal-recurrence n=" + std::to_string(n) + ": multipliers " + u.to_string() + ", " +
                               v.to_string());
        }
        s.multiplier = u;
        s.partner = v;
        s.justification = Justification::breadth;
        s.fact = "breadth(" + alpha_name(top) + ") = breadth(" + alpha_name(below) + ") - " +
                 std::to_string(breadth(u) - breadth(v));
        return s;
    }

    int depth_;
    bool full_range_;
    std::set<MonomialIndex> zero_;
};

}  // namespace detail

/// Replays the non-splitting descent up to the given depth. By default only
/// the vanishing facts the recurrence links depend on are derived; with
/// full_range every alpha_{m,m,k} = 0 (k > m) up to the same induction bound
/// is derived as well. Throws DescentError on the first step that does not
/// check.
inline DescentCertificate verify_descent(int depth, bool full_range = false) {
    if (depth < 1) {
        throw std::invalid_argument("descent depth must be at least 1");
    }
    return detail::DescentBuilder(depth, full_range).run();
}

}  // namespace skein

#endif
