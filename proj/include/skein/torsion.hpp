#ifndef SKEIN_TORSION_HPP
#define SKEIN_TORSION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "reduction.hpp"
#include "relators.hpp"
#include "skein_element.hpp"
#include "witness.hpp"

namespace skein {

/// Balanced geometric sum A^{-k+1} + A^{-k+3} + ... + A^{k-1} for k >= 1,
/// extended oddly: geo(0) = 0, geo(-k) = -geo(k). (-A + A^-1) geo(k) equals
/// -A^k + A^-k for every k.
inline LaurentPoly geo(int k) {
    if (k < 0) {
        return -geo(-k);
    }
    LaurentPoly p;
    for (int i = 0; i < k; ++i) {
        p.add_term(-k + 1 + 2 * i, 1);
    }
    return p;
}

/// -A + A^-1
inline LaurentPoly unit_difference() { return antisymmetric_unit(1); }

/// tau_{m,n,q}: the relator C(m,n)S_q(a2) with every -A^k + A^-k replaced by
/// geo(k), so that (-A + A^-1) tau = C(m,n)S_q(a2).
inline SkeinElement tau(int m, int n, int q) {
    if (m < 0 || q < 0) {
        throw std::invalid_argument("tau requires m >= 0 and q >= 0");
    }
    return detail::four_terms(m, n, q, detail::place_c, geo);
}

/// e'_1 = S_1(a1), e'_2 = S_2(a1), e'_i = S_i(a1) + e'_{i-2}.
inline SkeinElement eprime(int i) {
    if (i <= 0) {
        throw std::invalid_argument("eprime requires i >= 1");
    }
    SkeinElement e(Basis::chebyshev);
    for (int k = i; k >= 1; k -= 2) {
        e.add_term({k, 0, 0}, 1);
    }
    return e;
}

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evidence that `factor * element` is still nonzero modulo the relators.
struct StrictnessWitness {
    LaurentPoly factor;
    NonzeroWitness witness;
};

struct TorsionCertificate {
    std::string kind;  // "tau" or "eprime"
    std::vector<int> params;
    SkeinElement element{Basis::chebyshev};
    LaurentPoly annihilator;
    /// Relators used by `membership`.
    RelatorSet relators;
    /// annihilator * element = sum of multiplier * relator, residue zero.
    ReductionCertificate membership;
    NonzeroWitness nonzero;
    std::vector<StrictnessWitness> strictness;

    /// Replays every claim from scratch.
    bool verify() const {
        if (!membership.residue.is_zero() || !membership.verify(relators)) {
            return false;
        }
        if (!(membership.input == annihilator * element)) {
            return false;
        }
        auto w = certify_nonzero_mod_relations(element);
        if (!w || w->value == 0 || evaluate_at_unit(element.coefficient(nonzero.monomial), nonzero.a_value) != nonzero.value) {
            return false;
        }
        for (const auto& s : strictness) {
            SkeinElement fe = s.factor * element;
            if (s.witness.value == 0 ||
                evaluate_at_unit(fe.coefficient(s.witness.monomial), s.witness.a_value) != s.witness.value) {
                return false;
            }
        }
        return true;
    }
};

/// Certifies that tau_{m,n,q} is a nonzero (1 - A^2)-torsion element.
/// 1 - A^2 = A (-A + A^-1), so membership is a single step against
/// C(m,n)S_q(a2) with multiplier A.
inline TorsionCertificate certify_tau(int m, int n, int q) {
    if (m == 0 && n == 0) {
        throw std::invalid_argument("certify_tau requires (m,n) != (0,0)");
    }
    TorsionCertificate cert;
    cert.kind = "tau";
    cert.params = {m, n, q};
    cert.element = tau(m, n, q);
    if (cert.element.is_zero()) {
        throw CertificateError("tau(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(q) +
                               ") is identically zero");
    }
    Relator r = relator(m, n, q);
    if (!(unit_difference() * cert.element == r.element)) {
        throw CertificateError("(-A+A^-1) tau does not equal the relator " + r.label());
    }
    cert.annihilator = LaurentPoly{{0, 1}, {2, -1}};
    const std::size_t id = cert.relators.add(r);
    cert.membership.input = cert.annihilator * cert.element;
    cert.membership.steps.push_back({id, LaurentPoly::power(1), r.leading ? r.leading->monomial : MonomialIndex{}});
    cert.membership.residue = cert.membership.input - LaurentPoly::power(1) * r.element;
    if (!cert.membership.residue.is_zero()) {
        throw CertificateError("annihilator identity failed for " + r.label());
    }
    auto w = certify_nonzero_mod_relations(cert.element);
    if (!w) {
        throw CertificateError("no nonzero witness for tau at A = 1 or A = -1");
    }
    cert.nonzero = *w;
    for (const LaurentPoly& f : {LaurentPoly{{0, 1}, {1, 1}}, LaurentPoly{{0, 1}, {1, -1}}}) {
        auto sw = certify_nonzero_mod_relations(f * cert.element);
        if (!sw) {
            throw CertificateError("(" + f.to_string() + ") tau has no nonzero witness");
        }
        cert.strictness.push_back({f, *sw});
    }
    return cert;
}

/// Certifies that e'_i is a nonzero (1 - A^{2i+4})-torsion element by
/// reducing (1 - A^{2i+4}) e'_i along the a1 axis.
inline TorsionCertificate certify_eprime(int i) {
    TorsionCertificate cert;
    cert.kind = "eprime";
    cert.params = {i};
    cert.element = eprime(i);
    cert.annihilator = LaurentPoly{{0, 1}, {2 * i + 4, -1}};
    cert.relators = RelatorSet::a1_line(i);
    cert.membership = reduce(cert.annihilator * cert.element, cert.relators);
    if (!cert.membership.residue.is_zero()) {
        throw CertificateError("(1-A^" + std::to_string(2 * i + 4) + ") e'_" + std::to_string(i) +
                               " left residue " + cert.membership.residue.to_string());
    }
    auto w = certify_nonzero_mod_relations(cert.element);
    if (!w) {
        throw CertificateError("no nonzero witness for e'");
    }
    cert.nonzero = *w;
    return cert;
}

}  // namespace skein

#endif
