#ifndef SKEIN_VERIFY_HPP
#define SKEIN_VERIFY_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "reduction.hpp"
#include "relators.hpp"
#include "skein_element.hpp"
#include "torsion.hpp"
#include "witness.hpp"

namespace skein {

/// One identity family checked over a parameter range.
struct IdentityCheck {
    std::string tag;
    std::size_t cases = 0;
    std::optional<std::string> counterexample;
    bool passed() const { return !counterexample.has_value(); }
};

struct VerifyReport {
    std::string suite;
    std::vector<IdentityCheck> checks;
    std::vector<std::string> notes;

    bool passed() const {
        for (const auto& c : checks) {
            if (!c.passed()) {
                return false;
            }
        }
        return true;
    }
};

/// Seed for randomized checks: SKEIN_SEED if set and numeric, else `fallback`.
inline std::uint64_t seed_from_env(std::uint64_t fallback) {
    if (const char* s = std::getenv("SKEIN_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0') {
            return v;
        }
    }
    return fallback;
}

namespace detail {

// Runs `holds(args...)` over a range; the first failure is recorded.
class CheckRunner {
public:
    explicit CheckRunner(std::string tag) { check_.tag = std::move(tag); }

    template <class F>
    void expect(bool ok, F describe) {
        ++check_.cases;
        if (!ok && !check_.counterexample) {
            check_.counterexample = describe();
        }
    }

    IdentityCheck done() { return std::move(check_); }

private:
    IdentityCheck check_;
};

inline std::string mn(int m, int n) { return "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

inline SkeinElement s3(int k) { return to_monomial(chebyshev_term(0, 0, k)); }

}  // namespace detail

/// Closed forms against the appendix recurrences, and the appendix lemmas.
/// C is checked on 0 <= m <= max_m (and the negatives), |n| <= max_n; the
/// lemma identities on 2 <= m <= max_m, |n| <= max_n.
inline VerifyReport verify_appendix(int max_m, int max_n) {
    using detail::CheckRunner;
    using detail::mn;
    VerifyReport rep{"appendix", {}, {}};
    SequenceCache seq;
    auto A = [](int e) { return LaurentPoly::power(e); };

    CheckRunner closed("closed form of C equals the recurrence route");
    for (int m = -max_m; m <= max_m; ++m) {
        for (int n = -max_n; n <= max_n; ++n) {
            closed.expect(seq.c_via_recurrence(m, n) == to_monomial(c_closed(m, n)), [&] { return mn(m, n); });
        }
    }
    rep.checks.push_back(closed.done());

    CheckRunner pq("PP(m,n) = A^(-m-n+1) (P + Q), n >= 0");
    CheckRunner q6("Q(m,n) = A^(m+n-5) PP(m-2,n), n >= 0");
    CheckRunner p6("P(m,n) = A^(m+n-1) PP(m,n) - A^(m+n-5) PP(m-2,n), n >= 0");
    CheckRunner l8("PP(m,n) = PP(m,1) S_(n-1)(a3) - PP(m,0) S_(n-2)(a3)");
    CheckRunner pqn("PP(m,-n) = A^(-m+n+1) (P + Q)");
    CheckRunner q10("Q(m,-n) = A^(m-n-5) PP(m-2,-n)");
    CheckRunner p10("P(m,-n) = A^(m-n-1) PP(m,-n) - A^(m-n-5) PP(m-2,-n)");
    CheckRunner l12a("PP(m,-n) = S_(n-2)(a3) PP(m,-2) - S_(n-3)(a3) PP(m,-1), n >= 3");
    CheckRunner l12b("PP(m,-n) = A^3 PP(m,1) S_(n-1)(a3) - A^3 PP(m,0) S_n(a3)");
    CheckRunner n11("N(m,n) = A^(-m-n+1) NN(m,n) - A^(-m-n+5) NN(m-2,n), all signs of n");
    for (int m = 2; m <= max_m; ++m) {
        for (int n = 0; n <= max_n; ++n) {
            const auto& P = seq.p_seq(m, n);
            const auto& Q = seq.q_seq(m, n);
            const auto& PP = seq.pp_seq(m, n);
            pq.expect(PP == A(-m - n + 1) * (P + Q), [&] { return mn(m, n); });
            q6.expect(Q == A(m + n - 5) * seq.pp_seq(m - 2, n), [&] { return mn(m, n); });
            p6.expect(P == A(m + n - 1) * PP - A(m + n - 5) * seq.pp_seq(m - 2, n), [&] { return mn(m, n); });
            l8.expect(PP == seq.pp_seq(m, 1) * detail::s3(n - 1) - seq.pp_seq(m, 0) * detail::s3(n - 2),
                      [&] { return mn(m, n); });
            n11.expect(seq.n_seq(m, n) == A(-m - n + 1) * seq.nn_seq(m, n) - A(-m - n + 5) * seq.nn_seq(m - 2, n),
                       [&] { return mn(m, n); });
        }
        for (int k = 1; k <= max_n; ++k) {
            const auto& P = seq.p_seq(m, -k);
            const auto& Q = seq.q_seq(m, -k);
            const auto& PP = seq.pp_seq(m, -k);
            pqn.expect(PP == A(-m + k + 1) * (P + Q), [&] { return mn(m, -k); });
            q10.expect(Q == A(m - k - 5) * seq.pp_seq(m - 2, -k), [&] { return mn(m, -k); });
            p10.expect(P == A(m - k - 1) * PP - A(m - k - 5) * seq.pp_seq(m - 2, -k), [&] { return mn(m, -k); });
            if (k >= 3) {
                l12a.expect(PP == seq.pp_seq(m, -2) * detail::s3(k - 2) - seq.pp_seq(m, -1) * detail::s3(k - 3),
                            [&] { return mn(m, -k); });
            }
            l12b.expect(PP == A(3) * (seq.pp_seq(m, 1) * detail::s3(k - 1)) - A(3) * (seq.pp_seq(m, 0) * detail::s3(k)),
                        [&] { return mn(m, -k); });
            n11.expect(seq.n_seq(m, -k) == A(-m + k + 1) * seq.nn_seq(m, -k) - A(-m + k + 5) * seq.nn_seq(m - 2, -k),
                       [&] { return mn(m, -k); });
        }
    }
    for (auto* c : {&pq, &q6, &p6, &l8, &pqn, &q10, &p10, &l12a, &l12b, &n11}) {
        rep.checks.push_back(c->done());
    }

    CheckRunner pm0("PP(m,0) = S_m(a1)");
    for (int m = 0; m <= max_m; ++m) {
        pm0.expect(seq.pp_seq(m, 0) == to_monomial(chebyshev_term(m, 0, 0)), [&] { return mn(m, 0); });
    }
    rep.checks.push_back(pm0.done());

    for (const auto& r : compare_minus_one_rules(std::min(max_m, 4), std::min(max_n, 4))) {
        rep.notes.push_back(std::string("P(m,-1) rule ") + to_string(r.rule) + ": " +
                            (r.matches() ? "matches the closed form"
                                         : std::to_string(r.mismatches.size()) + " mismatches on m,n <= 4"));
    }
    return rep;
}

/// N = mirror(P), NN = mirror(PP) on 0 <= m <= max_m, |n| <= max_n (within
/// each sequence's domain), and mirror(C) = -C.
inline VerifyReport verify_mirror(int max_m, int max_n) {
    using detail::CheckRunner;
    using detail::mn;
    VerifyReport rep{"mirror", {}, {}};
    SequenceCache seq;
    CheckRunner np("N = mirror(P)");
    CheckRunner nnpp("NN = mirror(PP)");
    CheckRunner cm("mirror(C(m,n)) = -C(m,n)");
    for (int m = 0; m <= max_m; ++m) {
        for (int n = -max_n; n <= max_n; ++n) {
            if (n >= 0 || m >= 1) {
                np.expect(seq.n_seq(m, n) == mirror(seq.p_seq(m, n)), [&] { return mn(m, n); });
            }
            nnpp.expect(seq.nn_seq(m, n) == mirror(seq.pp_seq(m, n)), [&] { return mn(m, n); });
            SkeinElement c = c_closed(m, n);
            cm.expect(mirror(c) == -c, [&] { return mn(m, n); });
        }
    }
    rep.checks.push_back(np.done());
    rep.checks.push_back(nnpp.done());
    rep.checks.push_back(cm.done());
    return rep;
}

/// C(m,n) + C(-m,-n) = 0 and Cbar(q,n) + Cbar(-q,-n) = 0 for |m|, |q| <= max_m,
/// |n| <= max_n; every relator vanishes at A = +-1.
inline VerifyReport verify_antisymmetry(int max_m, int max_n, int max_q = 0) {
    using detail::CheckRunner;
    using detail::mn;
    VerifyReport rep{"antisymmetry", {}, {}};
    CheckRunner c("C(m,n) + C(-m,-n) = 0");
    CheckRunner cb("Cbar(q,n) + Cbar(-q,-n) = 0");
    for (int m = -max_m; m <= max_m; ++m) {
        for (int n = -max_n; n <= max_n; ++n) {
            c.expect((c_closed(m, n) + c_closed(-m, -n)).is_zero(), [&] { return mn(m, n); });
            cb.expect((cbar_closed(m, n) + cbar_closed(-m, -n)).is_zero(), [&] { return "(q,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")"; });
        }
    }
    rep.checks.push_back(c.done());
    rep.checks.push_back(cb.done());
    CheckRunner v("relators vanish at A = 1 and A = -1");
    for (Family f : {Family::C, Family::Cbar}) {
        for (int m = 0; m <= max_m; ++m) {
            for (int n = -max_n; n <= max_n; ++n) {
                for (int q = 0; q <= max_q; ++q) {
                    Relator r = make_relator(f, m, n, q);
                    v.expect(evaluate_at_unit(r.element, 1).empty() && evaluate_at_unit(r.element, -1).empty(),
                             [&] { return r.label(); });
                }
            }
        }
    }
    rep.checks.push_back(v.done());
    return rep;
}

/// Torsion identities and certificates on 0 <= m <= max_m, |n| <= max_n,
/// 0 <= q <= max_q, and the e' family for 1 <= i <= max_i.
inline VerifyReport verify_torsion(int max_m, int max_n, int max_q, int max_i) {
    using detail::CheckRunner;
    VerifyReport rep{"torsion", {}, {}};
    CheckRunner id("(-A+A^-1) tau(m,n,q) = C(m,n)S_q(a2)");
    CheckRunner top("tau at A=1 has m+n+2 at S_m(a1)S_n(a3)S_q(a2), n >= 0");
    CheckRunner cert("tau certificates verify, or tau is identically zero and is rejected");
    std::size_t issued = 0;
    std::size_t rejected = 0;
    for (int m = 0; m <= max_m; ++m) {
        for (int n = -max_n; n <= max_n; ++n) {
            for (int q = 0; q <= max_q; ++q) {
                auto label = [&] {
                    return "(m,n,q)=(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(q) + ")";
                };
                SkeinElement t = tau(m, n, q);
                id.expect(unit_difference() * t == relator(m, n, q).element, label);
                if (m == 0 && n == 0) {
                    continue;
                }
                if (n >= 0) {
                    top.expect(evaluate_at_unit(t.coefficient({m, q, n}), 1) == m + n + 2, label);
                }
                bool ok = false;
                try {
                    ok = certify_tau(m, n, q).verify();
                    ++issued;
                } catch (const CertificateError&) {
                    ok = t.is_zero();
                    ++rejected;
                }
                cert.expect(ok, label);
            }
        }
    }
    rep.checks.push_back(id.done());
    rep.checks.push_back(top.done());
    rep.checks.push_back(cert.done());
    CheckRunner ep("(1-A^(2i+4)) e'_i reduces to zero along the a1 axis");
    for (int i = 1; i <= max_i; ++i) {
        bool ok = false;
        try {
            ok = certify_eprime(i).verify();
        } catch (const CertificateError&) {
            ok = false;
        }
        ep.expect(ok, [&] { return "i=" + std::to_string(i); });
    }
    rep.checks.push_back(ep.done());
    rep.notes.push_back("tau certificates issued: " + std::to_string(issued) + ", zero tau rejected: " +
                        std::to_string(rejected));
    return rep;
}

/// Random Z[A^{+-1}]-combination of indexed relators of `rs`: up to
/// `max_terms` relators, multipliers with up to three terms, exponents in
/// [-4,4] and coefficients in [-5,5].
inline SkeinElement random_relator_combination(const RelatorSet& rs, std::mt19937_64& rng, int max_terms = 4) {
    std::vector<std::size_t> ids;
    for (const auto& [lead, id] : rs.index()) {
        ids.push_back(id);
    }
    SkeinElement e(Basis::chebyshev);
    if (ids.empty()) {
        return e;
    }
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> expo(-4, 4);
    std::uniform_int_distribution<int> coef(-5, 5);
    const int k = count(rng);
    for (int t = 0; t < k; ++t) {
        LaurentPoly mult;
        const int nt = nterms(rng);
        for (int s = 0; s < nt; ++s) {
            mult.add_term(expo(rng), coef(rng));
        }
        e += mult * rs[ids[pick(rng)]].element;
    }
    return e;
}

/// Reduces `samples` random relator combinations: each must reduce to zero
/// with a certificate that re-expands exactly, and must have no nonzero
/// witness at A = +-1.
inline VerifyReport verify_span(std::size_t samples, std::uint64_t seed, int box_mq = 4, int box_n = 4) {
    using detail::CheckRunner;
    VerifyReport rep{"span", {}, {}};
    rep.notes.push_back("seed " + std::to_string(seed));
    RelatorSet rs = RelatorSet::box(box_mq, box_n);
    std::mt19937_64 rng(seed);
    CheckRunner red("random relator combinations reduce to zero");
    CheckRunner sound("reduction certificates re-expand exactly");
    CheckRunner wit("no nonzero witness on relator combinations");
    for (std::size_t s = 0; s < samples; ++s) {
        SkeinElement e = random_relator_combination(rs, rng);
        ReductionCertificate c = reduce(e, rs);
        auto label = [&] { return "sample " + std::to_string(s) + ": " + e.to_string(); };
        red.expect(c.residue.is_zero(), label);
        sound.expect(c.verify(rs), label);
        wit.expect(!certify_nonzero_mod_relations(e).has_value(), label);
    }
    rep.checks.push_back(red.done());
    rep.checks.push_back(sound.done());
    rep.checks.push_back(wit.done());
    return rep;
}

}  // namespace skein

#endif
