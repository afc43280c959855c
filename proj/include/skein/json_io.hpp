#ifndef SKEIN_JSON_IO_HPP
#define SKEIN_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "obstruction.hpp"
#include "reduction.hpp"
#include "relators.hpp"
#include "skein_element.hpp"
#include "torsion.hpp"
#include "witness.hpp"

namespace skein::io {

using json = nlohmann::ordered_json;

// Integers that fit in 64 bits are written as JSON numbers, larger ones as
// decimal strings.
inline json to_json(const Int& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) {
        return static_cast<long long>(v.get_si());
    }
    return v.get_str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) {
        return Int(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        Int v;
        if (v.set_str(j.get<std::string>(), 10) != 0) {
            throw std::invalid_argument("bad integer literal '" + j.get<std::string>() + "'");
        }
        return v;
    }
    throw std::invalid_argument("expected an integer");
}

/// [[exponent, coefficient], ...], exponents ascending.
inline json to_json(const LaurentPoly& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms()) {
        a.push_back(json::array({e, to_json(c)}));
    }
    return a;
}

inline LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("Laurent polynomial must be an array of [exponent, coefficient] pairs");
    }
    LaurentPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) {
            throw std::invalid_argument("bad Laurent term " + t.dump());
        }
        p.add_term(t[0].get<int>(), int_from_json(t[1]));
    }
    return p;
}

inline json to_json(const MonomialIndex& m) { return json::array({m.i, m.j, m.k}); }

inline json to_json(const SkeinElement& e) {
    json terms = json::array();
    for (const auto& [idx, c] : e.terms()) {
        terms.push_back({{"i", idx.i}, {"j", idx.j}, {"k", idx.k}, {"coeff", to_json(c)}});
    }
    return {{"basis", to_string(e.basis())}, {"terms", terms}};
}

inline SkeinElement element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms")) {
        throw std::invalid_argument("element must be an object with 'basis' and 'terms'");
    }
    const std::string b = j.at("basis").get<std::string>();
    Basis basis;
    if (b == "chebyshev") {
        basis = Basis::chebyshev;
    } else if (b == "monomial") {
        basis = Basis::monomial;
    } else {
        throw std::invalid_argument("unknown basis '" + b + "'");
    }
    SkeinElement e(basis);
    for (const auto& t : j.at("terms")) {
        e.add_term({t.at("i").get<int>(), t.at("j").get<int>(), t.at("k").get<int>()}, laurent_from_json(t.at("coeff")));
    }
    return e;
}

inline json relator_header(const Relator& r) {
    return {{"family", to_string(r.family)}, {"m", r.m}, {"n", r.n}, {"q", r.q}};
}

inline json to_json(const Relator& r) {
    json j = relator_header(r);
    json e = to_json(r.element);
    j["basis"] = e["basis"];
    j["terms"] = e["terms"];
    if (r.leading) {
        j["leading"] = {{"monomial", to_json(r.leading->monomial)}, {"coeff", to_json(r.leading->coefficient)}};
    } else {
        j["leading"] = nullptr;
    }
    return j;
}

inline json to_json(const ReductionCertificate& c, const RelatorSet& rs) {
    json steps = json::array();
    for (const auto& s : c.steps) {
        steps.push_back({{"relator", relator_header(rs[s.relator_id])},
                         {"relator_id", s.relator_id},
                         {"multiplier", to_json(s.multiplier)},
                         {"eliminated", to_json(s.eliminated)}});
    }
    return {{"input", to_json(c.input)},
            {"steps", steps},
            {"residue", to_json(c.residue)},
            {"membership", c.certifies_membership()}};
}

inline json to_json(const NonzeroWitness& w) {
    return {{"A", w.a_value}, {"monomial", to_json(w.monomial)}, {"value", to_json(w.value)}};
}

inline json to_json(const TorsionCertificate& c) {
    json strict = json::array();
    for (const auto& s : c.strictness) {
        strict.push_back({{"factor", to_json(s.factor)}, {"witness", to_json(s.witness)}});
    }
    return {{"kind", c.kind},
            {"params", c.params},
            {"element", to_json(c.element)},
            {"annihilator", to_json(c.annihilator)},
            {"witness_kind", c.kind == "tau" ? "identity" : "reduction"},
            {"membership", to_json(c.membership, c.relators)},
            {"nonzero", to_json(c.nonzero)},
            {"strictness", strict}};
}

inline json to_json(const AlphaConstraint& a) {
    json terms = json::array();
    for (const auto& [idx, c] : a.terms) {
        terms.push_back({{"alpha", json::array({idx.i, idx.k, idx.j})}, {"coeff", to_json(c)}});
    }
    return terms;
}

inline json to_json(const DescentCertificate& c) {
    json steps = json::array();
    for (const auto& s : c.steps) {
        json subst = json::array();
        for (const auto& idx : s.substituted) {
            subst.push_back(json::array({idx.i, idx.k, idx.j}));
        }
        json step = {{"tag", s.tag},
                     {"relator", {{"family", to_string(s.family)}, {"m", s.m}, {"n", s.n}, {"q", s.q}}},
                     {"constraint", to_json(s.constraint)},
                     {"substituted_zero", subst},
                     {"reduced", to_json(s.reduced)},
                     {"fact", s.fact},
                     {"justification", to_string(s.justification)},
                     {"multiplier", to_json(s.multiplier)}};
        if (!s.partner.is_zero()) {
            step["partner"] = to_json(s.partner);
        }
        if (s.t >= 0) {
            step["t"] = s.t;
        }
        steps.push_back(std::move(step));
    }
    json chain = json::array();
    for (const auto& l : c.breadth_chain) {
        chain.push_back({{"n", l.n}, {"breadth_u", l.breadth_u}, {"breadth_v", l.breadth_v}, {"decrement", l.decrement()}});
    }
    return {{"depth", c.depth},
            {"base_nonzero", to_json(c.base)},
            {"steps", steps},
            {"breadth_chain", chain},
            {"tight_edges", c.tight_edges}};
}

}  // namespace skein::io

#endif
