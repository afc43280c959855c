#ifndef SKEIN_WITNESS_HPP
#define SKEIN_WITNESS_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "field.hpp"
#include "relators.hpp"
#include "skein_element.hpp"

namespace skein {

/// A coefficient of an element that survives at A = 1 or A = -1. Every
/// relator coefficient vanishes at both points, so such a coefficient shows
/// the element is nonzero modulo the relators.
struct NonzeroWitness {
    int a_value;
    MonomialIndex monomial;
    Int value;
};

/// Searches A = 1 first, then A = -1, monomials from the top of the order
/// down. Returns nullopt when every coefficient vanishes at both points,
/// which is inconclusive.
inline std::optional<NonzeroWitness> certify_nonzero_mod_relations(const SkeinElement& e) {
    SkeinElement c = to_chebyshev(e);
    std::vector<MonomialIndex> order;
    for (const auto& [idx, coeff] : c.terms()) {
        order.push_back(idx);
    }
    MonomialOrder mo;
    std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) { return mo.less(y, x); });
    for (int sign : {1, -1}) {
        for (const auto& idx : order) {
            Int v = evaluate_at_unit(c.coefficient(idx), sign);
            if (v != 0) {
                return NonzeroWitness{sign, idx, v};
            }
        }
    }
    return std::nullopt;
}

}  // namespace skein

#endif
