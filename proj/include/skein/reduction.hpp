#ifndef SKEIN_REDUCTION_HPP
#define SKEIN_REDUCTION_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "field.hpp"
#include "laurent.hpp"
#include "relators.hpp"
#include "skein_element.hpp"

namespace skein {

/// Indexed list of relators. Relators with a nondegenerate lead are indexed
/// by their leading monomial; when two relators share a lead the first one
/// added keeps the slot and the later one stays unindexed.
class RelatorSet {
public:
    explicit RelatorSet(MonomialOrder order = {}) : order_(order) {}

    std::size_t add(Relator r) {
        std::size_t id = relators_.size();
        if (r.leading) {
            index_.try_emplace(r.leading->monomial, id);
        }
        relators_.push_back(std::move(r));
        return id;
    }

    const std::vector<Relator>& relators() const noexcept { return relators_; }
    const Relator& operator[](std::size_t id) const { return relators_.at(id); }
    std::size_t size() const noexcept { return relators_.size(); }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::map<MonomialIndex, std::size_t>& index() const noexcept { return index_; }

    std::optional<std::size_t> lookup(const MonomialIndex& lead) const {
        auto it = index_.find(lead);
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    /// C(k,0) for 1 <= k <= max_k: the two-term relators along the a1 axis.
    static RelatorSet a1_line(int max_k) {
        RelatorSet rs;
        for (int k = 1; k <= max_k; ++k) {
            rs.add(relator(k, 0, 0));
        }
        return rs;
    }

    /// Both families over 0 <= m, q <= max_mq and |n| <= max_n, family C
    /// first, skipping zero relators.
    static RelatorSet box(int max_mq, int max_n) {
        RelatorSet rs;
        for (Family f : {Family::C, Family::Cbar}) {
            for (int m = 0; m <= max_mq; ++m) {
                for (int n = -max_n; n <= max_n; ++n) {
                    for (int q = 0; q <= max_mq; ++q) {
                        Relator r = make_relator(f, m, n, q);
                        if (!r.element.is_zero()) {
                            rs.add(std::move(r));
                        }
                    }
                }
            }
        }
        return rs;
    }

private:
    MonomialOrder order_;
    std::vector<Relator> relators_;
    std::map<MonomialIndex, std::size_t> index_;
};

struct ReductionStep {
    std::size_t relator_id;
    LaurentPoly multiplier;
    MonomialIndex eliminated;
};

/// input = residue + sum of multiplier * relator over the steps.
struct ReductionCertificate {
    SkeinElement input{Basis::chebyshev};
    std::vector<ReductionStep> steps;
    SkeinElement residue{Basis::chebyshev};

    bool certifies_membership() const { return residue.is_zero(); }

    /// Re-expands the steps against `rs` and checks the defining identity.
    bool verify(const RelatorSet& rs) const {
        SkeinElement total = residue;
        for (const auto& s : steps) {
            if (s.relator_id >= rs.size()) {
                return false;
            }
            total += s.multiplier * rs[s.relator_id].element;
        }
        return total == input;
    }
};

/// Leading-term reduction. At each step the largest monomial of the current
/// residue that is an indexed lead is eliminated, provided its coefficient is
/// an exact multiple of the lead coefficient; otherwise reduction stops.
/// A zero residue proves membership in the span; a nonzero one proves nothing.
inline ReductionCertificate reduce(const SkeinElement& e, const RelatorSet& rs) {
    ReductionCertificate cert;
    cert.input = to_chebyshev(e);
    SkeinElement residue = cert.input;
    const MonomialOrder& order = rs.order();
    while (true) {
        std::optional<MonomialIndex> best;
        for (const auto& [idx, c] : residue.terms()) {
            if (rs.lookup(idx) && (!best || order.less(*best, idx))) {
                best = idx;
            }
        }
        if (!best) {
            break;
        }
        const std::size_t id = *rs.lookup(*best);
        const LeadingTerm& lead = *rs[id].leading;
        auto mult = divide_exact(residue.coefficient(*best), lead.coefficient);
        if (!mult) {
            break;
        }
        residue -= *mult * rs[id].element;
        cert.steps.push_back({id, *mult, *best});
    }
    cert.residue = std::move(residue);
    return cert;
}

/// Triangular reduction along the a1 axis by C(k,0), k descending. The input
/// must be supported on {S_k(a1)}.
inline ReductionCertificate reduce_a1_line(const SkeinElement& e) {
    SkeinElement c = to_chebyshev(e);
    int top = 0;
    for (const auto& [idx, coeff] : c.terms()) {
        if (idx.j != 0 || idx.k != 0) {
            throw std::invalid_argument("reduce_a1_line: term " + idx.to_string() + " is off the a1 axis");
        }
        top = std::max(top, idx.i);
    }
    return reduce(c, RelatorSet::a1_line(top));
}

// ---------------------------------------------------------------------------
// Rank experiments

/// Nonzero relators of both families whose support lies in total degree
/// <= max_degree, in a fixed order (family, m, n, q).
inline std::vector<Relator> relators_up_to_degree(int max_degree) {
    if (max_degree < 0) {
        throw std::invalid_argument("degree bound must be nonnegative");
    }
    std::vector<Relator> out;
    const int b = max_degree + 2;
    for (Family f : {Family::C, Family::Cbar}) {
        for (int m = 0; m <= b; ++m) {
            for (int n = -b; n <= b; ++n) {
                for (int q = 0; q <= b; ++q) {
                    Relator r = make_relator(f, m, n, q);
                    if (!r.element.is_zero() && r.element.max_degree() <= max_degree) {
                        out.push_back(std::move(r));
                    }
                }
            }
        }
    }
    return out;
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. The
/// pivot is always the first row, in current order, with a nonzero entry in
/// the pivot column.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> M) {
    const std::size_t rows = M.size();
    if (rows == 0) {
        return 0;
    }
    const std::size_t cols = M[0].size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(M[r], M[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = M[r][c] * M[i][j] - M[i][c] * M[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = std::move(v);
            }
            M[i][c] = 0;
        }
        prev = M[r][c];
        ++r;
    }
    return r;
}

/// Rank over a field by Gaussian elimination with the same pivot rule.
template <class Field>
std::size_t field_rank(std::vector<std::vector<typename Field::value_type>> M, const Field& F) {
    const std::size_t rows = M.size();
    if (rows == 0) {
        return 0;
    }
    const std::size_t cols = M[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && F.is_zero(M[p][c])) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(M[r], M[p]);
        auto inv = F.inverse(M[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (F.is_zero(M[i][c])) {
                continue;
            }
            auto f = F.mul(M[i][c], inv);
            for (std::size_t j = c; j < cols; ++j) {
                M[i][j] = F.sub(M[i][j], F.mul(f, M[r][j]));
            }
        }
        ++r;
    }
    return r;
}

struct RankRow {
    int degree;
    std::size_t relators;
    std::size_t rank;
};

namespace detail {

// Columns: all Chebyshev triples of total degree <= D in a fixed order.
inline std::map<MonomialIndex, std::size_t> columns_up_to(int D) {
    std::map<MonomialIndex, std::size_t> cols;
    for (int i = 0; i <= D; ++i) {
        for (int j = 0; i + j <= D; ++j) {
            for (int k = 0; i + j + k <= D; ++k) {
                cols.emplace(MonomialIndex{i, j, k}, cols.size());
            }
        }
    }
    return cols;
}

// Calls rank_of(relators) for each D' = 0..D on the nested relator lists.
template <class RankOf>
std::vector<RankRow> rank_table_impl(int D, RankOf rank_of) {
    std::vector<Relator> all = relators_up_to_degree(D);
    std::vector<RankRow> out;
    for (int d = 0; d <= D; ++d) {
        std::vector<const Relator*> rows;
        for (const auto& r : all) {
            if (r.element.max_degree() <= d) {
                rows.push_back(&r);
            }
        }
        out.push_back({d, rows.size(), rank_of(rows, d)});
    }
    return out;
}

}  // namespace detail

/// Rank table over Q at A = num/den.
inline std::vector<RankRow> rank_table_rational(const Int& num, const Int& den, int D) {
    if (num == 0) {
        throw std::domain_error("A must be nonzero");
    }
    if (den == 0) {
        throw std::domain_error("denominator must be nonzero");
    }
    RationalField Q;
    mpq_class x(num, den);
    x.canonicalize();
    return detail::rank_table_impl(D, [&](const std::vector<const Relator*>& rows, int d) {
        auto cols = detail::columns_up_to(d);
        std::vector<std::vector<mpz_class>> M;
        for (const Relator* r : rows) {
            std::vector<mpq_class> row(cols.size(), mpq_class(0));
            for (const auto& [idx, v] : evaluate(r->element, x, Q)) {
                row[cols.at(idx)] = v;
            }
            mpz_class l = 1;
            for (const auto& v : row) {
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
            }
            std::vector<mpz_class> irow;
            irow.reserve(row.size());
            for (const auto& v : row) {
                irow.emplace_back(v.get_num() * (l / v.get_den()));
            }
            M.push_back(std::move(irow));
        }
        return bareiss_rank(std::move(M));
    });
}

/// Rank table over GF(p) at A = a.
inline std::vector<RankRow> rank_table_prime(const PrimeField& F, PrimeField::value_type a, int D) {
    a %= F.modulus();
    if (a == 0) {
        throw std::domain_error("A must be nonzero in " + F.describe());
    }
    return detail::rank_table_impl(D, [&](const std::vector<const Relator*>& rows, int d) {
        auto cols = detail::columns_up_to(d);
        std::vector<std::vector<PrimeField::value_type>> M;
        for (const Relator* r : rows) {
            std::vector<PrimeField::value_type> row(cols.size(), 0);
            for (const auto& [idx, v] : evaluate(r->element, a, F)) {
                row[cols.at(idx)] = v;
            }
            M.push_back(std::move(row));
        }
        return field_rank(std::move(M), F);
    });
}

inline std::string rank_table_csv(const std::vector<RankRow>& rows) {
    std::string out = "D,relators,rank\n";
    for (const auto& r : rows) {
        out += std::to_string(r.degree) + "," + std::to_string(r.relators) + "," + std::to_string(r.rank) + "\n";
    }
    return out;
}

}  // namespace skein

#endif
