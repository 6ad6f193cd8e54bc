#pragma once

// Monomial symmetric polynomials in Jucys-Murphy elements for S_3 and H_3:
// the coefficient table over Z S_3, its closed forms, relations and
// recurrences, and the classification of monomial bases of the centres.
//
// Rows of every S_3 column are the class sums Γ_{1,1,1}, Γ_{2,1}, Γ_3, read
// off at their minimal elements 1, s_1, s_1 s_2.

#include "hecke/center_basis.hpp"
#include "hecke/composition.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/integer.hpp"
#include "hecke/matrix.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke::s3 {

struct S3Coefficients {
    Integer gamma111;
    Integer gamma21;
    Integer gamma3;

    friend bool operator==(const S3Coefficients&, const S3Coefficients&) = default;
    friend S3Coefficients operator+(const S3Coefficients& a, const S3Coefficients& b) {
        return {a.gamma111 + b.gamma111, a.gamma21 + b.gamma21, a.gamma3 + b.gamma3};
    }
    friend S3Coefficients operator-(const S3Coefficients& a, const S3Coefficients& b) {
        return {a.gamma111 - b.gamma111, a.gamma21 - b.gamma21, a.gamma3 - b.gamma3};
    }
    friend S3Coefficients operator*(const Integer& s, const S3Coefficients& a) {
        return {s * a.gamma111, s * a.gamma21, s * a.gamma3};
    }
    const Integer& operator[](int row) const { return row == 0 ? gamma111 : row == 1 ? gamma21 : gamma3; }
    std::string to_string() const {
        return "(" + gamma111.str() + ", " + gamma21.str() + ", " + gamma3.str() + ")";
    }
};

/// Minimal elements of the three classes, in row order, and their lengths.
inline std::array<Permutation, 3> row_elements() {
    return {Permutation::identity(3), increasing_element(Composition{1}, 3), increasing_element(Composition{2}, 3)};
}
inline constexpr std::array<int, 3> kRowLengths = {0, 1, 2};

namespace detail {
inline void require_two_parts(const Composition& mu) {
    if (!mu.is_partition() || mu.length() > 2)
        throw std::invalid_argument("S_3 columns are indexed by partitions with at most two parts, got " + mu.to_string());
}

inline S3Coefficients read_column(const GroupAlgebraElement& h) {
    auto rows = row_elements();
    return {h.coeff(rows[0]), h.coeff(rows[1]), h.coeff(rows[2])};
}

inline Integer exact_quotient(const Integer& num, int den) {
    if (num % den != 0) throw std::logic_error("closed form is not integral");
    return num / den;
}
}  // namespace detail

/// Column of m_μ: specialize m_μ(L_1, L_2, L_3) from H_3 at xi = 0.
inline S3Coefficients c_column(const Composition& mu) {
    detail::require_two_parts(mu);
    return detail::read_column(specialize(eval_m(mu, 3)));
}

/// The same column through the commutative algebra generated by the two
/// nonzero Jucys-Murphy elements x = L_2, y = L_3 of Z S_3: m_i, m_{i,i} and
/// m_{i+j,i} are built from x^i + y^i (i <= 4) and xy using
///   m_i = m_2 m_{i-2} - m_{2,2} m_{i-4}  (i >= 5),
///   m_{i,i} = m_{1,1} m_{i-1,i-1},  m_{i+j,i} = m_{i,i} m_j.
class TwoVariableEvaluator {
public:
    TwoVariableEvaluator() : x_(jm<Integer>(2, 3)), y_(jm<Integer>(3, 3)) {}

    const GroupAlgebraElement& power_sum(int i) {
        if (auto it = power_.find(i); it != power_.end()) return it->second;
        GroupAlgebraElement v(3);
        if (i == 0) {
            v = GroupAlgebraElement::one(3) + GroupAlgebraElement::one(3);
        } else if (i <= 4) {
            GroupAlgebraElement xp = GroupAlgebraElement::one(3), yp = GroupAlgebraElement::one(3);
            for (int e = 0; e < i; ++e) xp = xp * x_, yp = yp * y_;
            v = xp + yp;
        } else {
            v = power_sum(2) * power_sum(i - 2) - diagonal(2) * power_sum(i - 4);
        }
        return power_.emplace(i, std::move(v)).first->second;
    }

    /// m_{i,i} (m_{0,0} = 1)
    const GroupAlgebraElement& diagonal(int i) {
        if (auto it = diag_.find(i); it != diag_.end()) return it->second;
        GroupAlgebraElement v = i == 0 ? GroupAlgebraElement::one(3) : x_ * y_;
        if (i >= 2) v = diagonal(1) * diagonal(i - 1);
        return diag_.emplace(i, std::move(v)).first->second;
    }

    GroupAlgebraElement monomial(const Composition& mu) {
        detail::require_two_parts(mu);
        if (mu.empty()) return GroupAlgebraElement::one(3);
        if (mu.length() == 1) return power_sum(mu[0]);
        const int i = mu[1];
        const int j = mu[0] - mu[1];
        if (j == 0) return diagonal(i);
        return diagonal(i) * power_sum(j);
    }

    S3Coefficients column(const Composition& mu) { return detail::read_column(monomial(mu)); }

private:
    GroupAlgebraElement x_, y_;
    std::map<int, GroupAlgebraElement> power_;
    std::map<int, GroupAlgebraElement> diag_;
};

/// Closed forms for m_i, i >= 1.
inline S3Coefficients closed_mi(int i) {
    if (i < 1) throw std::invalid_argument("closed_mi: i must be positive");
    const int s = sign_power(i);
    const Integer p = pow2(i);
    return {detail::exact_quotient((1 + s) * (p + 5), 6), detail::exact_quotient((1 - s) * (p + 1), 6),
            detail::exact_quotient((1 + s) * (p - 1), 6)};
}

/// Closed forms for m_{i,i}, i >= 1.
inline S3Coefficients closed_mii(int i) {
    if (i < 1) throw std::invalid_argument("closed_mii: i must be positive");
    const int s = sign_power(i);
    const Integer p = pow2(i);
    return {detail::exact_quotient(p + 2 * s, 3), 0, detail::exact_quotient(p - s, 3)};
}

/// Closed forms for m_{i+j,i}, i, j >= 1.
inline S3Coefficients closed_mij(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("closed_mij: i and j must be positive");
    const int si = sign_power(i);
    const int sj = sign_power(j);
    const Integer p = pow2(i + j) + pow2(i);
    return {detail::exact_quotient((1 + sj) * (p + 4 * si), 6), detail::exact_quotient((1 - sj) * p, 6),
            detail::exact_quotient((1 + sj) * (p - 2 * si), 6)};
}

/// Closed form for the column of any m_μ with 1 <= ℓ(μ) <= 2.
inline S3Coefficients closed_form(const Composition& mu) {
    detail::require_two_parts(mu);
    if (mu.length() == 1) return closed_mi(mu[0]);
    if (mu.length() == 2 && mu[0] == mu[1]) return closed_mii(mu[1]);
    if (mu.length() == 2) return closed_mij(mu[1], mu[0] - mu[1]);
    throw std::invalid_argument("closed_form: no closed form for the empty partition");
}

/// Partitions with at most two parts and size <= max_size, in composition order.
inline std::vector<Composition> column_labels(int max_size) {
    std::vector<Composition> out;
    for (int k = 0; k <= max_size; ++k)
        for (const auto& mu : enumerate_partitions(k, 2)) out.push_back(mu);
    return out;
}

using Column = std::pair<Composition, S3Coefficients>;

/// The coefficient table over Z S_3, columns in k-block order.
inline std::vector<Column> table(int max_size) {
    std::vector<Column> out;
    for (const auto& mu : column_labels(max_size)) out.emplace_back(mu, c_column(mu));
    return out;
}

/// Zero pattern: entries in rows whose minimal length has parity different
/// from |μ| vanish, for every column up to the bound.
inline bool check_parity(int bound) {
    for (const auto& mu : column_labels(bound)) {
        auto col = c_column(mu);
        for (int r = 0; r < 3; ++r)
            if ((kRowLengths[r] - mu.size()) % 2 != 0 && col[r] != 0) return false;
    }
    return true;
}

/// Bivariate integer polynomial in commuting x, y.
using Bivariate = std::map<std::pair<int, int>, Integer>;

namespace detail {
inline Bivariate biv_mul(const Bivariate& a, const Bivariate& b) {
    Bivariate out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}
inline Bivariate biv_sub(Bivariate a, const Bivariate& b) {
    for (const auto& [e, c] : b) a[e] -= c;
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    return a;
}
}  // namespace detail

/// m_μ(x, y) for a partition with at most two parts.
inline Bivariate monomial_xy(const Composition& mu) {
    detail::require_two_parts(mu);
    Bivariate out;
    if (mu.empty()) {
        out[{0, 0}] = 1;
    } else if (mu.length() == 1) {
        out[{mu[0], 0}] += 1;
        out[{0, mu[0]}] += 1;
    } else if (mu[0] == mu[1]) {
        out[{mu[0], mu[1]}] = 1;
    } else {
        out[{mu[0], mu[1]}] = 1;
        out[{mu[1], mu[0]}] = 1;
    }
    return out;
}

/// The three two-variable relations, checked symbolically for all sizes <= bound:
///   m_i = m_2 m_{i-2} - m_{2,2} m_{i-4} (i >= 5), m_{i,i} = m_{1,1} m_{i-1,i-1},
///   m_{i+j,i} = m_{i,i} m_j.
inline bool check_relations(int bound) {
    using C = Composition;
    for (int i = 5; i <= bound; ++i) {
        auto rhs = detail::biv_sub(detail::biv_mul(monomial_xy(C{2}), monomial_xy(C{i - 2})),
                                   detail::biv_mul(monomial_xy(C{2, 2}), monomial_xy(C{i - 4})));
        if (monomial_xy(C{i}) != rhs) return false;
    }
    for (int i = 2; 2 * i <= bound; ++i)
        if (monomial_xy(C{i, i}) != detail::biv_mul(monomial_xy(C{1, 1}), monomial_xy(C{i - 1, i - 1}))) return false;
    for (int i = 1; 2 * i + 1 <= bound; ++i)
        for (int j = 1; 2 * i + j <= bound; ++j)
            if (monomial_xy(C{i + j, i}) != detail::biv_mul(monomial_xy(C{i, i}), monomial_xy(C{j}))) return false;
    return true;
}

/// The recurrences on columns, for every instance whose terms have size <= bound:
///   m_i = 5 m_{i-2} - 4 m_{i-4} (i >= 5), m_{i,i} = m_{i-1,i-1} + 2 m_{i-2,i-2} (i >= 3),
///   m_{i+j,i} = 5 m_{i+j-2,i} - 4 m_{i+j-4,i} (i >= 1, j >= 5).
inline bool check_recurrences(int bound) {
    using C = Composition;
    std::map<Composition, S3Coefficients> col;
    for (const auto& mu : column_labels(bound)) col.emplace(mu, c_column(mu));
    for (int i = 5; i <= bound; ++i)
        if (col.at(C{i}) != 5 * col.at(C{i - 2}) - 4 * col.at(C{i - 4})) return false;
    for (int i = 3; 2 * i <= bound; ++i)
        if (col.at(C{i, i}) != col.at(C{i - 1, i - 1}) + 2 * col.at(C{i - 2, i - 2})) return false;
    for (int i = 1; 2 * i + 5 <= bound; ++i)
        for (int j = 5; 2 * i + j <= bound; ++j)
            if (col.at(C{i + j, i}) != 5 * col.at(C{i + j - 2, i}) - 4 * col.at(C{i + j - 4, i})) return false;
    return true;
}

/// ((-1)^{i+1} (4^j + 1) + 2^{i+1}) / 3: the determinant of the columns of
/// m_{2j} and m_{i,i} on the rows Γ_{1,1,1}, Γ_3.
inline Integer spanning_det(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("spanning_det: i and j must be positive");
    Integer num = sign_power(i + 1) * (pow2(2 * j) + 1) + pow2(i + 1);
    return detail::exact_quotient(num, 3);
}

/// The same determinant computed from the closed forms.
inline Integer spanning_det_from_closed_forms(int i, int j) {
    auto a = closed_mi(2 * j);
    auto b = closed_mii(i);
    return a.gamma111 * b.gamma3 - b.gamma111 * a.gamma3;
}

/// Determinant of three columns.
inline Integer det3(const S3Coefficients& a, const S3Coefficients& b, const S3Coefficients& c) {
    return a.gamma111 * (b.gamma21 * c.gamma3 - b.gamma3 * c.gamma21) -
           b.gamma111 * (a.gamma21 * c.gamma3 - a.gamma3 * c.gamma21) +
           c.gamma111 * (a.gamma21 * b.gamma3 - a.gamma3 * b.gamma21);
}

/// The candidate monomials up to the bound: m_∅ and every nonzero m_μ with
/// 1 <= ℓ(μ) <= 2, |μ| <= bound, with their columns.
inline std::vector<Column> candidate_columns(int bound) { return table(bound); }

using MonomialSet = std::vector<Composition>;

/// Every three-element set of candidate monomials whose transition to the
/// class sums is unimodular over Z. Columns whose entries share a common
/// factor cannot take part in a unimodular matrix and are pruned first.
inline std::vector<MonomialSet> enumerate_zs3_bases(int bound) {
    std::vector<Column> cols;
    for (auto& c : candidate_columns(bound)) {
        Integer g = gcd(gcd(c.second.gamma111, c.second.gamma21), c.second.gamma3);
        if (g == 1) cols.push_back(std::move(c));
    }
    std::vector<MonomialSet> out;
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = a + 1; b < cols.size(); ++b)
            for (std::size_t c = b + 1; c < cols.size(); ++c) {
                Integer d = det3(cols[a].second, cols[b].second, cols[c].second);
                if (d == 1 || d == -1) out.push_back({cols[a].first, cols[b].first, cols[c].first});
            }
    return out;
}

/// Monomials whose Γ_{2,1} coefficient is ±1.
inline std::vector<Composition> gamma21_unit_monomials(int bound) {
    std::vector<Composition> out;
    for (const auto& [mu, col] : candidate_columns(bound))
        if (col.gamma21 == 1 || col.gamma21 == -1) out.push_back(mu);
    return out;
}

/// Monomials whose Γ_3 coefficient is ±1.
inline std::vector<Composition> gamma3_unit_monomials(int bound) {
    std::vector<Composition> out;
    for (const auto& [mu, col] : candidate_columns(bound))
        if (col.gamma3 == 1 || col.gamma3 == -1) out.push_back(mu);
    return out;
}

/// Pairs of monomials that integrally span {Γ_{1,1,1}, Γ_3}: unimodular on
/// those two rows.
inline std::vector<MonomialSet> gamma111_gamma3_spanning_pairs(int bound) {
    auto cols = candidate_columns(bound);
    std::vector<MonomialSet> out;
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = a + 1; b < cols.size(); ++b) {
            const auto& x = cols[a].second;
            const auto& y = cols[b].second;
            Integer d = x.gamma111 * y.gamma3 - y.gamma111 * x.gamma3;
            if (d == 1 || d == -1) out.push_back({cols[a].first, cols[b].first});
        }
    return out;
}

/// Monomial columns over H_3 (exact in xi), rows Γ_{1,1,1}, Γ_{2,1}, Γ_3.
inline LabeledMatrix h3_table(const std::vector<Composition>& monomials) { return monomial_transition(monomials, 3); }

/// The five columns m_∅, m_1, m_2, m_{1,1}, m_{2,2} over H_3.
inline LabeledMatrix h3_table() {
    return h3_table({Composition{}, Composition{1}, Composition{2}, Composition{1, 1}, Composition{2, 2}});
}

/// Each Z S_3 monomial basis with the determinant of its H_3 transition.
inline std::vector<std::pair<MonomialSet, Poly>> h3_candidate_determinants(int bound = 8) {
    std::vector<std::pair<MonomialSet, Poly>> out;
    for (const auto& set : enumerate_zs3_bases(bound)) out.emplace_back(set, determinant(h3_table(set)));
    return out;
}

/// The monomial sets that are integral bases of Z(H_3): the Z S_3 bases
/// whose H_3 transition has a unit determinant.
inline std::vector<MonomialSet> h3_bases(int bound = 8) {
    std::vector<MonomialSet> out;
    for (const auto& [set, det] : h3_candidate_determinants(bound))
        if (det.is_unit()) out.push_back(set);
    return out;
}

/// The unique monomial basis of Z(H_3); throws if the search does not
/// produce exactly one.
inline MonomialSet h3_unique_basis() {
    auto all = h3_bases();
    if (all.size() != 1) throw std::logic_error("h3_unique_basis: expected exactly one survivor, found " + std::to_string(all.size()));
    return all.front();
}

}  // namespace hecke::s3
