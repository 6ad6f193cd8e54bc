#pragma once

// An integral basis of Z(H_n) made of Z[xi]-combinations of monomial
// symmetric polynomials in Jucys-Murphy elements:
//
//     M_λ = sum over μ ⊢ |λ| of N^(|λ|)_{μ,λ} m_μ,   |λ| + ℓ(λ) <= n,
//
// and recovery of the Geck-Rouquier class elements Γ_μ from it by exact
// triangular inversion.
//
// Class elements Γ_μ (μ ⊢ n) are ordered, and matrix rows labelled, by the
// shape μ-1 of their minimal elements, so Γ_{bar(λ)} sits in the row of λ.

#include "hecke/composition.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/matrix.hpp"
#include "hecke/matrix_store.hpp"
#include "hecke/permutation.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

using Expansion = std::vector<std::pair<Composition, Poly>>;

/// A central element with its symbolic expansion in monomials m_μ and,
/// when known, in class elements Γ_ν.
struct CentralElement {
    Composition label;
    HeckeElement value;
    Expansion monomial_coeffs;
    Expansion gamma_coeffs;
};

/// Partitions of n in the order of their minimal shapes μ-1.
inline std::vector<Composition> gamma_order(int n) {
    std::vector<Composition> shapes;
    for (const auto& mu : enumerate_partitions(n)) shapes.push_back(minus_one(mu));
    std::sort(shapes.begin(), shapes.end());
    std::vector<Composition> out;
    for (const auto& s : shapes) out.push_back(bar(s, n));
    return out;
}

/// Shapes λ with |λ| + ℓ(λ) <= n, in composition order; these index the basis.
inline std::vector<Composition> basis_shapes(int n) {
    std::vector<Composition> out;
    for (int k = 0; k < n; ++k)
        for (const auto& lambda : enumerate_partitions(k))
            if (lambda.size() + lambda.length() <= n) out.push_back(lambda);
    return out;
}

/// Memoised m_μ(L_1..L_n) for one rank.
class MonomialCache {
public:
    explicit MonomialCache(int n) : n_(n) {}
    int rank() const noexcept { return n_; }
    const HeckeElement& get(const Composition& mu) {
        auto it = cache_.find(mu);
        if (it == cache_.end()) it = cache_.emplace(mu, eval_m(mu, n_)).first;
        return it->second;
    }

private:
    int n_;
    std::map<Composition, HeckeElement> cache_;
};

/// Evaluates a monomial expansion sum c_μ m_μ in H_n.
inline HeckeElement evaluate_monomials(const Expansion& e, MonomialCache& monomials) {
    HeckeElement out(monomials.rank());
    for (const auto& [mu, c] : e)
        if (!c.is_zero()) out += monomials.get(mu) * c;
    return out;
}

/// Coefficient of each Γ_μ (μ ⊢ n) in a central element: <T_w, h> for w the
/// increasing element of shape μ-1.
inline Expansion expand_in_gamma(const HeckeElement& h) {
    const int n = h.rank();
    Expansion out;
    for (const auto& mu : gamma_order(n)) out.emplace_back(mu, h.coeff(increasing_element(minus_one(mu), n)));
    return out;
}

inline Expansion expand_in_gamma(const CentralElement& h) { return expand_in_gamma(h.value); }

/// M_λ in H_n, read from column λ of N^(|λ|).
inline CentralElement script_m(const Composition& lambda, int n, MatrixStore& store, MonomialCache& monomials) {
    if (!lambda.is_partition()) throw std::invalid_argument("script_m: " + lambda.to_string() + " is not a partition");
    if (lambda.size() + lambda.length() > n)
        throw std::invalid_argument("script_m: shape " + lambda.to_string() + " is not realizable in S_" + std::to_string(n));
    if (monomials.rank() != n) throw std::invalid_argument("script_m: monomial cache has the wrong rank");
    const LabeledMatrix& nk = store.n(lambda.size());
    CentralElement out{lambda, HeckeElement(n), {}, {}};
    auto col = nk.col_index(lambda).value();
    for (std::size_t i = 0; i < nk.nrows(); ++i)
        if (!nk.at(i, col).is_zero()) out.monomial_coeffs.emplace_back(nk.row_labels()[i], nk.at(i, col));
    out.value = evaluate_monomials(out.monomial_coeffs, monomials);
    out.gamma_coeffs = expand_in_gamma(out.value);
    return out;
}

inline CentralElement script_m(const Composition& lambda, int n, MatrixStore& store) {
    MonomialCache monomials(n);
    return script_m(lambda, n, store, monomials);
}

/// The basis {M_λ : |λ| + ℓ(λ) <= n} in composition order of λ.
inline std::vector<CentralElement> basis(int n, MatrixStore& store) {
    if (n < 1) throw std::invalid_argument("basis: rank must be positive");
    MonomialCache monomials(n);
    std::vector<CentralElement> out;
    for (const auto& lambda : basis_shapes(n)) out.push_back(script_m(lambda, n, store, monomials));
    return out;
}

/// Transition matrix of a family of central elements to the Γ basis: rows
/// are labelled by minimal shapes μ-1, columns by the given labels.
inline LabeledMatrix gamma_transition(const std::vector<HeckeElement>& elems, const std::vector<Composition>& labels) {
    if (elems.empty()) throw std::invalid_argument("gamma_transition: empty family");
    const int n = elems.front().rank();
    std::vector<Composition> rows;
    for (const auto& mu : gamma_order(n)) rows.push_back(minus_one(mu));
    LabeledMatrix t(rows, labels);
    for (std::size_t j = 0; j < elems.size(); ++j) {
        auto e = expand_in_gamma(elems[j]);
        for (std::size_t i = 0; i < e.size(); ++i) t.at(i, j) = e[i].second;
    }
    return t;
}

/// Γ_μ for every μ ⊢ n (in gamma_order), obtained as M C^{-1} where C is the
/// transition from the basis to the Γ's. Each carries its monomial expansion.
inline std::vector<CentralElement> gamma_basis(int n, MatrixStore& store) {
    auto b = basis(n, store);
    std::vector<HeckeElement> values;
    std::vector<Composition> labels;
    for (const auto& e : b) values.push_back(e.value), labels.push_back(e.label);
    LabeledMatrix inv = invert_exact(gamma_transition(values, labels));  // rows: λ, cols: μ-1

    MonomialCache monomials(n);
    std::vector<CentralElement> out;
    auto order = gamma_order(n);
    for (std::size_t j = 0; j < order.size(); ++j) {
        std::map<Composition, Poly> mono;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const Poly& c = inv.at(i, j);
            if (c.is_zero()) continue;
            for (const auto& [mu, coef] : b[i].monomial_coeffs) mono[mu] += c * coef;
        }
        CentralElement g{order[j], HeckeElement(n), {}, {}};
        for (auto& [mu, c] : mono)
            if (!c.is_zero()) g.monomial_coeffs.emplace_back(mu, std::move(c));
        g.value = evaluate_monomials(g.monomial_coeffs, monomials);
        g.gamma_coeffs = {{order[j], Poly(1)}};
        out.push_back(std::move(g));
    }
    return out;
}

/// Checks the two defining properties of the class element Γ_μ: it
/// specializes at xi = 0 to the class sum of C_μ, and among minimal-length
/// elements of every class only those of C_μ appear, each with coefficient 1.
inline bool verify_gamma(const HeckeElement& g, const Composition& mu) {
    const int n = g.rank();
    if (!mu.is_partition() || mu.size() != n) return false;
    if (specialize(g) != class_sum(mu)) return false;
    for (const auto& nu : enumerate_partitions(n))
        for (const auto& w : minimal_class_elements(nu))
            if (g.coeff(w) != Poly(nu == mu ? 1 : 0)) return false;
    return true;
}

inline bool verify_gamma(const CentralElement& g, const Composition& mu) { return verify_gamma(g.value, mu); }

/// Transition of the monomials m_λ (λ in the given list) to the Γ basis of Z(H_n).
inline LabeledMatrix monomial_transition(const std::vector<Composition>& partitions, int n) {
    MonomialCache monomials(n);
    std::vector<HeckeElement> values;
    for (const auto& p : partitions) values.push_back(monomials.get(p));
    return gamma_transition(values, partitions);
}

/// {m_∅, m_1, m_2} in H_3 against {Γ_{1,1,1}, Γ_{2,1}, Γ_3}.
inline LabeledMatrix counterexample_matrix() {
    return monomial_transition({Composition{}, Composition{1}, Composition{2}}, 3);
}

/// Whether the monomials m_λ form an integral basis of Z(H_n): the
/// transition to the Γ basis must have unit determinant.
inline bool check_monomial_set(const std::vector<Composition>& partitions, int n) {
    if (static_cast<int>(partitions.size()) != static_cast<int>(enumerate_partitions(n).size()))
        throw std::invalid_argument("check_monomial_set: need exactly as many monomials as partitions of n");
    return determinant(monomial_transition(partitions, n)).is_unit();
}

}  // namespace hecke
