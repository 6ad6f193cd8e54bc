#pragma once

// Arithmetic in the Hecke algebra H_n over Z[xi] in the basis T_w, with the
// quadratic relation T_w T_s = T_{ws} + xi T_w when l(ws) < l(w).
//
// BasicHeckeElement is templated on the coefficient ring: Poly gives H_n,
// Integer gives the group algebra Z S_n (the relation's xi term vanishes).

#include "hecke/composition.hpp"
#include "hecke/permutation.hpp"
#include "hecke/poly.hpp"

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hecke {

template <class Coeff>
class BasicHeckeElement {
public:
    using coefficient_type = Coeff;

    /// The zero element of rank n.
    explicit BasicHeckeElement(int n) : BasicHeckeElement(SymmetricGroup::get(n)) {}
    explicit BasicHeckeElement(std::shared_ptr<const SymmetricGroup> group)
        : group_(std::move(group)), coeffs_(group_->order()) {}

    /// T_w
    static BasicHeckeElement basis(const Permutation& w) {
        BasicHeckeElement h(w.rank());
        h.coeffs_[h.group_->index_of(w)] = Coeff(1);
        return h;
    }
    /// T_1
    static BasicHeckeElement one(int n) { return basis(Permutation::identity(n)); }

    int rank() const noexcept { return group_->rank(); }
    const SymmetricGroup& group() const noexcept { return *group_; }
    const std::shared_ptr<const SymmetricGroup>& group_ptr() const noexcept { return group_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!hecke::is_zero(c)) return false;
        return true;
    }

    /// Coefficient of T_w (zero if absent).
    const Coeff& coeff(const Permutation& w) const {
        if (w.rank() != rank()) throw std::invalid_argument("coeff: rank mismatch");
        return coeffs_[group_->index_of(w)];
    }
    const Coeff& coeff_at(std::size_t idx) const { return coeffs_[idx]; }
    void set_coeff(const Permutation& w, Coeff c) { coeffs_[group_->index_of(w)] = std::move(c); }

    /// Nonzero terms sorted by (length, one-line order).
    std::vector<std::pair<Permutation, Coeff>> terms() const {
        std::vector<std::pair<Permutation, Coeff>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!hecke::is_zero(coeffs_[i])) out.emplace_back(group_->element(i), coeffs_[i]);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }
    std::size_t support_size() const {
        std::size_t s = 0;
        for (const auto& c : coeffs_)
            if (!hecke::is_zero(c)) ++s;
        return s;
    }

    /// Right multiplication by T_{s_i}.
    BasicHeckeElement mul_gen(int i) const {
        if (i < 1 || i >= rank()) throw std::out_of_range("mul_gen: generator index out of range");
        BasicHeckeElement out(group_);
        // out[v] = c[v s] + [l(vs) < l(v)] xi c[v]
        for (std::size_t v = 0; v < coeffs_.size(); ++v) {
            const Coeff& from = coeffs_[group_->right_gen(v, i)];
            if (group_->descent(v, i) && !hecke::is_zero(coeffs_[v])) {
                out.coeffs_[v] = from;
                out.coeffs_[v] += times_xi(coeffs_[v]);
            } else {
                out.coeffs_[v] = from;
            }
        }
        return out;
    }

    /// Right multiplication by T_w, folding mul_gen along a reduced word.
    BasicHeckeElement mul_basis(const Permutation& w) const {
        BasicHeckeElement out = *this;
        for (int i : w.reduced_word()) out = out.mul_gen(i);
        return out;
    }

    BasicHeckeElement& operator+=(const BasicHeckeElement& o) {
        check_rank(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!hecke::is_zero(o.coeffs_[i])) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    BasicHeckeElement& operator-=(const BasicHeckeElement& o) {
        check_rank(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!hecke::is_zero(o.coeffs_[i])) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    BasicHeckeElement& operator*=(const Coeff& s) {
        for (auto& c : coeffs_)
            if (!hecke::is_zero(c)) c = c * s;
        return *this;
    }

    friend BasicHeckeElement operator+(BasicHeckeElement a, const BasicHeckeElement& b) { return a += b; }
    friend BasicHeckeElement operator-(BasicHeckeElement a, const BasicHeckeElement& b) { return a -= b; }
    friend BasicHeckeElement operator*(BasicHeckeElement a, const Coeff& s) { return a *= s; }
    friend BasicHeckeElement operator*(const Coeff& s, BasicHeckeElement a) { return a *= s; }

    /// Product in the algebra: expand each T_v of the right factor as a
    /// reduced word and fold mul_gen.
    friend BasicHeckeElement operator*(const BasicHeckeElement& a, const BasicHeckeElement& b) {
        a.check_rank(b);
        BasicHeckeElement out(a.group_);
        for (std::size_t v = 0; v < b.coeffs_.size(); ++v) {
            if (hecke::is_zero(b.coeffs_[v])) continue;
            out += a.mul_basis(a.group_->element(v)) * b.coeffs_[v];
        }
        return out;
    }

    friend bool operator==(const BasicHeckeElement& a, const BasicHeckeElement& b) {
        return a.rank() == b.rank() && a.coeffs_ == b.coeffs_;
    }

private:
    void check_rank(const BasicHeckeElement& o) const {
        if (o.rank() != rank()) throw std::invalid_argument("Hecke element rank mismatch");
    }

    std::shared_ptr<const SymmetricGroup> group_;
    std::vector<Coeff> coeffs_;
};

using HeckeElement = BasicHeckeElement<Poly>;
using GroupAlgebraElement = BasicHeckeElement<Integer>;

template <class C>
BasicHeckeElement<C> multiply(const BasicHeckeElement<C>& a, const BasicHeckeElement<C>& b) {
    return a * b;
}

template <class C>
BasicHeckeElement<C> mul_gen(const BasicHeckeElement<C>& h, int i) {
    return h.mul_gen(i);
}

template <class C = Poly>
BasicHeckeElement<C> basis_element(const Permutation& w) {
    return BasicHeckeElement<C>::basis(w);
}

/// L_i = sum over j < i of T_{(j i)}; L_1 = 0.
template <class C = Poly>
BasicHeckeElement<C> jm(int i, int n) {
    if (i < 1 || i > n) throw std::out_of_range("jm: index out of range");
    BasicHeckeElement<C> out(n);
    for (int j = 1; j < i; ++j) out += BasicHeckeElement<C>::basis(Permutation::transposition(j, i, n));
    return out;
}

/// h * L_j using L_{j+1} = T_{s_j} L_j T_{s_j} + T_{s_j}, which costs
/// 3(j-2)+1 generator multiplications instead of (j-1)^2.
template <class C>
BasicHeckeElement<C> mul_jm(const BasicHeckeElement<C>& h, int j) {
    if (j < 1 || j > h.rank()) throw std::out_of_range("mul_jm: index out of range");
    if (j == 1) return BasicHeckeElement<C>(h.group_ptr());
    BasicHeckeElement<C> hs = h.mul_gen(j - 1);
    if (j == 2) return hs;
    return mul_jm(hs, j - 1).mul_gen(j - 1) + hs;
}

/// p^λ(L_1..L_n): sum over strictly increasing index tuples of
/// L_{j1}^{λ1} ... L_{jr}^{λr}. Evaluated by the prefix recursion
/// Q_r(j) = Q_r(j-1) + Q_{r-1}(j-1) L_j^{λ_r} over the first j variables.
template <class C = Poly>
BasicHeckeElement<C> eval_p(const Composition& lambda, int n) {
    const int r = lambda.length();
    BasicHeckeElement<C> zero(n);
    if (r > n) return zero;
    // prev[j] = Q_{t-1}(j) for j = 0..n
    std::vector<BasicHeckeElement<C>> prev(n + 1, BasicHeckeElement<C>::one(n));
    for (int t = 1; t <= r; ++t) {
        std::vector<BasicHeckeElement<C>> cur(n + 1, zero);
        for (int j = t; j <= n; ++j) {
            BasicHeckeElement<C> term = prev[j - 1];
            for (int e = 0; e < lambda[t - 1] && !term.is_zero(); ++e) term = mul_jm(term, j);
            cur[j] = cur[j - 1] + term;
        }
        prev = std::move(cur);
    }
    return prev[n];
}

/// m_λ(L_1..L_n) as the sum of p^α over distinct rearrangements α of λ.
/// Zero when λ has more than n parts.
template <class C = Poly>
BasicHeckeElement<C> eval_m(const Composition& lambda, int n) {
    if (!lambda.is_partition()) throw std::invalid_argument("eval_m: " + lambda.to_string() + " is not a partition");
    BasicHeckeElement<C> out(n);
    if (lambda.length() > n) return out;
    for (const auto& alpha : rearrangements(lambda)) out += eval_p<C>(alpha, n);
    return out;
}

/// Coefficient of T_w; for central h this is the trace inner product <T_w, h>.
template <class C>
const C& coeff(const BasicHeckeElement<C>& h, const Permutation& w) {
    return h.coeff(w);
}

/// h T_s = T_s h for every simple reflection s.
template <class C>
bool is_central(const BasicHeckeElement<C>& h) {
    const int n = h.rank();
    for (int i = 1; i < n; ++i) {
        auto ts = BasicHeckeElement<C>::basis(Permutation::identity(n).apply_gen(i).first);
        if (h.mul_gen(i) != ts * h) return false;
    }
    return true;
}

/// Image in Z S_n under xi -> 0.
inline GroupAlgebraElement specialize(const HeckeElement& h) {
    GroupAlgebraElement out(h.group_ptr());
    for (std::size_t i = 0; i < h.group().order(); ++i) {
        Integer v = h.coeff_at(i).at_zero();
        if (v != 0) out.set_coeff(h.group().element(i), v);
    }
    return out;
}

/// Sum of the elements of cycle type μ, in Z S_n.
inline GroupAlgebraElement class_sum(const Composition& mu) {
    const int n = mu.size();
    GroupAlgebraElement out(n);
    for (const auto& w : out.group().elements())
        if (w.cycle_type() == mu) out.set_coeff(w, 1);
    return out;
}

}  // namespace hecke
