#pragma once

// The matrix tower producing M^(k) (coefficients of minimal class elements in
// monomial symmetric polynomials of Jucys-Murphy elements) and its inverse
// N^(k), together with the direct Hecke-algebra route to M^(k).
//
// Tower matrices Z, A, Xi, Upsilon, K are labelled by the 2^{k-1}
// compositions of size < k; X, Y, T by the compositions of k (via λ -> λ').

#include "hecke/composition.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/matrix.hpp"
#include "hecke/permutation.hpp"
#include "hecke/qsym.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

struct UnresolvedHatConvention : std::logic_error {
    using std::logic_error::logic_error;
};

/// Candidate readings of the map λ -> λ̂ used by the T matrix.
enum class HatConvention { kUnresolved, kSortDecreasing, kSortIncreasing, kReverse };

inline const char* to_string(HatConvention h) {
    switch (h) {
        case HatConvention::kUnresolved: return "unresolved";
        case HatConvention::kSortDecreasing: return "sort-decreasing";
        case HatConvention::kSortIncreasing: return "sort-increasing";
        case HatConvention::kReverse: return "reverse";
    }
    return "?";
}

inline constexpr std::array<HatConvention, 3> kHatCandidates = {
    HatConvention::kSortDecreasing, HatConvention::kSortIncreasing, HatConvention::kReverse};

/// The convention validated against the direct route for k = 2, 3, 4
/// (re-checked by resolve_hat_convention in the test suites).
inline constexpr HatConvention kValidatedHat = HatConvention::kSortDecreasing;

inline Composition hat(const Composition& c, HatConvention h) {
    switch (h) {
        case HatConvention::kSortDecreasing: return sorted_decreasing(c);
        case HatConvention::kSortIncreasing: {
            std::vector<int> p = c.parts();
            std::sort(p.begin(), p.end());
            return Composition(std::move(p));
        }
        case HatConvention::kReverse: {
            std::vector<int> p = c.parts();
            std::reverse(p.begin(), p.end());
            return Composition(std::move(p));
        }
        case HatConvention::kUnresolved: break;
    }
    throw UnresolvedHatConvention("hat: no convention selected");
}

/// Largest k for which the direct route runs (it works in H_{2k}).
inline constexpr int kMaxDirectK = kMaxRank / 2;

namespace detail {
inline void require_k(int k) {
    if (k < 1) throw std::invalid_argument("matrix tower: k must be positive");
}

// diag(x, x) with the second copy relabelled by the compositions of k-1.
inline LabeledMatrix doubled(const LabeledMatrix& x, int k) {
    auto hi = enumerate_compositions(k - 1);
    return block(x, LabeledMatrix(x.row_labels(), hi), LabeledMatrix(hi, x.col_labels()), x.relabel(hi, hi));
}

// Re-index a matrix on compositions below k by compositions of k.
inline LabeledMatrix reindex_up(const LabeledMatrix& m, int k) {
    auto labels = enumerate_compositions(k);
    return m.relabel(labels, labels);
}
}  // namespace detail

/// Z^(1) = (1), Z^(k+1) = [[Z^(k), I], [0, I]].
inline LabeledMatrix z_matrix(int k) {
    detail::require_k(k);
    if (k == 1) return LabeledMatrix::identity({Composition{}});
    LabeledMatrix z = z_matrix(k - 1);
    auto hi = enumerate_compositions(k - 1);
    auto lo = z.row_labels();
    LabeledMatrix top_right(lo, hi);
    for (std::size_t i = 0; i < lo.size(); ++i) top_right.at(i, i) = 1;
    return block(z, top_right, LabeledMatrix(hi, lo), LabeledMatrix::identity(hi));
}

/// A^(k): entries A_entry(λ, μ) for |λ|, |μ| < k. Strictly block lower
/// triangular (zero whenever |λ| <= |μ|).
inline LabeledMatrix a_matrix(int k) {
    detail::require_k(k);
    auto labels = compositions_below(k);
    LabeledMatrix m(labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (labels[i].size() > labels[j].size()) m.at(i, j) = A_entry(labels[i], labels[j]);
    return m;
}

/// The full structure matrix fed to the recursions: A^(k) plus the γ = ∅
/// term of the defining sum, which contributes the identity.
inline LabeledMatrix structure_matrix(int k) {
    LabeledMatrix a = a_matrix(k);
    for (std::size_t i = 0; i < a.nrows(); ++i) a.at(i, i) = 1;
    return a;
}

/// Xi^(1) = (1), Xi^(k+1) = diag(Xi^(k), Xi^(k)) Z^(k+1) (I + A^(k+1)).
inline LabeledMatrix xi_matrix(int k) {
    detail::require_k(k);
    if (k == 1) return LabeledMatrix::identity({Composition{}});
    return detail::doubled(xi_matrix(k - 1), k) * z_matrix(k) * structure_matrix(k);
}

/// Upsilon^(1) = (1), Upsilon^(k+1) = Z^(k+1) (I + A^(k+1)) diag(Upsilon^(k), Upsilon^(k)).
inline LabeledMatrix upsilon_matrix(int k) {
    detail::require_k(k);
    if (k == 1) return LabeledMatrix::identity({Composition{}});
    return z_matrix(k) * structure_matrix(k) * detail::doubled(upsilon_matrix(k - 1), k);
}

/// K^(1) = (1), K^(k+1) = [[K, -K], [0, -K]].
inline LabeledMatrix k_matrix(int k) {
    detail::require_k(k);
    if (k == 1) return LabeledMatrix::identity({Composition{}});
    LabeledMatrix prev = k_matrix(k - 1);
    auto hi = enumerate_compositions(k - 1);
    auto lo = prev.row_labels();
    LabeledMatrix neg = -prev;
    return block(prev, neg.relabel(lo, hi), LabeledMatrix(hi, lo), neg.relabel(hi, hi));
}

/// X_{λ,μ} = Xi_{λ',μ'} for λ, μ ⊨ k.
inline LabeledMatrix x_matrix(int k) { return detail::reindex_up(xi_matrix(k), k); }

/// Y_{λ,μ} = Upsilon_{λ',μ'} for λ, μ ⊨ k.
inline LabeledMatrix y_matrix(int k) { return detail::reindex_up(upsilon_matrix(k), k); }

/// K re-indexed by compositions of k.
inline LabeledMatrix k_matrix_up(int k) { return detail::reindex_up(k_matrix(k), k); }

/// T_{λ,μ} = 1 if λ = μ or λ̂ = μ.
inline LabeledMatrix t_matrix(int k, HatConvention h) {
    if (h == HatConvention::kUnresolved) throw UnresolvedHatConvention("t_matrix: hat convention is unresolved");
    auto labels = enumerate_compositions(k);
    LabeledMatrix t(labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        Composition target = hat(labels[i], h);
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (i == j || labels[j] == target) t.at(i, j) = 1;
    }
    return t;
}

namespace detail {
inline LabeledMatrix conjugate_to_partitions(const LabeledMatrix& inner, int k, HatConvention h) {
    LabeledMatrix t = t_matrix(k, h);
    LabeledMatrix conj = invert_exact(t) * inner * t;
    return conj.restrict([](const Composition& c) { return c.is_partition(); });
}
}  // namespace detail

/// M^(k) from (T^{-1} X T), restricted to partitions of k.
inline LabeledMatrix m_matrix_tower(int k, HatConvention h = kValidatedHat) {
    detail::require_k(k);
    return detail::conjugate_to_partitions(x_matrix(k), k, h);
}

/// N^(k) from (T^{-1} K Y K T), restricted to partitions of k.
inline LabeledMatrix n_matrix_tower(int k, HatConvention h = kValidatedHat) {
    detail::require_k(k);
    LabeledMatrix kk = k_matrix_up(k);
    return detail::conjugate_to_partitions(kk * y_matrix(k) * kk, k, h);
}

/// X^(k) computed in the Hecke algebra: the coefficient of T_w, w the
/// increasing element of shape λ, in p^μ(L_1..L_n).
inline LabeledMatrix x_matrix_direct(int k, int n) {
    detail::require_k(k);
    if (n < 2 * k) throw std::invalid_argument("x_matrix_direct: rank must be at least 2k");
    auto labels = enumerate_compositions(k);
    LabeledMatrix m(labels, labels);
    for (std::size_t j = 0; j < labels.size(); ++j) {
        HeckeElement h = eval_p(labels[j], n);
        for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, j) = h.coeff(increasing_element(labels[i], n));
    }
    return m;
}

/// M^(k) computed in H_n (default n = 2k): entry (λ, μ) is the coefficient of
/// T_w in m_μ(L_1..L_n), w the increasing element of shape λ. Columns are
/// independent and are spread over up to `threads` workers.
inline LabeledMatrix m_matrix_direct(int k, int n = 0, unsigned threads = 1) {
    if (k < 0) throw std::invalid_argument("m_matrix_direct: k must be nonnegative");
    if (n == 0) n = std::max(2 * k, 1);
    if (n < 2 * k) throw std::invalid_argument("m_matrix_direct: rank must be at least 2k");
    if (n > kMaxRank)
        throw ResourceLimit("m_matrix_direct: k = " + std::to_string(k) + " needs H_" + std::to_string(n) +
                            ", beyond the supported rank " + std::to_string(kMaxRank));
    auto parts = enumerate_partitions(k);
    LabeledMatrix m(parts, parts);
    auto column = [&](std::size_t j) {
        HeckeElement h = eval_m(parts[j], n);
        for (std::size_t i = 0; i < parts.size(); ++i) m.at(i, j) = h.coeff(increasing_element(parts[i], n));
    };
    if (threads <= 1) {
        for (std::size_t j = 0; j < parts.size(); ++j) column(j);
    } else {
        std::vector<std::future<void>> pending;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            pending.push_back(std::async(std::launch::async, column, j));
            if (pending.size() >= threads) {
                for (auto& f : pending) f.get();
                pending.clear();
            }
        }
        for (auto& f : pending) f.get();
    }
    return m;
}

/// Result of checking one hat convention against the direct route.
struct HatCheck {
    HatConvention convention;
    bool validated;
    int failed_k;  // first k with a mismatch, 0 when validated
};

/// Tries every candidate convention and reports which reproduce
/// m_matrix_direct(k) for k = 2..max_k. The direct matrices are passed in
/// so callers can reuse them.
inline std::vector<HatCheck> resolve_hat_convention(const std::vector<LabeledMatrix>& direct_by_k, int max_k) {
    std::vector<HatCheck> out;
    for (HatConvention h : kHatCandidates) {
        HatCheck c{h, true, 0};
        for (int k = 2; k <= max_k; ++k) {
            bool match = false;
            try {
                match = m_matrix_tower(k, h).same_entries(direct_by_k.at(k));
            } catch (const NotUnimodular&) {
                // T itself is singular under this reading
            }
            if (!match) {
                c.validated = false;
                c.failed_k = k;
                break;
            }
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace hecke
