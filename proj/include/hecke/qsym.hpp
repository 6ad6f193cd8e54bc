#pragma once

// Quasi-symmetric functions in the monomial basis p^λ (stable regime, i.e.
// independent of the number of variables), the polynomials a(k), and the
// structure-constant matrices A^(k).

#include "hecke/composition.hpp"
#include "hecke/poly.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace hecke {

/// Finite linear combination of p^λ, keyed in composition order.
template <class Coeff>
using BasicQSym = std::map<Composition, Coeff>;
using QSymElement = BasicQSym<Poly>;
using QSymInt = BasicQSym<Integer>;

namespace detail {
inline void qsym_add(QSymInt& into, const Composition& c, const Integer& v) {
    auto [it, inserted] = into.try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) into.erase(it);
    }
}

inline Composition prepend(int head, const Composition& tail) {
    std::vector<int> parts;
    parts.reserve(tail.parts().size() + 1);
    parts.push_back(head);
    parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
    return Composition(std::move(parts));
}

inline Composition drop_first(const Composition& c) {
    return Composition(std::vector<int>(c.parts().begin() + 1, c.parts().end()));
}
}  // namespace detail

/// p^α p^β expanded in the p basis. Recursion on leading parts a, b:
///   (a,α~)(b,β~) = (a, α~ * β) + (b, α * β~) + (a+b, α~ * β~).
inline QSymInt quasi_shuffle(const Composition& alpha, const Composition& beta) {
    if (alpha.empty()) return {{beta, 1}};
    if (beta.empty()) return {{alpha, 1}};

    static std::mutex mu;
    static std::map<std::pair<Composition, Composition>, QSymInt> memo;
    {
        std::lock_guard lock(mu);
        auto it = memo.find({alpha, beta});
        if (it != memo.end()) return it->second;
    }

    const int a = alpha[0];
    const int b = beta[0];
    const Composition at = detail::drop_first(alpha);
    const Composition bt = detail::drop_first(beta);
    QSymInt out;
    for (const auto& [c, v] : quasi_shuffle(at, beta)) detail::qsym_add(out, detail::prepend(a, c), v);
    for (const auto& [c, v] : quasi_shuffle(alpha, bt)) detail::qsym_add(out, detail::prepend(b, c), v);
    for (const auto& [c, v] : quasi_shuffle(at, bt)) detail::qsym_add(out, detail::prepend(a + b, c), v);

    std::lock_guard lock(mu);
    memo.emplace(std::make_pair(alpha, beta), out);
    return out;
}

/// Product of two linear combinations.
template <class Coeff>
BasicQSym<Coeff> qsym_multiply(const BasicQSym<Coeff>& x, const BasicQSym<Coeff>& y) {
    BasicQSym<Coeff> out;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) {
            for (const auto& [c, v] : quasi_shuffle(a, b)) {
                Coeff term = ca * cb * Coeff(v);
                auto [it, inserted] = out.try_emplace(c, term);
                if (!inserted) it->second += term;
                if (hecke::is_zero(it->second)) out.erase(it);
            }
        }
    }
    return out;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// a(k) = sum_{m=1}^{k} C(k+m-1, 2m-1) xi^{2m}
inline Poly a_poly(int k) {
    if (k < 1) throw std::invalid_argument("a_poly: k must be positive");
    std::vector<Integer> c(2 * static_cast<std::size_t>(k) + 1);
    for (int m = 1; m <= k; ++m) c[2 * m] = binomial(k + m - 1, 2 * m - 1);
    return Poly(std::move(c));
}

/// a(λ) = product of a(λ_i); a(∅) = 1.
inline Poly a_poly_comp(const Composition& lambda) {
    Poly r = 1;
    for (int p : lambda.parts()) r = r * a_poly(p);
    return r;
}

/// Coefficient of p^λ in sum over γ ⊨ |λ|-|μ| of a(γ) p^γ p^μ; zero when
/// |λ| <= |μ|.
inline Poly A_entry(const Composition& lambda, const Composition& mu) {
    const int d = lambda.size() - mu.size();
    if (d <= 0) return {};
    Poly out;
    for (const auto& gamma : enumerate_compositions(d)) {
        if (gamma.length() + mu.length() < lambda.length()) continue;
        auto prod = quasi_shuffle(gamma, mu);
        auto it = prod.find(lambda);
        if (it != prod.end()) out += a_poly_comp(gamma) * Poly(it->second);
    }
    return out;
}

}  // namespace hecke
