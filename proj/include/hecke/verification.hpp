#pragma once

// Invariant suite for one rank n: algebraic laws of every layer plus the
// defining properties of the constructed basis. Randomised checks use a
// fixed seed so reports are reproducible.

#include "hecke/center_basis.hpp"
#include "hecke/composition.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/matrix_store.hpp"
#include "hecke/permutation.hpp"
#include "hecke/poly.hpp"
#include "hecke/qsym.hpp"
#include "hecke/s3.hpp"
#include "hecke/tower.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace hecke {

struct PropertyResult {
    std::string name;
    bool passed;
    std::string detail;
};

namespace detail {

inline Poly random_poly(std::mt19937& rng, int max_degree = 3, int range = 4) {
    std::uniform_int_distribution<int> coef(-range, range), deg(0, max_degree);
    std::vector<Integer> c(deg(rng) + 1);
    for (auto& v : c) v = coef(rng);
    return Poly(std::move(c));
}

inline HeckeElement random_hecke(std::mt19937& rng, int n, int terms = 3) {
    HeckeElement h(n);
    const auto& g = h.group();
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int t = 0; t < terms; ++t) h += HeckeElement::basis(g.element(pick(rng))) * random_poly(rng, 2, 3);
    return h;
}

/// p^α at a point, by direct summation over increasing index tuples.
inline Integer eval_quasi(const Composition& alpha, const std::vector<Integer>& x) {
    const int r = alpha.length();
    const int n = static_cast<int>(x.size());
    // q[j] = value of the prefix of α using variables among the first j
    std::vector<Integer> q(n + 1, 1);
    for (int t = 1; t <= r; ++t) {
        std::vector<Integer> cur(n + 1, 0);
        for (int j = t; j <= n; ++j) cur[j] = cur[j - 1] + q[j - 1] * boost::multiprecision::pow(x[j - 1], alpha[t - 1]);
        q = std::move(cur);
    }
    return q[n];
}

}  // namespace detail

class Verifier {
public:
    Verifier(int n, MatrixStore& store) : n_(n), store_(store) {}

    std::vector<PropertyResult> run() {
        std::vector<PropertyResult> out;
        for (const auto& [name, check] : checks()) {
            std::string detail;
            bool ok = false;
            try {
                ok = check(detail);
            } catch (const std::exception& e) {
                detail = std::string("exception: ") + e.what();
            }
            out.push_back({name, ok, detail});
        }
        return out;
    }

private:
    using Check = std::function<bool(std::string&)>;

    std::vector<std::pair<std::string, Check>> checks() {
        std::vector<std::pair<std::string, Check>> c;
        c.emplace_back("composition order", [this](std::string& d) { return composition_order(d); });
        c.emplace_back("polynomial ring laws", [this](std::string& d) { return poly_laws(d); });
        c.emplace_back("hecke quadratic and braid relations", [this](std::string& d) { return relations(d); });
        c.emplace_back("hecke associativity", [this](std::string& d) { return associativity(d); });
        c.emplace_back("jucys-murphy commutativity", [this](std::string& d) { return jm_commute(d); });
        c.emplace_back("monomials are central", [this](std::string& d) { return centrality(d); });
        c.emplace_back("specialization is a homomorphism", [this](std::string& d) { return specialization(d); });
        c.emplace_back("quasi-shuffle in six variables", [this](std::string& d) { return quasi_shuffle_points(d); });
        c.emplace_back("M N = I and det M = +-1", [this](std::string& d) { return unimodular(d); });
        c.emplace_back("M independent of rank", [this](std::string& d) { return rank_independence(d); });
        c.emplace_back("tower agrees with direct route", [this](std::string& d) { return tower_agreement(d); });
        c.emplace_back("basis central and unimodular", [this](std::string& d) { return basis_ok(d); });
        c.emplace_back("class elements characterized", [this](std::string& d) { return gamma_ok(d); });
        c.emplace_back("S3 closed forms, parity, recurrences", [](std::string& d) { return s3_ok(d); });
        return c;
    }

    int max_k() const { return std::min(n_ - 1, kMaxDirectK); }

    bool composition_order(std::string& d) const {
        for (int k = 1; k <= n_; ++k) {
            auto all = enumerate_compositions(k);
            if (all.size() != (std::size_t{1} << (k - 1))) return d = "wrong count at " + std::to_string(k), false;
            for (std::size_t i = 1; i < all.size(); ++i)
                if (!(all[i - 1] < all[i])) return d = "not increasing at " + all[i].to_string(), false;
        }
        return true;
    }

    bool poly_laws(std::string& d) {
        std::mt19937 rng(1);
        for (int t = 0; t < 200; ++t) {
            Poly a = detail::random_poly(rng), b = detail::random_poly(rng), c = detail::random_poly(rng);
            if ((a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c || a * b != b * a)
                return d = "ring law fails", false;
            if (!b.is_zero() && exact_div(a * b, b) != a) return d = "exact_div round trip fails", false;
        }
        return true;
    }

    bool relations(std::string& d) const {
        const auto one = HeckeElement::one(n_);
        for (int i = 1; i < n_; ++i) {
            auto ti = one.mul_gen(i);
            if (ti.mul_gen(i) != one + ti * Poly::xi()) return d = "quadratic relation at " + std::to_string(i), false;
            for (int j = i + 1; j < n_; ++j) {
                bool ok = j == i + 1 ? ti.mul_gen(j).mul_gen(i) == one.mul_gen(j).mul_gen(i).mul_gen(j)
                                     : ti.mul_gen(j) == one.mul_gen(j).mul_gen(i);
                if (!ok) return d = "braid relation at " + std::to_string(i) + "," + std::to_string(j), false;
            }
        }
        return true;
    }

    bool associativity(std::string& d) const {
        std::mt19937 rng(2);
        for (int t = 0; t < 10; ++t) {
            auto a = detail::random_hecke(rng, n_), b = detail::random_hecke(rng, n_), c = detail::random_hecke(rng, n_);
            if ((a * b) * c != a * (b * c)) return d = "trial " + std::to_string(t), false;
        }
        return true;
    }

    bool jm_commute(std::string& d) const {
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j) {
                auto li = jm(i, n_), lj = jm(j, n_);
                if (li * lj != lj * li) return d = "L" + std::to_string(i) + " L" + std::to_string(j), false;
            }
        return true;
    }

    bool centrality(std::string& d) const {
        for (int k = 0; k < n_; ++k)
            for (const auto& lambda : enumerate_partitions(k))
                if (!is_central(eval_m(lambda, n_))) return d = "m" + lambda.to_string(), false;
        return true;
    }

    bool specialization(std::string& d) const {
        std::mt19937 rng(3);
        for (int t = 0; t < 10; ++t) {
            auto a = detail::random_hecke(rng, n_), b = detail::random_hecke(rng, n_);
            if (specialize(a * b) != specialize(a) * specialize(b)) return d = "trial " + std::to_string(t), false;
        }
        return true;
    }

    bool quasi_shuffle_points(std::string& d) const {
        std::mt19937 rng(4);
        std::uniform_int_distribution<int> coord(-3, 3);
        auto comps = compositions_below(std::min(n_, 4) + 1);
        for (int t = 0; t < 4; ++t) {
            std::vector<Integer> x(6);
            for (auto& v : x) v = coord(rng);
            for (const auto& a : comps)
                for (const auto& b : comps) {
                    Integer rhs = 0;
                    for (const auto& [g, c] : quasi_shuffle(a, b)) rhs += c * detail::eval_quasi(g, x);
                    if (detail::eval_quasi(a, x) * detail::eval_quasi(b, x) != rhs)
                        return d = "p" + a.to_string() + " p" + b.to_string(), false;
                }
        }
        return true;
    }

    bool unimodular(std::string& d) {
        for (int k = 0; k <= max_k(); ++k) {
            const auto& m = store_.m(k);
            if (!determinant(m).is_unit()) return d = "det at k=" + std::to_string(k), false;
            if (!(m * store_.n(k)).is_identity()) return d = "M N at k=" + std::to_string(k), false;
        }
        return true;
    }

    bool rank_independence(std::string& d) const {
        for (int k = 1; k <= std::min(max_k(), 3); ++k)
            if (!m_matrix_direct(k, 2 * k).same_entries(m_matrix_direct(k, 2 * k + 1)))
                return d = "k=" + std::to_string(k), false;
        return true;
    }

    bool tower_agreement(std::string& d) {
        for (int k = 2; k <= max_k(); ++k)
            if (!m_matrix_tower(k).same_entries(m_matrix_direct(k))) return d = "k=" + std::to_string(k), false;
        return true;
    }

    bool basis_ok(std::string& d) {
        auto b = basis(n_, store_);
        std::vector<HeckeElement> values;
        std::vector<Composition> labels;
        for (const auto& e : b) {
            if (!is_central(e.value)) return d = "M" + e.label.to_string() + " not central", false;
            values.push_back(e.value), labels.push_back(e.label);
        }
        if (values.size() != enumerate_partitions(n_).size()) return d = "wrong size", false;
        if (!determinant(gamma_transition(values, labels)).is_unit()) return d = "transition not unimodular", false;
        return true;
    }

    bool gamma_ok(std::string& d) {
        auto g = gamma_basis(n_, store_);
        auto order = gamma_order(n_);
        for (std::size_t i = 0; i < g.size(); ++i)
            if (!verify_gamma(g[i], order[i])) return d = "Gamma" + order[i].to_string(), false;
        return true;
    }

    static bool s3_ok(std::string& d) {
        constexpr int kBound = 14;
        for (const auto& mu : s3::column_labels(kBound))
            if (!mu.empty() && s3::closed_form(mu) != s3::c_column(mu)) return d = "closed form m" + mu.to_string(), false;
        if (!s3::check_parity(kBound)) return d = "parity", false;
        if (!s3::check_relations(kBound)) return d = "relations", false;
        if (!s3::check_recurrences(kBound)) return d = "recurrences", false;
        return true;
    }

    int n_;
    MatrixStore& store_;
};

inline std::vector<PropertyResult> verify_rank(int n, MatrixStore& store) {
    if (n < 1) throw std::invalid_argument("verify: rank must be positive");
    return Verifier(n, store).run();
}

}  // namespace hecke
