#pragma once

// The ground ring R = Z[xi]: dense univariate polynomials with
// arbitrary-precision integer coefficients.

#include "hecke/integer.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

/// Element of Z[xi]. Coefficients are stored in ascending degree with no
/// trailing zeros, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(int c) { if (c != 0) coeffs_.emplace_back(c); }  // NOLINT(implicit)
    Poly(const Integer& c) { if (c != 0) coeffs_.push_back(c); }  // NOLINT(implicit)
    Poly(std::initializer_list<Integer> c) : coeffs_(c) { trim(); }
    explicit Poly(std::vector<Integer> c) : coeffs_(std::move(c)) { trim(); }

    /// The indeterminate xi.
    static Poly xi() { return Poly({0, 1}); }
    /// c * xi^e
    static Poly monomial(const Integer& c, int e) {
        if (c == 0) return {};
        std::vector<Integer> v(static_cast<std::size_t>(e) + 1);
        v.back() = c;
        return Poly(std::move(v));
    }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coeff(int e) const {
        return (e >= 0 && e < static_cast<int>(coeffs_.size())) ? coeffs_[e] : Integer(0);
    }
    const Integer& leading() const { return coeffs_.back(); }

    /// Value at xi = 0.
    Integer at_zero() const { return coeffs_.empty() ? Integer(0) : coeffs_.front(); }
    Integer evaluate(const Integer& x) const {
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    bool is_unit() const noexcept {
        return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
    }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_even_in_xi() const noexcept {
        for (std::size_t i = 1; i < coeffs_.size(); i += 2)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    /// xi * p, a shift.
    Poly times_xi() const {
        if (is_zero()) return {};
        Poly r;
        r.coeffs_.reserve(coeffs_.size() + 1);
        r.coeffs_.emplace_back(0);
        r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string(const std::string& var = "xi") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

/// Quotient q with a = q * b. Throws NotDivisible when no such q exists in
/// Z[xi] and DivisionByZero when b = 0.
inline Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("exact_div: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw NotDivisible("exact_div: " + a.to_string() + " / " + b.to_string());
    std::vector<Integer> rem = a.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const auto& bc = b.coeffs();
    const Integer& lead = b.leading();
    for (int d = a.degree() - b.degree(); d >= 0; --d) {
        const Integer& top = rem[static_cast<std::size_t>(d) + bc.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw NotDivisible("exact_div: " + a.to_string() + " / " + b.to_string());
        Integer f = top / lead;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[d + j] -= f * bc[j];
        q[d] = f;
    }
    for (const auto& r : rem)
        if (r != 0) throw NotDivisible("exact_div: " + a.to_string() + " / " + b.to_string());
    return Poly(std::move(q));
}

inline Integer specialize0(const Poly& p) { return p.at_zero(); }

/// Human-readable form, highest-degree-last: "1 + 5xi^2 - xi^4".
inline std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        const Integer& c = coeffs_[e];
        if (c == 0) continue;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        first = false;
        if (e == 0 || mag != 1) out += mag.str();
        if (e >= 1) out += var;
        if (e >= 2) out += "^" + std::to_string(e);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// Coefficient-ring hooks used by the algebra templates: times_xi is the
// deformation term of the quadratic relation, which vanishes at xi = 0.
inline Poly times_xi(const Poly& p) { return p.times_xi(); }
inline Integer times_xi(const Integer&) { return 0; }
inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline bool is_zero(const Integer& v) { return v == 0; }

}  // namespace hecke
