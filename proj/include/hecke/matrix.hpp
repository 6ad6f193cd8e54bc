#pragma once

// Dense matrices over Z[xi] whose rows and columns carry composition labels,
// with exact determinant and inverse.

#include "hecke/composition.hpp"
#include "hecke/poly.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

struct NotUnimodular : std::domain_error {
    using std::domain_error::domain_error;
};

class LabeledMatrix {
public:
    LabeledMatrix() = default;
    LabeledMatrix(std::vector<Composition> rows, std::vector<Composition> cols)
        : rows_(std::move(rows)), cols_(std::move(cols)), entries_(rows_.size() * cols_.size()) {}
    LabeledMatrix(std::vector<Composition> rows, std::vector<Composition> cols, std::vector<std::vector<Poly>> grid)
        : LabeledMatrix(std::move(rows), std::move(cols)) {
        if (grid.size() != rows_.size()) throw std::invalid_argument("LabeledMatrix: row count mismatch");
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (grid[i].size() != cols_.size()) throw std::invalid_argument("LabeledMatrix: column count mismatch");
            for (std::size_t j = 0; j < grid[i].size(); ++j) at(i, j) = std::move(grid[i][j]);
        }
    }

    /// Square matrix with the same labels on both axes.
    static LabeledMatrix identity(const std::vector<Composition>& labels) {
        LabeledMatrix m(labels, labels);
        for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t nrows() const noexcept { return rows_.size(); }
    std::size_t ncols() const noexcept { return cols_.size(); }
    bool is_square() const noexcept { return nrows() == ncols(); }
    const std::vector<Composition>& row_labels() const noexcept { return rows_; }
    const std::vector<Composition>& col_labels() const noexcept { return cols_; }

    Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols_.size() + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_.size() + j]; }

    std::optional<std::size_t> row_index(const Composition& c) const { return find(rows_, c); }
    std::optional<std::size_t> col_index(const Composition& c) const { return find(cols_, c); }

    /// Entry by labels.
    const Poly& operator()(const Composition& r, const Composition& c) const {
        auto i = row_index(r);
        auto j = col_index(c);
        if (!i || !j) throw std::out_of_range("LabeledMatrix: no entry labelled (" + r.to_string() + ", " + c.to_string() + ")");
        return at(*i, *j);
    }

    /// Keeps the rows and columns whose labels satisfy the predicate.
    LabeledMatrix restrict(const std::function<bool(const Composition&)>& keep) const {
        std::vector<std::size_t> ri, ci;
        std::vector<Composition> rl, cl;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (keep(rows_[i])) ri.push_back(i), rl.push_back(rows_[i]);
        for (std::size_t j = 0; j < cols_.size(); ++j)
            if (keep(cols_[j])) ci.push_back(j), cl.push_back(cols_[j]);
        LabeledMatrix out(std::move(rl), std::move(cl));
        for (std::size_t a = 0; a < ri.size(); ++a)
            for (std::size_t b = 0; b < ci.size(); ++b) out.at(a, b) = at(ri[a], ci[b]);
        return out;
    }

    LabeledMatrix relabel(std::vector<Composition> rows, std::vector<Composition> cols) const {
        if (rows.size() != nrows() || cols.size() != ncols()) throw std::invalid_argument("relabel: size mismatch");
        LabeledMatrix out = *this;
        out.rows_ = std::move(rows);
        out.cols_ = std::move(cols);
        return out;
    }

    /// Entries evaluated at xi = 0.
    std::vector<std::vector<Integer>> at_zero() const {
        std::vector<std::vector<Integer>> out(nrows(), std::vector<Integer>(ncols()));
        for (std::size_t i = 0; i < nrows(); ++i)
            for (std::size_t j = 0; j < ncols(); ++j) out[i][j] = at(i, j).at_zero();
        return out;
    }

    friend LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b) {
        if (a.ncols() != b.nrows()) throw std::invalid_argument("LabeledMatrix: dimension mismatch in product");
        LabeledMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.nrows(); ++i)
            for (std::size_t k = 0; k < a.ncols(); ++k) {
                const Poly& x = a.at(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.ncols(); ++j)
                    if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
            }
        return out;
    }
    friend LabeledMatrix operator-(const LabeledMatrix& a) {
        LabeledMatrix out = a;
        for (auto& e : out.entries_) e = -e;
        return out;
    }
    friend LabeledMatrix operator+(LabeledMatrix a, const LabeledMatrix& b) {
        if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) throw std::invalid_argument("LabeledMatrix: size mismatch");
        for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
        return a;
    }

    /// Equality of entries and labels.
    friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;
    bool same_entries(const LabeledMatrix& o) const {
        return nrows() == o.nrows() && ncols() == o.ncols() && entries_ == o.entries_;
    }
    bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < nrows(); ++i)
            for (std::size_t j = 0; j < ncols(); ++j)
                if (at(i, j) != Poly(i == j ? 1 : 0)) return false;
        return true;
    }

    std::string to_string() const;

private:
    static std::optional<std::size_t> find(const std::vector<Composition>& v, const Composition& c) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] == c) return i;
        return std::nullopt;
    }

    std::vector<Composition> rows_;
    std::vector<Composition> cols_;
    std::vector<Poly> entries_;
};

inline std::string LabeledMatrix::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < nrows(); ++i) {
        out += rows_[i].to_string() + ":";
        for (std::size_t j = 0; j < ncols(); ++j) out += "  " + at(i, j).to_string();
        out += "\n";
    }
    return out;
}

/// Block matrix [[a, b], [c, d]] with a's row labels followed by c's, and a's
/// column labels followed by b's.
inline LabeledMatrix block(const LabeledMatrix& a, const LabeledMatrix& b, const LabeledMatrix& c,
                           const LabeledMatrix& d) {
    std::vector<Composition> rows = a.row_labels();
    rows.insert(rows.end(), c.row_labels().begin(), c.row_labels().end());
    std::vector<Composition> cols = a.col_labels();
    cols.insert(cols.end(), b.col_labels().begin(), b.col_labels().end());
    LabeledMatrix out(std::move(rows), std::move(cols));
    auto put = [&](const LabeledMatrix& m, std::size_t r0, std::size_t c0) {
        for (std::size_t i = 0; i < m.nrows(); ++i)
            for (std::size_t j = 0; j < m.ncols(); ++j) out.at(r0 + i, c0 + j) = m.at(i, j);
    };
    put(a, 0, 0);
    put(b, 0, a.ncols());
    put(c, a.nrows(), 0);
    put(d, a.nrows(), a.ncols());
    return out;
}

namespace detail {
// Fraction-free (Bareiss) elimination on a square grid.
inline Poly bareiss_det(std::vector<Poly> m, std::size_t n) {
    if (n == 0) return 1;
    auto at = [&](std::size_t i, std::size_t j) -> Poly& { return m[i * n + j]; };
    Poly prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && at(p, k).is_zero()) ++p;
            if (p == n) return {};
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = exact_div(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
            at(i, k) = Poly{};
        }
        prev = at(k, k);
    }
    Poly d = at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}
}  // namespace detail

/// Exact determinant over Z[xi].
inline Poly determinant(const LabeledMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.nrows();
    std::vector<Poly> g(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i * n + j] = m.at(i, j);
    return detail::bareiss_det(std::move(g), n);
}

/// Exact inverse over Z[xi] by the adjugate. The determinant must be a unit.
/// The inverse has the row labels of m's columns and vice versa.
inline LabeledMatrix invert_exact(const LabeledMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("invert_exact: matrix is not square");
    const std::size_t n = m.nrows();
    Poly det = determinant(m);
    if (!det.is_unit()) throw NotUnimodular("invert_exact: determinant " + det.to_string() + " is not a unit in Z[xi]");
    LabeledMatrix inv(m.col_labels(), m.row_labels());
    std::vector<Poly> minor((n - 1) * (n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // cofactor C_ij, placed at inv(j, i)
            std::size_t t = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) minor[t++] = m.at(r, c);
            }
            Poly cof = detail::bareiss_det(minor, n - 1);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(j, i) = det.is_one() ? cof : -cof;
        }
    }
    return inv;
}

}  // namespace hecke
