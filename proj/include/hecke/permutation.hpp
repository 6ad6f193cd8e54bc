#pragma once

// Permutations of {1..n} in one-line notation with their Coxeter structure.
// Convention: w * s_i acts on positions, i.e. right multiplication by s_i
// swaps the entries at positions i and i+1.

#include "hecke/composition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// Largest rank for which S_n is enumerated or tabulated.
inline constexpr int kMaxRank = 8;

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Permutation {
public:
    Permutation() = default;
    /// One-line images, 1-based.
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size() + 1, false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
                throw std::invalid_argument("Permutation: images are not a bijection");
            seen[v] = true;
        }
        length_ = count_inversions();
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    /// The transposition (i j).
    static Permutation transposition(int i, int j, int n) {
        auto p = identity(n);
        std::swap(p.images_.at(i - 1), p.images_.at(j - 1));
        p.length_ = p.count_inversions();
        return p;
    }

    /// s_{i1} s_{i2} ... as a product of simple reflections.
    static Permutation from_word(const std::vector<int>& word, int n) {
        auto p = identity(n);
        for (int i : word) p = p.apply_gen(i).first;
        return p;
    }

    int rank() const noexcept { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const noexcept { return images_; }
    int operator()(int i) const { return images_.at(i - 1); }
    /// Coxeter length (number of inversions).
    int length() const noexcept { return length_; }

    bool has_right_descent(int i) const { return images_.at(i - 1) > images_.at(i); }

    /// w * s_i together with the change in length (+1 or -1).
    std::pair<Permutation, int> apply_gen(int i) const {
        if (i < 1 || i >= rank())
            throw std::out_of_range("apply_gen: generator index " + std::to_string(i) + " out of range");
        Permutation r = *this;
        int delta = images_[i - 1] < images_[i] ? +1 : -1;
        std::swap(r.images_[i - 1], r.images_[i]);
        r.length_ += delta;
        return {std::move(r), delta};
    }

    /// Composition (this * o)(j) = this(o(j)).
    Permutation operator*(const Permutation& o) const {
        if (o.rank() != rank()) throw std::invalid_argument("Permutation: rank mismatch");
        std::vector<int> v(images_.size());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = images_[o.images_[j] - 1];
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(images_.size());
        for (std::size_t j = 0; j < v.size(); ++j) v[images_[j] - 1] = static_cast<int>(j) + 1;
        return Permutation(std::move(v));
    }

    /// A reduced word obtained by repeatedly stripping right descents.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        std::vector<int> w = images_;
        for (bool found = true; found;) {
            found = false;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i] > w[i + 1]) {
                    std::swap(w[i], w[i + 1]);
                    word.push_back(static_cast<int>(i) + 1);
                    found = true;
                    break;
                }
            }
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    /// Cycle lengths including fixed points, weakly decreasing.
    Composition cycle_type() const {
        std::vector<int> lens;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t s = 0; s < images_.size(); ++s) {
            if (seen[s]) continue;
            int len = 0;
            for (std::size_t j = s; !seen[j]; j = images_[j] - 1) {
                seen[j] = true;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end(), std::greater<>());
        return Composition(std::move(lens));
    }

    /// "[2,1,3]"
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? "," : "") + std::to_string(images_[i]);
        return s + "]";
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
    /// Orders by length, then lexicographically on one-line images.
    friend bool operator<(const Permutation& a, const Permutation& b) {
        if (a.length_ != b.length_) return a.length_ < b.length_;
        return a.images_ < b.images_;
    }

private:
    int count_inversions() const {
        int inv = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            for (std::size_t j = i + 1; j < images_.size(); ++j)
                if (images_[i] > images_[j]) ++inv;
        return inv;
    }

    std::vector<int> images_;
    int length_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_string(); }

inline std::pair<Permutation, int> apply_gen(const Permutation& w, int i) { return w.apply_gen(i); }

/// Streams every element of S_n in lexicographic one-line order. Memory is
/// O(n) regardless of n!.
template <class F>
void for_each_permutation(int n, F&& f) {
    if (n > kMaxRank) throw ResourceLimit("S_" + std::to_string(n) + " is too large to enumerate");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        f(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

/// The increasing element of shape λ packed from the left: run t uses λ_t
/// consecutive generators, with a gap of one index between runs.
inline Permutation increasing_element(const Composition& shape, int n) {
    if (shape.size() + shape.length() > n)
        throw std::invalid_argument("increasing_element: shape " + shape.to_string() + " is not realizable in S_" +
                                    std::to_string(n));
    std::vector<int> word;
    int start = 1;
    for (int run : shape.parts()) {
        for (int i = 0; i < run; ++i) word.push_back(start + i);
        start += run + 1;
    }
    return Permutation::from_word(word, n);
}

/// The increasing word itself (generator indices), for shape λ.
inline std::vector<int> increasing_word(const Composition& shape) {
    std::vector<int> word;
    int start = 1;
    for (int run : shape.parts()) {
        for (int i = 0; i < run; ++i) word.push_back(start + i);
        start += run + 1;
    }
    return word;
}

/// Every element of cycle type μ of minimal length |μ| - ℓ(μ), sorted.
inline std::vector<Permutation> minimal_class_elements(const Composition& mu) {
    if (!mu.is_partition()) throw std::invalid_argument("minimal_class_elements: not a partition");
    int n = mu.size();
    int target = n - mu.length();
    std::vector<Permutation> out;
    for_each_permutation(n, [&](Permutation w) {
        if (w.length() == target && w.cycle_type() == mu) out.push_back(std::move(w));
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Tabulated S_n: every element indexed by its lexicographic rank, together
/// with right multiplication by each simple reflection. Shared, immutable.
class SymmetricGroup {
public:
    explicit SymmetricGroup(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("SymmetricGroup: rank must be positive");
        if (n > kMaxRank) throw ResourceLimit("S_" + std::to_string(n) + " exceeds the supported rank");
        factorial_.assign(n + 1, 1);
        for (int i = 1; i <= n; ++i) factorial_[i] = factorial_[i - 1] * i;
        std::size_t order = factorial_[n];
        elements_.reserve(order);
        for_each_permutation(n, [&](Permutation w) { elements_.push_back(std::move(w)); });
        right_.assign(order * (n - 1), 0);
        descent_.assign(order * (n - 1), 0);
        for (std::size_t idx = 0; idx < order; ++idx) {
            for (int i = 1; i < n; ++i) {
                std::size_t slot = idx * (n - 1) + (i - 1);
                right_[slot] = static_cast<std::uint32_t>(index_of(elements_[idx].apply_gen(i).first));
                descent_[slot] = elements_[idx].has_right_descent(i) ? 1 : 0;
            }
        }
    }

    /// Shared instance per rank.
    static std::shared_ptr<const SymmetricGroup> get(int n) {
        static std::mutex mu;
        static std::vector<std::shared_ptr<const SymmetricGroup>> cache(kMaxRank + 1);
        if (n < 1 || n > kMaxRank) return std::make_shared<const SymmetricGroup>(n);  // throws
        std::lock_guard lock(mu);
        if (!cache[n]) cache[n] = std::make_shared<const SymmetricGroup>(n);
        return cache[n];
    }

    int rank() const noexcept { return n_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const Permutation& element(std::size_t idx) const { return elements_[idx]; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }

    /// Lexicographic rank via the Lehmer code.
    std::size_t index_of(const Permutation& w) const {
        if (w.rank() != n_) throw std::invalid_argument("SymmetricGroup: rank mismatch");
        std::size_t idx = 0;
        const auto& im = w.images();
        for (int i = 0; i < n_; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < n_; ++j)
                if (im[j] < im[i]) ++smaller;
            idx += smaller * factorial_[n_ - 1 - i];
        }
        return idx;
    }

    /// Index of element(idx) * s_i.
    std::size_t right_gen(std::size_t idx, int i) const { return right_[idx * (n_ - 1) + (i - 1)]; }
    /// Whether l(element(idx) * s_i) < l(element(idx)).
    bool descent(std::size_t idx, int i) const { return descent_[idx * (n_ - 1) + (i - 1)] != 0; }

private:
    int n_;
    std::vector<std::size_t> factorial_;
    std::vector<Permutation> elements_;
    std::vector<std::uint32_t> right_;
    std::vector<std::uint8_t> descent_;
};

}  // namespace hecke
