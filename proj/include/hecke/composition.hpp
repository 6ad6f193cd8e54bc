#pragma once

// Compositions and partitions, the recursive composition order, and the
// shape arithmetic (minus one, bar, prime) shared by every other module.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// A finite ordered list of positive integers. The empty composition is the
/// unique composition of zero.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// |λ|
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    /// ℓ(λ)
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    bool is_partition() const noexcept {
        return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
    }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

    /// "(3,1,4)" or "()" for the empty composition.
    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ')';
        return os.str();
    }

private:
    void validate() const {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }

    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.to_string(); }

/// The composition order: a < b iff |a| < |b|, or 0 < |a| = |b| and a' < b'
/// where ' drops the last part.
inline std::strong_ordering compare(const Composition& a, const Composition& b) {
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    int sa = a.size();
    int sb = b.size();
    std::size_t la = pa.size();
    std::size_t lb = pb.size();
    // Strip last parts in lockstep while sizes agree.
    while (true) {
        if (sa != sb) return sa <=> sb;
        if (sa == 0) return std::strong_ordering::equal;
        sa -= pa[la - 1];
        sb -= pb[lb - 1];
        --la;
        --lb;
    }
}

inline std::strong_ordering operator<=>(const Composition& a, const Composition& b) { return compare(a, b); }

struct CompositionHash {
    std::size_t operator()(const Composition& c) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int p : c.parts()) h ^= std::hash<int>{}(p) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

/// λ−1: subtract one from every part and drop the zeros.
inline Composition minus_one(const Composition& c) {
    std::vector<int> out;
    for (int p : c.parts())
        if (p > 1) out.push_back(p - 1);
    return Composition(std::move(out));
}

/// λ̄ relative to n: parts incremented by one, padded with ones, sorted
/// into a partition of n.
inline Composition bar(const Composition& c, int n) {
    int pad = n - c.length() - c.size();
    if (pad < 0)
        throw std::invalid_argument("bar: " + c.to_string() + " does not fit in rank " + std::to_string(n));
    std::vector<int> out;
    out.reserve(c.parts().size() + pad);
    for (int p : c.parts()) out.push_back(p + 1);
    out.insert(out.end(), pad, 1);
    std::sort(out.begin(), out.end(), std::greater<>());
    return Composition(std::move(out));
}

/// λ' (drop the last part).
inline Composition prime(const Composition& c) {
    if (c.empty()) throw std::invalid_argument("prime: empty composition");
    std::vector<int> out(c.parts().begin(), c.parts().end() - 1);
    return Composition(std::move(out));
}

/// All 2^{k-1} compositions of k (just ∅ for k = 0), in composition order.
inline std::vector<Composition> enumerate_compositions(int k) {
    if (k < 0) throw std::invalid_argument("enumerate_compositions: negative size");
    if (k == 0) return {Composition{}};
    // Compositions of k sorted by the order are exactly the compositions of
    // smaller sizes (sorted) extended by the complementary last part.
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (k - 1));
    for (int s = 0; s < k; ++s) {
        for (const auto& prefix : enumerate_compositions(s)) {
            std::vector<int> parts = prefix.parts();
            parts.push_back(k - s);
            out.emplace_back(std::move(parts));
        }
    }
    return out;
}

/// Compositions of every size below k, concatenated in order (2^{k-1} labels).
inline std::vector<Composition> compositions_below(int k) {
    std::vector<Composition> out;
    for (int s = 0; s < k; ++s) {
        auto part = enumerate_compositions(s);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// Partitions of k in composition order.
inline std::vector<Composition> enumerate_partitions(int k) {
    if (k < 0) throw std::invalid_argument("enumerate_partitions: negative size");
    std::vector<Composition> out;
    std::vector<int> cur;
    detail::partitions_rec(k, k, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Partitions of k with at most max_length parts, in composition order.
inline std::vector<Composition> enumerate_partitions(int k, int max_length) {
    auto all = enumerate_partitions(k);
    std::erase_if(all, [&](const Composition& c) { return c.length() > max_length; });
    return all;
}

/// Distinct orderings of the parts of a partition, in composition order.
inline std::vector<Composition> rearrangements(const Composition& lambda) {
    std::vector<int> parts = lambda.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    std::sort(out.begin(), out.end());
    return out;
}

/// The partition obtained by sorting the parts weakly decreasing.
inline Composition sorted_decreasing(const Composition& c) {
    std::vector<int> parts = c.parts();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Composition(std::move(parts));
}

}  // namespace hecke
