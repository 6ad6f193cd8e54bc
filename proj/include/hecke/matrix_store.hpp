#pragma once

// Supplies M^(k) and N^(k), computing each at most once per store. Small k
// use the direct Hecke-algebra route followed by exact inversion; larger k
// use the validated tower. An optional directory persists the matrices as
// JSON so later runs only compute what is new.

#include "hecke/json_io.hpp"
#include "hecke/matrix.hpp"
#include "hecke/tower.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace hecke {

enum class MatrixRoute { kAuto, kDirect, kTower };

inline const char* to_string(MatrixRoute r) {
    switch (r) {
        case MatrixRoute::kAuto: return "auto";
        case MatrixRoute::kDirect: return "direct";
        case MatrixRoute::kTower: return "tower";
    }
    return "?";
}

class MatrixStore {
public:
    explicit MatrixStore(MatrixRoute route = MatrixRoute::kAuto, std::optional<std::filesystem::path> cache_dir = {},
                         unsigned threads = 1)
        : route_(route), cache_dir_(std::move(cache_dir)), threads_(threads) {}

    /// Route actually used for k.
    MatrixRoute route_for(int k) const {
        if (k <= 1) return MatrixRoute::kDirect;
        if (route_ != MatrixRoute::kAuto) return route_;
        return k <= kMaxDirectK ? MatrixRoute::kDirect : MatrixRoute::kTower;
    }

    const LabeledMatrix& m(int k) { return get(k).first; }
    const LabeledMatrix& n(int k) { return get(k).second; }

private:
    using Pair = std::pair<LabeledMatrix, LabeledMatrix>;

    const Pair& get(int k) {
        std::lock_guard lock(mu_);
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        Pair p = load(k).value_or(Pair{});
        if (p.first.nrows() == 0) {
            p = compute(k);
            save(k, p);
        }
        return cache_.emplace(k, std::move(p)).first->second;
    }

    Pair compute(int k) const {
        if (route_for(k) == MatrixRoute::kDirect) {
            LabeledMatrix m = m_matrix_direct(k, 0, threads_);
            LabeledMatrix n = invert_exact(m);
            return {std::move(m), std::move(n)};
        }
        return {m_matrix_tower(k), n_matrix_tower(k)};
    }

    std::filesystem::path file_for(int k) const {
        return *cache_dir_ / ("MN_k" + std::to_string(k) + "_" + to_string(route_for(k)) + ".json");
    }

    std::optional<Pair> load(int k) const {
        if (!cache_dir_) return std::nullopt;
        std::ifstream in(file_for(k));
        if (!in) return std::nullopt;
        try {
            auto j = json::Json::parse(in);
            Pair p{json::matrix_from_json(j.at("M")), json::matrix_from_json(j.at("N"))};
            // A stale or hand-edited file is recomputed rather than trusted.
            if (!(p.first * p.second).is_identity()) return std::nullopt;
            return p;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    void save(int k, const Pair& p) const {
        if (!cache_dir_) return;
        std::filesystem::create_directories(*cache_dir_);
        std::ofstream out(file_for(k));
        out << json::Json{{"k", k}, {"route", to_string(route_for(k))}, {"M", json::to_json(p.first)},
                          {"N", json::to_json(p.second)}}
                   .dump()
            << "\n";
    }

    MatrixRoute route_;
    std::optional<std::filesystem::path> cache_dir_;
    unsigned threads_;
    std::mutex mu_;
    std::map<int, Pair> cache_;
};

}  // namespace hecke
