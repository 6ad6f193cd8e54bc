#pragma once

// JSON encodings:
//   composition   [3,1,4]                (∅ is [])
//   polynomial    ascending coefficients, 1+xi^2 is [1,0,1], zero is []
//                 (coefficients beyond 64 bits are written as decimal strings)
//   permutation   one-line images
//   Hecke element [{"w": [...], "c": [...]}, ...] sorted by (length, one-line)
//   matrix        {"rows": [...], "cols": [...], "entries": [[poly, ...], ...]}

#include "hecke/composition.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/matrix.hpp"
#include "hecke/permutation.hpp"
#include "hecke/poly.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hecke::json {

using Json = nlohmann::ordered_json;

inline Json to_json(const Composition& c) { return Json(c.parts()); }

inline Composition composition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("composition JSON must be an array");
    return Composition(j.get<std::vector<int>>());
}

inline Json to_json(const Integer& v) {
    if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("integer JSON must be a number or a decimal string");
}

inline Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

inline Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Integer> c;
    for (const auto& e : j) c.push_back(integer_from_json(e));
    return Poly(std::move(c));
}

inline Json to_json(const Permutation& w) { return Json(w.images()); }

inline Json to_json(const HeckeElement& h) {
    Json arr = Json::array();
    for (const auto& [w, c] : h.terms()) arr.push_back(Json{{"w", to_json(w)}, {"c", to_json(c)}});
    return arr;
}

inline HeckeElement hecke_from_json(const Json& j, int n) {
    HeckeElement h(n);
    for (const auto& term : j) h.set_coeff(Permutation(term.at("w").get<std::vector<int>>()), poly_from_json(term.at("c")));
    return h;
}

inline Json to_json(const LabeledMatrix& m) {
    Json rows = Json::array();
    Json cols = Json::array();
    for (const auto& r : m.row_labels()) rows.push_back(to_json(r));
    for (const auto& c : m.col_labels()) cols.push_back(to_json(c));
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.ncols(); ++j) row.push_back(to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

inline LabeledMatrix matrix_from_json(const Json& j) {
    std::vector<Composition> rows, cols;
    for (const auto& r : j.at("rows")) rows.push_back(composition_from_json(r));
    for (const auto& c : j.at("cols")) cols.push_back(composition_from_json(c));
    std::vector<std::vector<Poly>> grid;
    for (const auto& row : j.at("entries")) {
        std::vector<Poly> line;
        for (const auto& e : row) line.push_back(poly_from_json(e));
        grid.push_back(std::move(line));
    }
    return LabeledMatrix(std::move(rows), std::move(cols), std::move(grid));
}

/// Object key for a composition: its JSON text, e.g. "[2,1]".
inline std::string key(const Composition& c) { return to_json(c).dump(); }

}  // namespace hecke::json
