#pragma once

// Published matrices and basis elements used as fixtures.

#include "hecke/center_basis.hpp"
#include "hecke/composition.hpp"
#include "hecke/matrix.hpp"
#include "hecke/poly.hpp"

#include <vector>

namespace fixtures {

using hecke::Composition;
using hecke::Expansion;
using hecke::LabeledMatrix;
using hecke::Poly;

inline std::vector<Composition> parts2() { return {{2}, {1, 1}}; }
inline std::vector<Composition> parts3() { return {{3}, {2, 1}, {1, 1, 1}}; }

inline LabeledMatrix m2() { return LabeledMatrix(parts2(), parts2(), {{Poly{1, 0, 1}, 1}, {Poly{0, 0, 1}, 1}}); }

inline LabeledMatrix n2() { return LabeledMatrix(parts2(), parts2(), {{1, -1}, {Poly{0, 0, -1}, Poly{1, 0, 1}}}); }

inline LabeledMatrix m3() {
    return LabeledMatrix(parts3(), parts3(),
                         {{Poly{1, 0, 5, 0, 5, 0, 1}, Poly{3, 0, 5, 0, 1}, 1},
                          {Poly{0, 0, 2, 0, 4, 0, 1}, Poly{1, 0, 4, 0, 1}, 1},
                          {Poly{0, 0, 0, 0, 3, 0, 1}, Poly{0, 0, 3, 0, 1}, 1}});
}

inline LabeledMatrix n3() {
    return LabeledMatrix(parts3(), parts3(),
                         {{Poly{1, 0, 1}, Poly{-3, 0, -2}, Poly{2, 0, 1}},
                          {Poly{0, 0, -2, 0, -1}, Poly{1, 0, 5, 0, 2}, Poly{-1, 0, -3, 0, -1}},
                          {Poly{0, 0, 0, 0, 3, 0, 1}, Poly{0, 0, -3, 0, -7, 0, -2}, Poly{1, 0, 3, 0, 4, 0, 1}}});
}

/// The published bases for n = 3, 4, 5, as monomial expansions in basis order.
inline std::vector<Expansion> basis_example(int n) {
    std::vector<Expansion> b = {
        {{{}, 1}},
        {{{1}, 1}},
        {{{2}, 1}, {{1, 1}, Poly{0, 0, -1}}},
    };
    if (n == 3) return b;
    b.push_back({{{2}, -1}, {{1, 1}, Poly{1, 0, 1}}});
    b.push_back({{{3}, Poly{1, 0, 1}}, {{2, 1}, Poly{0, 0, -2, 0, -1}}, {{1, 1, 1}, Poly{0, 0, 0, 0, 3, 0, 1}}});
    if (n == 4) return b;
    b.push_back({{{3}, Poly{-3, 0, -2}}, {{2, 1}, Poly{1, 0, 5, 0, 2}}, {{1, 1, 1}, Poly{0, 0, -3, 0, -7, 0, -2}}});
    b.push_back({{{4}, Poly{1, 0, 5, 0, 5, 0, 1}},
                 {{2, 2}, Poly{0, 0, -4, 0, -9, 0, -6, 0, -1}},
                 {{3, 1}, Poly{0, 0, -3, 0, -9, 0, -6, 0, -1}},
                 {{2, 1, 1}, Poly{0, 0, 0, 0, 8, 0, 14, 0, 7, 0, 1}},
                 {{1, 1, 1, 1}, Poly{0, 0, 0, 0, 0, 0, -16, 0, -20, 0, -8, 0, -1}}});
    return b;
}

/// Table of class-sum coefficients over Z S_3, columns in k-block order.
struct TableColumn {
    Composition mu;
    int gamma111, gamma21, gamma3;
};

inline std::vector<TableColumn> table1() {
    return {{{}, 1, 0, 0},       {{1}, 0, 1, 0},     {{2}, 3, 0, 1},     {{1, 1}, 0, 0, 1},  {{3}, 0, 3, 0},
            {{2, 1}, 0, 2, 0},   {{4}, 7, 0, 5},     {{2, 2}, 2, 0, 1},  {{3, 1}, 2, 0, 4},  {{5}, 0, 11, 0},
            {{3, 2}, 0, 4, 0},   {{4, 1}, 0, 6, 0},  {{6}, 23, 0, 21},   {{3, 3}, 2, 0, 3},  {{4, 2}, 8, 0, 6},
            {{5, 1}, 10, 0, 12}, {{7}, 0, 43, 0},    {{4, 3}, 0, 8, 0},  {{5, 2}, 0, 12, 0}, {{6, 1}, 0, 22, 0}};
}

}  // namespace fixtures
