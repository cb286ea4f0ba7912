#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "curveclass/errors.hpp"
#include "curveclass/rational.hpp"
#include "curveclass/surface.hpp"

namespace curveclass {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Row-reduces in place; returns the rank and records pivot columns.
inline std::size_t row_reduce(RationalMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = Rational(1) / m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

inline std::size_t matrix_rank(RationalMatrix m) { return row_reduce(m); }

// Basis of the right nullspace, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(RationalMatrix m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    std::vector<std::size_t> pivots;
    row_reduce(m, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

// Signature of a symmetric rational matrix by congruence diagonalization
// (simultaneous row and column operations); exact, Sylvester's law applies.
inline Signature symmetric_signature(RationalMatrix m) {
    std::size_t n = m.size();
    Signature sig;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i].is_zero()) {
            // Find a nonzero diagonal entry to swap in, or build one from an
            // off-diagonal entry via a row+column addition.
            std::size_t j = i + 1;
            while (j < n && m[j][j].is_zero()) ++j;
            if (j < n) {
                std::swap(m[i], m[j]);
                for (auto& row : m) std::swap(row[i], row[j]);
            } else {
                std::size_t c = i + 1;
                while (c < n && m[i][c].is_zero()) ++c;
                if (c == n) {
                    ++sig.zero;
                    continue;
                }
                for (std::size_t t = 0; t < n; ++t) m[i][t] += m[c][t];
                for (std::size_t t = 0; t < n; ++t) m[t][i] += m[t][c];
            }
        }
        Rational d = m[i][i];
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m[r][i].is_zero()) continue;
            Rational f = m[r][i] / d;
            for (std::size_t t = 0; t < n; ++t) m[r][t] -= f * m[i][t];
            for (std::size_t t = 0; t < n; ++t) m[t][r] -= f * m[t][i];
        }
        if (d.is_negative())
            ++sig.negative;
        else
            ++sig.positive;
    }
    return sig;
}

// Signature of a surface model's intersection form; must be (1, rank - 1).
inline Signature gram_signature(const SurfaceModel& model) {
    std::size_t n = model.rank();
    RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(model.gram(i, j));
    return symmetric_signature(std::move(m));
}

}  // namespace curveclass
