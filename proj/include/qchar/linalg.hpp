#pragma once

#include <vector>

#include "qchar/errors.hpp"
#include "qchar/rational.hpp"

namespace qchar::detail {

/// Solve A x = b exactly by Gaussian elimination (A square, invertible).
inline std::vector<Rat> solve(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    const size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            Rat f = A[r][col] / A[col][col];
            for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

} // namespace qchar::detail
