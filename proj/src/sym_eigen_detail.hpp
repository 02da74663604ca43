// sym_eigen_detail.hpp — shared pieces of the serial and OpenMP eigensolvers
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "dicke/error.hpp"
#include "dicke/sym_eigen.hpp"

namespace dicke::linalg::detail {

// Plane rotation acting on columns (col, col + 1) of the eigenvector matrix.
struct Rotation {
    std::size_t col;
    double c, s;
};

// Implicit-shift QL on the tridiagonal (d, e); `apply` receives the rotation
// sequence of each sweep and updates the eigenvector columns. Rotations are
// recorded and applied per sweep so the two implementations can share the
// eigenvalue recurrence while differing only in how columns are updated.
template <typename ApplyFn>
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::size_t n,
                 ApplyFn&& apply) {
    if (n <= 1) return;
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    std::vector<Rotation> sweep;
    sweep.reserve(n);

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw error(errc::no_convergence,
                                "eigensolver: QL failed to converge at index " +
                                    std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                sweep.clear();
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    sweep.push_back({i, c, s});
                }
                apply(sweep);
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

inline void transpose_square(std::vector<double>& a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) std::swap(a[i * n + j], a[j * n + i]);
}

// Sort ascending (stable on ties); zt holds eigenvectors as contiguous rows
// (transposed layout), the output stores them as columns.
inline EigenDecomposition sort_result_transposed(std::vector<double>& d,
                                                 std::vector<double>& zt, std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
    EigenDecomposition out;
    out.dim = n;
    out.values.resize(n);
    out.vectors.assign(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        const double* vec = &zt[order[k] * n];
        for (std::size_t row = 0; row < n; ++row) out.vectors[row * n + k] = vec[row];
    }
    return out;
}

inline void check_input(const std::vector<double>& a, std::size_t n) {
    if (n == 0) throw error(errc::invalid_params, "eigensolver: dimension must be > 0");
    if (a.size() != n * n)
        throw error(errc::invalid_params, "eigensolver: matrix storage does not match dimension");
}

} // namespace dicke::linalg::detail
