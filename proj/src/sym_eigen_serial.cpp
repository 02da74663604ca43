#include "dicke/sym_eigen.hpp"

#include <cmath>

#include "sym_eigen_detail.hpp"

namespace dicke::linalg {

namespace {

// Householder reduction to tridiagonal form, keeping the shrinking leading
// block exactly symmetric so every inner loop streams along rows. On exit `a`
// holds the reflector data consumed by the accumulation pass, d the diagonal
// and e the subdiagonal (e[0] = 0).
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& d,
                    std::vector<double>& e) {
    auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    std::vector<double> w(n, 0.0);

    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(A(i, k));
            if (scale == 0.0) {
                e[i] = A(i, l);
            } else {
                const double* u = &a[i * n];
                for (std::size_t k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                // w = B u / h, then the Householder correction
                for (std::size_t j = 0; j <= l; ++j) {
                    const double* row = &a[j * n];
                    double acc = 0.0;
                    for (std::size_t k = 0; k <= l; ++k) acc += row[k] * u[k];
                    w[j] = acc / h;
                }
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) f += w[j] * u[j];
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) w[j] -= hh * u[j];
                // rank-2 update of the full block: B -= u wᵀ + w uᵀ
                for (std::size_t j = 0; j <= l; ++j) {
                    const double uj = u[j];
                    const double wj = w[j];
                    double* row = &a[j * n];
                    for (std::size_t k = 0; k <= l; ++k) row[k] -= uj * w[k] + wj * u[k];
                }
                for (std::size_t j = 0; j <= l; ++j) A(j, i) = A(i, j) / h;
            }
        } else {
            e[i] = A(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    // Accumulate the orthogonal transform into the leading block.
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] != 0.0) {
            for (std::size_t j = 0; j < i; ++j) w[j] = 0.0;
            for (std::size_t k = 0; k < i; ++k) {
                const double uik = A(i, k);
                const double* row = &a[k * n];
                for (std::size_t j = 0; j < i; ++j) w[j] += uik * row[j];
            }
            for (std::size_t k = 0; k < i; ++k) {
                const double cki = A(k, i);
                double* row = &a[k * n];
                for (std::size_t j = 0; j < i; ++j) row[j] -= w[j] * cki;
            }
        }
        d[i] = A(i, i);
        A(i, i) = 1.0;
        for (std::size_t j = 0; j < i; ++j) A(j, i) = A(i, j) = 0.0;
    }
}

} // namespace

EigenDecomposition sym_eigen_serial(std::vector<double> a, std::size_t n) {
    detail::check_input(a, n);
    std::vector<double> d(n, 0.0), e(n, 0.0);
    tridiagonalize(a, n, d, e);
    // Work on the transposed transform so each rotation streams along two
    // contiguous rows.
    detail::transpose_square(a, n);
    detail::ql_implicit(d, e, n, [&](const std::vector<detail::Rotation>& sweep) {
        for (const auto& rot : sweep) {
            double* lo = &a[rot.col * n];
            double* hi = &a[(rot.col + 1) * n];
            for (std::size_t k = 0; k < n; ++k) {
                const double f = hi[k];
                hi[k] = rot.s * lo[k] + rot.c * f;
                lo[k] = rot.c * lo[k] - rot.s * f;
            }
        }
    });
    return detail::sort_result_transposed(d, a, n);
}

} // namespace dicke::linalg
