#include <omp.h>

#include <cmath>
#include <cstdint>

#include "dicke/sym_eigen.hpp"
#include "sym_eigen_detail.hpp"

namespace dicke::linalg {

namespace {

// Fixed block size for partial-sum accumulation; the combine order is by block
// index, so results do not depend on the thread count or schedule.
constexpr std::size_t accum_block = 256;

// Row-parallel Householder reduction with the same full-symmetric-block
// formulation as the serial reference.
void tridiagonalize_parallel(std::vector<double>& a, std::size_t n, std::vector<double>& d,
                             std::vector<double>& e) {
    auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    std::vector<double> w(n, 0.0);
    const std::size_t n_blocks = (n + accum_block - 1) / accum_block;
    std::vector<double> partials(n_blocks * n, 0.0);

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
                const std::int64_t sl = static_cast<std::int64_t>(l);
#pragma omp parallel for schedule(static)
                for (std::int64_t j = 0; j <= sl; ++j) {
                    const double* row = &a[static_cast<std::size_t>(j) * n];
                    // four fixed accumulator lanes so the dot product pipelines
                    double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
                    std::int64_t k = 0;
                    for (; k + 3 <= sl; k += 4) {
                        acc0 += row[k] * u[k];
                        acc1 += row[k + 1] * u[k + 1];
                        acc2 += row[k + 2] * u[k + 2];
                        acc3 += row[k + 3] * u[k + 3];
                    }
                    for (; k <= sl; ++k) acc0 += row[k] * u[k];
                    w[static_cast<std::size_t>(j)] = ((acc0 + acc1) + (acc2 + acc3)) / h;
                }
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) f += w[j] * u[j];
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) w[j] -= hh * u[j];
#pragma omp parallel for schedule(static)
                for (std::int64_t j = 0; j <= sl; ++j) {
                    const double uj = u[j];
                    const double wj = w[static_cast<std::size_t>(j)];
                    double* row = &a[static_cast<std::size_t>(j) * n];
                    for (std::int64_t k = 0; k <= sl; ++k) row[k] -= uj * w[k] + wj * u[k];
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
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] != 0.0) {
            const std::size_t blocks = (i + accum_block - 1) / accum_block;
            const std::int64_t sb = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static)
            for (std::int64_t b = 0; b < sb; ++b) {
                const std::size_t k0 = static_cast<std::size_t>(b) * accum_block;
                const std::size_t k1 = std::min(k0 + accum_block, i);
                double* part = &partials[static_cast<std::size_t>(b) * n];
                for (std::size_t j = 0; j < i; ++j) part[j] = 0.0;
                for (std::size_t k = k0; k < k1; ++k) {
                    const double uik = A(i, k);
                    const double* row = &a[k * n];
                    for (std::size_t j = 0; j < i; ++j) part[j] += uik * row[j];
                }
            }
            for (std::size_t j = 0; j < i; ++j) w[j] = 0.0;
            for (std::size_t b = 0; b < blocks; ++b) {
                const double* part = &partials[b * n];
                for (std::size_t j = 0; j < i; ++j) w[j] += part[j];
            }
            const std::int64_t si = static_cast<std::int64_t>(i);
#pragma omp parallel for schedule(static)
            for (std::int64_t k = 0; k < si; ++k) {
                const double cki = A(static_cast<std::size_t>(k), i);
                double* row = &a[static_cast<std::size_t>(k) * n];
                for (std::int64_t j = 0; j < si; ++j) row[j] -= w[j] * cki;
            }
        }
        d[i] = A(i, i);
        A(i, i) = 1.0;
        for (std::size_t j = 0; j < i; ++j) A(j, i) = A(i, j) = 0.0;
    }
}

} // namespace

EigenDecomposition sym_eigen_parallel(std::vector<double> a, std::size_t n) {
    detail::check_input(a, n);
    std::vector<double> d(n, 0.0), e(n, 0.0);
    tridiagonalize_parallel(a, n, d, e);
    detail::transpose_square(a, n);
    const std::size_t n_chunks = (n + accum_block - 1) / accum_block;
    const std::int64_t sc = static_cast<std::int64_t>(n_chunks);
    detail::ql_implicit(d, e, n, [&](const std::vector<detail::Rotation>& sweep) {
        if (sweep.empty()) return;
        // Each chunk of vector components sees the whole rotation sequence in
        // order, so the result matches the serial reference element for element.
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < sc; ++c) {
            const std::size_t k0 = static_cast<std::size_t>(c) * accum_block;
            const std::size_t k1 = std::min(k0 + accum_block, n);
            for (const auto& rot : sweep) {
                double* lo = &a[rot.col * n];
                double* hi = &a[(rot.col + 1) * n];
                for (std::size_t k = k0; k < k1; ++k) {
                    const double f = hi[k];
                    hi[k] = rot.s * lo[k] + rot.c * f;
                    lo[k] = rot.c * lo[k] - rot.s * f;
                }
            }
        }
    });
    return detail::sort_result_transposed(d, a, n);
}

EigenDecomposition sym_eigen(std::vector<double> a, std::size_t n) {
    const bool use_parallel = n >= 256 && omp_get_max_threads() > 1 &&
                              omp_get_num_procs() > 1 && !omp_in_parallel();
    return use_parallel ? sym_eigen_parallel(std::move(a), n)
                        : sym_eigen_serial(std::move(a), n);
}

} // namespace dicke::linalg
