#include "dicke/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>

#include "dicke/sym_eigen.hpp"

namespace dicke::ed {

namespace {

void check_dimension_cap(std::size_t dim, const SolverOptions& opts) {
    if (dim > opts.max_dimension)
        throw error(errc::cutoff_limit,
                    "matrix dimension " + std::to_string(dim) + " exceeds the cap of " +
                        std::to_string(opts.max_dimension));
}

linalg::EigenDecomposition run_solver(const OperatorMatrix& h, const SolverOptions& opts) {
    check_dimension_cap(h.dim, opts);
    switch (opts.parallel) {
        case 0: return linalg::sym_eigen_serial(h.elem, h.dim);
        case 1: return linalg::sym_eigen_parallel(h.elem, h.dim);
        default: return linalg::sym_eigen(h.elem, h.dim);
    }
}

} // namespace

SpectrumResult eigensolve(const OperatorMatrix& h, const BasisDescriptor& basis,
                          const SolverOptions& opts) {
    if (h.dim != basis.dimension())
        throw error(errc::invalid_params, "matrix dimension does not match the basis");
    const linalg::EigenDecomposition eig = run_solver(h, opts);
    const std::size_t n = h.dim;

    SpectrumResult out;
    out.eigenvalues = eig.values;
    out.ground_vector.resize(n);
    for (std::size_t row = 0; row < n; ++row) out.ground_vector[row] = eig.vectors[row * n];
    out.gap = n >= 2 ? eig.values[1] - eig.values[0] : 0.0;

    double photon = 0.0, sz = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = out.ground_vector[i] * out.ground_vector[i];
        photon += w * basis.photon_of(i);
        sz += w * basis.sz_of(basis.spin_k_of(i));
    }
    out.photon_number = photon;
    out.sz_ground = sz;

    double res_sq = 0.0;
    const double e0 = eig.values[0];
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        const double* row = &h.elem[i * n];
        for (std::size_t k = 0; k < n; ++k) acc += row[k] * out.ground_vector[k];
        acc -= e0 * out.ground_vector[i];
        res_sq += acc * acc;
    }
    out.residual = std::sqrt(res_sq);
    const double bound = 1e-10 * h.max_abs() * static_cast<double>(n);
    if (out.residual > std::max(bound, 1e-300))
        throw error(errc::no_convergence, "ground-state residual exceeds its bound");
    return out;
}

SpectrumResult spectrum(const Params& p, const BasisDescriptor& basis,
                        const SolverOptions& opts) {
    check_dimension_cap(basis.dimension(), opts); // before the matrix is allocated
    SpectrumResult out = eigensolve(build_hamiltonian(p, basis), basis, opts);
    if (basis.n_max == 0 && (p.lambda_minus != 0.0 || p.lambda_plus != 0.0))
        out.warnings.push_back(std::string(errc_tag(errc::cutoff_too_small)) +
                               ": observables with a zero-photon cutoff and nonzero coupling");
    return out;
}

double parity_expectation(const BasisDescriptor& basis, const std::vector<double>& vec) {
    if (vec.size() != basis.dimension())
        throw error(errc::invalid_params, "vector length does not match the basis");
    double acc = 0.0;
    for (std::size_t i = 0; i < vec.size(); ++i) acc += basis.parity_of(i) * vec[i] * vec[i];
    return acc;
}

ConvergenceResult converge_cutoff(const Params& p, int start_nmax, double tol,
                                  const SolverOptions& opts) {
    if (!(tol > 0.0)) throw error(errc::invalid_params, "tolerance must be > 0");
    if (start_nmax < 0) throw error(errc::invalid_params, "start cutoff must be >= 0");
    const double j = p.spin();

    int n_max = start_nmax;
    double last_delta = std::numeric_limits<double>::infinity();
    while (true) {
        const int step = std::max(10, n_max / 5);
        const BasisDescriptor wide(n_max + step, j);
        if (wide.dimension() > opts.max_dimension)
            throw error(errc::cutoff_limit,
                        "dimension cap reached before convergence (last delta " +
                            std::to_string(last_delta) + ")");
        const SpectrumResult base = spectrum(p, BasisDescriptor(n_max, j), opts);
        SpectrumResult refined = spectrum(p, wide, opts);
        last_delta = std::fabs(base.eigenvalues[0] - refined.eigenvalues[0]);
        if (last_delta < tol)
            return {n_max + step, last_delta, std::move(refined)};
        n_max *= 2;
        if (n_max == 0) n_max = 10;
    }
}

CrossoverResult crossover_estimate(const Params& p, const std::vector<double>& lambda_grid,
                                   double threshold, int n_max, const SolverOptions& opts) {
    if (lambda_grid.empty())
        throw error(errc::invalid_params, "lambda grid must be non-empty");
    if (!std::is_sorted(lambda_grid.begin(), lambda_grid.end()))
        throw error(errc::invalid_params, "lambda grid must be ascending");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw error(errc::invalid_params, "threshold must lie in (0, 1)");

    const BasisDescriptor basis(n_max, p.spin());
    const double rho = p.ratio();
    const std::int64_t count = static_cast<std::int64_t>(lambda_grid.size());
    std::vector<CrossoverPoint> profile(lambda_grid.size());
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            const double lam = lambda_grid[static_cast<std::size_t>(i)];
            const Params point = p.with_couplings(lam, rho * lam);
            const SpectrumResult sr = spectrum(point, basis, opts);
            profile[static_cast<std::size_t>(i)] = {lam, sr.photon_number / p.n_atoms,
                                                    sr.sz_ground / p.n_atoms, sr.gap};
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i].photon_per_n < threshold) continue;
        double lambda_star = profile[i].lambda;
        if (i > 0) {
            const double y0 = profile[i - 1].photon_per_n;
            const double y1 = profile[i].photon_per_n;
            lambda_star = profile[i - 1].lambda +
                          (threshold - y0) * (profile[i].lambda - profile[i - 1].lambda) /
                              (y1 - y0);
        }
        return {lambda_star, std::move(profile)};
    }
    throw error(errc::no_crossing, "photon fraction never reaches the threshold on this grid");
}

} // namespace dicke::ed
