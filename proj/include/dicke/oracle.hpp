// oracle.hpp — exact-diagonalization ground truth: spectra, cutoff convergence, crossover
#pragma once

#include <string>
#include <vector>

#include "dicke/hamiltonian.hpp"

namespace dicke::ed {

struct SolverOptions {
    std::size_t max_dimension = 6000;
    // -1 auto (parallel for large matrices outside parallel regions), 0 force
    // serial, 1 force the OpenMP kernels.
    int parallel = -1;
};

struct SpectrumResult {
    std::vector<double> eigenvalues;   // ascending
    std::vector<double> ground_vector; // unit norm
    double photon_number = 0.0;        // <a†a> in the ground state
    double sz_ground = 0.0;            // <Sz> (Pauli-like normalization, = 2<Jz>)
    double gap = 0.0;                  // E1 − E0
    double residual = 0.0;             // ‖H v0 − E0 v0‖
    std::vector<std::string> warnings;
};

// Full spectrum with ground-state observables. Deterministic for identical
// input; enforces the residual bound ‖H v0 − E0 v0‖ <= 1e-10 ‖H‖_max dim.
SpectrumResult eigensolve(const OperatorMatrix& h, const BasisDescriptor& basis,
                          const SolverOptions& opts = {});

// Convenience: build the Hamiltonian for p on the given basis and solve.
SpectrumResult spectrum(const Params& p, const BasisDescriptor& basis,
                        const SolverOptions& opts = {});

// <v0| Π |v0> for the (photon + spin-raising count) mod 2 grading.
double parity_expectation(const BasisDescriptor& basis, const std::vector<double>& vec);

struct ConvergenceResult {
    int n_max = 0;
    double last_delta = 0.0;
    SpectrumResult spectrum;
};

// Doubles the cutoff until |E0(n_max) − E0(n_max + step)| < tol with
// step = max(10, n_max/5); throws CutoffLimit (carrying the last delta) when
// the dimension cap is reached first.
ConvergenceResult converge_cutoff(const Params& p, int start_nmax, double tol,
                                  const SolverOptions& opts = {});

struct CrossoverPoint {
    double lambda = 0.0;
    double photon_per_n = 0.0;
    double sz_per_n = 0.0;
    double gap = 0.0;
};

struct CrossoverResult {
    double lambda_star = 0.0;
    std::vector<CrossoverPoint> profile;
};

// Smallest λ- where <a†a>/N crosses `threshold`, linearly interpolated between
// grid neighbors; the ratio λ+/λ- is taken from p. Grid points evaluate
// independently (and in parallel); the profile is reported in grid order.
CrossoverResult crossover_estimate(const Params& p, const std::vector<double>& lambda_grid,
                                   double threshold, int n_max,
                                   const SolverOptions& opts = {});

} // namespace dicke::ed
