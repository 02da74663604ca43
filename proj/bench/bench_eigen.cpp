// bench_eigen.cpp — serial vs OpenMP eigensolver on Dicke Hamiltonians and random matrices
#include <omp.h>

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "dicke/hamiltonian.hpp"
#include "dicke/sym_eigen.hpp"

using dicke::linalg::EigenDecomposition;

namespace {

std::vector<double> random_symmetric(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) a[i * n + j] = a[j * n + i] = dist(rng);
    return a;
}

double max_value_deviation(const EigenDecomposition& x, const EigenDecomposition& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.values.size(); ++i)
        m = std::max(m, std::fabs(x.values[i] - y.values[i]));
    return m;
}

void run_case(const char* label, std::vector<double> a, std::size_t n) {
    double t0 = omp_get_wtime();
    const EigenDecomposition serial = dicke::linalg::sym_eigen_serial(a, n);
    const double t_serial = omp_get_wtime() - t0;

    t0 = omp_get_wtime();
    const EigenDecomposition parallel = dicke::linalg::sym_eigen_parallel(std::move(a), n);
    const double t_parallel = omp_get_wtime() - t0;

    std::printf("%-28s n=%5zu  serial %8.3f s  parallel %8.3f s  speedup %5.2fx  max|dλ| %.3e\n",
                label, n, t_serial, t_parallel, t_serial / t_parallel,
                max_value_deviation(serial, parallel));
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    for (std::size_t n : {400u, 800u, 1200u})
        run_case("random symmetric", random_symmetric(n, 42), n);

    dicke::Params p;
    p.omega_c = p.omega_a = 1.0;
    p.n_atoms = 12;
    p.sz_expect = -12.0;
    p = p.with_couplings(0.9, 0.9);
    for (int nmax : {60, 100}) {
        const dicke::ed::BasisDescriptor basis(nmax, p.spin());
        const dicke::ed::OperatorMatrix h = dicke::ed::build_hamiltonian(p, basis);
        char label[64];
        std::snprintf(label, sizeof label, "dicke N=12 n_max=%d", nmax);
        run_case(label, h.elem, h.dim);
    }
    return 0;
}
