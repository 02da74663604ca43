#include "dicke/hamiltonian.hpp"

#include <cmath>

namespace dicke::ed {

BasisDescriptor::BasisDescriptor(int nmax, double j) : n_max(nmax), spin_j(j) {
    if (nmax < 0) throw error(errc::invalid_params, "photon cutoff must be >= 0");
    const double two_j = 2.0 * j;
    if (!(j > 0.0) || std::fabs(two_j - std::round(two_j)) > 1e-9)
        throw error(errc::invalid_params, "spin_j must be a positive half-integer");
    spin_states_ = static_cast<std::size_t>(std::llround(two_j)) + 1;
}

double OperatorMatrix::max_abs() const {
    double m = 0.0;
    for (double x : elem) m = std::max(m, std::fabs(x));
    return m;
}

double OperatorMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim; ++i) t += elem[i * dim + i];
    return t;
}

OperatorMatrix build_hamiltonian(const Params& p, const BasisDescriptor& basis) {
    p.validate();
    const double j = basis.spin_j;
    const double jj = j * (j + 1.0);
    const double g_minus = p.lambda_minus / std::sqrt(2.0 * p.n_atoms);
    const double g_plus = p.lambda_plus / std::sqrt(2.0 * p.n_atoms);
    const int spin_states = static_cast<int>(basis.spin_states());

    OperatorMatrix h;
    h.dim = basis.dimension();
    h.elem.assign(h.dim * h.dim, 0.0);

    for (int n = 0; n <= basis.n_max; ++n) {
        const double sqrt_n = std::sqrt(static_cast<double>(n));
        for (int k = 0; k < spin_states; ++k) {
            const double m = basis.m_of(k);
            const std::size_t col = basis.index(n, k);
            h.at(col, col) = p.omega_c * n + p.omega_a * m;
            if (n == 0) continue;
            // a S+ : (n, m) -> (n-1, m+1), amplitude √n √(j(j+1) − m(m+1))
            if (k + 1 < spin_states && g_minus != 0.0) {
                const double amp = g_minus * sqrt_n * std::sqrt(jj - m * (m + 1.0));
                const std::size_t row = basis.index(n - 1, k + 1);
                h.at(row, col) = amp;
                h.at(col, row) = amp;
            }
            // a S- : (n, m) -> (n-1, m-1), amplitude √n √(j(j+1) − m(m−1))
            if (k - 1 >= 0 && g_plus != 0.0) {
                const double amp = g_plus * sqrt_n * std::sqrt(jj - m * (m - 1.0));
                const std::size_t row = basis.index(n - 1, k - 1);
                h.at(row, col) = amp;
                h.at(col, row) = amp;
            }
        }
    }
    return h;
}

} // namespace dicke::ed
