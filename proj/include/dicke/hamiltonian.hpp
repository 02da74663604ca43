// hamiltonian.hpp — truncated Fock ⊗ collective-spin basis and the Dicke Hamiltonian matrix
#pragma once

#include <cstddef>
#include <vector>

#include "dicke/params.hpp"

namespace dicke::ed {

// Product basis |n, m⟩ with photon number n ∈ [0, n_max] and spin projection
// m ∈ {−j, −j+1, …, j}. Enumeration is lexicographic with the photon number
// major: index = n (2j+1) + (m + j). The spin operators follow the Pauli-like
// normalization [Sz, S±] = ±2 S±, realized as Sz = 2 Jz, S± = J±, so the Sz
// eigenvalue of |n, m⟩ is 2m.
struct BasisDescriptor {
    int n_max = 0;
    double spin_j = 0.5;

    BasisDescriptor() = default;
    BasisDescriptor(int nmax, double j);

    std::size_t spin_states() const { return spin_states_; }
    std::size_t dimension() const { return static_cast<std::size_t>(n_max + 1) * spin_states_; }

    std::size_t index(int n, int spin_k) const {
        return static_cast<std::size_t>(n) * spin_states_ + static_cast<std::size_t>(spin_k);
    }
    int photon_of(std::size_t idx) const { return static_cast<int>(idx / spin_states_); }
    int spin_k_of(std::size_t idx) const { return static_cast<int>(idx % spin_states_); }
    double m_of(int spin_k) const { return -spin_j + spin_k; }
    double sz_of(int spin_k) const { return 2.0 * m_of(spin_k); }

    // +1/−1 grading preserved by the Hamiltonian: (photon number + spin-raising
    // count) mod 2.
    int parity_of(std::size_t idx) const {
        return (photon_of(idx) + spin_k_of(idx)) % 2 == 0 ? 1 : -1;
    }

private:
    std::size_t spin_states_ = 2;
};

// Dense real symmetric matrix in the basis above, built symmetric entry by entry.
struct OperatorMatrix {
    std::size_t dim = 0;
    std::vector<double> elem; // row-major

    double& at(std::size_t i, std::size_t j) { return elem[i * dim + j]; }
    double at(std::size_t i, std::size_t j) const { return elem[i * dim + j]; }

    double max_abs() const;
    double trace() const;
};

// Matrix of ω_c a†a + (ω_a/2) Sz + (λ-/√(2N))(a S+ + a† S-) + (λ+/√(2N))(a S- + a† S+)
// on the truncated basis. Ladder amplitudes are √n √(j(j+1) − m(m±1)).
OperatorMatrix build_hamiltonian(const Params& p, const BasisDescriptor& basis);

} // namespace dicke::ed
