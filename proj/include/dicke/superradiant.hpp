// superradiant.hpp — displaced-frame dressed states and the broken-phase excitation energy
#pragma once

#include "dicke/params.hpp"

namespace dicke {

struct DressedState {
    double alpha = 0.0;       // displacement, >= 0
    double theta = 0.0;       // mixing angle, [0, π/4]
    double omega_tilde = 0.0; // √(ω_a² + α²Ω²e^{2r}), >= ω_a
    double cos_2theta = 0.0;  // ω_a / Ω̃
};

struct GenericRabiCoefficients {
    double j_coeff = 0.0; // ω_c
    double k_coeff = 0.0; // ω_c α²
    double l_coeff = 0.0; // Ω² e^{2r} / (8 ω_c)
    double m_coeff = 0.0; // Ω cos(2θ) e^r / 4
    double mu = 0.0;      // −M/(2L) = −ω_c cos(2θ) / (Ω e^r)
    double cos_2theta = 0.0;
};

struct SuperradiantSolution {
    double cos2theta_sq = 0.0;   // ∈ (0, 1]
    double alpha_sq_per_n = 0.0; // α²/N
    double epsilon = 0.0;        // ω_c √(1 + cos²2θ <Sz>)
    bool at_boundary = false;    // ε clamped to 0 at the classified phase boundary
};

// θ = ½ arctan(α Ω e^r / ω_a); finite in the rabi limit through Ω e^r.
DressedState dressed_state(double alpha, const Params& p, const SqueezeMap& m);

// Coefficients of the displaced Hamiltonian in generic Rabi form
// J a†a + K + L τz + M (a + a†) τx. Throws DegenerateL when the coupling
// vanishes (Ω e^r = 0, so L = 0 and μ is undefined).
GenericRabiCoefficients generic_rabi(double alpha, const Params& p, const SqueezeMap& m);

// Excitation energy via the effective quadratic form A' = J,
// C' = −2μ(M + μL) <τz>, fed to the Bogoliubov gap. Algebraically equal to
// J √(1 + cos²(2θ) <τz>) through the identity 2M²/L = ω_c cos²2θ.
double s_transform_gap(const GenericRabiCoefficients& c, double tau_z_expect);

// Broken-phase solution in coupling space:
//   cos²2θ = 4ω_c² [ω_a + ω_c (1−ρ)/(1+ρ)]² / (λ-⁴ (1+ρ)⁴ N)
//   α²/N   = ω_a² (1 − cos²2θ) / (2 λ-² (1+ρ)² cos²2θ)
//   ε      = ω_c √(1 + cos²2θ <Sz>)
// Throws BelowCritical when cos²2θ > 1 and ImaginaryGap when the ε argument
// turns negative beyond the boundary tolerance.
SuperradiantSolution superradiant_solution(const Params& p);

} // namespace dicke
