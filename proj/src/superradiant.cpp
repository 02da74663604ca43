#include "dicke/superradiant.hpp"

#include <cmath>

#include "dicke/normal_phase.hpp"

namespace dicke {

DressedState dressed_state(double alpha, const Params& p, const SqueezeMap& m) {
    p.validate();
    if (!(alpha >= 0.0))
        throw error(errc::invalid_params, "displacement alpha must be >= 0");
    const double drive = alpha * m.omega_exp_r; // α Ω e^r
    DressedState out;
    out.alpha = alpha;
    out.theta = 0.5 * std::atan(drive / p.omega_a);
    out.omega_tilde = std::sqrt(p.omega_a * p.omega_a + drive * drive);
    out.cos_2theta = p.omega_a / out.omega_tilde;
    return out;
}

GenericRabiCoefficients generic_rabi(double alpha, const Params& p, const SqueezeMap& m) {
    const DressedState ds = dressed_state(alpha, p, m);
    if (m.omega_exp_r == 0.0)
        throw error(errc::degenerate_l, "L vanishes without coupling; mu undefined");
    GenericRabiCoefficients out;
    out.j_coeff = p.omega_c;
    out.k_coeff = p.omega_c * alpha * alpha;
    out.l_coeff = m.omega_exp_r * m.omega_exp_r / (8.0 * p.omega_c);
    out.m_coeff = 0.25 * m.omega_exp_r * ds.cos_2theta;
    out.mu = -out.m_coeff / (2.0 * out.l_coeff);
    out.cos_2theta = ds.cos_2theta;
    const double mu_closed = -p.omega_c * ds.cos_2theta / m.omega_exp_r;
    if (std::fabs(out.mu - mu_closed) > 1e-12 * std::max(std::fabs(mu_closed), 1.0))
        throw error(errc::no_convergence, "mu disagrees with its closed form");
    return out;
}

double s_transform_gap(const GenericRabiCoefficients& c, double tau_z_expect) {
    if (!(tau_z_expect >= -1.0 && tau_z_expect <= 1.0))
        throw error(errc::invalid_params, "<tau_z> must lie in [-1, 1]");
    if (c.l_coeff == 0.0)
        throw error(errc::degenerate_l, "L vanished; mu undefined");
    const double c_eff = -2.0 * c.mu * (c.m_coeff + c.mu * c.l_coeff) * tau_z_expect;
    try {
        return bogoliubov(c.j_coeff, c_eff).gap;
    } catch (const error& e) {
        if (e.code() == errc::unstable)
            throw error(errc::imaginary_gap, "excitation energy argument is negative");
        throw;
    }
}

SuperradiantSolution superradiant_solution(const Params& p) {
    p.validate();
    if (!(p.lambda_minus >= p.lambda_plus && p.lambda_plus >= 0.0))
        throw error(errc::invalid_couplings, "superradiant solution requires canonical couplings");
    if (!(p.sz_expect < 0.0))
        throw error(errc::no_transition, "the broken phase requires <Sz> < 0");
    if (p.lambda_minus == 0.0)
        throw error(errc::below_critical, "no broken phase at zero coupling");

    const double rho = p.ratio();
    const double q = (1.0 - rho) / (1.0 + rho);
    const double w = p.omega_a + p.omega_c * q;
    const double lp4 = std::pow(p.lambda_minus * (1.0 + rho), 4);
    double c2 = 4.0 * p.omega_c * p.omega_c * w * w / (lp4 * p.n_atoms);
    if (c2 > 1.0 + boundary_tolerance)
        throw error(errc::below_critical, "cos^2(2θ) exceeds unity below the critical coupling");
    if (c2 > 1.0) c2 = 1.0;

    SuperradiantSolution out;
    out.cos2theta_sq = c2;
    const double lp2 = p.lambda_minus * p.lambda_minus * (1.0 + rho) * (1.0 + rho);
    out.alpha_sq_per_n = p.omega_a * p.omega_a * (1.0 - c2) / (2.0 * lp2 * c2);

    const double arg = 1.0 + c2 * p.sz_expect;
    const double scale = std::max(std::fabs(c2 * p.sz_expect), 1.0);
    if (std::fabs(arg) <= boundary_tolerance * scale) {
        out.epsilon = 0.0;
        out.at_boundary = true;
        return out;
    }
    if (arg < 0.0)
        throw error(errc::imaginary_gap, "excitation energy argument is negative");
    out.epsilon = p.omega_c * std::sqrt(arg);
    return out;
}

} // namespace dicke
