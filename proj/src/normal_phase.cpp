#include "dicke/normal_phase.hpp"

#include <cmath>
#include <limits>

namespace dicke {

namespace {

constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();

void require_negative_sz(const Params& p) {
    if (!(p.sz_expect < 0.0))
        throw error(errc::no_transition, "a phase transition requires <Sz> < 0");
}

double ratio_q(double ratio) { return (1.0 - ratio) / (1.0 + ratio); }

} // namespace

TransformCoefficients coefficients_at(const Params& p, const SqueezeMap& m, double v) {
    p.validate();
    if (!std::isfinite(v))
        throw error(errc::invalid_params, "transform parameter v must be finite");
    const double sz = p.sz_expect;
    const double wc = p.omega_c;
    const double wa = p.omega_a;
    const double em2r = m.exp_m2r();
    const double omega = m.omega_rabi;

    TransformCoefficients out;
    out.v = v;
    out.a_coeff = wc - wc * v * v * sz - v * em2r * (omega + v * wa) * sz;
    if (m.rabi_limit) {
        if (v != 0.0)
            throw error(errc::squeeze_divergence,
                        "B and C diverge at nonzero v in the rabi limit");
        out.c_coeff = 0.0;
        out.b_coeff = 0.5 * wa * sz;
        return out;
    }
    const double ch2 = m.cosh_2r();
    const double sh2 = m.sinh_2r();
    out.c_coeff = 0.5 * v * (omega * ch2 - v * wa * sh2) * sz;
    out.b_coeff = 0.5 * wa * (v * v + sz) - 0.5 * v * em2r * (omega + v * wa) * sz +
                  0.5 * v * v * wc * (ch2 - sz);
    return out;
}

VRoots v_roots(Branch branch, const Params& p, const SqueezeMap& m) {
    p.validate();
    const double sz = p.sz_expect;
    if (sz == 0.0) throw error(errc::sz_zero, "v roots undefined at <Sz> = 0");
    const double wc = p.omega_c;
    const double wa = p.omega_a;
    const double omega = m.omega_rabi;

    VRoots out;
    double numerator_pm = 0.0, denom = 0.0;
    if (branch == Branch::a_zero) {
        if (m.rabi_limit) {
            out.discriminant = -std::numeric_limits<double>::infinity();
            out.complex_pair = true;
            out.v_plus = out.v_minus = quiet_nan;
            return out;
        }
        const double e2r = m.exp_2r();
        out.discriminant = omega * omega * sz * sz +
                           4.0 * wc * sz * (wc + wa * m.exp_m2r()) * e2r * e2r;
        numerator_pm = omega * sz;
        denom = -2.0 * sz * (wa + wc * e2r);
    } else {
        const double em2r = m.exp_m2r();
        out.discriminant =
            omega * omega * sz * sz + 4.0 * wc * sz * (wa + wc * em2r) * em2r;
        numerator_pm = omega * sz;
        denom = 2.0 * sz * (wa + wc * em2r);
    }
    if (out.discriminant < 0.0) {
        out.complex_pair = true;
        out.v_plus = out.v_minus = quiet_nan;
        return out;
    }
    const double root = std::sqrt(out.discriminant);
    out.v_plus = (numerator_pm + root) / denom;
    out.v_minus = (numerator_pm - root) / denom;
    return out;
}

CriticalPoint critical_omega(Branch branch, const Params& p, const SqueezeMap& m) {
    p.validate();
    require_negative_sz(p);
    const double sz = p.sz_expect;
    const double wc = p.omega_c;
    const double wa = p.omega_a;

    CriticalPoint out;
    out.branch = branch;
    if (branch == Branch::a_zero) {
        if (m.rabi_limit)
            throw error(errc::ratio_one, "no transition on the A branch at lambda_minus = lambda_plus");
        const double e2r = m.exp_2r();
        out.omega_c_squared = -4.0 * wc * (wc + wa * m.exp_m2r()) * e2r * e2r / sz;
        out.v_star = -std::sqrt(out.omega_c_squared) / (2.0 * (wa + wc * e2r));
        out.lambda_c = std::sqrt(0.5 * p.n_atoms * out.omega_c_squared) * m.cosh_r();
        return out;
    }
    if (m.rabi_limit) {
        out.omega_c_squared = 0.0;
        out.v_star = 0.0;
        out.lambda_c = std::sqrt(-0.5 * p.n_atoms * wc * wa / sz);
        return out;
    }
    const double em2r = m.exp_m2r();
    out.omega_c_squared = -4.0 * wc * (wa + wc * em2r) * em2r / sz;
    out.v_star = std::sqrt(out.omega_c_squared) / (2.0 * (wa + wc * em2r));
    out.lambda_c = std::sqrt(0.5 * p.n_atoms * out.omega_c_squared) * m.cosh_r();
    return out;
}

CriticalPoint critical_lambda(Branch branch, double ratio, const Params& p, A0Form form) {
    p.validate();
    require_negative_sz(p);
    if (!(ratio >= 0.0 && ratio <= 1.0))
        throw error(errc::invalid_params, "ratio must lie in [0, 1]");
    const double sz = p.sz_expect;
    const double wc = p.omega_c;
    const double wa = p.omega_a;
    const double n = static_cast<double>(p.n_atoms);
    const double q = ratio_q(ratio);
    const double one_plus = 1.0 + ratio;
    const double one_minus = 1.0 - ratio;

    CriticalPoint out;
    out.branch = branch;
    if (branch == Branch::a_zero) {
        if (ratio == 1.0)
            throw error(errc::ratio_one, "no transition on the A branch at lambda_minus = lambda_plus");
        const double base = (-2.0 * n * wc / sz) * (wc + wa * q);
        const double lam_sq = form == A0Form::derived
                                  ? base * one_plus / (one_minus * one_minus * one_minus)
                                  : base * one_plus * one_plus /
                                        (one_minus * one_minus * one_minus * one_minus);
        out.lambda_c = std::sqrt(lam_sq);
        out.omega_c_squared = (2.0 / n) * lam_sq * (1.0 - ratio * ratio);
        out.v_star =
            -std::sqrt(out.omega_c_squared) / (2.0 * (wa + wc * one_plus / one_minus));
        return out;
    }
    const double w = wa + wc * q;
    const double lam_sq = (-2.0 * n * wc / sz) * w / (one_plus * one_plus);
    out.lambda_c = std::sqrt(lam_sq);
    out.omega_c_squared = (2.0 / n) * lam_sq * (1.0 - ratio * ratio);
    out.v_star = std::sqrt(out.omega_c_squared) / (2.0 * w);
    return out;
}

DickeCoefficients dicke_coefficients(const Params& p) {
    p.validate();
    if (!(p.lambda_minus >= p.lambda_plus && p.lambda_plus >= 0.0))
        throw error(errc::invalid_couplings, "dicke coefficients require canonical couplings");
    const double rho = p.ratio();
    const double q = ratio_q(rho);
    const double w = p.omega_a + p.omega_c * q;
    const double szn = p.sz_expect / p.n_atoms;
    const double lm_sq = p.lambda_minus * p.lambda_minus;
    const double one_plus_sq = (1.0 + rho) * (1.0 + rho);

    DickeCoefficients out;
    out.a_coeff = p.omega_c - lm_sq * (1.0 - rho * rho) / (2.0 * w * w) *
                                  (p.omega_c * (1.0 + 2.0 * q * q) + 3.0 * p.omega_a * q) * szn;
    out.a_plus_4c = p.omega_c + lm_sq * one_plus_sq / (2.0 * w) * szn;
    return out;
}

double dicke_ground_b(const Params& p) {
    const SqueezeMap m = dicke_frame(p);
    const double wa = p.omega_a;
    const double wc = p.omega_c;
    const double sz = p.sz_expect;
    if (m.rabi_limit) {
        // v* → 0 while v*² cosh 2r → (Ω e^r)² / (8 ω_a²) stays finite
        const double s = m.omega_exp_r * m.omega_exp_r;
        return 0.5 * wa * sz + wc * s / (16.0 * wa * wa);
    }
    const double em2r = m.exp_m2r();
    const double v = m.omega_rabi / (2.0 * (wa + wc * em2r));
    return 0.5 * wa * (v * v + sz) - 0.5 * v * em2r * (m.omega_rabi + v * wa) * sz +
           0.5 * v * v * wc * (m.cosh_2r() - sz);
}

BogoliubovSolution bogoliubov(double a_coeff, double c_coeff, double b_coeff) {
    const double a4c = a_coeff + 4.0 * c_coeff;
    const double product = a_coeff * a4c;
    BogoliubovSolution out;
    if (std::fabs(product) <= boundary_tolerance * std::max(a_coeff * a_coeff, 1.0)) {
        out.at_boundary = true;
        out.gap = 0.0;
        out.beta = 0.0;
        out.ground_energy = b_coeff - 0.5 * a_coeff;
        return out;
    }
    if (a_coeff < 0.0 || a4c < 0.0)
        throw error(errc::unstable, "quadratic form unstable: A and A + 4C must both be positive");
    out.beta = -0.25 * std::log(a4c / a_coeff);
    out.gap = std::sqrt(product);
    out.ground_energy = b_coeff - 0.5 * a_coeff + out.gap;
    return out;
}

std::vector<GapPoint> normal_gap_profile(const Params& p, const std::vector<double>& lambda_grid) {
    p.validate();
    const double rho = p.ratio();
    std::vector<GapPoint> out;
    out.reserve(lambda_grid.size());
    for (double lam : lambda_grid) {
        const Params q = p.with_couplings(lam, rho * lam);
        const DickeCoefficients dc = dicke_coefficients(q);
        const double c = 0.25 * (dc.a_plus_4c - dc.a_coeff);
        const BogoliubovSolution sol = bogoliubov(dc.a_coeff, c, dicke_ground_b(q));
        out.push_back({lam, sol.gap, sol.ground_energy});
    }
    return out;
}

} // namespace dicke
