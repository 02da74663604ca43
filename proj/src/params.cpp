#include "dicke/params.hpp"

#include <cmath>
#include <limits>

namespace dicke {

const char* errc_tag(errc c) noexcept {
    switch (c) {
        case errc::invalid_params: return "InvalidParams";
        case errc::invalid_couplings: return "InvalidCouplings";
        case errc::zero_coupling: return "ZeroCoupling";
        case errc::squeeze_divergence: return "SqueezeDivergence";
        case errc::sz_zero: return "SzZero";
        case errc::no_transition: return "NoTransition";
        case errc::ratio_one: return "RatioOne";
        case errc::unstable: return "Unstable";
        case errc::degenerate_l: return "DegenerateL";
        case errc::imaginary_gap: return "ImaginaryGap";
        case errc::below_critical: return "BelowCritical";
        case errc::cutoff_too_small: return "CutoffTooSmall";
        case errc::cutoff_limit: return "CutoffLimit";
        case errc::no_convergence: return "NoConvergence";
        case errc::no_crossing: return "NoCrossing";
        case errc::config_error: return "ConfigError";
        case errc::io_error: return "IoError";
    }
    return "Unknown";
}

bool errc_is_invalid_input(errc c) noexcept {
    switch (c) {
        case errc::invalid_params:
        case errc::invalid_couplings:
        case errc::zero_coupling:
        case errc::squeeze_divergence:
        case errc::sz_zero:
        case errc::no_transition:
        case errc::ratio_one:
        case errc::config_error:
            return true;
        default:
            return false;
    }
}

void Params::validate() const {
    if (!std::isfinite(omega_c) || omega_c <= 0.0)
        throw error(errc::invalid_params, "omega_c must be finite and > 0");
    if (!std::isfinite(omega_a) || omega_a <= 0.0)
        throw error(errc::invalid_params, "omega_a must be finite and > 0");
    if (!std::isfinite(lambda_minus) || !std::isfinite(lambda_plus))
        throw error(errc::invalid_params, "couplings must be finite");
    if (n_atoms < 1)
        throw error(errc::invalid_params, "n_atoms must be >= 1");
    if (!std::isfinite(sz_expect))
        throw error(errc::invalid_params, "sz_expect must be finite");
    if (spin_j) {
        const double j = *spin_j;
        if (!(j > 0.0) || std::fabs(2.0 * j - std::round(2.0 * j)) > 1e-9)
            throw error(errc::invalid_params, "spin_j must be a positive half-integer");
        if (std::fabs(sz_expect) > 2.0 * j + 1e-12)
            throw error(errc::invalid_params, "|sz_expect| must not exceed 2*spin_j");
    }
}

Params canonicalize(const Params& p) {
    p.validate();
    const double lm = p.lambda_minus;
    const double lp = p.lambda_plus;
    if (lm >= 0.0 && lp >= 0.0) {
        if (lm < lp)
            throw error(errc::invalid_couplings, "lambda_plus/lambda_minus must lie in [0, 1]");
        return p;
    }
    if (lm <= 0.0 && lp <= 0.0) {
        if (lm > lp)
            throw error(errc::invalid_couplings, "all-negative couplings require lambda_minus <= lambda_plus <= 0");
        return p.with_couplings(-lm, -lp);
    }
    throw error(errc::invalid_couplings, "couplings of mixed sign have no canonical form");
}

double SqueezeMap::exp_2r() const {
    return rabi_limit ? std::numeric_limits<double>::infinity() : std::exp(2.0 * r);
}

double SqueezeMap::exp_m2r() const {
    return rabi_limit ? 0.0 : std::exp(-2.0 * r);
}

double SqueezeMap::cosh_2r() const { return 0.5 * (exp_2r() + exp_m2r()); }
double SqueezeMap::sinh_2r() const { return 0.5 * (exp_2r() - exp_m2r()); }
double SqueezeMap::cosh_r() const { return std::cosh(r); }

namespace {

void require_canonical(const Params& p) {
    if (!(p.lambda_minus >= p.lambda_plus && p.lambda_plus >= 0.0))
        throw error(errc::invalid_couplings, "params must be canonical (lambda_minus >= lambda_plus >= 0)");
}

} // namespace

SqueezeMap squeeze_map(const Params& p) {
    p.validate();
    require_canonical(p);
    const double lm = p.lambda_minus;
    const double lp = p.lambda_plus;
    if (lm == 0.0 && lp == 0.0)
        throw error(errc::zero_coupling, "squeeze map undefined at lambda_minus = lambda_plus = 0");
    if (lm == lp)
        throw error(errc::squeeze_divergence, "squeeze parameter diverges at lambda_minus = lambda_plus");
    SqueezeMap m;
    m.r = 0.5 * std::log((lm + lp) / (lm - lp));
    m.omega_rabi = std::sqrt((2.0 / p.n_atoms) * (lm * lm - lp * lp));
    m.omega_exp_r = std::sqrt(2.0 / p.n_atoms) * (lm + lp);
    m.rabi_limit = false;
    return m;
}

SqueezeMap dicke_frame(const Params& p) {
    p.validate();
    require_canonical(p);
    const double lm = p.lambda_minus;
    const double lp = p.lambda_plus;
    if (lm == 0.0 && lp == 0.0) return SqueezeMap{};
    if (lm == lp) {
        SqueezeMap m;
        m.r = std::numeric_limits<double>::infinity();
        m.omega_rabi = 0.0;
        m.omega_exp_r = std::sqrt(2.0 / p.n_atoms) * (lm + lp);
        m.rabi_limit = true;
        return m;
    }
    return squeeze_map(p);
}

std::pair<double, double> inverse_squeeze_map(const SqueezeMap& m, int n_atoms) {
    if (n_atoms < 1) throw error(errc::invalid_params, "n_atoms must be >= 1");
    if (m.rabi_limit)
        throw error(errc::squeeze_divergence, "inverse squeeze map undefined in the rabi limit");
    if (!(m.omega_rabi >= 0.0) || !(m.r >= 0.0))
        throw error(errc::invalid_params, "squeeze map requires omega_rabi >= 0 and r >= 0");
    const double scale = std::sqrt(2.0 * n_atoms) * 0.5 * m.omega_rabi;
    return {scale * std::cosh(m.r), scale * std::sinh(m.r)};
}

} // namespace dicke
