// params.hpp — model parameters, validation, and the squeeze-frame coupling map
#pragma once

#include <optional>
#include <utility>

#include "dicke/error.hpp"

namespace dicke {

// Physical inputs (ħ = 1; all frequencies and couplings share one energy unit,
// conventionally units of omega_c).
struct Params {
    double omega_c = 1.0;      // cavity frequency, > 0
    double omega_a = 1.0;      // atomic transition frequency, > 0
    double lambda_minus = 0.0; // co-rotating coupling
    double lambda_plus = 0.0;  // counter-rotating coupling
    int n_atoms = 1;           // N >= 1
    std::optional<double> spin_j; // collective spin sector; defaults to N/2
    double sz_expect = -1.0;   // <Sz> in Pauli-like normalization (eigenvalues step by 2)

    double spin() const { return spin_j ? *spin_j : 0.5 * n_atoms; }
    double ratio() const { return lambda_minus != 0.0 ? lambda_plus / lambda_minus : 0.0; }
    bool rabi_coupling() const { return lambda_minus == lambda_plus && lambda_minus != 0.0; }

    // Throws error(errc::invalid_params) on violation. The |<Sz>| <= 2j bound is
    // enforced only when spin_j was supplied explicitly; with the default sector
    // any real sz_expect is accepted so limit studies can push <Sz> beyond it.
    void validate() const;

    Params with_couplings(double lm, double lp) const {
        Params q = *this;
        q.lambda_minus = lm;
        q.lambda_plus = lp;
        return q;
    }
};

// Returns params satisfying lambda_minus >= lambda_plus >= 0; the all-negative
// case lambda_minus <= lambda_plus <= 0 is mapped onto it by a global sign flip.
// Throws InvalidCouplings when the signs disagree or |lambda_plus| > |lambda_minus|.
Params canonicalize(const Params& p);

// The (r, Ω) pair equivalent to (λ-, λ+):
//   (Ω/2) cosh r = λ- / √(2N),   (Ω/2) sinh r = λ+ / √(2N).
struct SqueezeMap {
    double r = 0.0;           // squeeze parameter; +inf when rabi_limit
    double omega_rabi = 0.0;  // Ω; 0 when rabi_limit
    double omega_exp_r = 0.0; // Ω e^r = √(2/N) (λ- + λ+), finite in every case
    bool rabi_limit = false;  // λ- == λ+ > 0

    double exp_2r() const;  // e^{2r} (+inf when rabi_limit)
    double exp_m2r() const; // e^{-2r} (0 when rabi_limit)
    double cosh_2r() const;
    double sinh_2r() const;
    double cosh_r() const;
};

// r = ½ ln((λ- + λ+)/(λ- − λ+)), Ω = √((2/N)(λ-² − λ+²)).
// Throws SqueezeDivergence at λ- == λ+ (r diverges) and ZeroCoupling at
// λ- == λ+ == 0 (mapping undefined).
SqueezeMap squeeze_map(const Params& p);

// Rabi-tolerant variant used by the coupling-space pipeline: at λ- == λ+ it
// returns a map flagged rabi_limit with the finite combination Ω e^r kept;
// at λ- == λ+ == 0 it returns the trivial free-model map.
SqueezeMap dicke_frame(const Params& p);

// λ∓ = √(2N) (Ω/2) {cosh r, sinh r}. Rejects rabi-limit maps.
std::pair<double, double> inverse_squeeze_map(const SqueezeMap& m, int n_atoms);

} // namespace dicke
