// test_util.hpp — shared generators for property-style tests
#pragma once

#include <random>

#include "dicke/params.hpp"

namespace testutil {

// Random canonical parameter set with <Sz> < 0. ratio_max < 1 keeps the
// squeeze map finite.
inline dicke::Params random_canonical(std::mt19937_64& rng, double ratio_max = 0.95) {
    std::uniform_real_distribution<double> freq(0.2, 3.0);
    std::uniform_real_distribution<double> coupling(0.05, 3.0);
    std::uniform_real_distribution<double> ratio(0.0, ratio_max);
    std::uniform_int_distribution<int> atoms(1, 8);

    dicke::Params p;
    p.omega_c = freq(rng);
    p.omega_a = freq(rng);
    p.n_atoms = atoms(rng);
    const double lm = coupling(rng);
    p.lambda_minus = lm;
    p.lambda_plus = lm * ratio(rng);
    std::uniform_real_distribution<double> sz(-(double)p.n_atoms, -0.05);
    p.sz_expect = sz(rng);
    return p;
}

} // namespace testutil
