// normal_phase.hpp — transform coefficients, Bogoliubov gap, v roots, critical couplings
#pragma once

#include <vector>

#include "dicke/params.hpp"

namespace dicke {

enum class Branch { a_zero, a_plus_4c };

// Form of the A-branch critical condition in coupling space. The two printed
// powers of (1+ρ)/(1−ρ) disagree for ρ > 0; 'derived' is the form consistent
// with the frequency-space condition under the coupling map and is the
// canonical route. Both coincide at ρ = 0.
enum class A0Form { derived, verbatim };

// Scalar coefficients of the transformed Hamiltonian  A a†a + B + C (a + a†)².
struct TransformCoefficients {
    double a_coeff = 0.0;
    double b_coeff = 0.0;
    double c_coeff = 0.0;
    double v = 0.0;
};

struct BogoliubovSolution {
    double beta = 0.0;          // e^{-4β} = (A+4C)/A; undefined (0) when at_boundary
    double gap = 0.0;           // √(A(A+4C))
    double ground_energy = 0.0; // B − A/2 + √(A(A+4C))
    bool at_boundary = false;   // |A(A+4C)| within the boundary tolerance
};

struct VRoots {
    double v_plus = 0.0;  // NaN when complex_pair
    double v_minus = 0.0; // NaN when complex_pair
    double discriminant = 0.0;
    bool complex_pair = false; // no real root at this Ω
};

struct CriticalPoint {
    Branch branch = Branch::a_plus_4c;
    double omega_c_squared = 0.0; // critical Ω²
    double lambda_c = 0.0;        // λ- at criticality for the given ratio
    double v_star = 0.0;          // degenerate root
};

// |A(A+4C)| <= boundary_tolerance * max(A², 1) classifies a point as critical.
inline constexpr double boundary_tolerance = 1e-12;

// A, B, C at transform parameter v:
//   A = ω_c − ω_c v² <Sz> − v e^{-2r} (Ω + v ω_a) <Sz>
//   C = (v/2) (Ω cosh 2r − v ω_a sinh 2r) <Sz>
//   B = (ω_a/2)(v² + <Sz>) − (v/2) e^{-2r} (Ω + v ω_a) <Sz> + (v² ω_c/2)(cosh 2r − <Sz>)
// In the rabi limit e^{-2r} terms vanish; B and C stay finite only at v = 0
// there, so nonzero v with a rabi-limit map is rejected.
TransformCoefficients coefficients_at(const Params& p, const SqueezeMap& m, double v);

// Both roots of the quadratic obtained by zeroing A (a_zero) or A + 4C
// (a_plus_4c). The discriminant equals <Sz>² (Ω² − Ω_c²); a negative value is
// reported through complex_pair instead of an exception so scans can record it.
VRoots v_roots(Branch branch, const Params& p, const SqueezeMap& m);

// Critical frequency for the requested branch:
//   a_zero:     Ω_c² = −4 ω_c (ω_c + ω_a e^{-2r}) e^{4r} / <Sz>
//   a_plus_4c:  Ω_c² = −4 ω_c (ω_a + ω_c e^{-2r}) e^{-2r} / <Sz>
// lambda_c is the equivalent coupling √(N Ω_c²/2) cosh r; v_star the degenerate root.
CriticalPoint critical_omega(Branch branch, const Params& p, const SqueezeMap& m);

// Coupling-space critical point at fixed ratio ρ = λ+/λ-.
CriticalPoint critical_lambda(Branch branch, double ratio, const Params& p,
                              A0Form form = A0Form::derived);

struct DickeCoefficients {
    double a_coeff = 0.0;
    double a_plus_4c = 0.0;
};

// A and A + 4C of the Dicke model at the degenerate transform parameter,
// evaluated directly in coupling space (finite at λ- == λ+):
//   A     = ω_c − λ-²(1−ρ²)/(2W²) [ω_c(1 + 2q²) + 3 ω_a q] <Sz>/N
//   A+4C  = ω_c + λ-²(1+ρ)²/(2W) <Sz>/N
// with q = (1−ρ)/(1+ρ) and W = ω_a + ω_c q.
DickeCoefficients dicke_coefficients(const Params& p);

// B at the degenerate root v* = Ω/(2(ω_a + ω_c e^{-2r})), coupling-space and
// rabi-safe (the finite v*² cosh 2r limit is substituted at λ- == λ+).
double dicke_ground_b(const Params& p);

// β = −¼ ln((A+4C)/A), gap = √(A(A+4C)), ground = B − A/2 + gap.
// Returns gap = 0 with at_boundary set when |A(A+4C)| is inside the boundary
// tolerance; throws Unstable when A < 0 or A + 4C < 0 beyond it.
BogoliubovSolution bogoliubov(double a_coeff, double c_coeff, double b_coeff = 0.0);

struct GapPoint {
    double lambda = 0.0;
    double gap = 0.0;
    double ground_energy = 0.0;
};

// Normal-phase gap and ground energy along a λ- grid at the ratio carried by p.
// Propagates Unstable once the grid crosses the critical coupling.
std::vector<GapPoint> normal_gap_profile(const Params& p, const std::vector<double>& lambda_grid);

} // namespace dicke
