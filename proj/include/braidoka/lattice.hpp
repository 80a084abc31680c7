#pragma once

// Weierstrass ℘ for lattices α(Z + τZ), its half-period values and branch loci.

#include <array>
#include <complex>
#include <vector>

namespace braidoka {

using cplx = std::complex<double>;

struct LatticeSpec {
  cplx alpha = 1.0;
  cplx tau = cplx(0.0, 1.0);
};

// Lattice generated by a and b, written as α(Z + τZ) with Im τ > 0 and α one
// of the generators. Throws InvalidArgument for R-linearly dependent input.
LatticeSpec normalize_generators(cplx a, cplx b);
// Same lattice with τ moved towards the standard fundamental domain
// (τ -> τ + k and τ -> -1/τ, compensated in α).
LatticeSpec reduce_lattice(const LatticeSpec& spec);

constexpr int kDefaultRadius = 60;

// ℘_τ and ℘'_τ summed row by row: each row of lattice points ζ - nτ - Z is
// summed in closed form through π²/sin², rows |n| <= R. Rows decay like
// exp(-2π|n| Im τ).
// Throws PoleProximity within 1e-8 of a lattice point, InvalidArgument when
// Im τ <= 0 or R < 1.
cplx wp(cplx zeta, cplx tau, int R = kDefaultRadius);
cplx wp_prime(cplx zeta, cplx tau, int R = kDefaultRadius);

// Plain truncated lattice sum over |m|, |n| <= R. Slow and only accurate to
// O(1/R); kept as an independent check of wp.
cplx wp_direct(cplx zeta, cplx tau, int R);
cplx wp_prime_direct(cplx zeta, cplx tau, int R);

// (℘(1/2), ℘(τ/2), ℘((1+τ)/2)).
std::array<cplx, 3> e_values(cplx tau, int R = kDefaultRadius);

struct BranchLocus {
  std::array<cplx, 3> e;
};

// α^-2 e_values(τ).
BranchLocus branch_locus(const LatticeSpec& spec, int R = kDefaultRadius);

// Smallest over matchings of the largest pairwise distance.
double set_distance(const BranchLocus& a, const BranchLocus& b);

// |℘'^2 - 4 ∏(℘ - e_j)| / (1 + |℘'|^2)
double ode_residual(cplx tau, cplx zeta, int R = kDefaultRadius);

struct PathSample {
  double t = 0.0;
  cplx tau;
  BranchLocus locus;
};

// Branch loci along τ(t) = τ0 + t (τ1 - τ0), t = 0, 1/steps, ..., 1.
std::vector<PathSample> branch_locus_path(cplx alpha, cplx tau0, cplx tau1, int steps, int R = kDefaultRadius);

}  // namespace braidoka
