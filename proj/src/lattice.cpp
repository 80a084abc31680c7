#include "braidoka/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "braidoka/error.hpp"

namespace braidoka {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

void check_tau(cplx tau, int R) {
  if (!(tau.imag() > 0.0)) throw Error(ErrorCode::InvalidArgument, "Im τ must be positive");
  if (R < 1) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
}

void check_pole(cplx zeta, cplx tau) {
  const double n0 = std::round(zeta.imag() / tau.imag());
  for (double n = n0 - 1; n <= n0 + 1; ++n) {
    const cplx w = zeta - n * tau;
    const double m = std::round(w.real());
    if (std::abs(w - m) < 1e-8)
      throw Error(ErrorCode::PoleProximity, "ζ is within 1e-8 of a lattice point");
  }
}

// π² / sin²(πw), written through q = exp(±2πiw) with |q| <= 1.
cplx csc2(cplx w) {
  const bool upper = w.imag() >= 0.0;
  const cplx q = std::exp((upper ? 2.0 : -2.0) * kPi * kI * w);
  const cplx d = 1.0 - q;
  return -4.0 * kPi * kPi * q / (d * d);
}

// d/dw of csc2.
cplx csc2_prime(cplx w) {
  const bool upper = w.imag() >= 0.0;
  const cplx q = std::exp((upper ? 2.0 : -2.0) * kPi * kI * w);
  const cplx d = 1.0 - q;
  const cplx v = 8.0 * kPi * kPi * kPi * kI * q * (1.0 + q) / (d * d * d);
  return upper ? -v : v;
}

}  // namespace

LatticeSpec normalize_generators(cplx a, cplx b) {
  if (a == 0.0 || b == 0.0) throw Error(ErrorCode::InvalidArgument, "lattice generators must be nonzero");
  const cplx r = b / a;
  if (std::abs(r.imag()) < 1e-14 * std::abs(r))
    throw Error(ErrorCode::InvalidArgument, "lattice generators are linearly dependent over R");
  if (r.imag() > 0.0) return {a, r};
  return {b, a / b};
}

LatticeSpec reduce_lattice(const LatticeSpec& spec) {
  LatticeSpec s = spec;
  for (int iter = 0; iter < 200; ++iter) {
    s.tau -= std::round(s.tau.real());
    if (std::norm(s.tau) >= 1.0 - 1e-15) break;
    // Z + τZ = τ(Z + (-1/τ)Z)
    s.alpha *= s.tau;
    s.tau = -1.0 / s.tau;
  }
  return s;
}

cplx wp(cplx zeta, cplx tau, int R) {
  check_tau(tau, R);
  check_pole(zeta, tau);
  // Pair rows n and -n so the two tails shrink together.
  cplx rows = csc2(zeta);
  cplx consts = 0.0;
  for (int n = R; n >= 1; --n) {
    rows += csc2(zeta - static_cast<double>(n) * tau) + csc2(zeta + static_cast<double>(n) * tau);
    consts += 2.0 * csc2(static_cast<double>(n) * tau);
  }
  return rows - kPi * kPi / 3.0 - consts;
}

cplx wp_prime(cplx zeta, cplx tau, int R) {
  check_tau(tau, R);
  check_pole(zeta, tau);
  cplx s = csc2_prime(zeta);
  for (int n = R; n >= 1; --n)
    s += csc2_prime(zeta - static_cast<double>(n) * tau) + csc2_prime(zeta + static_cast<double>(n) * tau);
  return s;
}

cplx wp_direct(cplx zeta, cplx tau, int R) {
  check_tau(tau, R);
  check_pole(zeta, tau);
  cplx s = 1.0 / (zeta * zeta);
  for (int n = -R; n <= R; ++n)
    for (int m = -R; m <= R; ++m) {
      if (m == 0 && n == 0) continue;
      const cplx w = static_cast<double>(m) + static_cast<double>(n) * tau;
      const cplx d = zeta - w;
      s += 1.0 / (d * d) - 1.0 / (w * w);
    }
  return s;
}

cplx wp_prime_direct(cplx zeta, cplx tau, int R) {
  check_tau(tau, R);
  check_pole(zeta, tau);
  cplx s = 0.0;
  for (int n = -R; n <= R; ++n)
    for (int m = -R; m <= R; ++m) {
      const cplx d = zeta - (static_cast<double>(m) + static_cast<double>(n) * tau);
      s += -2.0 / (d * d * d);
    }
  return s;
}

std::array<cplx, 3> e_values(cplx tau, int R) {
  check_tau(tau, R);
  return {wp(0.5, tau, R), wp(tau / 2.0, tau, R), wp((1.0 + tau) / 2.0, tau, R)};
}

BranchLocus branch_locus(const LatticeSpec& spec, int R) {
  if (spec.alpha == 0.0) throw Error(ErrorCode::InvalidArgument, "α must be nonzero");
  const auto e = e_values(spec.tau, R);
  const cplx s = 1.0 / (spec.alpha * spec.alpha);
  return {{s * e[0], s * e[1], s * e[2]}};
}

double set_distance(const BranchLocus& a, const BranchLocus& b) {
  std::array<int, 3> p{0, 1, 2};
  double best = INFINITY;
  do {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, std::abs(a.e[static_cast<std::size_t>(i)] - b.e[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])]));
    best = std::min(best, worst);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

double ode_residual(cplx tau, cplx zeta, int R) {
  const cplx p = wp(zeta, tau, R);
  const cplx dp = wp_prime(zeta, tau, R);
  const auto e = e_values(tau, R);
  const cplx rhs = 4.0 * (p - e[0]) * (p - e[1]) * (p - e[2]);
  return std::abs(dp * dp - rhs) / (1.0 + std::norm(dp));
}

std::vector<PathSample> branch_locus_path(cplx alpha, cplx tau0, cplx tau1, int steps, int R) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be positive");
  std::vector<PathSample> out;
  for (int i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / steps;
    const cplx tau = tau0 + t * (tau1 - tau0);
    out.push_back({t, tau, branch_locus({alpha, tau}, R)});
  }
  return out;
}

}  // namespace braidoka
