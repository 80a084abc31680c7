#pragma once

// Discriminants of monic polynomial families over the unit circle and the
// Theorem 1 style reducibility test.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace braidoka {

using cplx = std::complex<double>;

// f(z, ζ) = ζ^n + Σ_{k<n} a_k(z) ζ^k with Laurent polynomials a_k.
struct LaurentFamily {
  int degree = 2;
  std::map<int, std::map<int, cplx>> coeffs;  // power of ζ -> (power of z -> coefficient)

  // ζ^n - z^k
  static LaurentFamily model(int n, int k);
  // {"degree":3, "coeffs":{"0":{"-1":[re,im]}, ...}}; throws ParseError.
  static LaurentFamily from_json(const std::string& text);

  // Coefficients of f_z in ascending powers of ζ, leading 1 included.
  std::vector<cplx> at(cplx z) const;
};

// ∏_{i<j} (r_i - r_j)^2. Throws DegreeTooSmall for fewer than two roots.
cplx discriminant_from_roots(const std::vector<cplx>& roots);
// Ascending coefficients c_0..c_n with c_n != 0; (-1)^(n(n-1)/2) Res(p, p') / c_n.
cplx discriminant_from_coeffs(const std::vector<cplx>& coeffs);

struct IndexReport {
  std::int64_t index = 0;
  std::int64_t samples_used = 0;
  double min_abs_discriminant = 0.0;
  double max_abs_discriminant = 0.0;
};

// Winding number of t -> D(f_{exp(2πit)}) around 0. The sample count doubles
// until every step turns by less than π/2.
// Throws SeparabilityFailure when |D| < rel_tol * max|D| at a sample and
// NonConvergence past 2^20 samples.
IndexReport discriminant_index(const LaurentFamily& f, std::int64_t samples = 256, double rel_tol = 1e-12);

enum class Thm1Verdict { Reducible, Inconclusive };
std::string to_string(Thm1Verdict v);

// The modulus threshold 2πn/log 2.
double thm1_threshold(int n);
Thm1Verdict thm1_verdict(int n, double modulus, std::int64_t index);

// log 2 / (12g - 12 + 4m); throws SignatureOutOfRange unless 3g - 3 + m > 0.
double penner_bound(int g, int m);
// log 2 / (4n - 8) and (π/2)(4/log 2) n; both throw SignatureOutOfRange for n < 3.
double nbraid_entropy_lower(int n);
double nbraid_module_upper(int n);

}  // namespace braidoka
