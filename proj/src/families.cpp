#include "braidoka/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <json.hpp>

#include "braidoka/error.hpp"
#include "text_util.hpp"

namespace braidoka {

LaurentFamily LaurentFamily::model(int n, int k) {
  if (n < 2) throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(n));
  LaurentFamily f;
  f.degree = n;
  f.coeffs[0][k] = -1.0;
  return f;
}

LaurentFamily LaurentFamily::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(detail::normalize_minus(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("family JSON: ") + e.what());
  }
  LaurentFamily f;
  try {
    f.degree = j.at("degree").get<int>();
    if (f.degree < 2) throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(f.degree));
    if (j.contains("coeffs")) {
      for (const auto& [zk, poly] : j.at("coeffs").items()) {
        const int k = static_cast<int>(detail::parse_int(zk, "coeffs key"));
        if (k < 0 || k >= f.degree) throw Error(ErrorCode::ParseError, "ζ-power " + zk + " outside [0, degree)");
        for (const auto& [ze, c] : poly.items()) {
          const int e = static_cast<int>(detail::parse_int(ze, "Laurent exponent"));
          cplx v;
          if (c.is_number())
            v = c.get<double>();
          else if (c.is_array() && c.size() == 2)
            v = cplx(c[0].get<double>(), c[1].get<double>());
          else
            throw Error(ErrorCode::ParseError, "coefficient must be a number or [re, im]");
          f.coeffs[k][e] += v;
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("family JSON: ") + e.what());
  }
  return f;
}

std::vector<cplx> LaurentFamily::at(cplx z) const {
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = 1.0;
  for (const auto& [k, poly] : coeffs)
    for (const auto& [e, v] : poly) c[static_cast<std::size_t>(k)] += v * std::pow(z, e);
  return c;
}

cplx discriminant_from_roots(const std::vector<cplx>& roots) {
  if (roots.size() < 2) throw Error(ErrorCode::DegreeTooSmall, "need at least two roots");
  cplx d = 1.0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const cplx diff = roots[i] - roots[j];
      d *= diff * diff;
    }
  return d;
}

cplx discriminant_from_coeffs(const std::vector<cplx>& c) {
  if (c.size() < 3) throw Error(ErrorCode::DegreeTooSmall, "need degree >= 2");
  const int n = static_cast<int>(c.size()) - 1;
  if (c.back() == 0.0) throw Error(ErrorCode::InvalidArgument, "leading coefficient is zero");
  // Sylvester matrix of p (degree n) and p' (degree n-1), rows hold
  // descending coefficients.
  std::vector<cplx> dp(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) dp[static_cast<std::size_t>(i - 1)] = static_cast<double>(i) * c[static_cast<std::size_t>(i)];
  const int size = 2 * n - 1;
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(size, size);
  for (int r = 0; r < n - 1; ++r)
    for (int i = 0; i <= n; ++i) S(r, r + i) = c[static_cast<std::size_t>(n - i)];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= n - 1; ++i) S(n - 1 + r, r + i) = dp[static_cast<std::size_t>(n - 1 - i)];
  const cplx res = S.determinant();
  const double sign = ((n * (n - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * res / c.back();
}

IndexReport discriminant_index(const LaurentFamily& f, std::int64_t samples, double rel_tol) {
  if (samples < 16) throw Error(ErrorCode::InvalidArgument, "samples must be at least 16");
  if (f.degree < 2) throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(f.degree));
  constexpr std::int64_t kMaxSamples = std::int64_t{1} << 20;
  for (std::int64_t n = samples;; n *= 2) {
    if (n > kMaxSamples)
      throw Error(ErrorCode::NonConvergence, "winding number not resolved with 2^20 samples");
    std::vector<cplx> d(static_cast<std::size_t>(n));
    double max_abs = 0.0, min_abs = INFINITY;
    for (std::int64_t j = 0; j < n; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(n);
      const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * t);
      d[static_cast<std::size_t>(j)] = discriminant_from_coeffs(f.at(z));
      const double a = std::abs(d[static_cast<std::size_t>(j)]);
      max_abs = std::max(max_abs, a);
      min_abs = std::min(min_abs, a);
    }
    if (!(max_abs > 0.0) || min_abs < rel_tol * max_abs)
      throw Error(ErrorCode::SeparabilityFailure,
                  "discriminant nearly vanishes on |z| = 1 (min " + std::to_string(min_abs) + ")");
    double total = 0.0;
    bool ok = true;
    for (std::int64_t j = 0; j < n; ++j) {
      const cplx a = d[static_cast<std::size_t>(j)];
      const cplx b = d[static_cast<std::size_t>((j + 1) % n)];
      const double step = std::arg(b / a);
      if (std::abs(step) >= std::numbers::pi / 2) {
        ok = false;
        break;
      }
      total += step;
    }
    if (!ok) continue;
    IndexReport rep;
    rep.index = std::llround(total / (2.0 * std::numbers::pi));
    rep.samples_used = n;
    rep.min_abs_discriminant = min_abs;
    rep.max_abs_discriminant = max_abs;
    return rep;
  }
}

std::string to_string(Thm1Verdict v) { return v == Thm1Verdict::Reducible ? "reducible" : "inconclusive"; }

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

double thm1_threshold(int n) { return 2.0 * std::numbers::pi * n / std::numbers::ln2; }

Thm1Verdict thm1_verdict(int n, double modulus, std::int64_t index) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  if (is_prime(n) && modulus > thm1_threshold(n) && index % n == 0) return Thm1Verdict::Reducible;
  return Thm1Verdict::Inconclusive;
}

double penner_bound(int g, int m) {
  if (g < 0 || m < 0 || 3 * g - 3 + m <= 0)
    throw Error(ErrorCode::SignatureOutOfRange, "need 3g - 3 + m > 0, got g=" + std::to_string(g) + " m=" + std::to_string(m));
  return std::numbers::ln2 / (12.0 * g - 12.0 + 4.0 * m);
}

double nbraid_entropy_lower(int n) {
  if (n < 3) throw Error(ErrorCode::SignatureOutOfRange, "n must be at least 3");
  return std::numbers::ln2 / (4.0 * n - 8.0);
}

double nbraid_module_upper(int n) {
  if (n < 3) throw Error(ErrorCode::SignatureOutOfRange, "n must be at least 3");
  return std::numbers::pi / 2.0 * (4.0 / std::numbers::ln2) * n;
}

}  // namespace braidoka
