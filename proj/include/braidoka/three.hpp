#pragma once

// Nielsen–Thurston type of 3-braids read off from ϑ, with entropy and
// conformal module, conjugacy, centralizers and a commutator scan.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "braidoka/braid.hpp"
#include "braidoka/sl2z.hpp"

namespace braidoka {

enum class ThreeKind { Periodic, Reducible, PseudoAnosov };
enum class PeriodicBase { Sigma12, Delta };

std::string to_string(ThreeKind k);
std::string to_string(PeriodicBase b);

struct ThreeBraidClass {
  ThreeKind kind = ThreeKind::Periodic;
  bool central = false;
  bool reducible_flag = false;  // set for central braids, which are also σ1^0 Δ^2ℓ

  // Periodic: conjugate to base^power. Central braids use base Δ.
  PeriodicBase base = PeriodicBase::Delta;
  std::int64_t power = 0;

  // Reducible (and central): conjugate to σ1^k Δ^(2 ell).
  std::int64_t k = 0;
  std::int64_t ell = 0;

  BigInt trace;  // trace of ϑ(b)
  std::int64_t exponent_sum = 0;
  double entropy = 0.0;
  double module = std::numeric_limits<double>::infinity();
};

// Throws WrongStrandCount; InternalInconsistency if a parameter fails to be
// integral.
ThreeBraidClass classify3(const BraidWord& b);

// log((t + sqrt(t^2 - 4)) / 2) for |t| > 2, else 0.
double entropy_from_trace(const BigInt& trace);
double entropy3(const BraidWord& b);
double conformal_module3(const BraidWord& b);  // +inf when the entropy is 0

bool conj3(const BraidWord& b1, const BraidWord& b2);

// Whether b commutes with σ1^k. Throws InvalidArgument for k = 0.
bool centralizer_check(const BraidWord& b, std::int64_t k);

struct CommutatorPair {
  BraidWord b1, b2;
  BraidWord commutator;
  bool b1_pure = false, b2_pure = false;
  std::int64_t trace_b2_b1inv = 0;   // trace of ϑ(b2 b1^-1)
  std::int64_t trace_b2_b1inv2 = 0;  // trace of ϑ(b2 b1^-2)
  // Neither braid pure and one of b2 b1^-1, b2 b1^-2 has positive entropy.
  bool corollary_hypotheses_violated = false;
};

struct ScanOptions {
  int maxlen = 2;
  // When false only the commutator is required to have zero entropy.
  bool zero_entropy_factors = true;
  int jobs = 1;
  // Random mode: test this many random pairs instead of enumerating.
  std::optional<std::int64_t> sample;
  std::uint64_t seed = 1;
  std::size_t keep = 1000;  // pairs stored in the report
};

struct ScanReport {
  int maxlen = 0;
  bool zero_entropy_factors = true;
  std::int64_t words = 0;        // reduced words enumerated (or sampled pairs)
  std::int64_t elements = 0;     // distinct group elements among them
  std::int64_t candidates = 0;   // elements passing the factor filter
  std::int64_t pairs_tested = 0;
  std::int64_t found = 0;
  std::int64_t corollary_counterexamples = 0;  // found pairs that satisfy the Corollary hypotheses (expected 0)
  std::vector<CommutatorPair> pairs;      // first `keep` in deterministic order
};

// Pairs (b1, b2) of words of length <= maxlen with h([b1,b2]) = 0 and
// [b1,b2] != id (and h(b1) = h(b2) = 0 unless relaxed). Words are deduplicated
// by group element, keeping the shortlex-first representative.
// Throws ResourceLimit when maxlen > 10 (or > 6 when relaxed).
ScanReport zero_entropy_commutator_scan(const ScanOptions& opts);

}  // namespace braidoka
