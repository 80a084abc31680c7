#pragma once

// Artin braid words, the symmetric-group projection, linking numbers of
// pure braids, and the word problem via Garside left normal form.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidoka/perms.hpp"

namespace braidoka {

class BraidWord {
 public:
  BraidWord() : BraidWord(2) {}
  explicit BraidWord(int strands, std::vector<int> letters = {});

  // Whitespace-separated signed generator indices, e.g. "1 2 -1". When
  // `strands` is not given it is inferred as max index + 1 (at least 2).
  static BraidWord parse(std::string_view text, std::optional<int> strands = std::nullopt);
  static BraidWord generator(int strands, int i, std::int64_t power = 1);
  // Positive half twist Δ_n.
  static BraidWord delta(int strands, std::int64_t power = 1);

  int strands() const { return strands_; }
  // +i stands for σ_i, -i for σ_i^-1.
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord pow(std::int64_t k) const;
  BraidWord free_reduced() const;
  std::string str() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Concatenation; strand counts must agree.
BraidWord operator*(const BraidWord& a, const BraidWord& b);
// a b a^-1 b^-1
BraidWord commutator(const BraidWord& a, const BraidWord& b);

Permutation permutation(const BraidWord& b);
std::int64_t exponent_sum(const BraidWord& b);

class GarsideNormalForm {
 public:
  GarsideNormalForm(int strands, std::int64_t infimum, std::vector<Permutation> factors)
      : strands_(strands), infimum_(infimum), factors_(std::move(factors)) {}

  int strands() const { return strands_; }
  std::int64_t infimum() const { return infimum_; }
  // Left-weighted simple factors, none trivial and none equal to Δ.
  const std::vector<Permutation>& factors() const { return factors_; }

  // Δ^infimum followed by each factor as a positive word.
  BraidWord to_word() const;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;

 private:
  int strands_;
  std::int64_t infimum_;
  std::vector<Permutation> factors_;
};

GarsideNormalForm normal_form(const BraidWord& b);

// Positive word for a permutation braid.
BraidWord simple_word(const Permutation& s);

// Equality in B_n. Three-strand words take the (ϑ-image, exponent sum) route;
// everything else goes through normal_form. Throws StrandMismatch.
bool braid_eq(const BraidWord& a, const BraidWord& b);
bool braid_eq_garside(const BraidWord& a, const BraidWord& b);

// Symmetric matrix of linking numbers of a pure braid; strands are labelled
// by their starting position. σ_i^2 between two strands counts +1.
class LinkingNumbers {
 public:
  explicit LinkingNumbers(int n) : n_(n), m_(static_cast<std::size_t>(n * n), 0) {}

  int strands() const { return n_; }
  std::int64_t operator()(int i, int j) const { return m_[idx(i, j)]; }
  std::int64_t& at(int i, int j) { return m_[idx(i, j)]; }
  // (ℓ23, ℓ13, ℓ12) for three strands.
  std::array<std::int64_t, 3> tuple3() const;

  friend bool operator==(const LinkingNumbers&, const LinkingNumbers&) = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
  int n_;
  std::vector<std::int64_t> m_;
};

// Throws NotPure unless permutation(b) is the identity.
LinkingNumbers linking_numbers(const BraidWord& b);

// Linking numbers of w^-1 b w predicted from those of b: entry (i, j) is
// entry (q(i), q(j)) of b with q = permutation(w)^-1.
LinkingNumbers conjugated_linking(const LinkingNumbers& of_b, const BraidWord& w);

}  // namespace braidoka
