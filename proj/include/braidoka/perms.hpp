#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braidoka/words.hpp"

namespace braidoka {

// A permutation of {1..n}; images()[i-1] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // throws InvalidArgument unless bijective

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  // Cycle notation such as "(1 2 3)(4 5)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, each starting at its minimum
  bool is_full_cycle() const;                     // a single n-cycle
  int order() const;

  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Left-to-right product: (p * q)(i) = q(p(i)). Braid words map to products
// in reading order with this convention.
Permutation operator*(const Permutation& p, const Permutation& q);

bool commute(const Permutation& p, const Permutation& q);
bool is_transitive(const std::vector<Permutation>& gens, int n);

struct CyclicGenerator {
  Permutation generator;
  std::vector<int> exponents;  // gens[i] == generator.pow(exponents[i]), exponents in [0, n)
};

// For a commuting set of permutations generating a transitive group of prime
// degree n: an n-cycle among the generators of which every generator is a power.
CyclicGenerator abelian_transitive_generator(const std::vector<Permutation>& gens, int n);

struct GeneratorPair {
  FreeWord first;   // image is a 3-cycle
  FreeWord second;  // image is the identity
};

// New free generators of F2 = <e1, e2> drawn from E ∪ E^-1 with
// E = {e1, e2, e2 e1^-1, e2 e1^-2}, for an abelian transitive image in S3.
GeneratorPair lemma5_generators(const Permutation& psi_e1, const Permutation& psi_e2);

}  // namespace braidoka
