#pragma once

// Exact SL(2,Z) arithmetic, the representation ϑ: B3 -> SL(2,Z) with
// σ1 -> [[1,1],[0,1]] and σ2 -> [[1,0],[-1,1]], trace classification and
// conjugacy.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidoka {

using BigInt = boost::multiprecision::cpp_int;

class BraidWord;

class SL2Matrix {
 public:
  SL2Matrix() : a_(1), b_(0), c_(0), d_(1) {}
  // Throws InvalidArgument unless ad - bc = 1.
  SL2Matrix(BigInt a, BigInt b, BigInt c, BigInt d);

  static SL2Matrix identity() { return {}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }
  BigInt trace() const { return a_ + d_; }

  SL2Matrix inverse() const;
  SL2Matrix operator-() const;
  SL2Matrix pow(long k) const;

  std::string str() const;  // [[a,b],[c,d]]

  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;

 private:
  BigInt a_, b_, c_, d_;
};

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y);

// Standard generators: A = ϑ(σ1) = R, B = ϑ(σ2), L = [[1,0],[1,1]] = B^-1.
SL2Matrix mat_A();
SL2Matrix mat_B();
SL2Matrix mat_R();
SL2Matrix mat_L();

// Throws WrongStrandCount unless the word has 3 strands.
SL2Matrix theta(const BraidWord& b);

enum class MatrixKind { CentralI, CentralMinusI, Elliptic, Parabolic, Hyperbolic };

struct MatrixClass {
  MatrixKind kind;
  int order = 0;  // finite order for central/elliptic, 0 otherwise
};

std::string to_string(MatrixKind k);
MatrixClass matrix_class(const SL2Matrix& m);

struct ParabolicForm {
  int sign = 1;  // M is conjugate to sign * [[1, m], [0, 1]]
  BigInt m;
  friend bool operator==(const ParabolicForm&, const ParabolicForm&) = default;
};

// Throws NotParabolic for elliptic or hyperbolic input.
ParabolicForm parabolic_normal_form(const SL2Matrix& m);
// Same, together with P such that P^-1 M P = sign * [[1, m], [0, 1]].
ParabolicForm parabolic_normal_form(const SL2Matrix& m, SL2Matrix& conjugator);

// Canonical representative of an elliptic conjugacy class, reached by
// norm-reducing conjugation with T^±1 and S.
SL2Matrix elliptic_reduced(const SL2Matrix& m);

struct HyperbolicForm {
  int sign = 1;            // M = sign * N with trace(N) > 2
  std::string word;        // N is conjugate to this product of 'R'/'L'
  std::string canonical;   // lexicographically least rotation of `word`
  SL2Matrix conjugator;    // P with P^-1 N P equal to the product of `word`
};

// Throws InvalidArgument unless |trace| > 2.
HyperbolicForm hyperbolic_form(const SL2Matrix& m);
SL2Matrix rl_product(const std::string& word);

bool sl2z_conjugate(const SL2Matrix& m, const SL2Matrix& n);

}  // namespace braidoka
