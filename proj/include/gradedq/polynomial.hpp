#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "gradedq/error.hpp"

namespace gradedq {

using Int = mpz_class;

/// Multivariate polynomial over the integers in a fixed number of variables.
/// Terms live in a map keyed by exponent vector (lexicographic order), with
/// no zero coefficients stored, so equal polynomials compare equal
/// syntactically.
class Poly {
 public:
  using Expo = std::vector<unsigned>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const Int& c);
  static Poly variable(int nvars, int i);  // x_i, 0-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant term (zero polynomial gives 0).
  Int constant_term() const;

  const std::map<Expo, Int>& terms() const { return terms_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Int& c) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Total order consistent with equality, used for canonical sign choices.
  bool operator<(const Poly& o) const;

  Poly pow(unsigned k) const;
  Poly derivative(int i) const;

  /// Degree in variable i (-1 for the zero polynomial).
  int degree(int i) const;
  int total_degree() const;  // -1 for zero

  /// Coefficient of x_i^k, a polynomial in the remaining variables
  /// (same variable count; variable i simply does not occur).
  Poly coeff_in(int i, unsigned k) const;
  /// Leading coefficient viewed as univariate in variable i.
  Poly leading_coeff_in(int i) const;

  /// Sign of the lexicographically-leading coefficient (0 for zero poly).
  int lead_sign() const;
  /// GCD of all integer coefficients, non-negative.
  Int content() const;

  void add_term(const Expo& e, const Int& c);

  /// Exact division; throws if the division leaves a remainder.
  static Poly div_exact(const Poly& a, const Poly& b);
  /// Polynomial GCD over ZZ (includes integer content), leading sign > 0.
  static Poly gcd(const Poly& a, const Poly& b);

  /// Evaluate with polynomial values substituted for the variables.
  Poly eval(const std::vector<Poly>& vals) const;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;  // default names x1..xn

 private:
  int nvars_;
  std::map<Expo, Int> terms_;

  static Poly prem(const Poly& a, const Poly& b, int v);  // pseudo-remainder
};

}  // namespace gradedq
