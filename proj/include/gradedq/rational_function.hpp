#pragma once

#include <string>
#include <vector>

#include "gradedq/polynomial.hpp"

namespace gradedq {

/// Quotient of integer polynomials kept in canonical form: gcd(num, den) = 1
/// and den has positive leading sign. Equality is syntactic.
class RationalFunction {
 public:
  explicit RationalFunction(int nvars = 0)
      : num_(nvars), den_(Poly::constant(nvars, 1)) {}
  RationalFunction(Poly num, Poly den);

  static RationalFunction constant(int nvars, const Int& c) {
    return RationalFunction(Poly::constant(nvars, c), Poly::constant(nvars, 1));
  }
  static RationalFunction of(Poly p) {
    Poly one = Poly::constant(p.nvars(), 1);
    return RationalFunction(std::move(p), std::move(one));
  }
  static RationalFunction variable(int nvars, int i) {
    return of(Poly::variable(nvars, i));
  }
  /// c/d with integer entries.
  static RationalFunction fraction(int nvars, const Int& c, const Int& d) {
    return RationalFunction(Poly::constant(nvars, c), Poly::constant(nvars, d));
  }

  int nvars() const { return num_.nvars(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }
  bool operator<(const RationalFunction& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
  }

  RationalFunction inverse() const;
  RationalFunction pow(unsigned k) const;
  RationalFunction derivative(int i) const;

  /// Substitute rational functions for the variables.
  RationalFunction eval(const std::vector<RationalFunction>& vals) const;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;

 private:
  Poly num_, den_;
  void normalize();
};

}  // namespace gradedq
