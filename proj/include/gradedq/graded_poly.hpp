#pragma once

#include <map>
#include <string>
#include <vector>

#include "gradedq/chart.hpp"
#include "gradedq/rational_function.hpp"

namespace gradedq {

/// Element of the graded-commutative algebra of a chart: a finite sum of
/// monomials in the graded generators with RationalFunction coefficients in
/// the base coordinates. Canonical form: generators in chart order, odd
/// exponents at most 1, no zero coefficients.
class GradedPoly {
 public:
  using Mono = std::vector<unsigned>;  // exponent per generator

  GradedPoly() = default;
  explicit GradedPoly(ChartPtr chart) : chart_(std::move(chart)) {}

  static GradedPoly zero(ChartPtr chart) { return GradedPoly(std::move(chart)); }
  static GradedPoly scalar(ChartPtr chart, const RationalFunction& c);
  static GradedPoly constant(ChartPtr chart, const Int& c);
  static GradedPoly generator(ChartPtr chart, int i);

  const ChartPtr& chart() const { return chart_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, RationalFunction>& terms() const { return terms_; }

  GradedPoly operator-() const;
  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly operator-(const GradedPoly& o) const;
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly operator*(const RationalFunction& c) const;
  GradedPoly& operator+=(const GradedPoly& o) { return *this = *this + o; }
  GradedPoly& operator-=(const GradedPoly& o) { return *this = *this - o; }

  bool operator==(const GradedPoly& o) const;
  bool operator!=(const GradedPoly& o) const { return !(*this == o); }

  /// Degree of a monomial under the chart grading.
  int mono_degree(const Mono& m) const;
  static int mono_parity_of(int degree) { return ((degree % 2) + 2) % 2; }

  /// True when all monomials have the same degree; sets deg (0 for the zero
  /// element).
  bool is_homogeneous(int* deg = nullptr) const;
  /// The part of the given degree.
  GradedPoly homogeneous_part(int deg) const;
  /// Even/odd split by monomial parity.
  std::pair<GradedPoly, GradedPoly> parity_parts() const;

  /// Left partial derivative along generator i.
  GradedPoly partial(int i) const;
  /// Derivative of the coefficients along base coordinate mu (0-based).
  GradedPoly x_partial(int mu) const;

  /// Coefficient of the exact monomial m.
  RationalFunction coefficient(const Mono& m) const;
  /// Decompose as sum_i c_i * gen(i) + rest, for terms linear in the listed
  /// generators; throws if a term involves the listed generators non-linearly.
  std::vector<GradedPoly> linear_coefficients(const std::vector<int>& gens) const;

  void add_term(const Mono& m, const RationalFunction& c);

  std::string str() const;

 private:
  ChartPtr chart_;
  std::map<Mono, RationalFunction> terms_;

  void check_same_chart(const GradedPoly& o) const;
};

/// Product of a list of generator powers in canonical order with the Koszul
/// sign relative to the concatenation order; returns 0 sign if an odd
/// generator repeats.
int koszul_merge(const Chart& chart, const GradedPoly::Mono& a, const GradedPoly::Mono& b,
                 GradedPoly::Mono& out);

}  // namespace gradedq
