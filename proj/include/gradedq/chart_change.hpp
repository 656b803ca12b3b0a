#pragma once

#include <vector>

#include "gradedq/derivation.hpp"
#include "gradedq/graded_poly.hpp"
#include "gradedq/matrix.hpp"

namespace gradedq {

/// Substitution rules expressing every coordinate of `from` in the chart
/// `to`; applying one is an algebra morphism.
struct ChartChange {
  ChartPtr from, to;
  std::vector<RationalFunction> xrule;  // per from-base coordinate
  std::vector<GradedPoly> grule;        // per from-generator

  GradedPoly apply(const GradedPoly& f) const;
  RationalFunction apply_scalar(const RationalFunction& f) const;
};

/// Both directions of an invertible change of base coordinates on the
/// Courant chart, with the induced rules psi' = J psi, b' = J^{-T} b,
/// p' = J^{-T} p - J^{-T} dJ^T J^{-T} b. When the charts carry the
/// generalized-tangent fibre, s' = J^{-T} s and su' = J su.
struct CourantChartChange {
  ChartPtr unprimed, primed;
  std::vector<Poly> phi;      // x' as polynomials in x
  std::vector<Poly> phi_inv;  // x as polynomials in x'
  Matrix jac;                 // J over the unprimed chart
  ChartChange fwd;            // unprimed coordinates in primed terms
  ChartChange bwd;            // primed coordinates in unprimed terms
};

/// Builds the full rule set; validates that phi_inv inverts phi exactly.
/// `with_tm_fibre` extends both charts by the generalized-tangent fibre.
CourantChartChange make_courant_change(int n, std::vector<Poly> phi, std::vector<Poly> phi_inv,
                                       bool with_tm_fibre = false);

/// Transport of a derivation: X'(c) = fwd(X(bwd(c))) for every coordinate c
/// of the target chart.
Derivation pushforward(const Derivation& x, const ChartChange& fwd, const ChartChange& bwd);

}  // namespace gradedq
