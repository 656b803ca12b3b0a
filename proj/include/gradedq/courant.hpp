#pragma once

#include <array>
#include <map>

#include "gradedq/derivation.hpp"
#include "gradedq/graded_poly.hpp"

namespace gradedq {

/// Exact Courant algebroid data: the base dimension and the three-form H,
/// stored for strictly increasing index triples (0-based); all other
/// components follow by antisymmetry.
class CourantModel {
 public:
  explicit CourantModel(int n) : n_(n) {}

  int n() const { return n_; }

  void set_H(int i, int j, int k, const RationalFunction& value);
  /// H_{ijk} with full antisymmetry (zero on repeated indices).
  RationalFunction H(int i, int j, int k) const;
  bool H_is_zero() const { return h_.empty(); }
  const std::map<std::array<int, 3>, RationalFunction>& H_storage() const { return h_; }

  /// Components of dH for strictly increasing quadruples; empty when n < 4
  /// or dH = 0.
  std::map<std::array<int, 4>, RationalFunction> dH() const;

 private:
  int n_;
  std::map<std::array<int, 3>, RationalFunction> h_;
};

/// Section of TM + T*M with rational-function components.
struct GenSection {
  std::vector<RationalFunction> vec;   // a^mu
  std::vector<RationalFunction> form;  // a_mu

  explicit GenSection(int n)
      : vec(static_cast<std::size_t>(n), RationalFunction(n)),
        form(static_cast<std::size_t>(n), RationalFunction(n)) {}
  int n() const { return static_cast<int>(vec.size()); }

  GenSection operator+(const GenSection& o) const;
  GenSection operator-(const GenSection& o) const;
  GenSection operator*(const RationalFunction& f) const;
  GenSection operator-() const;
  bool operator==(const GenSection& o) const { return vec == o.vec && form == o.form; }
  bool is_zero() const;
};

/// Theta = psi^mu p_mu + (1/3!) H_{mu nu rho} psi^mu psi^nu psi^rho.
GradedPoly theta(const CourantModel& m, const ChartPtr& chart);
GradedPoly theta(const CourantModel& m);

/// The degree-1 homological vector field of T*[2]T[1]M.
Derivation courant_differential(const CourantModel& m, const ChartPtr& chart);
Derivation courant_differential(const CourantModel& m);

/// Degree -2 Poisson bracket of the 2-symplectic structure
/// omega = dx dp + dpsi db. Conventions are pinned by
/// hamiltonian_vf(theta) == courant_differential.
GradedPoly poisson_bracket(const GradedPoly& f, const GradedPoly& g);

/// X_f with X_f(g) = {f, g}; requires homogeneous f.
Derivation hamiltonian_vf(const GradedPoly& f);

struct MasterReport {
  GradedPoly bracket;                                // {Theta, Theta}
  std::map<std::array<int, 4>, RationalFunction> dh; // nonzero dH components
  bool bracket_zero = false;
  bool dh_zero = false;
  bool consistent = false;  // bracket_zero == dh_zero
};

/// Checks {Theta,Theta} = 0 against dH = 0, computed independently.
MasterReport check_master(const CourantModel& m);

/// Dorfman bracket [[X+xi, Y+nu]] = L_X(Y+nu) - i_Y d xi + i_Y i_X H.
GenSection dorfman(const GenSection& a, const GenSection& b, const CourantModel& m);
/// Skew-symmetrized bracket.
GenSection dorfman_skew(const GenSection& a, const GenSection& b, const CourantModel& m);

/// <X+xi, Y+nu> = nu(X) + xi(Y).
RationalFunction pairing(const GenSection& a, const GenSection& b);

/// Projection to TM.
std::vector<RationalFunction> anchor(const GenSection& a);

/// Derivative of f along the anchor of a.
RationalFunction anchor_apply(const GenSection& a, const RationalFunction& f);

/// The degree-1 function a^mu b_mu + a_mu psi^mu representing a section on
/// the graded side.
GradedPoly section_function(const GenSection& a, const ChartPtr& chart);

}  // namespace gradedq
