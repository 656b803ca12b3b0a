#pragma once

#include <vector>

#include "gradedq/graded_poly.hpp"

namespace gradedq {

/// Graded vector field given by its images on all chart coordinates and
/// extended to the algebra by the graded Leibniz rule (as a left derivation).
class Derivation {
 public:
  Derivation(ChartPtr chart, int degree);

  const ChartPtr& chart() const { return chart_; }
  int degree() const { return degree_; }
  int parity() const { return ((degree_ % 2) + 2) % 2; }

  /// Image of base coordinate x^mu (0-based).
  const GradedPoly& x_image(int mu) const { return ximg_[static_cast<std::size_t>(mu)]; }
  /// Image of generator i.
  const GradedPoly& gen_image(int i) const { return gimg_[static_cast<std::size_t>(i)]; }

  void set_x_image(int mu, GradedPoly v);
  void set_gen_image(int i, GradedPoly v);

  GradedPoly apply(const GradedPoly& f) const;

  /// Graded commutator [X, Y] = X∘Y - (-1)^{|X||Y|} Y∘X.
  Derivation commutator(const Derivation& o) const;
  /// X∘X for odd X; equals (1/2)[X, X].
  Derivation squared() const;

  Derivation operator+(const Derivation& o) const;
  Derivation operator-() const;

  bool is_zero() const;
  bool operator==(const Derivation& o) const;
  bool operator!=(const Derivation& o) const { return !(*this == o); }

  /// True when the images of all listed generators vanish (base coordinates
  /// are included via `include_base`).
  bool is_vertical(const std::vector<int>& gens, bool include_base = true) const;

  /// True when the images of the kept generators only involve kept
  /// generators. Base coordinates are always kept.
  bool is_projectable(const std::vector<int>& kept) const;

 private:
  ChartPtr chart_;
  int degree_;
  std::vector<GradedPoly> ximg_;
  std::vector<GradedPoly> gimg_;

  void check_degree(const GradedPoly& v, int coord_degree) const;
};

}  // namespace gradedq
