#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gradedq/error.hpp"

namespace gradedq {

/// A coordinate chart: n base coordinates x1..xn of degree 0 (these live in
/// the coefficient field) plus an ordered list of graded generators. Odd
/// generators square to zero; signs follow the Koszul rule.
class Chart {
 public:
  struct Gen {
    std::string name;
    int degree;
  };

  Chart(int n, std::vector<Gen> gens);

  int n() const { return n_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  const Gen& gen(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  int degree(int i) const { return gens_[static_cast<std::size_t>(i)].degree; }
  int parity(int i) const { return ((degree(i) % 2) + 2) % 2; }

  /// Generator index by name, -1 if absent.
  int find(const std::string& name) const;

  const std::vector<std::string>& base_names() const { return base_names_; }

  bool operator==(const Chart& o) const;
  bool operator!=(const Chart& o) const { return !(*this == o); }

 private:
  int n_;
  std::vector<Gen> gens_;
  std::vector<std::string> base_names_;
};

using ChartPtr = std::shared_ptr<const Chart>;

inline ChartPtr make_chart(int n, std::vector<Chart::Gen> gens) {
  return std::make_shared<const Chart>(n, std::move(gens));
}

/// Chart of T*[2]T[1]M: psi1..psin (degree 1), b1..bn (degree 1),
/// p1..pn (degree 2).
ChartPtr courant_chart(int n);

/// Courant chart extended by dual fibre coordinates of a rank-r bundle.
/// `sdeg` is the degree of the dual fibre coordinates.
ChartPtr courant_chart_with_fibre(int n, int rank, int sdeg,
                                  const std::vector<std::string>& snames);

/// Fibre coordinate names for the generalized tangent bundle: s1..sn pair
/// with vector components, su1..sun with one-form components.
std::vector<std::string> tm_fibre_names(int n);

/// Chart of A[1] for a rank-r algebroid: xi1..xir of degree 1.
ChartPtr algebroid_chart(int n, int rank);

namespace layout {
// Generator index layout inside a Courant chart.
inline int psi(int mu) { return mu; }
inline int b(int n, int mu) { return n + mu; }
inline int p(int n, int mu) { return 2 * n + mu; }
inline int fibre(int n, int alpha) { return 3 * n + alpha; }
}  // namespace layout

}  // namespace gradedq
