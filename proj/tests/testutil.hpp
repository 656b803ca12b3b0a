#pragma once

#include "gradedq/courant.hpp"
#include "gradedq/rng.hpp"

namespace gradedq::testutil {

inline RationalFunction rand_scalar(Rng& rng, int nvars, int maxdeg = 2, int terms = 2) {
  Poly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Poly::Expo e(static_cast<std::size_t>(nvars), 0);
    int budget = maxdeg;
    for (int i = 0; i < nvars; ++i) {
      int d = static_cast<int>(rng.range(0, budget));
      e[static_cast<std::size_t>(i)] = static_cast<unsigned>(d);
      budget -= d;
    }
    p.add_term(e, Int(rng.range(-3, 3)));
  }
  return RationalFunction::of(p);
}

inline CourantModel rand_model(Rng& rng, int n, bool with_H = true) {
  CourantModel m(n);
  if (with_H) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          if (rng.chance(70)) m.set_H(i, j, k, rand_scalar(rng, n, 1));
  }
  return m;
}

inline GenSection rand_section(Rng& rng, int n, int maxdeg = 1) {
  GenSection a(n);
  for (int mu = 0; mu < n; ++mu) {
    a.vec[static_cast<std::size_t>(mu)] = rand_scalar(rng, n, maxdeg);
    a.form[static_cast<std::size_t>(mu)] = rand_scalar(rng, n, maxdeg);
  }
  return a;
}

}  // namespace gradedq::testutil
