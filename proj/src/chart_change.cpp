#include "gradedq/chart_change.hpp"

namespace gradedq {

GradedPoly ChartChange::apply(const GradedPoly& f) const {
  if (*f.chart() != *from) throw Error("ChartChange: chart mismatch");
  GradedPoly out(to);
  for (auto& [m, c] : f.terms()) {
    GradedPoly acc = GradedPoly::scalar(to, c.eval(xrule));
    for (int i = 0; i < from->ngens(); ++i) {
      unsigned e = m[static_cast<std::size_t>(i)];
      for (unsigned k = 0; k < e; ++k) acc = acc * grule[static_cast<std::size_t>(i)];
    }
    out += acc;
  }
  return out;
}

RationalFunction ChartChange::apply_scalar(const RationalFunction& f) const {
  return f.eval(xrule);
}

static std::vector<RationalFunction> to_rf(const std::vector<Poly>& v) {
  std::vector<RationalFunction> r;
  for (auto& p : v) r.push_back(RationalFunction::of(p));
  return r;
}

CourantChartChange make_courant_change(int n, std::vector<Poly> phi, std::vector<Poly> phi_inv,
                                       bool with_tm_fibre) {
  if (static_cast<int>(phi.size()) != n || static_cast<int>(phi_inv.size()) != n)
    throw Error("make_courant_change: base map arity mismatch");
  for (int mu = 0; mu < n; ++mu) {
    // phi(phi_inv(x')) = x' and phi_inv(phi(x)) = x, exactly.
    if (phi[static_cast<std::size_t>(mu)].eval(phi_inv) != Poly::variable(n, mu))
      throw Error("make_courant_change: declared inverse fails (phi o phi_inv)");
    if (phi_inv[static_cast<std::size_t>(mu)].eval(phi) != Poly::variable(n, mu))
      throw Error("make_courant_change: declared inverse fails (phi_inv o phi)");
  }

  CourantChartChange cc;
  cc.phi = phi;
  cc.phi_inv = phi_inv;
  if (with_tm_fibre) {
    cc.unprimed = courant_chart_with_fibre(n, 2 * n, -1, tm_fibre_names(n));
    cc.primed = courant_chart_with_fibre(n, 2 * n, -1, tm_fibre_names(n));
  } else {
    cc.unprimed = courant_chart(n);
    cc.primed = courant_chart(n);
  }

  Matrix J(n, n, n);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      J.at(mu, nu) = RationalFunction::of(phi[static_cast<std::size_t>(mu)].derivative(nu));
  cc.jac = J;
  Matrix Jinv = J.inverse();

  std::vector<RationalFunction> inv_rules = to_rf(phi_inv);
  auto compose = [&](const RationalFunction& f) { return f.eval(inv_rules); };

  // J and J^{-1} re-expressed in primed coordinates.
  Matrix Jb(n, n, n), Jbinv(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jb.at(i, j) = compose(J.at(i, j));
      Jbinv.at(i, j) = compose(Jinv.at(i, j));
    }

  auto gen = [&](const ChartPtr& ch, int i) { return GradedPoly::generator(ch, i); };

  // Forward: unprimed coordinates written in the primed chart.
  ChartChange fwd;
  fwd.from = cc.unprimed;
  fwd.to = cc.primed;
  fwd.xrule = inv_rules;
  fwd.grule.assign(static_cast<std::size_t>(cc.unprimed->ngens()), GradedPoly(cc.primed));
  for (int mu = 0; mu < n; ++mu) {
    GradedPoly psi(cc.primed), b(cc.primed), p(cc.primed);
    for (int nu = 0; nu < n; ++nu) {
      psi += gen(cc.primed, layout::psi(nu)) * Jbinv.at(mu, nu);
      b += gen(cc.primed, layout::b(n, nu)) * Jb.at(nu, mu);
      p += gen(cc.primed, layout::p(n, nu)) * Jb.at(nu, mu);
    }
    // p = J^T p' + dJ^T b' with psi re-expressed.
    for (int nu = 0; nu < n; ++nu)
      for (int kappa = 0; kappa < n; ++kappa)
        for (int lam = 0; lam < n; ++lam) {
          RationalFunction c =
              compose(RationalFunction::of(phi[static_cast<std::size_t>(nu)]
                                               .derivative(mu)
                                               .derivative(kappa))) *
              Jbinv.at(kappa, lam);
          if (c.is_zero()) continue;
          p += gen(cc.primed, layout::psi(lam)) * gen(cc.primed, layout::b(n, nu)) * c;
        }
    fwd.grule[static_cast<std::size_t>(layout::psi(mu))] = psi;
    fwd.grule[static_cast<std::size_t>(layout::b(n, mu))] = b;
    fwd.grule[static_cast<std::size_t>(layout::p(n, mu))] = p;
  }
  if (with_tm_fibre) {
    for (int mu = 0; mu < n; ++mu) {
      GradedPoly s(cc.primed), su(cc.primed);
      for (int nu = 0; nu < n; ++nu) {
        s += gen(cc.primed, layout::fibre(n, nu)) * Jb.at(nu, mu);
        su += gen(cc.primed, layout::fibre(n, n + nu)) * Jbinv.at(mu, nu);
      }
      fwd.grule[static_cast<std::size_t>(layout::fibre(n, mu))] = s;
      fwd.grule[static_cast<std::size_t>(layout::fibre(n, n + mu))] = su;
    }
  }
  cc.fwd = fwd;

  // Backward: primed coordinates written in the unprimed chart.
  ChartChange bwd;
  bwd.from = cc.primed;
  bwd.to = cc.unprimed;
  bwd.xrule = to_rf(phi);
  bwd.grule.assign(static_cast<std::size_t>(cc.primed->ngens()), GradedPoly(cc.unprimed));
  for (int mu = 0; mu < n; ++mu) {
    GradedPoly psi(cc.unprimed), b(cc.unprimed), p(cc.unprimed);
    for (int nu = 0; nu < n; ++nu) {
      psi += gen(cc.unprimed, layout::psi(nu)) * J.at(mu, nu);
      b += gen(cc.unprimed, layout::b(n, nu)) * Jinv.at(nu, mu);
      p += gen(cc.unprimed, layout::p(n, nu)) * Jinv.at(nu, mu);
    }
    // p' = J^{-T} p - J^{-T} dJ^T J^{-T} b.
    for (int nu = 0; nu < n; ++nu)
      for (int rho = 0; rho < n; ++rho)
        for (int kappa = 0; kappa < n; ++kappa)
          for (int sigma = 0; sigma < n; ++sigma) {
            RationalFunction c =
                Jinv.at(nu, mu) *
                RationalFunction::of(
                    phi[static_cast<std::size_t>(rho)].derivative(nu).derivative(kappa)) *
                Jinv.at(sigma, rho);
            if (c.is_zero()) continue;
            p -= gen(cc.unprimed, layout::psi(kappa)) * gen(cc.unprimed, layout::b(n, sigma)) * c;
          }
    bwd.grule[static_cast<std::size_t>(layout::psi(mu))] = psi;
    bwd.grule[static_cast<std::size_t>(layout::b(n, mu))] = b;
    bwd.grule[static_cast<std::size_t>(layout::p(n, mu))] = p;
  }
  if (with_tm_fibre) {
    for (int mu = 0; mu < n; ++mu) {
      GradedPoly s(cc.unprimed), su(cc.unprimed);
      for (int nu = 0; nu < n; ++nu) {
        s += gen(cc.unprimed, layout::fibre(n, nu)) * Jinv.at(nu, mu);
        su += gen(cc.unprimed, layout::fibre(n, n + nu)) * J.at(mu, nu);
      }
      bwd.grule[static_cast<std::size_t>(layout::fibre(n, mu))] = s;
      bwd.grule[static_cast<std::size_t>(layout::fibre(n, n + mu))] = su;
    }
  }
  cc.bwd = bwd;

  // Round trip must be the identity on every generator.
  for (int i = 0; i < cc.unprimed->ngens(); ++i) {
    GradedPoly g = GradedPoly::generator(cc.unprimed, i);
    if (cc.bwd.apply(cc.fwd.apply(g)) != g)
      throw Error("make_courant_change: induced rules fail to invert");
  }
  return cc;
}

Derivation pushforward(const Derivation& x, const ChartChange& fwd, const ChartChange& bwd) {
  if (*x.chart() != *fwd.from) throw Error("pushforward: chart mismatch");
  Derivation r(fwd.to, x.degree());
  for (int mu = 0; mu < fwd.to->n(); ++mu) {
    // bwd.xrule expresses the target base coordinate over the source chart.
    GradedPoly c = GradedPoly::scalar(fwd.from, bwd.xrule[static_cast<std::size_t>(mu)]);
    r.set_x_image(mu, fwd.apply(x.apply(c)));
  }
  for (int i = 0; i < fwd.to->ngens(); ++i)
    r.set_gen_image(i, fwd.apply(x.apply(bwd.grule[static_cast<std::size_t>(i)])));
  return r;
}

}  // namespace gradedq
