#include "gradedq/courant.hpp"

#include <algorithm>

namespace gradedq {

namespace {

// Sign of the permutation sorting idx ascending; 0 when indices repeat.
int sort_sign(std::array<int, 3>& idx) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int j = 0; j < 2 - pass; ++j) {
      if (idx[static_cast<std::size_t>(j)] > idx[static_cast<std::size_t>(j + 1)]) {
        std::swap(idx[static_cast<std::size_t>(j)], idx[static_cast<std::size_t>(j + 1)]);
        sign = -sign;
      }
    }
  if (idx[0] == idx[1] || idx[1] == idx[2]) return 0;
  return sign;
}

}  // namespace

void CourantModel::set_H(int i, int j, int k, const RationalFunction& value) {
  std::array<int, 3> idx = {i, j, k};
  int sign = sort_sign(idx);
  if (sign == 0) {
    if (!value.is_zero()) throw Error("CourantModel::set_H: repeated indices");
    return;
  }
  RationalFunction v = sign < 0 ? -value : value;
  if (v.is_zero())
    h_.erase(idx);
  else
    h_[idx] = v;
}

RationalFunction CourantModel::H(int i, int j, int k) const {
  std::array<int, 3> idx = {i, j, k};
  int sign = sort_sign(idx);
  if (sign == 0) return RationalFunction(n_);
  auto it = h_.find(idx);
  if (it == h_.end()) return RationalFunction(n_);
  return sign < 0 ? -it->second : it->second;
}

std::map<std::array<int, 4>, RationalFunction> CourantModel::dH() const {
  std::map<std::array<int, 4>, RationalFunction> out;
  for (int k = 0; k < n_; ++k)
    for (int m = k + 1; m < n_; ++m)
      for (int nu = m + 1; nu < n_; ++nu)
        for (int r = nu + 1; r < n_; ++r) {
          // (dH)_{k m nu r} = d_k H_{m nu r} - d_m H_{k nu r}
          //                   + d_nu H_{k m r} - d_r H_{k m nu}
          RationalFunction v = H(m, nu, r).derivative(k) - H(k, nu, r).derivative(m) +
                               H(k, m, r).derivative(nu) - H(k, m, nu).derivative(r);
          if (!v.is_zero()) out[{k, m, nu, r}] = v;
        }
  return out;
}

GenSection GenSection::operator+(const GenSection& o) const {
  GenSection r(n());
  for (int i = 0; i < n(); ++i) {
    r.vec[static_cast<std::size_t>(i)] = vec[static_cast<std::size_t>(i)] + o.vec[static_cast<std::size_t>(i)];
    r.form[static_cast<std::size_t>(i)] = form[static_cast<std::size_t>(i)] + o.form[static_cast<std::size_t>(i)];
  }
  return r;
}

GenSection GenSection::operator-(const GenSection& o) const { return *this + (-o); }

GenSection GenSection::operator*(const RationalFunction& f) const {
  GenSection r(n());
  for (int i = 0; i < n(); ++i) {
    r.vec[static_cast<std::size_t>(i)] = vec[static_cast<std::size_t>(i)] * f;
    r.form[static_cast<std::size_t>(i)] = form[static_cast<std::size_t>(i)] * f;
  }
  return r;
}

GenSection GenSection::operator-() const {
  GenSection r(n());
  for (int i = 0; i < n(); ++i) {
    r.vec[static_cast<std::size_t>(i)] = -vec[static_cast<std::size_t>(i)];
    r.form[static_cast<std::size_t>(i)] = -form[static_cast<std::size_t>(i)];
  }
  return r;
}

bool GenSection::is_zero() const {
  for (auto& v : vec)
    if (!v.is_zero()) return false;
  for (auto& v : form)
    if (!v.is_zero()) return false;
  return true;
}

GradedPoly theta(const CourantModel& m, const ChartPtr& chart) {
  int n = m.n();
  GradedPoly t(chart);
  for (int mu = 0; mu < n; ++mu)
    t += GradedPoly::generator(chart, layout::psi(mu)) *
         GradedPoly::generator(chart, layout::p(n, mu));
  for (auto& [idx, h] : m.H_storage()) {
    t += GradedPoly::generator(chart, layout::psi(idx[0])) *
         GradedPoly::generator(chart, layout::psi(idx[1])) *
         GradedPoly::generator(chart, layout::psi(idx[2])) * h;
  }
  return t;
}

GradedPoly theta(const CourantModel& m) { return theta(m, courant_chart(m.n())); }

Derivation courant_differential(const CourantModel& m, const ChartPtr& chart) {
  int n = m.n();
  Derivation d(chart, 1);
  for (int mu = 0; mu < n; ++mu)
    d.set_x_image(mu, GradedPoly::generator(chart, layout::psi(mu)));
  for (int mu = 0; mu < n; ++mu) {
    GradedPoly img = GradedPoly::generator(chart, layout::p(n, mu));
    for (int nu = 0; nu < n; ++nu)
      for (int rho = 0; rho < n; ++rho) {
        RationalFunction h = m.H(mu, nu, rho);
        if (h.is_zero()) continue;
        img += GradedPoly::generator(chart, layout::psi(nu)) *
               GradedPoly::generator(chart, layout::psi(rho)) *
               (h * RationalFunction::fraction(n, 1, 2));
      }
    d.set_gen_image(layout::b(n, mu), img);
  }
  for (int kappa = 0; kappa < n; ++kappa) {
    GradedPoly img(chart);
    for (auto& [idx, h] : m.H_storage()) {
      RationalFunction dh = h.derivative(kappa);
      if (dh.is_zero()) continue;
      img -= GradedPoly::generator(chart, layout::psi(idx[0])) *
             GradedPoly::generator(chart, layout::psi(idx[1])) *
             GradedPoly::generator(chart, layout::psi(idx[2])) * dh;
    }
    d.set_gen_image(layout::p(n, kappa), img);
  }
  return d;
}

Derivation courant_differential(const CourantModel& m) {
  return courant_differential(m, courant_chart(m.n()));
}

namespace {

// The chart must start with the Courant block psi / b / p; extra fibre
// generators are inert for the bracket.
void require_courant_layout(const ChartPtr& chart) {
  int n = chart->n();
  if (chart->ngens() < 3 * n) throw Error("poisson_bracket: not a Courant chart");
  for (int mu = 0; mu < n; ++mu) {
    if (chart->gen(layout::psi(mu)).degree != 1 || chart->gen(layout::b(n, mu)).degree != 1 ||
        chart->gen(layout::p(n, mu)).degree != 2)
      throw Error("poisson_bracket: not a Courant chart");
  }
}

}  // namespace

GradedPoly poisson_bracket(const GradedPoly& f, const GradedPoly& g) {
  const ChartPtr& chart = f.chart();
  if (*chart != *g.chart()) throw Error("poisson_bracket: chart mismatch");
  require_courant_layout(chart);
  int n = chart->n();

  auto half = [&](const GradedPoly& fp, int fparity) {
    GradedPoly acc(chart);
    for (int mu = 0; mu < n; ++mu) {
      acc += fp.partial(layout::p(n, mu)) * g.x_partial(mu);
      acc -= fp.x_partial(mu) * g.partial(layout::p(n, mu));
      GradedPoly odd = fp.partial(layout::psi(mu)) * g.partial(layout::b(n, mu)) +
                       fp.partial(layout::b(n, mu)) * g.partial(layout::psi(mu));
      acc += (fparity == 0) ? -odd : odd;
    }
    return acc;
  };

  auto [fe, fo] = f.parity_parts();
  return half(fe, 0) + half(fo, 1);
}

Derivation hamiltonian_vf(const GradedPoly& f) {
  int deg = 0;
  if (!f.is_homogeneous(&deg)) throw Error("hamiltonian_vf: non-homogeneous hamiltonian");
  const ChartPtr& chart = f.chart();
  Derivation d(chart, deg - 2);
  for (int mu = 0; mu < chart->n(); ++mu) {
    GradedPoly xmu = GradedPoly::scalar(chart, RationalFunction::variable(chart->n(), mu));
    d.set_x_image(mu, poisson_bracket(f, xmu));
  }
  for (int i = 0; i < chart->ngens(); ++i)
    d.set_gen_image(i, poisson_bracket(f, GradedPoly::generator(chart, i)));
  return d;
}

MasterReport check_master(const CourantModel& m) {
  MasterReport r;
  GradedPoly t = theta(m);
  r.bracket = poisson_bracket(t, t);
  r.dh = m.dH();
  r.bracket_zero = r.bracket.is_zero();
  r.dh_zero = r.dh.empty();
  r.consistent = (r.bracket_zero == r.dh_zero);
  return r;
}

GenSection dorfman(const GenSection& a, const GenSection& b, const CourantModel& m) {
  int n = a.n();
  if (b.n() != n || m.n() != n) throw Error("dorfman: dimension mismatch");
  GenSection r(n);
  auto X = [&](int mu) { return a.vec[static_cast<std::size_t>(mu)]; };
  auto xi = [&](int mu) { return a.form[static_cast<std::size_t>(mu)]; };
  auto Y = [&](int mu) { return b.vec[static_cast<std::size_t>(mu)]; };
  auto nu = [&](int mu) { return b.form[static_cast<std::size_t>(mu)]; };

  for (int mu = 0; mu < n; ++mu) {
    RationalFunction v(n), w(n);
    for (int k = 0; k < n; ++k) {
      // [X, Y]
      v += X(k) * Y(mu).derivative(k) - Y(k) * X(mu).derivative(k);
      // (L_X nu)_mu = X^k d_k nu_mu + nu_k d_mu X^k
      w += X(k) * nu(mu).derivative(k) + nu(k) * X(k).derivative(mu);
      // -(i_Y d xi)_mu = -Y^k (d_k xi_mu - d_mu xi_k)
      w -= Y(k) * (xi(mu).derivative(k) - xi(k).derivative(mu));
      // (i_Y i_X H)_mu = X^k Y^l H_{k l mu}
      for (int l = 0; l < n; ++l) {
        RationalFunction h = m.H(k, l, mu);
        if (!h.is_zero()) w += X(k) * Y(l) * h;
      }
    }
    r.vec[static_cast<std::size_t>(mu)] = v;
    r.form[static_cast<std::size_t>(mu)] = w;
  }
  return r;
}

GenSection dorfman_skew(const GenSection& a, const GenSection& b, const CourantModel& m) {
  GenSection d1 = dorfman(a, b, m);
  GenSection d2 = dorfman(b, a, m);
  return (d1 - d2) * RationalFunction::fraction(a.n(), 1, 2);
}

RationalFunction pairing(const GenSection& a, const GenSection& b) {
  int n = a.n();
  if (b.n() != n) throw Error("pairing: dimension mismatch");
  RationalFunction r(n);
  for (int mu = 0; mu < n; ++mu)
    r += a.vec[static_cast<std::size_t>(mu)] * b.form[static_cast<std::size_t>(mu)] +
         a.form[static_cast<std::size_t>(mu)] * b.vec[static_cast<std::size_t>(mu)];
  return r;
}

std::vector<RationalFunction> anchor(const GenSection& a) { return a.vec; }

RationalFunction anchor_apply(const GenSection& a, const RationalFunction& f) {
  RationalFunction r(a.n());
  for (int mu = 0; mu < a.n(); ++mu) r += a.vec[static_cast<std::size_t>(mu)] * f.derivative(mu);
  return r;
}

GradedPoly section_function(const GenSection& a, const ChartPtr& chart) {
  int n = a.n();
  GradedPoly r(chart);
  for (int mu = 0; mu < n; ++mu) {
    r += GradedPoly::generator(chart, layout::b(n, mu)) * a.vec[static_cast<std::size_t>(mu)];
    r += GradedPoly::generator(chart, layout::psi(mu)) * a.form[static_cast<std::size_t>(mu)];
  }
  return r;
}

}  // namespace gradedq
