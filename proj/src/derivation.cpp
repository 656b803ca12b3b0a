#include "gradedq/derivation.hpp"

#include <algorithm>

namespace gradedq {

Derivation::Derivation(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  ximg_.assign(static_cast<std::size_t>(chart_->n()), GradedPoly(chart_));
  gimg_.assign(static_cast<std::size_t>(chart_->ngens()), GradedPoly(chart_));
}

void Derivation::check_degree(const GradedPoly& v, int coord_degree) const {
  int d = 0;
  if (!v.is_homogeneous(&d)) throw Error("Derivation: image not homogeneous");
  if (!v.is_zero() && d != coord_degree + degree_)
    throw Error("Derivation: image has wrong degree");
}

void Derivation::set_x_image(int mu, GradedPoly v) {
  check_degree(v, 0);
  ximg_[static_cast<std::size_t>(mu)] = std::move(v);
}

void Derivation::set_gen_image(int i, GradedPoly v) {
  check_degree(v, chart_->degree(i));
  gimg_[static_cast<std::size_t>(i)] = std::move(v);
}

GradedPoly Derivation::apply(const GradedPoly& f) const {
  if (*f.chart() != *chart_) throw Error("Derivation::apply: chart mismatch");
  GradedPoly acc(chart_);
  for (int mu = 0; mu < chart_->n(); ++mu) {
    if (ximg_[static_cast<std::size_t>(mu)].is_zero()) continue;
    acc += ximg_[static_cast<std::size_t>(mu)] * f.x_partial(mu);
  }
  for (int i = 0; i < chart_->ngens(); ++i) {
    if (gimg_[static_cast<std::size_t>(i)].is_zero()) continue;
    acc += gimg_[static_cast<std::size_t>(i)] * f.partial(i);
  }
  return acc;
}

Derivation Derivation::commutator(const Derivation& o) const {
  if (*chart_ != *o.chart_) throw Error("Derivation::commutator: chart mismatch");
  int sign = (parity() && o.parity()) ? -1 : 1;
  Derivation r(chart_, degree_ + o.degree_);
  for (int mu = 0; mu < chart_->n(); ++mu) {
    GradedPoly v = apply(o.x_image(mu));
    GradedPoly w = o.apply(x_image(mu));
    r.set_x_image(mu, sign < 0 ? v + w : v - w);
  }
  for (int i = 0; i < chart_->ngens(); ++i) {
    GradedPoly v = apply(o.gen_image(i));
    GradedPoly w = o.apply(gen_image(i));
    r.set_gen_image(i, sign < 0 ? v + w : v - w);
  }
  return r;
}

Derivation Derivation::squared() const {
  if (parity() != 1) throw Error("Derivation::squared: even-degree input");
  Derivation r(chart_, 2 * degree_);
  for (int mu = 0; mu < chart_->n(); ++mu) r.set_x_image(mu, apply(x_image(mu)));
  for (int i = 0; i < chart_->ngens(); ++i) r.set_gen_image(i, apply(gen_image(i)));
  return r;
}

Derivation Derivation::operator+(const Derivation& o) const {
  if (*chart_ != *o.chart_ || degree_ != o.degree_) throw Error("Derivation: incompatible sum");
  Derivation r(chart_, degree_);
  for (int mu = 0; mu < chart_->n(); ++mu) r.set_x_image(mu, x_image(mu) + o.x_image(mu));
  for (int i = 0; i < chart_->ngens(); ++i) r.set_gen_image(i, gen_image(i) + o.gen_image(i));
  return r;
}

Derivation Derivation::operator-() const {
  Derivation r(chart_, degree_);
  for (int mu = 0; mu < chart_->n(); ++mu) r.set_x_image(mu, -x_image(mu));
  for (int i = 0; i < chart_->ngens(); ++i) r.set_gen_image(i, -gen_image(i));
  return r;
}

bool Derivation::is_zero() const {
  for (auto& v : ximg_)
    if (!v.is_zero()) return false;
  for (auto& v : gimg_)
    if (!v.is_zero()) return false;
  return true;
}

bool Derivation::operator==(const Derivation& o) const {
  if (*chart_ != *o.chart_) return false;
  if (is_zero() && o.is_zero()) return true;
  if (degree_ != o.degree_) return false;
  return ximg_ == o.ximg_ && gimg_ == o.gimg_;
}

bool Derivation::is_vertical(const std::vector<int>& gens, bool include_base) const {
  if (include_base)
    for (auto& v : ximg_)
      if (!v.is_zero()) return false;
  for (int i : gens)
    if (!gen_image(i).is_zero()) return false;
  return true;
}

bool Derivation::is_projectable(const std::vector<int>& kept) const {
  std::vector<bool> keep(static_cast<std::size_t>(chart_->ngens()), false);
  for (int i : kept) keep[static_cast<std::size_t>(i)] = true;
  for (int i : kept) {
    for (auto& [m, c] : gen_image(i).terms()) {
      for (int j = 0; j < chart_->ngens(); ++j)
        if (m[static_cast<std::size_t>(j)] > 0 && !keep[static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

}  // namespace gradedq
