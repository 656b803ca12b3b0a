#include "gradedq/graded_poly.hpp"

#include <sstream>

namespace gradedq {

GradedPoly GradedPoly::scalar(ChartPtr chart, const RationalFunction& c) {
  GradedPoly r(chart);
  if (c.nvars() != chart->n()) throw Error("GradedPoly::scalar: coefficient arity mismatch");
  r.add_term(Mono(static_cast<std::size_t>(chart->ngens()), 0), c);
  return r;
}

GradedPoly GradedPoly::constant(ChartPtr chart, const Int& c) {
  return scalar(chart, RationalFunction::constant(chart->n(), c));
}

GradedPoly GradedPoly::generator(ChartPtr chart, int i) {
  if (i < 0 || i >= chart->ngens()) throw Error("GradedPoly::generator: index out of range");
  GradedPoly r(chart);
  Mono m(static_cast<std::size_t>(chart->ngens()), 0);
  m[static_cast<std::size_t>(i)] = 1;
  r.add_term(m, RationalFunction::constant(chart->n(), 1));
  return r;
}

void GradedPoly::check_same_chart(const GradedPoly& o) const {
  if (!chart_ || !o.chart_ || *chart_ != *o.chart_) throw Error("GradedPoly: chart mismatch");
}

void GradedPoly::add_term(const Mono& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  for (int i = 0; i < chart_->ngens(); ++i)
    if (chart_->parity(i) == 1 && m[static_cast<std::size_t>(i)] > 1)
      return;  // odd square vanishes
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r(chart_);
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  check_same_chart(o);
  GradedPoly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const { return *this + (-o); }

int koszul_merge(const Chart& chart, const GradedPoly::Mono& a, const GradedPoly::Mono& b,
                 GradedPoly::Mono& out) {
  int ng = chart.ngens();
  out.assign(static_cast<std::size_t>(ng), 0);
  long crossings = 0;
  // Odd generators of b pass leftward over odd generators of a with larger
  // chart index.
  std::vector<long> odd_suffix(static_cast<std::size_t>(ng) + 1, 0);
  for (int i = ng - 1; i >= 0; --i) {
    odd_suffix[static_cast<std::size_t>(i)] = odd_suffix[static_cast<std::size_t>(i) + 1] +
        (chart.parity(i) == 1 ? a[static_cast<std::size_t>(i)] : 0);
  }
  for (int j = 0; j < ng; ++j) {
    unsigned ea = a[static_cast<std::size_t>(j)], eb = b[static_cast<std::size_t>(j)];
    if (chart.parity(j) == 1) {
      if (ea + eb > 1) return 0;  // odd square
      if (eb) crossings += odd_suffix[static_cast<std::size_t>(j) + 1];
    }
    out[static_cast<std::size_t>(j)] = ea + eb;
  }
  return (crossings % 2 == 0) ? 1 : -1;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
  check_same_chart(o);
  GradedPoly r(chart_);
  Mono m;
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) {
      int sign = koszul_merge(*chart_, m1, m2, m);
      if (sign == 0) continue;
      RationalFunction c = c1 * c2;
      if (sign < 0) c = -c;
      r.add_term(m, c);
    }
  return r;
}

GradedPoly GradedPoly::operator*(const RationalFunction& c) const {
  GradedPoly r(chart_);
  for (auto& [m, k] : terms_) r.add_term(m, k * c);
  return r;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
  if (!chart_ || !o.chart_) return terms_.empty() && o.terms_.empty();
  return *chart_ == *o.chart_ && terms_ == o.terms_;
}

int GradedPoly::mono_degree(const Mono& m) const {
  int d = 0;
  for (int i = 0; i < chart_->ngens(); ++i)
    d += chart_->degree(i) * static_cast<int>(m[static_cast<std::size_t>(i)]);
  return d;
}

bool GradedPoly::is_homogeneous(int* deg) const {
  if (terms_.empty()) {
    if (deg) *deg = 0;
    return true;
  }
  int d = mono_degree(terms_.begin()->first);
  for (auto& [m, c] : terms_)
    if (mono_degree(m) != d) return false;
  if (deg) *deg = d;
  return true;
}

GradedPoly GradedPoly::homogeneous_part(int deg) const {
  GradedPoly r(chart_);
  for (auto& [m, c] : terms_)
    if (mono_degree(m) == deg) r.terms_[m] = c;
  return r;
}

std::pair<GradedPoly, GradedPoly> GradedPoly::parity_parts() const {
  GradedPoly even(chart_), odd(chart_);
  for (auto& [m, c] : terms_) {
    if (mono_parity_of(mono_degree(m)) == 0)
      even.terms_[m] = c;
    else
      odd.terms_[m] = c;
  }
  return {even, odd};
}

GradedPoly GradedPoly::partial(int i) const {
  if (i < 0 || i >= chart_->ngens()) throw Error("GradedPoly::partial: unknown generator");
  GradedPoly r(chart_);
  for (auto& [m, c] : terms_) {
    unsigned e = m[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    Mono d = m;
    d[static_cast<std::size_t>(i)] = e - 1;
    if (chart_->parity(i) == 1) {
      // Left derivative picks up a sign from moving past earlier odd factors.
      long before = 0;
      for (int j = 0; j < i; ++j)
        if (chart_->parity(j) == 1) before += m[static_cast<std::size_t>(j)];
      RationalFunction v = c;
      if (before % 2 != 0) v = -v;
      r.add_term(d, v);
    } else {
      r.add_term(d, c * RationalFunction::constant(chart_->n(), Int(e)));
    }
  }
  return r;
}

GradedPoly GradedPoly::x_partial(int mu) const {
  if (mu < 0 || mu >= chart_->n()) throw Error("GradedPoly::x_partial: index out of range");
  GradedPoly r(chart_);
  for (auto& [m, c] : terms_) r.add_term(m, c.derivative(mu));
  return r;
}

RationalFunction GradedPoly::coefficient(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFunction(chart_->n()) : it->second;
}

std::vector<GradedPoly> GradedPoly::linear_coefficients(const std::vector<int>& gens) const {
  std::vector<GradedPoly> out(gens.size(), GradedPoly(chart_));
  for (auto& [m, c] : terms_) {
    int hits = 0;
    std::size_t which = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      unsigned e = m[static_cast<std::size_t>(gens[k])];
      if (e > 1) throw Error("linear_coefficients: generator appears nonlinearly");
      if (e == 1) {
        ++hits;
        which = k;
      }
    }
    if (hits != 1) throw Error("linear_coefficients: term not linear in the given generators");
    Mono rest = m;
    rest[static_cast<std::size_t>(gens[which])] = 0;
    out[which].add_term(rest, c);
  }
  return out;
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str(chart_->base_names()) << ")";
    for (int i = 0; i < chart_->ngens(); ++i) {
      unsigned e = m[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      os << "*" << chart_->gen(i).name;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace gradedq
