#include "gradedq/rational_function.hpp"

namespace gradedq {

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw Error("RationalFunction: variable count mismatch");
  if (den_.is_zero()) throw Error("RationalFunction: zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.nvars(), 1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  num_ = Poly::div_exact(num_, g);
  den_ = Poly::div_exact(den_, g);
  if (den_.lead_sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool RationalFunction::is_one() const {
  return num_ == Poly::constant(num_.nvars(), 1) && den_ == Poly::constant(num_.nvars(), 1);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw Error("RationalFunction: division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error("RationalFunction: inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(unsigned k) const {
  RationalFunction r = constant(nvars(), 1);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

RationalFunction RationalFunction::derivative(int i) const {
  // (n/d)' = (n'd - nd')/d^2
  return RationalFunction(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
}

RationalFunction RationalFunction::eval(const std::vector<RationalFunction>& vals) const {
  if (static_cast<int>(vals.size()) != nvars()) throw Error("RationalFunction::eval: arity");
  int out = vals.empty() ? 0 : vals[0].nvars();
  auto eval_poly = [&](const Poly& p) {
    RationalFunction acc(out);
    for (auto& [e, c] : p.terms()) {
      RationalFunction t = constant(out, c);
      for (int i = 0; i < nvars(); ++i)
        if (e[i] > 0) t = t * vals[i].pow(e[i]);
      acc = acc + t;
    }
    return acc;
  };
  RationalFunction d = eval_poly(den_);
  if (d.is_zero()) throw Error("RationalFunction::eval: substitution makes denominator zero");
  return eval_poly(num_) / d;
}

std::string RationalFunction::str(const std::vector<std::string>& names) const {
  bool dtriv = den_ == Poly::constant(num_.nvars(), 1);
  if (dtriv) return num_.str(names);
  std::string n = num_.str(names);
  std::string d = den_.str(names);
  return "(" + n + ")/(" + d + ")";
}

std::string RationalFunction::str() const {
  std::vector<std::string> names;
  for (int i = 0; i < nvars(); ++i) names.push_back("x" + std::to_string(i + 1));
  return str(names);
}

}  // namespace gradedq
