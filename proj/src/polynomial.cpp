#include "gradedq/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace gradedq {

Poly Poly::constant(int nvars, const Int& c) {
  Poly p(nvars);
  if (c != 0) p.terms_[Expo(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error("Poly::variable: index out of range");
  Poly p(nvars);
  Expo e(nvars, 0);
  e[i] = 1;
  p.terms_[e] = 1;
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Expo(nvars_, 0);
}

Int Poly::constant_term() const {
  auto it = terms_.find(Expo(nvars_, 0));
  return it == terms_.end() ? Int(0) : it->second;
}

void Poly::add_term(const Expo& e, const Int& c) {
  if (static_cast<int>(e.size()) != nvars_) throw Error("Poly::add_term: bad exponent size");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw Error("Poly: variable count mismatch");
  Poly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw Error("Poly: variable count mismatch");
  Poly r(nvars_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      Expo e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::operator*(const Int& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

bool Poly::operator<(const Poly& o) const {
  if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

Poly Poly::derivative(int i) const {
  Poly r(nvars_);
  for (auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Expo d = e;
    d[i] -= 1;
    r.add_term(d, c * Int(e[i]));
  }
  return r;
}

int Poly::degree(int i) const {
  int d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[i]));
  return d;
}

int Poly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int t = 0;
    for (unsigned k : e) t += static_cast<int>(k);
    d = std::max(d, t);
  }
  return d;
}

Poly Poly::coeff_in(int i, unsigned k) const {
  Poly r(nvars_);
  for (auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Expo d = e;
    d[i] = 0;
    r.add_term(d, c);
  }
  return r;
}

Poly Poly::leading_coeff_in(int i) const {
  int d = degree(i);
  if (d < 0) return Poly(nvars_);
  return coeff_in(i, static_cast<unsigned>(d));
}

int Poly::lead_sign() const {
  if (terms_.empty()) return 0;
  return sgn(terms_.rbegin()->second);
}

Int Poly::content() const {
  Int g = 0;
  for (auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("Poly::div_exact: division by zero");
  if (a.nvars_ != b.nvars_) throw Error("Poly: variable count mismatch");
  Poly rem = a;
  Poly quo(a.nvars_);
  const auto& blead = *b.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    Expo q(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i) {
      if (rlead.first[i] < blead.first[i]) throw Error("Poly::div_exact: not divisible");
      q[i] = rlead.first[i] - blead.first[i];
    }
    Int qc;
    mpz_tdiv_q(qc.get_mpz_t(), rlead.second.get_mpz_t(), blead.second.get_mpz_t());
    if (qc * blead.second != rlead.second) throw Error("Poly::div_exact: not divisible");
    Poly t(a.nvars_);
    t.terms_[q] = qc;
    quo = quo + t;
    rem = rem - t * b;
  }
  return quo;
}

// Pseudo-remainder of a by b, both viewed as univariate in variable v.
Poly Poly::prem(const Poly& a, const Poly& b, int v) {
  int db = b.degree(v);
  Poly lb = b.leading_coeff_in(v);
  Poly rem = a;
  int dr = rem.degree(v);
  while (!rem.is_zero() && dr >= db) {
    Poly lr = rem.leading_coeff_in(v);
    Poly xshift = Poly::variable(a.nvars_, v).pow(static_cast<unsigned>(dr - db));
    rem = rem * lb - b * lr * xshift;
    int nd = rem.degree(v);
    if (nd >= dr && !rem.is_zero()) throw Error("Poly::prem: no degree drop");
    dr = nd;
  }
  return rem;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly(a.nvars_);
  if (a.is_zero()) return b.lead_sign() < 0 ? -b : b;
  if (b.is_zero()) return a.lead_sign() < 0 ? -a : a;
  if (a.nvars_ != b.nvars_) throw Error("Poly: variable count mismatch");

  // Main variable: highest-index variable occurring in either operand.
  int v = -1;
  for (int i = a.nvars_ - 1; i >= 0; --i) {
    if (a.degree(i) > 0 || b.degree(i) > 0) {
      v = i;
      break;
    }
  }
  if (v < 0) {
    Int g;
    Int ca = a.constant_term(), cb = b.constant_term();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return constant(a.nvars_, g);
  }

  // Contents with respect to v are gcds of the v-coefficients; recursion
  // terminates because each coefficient omits variable v.
  auto content_in = [&](const Poly& p) {
    Poly c(p.nvars_);
    for (int k = 0; k <= p.degree(v); ++k) c = gcd(c, p.coeff_in(v, static_cast<unsigned>(k)));
    return c;
  };

  Poly ca = content_in(a), cb = content_in(b);
  Poly f = div_exact(a, ca), g = div_exact(b, cb);
  Poly cg = gcd(ca, cb);

  if (f.degree(v) < g.degree(v)) std::swap(f, g);
  // Primitive PRS.
  while (true) {
    Poly r = prem(f, g, v);
    if (r.is_zero()) break;
    Poly cr = content_in(r);
    f = g;
    g = div_exact(r, cr);
    if (g.degree(v) == 0) {
      g = constant(a.nvars_, 1);
      break;
    }
  }
  Poly result = cg * g;
  if (result.lead_sign() < 0) result = -result;
  return result;
}

Poly Poly::eval(const std::vector<Poly>& vals) const {
  if (static_cast<int>(vals.size()) != nvars_) throw Error("Poly::eval: arity mismatch");
  int out_nvars = nvars_ == 0 ? 0 : vals.empty() ? 0 : vals[0].nvars();
  for (auto& v : vals)
    if (v.nvars() != out_nvars) throw Error("Poly::eval: inconsistent value arity");
  Poly r(out_nvars);
  for (auto& [e, c] : terms_) {
    Poly t = constant(out_nvars, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = t * vals[i].pow(e[i]);
    r = r + t;
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lex term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    Int ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = false;
    for (unsigned k : it->first) has_vars = has_vars || k > 0;
    bool coeff_shown = (ac != 1) || !has_vars;
    if (coeff_shown) os << ac.get_str();
    bool need_star = coeff_shown;
    for (int i = 0; i < nvars_; ++i) {
      unsigned k = it->first[i];
      if (k == 0) continue;
      if (need_star) os << "*";
      os << names[static_cast<std::size_t>(i)];
      if (k > 1) os << "^" << k;
      need_star = true;
    }
  }
  return os.str();
}

std::string Poly::str() const {
  std::vector<std::string> names;
  for (int i = 0; i < nvars_; ++i) names.push_back("x" + std::to_string(i + 1));
  return str(names);
}

}  // namespace gradedq
