#include "gradedq/parser.hpp"

#include <cctype>

namespace gradedq {

namespace {

// Recursive descent over: expr := term (('+'|'-') term)*
//                         term := factor (('*'|'/') factor)*
//                         factor := ('-')* base ('^' UINT)?
//                         base := UINT | IDENT | '(' expr ')'
class Parser {
 public:
  Parser(const std::string& text, ChartPtr chart) : text_(text), chart_(std::move(chart)) {}

  GradedPoly parse() {
    GradedPoly v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return v;
  }

 private:
  const std::string& text_;
  ChartPtr chart_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  GradedPoly expr() {
    GradedPoly v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  GradedPoly term() {
    GradedPoly v = factor();
    while (true) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        GradedPoly d = factor();
        int deg = 0;
        if (!d.is_homogeneous(&deg) || deg != 0)
          throw ParseError("division by a non-scalar expression", at);
        RationalFunction c = d.coefficient(
            GradedPoly::Mono(static_cast<std::size_t>(chart_->ngens()), 0));
        if (c.is_zero()) throw ParseError("division by zero", at);
        v = v * c.inverse();
      } else {
        return v;
      }
    }
  }

  GradedPoly factor() {
    if (eat('-')) return -factor();
    GradedPoly v = base();
    if (eat('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected a nonnegative integer exponent", at);
      unsigned long k = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        k = k * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      GradedPoly r = GradedPoly::constant(chart_, 1);
      for (unsigned long i = 0; i < k; ++i) r = r * v;
      return r;
    }
    return v;
  }

  GradedPoly base() {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", at);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GradedPoly v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      return GradedPoly::constant(chart_, Int(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      for (int i = 0; i < chart_->n(); ++i)
        if (chart_->base_names()[static_cast<std::size_t>(i)] == name)
          return GradedPoly::scalar(chart_, RationalFunction::variable(chart_->n(), i));
      int g = chart_->find(name);
      if (g >= 0) return GradedPoly::generator(chart_, g);
      throw ParseError("unknown identifier '" + name + "'", at);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }
};

}  // namespace

GradedPoly parse_graded(const std::string& text, const ChartPtr& chart) {
  return Parser(text, chart).parse();
}

RationalFunction parse_scalar(const std::string& text, int nvars) {
  ChartPtr bare = make_chart(nvars, {});
  GradedPoly g = Parser(text, bare).parse();
  return g.coefficient(GradedPoly::Mono(0, 0));
}

}  // namespace gradedq
