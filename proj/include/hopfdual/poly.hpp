#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// A Poly is a map from exponent vectors to nonzero coefficients; the zero
// polynomial has an empty term map. Two polynomials over the same variable
// list are equal iff their maps are equal, so operator== is structural.

#include <hopfdual/rational.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfdual {

using ExpVec = std::vector<int>;

using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline VarList make_vars(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return make_vars(std::move(v));
}

class Poly {
 public:
  Poly() : vars_(make_vars(std::vector<std::string>{})) {}
  explicit Poly(VarList vars) : vars_(std::move(vars)) {}

  static Poly zero(VarList vars) { return Poly(std::move(vars)); }

  static Poly constant(VarList vars, Rational c) {
    Poly p(std::move(vars));
    if (!hopfdual::is_zero(c)) p.terms_[ExpVec(p.nvars(), 0)] = std::move(c);
    return p;
  }

  static Poly variable(VarList vars, int index, Rational c = 1) {
    Poly p(vars);
    if (index < 0 || index >= p.nvars())
      throw std::out_of_range("variable index out of range");
    if (!hopfdual::is_zero(c)) {
      ExpVec e(p.nvars(), 0);
      e[index] = 1;
      p.terms_[std::move(e)] = std::move(c);
    }
    return p;
  }

  static Poly monomial(VarList vars, ExpVec exps, Rational c) {
    Poly p(vars);
    if (static_cast<int>(exps.size()) != p.nvars())
      throw std::invalid_argument("exponent vector length mismatch");
    for (int e : exps)
      if (e < 0) throw std::invalid_argument("negative exponent");
    if (!hopfdual::is_zero(c)) p.terms_[std::move(exps)] = std::move(c);
    return p;
  }

  const VarList& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_->size()); }
  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool same_vars(const Poly& o) const {
    return vars_ == o.vars_ || *vars_ == *o.vars_;
  }

  void add_term(const ExpVec& e, const Rational& c) {
    if (hopfdual::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (hopfdual::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator-(const Poly& a) {
    Poly r(a.vars_);
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_vars(b);
    Poly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        ExpVec e(ea.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Rational& c, const Poly& a) {
    Poly r(a.vars_);
    if (hopfdual::is_zero(c)) return r;
    for (const auto& [e, k] : a.terms_) r.terms_[e] = c * k;
    return r;
  }

  friend Poly operator*(const Poly& a, const Rational& c) { return c * a; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.same_vars(b) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) {
    return a.terms_ < b.terms_;
  }

  Poly pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative exponent");
    Poly r = constant(vars_, 1);
    Poly base = *this;
    while (n > 0) {
      if (n & 1) r *= base;
      base = n > 1 ? base * base : base;
      n >>= 1;
    }
    return r;
  }

  // Formal partial derivative with respect to variable i.
  Poly partial(int i) const {
    if (i < 0 || i >= nvars()) throw std::out_of_range("partial: bad index");
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      ExpVec d = e;
      d[i] -= 1;
      r.add_term(d, c * Rational(e[i]));
    }
    return r;
  }

  // Total degree of the monomial map; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  // True iff every term has total degree d (vacuously true when zero).
  bool is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      if (s != d) return false;
    }
    return true;
  }

  // The single total degree shared by all terms, or -1 if zero, or throws
  // if mixed.
  int homogeneous_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      if (d == -1)
        d = s;
      else if (s != d)
        throw std::invalid_argument("polynomial is not homogeneous");
    }
    return d;
  }

  Rational coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(ExpVec(nvars(), 0)); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Print highest exponent vector first for conventional reading order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational a = abs(c);
      if (first) {
        if (sgn(c) < 0) out << "-";
        first = false;
      } else {
        out << (sgn(c) < 0 ? " - " : " + ");
      }
      bool has_var = false;
      for (int x : e)
        if (x != 0) has_var = true;
      if (!has_var || a != 1) {
        out << a.get_str();
        if (has_var) out << "*";
      }
      bool first_var = true;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first_var) out << "*";
        first_var = false;
        out << (*vars_)[i];
        if (e[i] > 1) out << "^" << e[i];
      }
    }
    return out.str();
  }

 private:
  void check_vars(const Poly& o) const {
    if (!same_vars(o))
      throw std::invalid_argument("mismatched variable lists");
  }

  VarList vars_;
  std::map<ExpVec, Rational> terms_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, VarList vars)
      : text_(text), vars_(std::move(vars)) {}

  Poly parse() {
    Poly p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos_) + ": " + what);
  }

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

  Poly expression() {
    Poly p = eat('-') ? -term() : (eat('+'), term());
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        p *= factor();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                 c == '_') {
        // implicit multiplication: "2x", "x y", "3(x+1)"
        p *= factor();
      } else {
        return p;
      }
    }
  }

  Poly factor() {
    Poly p = atom();
    if (eat('^')) {
      int e = integer_literal();
      if (e < 0) fail("negative exponent");
      p = p.pow(e);
    }
    return p;
  }

  int integer_literal() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(neg ? -v : v);
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expression();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string num(text_.substr(start, pos_ - start));
      // rational literal p/q, but only when not followed by another factor
      // pattern -- '/' only ever introduces a denominator here.
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
        num += "/" + std::string(text_.substr(dstart, pos_ - dstart));
      }
      return Poly::constant(vars_, parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == name)
          return Poly::variable(vars_, static_cast<int>(i));
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  VarList vars_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, VarList vars) {
  return detail::PolyParser(text, std::move(vars)).parse();
}

}  // namespace hopfdual
