#pragma once

// Polyvector fields Λ^k Der(A) on a polynomial algebra, wedge product and
// the Schouten-Nijenhuis bracket.
//
// Sign conventions: [X, f] = X(f), [X, Y] = Lie bracket, graded Leibniz
// extension with Koszul signs. Internally a degree-k polyvector is a
// "superfunction" linear in odd generators ξ_i = ∂_i, and
//   [P,Q] = Σ_i (∂P/∂ξ_i)∧(∂Q/∂x_i) - (-1)^{(p-1)(q-1)} Σ_i (∂Q/∂ξ_i)∧(∂P/∂x_i).

#include <hopfdual/grading.hpp>
#include <hopfdual/poly.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hopfdual {

class Polyvector {
 public:
  Polyvector() = default;
  Polyvector(VarList vars, int degree)
      : vars_(std::move(vars)), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative polyvector degree");
  }

  static Polyvector from_function(const Poly& f) {
    Polyvector p(f.vars(), 0);
    if (!f.is_zero()) p.components_[MultiIndex{}] = f;
    return p;
  }

  const VarList& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_->size()); }
  int degree() const { return degree_; }
  bool is_zero() const { return components_.empty(); }
  const std::map<MultiIndex, Poly>& components() const { return components_; }

  Poly component(const MultiIndex& mi) const {
    auto it = components_.find(mi);
    return it == components_.end() ? Poly::zero(vars_) : it->second;
  }

  void add_component(const MultiIndex& mi, const Poly& c) {
    if (static_cast<int>(mi.size()) != degree_)
      throw std::invalid_argument("multi-index size != polyvector degree");
    for (size_t i = 0; i + 1 < mi.size(); ++i)
      if (mi[i] >= mi[i + 1])
        throw std::invalid_argument("multi-index not strictly increasing");
    if (c.is_zero()) return;
    auto it = components_.find(mi);
    if (it == components_.end()) {
      components_.emplace(mi, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) components_.erase(it);
    }
  }

  Polyvector& operator+=(const Polyvector& o) {
    require_same_shape(o);
    for (const auto& [mi, c] : o.components_) add_component(mi, c);
    return *this;
  }

  friend Polyvector operator+(Polyvector a, const Polyvector& b) {
    return a += b;
  }

  friend Polyvector operator-(const Polyvector& a) {
    Polyvector r(a.vars_, a.degree_);
    for (const auto& [mi, c] : a.components_) r.components_[mi] = -c;
    return r;
  }

  friend Polyvector operator-(Polyvector a, const Polyvector& b) {
    return a += -b;
  }

  friend bool operator==(const Polyvector& a, const Polyvector& b) {
    return a.degree_ == b.degree_ && a.components_ == b.components_;
  }

  // Odd (left) derivative with respect to ξ_i.
  Polyvector xi_partial(int i) const {
    Polyvector r(vars_, degree_ > 0 ? degree_ - 1 : 0);
    if (degree_ == 0) return r;
    for (const auto& [mi, c] : components_) {
      for (size_t pos = 0; pos < mi.size(); ++pos) {
        if (mi[pos] != i) continue;
        MultiIndex rest;
        rest.reserve(mi.size() - 1);
        for (size_t q = 0; q < mi.size(); ++q)
          if (q != pos) rest.push_back(mi[q]);
        r.add_component(rest, (pos % 2 == 0) ? c : -c);
        break;
      }
    }
    return r;
  }

  Polyvector x_partial(int i) const {
    Polyvector r(vars_, degree_);
    for (const auto& [mi, c] : components_) r.add_component(mi, c.partial(i));
    return r;
  }

  friend Polyvector wedge(const Polyvector& a, const Polyvector& b) {
    a.require_same_vars(b);
    Polyvector r(a.vars_, a.degree_ + b.degree_);
    for (const auto& [mi, c] : a.components_) {
      for (const auto& [mj, d] : b.components_) {
        MultiIndex merged;
        int sign = merge_sign(mi, mj, merged);
        if (sign == 0) continue;
        r.add_component(merged, sign > 0 ? c * d : -(c * d));
      }
    }
    return r;
  }

  // Degree-1 polyvectors act on functions as derivations.
  Poly apply(const Poly& f) const {
    if (degree_ != 1) throw std::logic_error("apply: not a vector field");
    Poly r = Poly::zero(vars_);
    for (const auto& [mi, c] : components_) r += c * f.partial(mi[0]);
    return r;
  }

  // Sign of sorting the concatenation of two increasing multi-indices;
  // 0 when they overlap.
  static int merge_sign(const MultiIndex& a, const MultiIndex& b,
                        MultiIndex& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return 0;
      if (a[i] < b[j]) {
        out.push_back(a[i++]);
      } else {
        // b[j] hops over the remaining entries of a
        if ((a.size() - i) % 2 == 1) sign = -sign;
        out.push_back(b[j++]);
      }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return sign;
  }

 private:
  void require_same_vars(const Polyvector& o) const {
    if (!(vars_ == o.vars_ || *vars_ == *o.vars_))
      throw std::invalid_argument("polyvector variable mismatch");
  }
  void require_same_shape(const Polyvector& o) const {
    require_same_vars(o);
    if (degree_ != o.degree_)
      throw std::invalid_argument("polyvector degree mismatch");
  }

  VarList vars_;
  int degree_ = 0;
  std::map<MultiIndex, Poly> components_;
};

using VectorField = Polyvector;  // degree 1

inline VectorField basis_field(VarList vars, int i, const Poly& coeff) {
  VectorField v(std::move(vars), 1);
  v.add_component({i}, coeff);
  return v;
}

inline Polyvector schouten_bracket(const Polyvector& p, const Polyvector& q) {
  if (!(p.vars() == q.vars() || *p.vars() == *q.vars()))
    throw std::invalid_argument("schouten_bracket: variable mismatch");
  const int deg = p.degree() + q.degree() - 1;
  Polyvector r(p.vars(), deg < 0 ? 0 : deg);
  if (p.is_zero() || q.is_zero()) return r;
  const int m = p.nvars();
  const bool flip = ((p.degree() - 1) * (q.degree() - 1)) % 2 != 0;
  for (int i = 0; i < m; ++i) {
    Polyvector first = wedge(p.xi_partial(i), q.x_partial(i));
    if (!first.is_zero()) r += first;
    Polyvector second = wedge(q.xi_partial(i), p.x_partial(i));
    if (!second.is_zero()) r += flip ? second : -second;
  }
  return r;
}

}  // namespace hopfdual
