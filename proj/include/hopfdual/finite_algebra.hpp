#pragma once

// Finite-dimensional associative unital algebras over Q by structure
// constants, and the full Hopf algebroid H = A ⊗ A^op built on top of one.
//
// Elements are coordinate vectors over the chosen basis. H has basis
// e_i ⊗ e_j at index i*d + j; multiplication is factorwise with the second
// factor in the opposite algebra:
//   (a⊗b)(a'⊗b') = aa' ⊗ b'b.
// Structure maps: s^ℓ(a)=a⊗1, t^ℓ(b)=1⊗b, ε(a⊗b)=ab, Δ_ℓ(a⊗b)=(a⊗1)⊗(1⊗b),
// s^r(a)=1⊗a, t^r(b)=b⊗1, ∂(a⊗b)=ba, Δ_r(a⊗b)=(a⊗1)⊗(1⊗b). The right
// coproduct in this form (rather than with the factors exchanged) is the
// one that satisfies the right-counit laws and reproduces the Hopf-Galois
// inverses; the antipode it induces is the flip a⊗b ↦ b⊗a, which the
// checks derive by linear solve instead of assuming.

#include <hopfdual/linalg.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfdual {

class FiniteAlgebra {
 public:
  // mult[i][j][k]: coefficient of e_k in e_i e_j.
  FiniteAlgebra(std::vector<std::string> basis,
                std::vector<std::vector<Vec>> mult, Vec unit)
      : names_(std::move(basis)), mult_(std::move(mult)), unit_(std::move(unit)) {
    const int d = dim();
    if (static_cast<int>(mult_.size()) != d ||
        static_cast<int>(unit_.size()) != d)
      throw std::invalid_argument("structure constant shape mismatch");
    for (const auto& row : mult_) {
      if (static_cast<int>(row.size()) != d)
        throw std::invalid_argument("structure constant shape mismatch");
      for (const auto& v : row)
        if (static_cast<int>(v.size()) != d)
          throw std::invalid_argument("structure constant shape mismatch");
    }
    validate();
  }

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const Vec& unit() const { return unit_; }

  Vec basis_vec(int i) const {
    Vec v(dim(), Rational(0));
    v[i] = 1;
    return v;
  }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec r(dim(), Rational(0));
    for (int i = 0; i < dim(); ++i) {
      if (is_zero(a[i])) continue;
      for (int j = 0; j < dim(); ++j) {
        if (is_zero(b[j])) continue;
        Rational f = a[i] * b[j];
        axpy(r, f, mult_[i][j]);
      }
    }
    return r;
  }

 private:
  void validate() const {
    const int d = dim();
    for (int i = 0; i < d; ++i) {
      Vec e = basis_vec(i);
      if (mul(unit_, e) != e || mul(e, unit_) != e)
        throw std::invalid_argument("unit axiom fails on basis element " +
                                    names_[i]);
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          if (mul(mul(basis_vec(i), basis_vec(j)), basis_vec(k)) !=
              mul(basis_vec(i), mul(basis_vec(j), basis_vec(k))))
            throw std::invalid_argument(
                "associativity fails on basis triple (" + names_[i] + "," +
                names_[j] + "," + names_[k] + ")");
  }

  std::vector<std::string> names_;
  std::vector<std::vector<Vec>> mult_;
  Vec unit_;
};

// Q[x]/(x^2): basis {1, x}.
inline FiniteAlgebra dual_numbers() {
  std::vector<std::vector<Vec>> m(2, std::vector<Vec>(2, Vec(2, Rational(0))));
  m[0][0][0] = 1;
  m[0][1][1] = 1;
  m[1][0][1] = 1;
  // x*x = 0
  return FiniteAlgebra({"1", "x"}, std::move(m), {Rational(1), Rational(0)});
}

// Upper-triangular 2x2 matrices: basis {E11, E12, E22}; noncommutative.
inline FiniteAlgebra upper_triangular2() {
  const int d = 3;
  std::vector<std::vector<Vec>> m(d, std::vector<Vec>(d, Vec(d, Rational(0))));
  auto idx = [](int r, int c) { return r == 0 ? (c == 0 ? 0 : 1) : 2; };
  // E_{rc} E_{c'd} = delta_{c c'} E_{rd}
  int pairs[3][2] = {{0, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      auto [r1, c1] = pairs[a];
      auto [r2, c2] = pairs[b];
      if (c1 == r2) m[a][b][idx(r1, c2)] = 1;
    }
  return FiniteAlgebra({"E11", "E12", "E22"}, std::move(m),
                       {Rational(1), Rational(0), Rational(1)});
}

// The full Hopf algebroid A^e = A ⊗ A^op on a finite-dimensional A.
class AeHopf {
 public:
  explicit AeHopf(FiniteAlgebra a) : a_(std::move(a)) {}

  const FiniteAlgebra& base() const { return a_; }
  int adim() const { return a_.dim(); }
  int dim() const { return adim() * adim(); }
  int pair_dim() const { return dim() * dim(); }

  int idx(int i, int j) const { return i * adim() + j; }

  Vec unit_h() const {
    Vec v(dim(), Rational(0));
    // position of 1⊗1
    Vec u = a_.unit();
    for (int i = 0; i < adim(); ++i)
      for (int j = 0; j < adim(); ++j) v[idx(i, j)] = u[i] * u[j];
    return v;
  }

  Vec basis_h(int k) const {
    Vec v(dim(), Rational(0));
    v[k] = 1;
    return v;
  }

  // (a⊗b)(a'⊗b') = aa' ⊗ b'b
  Vec mul(const Vec& u, const Vec& v) const {
    const int d = adim();
    Vec r(dim(), Rational(0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (is_zero(u[idx(i, j)])) continue;
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            if (is_zero(v[idx(k, l)])) continue;
            Vec first = a_.mul(a_.basis_vec(i), a_.basis_vec(k));
            Vec second = a_.mul(a_.basis_vec(l), a_.basis_vec(j));
            Rational f = u[idx(i, j)] * v[idx(k, l)];
            for (int p = 0; p < d; ++p)
              for (int q = 0; q < d; ++q)
                r[idx(p, q)] += f * first[p] * second[q];
          }
      }
    return r;
  }

  Vec s_l(const Vec& a) const { return embed(a, a_.unit()); }
  Vec t_l(const Vec& b) const { return embed(a_.unit(), b); }
  Vec s_r(const Vec& a) const { return embed(a_.unit(), a); }
  Vec t_r(const Vec& b) const { return embed(b, a_.unit()); }

  Vec eps(const Vec& u) const {  // a⊗b -> ab
    Vec r(adim(), Rational(0));
    for (int i = 0; i < adim(); ++i)
      for (int j = 0; j < adim(); ++j) {
        if (is_zero(u[idx(i, j)])) continue;
        Vec p = a_.mul(a_.basis_vec(i), a_.basis_vec(j));
        axpy(r, u[idx(i, j)], p);
      }
    return r;
  }

  Vec del(const Vec& u) const {  // a⊗b -> ba
    Vec r(adim(), Rational(0));
    for (int i = 0; i < adim(); ++i)
      for (int j = 0; j < adim(); ++j) {
        if (is_zero(u[idx(i, j)])) continue;
        Vec p = a_.mul(a_.basis_vec(j), a_.basis_vec(i));
        axpy(r, u[idx(i, j)], p);
      }
    return r;
  }

  // --- tensor square H⊗H (ambient, before quotient relations) ---

  int pair_idx(int u, int v) const { return u * dim() + v; }

  Vec tensor(const Vec& u, const Vec& v) const {
    Vec r(pair_dim(), Rational(0));
    for (int p = 0; p < dim(); ++p) {
      if (is_zero(u[p])) continue;
      for (int q = 0; q < dim(); ++q)
        if (!is_zero(v[q])) r[pair_idx(p, q)] = u[p] * v[q];
    }
    return r;
  }

  // Both coproducts send e_i⊗e_j to (e_i⊗1) ⊗ (1⊗e_j); they differ in the
  // codomain tensor relations only.
  Vec delta(const Vec& u) const {
    Vec r(pair_dim(), Rational(0));
    for (int i = 0; i < adim(); ++i)
      for (int j = 0; j < adim(); ++j) {
        if (is_zero(u[idx(i, j)])) continue;
        Vec left = s_l(a_.basis_vec(i));
        Vec right = t_l(a_.basis_vec(j));
        Vec t = tensor(left, right);
        axpy(r, u[idx(i, j)], t);
      }
    return r;
  }

  Vec delta_l(const Vec& u) const { return delta(u); }
  Vec delta_r(const Vec& u) const { return delta(u); }

  // Relation subspaces identifying the relevant tensor quotients.
  // Codomain of α_ℓ / Δ_ℓ:  t^ℓ(c)u ⊗ v  ~  u ⊗ s^ℓ(c)v.
  Subspace relations_ract_lact() const {
    return relation_span([&](const Vec& c, const Vec& u, const Vec& v) {
      return std::make_pair(tensor(mul(t_l(c), u), v), tensor(u, mul(s_l(c), v)));
    });
  }

  // Domain of α_ℓ (translation-map side):  u t^ℓ(c) ⊗ v  ~  u ⊗ t^ℓ(c)v.
  Subspace relations_aop() const {
    return relation_span([&](const Vec& c, const Vec& u, const Vec& v) {
      return std::make_pair(tensor(mul(u, t_l(c)), v), tensor(u, mul(t_l(c), v)));
    });
  }

  // Codomain of Δ_r:  u s^r(c) ⊗ v  ~  u ⊗ v t^r(c).
  Subspace relations_right() const {
    return relation_span([&](const Vec& c, const Vec& u, const Vec& v) {
      return std::make_pair(tensor(mul(u, s_r(c)), v), tensor(u, mul(v, t_r(c))));
    });
  }

  // Domain of α_r:  u s^ℓ(c) ⊗ v  ~  u ⊗ s^ℓ(c)v.
  Subspace relations_bract_lact() const {
    return relation_span([&](const Vec& c, const Vec& u, const Vec& v) {
      return std::make_pair(tensor(mul(u, s_l(c)), v), tensor(u, mul(s_l(c), v)));
    });
  }

  // --- antipode -----------------------------------------------------------

  Vec flip(const Vec& u) const {
    Vec r(dim(), Rational(0));
    for (int i = 0; i < adim(); ++i)
      for (int j = 0; j < adim(); ++j) r[idx(j, i)] = u[idx(i, j)];
    return r;
  }

  // Solve for a linear S from the translation-map equation
  //   α_ℓ( h^{(1)} ⊗ S(h^{(2)}) ) = h ⊗ 1   (mod codomain relations)
  // together with the module-map laws S(s^ℓ(a)h) = S(h)t^ℓ(a),
  // S(t^ℓ(a)h) = S(h)s^ℓ(a) and S(1) = 1. Returns the matrix (columns =
  // images of basis elements) and the dimension of the solution space of
  // the associated homogeneous system (0 means S is unique).
  struct AntipodeSolution {
    DenseMatrix s;  // dim x dim, column k = S(e_k)
    int freedom = -1;
    bool found = false;
  };

  AntipodeSolution solve_antipode() const {
    const int n = dim();
    const Subspace target = relations_ract_lact();
    // unknowns: S[r][k] with flat index r*n + k
    DenseMatrix rows;
    Vec rhs_all;
    auto add_constraint = [&](const Vec& coeffs, const Rational& rhs) {
      rows.push_back(coeffs);
      rhs_all.push_back(rhs);
    };
    // defining constraints per basis element h:
    // Σ_{p,q} Δ_r(h)[p,q] · reduce(α_ℓ(e_p ⊗ S(e_q))) = reduce(h⊗1).
    std::vector<std::vector<Vec>> red_alpha(n, std::vector<Vec>(n));
    for (int p = 0; p < n; ++p)
      for (int r = 0; r < n; ++r)
        red_alpha[p][r] = target.reduce(alpha_l(tensor(basis_h(p), basis_h(r))));
    for (int h = 0; h < n; ++h) {
      Vec dr = delta_r(basis_h(h));
      Vec want = target.reduce(tensor(basis_h(h), unit_h()));
      for (int comp = 0; comp < pair_dim(); ++comp) {
        Vec coeffs(n * n, Rational(0));
        bool nonzero = false;
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Rational& d = dr[pair_idx(p, q)];
            if (is_zero(d)) continue;
            for (int r = 0; r < n; ++r) {
              if (is_zero(red_alpha[p][r][comp])) continue;
              coeffs[r * n + q] += d * red_alpha[p][r][comp];
              nonzero = true;
            }
          }
        if (nonzero || !is_zero(want[comp])) add_constraint(coeffs, want[comp]);
      }
    }
    // module-map laws on basis pairs
    for (int c = 0; c < adim(); ++c) {
      for (int k = 0; k < n; ++k) {
        // S(s^ℓ(e_c) e_k) = S(e_k) t^ℓ(e_c)
        add_linear_law(rows, rhs_all, mul(s_l(a_.basis_vec(c)), basis_h(k)), k,
                       t_l(a_.basis_vec(c)), /*right_mult=*/true);
        // S(t^ℓ(e_c) e_k) = S(e_k) s^ℓ(e_c)
        add_linear_law(rows, rhs_all, mul(t_l(a_.basis_vec(c)), basis_h(k)), k,
                       s_l(a_.basis_vec(c)), /*right_mult=*/true);
      }
    }
    // S(1) = 1
    {
      Vec one = unit_h();
      for (int comp = 0; comp < n; ++comp) {
        Vec coeffs(n * n, Rational(0));
        for (int k = 0; k < n; ++k) coeffs[comp * n + k] = one[k];
        add_constraint(coeffs, one[comp]);
      }
    }
    AntipodeSolution sol;
    auto x = solve_linear(rows, rhs_all);
    if (!x) return sol;
    sol.found = true;
    sol.freedom = nullity(rows);
    sol.s.assign(n, Vec(n, Rational(0)));
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) sol.s[r][k] = (*x)[r * n + k];
    return sol;
  }

  Vec apply_matrix(const DenseMatrix& s, const Vec& u) const {
    const int n = dim();
    Vec r(n, Rational(0));
    for (int k = 0; k < n; ++k) {
      if (is_zero(u[k])) continue;
      for (int row = 0; row < n; ++row) r[row] += s[row][k] * u[k];
    }
    return r;
  }

  // Hopf-Galois maps on representatives.
  Vec alpha_l(const Vec& uv) const {  // u⊗v -> u_(1) ⊗ u_(2) v
    Vec r(pair_dim(), Rational(0));
    for (int u = 0; u < dim(); ++u)
      for (int v = 0; v < dim(); ++v) {
        if (is_zero(uv[pair_idx(u, v)])) continue;
        Vec du = delta(basis_h(u));
        for (int p = 0; p < dim(); ++p)
          for (int q = 0; q < dim(); ++q) {
            if (is_zero(du[pair_idx(p, q)])) continue;
            Vec prod = mul(basis_h(q), basis_h(v));
            Rational f = uv[pair_idx(u, v)] * du[pair_idx(p, q)];
            for (int w = 0; w < dim(); ++w)
              r[pair_idx(p, w)] += f * prod[w];
          }
      }
    return r;
  }

  Vec alpha_r(const Vec& uv) const {  // u⊗v -> u_(1) v ⊗ u_(2)
    Vec r(pair_dim(), Rational(0));
    for (int u = 0; u < dim(); ++u)
      for (int v = 0; v < dim(); ++v) {
        if (is_zero(uv[pair_idx(u, v)])) continue;
        Vec du = delta(basis_h(u));
        for (int p = 0; p < dim(); ++p)
          for (int q = 0; q < dim(); ++q) {
            if (is_zero(du[pair_idx(p, q)])) continue;
            Vec prod = mul(basis_h(p), basis_h(v));
            Rational f = uv[pair_idx(u, v)] * du[pair_idx(p, q)];
            for (int w = 0; w < dim(); ++w)
              r[pair_idx(w, q)] += f * prod[w];
          }
      }
    return r;
  }

  // Translation map via the right coproduct and an antipode matrix:
  // h_+ ⊗ h_- = h^(1) ⊗ S(h^(2)).
  Vec translation(const DenseMatrix& s, const Vec& h) const {
    Vec dr = delta_r(h);
    Vec r(pair_dim(), Rational(0));
    for (int p = 0; p < dim(); ++p)
      for (int q = 0; q < dim(); ++q) {
        if (is_zero(dr[pair_idx(p, q)])) continue;
        Vec sq = apply_matrix(s, basis_h(q));
        for (int w = 0; w < dim(); ++w)
          r[pair_idx(p, w)] += dr[pair_idx(p, q)] * sq[w];
      }
    return r;
  }

  // h_[+] ⊗ h_[-] = h^(2) ⊗ S^{-1}(h^(1)); sinv as matrix.
  Vec translation_right(const DenseMatrix& sinv, const Vec& h) const {
    Vec dr = delta_r(h);
    Vec r(pair_dim(), Rational(0));
    for (int p = 0; p < dim(); ++p)
      for (int q = 0; q < dim(); ++q) {
        if (is_zero(dr[pair_idx(p, q)])) continue;
        Vec sp = apply_matrix(sinv, basis_h(p));
        for (int w = 0; w < dim(); ++w)
          r[pair_idx(q, w)] += dr[pair_idx(p, q)] * sp[w];
      }
    return r;
  }

 private:
  Vec embed(const Vec& first, const Vec& second) const {
    Vec v(dim(), Rational(0));
    for (int i = 0; i < adim(); ++i)
      for (int j = 0; j < adim(); ++j) v[idx(i, j)] = first[i] * second[j];
    return v;
  }

  template <typename F>
  Subspace relation_span(F&& make) const {
    DenseMatrix rows;
    for (int c = 0; c < adim(); ++c) {
      Vec cv = a_.basis_vec(c);
      for (int u = 0; u < dim(); ++u)
        for (int v = 0; v < dim(); ++v) {
          auto [lhs, rhs] = make(cv, basis_h(u), basis_h(v));
          Vec row(pair_dim());
          for (int k = 0; k < pair_dim(); ++k) row[k] = lhs[k] - rhs[k];
          if (!is_zero_vec(row)) rows.push_back(std::move(row));
        }
    }
    return Subspace(pair_dim(), std::move(rows));
  }

  // constraint rows for S(lhs_elem) = S(e_k) * factor (right_mult) on all
  // components
  void add_linear_law(DenseMatrix& rows, Vec& rhs_all, const Vec& lhs_elem,
                      int k, const Vec& factor, bool right_mult) const {
    const int n = dim();
    // S(lhs_elem) = Σ_m lhs_elem[m] S(e_m); S(e_k)*factor = Σ_r S[r][k] e_r*factor
    for (int comp = 0; comp < n; ++comp) {
      Vec coeffs(n * n, Rational(0));
      for (int m = 0; m < n; ++m)
        if (!is_zero(lhs_elem[m])) coeffs[comp * n + m] += lhs_elem[m];
      for (int r = 0; r < n; ++r) {
        Vec prod = right_mult ? mul(basis_h(r), factor) : mul(factor, basis_h(r));
        if (!is_zero(prod[comp])) coeffs[r * n + k] -= prod[comp];
      }
      bool nonzero = false;
      for (const auto& x : coeffs)
        if (!is_zero(x)) { nonzero = true; break; }
      if (nonzero) {
        rows.push_back(std::move(coeffs));
        rhs_all.push_back(Rational(0));
      }
    }
  }

  FiniteAlgebra a_;
};

}  // namespace hopfdual
