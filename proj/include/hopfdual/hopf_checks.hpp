#pragma once

// Mechanical verification of the Hopf-algebroid structure identities on
// the finite model H = A ⊗ A^op: bialgebroid axioms, translation-map
// identities, module-structure formulas, antipode properties and the
// dualizing-module statements. Everything is checked exhaustively on
// basis elements/pairs; failures are reported with witnesses, not thrown.
//
// Tensor quotients are evaluated through merge projections: for instance
// H ⊗_A H → A⊗A⊗A, (a⊗b)⊗(c⊗d) ↦ a ⊗ bc ⊗ d kills exactly the relation
// span t^ℓ(x)u⊗v - u⊗s^ℓ(x)v, so equality after projection is equality
// in the quotient. The test suite cross-checks this faithfulness against
// the explicitly computed relation subspaces.

#include <hopfdual/check_report.hpp>
#include <hopfdual/finite_algebra.hpp>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hopfdual {

namespace detail {

// Shared context: the antipode and translation maps are computed once.
class AeVerifier {
 public:
  explicit AeVerifier(const AeHopf& h) : h_(h), d_(h.adim()), n_(h.dim()) {
    auto sol = h_.solve_antipode();
    antipode_found_ = sol.found;
    antipode_freedom_ = sol.freedom;
    s_ = sol.found ? sol.s : identity_matrix();
    tau_.resize(n_);
    for (int k = 0; k < n_; ++k) tau_[k] = h_.translation(s_, h_.basis_h(k));
  }

  const AeHopf& h() const { return h_; }
  const DenseMatrix& antipode() const { return s_; }
  bool antipode_found() const { return antipode_found_; }
  int antipode_freedom() const { return antipode_freedom_; }
  const Vec& tau(int k) const { return tau_[k]; }

  Vec tau_of(const Vec& u) const {
    Vec r(h_.pair_dim(), Rational(0));
    for (int k = 0; k < n_; ++k)
      if (!is_zero(u[k])) axpy(r, u[k], tau_[k]);
    return r;
  }

  // --- merge projections -------------------------------------------------

  int a3(int i, int j, int k) const { return (i * d_ + j) * d_ + k; }
  int a4(int i, int j, int k, int l) const {
    return ((i * d_ + j) * d_ + k) * d_ + l;
  }

  // H⊗_A H (t/s relation): (a⊗b)⊗(c⊗d) -> a ⊗ bc ⊗ d
  Vec proj_pair_A(const Vec& pv) const {
    return project_pair(pv, [&](int i, int j, int k, int l, Vec& out,
                                const Rational& c) {
      Vec m = amul(j, k);
      for (int p = 0; p < d_; ++p)
        if (!is_zero(m[p])) out[a3(i, p, l)] += c * m[p];
    });
  }

  // H⊗_{A^op} H (translation-map side): -> a ⊗ c ⊗ db
  Vec proj_pair_aop(const Vec& pv) const {
    return project_pair(pv, [&](int i, int j, int k, int l, Vec& out,
                                const Rational& c) {
      Vec m = amul(l, j);
      for (int p = 0; p < d_; ++p)
        if (!is_zero(m[p])) out[a3(i, k, p)] += c * m[p];
    });
  }

  // Δ_r codomain: -> a ⊗ cb ⊗ d
  Vec proj_pair_right(const Vec& pv) const {
    return project_pair(pv, [&](int i, int j, int k, int l, Vec& out,
                                const Rational& c) {
      Vec m = amul(k, j);
      for (int p = 0; p < d_; ++p)
        if (!is_zero(m[p])) out[a3(i, p, l)] += c * m[p];
    });
  }

  // α_r domain: -> ac ⊗ b ⊗ d
  Vec proj_pair_bract(const Vec& pv) const {
    return project_pair(pv, [&](int i, int j, int k, int l, Vec& out,
                                const Rational& c) {
      Vec m = amul(i, k);
      for (int p = 0; p < d_; ++p)
        if (!is_zero(m[p])) out[a3(p, j, l)] += c * m[p];
    });
  }

  // triples u⊗v⊗w flattened at index (u*n + v)*n + w
  int t_idx(int u, int v, int w) const { return (u * n_ + v) * n_ + w; }

  // A-junctions at both slots: -> a ⊗ bc ⊗ de ⊗ f
  Vec proj_triple_coassoc(const Vec& tv) const {
    return project_triple(tv, [&](int i, int j, int k, int l, int m, int nn,
                                  Vec& out, const Rational& c) {
      Vec bc = amul(j, k), de = amul(l, m);
      scatter4(out, c, unit_slot(i), bc, de, unit_slot(nn));
    });
  }

  // A-junction then A^op-junction: -> a ⊗ bc ⊗ e ⊗ fd
  Vec proj_triple_plus_split(const Vec& tv) const {
    return project_triple(tv, [&](int i, int j, int k, int l, int m, int nn,
                                  Vec& out, const Rational& c) {
      Vec bc = amul(j, k), fd = amul(nn, l);
      scatter4(out, c, unit_slot(i), bc, unit_slot(m), fd);
    });
  }

  // A^op-junction (outer, acting on the far slot) then A-junction:
  // -> a ⊗ c ⊗ de ⊗ fb
  Vec proj_triple_minus_split(const Vec& tv) const {
    return project_triple(tv, [&](int i, int j, int k, int l, int m, int nn,
                                  Vec& out, const Rational& c) {
      Vec de = amul(l, m), fb = amul(nn, j);
      scatter4(out, c, unit_slot(i), unit_slot(k), de, fb);
    });
  }

  Vec tensor3(const Vec& u, const Vec& v, const Vec& w) const {
    Vec r(n_ * n_ * n_, Rational(0));
    for (int a = 0; a < n_; ++a) {
      if (is_zero(u[a])) continue;
      for (int b = 0; b < n_; ++b) {
        if (is_zero(v[b])) continue;
        for (int c = 0; c < n_; ++c)
          if (!is_zero(w[c])) r[t_idx(a, b, c)] = u[a] * v[b] * w[c];
      }
    }
    return r;
  }

  // expand the left (resp. right) slot of a pair vector with Δ
  Vec delta_first(const Vec& pv) const {
    Vec r(n_ * n_ * n_, Rational(0));
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        const Rational& c = pv[h_.pair_idx(u, v)];
        if (is_zero(c)) continue;
        Vec du = h_.delta(h_.basis_h(u));
        for (int p = 0; p < n_; ++p)
          for (int q = 0; q < n_; ++q)
            if (!is_zero(du[h_.pair_idx(p, q)]))
              r[t_idx(p, q, v)] += c * du[h_.pair_idx(p, q)];
      }
    return r;
  }

  Vec delta_second(const Vec& pv) const {
    Vec r(n_ * n_ * n_, Rational(0));
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        const Rational& c = pv[h_.pair_idx(u, v)];
        if (is_zero(c)) continue;
        Vec dv = h_.delta(h_.basis_h(v));
        for (int p = 0; p < n_; ++p)
          for (int q = 0; q < n_; ++q)
            if (!is_zero(dv[h_.pair_idx(p, q)]))
              r[t_idx(u, p, q)] += c * dv[h_.pair_idx(p, q)];
      }
    return r;
  }

  // multiply the last two slots of a triple: u⊗v⊗w -> u⊗(vw)
  Vec mul_last_two(const Vec& tv) const {
    Vec r(h_.pair_dim(), Rational(0));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) {
          const Rational& x = tv[t_idx(a, b, c)];
          if (is_zero(x)) continue;
          Vec p = h_.mul(h_.basis_h(b), h_.basis_h(c));
          for (int w = 0; w < n_; ++w) r[h_.pair_idx(a, w)] += x * p[w];
        }
    return r;
  }

  // factorwise product of two pair vectors
  Vec pair_mul(const Vec& x, const Vec& y) const {
    Vec r(h_.pair_dim(), Rational(0));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const Rational& cx = x[h_.pair_idx(a, b)];
        if (is_zero(cx)) continue;
        for (int c = 0; c < n_; ++c)
          for (int e = 0; e < n_; ++e) {
            const Rational& cy = y[h_.pair_idx(c, e)];
            if (is_zero(cy)) continue;
            Vec first = h_.mul(h_.basis_h(a), h_.basis_h(c));
            Vec second = h_.mul(h_.basis_h(b), h_.basis_h(e));
            Rational f = cx * cy;
            for (int p = 0; p < n_; ++p) {
              if (is_zero(first[p])) continue;
              for (int q = 0; q < n_; ++q)
                r[h_.pair_idx(p, q)] += f * first[p] * second[q];
            }
          }
      }
    return r;
  }

  // left/right multiply one slot of a pair vector by a fixed element
  enum class Slot { first, second };
  Vec slot_mul(const Vec& pv, Slot slot, const Vec& g, bool g_on_left) const {
    Vec r(h_.pair_dim(), Rational(0));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const Rational& c = pv[h_.pair_idx(a, b)];
        if (is_zero(c)) continue;
        Vec target = h_.basis_h(slot == Slot::first ? a : b);
        Vec p = g_on_left ? h_.mul(g, target) : h_.mul(target, g);
        for (int w = 0; w < n_; ++w) {
          int id = slot == Slot::first ? h_.pair_idx(w, b) : h_.pair_idx(a, w);
          r[id] += c * p[w];
        }
      }
    return r;
  }

  Vec amul(int i, int j) const {
    return h_.base().mul(h_.base().basis_vec(i), h_.base().basis_vec(j));
  }

 private:
  Vec unit_slot(int i) const {
    Vec v(d_, Rational(0));
    v[i] = 1;
    return v;
  }

  void scatter4(Vec& out, const Rational& c, const Vec& s0, const Vec& s1,
                const Vec& s2, const Vec& s3) const {
    for (int i = 0; i < d_; ++i) {
      if (is_zero(s0[i])) continue;
      for (int j = 0; j < d_; ++j) {
        if (is_zero(s1[j])) continue;
        for (int k = 0; k < d_; ++k) {
          if (is_zero(s2[k])) continue;
          for (int l = 0; l < d_; ++l)
            if (!is_zero(s3[l]))
              out[a4(i, j, k, l)] += c * s0[i] * s1[j] * s2[k] * s3[l];
        }
      }
    }
  }

  template <typename F>
  Vec project_pair(const Vec& pv, F&& f) const {
    Vec out(d_ * d_ * d_, Rational(0));
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        const Rational& c = pv[h_.pair_idx(u, v)];
        if (is_zero(c)) continue;
        f(u / d_, u % d_, v / d_, v % d_, out, c);
      }
    return out;
  }

  template <typename F>
  Vec project_triple(const Vec& tv, F&& f) const {
    Vec out(d_ * d_ * d_ * d_, Rational(0));
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        for (int w = 0; w < n_; ++w) {
          const Rational& c = tv[t_idx(u, v, w)];
          if (is_zero(c)) continue;
          f(u / d_, u % d_, v / d_, v % d_, w / d_, w % d_, out, c);
        }
    return out;
  }

  DenseMatrix identity_matrix() const {
    DenseMatrix m(n_, Vec(n_, Rational(0)));
    for (int i = 0; i < n_; ++i) m[i][i] = 1;
    return m;
  }

  const AeHopf& h_;
  int d_, n_;
  bool antipode_found_ = false;
  int antipode_freedom_ = -1;
  DenseMatrix s_;
  std::vector<Vec> tau_;
};

inline std::string pair_witness(int u, int v) {
  return "basis pair (" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace detail

// --- left bialgebroid axioms ---------------------------------------------

inline CheckReport check_left_bialgebroid_axioms(const AeHopf& H) {
  detail::AeVerifier V(H);
  CheckReport rep;
  rep.subject = "left-bialgebroid";
  const int n = H.dim();
  const int d = H.adim();

  bool ok = true;
  std::string w;
  for (int k = 0; k < n && ok; ++k) {
    Vec dl = H.delta(H.basis_h(k));
    if (V.proj_triple_coassoc(V.delta_first(dl)) !=
        V.proj_triple_coassoc(V.delta_second(dl))) {
      ok = false;
      w = "basis element " + std::to_string(k);
    }
  }
  rep.add("coassociativity", ok, w);

  ok = true;
  w.clear();
  for (int k = 0; k < n && ok; ++k) {
    Vec dl = H.delta(H.basis_h(k));
    Vec left(n, Rational(0)), right(n, Rational(0));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const Rational& c = dl[H.pair_idx(p, q)];
        if (is_zero(c)) continue;
        axpy(left, c, H.mul(H.s_l(H.eps(H.basis_h(p))), H.basis_h(q)));
        axpy(right, c, H.mul(H.t_l(H.eps(H.basis_h(q))), H.basis_h(p)));
      }
    if (left != H.basis_h(k) || right != H.basis_h(k)) {
      ok = false;
      w = "basis element " + std::to_string(k);
    }
  }
  rep.add("counit laws", ok, w);

  ok = true;
  w.clear();
  for (int k = 0; k < n && ok; ++k) {
    Vec dl = H.delta(H.basis_h(k));
    for (int c = 0; c < d && ok; ++c) {
      Vec lhs = V.slot_mul(dl, detail::AeVerifier::Slot::first,
                           H.t_l(H.base().basis_vec(c)), false);
      Vec rhs = V.slot_mul(dl, detail::AeVerifier::Slot::second,
                           H.s_l(H.base().basis_vec(c)), false);
      if (V.proj_pair_A(lhs) != V.proj_pair_A(rhs)) {
        ok = false;
        w = "basis element " + std::to_string(k);
      }
    }
  }
  rep.add("takeuchi image", ok, w);

  ok = true;
  w.clear();
  for (int u = 0; u < n && ok; ++u)
    for (int v = 0; v < n && ok; ++v) {
      Vec lhs = H.delta(H.mul(H.basis_h(u), H.basis_h(v)));
      Vec rhs = V.pair_mul(H.delta(H.basis_h(u)), H.delta(H.basis_h(v)));
      if (V.proj_pair_A(lhs) != V.proj_pair_A(rhs)) {
        ok = false;
        w = detail::pair_witness(u, v);
      }
    }
  if (ok && H.delta(H.unit_h()) != H.tensor(H.unit_h(), H.unit_h())) {
    ok = false;
    w = "unit";
  }
  rep.add("coproduct multiplicative", ok, w);

  ok = H.eps(H.unit_h()) == H.base().unit();
  rep.add("counit unital", ok, ok ? "" : "eps(1) != 1");

  ok = true;
  w.clear();
  for (int a = 0; a < d && ok; ++a)
    for (int b = 0; b < d && ok; ++b)
      for (int k = 0; k < n && ok; ++k) {
        Vec u = H.mul(H.s_l(H.base().basis_vec(a)),
                      H.mul(H.t_l(H.base().basis_vec(b)), H.basis_h(k)));
        Vec lhs = H.eps(u);
        Vec rhs = H.base().mul(
            H.base().mul(H.base().basis_vec(a), H.eps(H.basis_h(k))),
            H.base().basis_vec(b));
        if (lhs != rhs) {
          ok = false;
          w = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
              " h=" + std::to_string(k);
        }
      }
  rep.add("counit bimodule law", ok, w);

  bool ok_s = true, ok_t = true;
  std::string ws, wt;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      Vec prod_eps = H.eps(H.mul(H.basis_h(u), H.basis_h(v)));
      Vec ev = H.eps(H.basis_h(v));
      if (ok_s &&
          prod_eps != H.eps(H.mul(H.basis_h(u), H.s_l(ev)))) {
        ok_s = false;
        ws = detail::pair_witness(u, v);
      }
      if (ok_t &&
          prod_eps != H.eps(H.mul(H.basis_h(u), H.t_l(ev)))) {
        ok_t = false;
        wt = detail::pair_witness(u, v);
      }
    }
  rep.add("counit of products via bract", ok_s, ws);
  rep.add("counit of products via blact", ok_t, wt);
  return rep;
}

// --- translation-map identities ------------------------------------------

inline CheckReport check_translation_identities(const AeHopf& H) {
  detail::AeVerifier V(H);
  CheckReport rep;
  rep.subject = "translation-maps";
  const int n = H.dim();
  const int d = H.adim();

  // induced matrix of α_ℓ from the A^op quotient to the A quotient
  const int qdim = d * d * d;
  DenseMatrix alpha_cols(n * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      alpha_cols[H.pair_idx(u, v)] =
          V.proj_pair_A(H.alpha_l(H.tensor(H.basis_h(u), H.basis_h(v))));
  // rows = components, columns = ambient pair basis
  DenseMatrix alpha_mat(qdim, Vec(n * n, Rational(0)));
  for (int col = 0; col < n * n; ++col)
    for (int rrow = 0; rrow < qdim; ++rrow)
      alpha_mat[rrow][col] = alpha_cols[col][rrow];
  const int rank = dense_rank(alpha_mat);
  rep.add("hopf-galois map surjective on the quotient", rank == qdim,
          "rank " + std::to_string(rank));

  // translation via (Δ_r, S) vs via linear inversion of α_ℓ
  bool ok = true;
  std::string w;
  for (int k = 0; k < n && ok; ++k) {
    Vec want = V.proj_pair_A(H.tensor(H.basis_h(k), H.unit_h()));
    auto x = solve_linear(alpha_mat, want);
    if (!x) {
      ok = false;
      w = "no preimage for basis element " + std::to_string(k);
      break;
    }
    if (V.proj_pair_aop(*x) != V.proj_pair_aop(V.tau(k))) {
      ok = false;
      w = "basis element " + std::to_string(k);
    }
  }
  rep.add("antipode formula agrees with hopf-galois inversion", ok, w);

  auto each_basis = [&](auto&& f, const char* name) {
    bool good = true;
    std::string wit;
    for (int k = 0; k < n && good; ++k)
      if (!f(k)) {
        good = false;
        wit = "basis element " + std::to_string(k);
      }
    rep.add(name, good, wit);
  };

  each_basis(
      [&](int k) {
        for (int c = 0; c < d; ++c) {
          Vec tc = H.t_l(H.base().basis_vec(c));
          Vec lhs = V.slot_mul(V.tau(k), detail::AeVerifier::Slot::first, tc,
                               /*g_on_left=*/true);
          Vec rhs = V.slot_mul(V.tau(k), detail::AeVerifier::Slot::second, tc,
                               /*g_on_left=*/false);
          if (V.proj_pair_aop(lhs) != V.proj_pair_aop(rhs)) return false;
        }
        return true;
      },
      "takeuchi membership of the translation image");

  each_basis(
      [&](int k) {
        Vec lhs = V.mul_last_two(V.delta_first(V.tau(k)));
        return V.proj_pair_A(lhs) ==
               V.proj_pair_A(H.tensor(H.basis_h(k), H.unit_h()));
      },
      "coproduct of the plus part absorbs the minus part");

  each_basis(
      [&](int k) {
        Vec dl = H.delta(H.basis_h(k));
        Vec acc(H.pair_dim(), Rational(0));
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Rational& c = dl[H.pair_idx(p, q)];
            if (is_zero(c)) continue;
            Vec t = V.slot_mul(V.tau(p), detail::AeVerifier::Slot::second,
                               H.basis_h(q), /*g_on_left=*/false);
            axpy(acc, c, t);
          }
        return V.proj_pair_aop(acc) ==
               V.proj_pair_aop(H.tensor(H.basis_h(k), H.unit_h()));
      },
      "translation of the first leg absorbs the second leg");

  each_basis(
      [&](int k) {
        Vec lhs = V.delta_first(V.tau(k));
        Vec dl = H.delta(H.basis_h(k));
        Vec rhs(n * n * n, Rational(0));
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Rational& c = dl[H.pair_idx(p, q)];
            if (is_zero(c)) continue;
            const Vec& tq = V.tau(q);
            for (int r = 0; r < n; ++r)
              for (int s = 0; s < n; ++s)
                if (!is_zero(tq[H.pair_idx(r, s)]))
                  rhs[V.t_idx(p, r, s)] += c * tq[H.pair_idx(r, s)];
          }
        return V.proj_triple_plus_split(lhs) == V.proj_triple_plus_split(rhs);
      },
      "coproduct of the plus part matches translation of the second leg");

  each_basis(
      [&](int k) {
        Vec lhs = V.delta_second(V.tau(k));
        const Vec& t = V.tau(k);
        Vec rhs(n * n * n, Rational(0));
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Rational& c = t[H.pair_idx(p, q)];
            if (is_zero(c)) continue;
            const Vec& tp = V.tau(p);
            for (int r = 0; r < n; ++r)
              for (int s = 0; s < n; ++s)
                if (!is_zero(tp[H.pair_idx(r, s)]))
                  rhs[V.t_idx(r, q, s)] += c * tp[H.pair_idx(r, s)];
          }
        return V.proj_triple_minus_split(lhs) == V.proj_triple_minus_split(rhs);
      },
      "coproduct of the minus part matches iterated translation");

  {
    bool good = true;
    std::string wit;
    for (int u = 0; u < n && good; ++u)
      for (int v = 0; v < n && good; ++v) {
        Vec lhs = V.tau_of(H.mul(H.basis_h(u), H.basis_h(v)));
        const Vec& tu = V.tau(u);
        const Vec& tv = V.tau(v);
        Vec rhs(H.pair_dim(), Rational(0));
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Rational& cu = tu[H.pair_idx(p, q)];
            if (is_zero(cu)) continue;
            for (int r = 0; r < n; ++r)
              for (int s = 0; s < n; ++s) {
                const Rational& cv = tv[H.pair_idx(r, s)];
                if (is_zero(cv)) continue;
                Vec first = H.mul(H.basis_h(p), H.basis_h(r));
                Vec second = H.mul(H.basis_h(s), H.basis_h(q));
                Rational f = cu * cv;
                for (int x = 0; x < n; ++x) {
                  if (is_zero(first[x])) continue;
                  for (int y = 0; y < n; ++y)
                    rhs[H.pair_idx(x, y)] += f * first[x] * second[y];
                }
              }
          }
        if (V.proj_pair_aop(lhs) != V.proj_pair_aop(rhs)) {
          good = false;
          wit = detail::pair_witness(u, v);
        }
      }
    rep.add("translation is multiplicative with reversed minus parts", good, wit);
  }

  each_basis(
      [&](int k) {
        const Vec& t = V.tau(k);
        Vec acc(n, Rational(0));
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Rational& c = t[H.pair_idx(p, q)];
            if (is_zero(c)) continue;
            axpy(acc, c, H.mul(H.basis_h(p), H.basis_h(q)));
          }
        return acc == H.s_l(H.eps(H.basis_h(k)));
      },
      "plus times minus is the source of the counit");

  each_basis(
      [&](int k) {
        const Vec& t = V.tau(k);
        Vec acc(n, Rational(0));
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Rational& c = t[H.pair_idx(p, q)];
            if (is_zero(c)) continue;
            axpy(acc, c,
                 H.mul(H.basis_h(p), H.t_l(H.eps(H.basis_h(q)))));
          }
        return acc == H.basis_h(k);
      },
      "plus part absorbs the counit of the minus part");

  {
    bool good = true;
    std::string wit;
    for (int a = 0; a < d && good; ++a)
      for (int b = 0; b < d && good; ++b) {
        Vec u = H.mul(H.s_l(H.base().basis_vec(a)), H.t_l(H.base().basis_vec(b)));
        Vec lhs = V.tau_of(u);
        Vec rhs = H.tensor(H.s_l(H.base().basis_vec(a)),
                           H.s_l(H.base().basis_vec(b)));
        if (V.proj_pair_aop(lhs) != V.proj_pair_aop(rhs)) {
          good = false;
          wit = "a=" + std::to_string(a) + " b=" + std::to_string(b);
        }
      }
    rep.add("translation of source-target products", good, wit);
  }
  return rep;
}

// --- antipode properties --------------------------------------------------

inline CheckReport check_antipode_properties(const AeHopf& H) {
  detail::AeVerifier V(H);
  CheckReport rep;
  rep.subject = "antipode";
  const int n = H.dim();
  const int d = H.adim();

  rep.add("antipode exists", V.antipode_found());
  rep.add("antipode unique", V.antipode_freedom() == 0,
          "solution space dimension " + std::to_string(V.antipode_freedom()));

  const DenseMatrix& S = V.antipode();
  bool ok = true;
  for (int k = 0; k < n && ok; ++k)
    ok = H.apply_matrix(S, H.basis_h(k)) == H.flip(H.basis_h(k));
  rep.add("antipode is the factor flip", ok);

  ok = true;
  for (int k = 0; k < n && ok; ++k)
    ok = H.apply_matrix(S, H.apply_matrix(S, H.basis_h(k))) == H.basis_h(k);
  rep.add("involutive on this model", ok);

  ok = true;
  std::string w;
  for (int u = 0; u < n && ok; ++u)
    for (int v = 0; v < n && ok; ++v) {
      Vec lhs = H.apply_matrix(S, H.mul(H.basis_h(u), H.basis_h(v)));
      Vec rhs = H.mul(H.apply_matrix(S, H.basis_h(v)),
                      H.apply_matrix(S, H.basis_h(u)));
      if (lhs != rhs) {
        ok = false;
        w = detail::pair_witness(u, v);
      }
    }
  rep.add("anti-multiplicative", ok, w);

  ok = true;
  for (int a = 0; a < d && ok; ++a)
    ok = H.apply_matrix(S, H.s_l(H.base().basis_vec(a))) ==
             H.s_r(H.base().basis_vec(a)) &&
         H.apply_matrix(S, H.t_l(H.base().basis_vec(a))) ==
             H.t_r(H.base().basis_vec(a));
  rep.add("exchanges left and right structure maps", ok);

  // ν = ∂ s^ℓ and μ = ε s^r with the stated inverses
  DenseMatrix nu(d, Vec(d, Rational(0))), mu(d, Vec(d, Rational(0)));
  for (int a = 0; a < d; ++a) {
    Vec na = H.del(H.s_l(H.base().basis_vec(a)));
    Vec ma = H.eps(H.s_r(H.base().basis_vec(a)));
    for (int r = 0; r < d; ++r) {
      nu[r][a] = na[r];
      mu[r][a] = ma[r];
    }
  }
  rep.add("nu bijective", dense_rank(nu) == d);
  rep.add("mu bijective", dense_rank(mu) == d);

  auto apply_small = [&](const DenseMatrix& m, const Vec& v) {
    Vec r(d, Rational(0));
    for (int c = 0; c < d; ++c)
      if (!is_zero(v[c]))
        for (int rrow = 0; rrow < d; ++rrow) r[rrow] += m[rrow][c] * v[c];
    return r;
  };

  ok = true;
  for (int a = 0; a < d && ok; ++a)
    for (int b = 0; b < d && ok; ++b) {
      Vec ab = V.amul(a, b);
      ok = apply_small(nu, ab) ==
               H.base().mul(apply_small(nu, H.base().basis_vec(a)),
                            apply_small(nu, H.base().basis_vec(b))) &&
           apply_small(mu, ab) ==
               H.base().mul(apply_small(mu, H.base().basis_vec(a)),
                            apply_small(mu, H.base().basis_vec(b)));
    }
  rep.add("nu and mu multiplicative", ok);

  ok = true;
  for (int a = 0; a < d && ok; ++a) {
    Vec ea = H.base().basis_vec(a);
    ok = H.eps(H.t_r(apply_small(nu, ea))) == ea &&
         apply_small(nu, H.eps(H.t_r(ea))) == ea &&
         H.del(H.t_l(apply_small(mu, ea))) == ea &&
         apply_small(mu, H.del(H.t_l(ea))) == ea;
  }
  rep.add("stated inverse formulas", ok);

  // right-coproduct counit laws (the right-bialgebroid side)
  ok = true;
  w.clear();
  for (int k = 0; k < n && ok; ++k) {
    Vec dr = H.delta_r(H.basis_h(k));
    Vec left(n, Rational(0)), right(n, Rational(0));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const Rational& c = dr[H.pair_idx(p, q)];
        if (is_zero(c)) continue;
        axpy(left, c, H.mul(H.basis_h(q), H.t_r(H.del(H.basis_h(p)))));
        axpy(right, c, H.mul(H.basis_h(p), H.s_r(H.del(H.basis_h(q)))));
      }
    if (left != H.basis_h(k) || right != H.basis_h(k)) {
      ok = false;
      w = "basis element " + std::to_string(k);
    }
  }
  rep.add("right counit laws", ok, w);

  ok = true;
  w.clear();
  for (int u = 0; u < n && ok; ++u)
    for (int v = 0; v < n && ok; ++v) {
      Vec lhs = H.delta_r(H.mul(H.basis_h(u), H.basis_h(v)));
      Vec rhs = V.pair_mul(H.delta_r(H.basis_h(u)), H.delta_r(H.basis_h(v)));
      if (V.proj_pair_right(lhs) != V.proj_pair_right(rhs)) {
        ok = false;
        w = detail::pair_witness(u, v);
      }
    }
  rep.add("right coproduct multiplicative", ok, w);

  // the second Hopf-Galois map and its inversion by S^{-1} (= S here)
  {
    const int qdim = d * d * d;
    DenseMatrix mat(qdim, Vec(n * n, Rational(0)));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        Vec col = V.proj_pair_A(H.alpha_r(H.tensor(H.basis_h(u), H.basis_h(v))));
        for (int r = 0; r < qdim; ++r) mat[r][H.pair_idx(u, v)] = col[r];
      }
    rep.add("second hopf-galois map surjective on the quotient",
            dense_rank(mat) == qdim);
    bool good = true;
    std::string wit;
    for (int k = 0; k < n && good; ++k) {
      Vec tr = H.translation_right(S, H.basis_h(k));
      Vec img = V.proj_pair_A(H.alpha_r(tr));
      if (img != V.proj_pair_A(H.tensor(H.unit_h(), H.basis_h(k)))) {
        good = false;
        wit = "basis element " + std::to_string(k);
      }
    }
    rep.add("right translation via inverse antipode", good, wit);
  }
  return rep;
}

// --- module-structure formulas -------------------------------------------

inline CheckReport check_module_structure_formulas(const AeHopf& H) {
  detail::AeVerifier V(H);
  CheckReport rep;
  rep.subject = "module-structures";
  const int n = H.dim();
  const int d = H.adim();

  auto act_l = [&](const Vec& h, const Vec& a) { return H.eps(H.mul(h, H.s_l(a))); };
  auto act_r = [&](const Vec& a, const Vec& h) { return H.del(H.mul(H.s_r(a), h)); };

  bool ok = true;
  std::string w;
  for (int u = 0; u < n && ok; ++u)
    for (int v = 0; v < n && ok; ++v)
      for (int a = 0; a < d && ok; ++a) {
        Vec ea = H.base().basis_vec(a);
        if (act_l(H.mul(H.basis_h(u), H.basis_h(v)), ea) !=
                act_l(H.basis_h(u), act_l(H.basis_h(v), ea)) ||
            act_r(act_r(ea, H.basis_h(u)), H.basis_h(v)) !=
                act_r(ea, H.mul(H.basis_h(u), H.basis_h(v)))) {
          ok = false;
          w = detail::pair_witness(u, v);
        }
      }
  rep.add("canonical actions on the base are actions", ok, w);

  // Hom_{A^op}(A, A): k-linear maps commuting with the right A-action
  // m -> m b; basis computed from the linear constraints.
  DenseMatrix hom_constraints;
  for (int b = 0; b < d; ++b)
    for (int m = 0; m < d; ++m) {
      Vec mb = V.amul(m, b);
      // f(m b) - f(m) b = 0; unknowns f[r][c]
      for (int comp = 0; comp < d; ++comp) {
        Vec row(d * d, Rational(0));
        for (int c = 0; c < d; ++c)
          if (!is_zero(mb[c])) row[comp * d + c] += mb[c];
        for (int r = 0; r < d; ++r) {
          Vec rb = V.amul(r, b);
          if (!is_zero(rb[comp])) row[r * d + m] -= rb[comp];
        }
        if (!is_zero_vec(row)) hom_constraints.push_back(std::move(row));
      }
    }
  // nullspace basis of the constraints
  DenseMatrix hom_basis;
  {
    DenseMatrix c = hom_constraints;
    std::vector<int> pivots = rref(c);
    std::vector<bool> is_pivot(d * d, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int freecol = 0; freecol < d * d; ++freecol) {
      if (is_pivot[freecol]) continue;
      Vec sol(d * d, Rational(0));
      sol[freecol] = 1;
      for (size_t r = 0; r < pivots.size(); ++r)
        sol[pivots[r]] = -c[r][freecol];
      hom_basis.push_back(std::move(sol));
    }
  }

  auto apply_hom = [&](const Vec& f, const Vec& m) {
    Vec r(d, Rational(0));
    for (int c = 0; c < d; ++c)
      if (!is_zero(m[c]))
        for (int rrow = 0; rrow < d; ++rrow) r[rrow] += f[rrow * d + c] * m[c];
    return r;
  };

  // induced action (u·f)(m) = u_+( f(u_- m) ) on Hom_{A^op}(A,A)
  auto hom_action = [&](const Vec& tau_u, const Vec& f) {
    Vec out(d * d, Rational(0));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const Rational& c = tau_u[H.pair_idx(p, q)];
        if (is_zero(c)) continue;
        for (int m = 0; m < d; ++m) {
          Vec val = act_l(H.basis_h(p),
                          apply_hom(f, act_l(H.basis_h(q), H.base().basis_vec(m))));
          for (int r = 0; r < d; ++r) out[r * d + m] += c * val[r];
        }
      }
    return out;
  };

  ok = true;
  w.clear();
  for (int u = 0; u < n && ok; ++u)
    for (int v = 0; v < n && ok; ++v)
      for (const Vec& f : hom_basis) {
        Vec lhs = hom_action(V.tau_of(H.mul(H.basis_h(u), H.basis_h(v))), f);
        Vec rhs = hom_action(V.tau(u), hom_action(V.tau(v), f));
        if (lhs != rhs) {
          ok = false;
          w = detail::pair_witness(u, v);
          break;
        }
      }
  rep.add("hom action is a left action", ok, w);

  // right action on (A as right module) ⊗_{A^op} (A as left module)
  DenseMatrix tensor_rel;
  for (int a = 0; a < d; ++a)
    for (int nn = 0; nn < d; ++nn)
      for (int m = 0; m < d; ++m) {
        // (a ◼ n) ⊗ m - n ⊗ (m ◁ a)
        Vec an = act_r(H.base().basis_vec(nn), H.t_l(H.base().basis_vec(a)));
        Vec ma = act_l(H.t_l(H.base().basis_vec(a)), H.base().basis_vec(m));
        Vec row(d * d, Rational(0));
        for (int r = 0; r < d; ++r) row[r * d + m] += an[r];
        for (int r = 0; r < d; ++r) row[nn * d + r] -= ma[r];
        if (!is_zero_vec(row)) tensor_rel.push_back(std::move(row));
      }
  Subspace trel(d * d, std::move(tensor_rel));

  auto tensor_action = [&](const Vec& tau_u, int nn, int m) {
    Vec out(d * d, Rational(0));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const Rational& c = tau_u[H.pair_idx(p, q)];
        if (is_zero(c)) continue;
        Vec left = act_r(H.base().basis_vec(nn), H.basis_h(p));
        Vec right = act_l(H.basis_h(q), H.base().basis_vec(m));
        for (int r = 0; r < d; ++r)
          for (int s = 0; s < d; ++s) out[r * d + s] += c * left[r] * right[s];
      }
    return out;
  };
  auto tensor_action_vec = [&](const Vec& tau_u, const Vec& x) {
    Vec out(d * d, Rational(0));
    for (int nn = 0; nn < d; ++nn)
      for (int m = 0; m < d; ++m) {
        if (is_zero(x[nn * d + m])) continue;
        axpy(out, x[nn * d + m], tensor_action(tau_u, nn, m));
      }
    return out;
  };

  ok = true;
  w.clear();
  for (int u = 0; u < n && ok; ++u)
    for (int v = 0; v < n && ok; ++v)
      for (int nn = 0; nn < d && ok; ++nn)
        for (int m = 0; m < d && ok; ++m) {
          Vec via_product =
              tensor_action(V.tau_of(H.mul(H.basis_h(u), H.basis_h(v))), nn, m);
          Vec stepwise = tensor_action_vec(V.tau(v), tensor_action(V.tau(u), nn, m));
          if (!trel.same_class(via_product, stepwise)) {
            ok = false;
            w = detail::pair_witness(u, v);
          }
        }
  rep.add("tensor action is a right action", ok, w);
  return rep;
}

// --- the dualizing module A_S --------------------------------------------

inline CheckReport check_AS_dualizing(const AeHopf& H) {
  detail::AeVerifier V(H);
  CheckReport rep;
  rep.subject = "dualizing-module";
  const int n = H.dim();
  const int d = H.adim();
  const DenseMatrix& S = V.antipode();

  auto act_l = [&](const Vec& h, const Vec& a) { return H.eps(H.mul(h, H.s_l(a))); };
  auto act_AS = [&](const Vec& a, const Vec& h) {
    return act_l(H.apply_matrix(S, h), a);
  };

  bool ok = true;
  std::string w;
  for (int u = 0; u < n && ok; ++u)
    for (int v = 0; v < n && ok; ++v)
      for (int a = 0; a < d && ok; ++a) {
        Vec ea = H.base().basis_vec(a);
        if (act_AS(act_AS(ea, H.basis_h(u)), H.basis_h(v)) !=
            act_AS(ea, H.mul(H.basis_h(u), H.basis_h(v)))) {
          ok = false;
          w = detail::pair_witness(u, v);
        }
      }
  rep.add("twisted structure is a right action", ok, w);

  Vec one = H.base().unit();
  ok = true;
  for (int a = 0; a < d && ok; ++a)
    ok = act_AS(one, H.t_l(H.base().basis_vec(a))) == H.base().basis_vec(a);
  rep.add("free of rank one over t (item 1)", ok);

  auto munu = [&](const Vec& a) { return H.eps(H.s_r(H.del(H.s_l(a)))); };
  ok = true;
  for (int a = 0; a < d && ok; ++a)
    ok = act_AS(one, H.s_l(H.base().basis_vec(a))) ==
         munu(H.base().basis_vec(a));
  rep.add("source action is mu nu (item 2)", ok);

  // Right-module family for items 3 and the dualizing conditions.
  struct Member {
    std::string name;
    int dim;
    std::function<Vec(const Vec&, const Vec&)> act;  // (element, h) -> element
  };
  std::vector<Member> family;
  family.push_back({"A_S", d, [&](const Vec& x, const Vec& h) {
                      return act_AS(x, h);
                    }});
  family.push_back({"H-right-regular", n, [&](const Vec& x, const Vec& h) {
                      return H.mul(x, h);
                    }});

  for (const Member& mem : family) {
    // Hom_A(_◼A_S, _◼N): λ with λ(a ◼ p) = a ◼ λ(p);
    // a ◼ p = p · t^ℓ(a) in each module.
    const int nd = mem.dim;
    DenseMatrix constraints;
    for (int a = 0; a < d; ++a)
      for (int p = 0; p < d; ++p) {
        Vec ap = act_AS(unit_vec(d, p), H.t_l(H.base().basis_vec(a)));
        for (int comp = 0; comp < nd; ++comp) {
          Vec row(nd * d, Rational(0));
          for (int c = 0; c < d; ++c)
            if (!is_zero(ap[c])) row[comp * d + c] += ap[c];
          for (int r = 0; r < nd; ++r) {
            Vec ar = mem.act(unit_vec(nd, r), H.t_l(H.base().basis_vec(a)));
            if (!is_zero(ar[comp])) row[r * d + p] -= ar[comp];
          }
          if (!is_zero_vec(row)) constraints.push_back(std::move(row));
        }
      }
    DenseMatrix hom_basis;
    {
      DenseMatrix c = constraints;
      std::vector<int> pivots = rref(c);
      std::vector<bool> is_pivot(nd * d, false);
      for (int p : pivots) is_pivot[p] = true;
      for (int freecol = 0; freecol < nd * d; ++freecol) {
        if (is_pivot[freecol]) continue;
        Vec sol(nd * d, Rational(0));
        sol[freecol] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
          sol[pivots[r]] = -c[r][freecol];
        hom_basis.push_back(std::move(sol));
      }
    }
    rep.add("hom space dimension matches " + mem.name,
            static_cast<int>(hom_basis.size()) == nd,
            "dim " + std::to_string(hom_basis.size()));

    auto apply_lambda = [&](const Vec& lam, const Vec& p) {
      Vec r(nd, Rational(0));
      for (int c = 0; c < d; ++c)
        if (!is_zero(p[c]))
          for (int rr = 0; rr < nd; ++rr) r[rr] += lam[rr * d + c] * p[c];
      return r;
    };

    // left action on Hom: (h·λ)(p) = λ(p h_+) h_-
    auto hom_left_action = [&](const Vec& tau_h, const Vec& lam) {
      Vec out(nd * d, Rational(0));
      for (int pp = 0; pp < n; ++pp)
        for (int qq = 0; qq < n; ++qq) {
          const Rational& c = tau_h[H.pair_idx(pp, qq)];
          if (is_zero(c)) continue;
          for (int p = 0; p < d; ++p) {
            Vec moved = act_AS(unit_vec(d, p), H.basis_h(pp));
            Vec val = mem.act(apply_lambda(lam, moved), H.basis_h(qq));
            for (int rr = 0; rr < nd; ++rr) out[rr * d + p] += c * val[rr];
          }
        }
      return out;
    };

    // item 3: λ -> λ(1) is a bijective left-module map onto the
    // S-twisted module
    DenseMatrix eval_mat(nd, Vec(hom_basis.size(), Rational(0)));
    for (size_t col = 0; col < hom_basis.size(); ++col) {
      Vec v = apply_lambda(hom_basis[col], one);
      for (int r = 0; r < nd; ++r) eval_mat[r][col] = v[r];
    }
    rep.add("evaluation at 1 bijective for " + mem.name,
            dense_rank(eval_mat) == nd);

    bool good = true;
    std::string wit;
    for (int k = 0; k < n && good; ++k)
      for (const Vec& lam : hom_basis) {
        Vec lhs = apply_lambda(hom_left_action(V.tau(k), lam), one);
        Vec rhs = mem.act(apply_lambda(lam, one),
                          H.apply_matrix(S, H.basis_h(k)));
        if (lhs != rhs) {
          good = false;
          wit = "basis element " + std::to_string(k);
          break;
        }
      }
    rep.add("evaluation at 1 intertwines the S-twist for " + mem.name, good,
            wit);

    // dualizing condition 3: the evaluation map
    // A_S ⊗_A Hom(A_S, N) -> N is bijective
    const int amb = d * static_cast<int>(hom_basis.size());
    DenseMatrix rel;
    for (int a = 0; a < d; ++a)
      for (int p = 0; p < d; ++p)
        for (size_t l = 0; l < hom_basis.size(); ++l) {
          // (p ◁s a) ⊗ λ - p ⊗ (a ▷ λ) with ◁s via s^ℓ and ▷ via hom_left_action
          Vec pa = act_AS(unit_vec(d, p), H.s_l(H.base().basis_vec(a)));
          Vec al = hom_left_action(V.tau_of(H.s_l(H.base().basis_vec(a))), hom_basis[l]);
          // express a▷λ in the hom basis
          DenseMatrix hb(nd * d, Vec(hom_basis.size(), Rational(0)));
          for (size_t c = 0; c < hom_basis.size(); ++c)
            for (int r = 0; r < nd * d; ++r) hb[r][c] = hom_basis[c][r];
          auto coords = solve_linear(hb, al);
          if (!coords) continue;  // reported via action checks
          Vec row(amb, Rational(0));
          for (int r = 0; r < d; ++r)
            row[r * hom_basis.size() + l] += pa[r];
          for (size_t c = 0; c < hom_basis.size(); ++c)
            row[p * hom_basis.size() + c] -= (*coords)[c];
          if (!is_zero_vec(row)) rel.push_back(std::move(row));
        }
    Subspace q(amb, std::move(rel));
    DenseMatrix ev(nd, Vec(amb, Rational(0)));
    for (int p = 0; p < d; ++p)
      for (size_t l = 0; l < hom_basis.size(); ++l) {
        Vec v = apply_lambda(hom_basis[l], unit_vec(d, p));
        for (int r = 0; r < nd; ++r)
          ev[r][p * hom_basis.size() + l] = v[r];
      }
    const int qdim = amb - q.dim();
    rep.add("evaluation map bijective onto " + mem.name,
            qdim == nd && dense_rank(ev) == nd,
            "quotient dim " + std::to_string(qdim));
  }

  // dualizing condition 2: A -> Hom(A_S, A_S), a -> (p -> p ◁s a)
  {
    DenseMatrix img(d * d, Vec(d, Rational(0)));
    for (int a = 0; a < d; ++a)
      for (int p = 0; p < d; ++p) {
        Vec v = act_AS(unit_vec(d, p), H.s_l(H.base().basis_vec(a)));
        for (int r = 0; r < d; ++r) img[r * d + p][a] = v[r];
      }
    rep.add("base acts faithfully and fully on A_S (condition 2)",
            dense_rank(img) == d);
  }
  return rep;
}

}  // namespace hopfdual
