#pragma once

// Poisson structures on polynomial algebras and the associated
// Lie-Rinehart data on Ω¹.
//
// Conventions: {f,g} = Σ_{i,j} p_ij ∂_i f ∂_j g with p_ij = {x_i, x_j};
// X_f = {f,·}; the modular field is taken with respect to the standard
// coordinate volume.

#include <hopfdual/poly.hpp>
#include <hopfdual/polyvector.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfdual {

struct JacobiWitness {
  int i, j, k;          // coordinate triple (0-based)
  Poly jacobiator;      // {x_i,{x_j,x_k}} + cyclic, nonzero on failure
};

class PoissonStructure {
 public:
  // Throws on non-antisymmetric or non-homogeneous input. Jacobi is
  // enforced unless allow_jacobi_failure is set (test fixtures only).
  PoissonStructure(VarList vars, std::vector<std::vector<Poly>> bracket,
                   bool allow_jacobi_failure = false)
      : vars_(std::move(vars)), bracket_(std::move(bracket)) {
    const int m = static_cast<int>(vars_->size());
    if (static_cast<int>(bracket_.size()) != m)
      throw std::invalid_argument("bracket matrix must be m x m");
    for (const auto& row : bracket_)
      if (static_cast<int>(row.size()) != m)
        throw std::invalid_argument("bracket matrix must be m x m");
    for (int i = 0; i < m; ++i) {
      if (!bracket_[i][i].is_zero())
        throw std::invalid_argument("bracket matrix has nonzero diagonal");
      for (int j = i + 1; j < m; ++j)
        if (bracket_[i][j] != -bracket_[j][i])
          throw std::invalid_argument("bracket matrix is not antisymmetric");
    }
    homogeneity_degree_ = -1;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (bracket_[i][j].is_zero()) continue;
        int d = bracket_[i][j].homogeneous_degree();
        if (homogeneity_degree_ == -1)
          homogeneity_degree_ = d;
        else if (d != homogeneity_degree_)
          throw std::invalid_argument(
              "bracket entries are not homogeneous of a common degree: {" +
              (*vars_)[i] + "," + (*vars_)[j] + "} = " + bracket_[i][j].str());
      }
    }
    if (homogeneity_degree_ == -1) homogeneity_degree_ = 2;  // zero bracket
    if (!allow_jacobi_failure) {
      if (auto w = jacobi_witness())
        throw std::invalid_argument(
            "Jacobi identity fails on (" + (*vars_)[w->i] + "," +
            (*vars_)[w->j] + "," + (*vars_)[w->k] + "): " +
            w->jacobiator.str());
    }
  }

  const VarList& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_->size()); }
  int homogeneity_degree() const { return homogeneity_degree_; }
  const Poly& entry(int i, int j) const { return bracket_[i][j]; }

  Poly bracket(const Poly& f, const Poly& g) const {
    Poly r = Poly::zero(vars_);
    const int m = nvars();
    for (int i = 0; i < m; ++i) {
      Poly fi = f.partial(i);
      if (fi.is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        if (bracket_[i][j].is_zero()) continue;
        r += bracket_[i][j] * fi * g.partial(j);
      }
    }
    return r;
  }

  // π as a bivector field: Σ_{i<j} p_ij ∂_i∧∂_j.
  Polyvector as_bivector() const {
    Polyvector r(vars_, 2);
    for (int i = 0; i < nvars(); ++i)
      for (int j = i + 1; j < nvars(); ++j)
        r.add_component({i, j}, bracket_[i][j]);
    return r;
  }

  // Brute-force Jacobiator scan over coordinate triples; independent of
  // the Schouten-bracket route.
  std::optional<JacobiWitness> jacobi_witness() const {
    const int m = nvars();
    for (int i = 0; i < m; ++i) {
      Poly xi = Poly::variable(vars_, i);
      for (int j = i + 1; j < m; ++j) {
        Poly xj = Poly::variable(vars_, j);
        for (int k = j + 1; k < m; ++k) {
          Poly xk = Poly::variable(vars_, k);
          Poly jac = bracket(xi, bracket_[j][k]) +
                     bracket(xj, bracket_[k][i]) +
                     bracket(xk, bracket_[i][j]);
          if (!jac.is_zero()) return JacobiWitness{i, j, k, jac};
        }
      }
    }
    return std::nullopt;
  }

 private:
  VarList vars_;
  std::vector<std::vector<Poly>> bracket_;
  int homogeneity_degree_;
};

inline bool jacobi_check(const PoissonStructure& pi) {
  return !pi.jacobi_witness().has_value();
}

inline VectorField hamiltonian_field(const PoissonStructure& pi,
                                     const Poly& f) {
  VectorField v(pi.vars(), 1);
  for (int l = 0; l < pi.nvars(); ++l) {
    Poly c = pi.bracket(f, Poly::variable(pi.vars(), l));
    v.add_component({l}, c);
  }
  return v;
}

// φ with φ(f) = div(X_f) for the standard volume: φ(x_j) = Σ_i ∂_i p_ji.
inline VectorField modular_field(const PoissonStructure& pi) {
  VectorField v(pi.vars(), 1);
  for (int j = 0; j < pi.nvars(); ++j) {
    Poly c = Poly::zero(pi.vars());
    for (int i = 0; i < pi.nvars(); ++i) c += pi.entry(j, i).partial(i);
    v.add_component({j}, c);
  }
  return v;
}

// --- Lie-Rinehart presentations -----------------------------------------

// Free A-module L of rank n with anchor fields ρ(e_j) and structure
// functions [e_i, e_j] = Σ_l c_ij^l e_l. Elements of L are coefficient
// vectors over the generators.
class LieRinehartPresentation {
 public:
  LieRinehartPresentation(VarList vars, int rank,
                          std::vector<VectorField> anchor,
                          std::vector<std::vector<std::vector<Poly>>> structure,
                          std::vector<int> generator_weights)
      : vars_(std::move(vars)), rank_(rank), anchor_(std::move(anchor)),
        structure_(std::move(structure)),
        generator_weights_(std::move(generator_weights)) {
    if (static_cast<int>(anchor_.size()) != rank_ ||
        static_cast<int>(structure_.size()) != rank_ ||
        static_cast<int>(generator_weights_.size()) != rank_)
      throw std::invalid_argument("Lie-Rinehart data rank mismatch");
    for (const auto& row : structure_)
      if (static_cast<int>(row.size()) != rank_)
        throw std::invalid_argument("structure function table mismatch");
  }

  const VarList& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_->size()); }
  int rank() const { return rank_; }
  const VectorField& anchor(int j) const { return anchor_[j]; }
  const std::vector<int>& generator_weights() const {
    return generator_weights_;
  }

  // [e_i, e_j] as a coefficient vector
  std::vector<Poly> bracket_gens(int i, int j) const {
    return structure_[i][j];
  }

  // anchor of a general element Σ a_j e_j
  VectorField anchor_of(const std::vector<Poly>& elem) const {
    VectorField v(vars_, 1);
    for (int j = 0; j < rank_; ++j) {
      if (elem[j].is_zero()) continue;
      for (const auto& [mi, c] : anchor_[j].components())
        v.add_component(mi, elem[j] * c);
    }
    return v;
  }

  // [u, v] for general elements, extended by the Leibniz rule.
  std::vector<Poly> bracket_elems(const std::vector<Poly>& u,
                                  const std::vector<Poly>& v) const {
    std::vector<Poly> r(rank_, Poly::zero(vars_));
    VectorField ru = anchor_of(u), rv = anchor_of(v);
    for (int i = 0; i < rank_; ++i) {
      for (int j = 0; j < rank_; ++j) {
        if (u[i].is_zero() || v[j].is_zero()) continue;
        const auto& br = structure_[i][j];
        Poly uv = u[i] * v[j];
        for (int l = 0; l < rank_; ++l) r[l] += uv * br[l];
      }
    }
    for (int j = 0; j < rank_; ++j) {
      r[j] += ru.apply(v[j]);
      r[j] -= rv.apply(u[j]);
    }
    return r;
  }

  // Symbolic verification of the Lie-Rinehart axioms on generators.
  // Returns an empty string on success, else a description of the failure.
  std::string check_axioms() const {
    for (int i = 0; i < rank_; ++i) {
      for (int j = 0; j < rank_; ++j) {
        for (int l = 0; l < rank_; ++l) {
          if (structure_[i][j][l] != -structure_[j][i][l])
            return "bracket not antisymmetric at (" + std::to_string(i) +
                   "," + std::to_string(j) + ")";
        }
      }
    }
    // anchor is a morphism: ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)]
    for (int i = 0; i < rank_; ++i) {
      for (int j = i + 1; j < rank_; ++j) {
        VectorField lhs = anchor_of(structure_[i][j]);
        VectorField rhs = schouten_bracket(anchor_[i], anchor_[j]);
        if (!(lhs == rhs))
          return "anchor does not intertwine bracket at (" +
                 std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
    // Jacobi on generator triples
    std::vector<std::vector<Poly>> gens(rank_,
                                        std::vector<Poly>(rank_, Poly::zero(vars_)));
    for (int i = 0; i < rank_; ++i) gens[i][i] = Poly::constant(vars_, 1);
    for (int i = 0; i < rank_; ++i) {
      for (int j = i + 1; j < rank_; ++j) {
        for (int k = j + 1; k < rank_; ++k) {
          std::vector<Poly> jac =
              bracket_elems(bracket_elems(gens[i], gens[j]), gens[k]);
          auto add = [&](const std::vector<Poly>& t) {
            for (int l = 0; l < rank_; ++l) jac[l] += t[l];
          };
          add(bracket_elems(bracket_elems(gens[j], gens[k]), gens[i]));
          add(bracket_elems(bracket_elems(gens[k], gens[i]), gens[j]));
          for (int l = 0; l < rank_; ++l)
            if (!jac[l].is_zero())
              return "Jacobi fails on generator triple (" + std::to_string(i) +
                     "," + std::to_string(j) + "," + std::to_string(k) + ")";
        }
      }
    }
    return {};
  }

 private:
  VarList vars_;
  int rank_;
  std::vector<VectorField> anchor_;
  std::vector<std::vector<std::vector<Poly>>> structure_;  // [i][j] -> coeffs
  std::vector<int> generator_weights_;
};

// L = Ω¹ presented on dx_1..dx_m: ρ(dx_j) = X_{x_j},
// [dx_i, dx_j] = d{x_i,x_j} = Σ_l ∂_l(p_ij) dx_l.
inline LieRinehartPresentation to_lie_rinehart(const PoissonStructure& pi) {
  const int m = pi.nvars();
  std::vector<VectorField> anchor;
  anchor.reserve(m);
  for (int j = 0; j < m; ++j)
    anchor.push_back(hamiltonian_field(pi, Poly::variable(pi.vars(), j)));
  std::vector<std::vector<std::vector<Poly>>> structure(
      m, std::vector<std::vector<Poly>>(m,
          std::vector<Poly>(m, Poly::zero(pi.vars()))));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l)
        structure[i][j][l] = pi.entry(i, j).partial(l);
  return LieRinehartPresentation(pi.vars(), m, std::move(anchor),
                                 std::move(structure),
                                 std::vector<int>(m, 1));
}

}  // namespace hopfdual
