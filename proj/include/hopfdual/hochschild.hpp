#pragma once

// Hochschild (co)homology of polynomial algebras through the Koszul
// resolution A^e ⊗ Λ^•(k^m) → A, plus the Van den Bergh duality report
// and the Ext-concentration check over A^e.
//
// A coefficient bimodule is finite free over A; only the commutator of
// the left and right x_j-multiplications enters the Koszul differential,
// so that is what the data stores. Symmetric bimodules have commutator
// zero and both differentials vanish, which is the HKR picture. The
// differential preserves the weight in both directions: multiplication by
// a degree-one polynomial balances the ±1 exterior weight.

#include <hopfdual/complexes.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hopfdual {

// commutator[j](a,b) = coefficient of g_a in (x_j·g_b - g_b·x_j).
struct HochschildModule {
  int rank = 1;
  std::vector<int> generator_weights;
  std::vector<std::vector<std::vector<Poly>>> commutator;  // [j][a][b]

  static HochschildModule symmetric(const VarList& vars,
                                    std::vector<int> weights) {
    HochschildModule m;
    m.rank = static_cast<int>(weights.size());
    m.generator_weights = std::move(weights);
    m.commutator.assign(
        vars->size(),
        std::vector<std::vector<Poly>>(
            m.rank, std::vector<Poly>(m.rank, Poly::zero(vars))));
    return m;
  }

  ModuleElement commutator_apply(const VarList& vars, int j,
                                 const ModuleElement& elem) const {
    ModuleElement out = detail::zero_element(vars, rank);
    for (int b = 0; b < rank; ++b) {
      if (elem[b].is_zero()) continue;
      for (int a = 0; a < rank; ++a) out[a] += elem[b] * commutator[j][a][b];
    }
    return out;
  }

  // Shape and pairwise commutation (the bimodule axiom the Koszul d² = 0
  // depends on). Empty string on success.
  std::string check(const VarList& vars) const {
    const int m = static_cast<int>(vars->size());
    if (static_cast<int>(generator_weights.size()) != rank)
      return "generator weight count != rank";
    if (static_cast<int>(commutator.size()) != m)
      return "commutator matrix count != variable count";
    for (int j = 0; j < m; ++j)
      if (static_cast<int>(commutator[j].size()) != rank)
        return "commutator matrix is not rank x rank";
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        for (int b = 0; b < rank; ++b) {
          ModuleElement g = detail::zero_element(vars, rank);
          g[b] = Poly::constant(vars, 1);
          ModuleElement ij = commutator_apply(vars, i, commutator_apply(vars, j, g));
          ModuleElement ji = commutator_apply(vars, j, commutator_apply(vars, i, g));
          for (int a = 0; a < rank; ++a)
            if (ij[a] != ji[a])
              return "commutator matrices for x_" + std::to_string(i) +
                     " and x_" + std::to_string(j) + " do not commute";
        }
      }
    }
    return {};
  }
};

inline SpaceDescriptor hh_cochain_descriptor(const VarList& vars,
                                             const HochschildModule& M) {
  return {static_cast<int>(vars->size()), static_cast<int>(vars->size()), -1,
          M.generator_weights};
}

inline SpaceDescriptor hh_chain_descriptor(const VarList& vars,
                                           const HochschildModule& M) {
  return {static_cast<int>(vars->size()), static_cast<int>(vars->size()), +1,
          M.generator_weights};
}

// d : (M ⊗ Λ^i (k^m)^*)_w -> (M ⊗ Λ^{i+1})_w, wedge with Σ_j [x_j, -] ξ_j^*.
inline SparseMatrix hh_cochain_differential(const VarList& vars,
                                            const HochschildModule& M, int i,
                                            int w) {
  const int m = static_cast<int>(vars->size());
  const SpaceDescriptor desc = hh_cochain_descriptor(vars, M);
  const GradedBasis src = graded_slice(desc, i, w);
  const GradedBasis dst = graded_slice(desc, i + 1, w);
  SparseMatrix mat(dst.dimension(), src.dimension());
  for (int col = 0; col < src.dimension(); ++col) {
    const BasisElement& b = src.elements()[col];
    ModuleElement val = detail::zero_element(vars, M.rank);
    val[b.generator] = Poly::monomial(vars, b.exponents, 1);
    for (int j = 0; j < m; ++j) {
      MultiIndex arg;
      int sgn = detail::insert_sign(j, b.multi_index, arg);
      if (sgn == 0) continue;
      ModuleElement acted = M.commutator_apply(vars, j, val);
      detail::scatter(mat, dst, arg, acted, col, sgn);
    }
  }
  return mat;
}

// ∂ : (M ⊗ Λ^i (k^m))_w -> (M ⊗ Λ^{i-1})_w, contraction with the same sum.
inline SparseMatrix hh_chain_differential(const VarList& vars,
                                          const HochschildModule& M, int i,
                                          int w) {
  const SpaceDescriptor desc = hh_chain_descriptor(vars, M);
  const GradedBasis src = graded_slice(desc, i, w);
  const GradedBasis dst = graded_slice(desc, i - 1, w);
  SparseMatrix mat(dst.dimension(), src.dimension());
  for (int col = 0; col < src.dimension(); ++col) {
    const BasisElement& b = src.elements()[col];
    const MultiIndex& I = b.multi_index;
    ModuleElement val = detail::zero_element(vars, M.rank);
    val[b.generator] = Poly::monomial(vars, b.exponents, 1);
    for (size_t tpos = 0; tpos < I.size(); ++tpos) {
      MultiIndex rest;
      rest.reserve(I.size() - 1);
      for (size_t q = 0; q < I.size(); ++q)
        if (q != tpos) rest.push_back(I[q]);
      ModuleElement acted = M.commutator_apply(vars, I[tpos], val);
      detail::scatter(mat, dst, rest, acted, col, tpos % 2 == 0 ? 1 : -1);
    }
  }
  return mat;
}

inline BettiTable hh_cohomology_table(const VarList& vars,
                                      const HochschildModule& M,
                                      WeightWindow window, int threads = 1) {
  if (auto err = M.check(vars); !err.empty())
    throw std::invalid_argument("inconsistent module data: " + err);
  const SpaceDescriptor desc = hh_cochain_descriptor(vars, M);
  const int m = static_cast<int>(vars->size());
  struct Task { int i, w; };
  std::vector<Task> tasks;
  for (int i = 0; i <= m; ++i)
    for (int w = window.min; w <= window.max; ++w) tasks.push_back({i, w});
  std::vector<long> dims(tasks.size());
  detail::parallel_for(static_cast<int>(tasks.size()), threads, [&](int k) {
    const auto [i, w] = tasks[k];
    const int dim = graded_slice(desc, i, w).dimension();
    const int out_rank = rank_kernel(hh_cochain_differential(vars, M, i, w)).rank;
    const int in_rank =
        i == 0 ? 0 : rank_kernel(hh_cochain_differential(vars, M, i - 1, w)).rank;
    dims[k] = dim - out_rank - in_rank;
  });
  BettiTable table;
  table.kind = "cochain";
  table.window = window;
  for (size_t k = 0; k < tasks.size(); ++k)
    table.entries[{tasks[k].i, tasks[k].w}] = dims[k];
  return table;
}

inline BettiTable hh_homology_table(const VarList& vars,
                                    const HochschildModule& N,
                                    WeightWindow window, int threads = 1) {
  if (auto err = N.check(vars); !err.empty())
    throw std::invalid_argument("inconsistent module data: " + err);
  const SpaceDescriptor desc = hh_chain_descriptor(vars, N);
  const int m = static_cast<int>(vars->size());
  struct Task { int i, w; };
  std::vector<Task> tasks;
  for (int i = 0; i <= m; ++i)
    for (int w = window.min; w <= window.max; ++w) tasks.push_back({i, w});
  std::vector<long> dims(tasks.size());
  detail::parallel_for(static_cast<int>(tasks.size()), threads, [&](int k) {
    const auto [i, w] = tasks[k];
    const int dim = graded_slice(desc, i, w).dimension();
    const int out_rank = rank_kernel(hh_chain_differential(vars, N, i, w)).rank;
    const int in_rank =
        i == m ? 0 : rank_kernel(hh_chain_differential(vars, N, i + 1, w)).rank;
    dims[k] = dim - out_rank - in_rank;
  });
  BettiTable table;
  table.kind = "chain";
  table.window = window;
  for (size_t k = 0; k < tasks.size(); ++k)
    table.entries[{tasks[k].i, tasks[k].w}] = dims[k];
  return table;
}

// Λ ⊗ M with Λ = Λ^m Der(A), free of rank one in weight -m. As a bimodule
// over a commutative A it is symmetric, so tensoring only shifts weights.
inline HochschildModule twist_tensor(const VarList& vars,
                                     const HochschildModule& M) {
  HochschildModule out = M;
  const int m = static_cast<int>(vars->size());
  for (int& w : out.generator_weights) w -= m;
  return out;
}

// HH^i(A, M) against HH_{m-i}(A, Λ ⊗ M); expected uniform shift 0.
inline DualityReport vdb_duality_report(const VarList& vars,
                                        const HochschildModule& M,
                                        WeightWindow window, int threads = 1) {
  const int m = static_cast<int>(vars->size());
  BettiTable left = hh_cohomology_table(vars, M, window, threads);
  BettiTable right =
      hh_homology_table(vars, twist_tensor(vars, M), window, threads);
  return compare_tables(std::move(left), std::move(right), m);
}

// Ext^i_{A^e}(A, A^e) per weight slice, from Hom_{A^e}(Koszul, A^e): the
// complex A^e ⊗ Λ^•(k^m)^* with differential wedging by Σ_j (x_j - x'_j)ξ_j^*.
// For smooth polynomial A this is concentrated in degree m with the free
// rank-one outcome of weight -m; the table makes that checkable.
inline BettiTable ext_ae_table(int m, WeightWindow window, int threads = 1) {
  std::vector<std::string> names;
  for (int j = 0; j < m; ++j) names.push_back("x" + std::to_string(j));
  for (int j = 0; j < m; ++j) names.push_back("y" + std::to_string(j));
  VarList vars = make_vars(std::move(names));
  const SpaceDescriptor desc{2 * m, m, -1, {0}};
  auto differential = [&](int i, int w) {
    const GradedBasis src = graded_slice(desc, i, w);
    const GradedBasis dst = graded_slice(desc, i + 1, w);
    SparseMatrix mat(dst.dimension(), src.dimension());
    for (int col = 0; col < src.dimension(); ++col) {
      const BasisElement& b = src.elements()[col];
      Poly mono = Poly::monomial(vars, b.exponents, 1);
      for (int j = 0; j < m; ++j) {
        MultiIndex arg;
        int sgn = detail::insert_sign(j, b.multi_index, arg);
        if (sgn == 0) continue;
        Poly factor = Poly::variable(vars, j) - Poly::variable(vars, m + j);
        detail::scatter(mat, dst, arg, {mono * factor}, col, sgn);
      }
    }
    return mat;
  };
  struct Task { int i, w; };
  std::vector<Task> tasks;
  for (int i = 0; i <= m; ++i)
    for (int w = window.min; w <= window.max; ++w) tasks.push_back({i, w});
  std::vector<long> dims(tasks.size());
  detail::parallel_for(static_cast<int>(tasks.size()), threads, [&](int k) {
    const auto [i, w] = tasks[k];
    const int dim = graded_slice(desc, i, w).dimension();
    const int out_rank = rank_kernel(differential(i, w)).rank;
    const int in_rank = i == 0 ? 0 : rank_kernel(differential(i - 1, w)).rank;
    dims[k] = dim - out_rank - in_rank;
  });
  BettiTable table;
  table.kind = "cochain";
  table.window = window;
  for (size_t k = 0; k < tasks.size(); ++k)
    table.entries[{tasks[k].i, tasks[k].w}] = dims[k];
  return table;
}

}  // namespace hopfdual
