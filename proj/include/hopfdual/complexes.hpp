#pragma once

// Rinehart (co)chain complexes per graded weight slice, Betti tables and
// the twisted duality report.
//
// Cochain side: Hom_A(Λ^i L, M) with the Chevalley-Eilenberg differential;
// a weight-w slice maps to weight w + (t-2), t the homogeneity degree of
// the bracket. Chain side: N ⊗_A Λ^i L with the boundary using the right
// action; a weight-w slice also maps to weight w + (t-2).

#include <hopfdual/grading.hpp>
#include <hopfdual/matrix.hpp>
#include <hopfdual/modules.hpp>
#include <hopfdual/poisson.hpp>

#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace hopfdual {

struct WeightWindow {
  int min = 0, max = 0;
  bool contains(int w) const { return w >= min && w <= max; }
};

inline SpaceDescriptor cochain_descriptor(const LieRinehartPresentation& L,
                                          const FlatLeftModule& M) {
  return {L.nvars(), L.rank(), -1, M.generator_weights};
}

inline SpaceDescriptor chain_descriptor(const LieRinehartPresentation& L,
                                        const RightModuleData& N) {
  return {L.nvars(), L.rank(), +1, N.generator_weights};
}

namespace detail {

// sign of inserting l into the increasing multi-index rest; 0 if present
inline int insert_sign(int l, const MultiIndex& rest, MultiIndex& out) {
  out.clear();
  out.reserve(rest.size() + 1);
  int pos = 0;
  for (size_t q = 0; q < rest.size(); ++q) {
    if (rest[q] == l) return 0;
    if (rest[q] < l) ++pos;
  }
  bool placed = false;
  for (size_t q = 0; q < rest.size(); ++q) {
    if (!placed && rest[q] > l) {
      out.push_back(l);
      placed = true;
    }
    out.push_back(rest[q]);
  }
  if (!placed) out.push_back(l);
  return pos % 2 == 0 ? 1 : -1;
}

// Scatter a module-valued coefficient into matrix column `col`; any term
// that misses the target basis is a grading failure.
inline void scatter(SparseMatrix& mat, const GradedBasis& target,
                    const MultiIndex& mi, const ModuleElement& value, int col,
                    int sign) {
  for (size_t g = 0; g < value.size(); ++g) {
    for (const auto& [e, c] : value[g].terms()) {
      int row = target.index_of(mi, e, static_cast<int>(g));
      if (row < 0)
        throw std::logic_error(
            "differential entry off the forced weight (grading bug)");
      mat.add(row, col, sign > 0 ? c : -c);
    }
  }
}

}  // namespace detail

// Matrix of d : Hom(Λ^i L, M)_w -> Hom(Λ^{i+1} L, M)_{w+t-2}.
inline SparseMatrix cochain_differential(const LieRinehartPresentation& L,
                                         const FlatLeftModule& M, int t,
                                         int i, int w) {
  const SpaceDescriptor desc = cochain_descriptor(L, M);
  const GradedBasis src = graded_slice(desc, i, w);
  const GradedBasis dst = graded_slice(desc, i + 1, w + t - 2);
  SparseMatrix mat(dst.dimension(), src.dimension());
  const auto targets = multi_indices(L.rank(), i + 1);
  for (int col = 0; col < src.dimension(); ++col) {
    const BasisElement& b = src.elements()[col];
    ModuleElement val = detail::zero_element(L.vars(), M.rank);
    val[b.generator] = Poly::monomial(L.vars(), b.exponents, 1);
    for (const MultiIndex& J : targets) {
      // anchor/action terms
      for (size_t tpos = 0; tpos < J.size(); ++tpos) {
        MultiIndex rest;
        rest.reserve(J.size() - 1);
        for (size_t q = 0; q < J.size(); ++q)
          if (q != tpos) rest.push_back(J[q]);
        if (rest != b.multi_index) continue;
        ModuleElement acted = M.apply(L, J[tpos], val);
        detail::scatter(mat, dst, J, acted, col, tpos % 2 == 0 ? 1 : -1);
      }
      // bracket terms
      for (size_t s = 0; s + 1 < J.size(); ++s) {
        for (size_t tp = s + 1; tp < J.size(); ++tp) {
          MultiIndex rest;
          rest.reserve(J.size() - 2);
          for (size_t q = 0; q < J.size(); ++q)
            if (q != s && q != tp) rest.push_back(J[q]);
          const auto br = L.bracket_gens(J[s], J[tp]);
          const int base_sign = (s + tp) % 2 == 0 ? 1 : -1;
          for (int l = 0; l < L.rank(); ++l) {
            if (br[l].is_zero()) continue;
            MultiIndex arg;
            int isgn = detail::insert_sign(l, rest, arg);
            if (isgn == 0 || arg != b.multi_index) continue;
            ModuleElement term = detail::zero_element(L.vars(), M.rank);
            term[b.generator] =
                br[l] * Poly::monomial(L.vars(), b.exponents, 1);
            detail::scatter(mat, dst, J, term, col, base_sign * isgn);
          }
        }
      }
    }
  }
  return mat;
}

// Matrix of ∂ : (N ⊗ Λ^i L)_w -> (N ⊗ Λ^{i-1} L)_{w+t-2}.
inline SparseMatrix chain_differential(const LieRinehartPresentation& L,
                                       const RightModuleData& N, int t,
                                       int i, int w) {
  const SpaceDescriptor desc = chain_descriptor(L, N);
  const GradedBasis src = graded_slice(desc, i, w);
  const GradedBasis dst = graded_slice(desc, i - 1, w + t - 2);
  SparseMatrix mat(dst.dimension(), src.dimension());
  for (int col = 0; col < src.dimension(); ++col) {
    const BasisElement& b = src.elements()[col];
    const MultiIndex& I = b.multi_index;
    ModuleElement val = detail::zero_element(L.vars(), N.rank);
    val[b.generator] = Poly::monomial(L.vars(), b.exponents, 1);
    // action terms: Σ_t (-1)^t (n·e_{I_t}) ⊗ e_{I \ I_t}
    for (size_t tpos = 0; tpos < I.size(); ++tpos) {
      MultiIndex rest;
      rest.reserve(I.size() - 1);
      for (size_t q = 0; q < I.size(); ++q)
        if (q != tpos) rest.push_back(I[q]);
      ModuleElement acted = N.apply(L, I[tpos], val);
      detail::scatter(mat, dst, rest, acted, col, tpos % 2 == 0 ? 1 : -1);
    }
    // bracket terms: Σ_{s<t} (-1)^{s+t} n ⊗ [e_s, e_t] ∧ rest
    for (size_t s = 0; s + 1 < I.size(); ++s) {
      for (size_t tp = s + 1; tp < I.size(); ++tp) {
        MultiIndex rest;
        rest.reserve(I.size() - 2);
        for (size_t q = 0; q < I.size(); ++q)
          if (q != s && q != tp) rest.push_back(I[q]);
        const auto br = L.bracket_gens(I[s], I[tp]);
        const int base_sign = (s + tp) % 2 == 0 ? 1 : -1;
        for (int l = 0; l < L.rank(); ++l) {
          if (br[l].is_zero()) continue;
          MultiIndex arg;
          int isgn = detail::insert_sign(l, rest, arg);
          if (isgn == 0) continue;
          ModuleElement term = detail::zero_element(L.vars(), N.rank);
          term[b.generator] = br[l] * val[b.generator];
          detail::scatter(mat, dst, arg, term, col, base_sign * isgn);
        }
      }
    }
  }
  return mat;
}

// --- Betti tables -------------------------------------------------------

struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // (degree, weight) -> dim
  std::string kind;     // "cochain" or "chain"
  WeightWindow window;
  std::string fixture;

  long at(int i, int w) const {
    auto it = entries.find({i, w});
    return it == entries.end() ? -1 : it->second;
  }
  bool has(int i, int w) const { return entries.count({i, w}) != 0; }
};

namespace detail {

// Run tasks 0..n-1 on up to `threads` workers; results land by index, so
// the outcome is schedule-independent.
template <typename F>
inline void parallel_for(int n, int threads, F&& f) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  const int k = std::min(threads, n);
  pool.reserve(k);
  for (int i = 0; i < k; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Exact Betti numbers h^i_w for i in 0..n, w in window. Incoming and
// outgoing differentials are always assembled in full, including at
// weights outside the window, so edge weights are never truncated.
inline BettiTable cohomology_table(const LieRinehartPresentation& L,
                                   const FlatLeftModule& M, int t,
                                   WeightWindow window, int threads = 1) {
  const SpaceDescriptor desc = cochain_descriptor(L, M);
  const int n = L.rank();
  struct Task { int i, w; };
  std::vector<Task> tasks;
  for (int i = 0; i <= n; ++i)
    for (int w = window.min; w <= window.max; ++w) tasks.push_back({i, w});
  std::vector<long> dims(tasks.size());
  detail::parallel_for(static_cast<int>(tasks.size()), threads, [&](int k) {
    const auto [i, w] = tasks[k];
    const int dim = graded_slice(desc, i, w).dimension();
    const int out_rank = rank_kernel(cochain_differential(L, M, t, i, w)).rank;
    const int in_rank =
        i == 0 ? 0
               : rank_kernel(cochain_differential(L, M, t, i - 1, w - (t - 2)))
                     .rank;
    dims[k] = dim - out_rank - in_rank;
  });
  BettiTable table;
  table.kind = "cochain";
  table.window = window;
  for (size_t k = 0; k < tasks.size(); ++k)
    table.entries[{tasks[k].i, tasks[k].w}] = dims[k];
  return table;
}

inline BettiTable homology_table(const LieRinehartPresentation& L,
                                 const RightModuleData& N, int t,
                                 WeightWindow window, int threads = 1) {
  const SpaceDescriptor desc = chain_descriptor(L, N);
  const int n = L.rank();
  struct Task { int i, w; };
  std::vector<Task> tasks;
  for (int i = 0; i <= n; ++i)
    for (int w = window.min; w <= window.max; ++w) tasks.push_back({i, w});
  std::vector<long> dims(tasks.size());
  detail::parallel_for(static_cast<int>(tasks.size()), threads, [&](int k) {
    const auto [i, w] = tasks[k];
    const int dim = graded_slice(desc, i, w).dimension();
    const int out_rank = rank_kernel(chain_differential(L, N, t, i, w)).rank;
    const int in_rank =
        i == n ? 0
               : rank_kernel(chain_differential(L, N, t, i + 1, w - (t - 2)))
                     .rank;
    dims[k] = dim - out_rank - in_rank;
  });
  BettiTable table;
  table.kind = "chain";
  table.window = window;
  for (size_t k = 0; k < tasks.size(); ++k)
    table.entries[{tasks[k].i, tasks[k].w}] = dims[k];
  return table;
}

// --- Duality ------------------------------------------------------------

struct DualityMismatch {
  int degree, weight;
  long left, right;
};

struct DualityReport {
  BettiTable left;    // cohomology
  BettiTable right;   // twisted homology
  std::optional<int> shift;
  std::vector<DualityMismatch> mismatches;  // for the reported shift (or 0)
  bool pass = false;
};

// PASS iff one shift s identifies h^i_w with h_{n-i, w+s} on every entry
// whose partner lies inside the computed window.
inline DualityReport compare_tables(BettiTable left, BettiTable right, int n) {
  DualityReport rep;
  rep.left = std::move(left);
  rep.right = std::move(right);
  auto mismatches_for = [&](int s) {
    std::vector<DualityMismatch> mm;
    for (const auto& [iw, dim] : rep.left.entries) {
      const auto [i, w] = iw;
      if (!rep.right.has(n - i, w + s)) continue;
      long other = rep.right.at(n - i, w + s);
      if (dim != other) mm.push_back({i, w, dim, other});
    }
    return mm;
  };
  std::vector<int> candidates;
  candidates.push_back(0);
  for (int a = 1; a <= 2 * n; ++a) {
    candidates.push_back(a);
    candidates.push_back(-a);
  }
  for (int s : candidates) {
    auto mm = mismatches_for(s);
    if (mm.empty()) {
      rep.shift = s;
      rep.pass = true;
      return rep;
    }
  }
  rep.shift = std::nullopt;
  rep.pass = false;
  rep.mismatches = mismatches_for(0);
  return rep;
}

// Full pipeline of the twisted duality: cohomology with coefficients in M
// against homology with coefficients in A_P ⊗ (twist ⊗ M).
inline DualityReport duality_report(const PoissonStructure& pi,
                                    const FlatLeftModule& M,
                                    WeightWindow window, int threads = 1,
                                    bool untwisted = false) {
  LieRinehartPresentation L = to_lie_rinehart(pi);
  const int t = pi.homogeneity_degree();
  if (auto err = M.check_flatness(L); !err.empty())
    throw std::invalid_argument("coefficient module is not flat: " + err);
  BettiTable left = cohomology_table(L, M, t, window, threads);
  RightModuleData ap = huebschmann_right_action(pi);
  FlatLeftModule coeff =
      untwisted ? M
                : tensor_left(pi.vars(), twist_left_module(pi), M, L.rank());
  CombinedRightModule combined =
      combine_right_left(pi.vars(), ap, coeff, L.rank());
  BettiTable right = homology_table(L, combined.data, t, window, threads);
  return compare_tables(std::move(left), std::move(right), L.rank());
}

}  // namespace hopfdual
