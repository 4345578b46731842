#pragma once

// Weight-graded basis enumeration for the finite-dimensional slices
// Λ^k L ⊗ M and Hom_A(Λ^k L, M).
//
// Global conventions: deg x_i = +1; exterior generators carry weight +1
// (chain side) or -1 (cochain side); coefficient-module generators carry
// their declared weights. Bases are ordered lexicographically on
// (exterior multi-index, exponent vector, generator index) so matrices
// are reproducible.

#include <hopfdual/poly.hpp>

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

namespace hopfdual {

using MultiIndex = std::vector<int>;  // strictly increasing, 0-based

struct SpaceDescriptor {
  int num_variables = 0;
  int exterior_rank = 0;
  int exterior_weight = 1;  // +1 (chain) or -1 (cochain)
  std::vector<int> generator_weights = {0};
};

struct BasisElement {
  MultiIndex multi_index;
  ExpVec exponents;
  int generator = 0;

  friend bool operator<(const BasisElement& a, const BasisElement& b) {
    return std::tie(a.multi_index, a.exponents, a.generator) <
           std::tie(b.multi_index, b.exponents, b.generator);
  }
  friend bool operator==(const BasisElement& a, const BasisElement& b) {
    return a.multi_index == b.multi_index && a.exponents == b.exponents &&
           a.generator == b.generator;
  }
};

class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(int exterior_degree, int weight,
              std::vector<BasisElement> elements)
      : exterior_degree_(exterior_degree), weight_(weight),
        elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    for (size_t i = 0; i < elements_.size(); ++i)
      index_[key(elements_[i])] = static_cast<int>(i);
  }

  int exterior_degree() const { return exterior_degree_; }
  int weight() const { return weight_; }
  int dimension() const { return static_cast<int>(elements_.size()); }
  const std::vector<BasisElement>& elements() const { return elements_; }

  // -1 if absent
  int index_of(const MultiIndex& mi, const ExpVec& e, int gen) const {
    auto it = index_.find(std::make_tuple(mi, e, gen));
    return it == index_.end() ? -1 : it->second;
  }

 private:
  using Key = std::tuple<MultiIndex, ExpVec, int>;
  static Key key(const BasisElement& b) {
    return {b.multi_index, b.exponents, b.generator};
  }

  int exterior_degree_ = 0;
  int weight_ = 0;
  std::vector<BasisElement> elements_;
  std::map<Key, int> index_;
};

namespace detail {

inline void enumerate_monomials(int nvars, int degree,
                                std::vector<ExpVec>& out) {
  if (degree < 0) return;
  ExpVec cur(nvars, 0);
  // walk all exponent vectors of the given total degree
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur[var] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(cur);
    return;
  }
  rec(rec, 0, degree);
}

inline void enumerate_multi_indices(int n, int k,
                                    std::vector<MultiIndex>& out) {
  if (k < 0 || k > n) return;
  MultiIndex cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

inline std::vector<ExpVec> monomials_of_degree(int nvars, int degree) {
  std::vector<ExpVec> out;
  detail::enumerate_monomials(nvars, degree, out);
  return out;
}

inline long count_monomials(int nvars, int degree) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // C(degree + nvars - 1, nvars - 1)
  long r = 1;
  for (int i = 1; i <= nvars - 1; ++i) r = r * (degree + i) / i;
  return r;
}

inline std::vector<MultiIndex> multi_indices(int n, int k) {
  std::vector<MultiIndex> out;
  detail::enumerate_multi_indices(n, k, out);
  return out;
}

// Complete basis of the weight-w slice in exterior degree k.
inline GradedBasis graded_slice(const SpaceDescriptor& d, int k, int w) {
  std::vector<BasisElement> elems;
  for (const MultiIndex& mi : multi_indices(d.exterior_rank, k)) {
    for (size_t g = 0; g < d.generator_weights.size(); ++g) {
      int mono_degree = w - d.exterior_weight * k -
                        d.generator_weights[g];
      for (ExpVec& e : monomials_of_degree(d.num_variables, mono_degree))
        elems.push_back({mi, std::move(e), static_cast<int>(g)});
    }
  }
  return GradedBasis(k, w, std::move(elems));
}

}  // namespace hopfdual
