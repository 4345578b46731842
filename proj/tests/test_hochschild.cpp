#include <hopfdual/hochschild.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hopfdual;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

VarList coords(int m) {
  std::vector<std::string> names;
  for (int j = 0; j < m; ++j) names.push_back("x" + std::to_string(j));
  return make_vars(std::move(names));
}

}  // namespace

TEST_CASE("koszul differentials square to zero on all slices") {
  for (int m : {1, 2, 3}) {
    VarList vars = coords(m);
    // nontrivial but valid bimodule: rank two, [x_0, -] acts through a
    // nilpotent matrix with a linear entry
    HochschildModule M = HochschildModule::symmetric(vars, {0, 0});
    M.commutator[0][0][1] = Poly::variable(vars, 0);
    REQUIRE(M.check(vars).empty());
    for (int i = 0; i + 1 <= m; ++i) {
      for (int w = -6; w <= 10; ++w) {
        SparseMatrix c1 = hh_cochain_differential(vars, M, i, w);
        SparseMatrix c2 = hh_cochain_differential(vars, M, i + 1, w);
        CHECK((c2 * c1).nnz() == 0);
        SparseMatrix b2 = hh_chain_differential(vars, M, i + 2, w);
        SparseMatrix b1 = hh_chain_differential(vars, M, i + 1, w);
        CHECK((b1 * b2).nnz() == 0);
      }
    }
  }
}

TEST_CASE("non-commuting bimodule data is rejected") {
  VarList vars = coords(2);
  HochschildModule M = HochschildModule::symmetric(vars, {0, 1, 2});
  M.commutator[0][0][1] = Poly::variable(vars, 0);
  M.commutator[1][1][2] = Poly::variable(vars, 0);
  // [x_0,[x_1,g_2]] = x_0^2 g_0 but [x_1,[x_0,g_2]] = 0
  CHECK_FALSE(M.check(vars).empty());
  CHECK_THROWS_AS(hh_cohomology_table(vars, M, {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("HH of the line matches the HKR picture") {
  VarList vars = coords(1);
  HochschildModule A = HochschildModule::symmetric(vars, {0});
  BettiTable hh = hh_cohomology_table(vars, A, {-3, 5});
  for (int w = -3; w <= 5; ++w) {
    CHECK(hh.at(0, w) == (w >= 0 ? 1 : 0));
    CHECK(hh.at(1, w) == (w >= -1 ? 1 : 0));  // A·∂, weight of ∂ is -1
  }
  BettiTable hhlow = hh_homology_table(vars, A, {-3, 5});
  for (int w = -3; w <= 5; ++w) {
    CHECK(hhlow.at(0, w) == (w >= 0 ? 1 : 0));
    CHECK(hhlow.at(1, w) == (w >= 1 ? 1 : 0));  // f dx, weight of dx is +1
  }
}

TEST_CASE("HKR closed-form counts hold for all degrees and weights") {
  for (int m : {1, 2, 3}) {
    VarList vars = coords(m);
    HochschildModule A = HochschildModule::symmetric(vars, {0});
    BettiTable up = hh_cohomology_table(vars, A, {-4, 6});
    BettiTable down = hh_homology_table(vars, A, {-4, 6});
    for (const auto& [iw, dim] : up.entries) {
      const auto [i, w] = iw;
      CHECK(dim == binom(m, i) * count_monomials(m, w + i));
      CHECK(down.at(i, w) == binom(m, i) * count_monomials(m, w - i));
    }
  }
}

TEST_CASE("plane bivector and top form slices") {
  VarList vars = coords(2);
  HochschildModule A = HochschildModule::symmetric(vars, {0});
  CHECK(hh_cohomology_table(vars, A, {-2, -2}).at(2, -2) == 1);  // ∂x∧∂y
  CHECK(hh_homology_table(vars, A, {2, 2}).at(2, 2) == 1);       // dx∧dy
}

TEST_CASE("HH vanishes above the variable count") {
  VarList vars = coords(1);
  HochschildModule A = HochschildModule::symmetric(vars, {0});
  SpaceDescriptor up = hh_cochain_descriptor(vars, A);
  SpaceDescriptor down = hh_chain_descriptor(vars, A);
  for (int w = -3; w <= 3; ++w) {
    CHECK(graded_slice(up, 2, w).dimension() == 0);
    CHECK(graded_slice(down, 2, w).dimension() == 0);
  }
}

TEST_CASE("van den bergh duality passes with shift zero") {
  for (int m : {1, 2}) {
    VarList vars = coords(m);
    HochschildModule A = HochschildModule::symmetric(vars, {0});
    DualityReport rep = vdb_duality_report(vars, A, {-4, 8});
    INFO("m = " << m);
    REQUIRE(rep.pass);
    CHECK(*rep.shift == 0);
  }
  // nontrivial coefficients: Der(A) on the line is free of weight -1
  VarList line = coords(1);
  HochschildModule der = HochschildModule::symmetric(line, {-1});
  DualityReport rep = vdb_duality_report(line, der, {-4, 8});
  REQUIRE(rep.pass);
  CHECK(*rep.shift == 0);
}

TEST_CASE("Ext over the enveloping algebra concentrates in the top degree") {
  for (int m : {1, 2}) {
    BettiTable ext = ext_ae_table(m, {-m - 2, 4});
    for (const auto& [iw, dim] : ext.entries) {
      const auto [i, w] = iw;
      long expect = i == m ? count_monomials(m, w + m) : 0;
      INFO("m=" << m << " i=" << i << " w=" << w);
      CHECK(dim == expect);
    }
  }
}
