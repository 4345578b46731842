#include <hopfdual/complexes.hpp>
#include <hopfdual/fixtures.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hopfdual;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FlatLeftModule rank2_symp2_module(const PoissonStructure& pi) {
  // flat connection on A^2 over symp2: ∇_dx g_1 = g_0, everything else
  // plain; generator weights 0 and 1
  FlatLeftModule m;
  m.rank = 2;
  m.generator_weights = {0, 1};
  m.action.assign(2, std::vector<std::vector<Poly>>(
                         2, std::vector<Poly>(2, Poly::zero(pi.vars()))));
  m.action[0][0][1] = Poly::constant(pi.vars(), 1);
  return m;
}

}  // namespace

TEST_CASE("cochain differential squares to zero on every fixture") {
  for (const auto& name : valid_poisson_names()) {
    PoissonStructure pi = builtin_poisson(name);
    LieRinehartPresentation L = to_lie_rinehart(pi);
    const int t = pi.homogeneity_degree();
    FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), L.rank());
    for (int i = 0; i + 1 <= L.rank(); ++i) {
      for (int w = -4; w <= 8; ++w) {
        SparseMatrix d1 = cochain_differential(L, M, t, i, w);
        SparseMatrix d2 = cochain_differential(L, M, t, i + 1, w + t - 2);
        CHECK((d2 * d1).nnz() == 0);
      }
    }
  }
}

TEST_CASE("chain boundary squares to zero on every fixture") {
  for (const auto& name : valid_poisson_names()) {
    PoissonStructure pi = builtin_poisson(name);
    LieRinehartPresentation L = to_lie_rinehart(pi);
    const int t = pi.homogeneity_degree();
    RightModuleData ap = huebschmann_right_action(pi);
    FlatLeftModule tw = twist_left_module(pi);
    RightModuleData combined =
        combine_right_left(pi.vars(), ap, tw, L.rank()).data;
    for (const RightModuleData* N : {&ap, &combined}) {
      for (int i = 2; i <= L.rank(); ++i) {
        for (int w = -4; w <= 8; ++w) {
          SparseMatrix d1 = chain_differential(L, *N, t, i, w);
          SparseMatrix d2 = chain_differential(L, *N, t, i - 1, w + t - 2);
          CHECK((d2 * d1).nnz() == 0);
        }
      }
    }
  }
}

TEST_CASE("symplectic plane has trivial higher cohomology") {
  PoissonStructure pi = builtin_poisson("symp2");
  LieRinehartPresentation L = to_lie_rinehart(pi);
  FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), 2);
  BettiTable h = cohomology_table(L, M, pi.homogeneity_degree(), {-4, 6});
  for (const auto& [iw, dim] : h.entries) {
    long expect = (iw.first == 0 && iw.second == 0) ? 1 : 0;
    INFO("degree " << iw.first << " weight " << iw.second);
    CHECK(dim == expect);
  }
}

TEST_CASE("zero bracket cohomology equals the slice dimensions") {
  PoissonStructure pi = builtin_poisson("zero2");
  LieRinehartPresentation L = to_lie_rinehart(pi);
  FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), 2);
  BettiTable h = cohomology_table(L, M, pi.homogeneity_degree(), {-4, 6});
  CHECK(h.at(0, 0) == 1);
  CHECK(h.at(1, 0) == 4);
  CHECK(h.at(2, 0) == 3);
  for (const auto& [iw, dim] : h.entries) {
    // with zero differential h^i_w is the count of monomial wedge pairs
    long expect = binom(2, iw.first) * count_monomials(2, iw.second + iw.first);
    CHECK(dim == expect);
  }
}

TEST_CASE("so3 Casimir appears in degree zero at weight two") {
  PoissonStructure pi = builtin_poisson("so3");
  LieRinehartPresentation L = to_lie_rinehart(pi);
  FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), 3);
  BettiTable h = cohomology_table(L, M, pi.homogeneity_degree(), {0, 4});
  CHECK(h.at(0, 0) == 1);  // constants
  CHECK(h.at(0, 1) == 0);  // no linear Casimir
  CHECK(h.at(0, 2) == 1);  // x^2 + y^2 + z^2
}

TEST_CASE("euler characteristic along a weight diagonal is the slice sum") {
  for (const auto& name : valid_poisson_names()) {
    PoissonStructure pi = builtin_poisson(name);
    LieRinehartPresentation L = to_lie_rinehart(pi);
    const int t = pi.homogeneity_degree();
    FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), L.rank());
    const SpaceDescriptor desc = cochain_descriptor(L, M);
    BettiTable h = cohomology_table(L, M, t, {-12, 12});
    for (int w0 : {0, 1, 2, 3}) {
      long euler_h = 0, euler_c = 0;
      for (int i = 0; i <= L.rank(); ++i) {
        const int w = w0 + i * (t - 2);
        const long sign = i % 2 == 0 ? 1 : -1;
        REQUIRE(h.has(i, w));
        euler_h += sign * h.at(i, w);
        euler_c += sign * graded_slice(desc, i, w).dimension();
      }
      CHECK(euler_h == euler_c);
    }
  }
}

TEST_CASE("twisted duality holds on every fixture") {
  for (const auto& name : valid_poisson_names()) {
    PoissonStructure pi = builtin_poisson(name);
    FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), pi.nvars());
    DualityReport rep = duality_report(pi, M, {-4, 6});
    INFO("fixture " << name);
    REQUIRE(rep.pass);
    CHECK(rep.shift.has_value());
    CHECK(*rep.shift == 0);
  }
}

TEST_CASE("untwisted comparison fails for the non-unimodular fixture") {
  PoissonStructure pi = builtin_poisson("aff1");
  FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), 2);
  DualityReport rep = duality_report(pi, M, {-4, 6}, 1, /*untwisted=*/true);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.mismatches.empty());
}

TEST_CASE("for unimodular fixtures the twist is a pure weight shift") {
  for (const std::string name : {"zero2", "symp2", "so3"}) {
    PoissonStructure pi = builtin_poisson(name);
    FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), pi.nvars());
    DualityReport rep = duality_report(pi, M, {-4, 6}, 1, /*untwisted=*/true);
    INFO("fixture " << name);
    REQUIRE(rep.pass);
    CHECK(*rep.shift == pi.nvars());
  }
}

TEST_CASE("duality with a rank-two coefficient module") {
  PoissonStructure pi = builtin_poisson("symp2");
  LieRinehartPresentation L = to_lie_rinehart(pi);
  FlatLeftModule M = rank2_symp2_module(pi);
  REQUIRE(M.check_flatness(L).empty());
  DualityReport rep = duality_report(pi, M, {-4, 6});
  REQUIRE(rep.pass);
  CHECK(*rep.shift == 0);
}

TEST_CASE("tables are independent of the thread count") {
  PoissonStructure pi = builtin_poisson("so3");
  LieRinehartPresentation L = to_lie_rinehart(pi);
  FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), 3);
  BettiTable serial = cohomology_table(L, M, 1, {-3, 5}, 1);
  BettiTable parallel = cohomology_table(L, M, 1, {-3, 5}, 4);
  CHECK(serial.entries == parallel.entries);

  RightModuleData ap = huebschmann_right_action(pi);
  BettiTable s2 = homology_table(L, ap, 1, {-3, 5}, 1);
  BettiTable p2 = homology_table(L, ap, 1, {-3, 5}, 4);
  CHECK(s2.entries == p2.entries);
}
