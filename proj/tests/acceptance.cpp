// Acceptance gate: nine end-to-end criteria, one PASS/FAIL line each.
// Receives the CLI binary path as argv[1] for the determinism criterion.

#include <hopfdual/complexes.hpp>
#include <hopfdual/hochschild.hpp>
#include <hopfdual/hopf_checks.hpp>
#include <hopfdual/structure_file.hpp>
#include <hopfdual/vl_model.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using namespace hopfdual;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int number, const std::string& title, bool pass, double seconds,
            double limit, const std::string& detail) {
  const bool ok = pass && seconds < limit;
  if (!ok) ++g_failures;
  std::ostringstream line;
  line << "criterion " << number << " [" << title << "]: "
       << (ok ? "PASS" : "FAIL") << " (" << seconds << "s of " << limit
       << "s budget)";
  if (!pass && !detail.empty()) line << " — " << detail;
  if (pass && seconds >= limit) line << " — over time budget";
  std::cout << line.str() << "\n";
}

template <typename F>
void criterion(int number, const std::string& title, double limit, F&& body) {
  std::string detail;
  bool pass = false;
  const auto start = Clock::now();
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  report(number, title, pass, seconds, limit, detail);
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FlatLeftModule rank2_symp2_module(const PoissonStructure& pi) {
  // nilpotent flat connection on A^2: ∇_{dx} g_1 = g_0
  FlatLeftModule m;
  m.rank = 2;
  m.generator_weights = {0, 1};
  m.action.assign(2, std::vector<std::vector<Poly>>(
                         2, std::vector<Poly>(2, Poly::zero(pi.vars()))));
  m.action[0][0][1] = Poly::constant(pi.vars(), 1);
  return m;
}

// --- criterion bodies ---------------------------------------------------

bool jacobi_equivalence(std::string& detail) {
  for (const auto& name : builtin_poisson_names()) {
    PoissonStructure pi = builtin_poisson(name);
    const bool schouten =
        schouten_bracket(pi.as_bivector(), pi.as_bivector()).is_zero();
    const bool brute = !pi.jacobi_witness().has_value();
    if (schouten != brute) {
      detail = "Schouten and Jacobiator routes disagree on " + name;
      return false;
    }
    const bool expected = name != "jfail";
    if (brute != expected) {
      detail = name + (expected ? " unexpectedly fails" : " unexpectedly passes");
      return false;
    }
  }
  return true;
}

bool complexes_well_formed(std::string& detail) {
  const WeightWindow window{-6, 10};
  for (const auto& name : valid_poisson_names()) {
    PoissonStructure pi = builtin_poisson(name);
    LieRinehartPresentation L = to_lie_rinehart(pi);
    const int t = pi.homogeneity_degree();
    FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), L.rank());
    RightModuleData N = huebschmann_right_action(pi);
    for (int i = 0; i + 1 <= L.rank(); ++i) {
      for (int w = window.min; w <= window.max; ++w) {
        SparseMatrix dd = cochain_differential(L, M, t, i + 1, w + t - 2) *
                          cochain_differential(L, M, t, i, w);
        if (!dd.is_zero()) {
          detail = "d^2 != 0 on " + name + " at (i=" + std::to_string(i) +
                   ", w=" + std::to_string(w) + ")";
          return false;
        }
        SparseMatrix bb = chain_differential(L, N, t, i, w + t - 2) *
                          chain_differential(L, N, t, i + 1, w);
        if (!bb.is_zero()) {
          detail = "boundary^2 != 0 on " + name + " at (i=" +
                   std::to_string(i + 1) + ", w=" + std::to_string(w) + ")";
          return false;
        }
      }
    }
  }
  // Hochschild, both directions, m = 2 with coefficients A and Der(A)
  std::vector<std::string> names = {"u", "v"};
  VarList vars = make_vars(std::move(names));
  for (const HochschildModule& M :
       {HochschildModule::symmetric(vars, {0}),
        HochschildModule::symmetric(vars, {-1, -1})}) {
    for (int i = 0; i < 2; ++i) {
      for (int w = window.min; w <= window.max; ++w) {
        SparseMatrix dd = hh_cochain_differential(vars, M, i + 1, w) *
                          hh_cochain_differential(vars, M, i, w);
        SparseMatrix bb = hh_chain_differential(vars, M, i + 1, w) *
                          hh_chain_differential(vars, M, i + 2, w);
        if (!dd.is_zero() || !bb.is_zero()) {
          detail = "Hochschild differential fails to square to zero";
          return false;
        }
      }
    }
  }
  return true;
}

bool twisted_duality(std::string& detail) {
  const WeightWindow window{-6, 8};
  std::optional<int> common_shift;
  auto run_case = [&](const std::string& label, const PoissonStructure& pi,
                      const FlatLeftModule& M) {
    DualityReport rep = duality_report(pi, M, window);
    if (!rep.pass || !rep.shift) {
      detail = "duality fails on " + label;
      return false;
    }
    if (!common_shift) common_shift = *rep.shift;
    if (*rep.shift != *common_shift) {
      detail = "shift differs on " + label + ": " + std::to_string(*rep.shift) +
               " vs " + std::to_string(*common_shift);
      return false;
    }
    return true;
  };
  for (const std::string name : {"symp2", "aff1", "so3", "quad2"}) {
    PoissonStructure pi = builtin_poisson(name);
    FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), pi.nvars());
    if (!run_case(name + " (M=A)", pi, M)) return false;
  }
  PoissonStructure symp2 = builtin_poisson("symp2");
  if (!run_case("symp2 (rank-2 module)", symp2, rank2_symp2_module(symp2)))
    return false;
  return true;
}

bool untwisted_mismatch(std::string& detail) {
  PoissonStructure pi = builtin_poisson("aff1");
  FlatLeftModule M = FlatLeftModule::trivial(pi.vars(), pi.nvars());
  DualityReport rep = duality_report(pi, M, {-6, 8}, 1, /*untwisted=*/true);
  if (rep.pass) {
    detail = "untwisted comparison unexpectedly passes on aff1";
    return false;
  }
  if (rep.mismatches.empty()) {
    detail = "no mismatch entries reported";
    return false;
  }
  return true;
}

bool unimodular_degeneration(std::string& detail) {
  const WeightWindow window{-4, 6};
  for (const std::string name : {"symp2", "so3"}) {
    PoissonStructure pi = builtin_poisson(name);
    const int n = pi.nvars();
    RightModuleData twist = twist_module(pi);
    for (int j = 0; j < n; ++j)
      if (!twist.action[j][0][0].is_zero()) {
        detail = "twist generator action nonzero on " + name;
        return false;
      }
    LieRinehartPresentation L = to_lie_rinehart(pi);
    const int t = pi.homogeneity_degree();
    RightModuleData ap = huebschmann_right_action(pi);
    RightModuleData twisted =
        combine_right_left(pi.vars(), ap,
                           twist_left_module(pi), L.rank())
            .data;
    BettiTable plain = homology_table(L, ap, t, window, 2);
    BettiTable shifted = homology_table(L, twisted, t, window, 2);
    // twisting a rank-one module of weight -n translates every slice by n
    for (const auto& [iw, dim] : shifted.entries) {
      const auto [i, w] = iw;
      if (!plain.has(i, w + n)) continue;
      if (plain.at(i, w + n) != dim) {
        detail = "weight translation by n fails on " + name + " at (i=" +
                 std::to_string(i) + ", w=" + std::to_string(w) + ")";
        return false;
      }
    }
  }
  return true;
}

bool vdb_duality(std::string& detail) {
  const WeightWindow window{-4, 8};
  for (int m = 1; m <= 2; ++m) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back("x" + std::to_string(i));
    VarList vars = make_vars(std::move(names));
    for (const auto& [label, M] :
         {std::pair<std::string, HochschildModule>{
              "A", HochschildModule::symmetric(vars, {0})},
          {"Der(A)",
           HochschildModule::symmetric(vars, std::vector<int>(m, -1))}}) {
      DualityReport rep = vdb_duality_report(vars, M, window, 2);
      if (!rep.pass) {
        detail = "VdB duality fails for m=" + std::to_string(m) +
                 ", M=" + label;
        return false;
      }
    }
    // HKR closed forms for M = A: HH^i has slice dimension
    // C(m,i)·#monomials(w+i); HH_i of the twisted module C(m,i)·#monomials(w+m-i)
    HochschildModule A = HochschildModule::symmetric(vars, {0});
    BettiTable co = hh_cohomology_table(vars, A, window, 2);
    BettiTable ho = hh_homology_table(vars, twist_tensor(vars, A), window, 2);
    for (const auto& [iw, dim] : co.entries) {
      const auto [i, w] = iw;
      if (dim != binom(m, i) * count_monomials(m, w + i)) {
        detail = "HKR cochain count fails at m=" + std::to_string(m);
        return false;
      }
    }
    for (const auto& [iw, dim] : ho.entries) {
      const auto [i, w] = iw;
      if (dim != binom(m, i) * count_monomials(m, w + m - i)) {
        detail = "HKR chain count fails at m=" + std::to_string(m);
        return false;
      }
    }
  }
  return true;
}

bool ext_concentration(std::string& detail) {
  const WeightWindow window{-4, 4};
  for (int m = 1; m <= 2; ++m) {
    BettiTable table = ext_ae_table(m, window, 2);
    for (const auto& [iw, dim] : table.entries) {
      const auto [i, w] = iw;
      // zero off the top degree; in degree m, free of rank one over A with
      // generator weight -m: the slice dimension is the Hilbert function of
      // A shifted by m, and the generator slice w = -m is exactly 1.
      const long expected = i == m ? count_monomials(m, w + m) : 0;
      if (dim != expected) {
        detail = "Ext table wrong at m=" + std::to_string(m) + ", (i=" +
                 std::to_string(i) + ", w=" + std::to_string(w) +
                 "): " + std::to_string(dim);
        return false;
      }
    }
    if (table.at(m, -m) != 1) {
      detail = "generator slice is not one-dimensional at m=" +
               std::to_string(m);
      return false;
    }
  }
  return true;
}

bool structure_identity_suite(std::string& detail) {
  auto all = [&](const CheckReport& rep, const std::string& label) {
    for (const auto& r : rep.results)
      if (!r.pass) {
        detail = label + " / " + rep.subject + " / " + r.name;
        return false;
      }
    return true;
  };
  for (const auto& [label, alg] :
       {std::pair<std::string, FiniteAlgebra>{"Ae-dual-numbers",
                                              dual_numbers()},
        {"Ae-uppertriangular2", upper_triangular2()}}) {
    AeHopf H(alg);
    if (!all(check_left_bialgebroid_axioms(H), label)) return false;
    if (!all(check_translation_identities(H), label)) return false;
    if (!all(check_antipode_properties(H), label)) return false;
    if (!all(check_module_structure_formulas(H), label)) return false;
    if (!all(check_AS_dualizing(H), label)) return false;
  }
  for (const std::string name : {"aff1", "so3"}) {
    PoissonStructure pi = builtin_poisson(name);
    const std::string label = "VL-" + name;
    if (!all(check_vl_bialgebroid_axioms(pi), label)) return false;
    if (!all(check_vl_translation_identities(pi), label)) return false;
    if (!all(check_vl_antipode_properties(pi), label)) return false;
    if (!all(check_vl_module_consistency(pi), label)) return false;
  }
  return true;
}

// --- determinism over the CLI -------------------------------------------

std::string g_cli;

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, out};
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool determinism(std::string& detail) {
  const std::vector<std::string> commands = {
      "jacobi builtin:aff1 --format json",
      "jacobi builtin:jfail --format json",
      "cohomology builtin:zero2 --format json",
      "cohomology builtin:symp2 --coefficients twist --format json",
      "homology builtin:aff1 --coefficients twist --format json",
      "duality builtin:symp2 --format json",
      "duality builtin:aff1 --untwisted-comparison --format json",
      "duality builtin:so3 --max-weight 4 --format json",
      "duality builtin:quad2 --format json",
      "hochschild builtin:HH-poly1 --duality --format json",
      "hochschild builtin:HH-poly2 --format json",
      "hochschild builtin:HH-poly0 --duality --format json",
      "axioms builtin:Ae-dual-numbers --format json",
      "axioms builtin:Ae-uppertriangular2 --format json",
      "axioms builtin:VL-aff1 --format json",
  };
  auto strip = [](const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    j.erase("timing_ms");
    return j.dump(2);
  };
  for (const auto& cmd : commands) {
    auto [ca, oa] = run_cli(cmd);
    auto [cb, ob] = run_cli(cmd);
    auto [cc, oc] = run_cli(cmd + " --threads 3");
    if (ca != cb || ca != cc) {
      detail = "exit codes differ for: " + cmd;
      return false;
    }
    std::string sa = strip(oa);
    if (sa != strip(ob) || sa != strip(oc)) {
      detail = "reports differ modulo timing for: " + cmd;
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-hopfdual-binary>\n";
    return 2;
  }
  g_cli = argv[1];
  criterion(1, "Jacobi equivalence (Schouten vs Jacobiator)", 1.0,
            jacobi_equivalence);
  criterion(2, "d^2 = 0 on all complexes, window [-6,10]", 30.0,
            complexes_well_formed);
  criterion(3, "twisted duality, uniform shift across fixtures", 60.0,
            twisted_duality);
  criterion(4, "necessity of the twist on aff1", 10.0, untwisted_mismatch);
  criterion(5, "unimodular degeneration on symp2/so3", 10.0,
            unimodular_degeneration);
  criterion(6, "Van den Bergh duality and HKR counts", 20.0, vdb_duality);
  criterion(7, "Ext concentration over the enveloping algebra", 10.0,
            ext_concentration);
  criterion(8, "structure-identity suite", 10.0, structure_identity_suite);
  criterion(9, "report determinism across runs and thread counts", 120.0,
            determinism);
  if (g_failures == 0) {
    std::cout << "acceptance: all 9 criteria passed\n";
    return 0;
  }
  std::cerr << "acceptance: " << g_failures << " criterion(s) failed\n";
  return 1;
}
