#pragma once

// Builtin structure fixtures used by the CLI and the test suites.

#include <hopfdual/poisson.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfdual {

// zero2:  m=2, zero bracket
// symp2:  {x,y} = 1            (t = 0, symplectic plane)
// aff1:   {x,y} = y            (t = 1, nonzero modular field)
// so3:    so(3)* linear        (t = 1, unimodular)
// quad2:  {x,y} = x*y          (t = 2, log-canonical)
// jfail:  {x,y}=y, {y,z}=z, {z,x}=x  (Jacobi fails)
inline PoissonStructure builtin_poisson(const std::string& name) {
  auto mk = [](std::vector<std::string> vars,
               std::vector<std::vector<std::string>> entries,
               bool allow_fail = false) {
    VarList v = make_vars(std::move(vars));
    std::vector<std::vector<Poly>> b;
    for (const auto& row : entries) {
      std::vector<Poly> r;
      for (const auto& s : row) r.push_back(parse_poly(s, v));
      b.push_back(std::move(r));
    }
    return PoissonStructure(v, std::move(b), allow_fail);
  };
  if (name == "zero2") return mk({"x", "y"}, {{"0", "0"}, {"0", "0"}});
  if (name == "symp2") return mk({"x", "y"}, {{"0", "1"}, {"-1", "0"}});
  if (name == "aff1") return mk({"x", "y"}, {{"0", "y"}, {"-y", "0"}});
  if (name == "so3")
    return mk({"x", "y", "z"},
              {{"0", "z", "-y"}, {"-z", "0", "x"}, {"y", "-x", "0"}});
  if (name == "quad2") return mk({"x", "y"}, {{"0", "x*y"}, {"-x*y", "0"}});
  if (name == "jfail")
    return mk({"x", "y", "z"},
              {{"0", "y", "-x"}, {"-y", "0", "z"}, {"x", "-z", "0"}}, true);
  throw std::invalid_argument("unknown builtin Poisson fixture: " + name);
}

inline const std::vector<std::string>& builtin_poisson_names() {
  static const std::vector<std::string> names = {"zero2", "symp2", "aff1",
                                                 "so3",   "quad2", "jfail"};
  return names;
}

inline const std::vector<std::string>& valid_poisson_names() {
  static const std::vector<std::string> names = {"zero2", "symp2", "aff1",
                                                 "so3", "quad2"};
  return names;
}

}  // namespace hopfdual
