#pragma once

// JSON structure files and the builtin fixture registry shared by the CLI
// and its tests. All loader failures throw std::invalid_argument; the CLI
// maps those to exit code 2.
//
// Schema (UTF-8 JSON):
//   kind = "poisson":
//     { "kind": "poisson", "name": "...", "variables": ["x","y"],
//       "bracket": [["0","y"],["-y","0"]],
//       "module": { "rank": R, "generator_weights": [..],
//                   "connection": [[j][a][b] polynomial strings] },   # optional
//       "window": { "min": -6, "max": 8 } }                           # optional
//   kind = "finite-algebra":
//     { "kind": "finite-algebra", "name": "...", "basis": ["1","x"],
//       "unit": ["1","0"], "mult": [[i][j][k] rational strings] }
//   kind = "hochschild":
//     { "kind": "hochschild", "name": "...", "variables": ["x"],
//       "module": { "rank": R, "generator_weights": [..],
//                   "commutator": [[j][a][b] polynomial strings] },   # optional
//       "window": ... }                                               # optional
// Polynomial strings use the same grammar as everywhere else in the
// library; rationals are integer or "p/q" strings.

#include <hopfdual/finite_algebra.hpp>
#include <hopfdual/fixtures.hpp>
#include <hopfdual/hochschild.hpp>
#include <hopfdual/modules.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfdual {

struct StructureFile {
  std::string kind;  // "poisson" | "finite-algebra" | "hochschild" | "vl"
  std::string name;
  std::optional<PoissonStructure> poisson;     // poisson, vl
  std::optional<FlatLeftModule> module;        // poisson coefficient block
  std::optional<FiniteAlgebra> algebra;        // finite-algebra
  VarList hvars;                               // hochschild
  std::optional<HochschildModule> hochschild;  // hochschild
  std::optional<WeightWindow> window;
};

namespace detail {

inline const nlohmann::json& json_field(const nlohmann::json& j,
                                        const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::string json_string(const nlohmann::json& j, const char* what) {
  if (!j.is_string())
    throw std::invalid_argument(std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline std::vector<std::string> json_string_list(const nlohmann::json& j,
                                                 const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(json_string(e, what));
  return out;
}

inline std::vector<int> json_int_list(const nlohmann::json& j,
                                      const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw std::invalid_argument(std::string(what) +
                                  " must contain integers");
    out.push_back(e.get<int>());
  }
  return out;
}

// [j][a][b] polynomial strings -> parsed matrices, with shape checks.
inline std::vector<std::vector<std::vector<Poly>>> json_action_matrices(
    const nlohmann::json& j, const VarList& vars, int outer, int rank,
    const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != outer)
    throw std::invalid_argument(std::string(what) + " must be a list of " +
                                std::to_string(outer) + " matrices");
  std::vector<std::vector<std::vector<Poly>>> out;
  for (const auto& mat : j) {
    if (!mat.is_array() || static_cast<int>(mat.size()) != rank)
      throw std::invalid_argument(std::string(what) + " matrices must be " +
                                  std::to_string(rank) + " x " +
                                  std::to_string(rank));
    std::vector<std::vector<Poly>> rows;
    for (const auto& row : mat) {
      if (!row.is_array() || static_cast<int>(row.size()) != rank)
        throw std::invalid_argument(std::string(what) + " matrices must be " +
                                    std::to_string(rank) + " x " +
                                    std::to_string(rank));
      std::vector<Poly> r;
      for (const auto& cell : row)
        r.push_back(parse_poly(json_string(cell, what), vars));
      rows.push_back(std::move(r));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

struct ModuleBlock {
  int rank = 1;
  std::vector<int> generator_weights;
  std::vector<std::vector<std::vector<Poly>>> matrices;
};

inline ModuleBlock json_module_block(const nlohmann::json& j,
                                     const VarList& vars, int outer,
                                     const char* matrix_key) {
  if (!j.is_object())
    throw std::invalid_argument("module block must be an object");
  ModuleBlock b;
  const auto& rank = json_field(j, "rank");
  if (!rank.is_number_integer() || rank.get<int>() <= 0)
    throw std::invalid_argument("module rank must be a positive integer");
  b.rank = rank.get<int>();
  b.generator_weights =
      json_int_list(json_field(j, "generator_weights"), "generator_weights");
  if (static_cast<int>(b.generator_weights.size()) != b.rank)
    throw std::invalid_argument("generator_weights length must equal rank");
  b.matrices = json_action_matrices(json_field(j, matrix_key), vars, outer,
                                    b.rank, matrix_key);
  return b;
}

inline std::optional<WeightWindow> json_window(const nlohmann::json& j) {
  auto it = j.find("window");
  if (it == j.end()) return std::nullopt;
  if (!it->is_object())
    throw std::invalid_argument("window must be an object");
  WeightWindow w;
  const auto& lo = json_field(*it, "min");
  const auto& hi = json_field(*it, "max");
  if (!lo.is_number_integer() || !hi.is_number_integer())
    throw std::invalid_argument("window bounds must be integers");
  w.min = lo.get<int>();
  w.max = hi.get<int>();
  if (w.min > w.max) throw std::invalid_argument("window min exceeds max");
  return w;
}

}  // namespace detail

inline StructureFile parse_structure_json(const nlohmann::json& j,
                                          const std::string& default_name) {
  using detail::json_field;
  using detail::json_string;
  if (!j.is_object())
    throw std::invalid_argument("structure file must be a JSON object");
  StructureFile sf;
  sf.kind = json_string(json_field(j, "kind"), "kind");
  sf.name = j.contains("name") ? json_string(j.at("name"), "name")
                               : default_name;
  if (sf.kind == "poisson") {
    VarList vars = make_vars(
        detail::json_string_list(json_field(j, "variables"), "variables"));
    const int m = static_cast<int>(vars->size());
    const auto& br = json_field(j, "bracket");
    if (!br.is_array() || static_cast<int>(br.size()) != m)
      throw std::invalid_argument("bracket must be an m x m matrix");
    std::vector<std::vector<Poly>> entries;
    for (const auto& row : br) {
      if (!row.is_array() || static_cast<int>(row.size()) != m)
        throw std::invalid_argument("bracket must be an m x m matrix");
      std::vector<Poly> r;
      for (const auto& cell : row)
        r.push_back(parse_poly(json_string(cell, "bracket entry"), vars));
      entries.push_back(std::move(r));
    }
    // Jacobi is a mathematical verdict (cmd_jacobi), not a schema error.
    sf.poisson.emplace(vars, std::move(entries), /*allow_jacobi_failure=*/true);
    if (j.contains("module")) {
      detail::ModuleBlock b =
          detail::json_module_block(j.at("module"), vars, m, "connection");
      FlatLeftModule mod;
      mod.rank = b.rank;
      mod.generator_weights = std::move(b.generator_weights);
      mod.action = std::move(b.matrices);
      sf.module = std::move(mod);
    }
    sf.window = detail::json_window(j);
    return sf;
  }
  if (sf.kind == "finite-algebra") {
    std::vector<std::string> basis =
        detail::json_string_list(json_field(j, "basis"), "basis");
    const int d = static_cast<int>(basis.size());
    auto rational_vec = [&](const nlohmann::json& row, const char* what) {
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        throw std::invalid_argument(std::string(what) + " must have length " +
                                    std::to_string(d));
      Vec v;
      for (const auto& cell : row)
        v.push_back(parse_rational(json_string(cell, what)));
      return v;
    };
    const auto& mult = json_field(j, "mult");
    if (!mult.is_array() || static_cast<int>(mult.size()) != d)
      throw std::invalid_argument("mult must be a d x d table of vectors");
    std::vector<std::vector<Vec>> table;
    for (const auto& row : mult) {
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        throw std::invalid_argument("mult must be a d x d table of vectors");
      std::vector<Vec> r;
      for (const auto& cell : row) r.push_back(rational_vec(cell, "mult"));
      table.push_back(std::move(r));
    }
    Vec unit = rational_vec(json_field(j, "unit"), "unit");
    // FiniteAlgebra verifies unit laws and associativity, throwing
    // invalid_argument on failure: associativity failure is exit code 2.
    sf.algebra.emplace(std::move(basis), std::move(table), std::move(unit));
    return sf;
  }
  if (sf.kind == "hochschild") {
    sf.hvars = make_vars(
        detail::json_string_list(json_field(j, "variables"), "variables"));
    const int m = static_cast<int>(sf.hvars->size());
    if (j.contains("module")) {
      detail::ModuleBlock b =
          detail::json_module_block(j.at("module"), sf.hvars, m, "commutator");
      HochschildModule mod;
      mod.rank = b.rank;
      mod.generator_weights = std::move(b.generator_weights);
      mod.commutator = std::move(b.matrices);
      sf.hochschild = std::move(mod);
    } else {
      sf.hochschild = HochschildModule::symmetric(sf.hvars, {0});
    }
    if (auto err = sf.hochschild->check(sf.hvars); !err.empty())
      throw std::invalid_argument("inconsistent module data: " + err);
    sf.window = detail::json_window(j);
    return sf;
  }
  throw std::invalid_argument("unknown structure kind: " + sf.kind);
}

inline StructureFile load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
  return parse_structure_json(j, path);
}

// --- builtin registry ---------------------------------------------------

// Poisson fixtures by name; "Ae-dual-numbers"/"Ae-uppertriangular2" for the
// finite-algebra suites; "VL-<poisson>" for the enveloping-algebra suites;
// "HH-poly<m>" (polynomial algebra in m variables, M = A) and "HH-der<m>"
// (M = Der(A)) for the Hochschild command.
inline StructureFile builtin_structure(const std::string& name) {
  StructureFile sf;
  sf.name = name;
  if (name == "Ae-dual-numbers") {
    sf.kind = "finite-algebra";
    sf.algebra = dual_numbers();
    return sf;
  }
  if (name == "Ae-uppertriangular2") {
    sf.kind = "finite-algebra";
    sf.algebra = upper_triangular2();
    return sf;
  }
  if (name.rfind("VL-", 0) == 0) {
    sf.kind = "vl";
    sf.poisson = builtin_poisson(name.substr(3));
    return sf;
  }
  if (name.rfind("HH-poly", 0) == 0 || name.rfind("HH-der", 0) == 0) {
    const bool der = name.rfind("HH-der", 0) == 0;
    const std::string digits = name.substr(der ? 6 : 7);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("unknown builtin fixture: " + name);
    const int m = std::stoi(digits);
    if (m > 4)
      throw std::invalid_argument("builtin Hochschild fixtures stop at m=4");
    std::vector<std::string> vars;
    for (int i = 0; i < m; ++i) vars.push_back("x" + std::to_string(i));
    sf.kind = "hochschild";
    sf.hvars = make_vars(std::move(vars));
    // Both modules are symmetric over the polynomial algebra; Der(A) is
    // free on ∂_0..∂_{m-1} in weight -1.
    sf.hochschild = der ? HochschildModule::symmetric(
                              sf.hvars, std::vector<int>(m, -1))
                        : HochschildModule::symmetric(sf.hvars, {0});
    return sf;
  }
  sf.kind = "poisson";
  sf.poisson = builtin_poisson(name);  // throws on unknown names
  return sf;
}

// "builtin:<name>" or a filesystem path.
inline StructureFile resolve_structure(const std::string& input) {
  if (input.rfind("builtin:", 0) == 0) {
    StructureFile sf = builtin_structure(input.substr(8));
    sf.name = input.substr(8);
    return sf;
  }
  return load_structure_file(input);
}

}  // namespace hopfdual
