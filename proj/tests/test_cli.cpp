// Exercises the command-line tool end to end: exit codes, report formats,
// determinism, and structure-file loading. Receives the binary path as
// argv[1] (wired through CMake); uses a plain main so the harness can own
// the process invocations.

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_cli;
int g_failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    check(false, "popen failed for: " + cmd);
    return r;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "hopfdual_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// The timing field is the only permitted difference between runs.
std::string strip_timing(const std::string& json_text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(json_text);
  j.erase("timing_ms");
  return j.dump(2);
}

void test_exit_codes() {
  check(run("jacobi builtin:aff1").exit_code == 0, "jacobi aff1 exits 0");
  RunResult jf = run("jacobi builtin:jfail");
  check(jf.exit_code == 1, "jacobi jfail exits 1");
  check(contains(jf.out, "jacobi: FAIL"), "jfail verdict is FAIL");
  check(contains(jf.out, "(x,y,z)"), "jfail reports the witness triple");
  check(contains(jf.out, "jacobiator:"), "jfail reports the Jacobiator");

  auto bad_poly = write_temp("bad_poly.json", R"({
    "kind": "poisson", "variables": ["x","y"],
    "bracket": [["0","x+*y"],["-x-y","0"]]})");
  check(run("jacobi " + bad_poly.string()).exit_code == 2,
        "malformed polynomial exits 2");

  auto bad_schema = write_temp("bad_schema.json",
                               R"({"kind":"poisson","variables":["x","y"]})");
  check(run("jacobi " + bad_schema.string()).exit_code == 2,
        "missing bracket field exits 2");

  check(run("jacobi builtin:nosuch").exit_code == 2,
        "unknown builtin exits 2");
  check(run("bogus builtin:aff1").exit_code == 2,
        "unknown subcommand exits 2");
  check(run("duality builtin:HH-poly1").exit_code == 2,
        "wrong structure kind exits 2");
  check(run("axioms builtin:aff1").exit_code == 2,
        "axioms on plain poisson kind exits 2");
  check(run("cohomology builtin:jfail").exit_code == 2,
        "non-Jacobi bracket is an input error for cohomology");

  // upper-triangular table with E12*E22 corrupted to E11: associativity
  // fails, which the loader rejects.
  auto bad_assoc = write_temp("bad_assoc.json", R"({
    "kind": "finite-algebra", "basis": ["E11","E12","E22"],
    "unit": ["1","0","1"],
    "mult": [[["1","0","0"],["0","1","0"],["0","0","0"]],
             [["0","0","0"],["0","0","0"],["1","0","0"]],
             [["0","0","0"],["0","0","0"],["0","0","1"]]]})");
  check(run("axioms " + bad_assoc.string()).exit_code == 2,
        "non-associative structure constants exit 2");

  // curvature obstruction: connection coefficient x on a rank-1 module
  auto not_flat = write_temp("not_flat.json", R"({
    "kind": "poisson", "variables": ["x","y"],
    "bracket": [["0","1"],["-1","0"]],
    "module": {"rank": 1, "generator_weights": [0],
               "connection": [[["x"]],[["0"]]]}})");
  check(run("duality " + not_flat.string() + " --coefficients file")
                .exit_code == 2,
        "non-flat coefficient module exits 2");
}

void test_structure_files() {
  // rank-2 flat module on symp2 (nilpotent connection), duality must hold
  auto rank2 = write_temp("rank2.json", R"({
    "kind": "poisson", "name": "symp2-rank2", "variables": ["x","y"],
    "bracket": [["0","1"],["-1","0"]],
    "module": {"rank": 2, "generator_weights": [0,1],
               "connection": [[["0","1"],["0","0"]],
                              [["0","0"],["0","0"]]]},
    "window": {"min": -4, "max": 6}})");
  RunResult r = run("duality " + rank2.string() + " --coefficients file");
  check(r.exit_code == 0, "rank-2 flat module duality exits 0");
  check(contains(r.out, "duality: PASS"), "rank-2 flat module duality PASS");
  check(contains(r.out, "symp2-rank2"), "file name field is echoed");

  // the window block bounds the emitted table
  RunResult j = run("cohomology " + rank2.string() + " --format json");
  nlohmann::json doc = nlohmann::json::parse(j.out);
  for (const auto& entry : doc.at("tables").at(0).at("entries")) {
    int w = entry.at(1).get<int>();
    check(w >= -4 && w <= 6, "window block bounds the table weights");
  }

  auto hh = write_temp("hh1.json", R"({
    "kind": "hochschild", "variables": ["x"],
    "module": {"rank": 1, "generator_weights": [0],
               "commutator": [[["0"]]]}})");
  RunResult h = run("hochschild " + hh.string() + " --duality");
  check(h.exit_code == 0, "hochschild file input exits 0");
  check(contains(h.out, "vdb-duality: PASS"), "hochschild file duality PASS");
}

void test_report_values() {
  RunResult csv =
      run("cohomology builtin:zero2 --min-weight 0 --max-weight 0 "
          "--format csv");
  check(csv.exit_code == 0, "zero2 cohomology exits 0");
  check(contains(csv.out, "table,cochain,0,0,1"), "zero2 h^0_0 = 1");
  check(contains(csv.out, "table,cochain,1,0,4"), "zero2 h^1_0 = 4");
  check(contains(csv.out, "table,cochain,2,0,3"), "zero2 h^2_0 = 3");

  RunResult txt = run("duality builtin:symp2");
  check(contains(txt.out, "duality: PASS"), "symp2 duality PASS");
  check(contains(txt.out, "shift: 0"), "symp2 duality shift 0");

  RunResult un = run("duality builtin:aff1 --untwisted-comparison");
  check(un.exit_code == 0, "aff1 twisted duality exits 0");
  check(contains(un.out, "untwisted-comparison: MISMATCH"),
        "aff1 untwisted comparison reports a mismatch");

  check(run("homology builtin:aff1 --coefficients twist").exit_code == 0,
        "homology with twist coefficients exits 0");

  // JSON round-trip: parse, re-serialize, parse again; fields are stable
  RunResult js = run("duality builtin:so3 --format json");
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(js.out);
  for (const char* key :
       {"command", "fixture", "tables", "verdicts", "shift", "version",
        "timing_ms"})
    check(doc.contains(key), std::string("JSON report has field ") + key);
  check(nlohmann::ordered_json::parse(doc.dump()) == doc,
        "JSON report round-trips");
}

void test_determinism() {
  const std::vector<std::string> commands = {
      "jacobi builtin:aff1 --format json",
      "cohomology builtin:zero2 --format json",
      "homology builtin:aff1 --coefficients twist --format json",
      "duality builtin:symp2 --format json",
      "duality builtin:aff1 --untwisted-comparison --format json",
      "hochschild builtin:HH-poly1 --duality --format json",
      "axioms builtin:Ae-dual-numbers --format json",
      "axioms builtin:VL-aff1 --format json",
  };
  for (const auto& cmd : commands) {
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    RunResult c = run(cmd + " --threads 3");
    check(a.exit_code == b.exit_code && a.exit_code == c.exit_code,
          "exit codes agree across runs: " + cmd);
    std::string sa = strip_timing(a.out), sb = strip_timing(b.out),
                sc = strip_timing(c.out);
    check(sa == sb, "two runs byte-identical modulo timing: " + cmd);
    check(sa == sc, "--threads changes timing only: " + cmd);
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-hopfdual-binary>\n";
    return 2;
  }
  g_cli = argv[1];
  test_exit_codes();
  test_structure_files();
  test_report_values();
  test_determinism();
  if (g_failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cerr << "test_cli: " << g_failures << " check(s) failed\n";
  return 1;
}
