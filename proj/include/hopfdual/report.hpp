#pragma once

// Machine-readable command reports: a single JSON document plus CSV and
// aligned-text renderings derived from the same data. Everything except
// the timing field is a deterministic function of the inputs.

#include <hopfdual/complexes.hpp>

#include <nlohmann/json.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hopfdual {

struct Report {
  std::string command;
  std::string fixture;
  std::vector<BettiTable> tables;
  std::vector<std::pair<std::string, std::string>> verdicts;  // ordered
  std::optional<int> shift;
  std::string version = "1.0.0";
  long timing_ms = 0;

  bool all_pass() const {
    for (const auto& [name, value] : verdicts)
      if (value == "FAIL") return false;
    return true;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["fixture"] = fixture;
    j["tables"] = nlohmann::ordered_json::array();
    for (const BettiTable& t : tables) {
      nlohmann::ordered_json jt;
      jt["kind"] = t.kind;
      jt["entries"] = nlohmann::ordered_json::array();
      for (const auto& [iw, dim] : t.entries)
        jt["entries"].push_back({iw.first, iw.second, dim});
      j["tables"].push_back(std::move(jt));
    }
    j["verdicts"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : verdicts) j["verdicts"][name] = value;
    if (shift)
      j["shift"] = *shift;
    else
      j["shift"] = nullptr;
    j["version"] = version;
    j["timing_ms"] = timing_ms;
    return j;
  }

  std::string to_csv() const {
    std::ostringstream out;
    out << "command," << command << "\n";
    out << "fixture," << fixture << "\n";
    out << "version," << version << "\n";
    if (shift) out << "shift," << *shift << "\n";
    for (const auto& [name, value] : verdicts)
      out << "verdict," << name << "," << value << "\n";
    for (const BettiTable& t : tables)
      for (const auto& [iw, dim] : t.entries)
        out << "table," << t.kind << "," << iw.first << "," << iw.second << ","
            << dim << "\n";
    return out.str();
  }

  std::string to_text() const {
    std::ostringstream out;
    out << command << " on " << fixture << " (v" << version << ")\n";
    for (const auto& [name, value] : verdicts)
      out << "  " << name << ": " << value << "\n";
    if (shift) out << "  shift: " << *shift << "\n";
    for (const BettiTable& t : tables) {
      out << t.kind << " table (degree, weight -> dim, zero rows omitted):\n";
      int last_degree = INT_MIN;
      bool any = false;
      for (const auto& [iw, dim] : t.entries) {
        if (dim == 0) continue;
        any = true;
        if (iw.first != last_degree) {
          if (last_degree != INT_MIN) out << "\n";
          out << "  i=" << iw.first << ":";
          last_degree = iw.first;
        }
        out << " [w=" << iw.second << "] " << dim;
      }
      if (any) out << "\n";
      if (!any) out << "  (all entries zero on the window)\n";
    }
    return out.str();
  }

  std::string render(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    if (format == "csv") return to_csv();
    return to_text();
  }
};

}  // namespace hopfdual
