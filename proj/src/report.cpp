#include "toric/report.hpp"

#include <iomanip>
#include <sstream>

namespace toric {

bool Report::passed() const {
  for (const auto& v : verdicts)
    if (!v.pass && !v.conjecture) return false;
  return true;
}

Verdict* Report::find(const std::string& name) {
  for (auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["name"] = v.name;
  j["pass"] = v.pass;
  j["counterexample"] = v.counterexample ? nlohmann::ordered_json(*v.counterexample) : nullptr;
  return j;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["scope"] = r.scope;
  j["graphs"] = r.graphs;
  j["labelings"] = r.labelings;
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) {
    auto vj = verdict_json(v);
    vj["checked"] = v.checked;
    if (v.conjecture) vj["conjecture"] = true;
    verdicts.push_back(std::move(vj));
  }
  j["verdicts"] = std::move(verdicts);
  if (!r.rows.empty()) j["rows"] = r.rows;
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nullptr;
  j["pass"] = r.passed();
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "suite: " << r.suite << "\n";
  if (!r.scope.empty()) out << "scope: " << r.scope.dump() << "\n";
  if (r.seed) out << "seed: " << *r.seed << "\n";
  out << "graphs: " << r.graphs << "  labelings: " << r.labelings << "\n";
  for (const auto& row : r.rows) out << "  " << row.dump() << "\n";
  for (const auto& v : r.verdicts) {
    out << (v.pass ? "PASS " : (v.conjecture ? "MISMATCH " : "FAIL ")) << std::left
        << std::setw(40) << v.name << " checked=" << v.checked;
    if (v.counterexample) out << "  counterexample: " << *v.counterexample;
    out << "\n";
  }
  out << (r.passed() ? "result: pass" : "result: FAIL") << "\n";
  return out.str();
}

}  // namespace toric
