#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace toric {

/// One named check. The first failure wins the counterexample slot; callers
/// feed checks in a fixed order so the slot is deterministic.
struct Verdict {
  std::string name;
  bool pass = true;
  std::optional<std::string> counterexample;
  std::uint64_t checked = 0;
  bool conjecture = false;  // failures are findings, not bugs

  explicit Verdict(std::string n = {}, bool is_conjecture = false)
      : name(std::move(n)), conjecture(is_conjecture) {}

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      counterexample = describe();
    }
  }

  void merge(const Verdict& other) {
    checked += other.checked;
    if (pass && !other.pass) {
      pass = false;
      counterexample = other.counterexample;
    }
  }
};

/// Result of a verification sweep.
struct Report {
  std::string suite;
  nlohmann::ordered_json scope = nlohmann::ordered_json::object();
  std::uint64_t graphs = 0;
  std::uint64_t labelings = 0;
  std::vector<Verdict> verdicts;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::optional<std::uint64_t> seed;

  /// True unless a non-conjecture verdict failed.
  bool passed() const;
  Verdict* find(const std::string& name);
};

nlohmann::ordered_json verdict_json(const Verdict& v);
nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace toric
