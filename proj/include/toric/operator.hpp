#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toric/graph.hpp"
#include "toric/labeling.hpp"

namespace toric {

/// A composable operator on labelings.
struct OperatorSpec {
  enum class Kind {
    toggle,              // tau_{i,j}
    promotion,           // Pro
    toric_promotion,     // TPro
    toric_promotion_pi,  // TPro_pi
    cyclic_shift,        // c^k
    composition,         // parts applied front to back
  };

  Kind kind = Kind::composition;
  int i = 0, j = 0;         // toggle
  int k = 0;                // cyclic_shift
  std::vector<int> pi;      // toric_promotion_pi, one-line form
  std::vector<OperatorSpec> parts;
  std::string name;         // text the spec was parsed from, if any

  static OperatorSpec toggle(int i, int j);
  static OperatorSpec promotion();
  static OperatorSpec toric_promotion();
  static OperatorSpec toric_promotion_pi(std::vector<int> pi);
  static OperatorSpec cyclic_shift(int k);
  static OperatorSpec composition(std::vector<OperatorSpec> parts);
  static OperatorSpec cpro();
  static OperatorSpec zeta(int n, int h);

  /// The grammar form when available, otherwise a generated description.
  std::string describe() const;
};

/// Flattened operator: a sequence of unconditional label shifts and
/// conditional toggles.
struct Step {
  enum class Kind { toggle, shift } kind;
  int a = 0, b = 0;  // toggle labels, or shift amount in `a`
};

class Program {
 public:
  Program() = default;
  Program(const OperatorSpec& op, int n);

  const std::vector<Step>& steps() const { return steps_; }
  int size() const { return n_; }

  void apply(const Graph& g, Labeling& s) const {
    for (const Step& st : steps_) {
      if (st.kind == Step::Kind::toggle) {
        if (!g.adjacent(s.vertex_of(st.a), s.vertex_of(st.b))) s.swap_labels(st.a, st.b);
      } else {
        s.shift(st.a);
      }
    }
  }

 private:
  void append(const OperatorSpec& op);

  int n_ = 0;
  std::vector<Step> steps_;
};

/// Grammar: "pro" | "tpro" | "cpro" | "c:k" | "tpro-pi:PERM" | "zeta:h" |
/// "toggles:i-j,i-j,..." | "id", with '>' chaining operators left to right.
OperatorSpec parse_operator(std::string_view text, int n);

Labeling apply(const Graph& g, const OperatorSpec& op, const Labeling& s);

/// Labelings after each primitive step, starting with s itself.
std::vector<Labeling> trace(const Graph& g, const OperatorSpec& op, const Labeling& s);

}  // namespace toric
