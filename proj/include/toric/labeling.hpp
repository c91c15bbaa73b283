#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric/graph.hpp"

namespace toric {

using Label = int;

/// Bijection from vertices 0..n-1 to labels 1..n, kept together with its
/// inverse so both lookups are O(1).
class Labeling {
 public:
  Labeling() = default;

  /// Validates that `word` (word[v] = label of v) is a permutation of 1..n.
  explicit Labeling(std::vector<Label> word);

  static Labeling identity(int n);

  int size() const { return static_cast<int>(forward_.size()); }
  Label label_of(Vertex v) const { return forward_[v]; }
  Vertex vertex_of(Label l) const { return inverse_[l - 1]; }
  std::span<const Label> word() const { return forward_; }

  /// Exchanges the positions of labels a and b (unconditionally).
  void swap_labels(Label a, Label b);

  /// Adds k to every label modulo n, keeping values in 1..n.
  void shift(int k);

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.forward_ == b.forward_;
  }
  friend auto operator<=>(const Labeling& a, const Labeling& b) {
    return a.forward_ <=> b.forward_;
  }

 private:
  std::vector<Label> forward_;
  std::vector<Vertex> inverse_;
};

/// Digit word for n <= 9 ("45123"), comma list otherwise ("10,1,2,...").
std::string to_string(const Labeling& s);

/// Accepts a digit word when n <= 9, or a comma-separated list for any n.
Labeling parse_labeling(std::string_view text, int n);

/// Lexicographic rank of the word in 0..n!-1 (Lehmer code).
std::uint64_t rank(const Labeling& s);
Labeling unrank(int n, std::uint64_t r);

std::uint64_t factorial(int n);

}  // namespace toric
