#pragma once

#include <string>

namespace toric {

/// Enumeration limits. Factorial and exponential state spaces make these the
/// difference between seconds and hours.
struct Caps {
  int trees = 8;       // max n for exhaustive tree enumeration
  int forests = 7;     // max n for forest enumeration (2^(n(n-1)/2) subsets)
  int fs = 8;          // max n for friends-and-strangers components
  int census = 10;     // max n for anything visiting all n! labelings
  int edges = 24;      // max |E| for Acyc(G) enumeration

  /// Parses "trees=8,forests=7,fs=8,census=10,edges=24" (any subset).
  static Caps parse(const std::string& text);

  /// Defaults overridden by the TORIC_CAPS environment variable, if set.
  static Caps from_environment();

  /// Overrides every n cap (trees, forests, fs, census) with `n`.
  Caps with_max_n(int n) const;
};

inline constexpr const char* kCapsEnvVar = "TORIC_CAPS";

}  // namespace toric
