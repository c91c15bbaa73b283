#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "toric/graph.hpp"

namespace toric::cli {

enum class Format { text, json, csv };

struct Command {
  std::string verb;  // step, orbit, census, order, flip-classes,
                     // double-flip-classes, fs-components, verify
  std::string graph;
  std::string op = "tpro";
  std::optional<std::string> labeling;
  std::uint64_t steps = 1;
  bool trace = false;
  Format format = Format::text;
  int threads = 0;  // 0: all cores
  std::uint64_t seed = 20210806;
  std::optional<int> max_n;
  std::optional<int> min_n;
  std::optional<std::string> out;

  // verify
  std::string suite;
  std::optional<std::uint64_t> random_graphs;
  std::optional<std::uint64_t> samples;
  std::optional<int> exhaustive_max_n;
};

enum ExitCode : int { kOk = 0, kTheoremFailure = 1, kUsage = 2 };

/// Grammar: "path:N" | "cycle:N" | "star:N" | "complete:N" | "prufer:a,b,..."
/// | "edges:N;u-v,u-v,..." | "file:PATH".
Graph parse_graph_spec(std::string_view text);

/// Parses argv into a Command. Throws CLI11 exceptions on bad usage; `help`
/// is set when the caller should print help and exit 0.
Command parse_args(int argc, const char* const* argv, std::string* help = nullptr);

/// Executes the command, writing the report to `out` and diagnostics to
/// `err`. Returns the process exit status.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + run with usage errors mapped to exit code 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
