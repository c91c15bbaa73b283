#include "toric/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "toric/graph.hpp"

namespace toric {

Caps Caps::parse(const std::string& text) {
  Caps caps;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ToricError("caps: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ToricError("caps: bad value in '" + item + "'");
    }
    if (key == "trees") caps.trees = value;
    else if (key == "forests") caps.forests = value;
    else if (key == "fs") caps.fs = value;
    else if (key == "census") caps.census = value;
    else if (key == "edges") caps.edges = value;
    else throw ToricError("caps: unknown key '" + key + "'");
  }
  return caps;
}

Caps Caps::from_environment() {
  const char* env = std::getenv(kCapsEnvVar);
  return env ? parse(env) : Caps{};
}

Caps Caps::with_max_n(int n) const {
  Caps caps = *this;
  caps.trees = n;
  caps.forests = n;
  caps.fs = n;
  caps.census = n;
  return caps;
}

}  // namespace toric
