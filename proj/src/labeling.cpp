#include "toric/labeling.hpp"

#include <bit>
#include <charconv>
#include <numeric>

namespace toric {

Labeling::Labeling(std::vector<Label> word) : forward_(std::move(word)) {
  const int n = size();
  inverse_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    Label l = forward_[v];
    if (l < 1 || l > n) throw ToricError("label " + std::to_string(l) + " out of range 1.." +
                                         std::to_string(n));
    if (inverse_[l - 1] != -1) throw ToricError("label " + std::to_string(l) + " repeated");
    inverse_[l - 1] = v;
  }
}

Labeling Labeling::identity(int n) {
  std::vector<Label> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Labeling(std::move(w));
}

void Labeling::swap_labels(Label a, Label b) {
  Vertex va = inverse_[a - 1], vb = inverse_[b - 1];
  forward_[va] = b;
  forward_[vb] = a;
  inverse_[a - 1] = vb;
  inverse_[b - 1] = va;
}

void Labeling::shift(int k) {
  const int n = size();
  if (n == 0) return;
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return;
  for (Vertex v = 0; v < n; ++v) {
    forward_[v] = (forward_[v] - 1 + k) % n + 1;
    inverse_[forward_[v] - 1] = v;
  }
}

std::string to_string(const Labeling& s) {
  std::string out;
  const bool digits = s.size() <= 9;
  for (int v = 0; v < s.size(); ++v) {
    if (!digits && v) out += ',';
    out += std::to_string(s.label_of(v));
  }
  return out;
}

Labeling parse_labeling(std::string_view text, int n) {
  if (n < 1) throw ToricError("labeling needs n >= 1");
  std::vector<Label> word;
  if (text.find(',') == std::string_view::npos && n <= 9) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ToricError("labeling: unexpected character '" +
                                                 std::string(1, ch) + "'");
      word.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      auto field = text.substr(pos, next - pos);
      int value = 0;
      auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc{} || end != field.data() + field.size() || field.empty())
        throw ToricError("labeling: bad entry '" + std::string(field) + "'");
      word.push_back(value);
      pos = next + 1;
    }
  }
  if (static_cast<int>(word.size()) != n)
    throw ToricError("labeling has length " + std::to_string(word.size()) + ", expected " +
                     std::to_string(n));
  return Labeling(std::move(word));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(const Labeling& s) {
  const int n = s.size();
  std::uint64_t r = 0;
  // Bit i set when label i+1 is still unused.
  std::uint64_t unused = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int v = 0; v < n; ++v) {
    int l = s.label_of(v) - 1;
    std::uint64_t smaller = unused & ((std::uint64_t{1} << l) - 1);
    r = r * static_cast<std::uint64_t>(n - v) + static_cast<std::uint64_t>(std::popcount(smaller));
    unused &= ~(std::uint64_t{1} << l);
  }
  return r;
}

Labeling unrank(int n, std::uint64_t r) {
  if (n < 1 || n > 20 || r >= factorial(n))
    throw ToricError("unrank: rank " + std::to_string(r) + " out of range for n=" + std::to_string(n));
  std::vector<int> digits(n);
  for (int v = n - 1; v >= 0; --v) {
    std::uint64_t base = static_cast<std::uint64_t>(n - v);
    digits[v] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<Label> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<Label> word(n);
  for (int v = 0; v < n; ++v) {
    word[v] = pool[digits[v]];
    pool.erase(pool.begin() + digits[v]);
  }
  return Labeling(std::move(word));
}

}  // namespace toric
