#include "toric/operator.hpp"

#include <charconv>
#include <sstream>

#include "toric/dynamics.hpp"

namespace toric {

OperatorSpec OperatorSpec::toggle(int i, int j) {
  OperatorSpec op;
  op.kind = Kind::toggle;
  op.i = i;
  op.j = j;
  return op;
}

OperatorSpec OperatorSpec::promotion() {
  OperatorSpec op;
  op.kind = Kind::promotion;
  return op;
}

OperatorSpec OperatorSpec::toric_promotion() {
  OperatorSpec op;
  op.kind = Kind::toric_promotion;
  return op;
}

OperatorSpec OperatorSpec::toric_promotion_pi(std::vector<int> pi) {
  OperatorSpec op;
  op.kind = Kind::toric_promotion_pi;
  op.pi = std::move(pi);
  return op;
}

OperatorSpec OperatorSpec::cyclic_shift(int k) {
  OperatorSpec op;
  op.kind = Kind::cyclic_shift;
  op.k = k;
  return op;
}

OperatorSpec OperatorSpec::composition(std::vector<OperatorSpec> parts) {
  OperatorSpec op;
  op.kind = Kind::composition;
  op.parts = std::move(parts);
  return op;
}

OperatorSpec OperatorSpec::cpro() {
  auto op = composition({promotion(), cyclic_shift(1)});
  op.name = "cpro";
  return op;
}

OperatorSpec OperatorSpec::zeta(int n, int h) {
  auto op = toric_promotion_pi(zeta_permutation(n, h));
  op.name = "zeta:" + std::to_string(h);
  return op;
}

std::string OperatorSpec::describe() const {
  if (!name.empty()) return name;
  std::ostringstream out;
  switch (kind) {
    case Kind::toggle:
      out << "toggles:" << i << '-' << j;
      break;
    case Kind::promotion:
      out << "pro";
      break;
    case Kind::toric_promotion:
      out << "tpro";
      break;
    case Kind::toric_promotion_pi:
      out << "tpro-pi:";
      for (std::size_t x = 0; x < pi.size(); ++x) out << (x ? "," : "") << pi[x];
      break;
    case Kind::cyclic_shift:
      out << "c:" << k;
      break;
    case Kind::composition:
      if (parts.empty()) return "id";
      for (std::size_t x = 0; x < parts.size(); ++x) out << (x ? ">" : "") << parts[x].describe();
      break;
  }
  return out.str();
}

Program::Program(const OperatorSpec& op, int n) : n_(n) {
  if (n < 1) throw ToricError("operator needs n >= 1");
  append(op);
}

void Program::append(const OperatorSpec& op) {
  const int n = n_;
  auto toggle_step = [&](int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw ToricError("toggle label out of range 1.." + std::to_string(n));
    if (i == j) throw ToricError("toggle needs distinct labels");
    steps_.push_back({Step::Kind::toggle, i, j});
  };
  auto simple = [&](int i) { toggle_step(i, i == n ? 1 : i + 1); };
  switch (op.kind) {
    case OperatorSpec::Kind::toggle:
      toggle_step(op.i, op.j);
      break;
    case OperatorSpec::Kind::promotion:
      for (int i = 1; i < n; ++i) simple(i);
      break;
    case OperatorSpec::Kind::toric_promotion:
      if (n < 2) throw ToricError("toric promotion needs n >= 2");
      for (int i = 1; i <= n; ++i) simple(i);
      break;
    case OperatorSpec::Kind::toric_promotion_pi:
      if (n < 2) throw ToricError("toric promotion needs n >= 2");
      if (static_cast<int>(op.pi.size()) != n || !is_permutation_of_1_to_n(op.pi))
        throw ToricError("pi is not a permutation of 1.." + std::to_string(n));
      for (int i : op.pi) simple(i);
      break;
    case OperatorSpec::Kind::cyclic_shift: {
      int k = ((op.k % n) + n) % n;
      if (k) steps_.push_back({Step::Kind::shift, k, 0});
      break;
    }
    case OperatorSpec::Kind::composition:
      for (const auto& part : op.parts) append(part);
      break;
  }
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
    throw ToricError("operator: bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

OperatorSpec parse_single(std::string_view text, int n) {
  auto colon = text.find(':');
  auto head = text.substr(0, colon);
  auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;
  auto no_arg = [&] {
    if (has_arg) throw ToricError("operator '" + std::string(head) + "' takes no argument");
  };
  OperatorSpec op;
  if (head == "pro") {
    no_arg();
    op = OperatorSpec::promotion();
  } else if (head == "tpro") {
    no_arg();
    op = OperatorSpec::toric_promotion();
  } else if (head == "cpro") {
    no_arg();
    op = OperatorSpec::cpro();
  } else if (head == "id") {
    no_arg();
    op = OperatorSpec::composition({});
  } else if (head == "c") {
    op = OperatorSpec::cyclic_shift(parse_int(arg, "shift"));
  } else if (head == "zeta") {
    op = OperatorSpec::zeta(n, parse_int(arg, "h"));
  } else if (head == "tpro-pi") {
    auto perm = parse_labeling(arg, n);
    op = OperatorSpec::toric_promotion_pi({perm.word().begin(), perm.word().end()});
  } else if (head == "toggles") {
    std::vector<OperatorSpec> parts;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      auto next = arg.find(',', pos);
      if (next == std::string_view::npos) next = arg.size();
      auto pair = arg.substr(pos, next - pos);
      auto dash = pair.find('-');
      if (dash == std::string_view::npos)
        throw ToricError("operator: toggle '" + std::string(pair) + "' must be i-j");
      parts.push_back(OperatorSpec::toggle(parse_int(pair.substr(0, dash), "label"),
                                           parse_int(pair.substr(dash + 1), "label")));
      pos = next + 1;
    }
    op = parts.size() == 1 ? parts.front() : OperatorSpec::composition(std::move(parts));
  } else {
    throw ToricError("unknown operator '" + std::string(text) + "'");
  }
  op.name = std::string(text);
  Program check(op, n);  // validate against n now
  return op;
}

}  // namespace

OperatorSpec parse_operator(std::string_view text, int n) {
  std::vector<OperatorSpec> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('>', pos);
    if (next == std::string_view::npos) next = text.size();
    parts.push_back(parse_single(text.substr(pos, next - pos), n));
    pos = next + 1;
  }
  if (parts.size() == 1) return parts.front();
  auto op = OperatorSpec::composition(std::move(parts));
  op.name = std::string(text);
  return op;
}

Labeling apply(const Graph& g, const OperatorSpec& op, const Labeling& s) {
  if (g.size() != s.size()) throw ToricError("labeling size does not match graph");
  Program p(op, s.size());
  Labeling out = s;
  p.apply(g, out);
  return out;
}

std::vector<Labeling> trace(const Graph& g, const OperatorSpec& op, const Labeling& s) {
  if (g.size() != s.size()) throw ToricError("labeling size does not match graph");
  Program p(op, s.size());
  std::vector<Labeling> out{s};
  Labeling cur = s;
  for (const Step& st : p.steps()) {
    if (st.kind == Step::Kind::toggle)
      inplace::toggle(g, cur, st.a, st.b);
    else
      cur.shift(st.a);
    out.push_back(cur);
  }
  return out;
}

}  // namespace toric
