#include "ringforge/specgrammar.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace ringforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// name(arg, arg, ...) or bare name; arguments split at top-level commas
struct Node {
  std::string_view name;
  std::vector<std::string_view> args;
};

Node parse_node(std::string_view text) {
  text = trim(text);
  Node node;
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    node.name = text;
    return node;
  }
  if (text.back() != ')')
    throw RfError(Err::ParseError, "unbalanced parentheses in '" + std::string(text) + "'");
  node.name = trim(text.substr(0, open));
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      auto arg = trim(body.substr(start, i - start));
      if (!arg.empty()) node.args.push_back(arg);
      start = i + 1;
    } else if (body[i] == '(') {
      ++depth;
    } else if (body[i] == ')') {
      --depth;
      if (depth < 0) throw RfError(Err::ParseError, "unbalanced parentheses");
    }
  }
  if (depth != 0) throw RfError(Err::ParseError, "unbalanced parentheses");
  return node;
}

long long parse_number(std::string_view s, const char* what) {
  s = trim(s);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw RfError(Err::ParseError, std::string("expected a number for ") + what + ", got '" +
                                       std::string(s) + "'");
  return v;
}

void expect_arity(const Node& node, std::size_t n) {
  if (node.args.size() != n)
    throw RfError(Err::ParseError, std::string(node.name) + " expects " + std::to_string(n) +
                                       " argument(s), got " + std::to_string(node.args.size()));
}

}  // namespace

RingPtr parse_ring_spec(std::string_view text) {
  const Node node = parse_node(text);
  if (node.name == "zmod") {
    expect_arity(node, 1);
    return Ring::zmod(parse_number(node.args[0], "zmod modulus"));
  }
  if (node.name == "product") {
    if (node.args.size() < 2)
      throw RfError(Err::ParseError, "product expects at least two factors");
    std::vector<RingPtr> factors;
    for (const auto& a : node.args) factors.push_back(parse_ring_spec(a));
    return Ring::product(std::move(factors));
  }
  if (node.name == "matrix") {
    expect_arity(node, 2);
    return Ring::matrix_ring(static_cast<int>(parse_number(node.args[0], "matrix dimension")),
                             parse_ring_spec(node.args[1]));
  }
  if (node.name == "integers") {
    expect_arity(node, 0);
    return Ring::integers();
  }
  if (node.name == "congruence-pairs") {
    expect_arity(node, 1);
    return Ring::congruence_pairs(parse_number(node.args[0], "congruence modulus"));
  }
  if (node.name == "poly") {
    expect_arity(node, 1);
    return Ring::poly_ring(parse_ring_spec(node.args[0]));
  }
  if (node.name == "nagata") {
    expect_arity(node, 3);
    RingPtr base = parse_ring_spec(node.args[0]);
    ModulePtr module = parse_module_spec(node.args[1], base);
    EndoPtr endo = parse_endo_spec(node.args[2], base);
    return Ring::nagata(base, module, endo);
  }
  throw RfError(Err::ParseError, "unknown ring constructor '" + std::string(node.name) + "'");
}

EndoPtr parse_endo_spec(std::string_view text, const RingPtr& ring) {
  const Node node = parse_node(text);
  expect_arity(node, 0);
  if (node.name == "identity") return Endo::identity(ring);
  if (node.name == "swap") return Endo::swap(ring);
  if (node.name == "eval-at-zero") return Endo::eval_at_zero(ring);
  if (node.name == "negate-offdiagonal") return Endo::negate_offdiagonal(ring);
  throw RfError(Err::ParseError, "unknown endomorphism '" + std::string(node.name) + "'");
}

ModulePtr parse_module_spec(std::string_view text, const RingPtr& ring) {
  const Node node = parse_node(text);
  if (node.name == "self") {
    expect_arity(node, 0);
    return Module::ring_as_module(ring);
  }
  if (node.name == "ring-power") {
    expect_arity(node, 1);
    return Module::ring_power(ring, static_cast<int>(parse_number(node.args[0], "power")));
  }
  throw RfError(Err::ParseError, "unknown module spec '" + std::string(node.name) + "'");
}

}  // namespace ringforge
