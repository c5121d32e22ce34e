#include "sparsat/formula.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <optional>
#include <utility>

namespace sparsat {

namespace {

std::size_t digits(VarIndex index) {
  std::size_t n = 0;
  do {
    ++n;
    index /= 10;
  } while (index != 0);
  return n;
}

// A node may stand bare (unparenthesized) as an operand of !, & or | only if
// it is not itself a bare binary node; otherwise serialization would be
// ambiguous and round-tripping would break.
bool is_operand_shape(Formula::Kind k) {
  return k != Formula::Kind::And && k != Formula::Kind::Or;
}

}  // namespace

struct Formula::Node {
  Kind kind;
  bool value = false;
  VarIndex index = 0;
  std::optional<Formula> a;
  std::optional<Formula> b;
  std::size_t len = 0;
};

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (offset " + std::to_string(offset) + ")"),
      offset_(offset) {}

UnboundVariableError::UnboundVariableError(VarIndex index)
    : std::runtime_error("unbound variable x" + std::to_string(index)),
      index_(index) {}

VariableCapError::VariableCapError(std::size_t var_count, std::size_t cap)
    : std::runtime_error("formula has " + std::to_string(var_count) +
                         " variables, brute-force cap is " + std::to_string(cap)) {}

Formula Formula::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = value;
  n->len = 1;
  return Formula(std::move(n));
}

Formula Formula::variable(VarIndex index) {
  if (index == 0) throw std::invalid_argument("variable index must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->index = index;
  n->len = 1 + digits(index);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula operand) {
  if (!is_operand_shape(operand.kind()))
    throw std::invalid_argument("operand of '!' must be parenthesized");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->len = 1 + operand.length();
  n->a.emplace(std::move(operand));
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula left, Formula right) {
  if (!is_operand_shape(left.kind()) || !is_operand_shape(right.kind()))
    throw std::invalid_argument("operands of '&' must be parenthesized");
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->len = left.length() + 1 + right.length();
  n->a.emplace(std::move(left));
  n->b.emplace(std::move(right));
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula left, Formula right) {
  if (!is_operand_shape(left.kind()) || !is_operand_shape(right.kind()))
    throw std::invalid_argument("operands of '|' must be parenthesized");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->len = left.length() + 1 + right.length();
  n->a.emplace(std::move(left));
  n->b.emplace(std::move(right));
  return Formula(std::move(n));
}

Formula Formula::paren(Formula inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Paren;
  n->len = 2 + inner.length();
  n->a.emplace(std::move(inner));
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::const_value() const {
  assert(kind() == Kind::Const);
  return node_->value;
}

VarIndex Formula::var_index() const {
  assert(kind() == Kind::Var);
  return node_->index;
}

const Formula& Formula::child() const {
  assert(kind() == Kind::Not || kind() == Kind::Paren);
  return *node_->a;
}

const Formula& Formula::left() const {
  assert(kind() == Kind::And || kind() == Kind::Or);
  return *node_->a;
}

const Formula& Formula::right() const {
  assert(kind() == Kind::And || kind() == Kind::Or);
  return *node_->b;
}

std::size_t Formula::length() const noexcept { return node_->len; }

namespace {

void append_str(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      out.push_back(f.const_value() ? '1' : '0');
      break;
    case Formula::Kind::Var:
      out.push_back('x');
      out.append(std::to_string(f.var_index()));
      break;
    case Formula::Kind::Not:
      out.push_back('!');
      append_str(f.child(), out);
      break;
    case Formula::Kind::And:
      append_str(f.left(), out);
      out.push_back('&');
      append_str(f.right(), out);
      break;
    case Formula::Kind::Or:
      append_str(f.left(), out);
      out.push_back('|');
      append_str(f.right(), out);
      break;
    case Formula::Kind::Paren:
      out.push_back('(');
      append_str(f.child(), out);
      out.push_back(')');
      break;
  }
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  out.reserve(length());
  append_str(*this, out);
  return out;
}

bool Formula::operator==(const Formula& other) const noexcept {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind || node_->len != other.node_->len) return false;
  switch (node_->kind) {
    case Kind::Const:
      return node_->value == other.node_->value;
    case Kind::Var:
      return node_->index == other.node_->index;
    case Kind::Not:
    case Kind::Paren:
      return child() == other.child();
    case Kind::And:
    case Kind::Or:
      return left() == other.left() && right() == other.right();
  }
  return false;
}

// --- parsing -------------------------------------------------------------

namespace {

constexpr std::size_t kMaxParseDepth = 10'000;
constexpr VarIndex kMaxVariableIndex = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_expr(0);
    if (pos_ != text_.size()) fail("trailing characters after formula");
    return f;
  }

 private:
  // expr := formula | formula '&' formula | formula '|' formula
  Formula parse_expr(std::size_t depth) {
    Formula left = parse_term(depth);
    if (pos_ < text_.size() && (text_[pos_] == '&' || text_[pos_] == '|')) {
      char op = text_[pos_++];
      Formula right = parse_term(depth);
      return op == '&' ? Formula::conjunction(std::move(left), std::move(right))
                       : Formula::disjunction(std::move(left), std::move(right));
    }
    return left;
  }

  // formula := '0' | '1' | var | '!' formula | '(' expr ')'
  Formula parse_term(std::size_t depth) {
    if (depth > kMaxParseDepth) fail("formula nesting too deep");
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    switch (c) {
      case '0':
        ++pos_;
        return Formula::constant(false);
      case '1':
        ++pos_;
        return Formula::constant(true);
      case '!': {
        ++pos_;
        return Formula::negation(parse_term(depth + 1));
      }
      case '(': {
        ++pos_;
        Formula inner = parse_expr(depth + 1);
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
        ++pos_;
        return Formula::paren(std::move(inner));
      }
      case 'x':
        return parse_var();
      default:
        fail("unexpected character");
    }
    // not reached
    throw std::logic_error("parser fell through");
  }

  Formula parse_var() {
    std::size_t start = pos_;
    ++pos_;  // 'x'
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail_at("expected variable index after 'x'", pos_);
    if (text_[pos_] == '0') fail_at("variable index must not start with 0", pos_);
    VarIndex index = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + static_cast<VarIndex>(text_[pos_] - '0');
      if (index > kMaxVariableIndex) fail_at("variable index too large", start);
      ++pos_;
    }
    return Formula::variable(index);
  }

  [[noreturn]] void fail(const std::string& message) { fail_at(message, pos_); }

  [[noreturn]] void fail_at(const std::string& message, std::size_t offset) {
    throw ParseError(message, offset);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  if (text.empty()) throw ParseError("empty input", 0);
  return Parser(text).parse();
}

// --- structural operations -----------------------------------------------

Formula substitute(const Formula& f, VarIndex v, bool bit) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      return f;
    case Formula::Kind::Var:
      return f.var_index() == v ? Formula::constant(bit) : f;
    case Formula::Kind::Not: {
      Formula c = substitute(f.child(), v, bit);
      return c == f.child() ? f : Formula::negation(std::move(c));
    }
    case Formula::Kind::Paren: {
      Formula c = substitute(f.child(), v, bit);
      return c == f.child() ? f : Formula::paren(std::move(c));
    }
    case Formula::Kind::And: {
      Formula l = substitute(f.left(), v, bit);
      Formula r = substitute(f.right(), v, bit);
      if (l == f.left() && r == f.right()) return f;
      return Formula::conjunction(std::move(l), std::move(r));
    }
    case Formula::Kind::Or: {
      Formula l = substitute(f.left(), v, bit);
      Formula r = substitute(f.right(), v, bit);
      if (l == f.left() && r == f.right()) return f;
      return Formula::disjunction(std::move(l), std::move(r));
    }
  }
  throw std::logic_error("unknown node kind");
}

bool evaluate(const Formula& f, const Assignment& assignment) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      return f.const_value();
    case Formula::Kind::Var: {
      auto it = assignment.find(f.var_index());
      if (it == assignment.end()) throw UnboundVariableError(f.var_index());
      return it->second;
    }
    case Formula::Kind::Not:
      return !evaluate(f.child(), assignment);
    case Formula::Kind::Paren:
      return evaluate(f.child(), assignment);
    case Formula::Kind::And: {
      bool l = evaluate(f.left(), assignment);
      bool r = evaluate(f.right(), assignment);
      return l && r;
    }
    case Formula::Kind::Or: {
      bool l = evaluate(f.left(), assignment);
      bool r = evaluate(f.right(), assignment);
      return l || r;
    }
  }
  throw std::logic_error("unknown node kind");
}

namespace {

void collect_variables(const Formula& f, std::set<VarIndex>& out) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      return;
    case Formula::Kind::Var:
      out.insert(f.var_index());
      return;
    case Formula::Kind::Not:
    case Formula::Kind::Paren:
      collect_variables(f.child(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
      return;
  }
}

}  // namespace

std::set<VarIndex> variables(const Formula& f) {
  std::set<VarIndex> out;
  collect_variables(f, out);
  return out;
}

VarIndex max_variable(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      return 0;
    case Formula::Kind::Var:
      return f.var_index();
    case Formula::Kind::Not:
    case Formula::Kind::Paren:
      return max_variable(f.child());
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return std::max(max_variable(f.left()), max_variable(f.right()));
  }
  return 0;
}

bool is_variable_free(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      return true;
    case Formula::Kind::Var:
      return false;
    case Formula::Kind::Not:
    case Formula::Kind::Paren:
      return is_variable_free(f.child());
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return is_variable_free(f.left()) && is_variable_free(f.right());
  }
  return true;
}

std::size_t node_count(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Const:
    case Formula::Kind::Var:
      return 1;
    case Formula::Kind::Not:
    case Formula::Kind::Paren:
      return 1 + node_count(f.child());
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return 1 + node_count(f.left()) + node_count(f.right());
  }
  return 1;
}

Formula combine_or(const Formula& a, const Formula& b) {
  return Formula::disjunction(Formula::paren(a), Formula::paren(b));
}

Formula combine_and(const Formula& a, const Formula& b) {
  return Formula::conjunction(Formula::paren(a), Formula::paren(b));
}

Formula negate(const Formula& f) {
  if (f.kind() == Formula::Kind::And || f.kind() == Formula::Kind::Or)
    return Formula::negation(Formula::paren(f));
  return Formula::negation(f);
}

// --- brute-force oracles ---------------------------------------------------

namespace {

// Evaluates f under every assignment to its variables and reports whether
// any/all evaluate true. stop_value short-circuits the scan.
bool exhaustive_scan(const Formula& f, std::size_t var_cap, bool stop_value) {
  std::set<VarIndex> vars = variables(f);
  if (vars.size() > var_cap) throw VariableCapError(vars.size(), var_cap);
  std::vector<VarIndex> order(vars.begin(), vars.end());
  const std::size_t k = order.size();
  Assignment assignment;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (std::size_t i = 0; i < k; ++i) assignment[order[i]] = (mask >> i) & 1;
    if (evaluate(f, assignment) == stop_value) return true;
  }
  return false;
}

}  // namespace

bool brute_force_sat(const Formula& f, std::size_t var_cap) {
  return exhaustive_scan(f, var_cap, true);
}

bool brute_force_taut(const Formula& f, std::size_t var_cap) {
  return !exhaustive_scan(f, var_cap, false);
}

// --- enumeration -----------------------------------------------------------

namespace {

struct EnumBuckets {
  // per node count: formulas usable as operands (Const/Var/Not/Paren) and
  // bare binary formulas; paren_topped marks Paren roots to exclude chains.
  std::vector<std::vector<Formula>> operand;
  std::vector<std::vector<Formula>> bare;
};

}  // namespace

std::vector<Formula> enumerate_formulas(int max_vars, int max_nodes) {
  if (max_vars < 1) throw std::invalid_argument("max_vars must be >= 1");
  if (max_nodes < 1) throw std::invalid_argument("max_nodes must be >= 1");

  EnumBuckets buckets;
  buckets.operand.resize(static_cast<std::size_t>(max_nodes) + 1);
  buckets.bare.resize(static_cast<std::size_t>(max_nodes) + 1);

  buckets.operand[1].push_back(Formula::constant(false));
  buckets.operand[1].push_back(Formula::constant(true));
  for (int v = 1; v <= max_vars; ++v)
    buckets.operand[1].push_back(Formula::variable(static_cast<VarIndex>(v)));

  for (int n = 2; n <= max_nodes; ++n) {
    auto& ops = buckets.operand[static_cast<std::size_t>(n)];
    auto& bare = buckets.bare[static_cast<std::size_t>(n)];
    for (const Formula& c : buckets.operand[static_cast<std::size_t>(n - 1)])
      ops.push_back(Formula::negation(c));
    // Paren wraps anything except another Paren (redundant chains excluded).
    for (const Formula& c : buckets.operand[static_cast<std::size_t>(n - 1)])
      if (c.kind() != Formula::Kind::Paren) ops.push_back(Formula::paren(c));
    for (const Formula& c : buckets.bare[static_cast<std::size_t>(n - 1)])
      ops.push_back(Formula::paren(c));
    for (int i = 1; i <= n - 2; ++i) {
      const auto& lefts = buckets.operand[static_cast<std::size_t>(i)];
      const auto& rights = buckets.operand[static_cast<std::size_t>(n - 1 - i)];
      for (const Formula& l : lefts)
        for (const Formula& r : rights) {
          bare.push_back(Formula::conjunction(l, r));
          bare.push_back(Formula::disjunction(l, r));
        }
    }
  }

  std::vector<Formula> out;
  for (int n = 1; n <= max_nodes; ++n) {
    std::vector<std::pair<std::string, Formula>> level;
    for (const Formula& f : buckets.operand[static_cast<std::size_t>(n)])
      level.emplace_back(f.str(), f);
    for (const Formula& f : buckets.bare[static_cast<std::size_t>(n)])
      level.emplace_back(f.str(), f);
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [text, f] : level) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace sparsat
