#include "ringlab/spec_lang.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/modarith.hpp"
#include "ringlab/ring_core.hpp"

namespace ringlab {

namespace {

std::string join_expected(const std::vector<std::string>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + e[i];
  return s;
}

std::string position(unsigned line, unsigned column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

SpecError::SpecError(unsigned line, unsigned column, const std::string& message, std::vector<std::string> expected)
    : std::runtime_error(position(line, column) + ": " + message +
                         (expected.empty() ? "" : " (expected one of: " + join_expected(expected) + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

// ---- lexer / parser -----------------------------------------------------

struct Token {
  enum class Kind { name, integer, string, lparen, rparen, comma, end };
  Kind kind;
  std::string text;
  unsigned line, column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::end: return "end of input";
    case Token::Kind::string: return "string \"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    skip_space();
    const unsigned line = line_, col = col_;
    if (i_ >= s_.size()) return {Token::Kind::end, "", line, col};
    const char c = s_[i_];
    if (c == '(' || c == ')' || c == ',') {
      advance();
      return {c == '(' ? Token::Kind::lparen : c == ')' ? Token::Kind::rparen : Token::Kind::comma, std::string(1, c),
              line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) t += advance();
      return {Token::Kind::name, t, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::string t(1, advance());
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) t += advance();
      if (t == "-") throw SpecError(line, col, "'-' must start an integer", {"integer"});
      return {Token::Kind::integer, t, line, col};
    }
    if (c == '"') {
      advance();
      std::string t;
      for (;;) {
        if (i_ >= s_.size()) throw SpecError(line, col, "unterminated string");
        char d = advance();
        if (d == '"') break;
        if (d == '\\' && i_ < s_.size()) d = advance();
        t += d;
      }
      return {Token::Kind::string, t, line, col};
    }
    throw SpecError(line, col, std::string("unexpected character '") + c + "'",
                    {"constructor name", "integer", "string", "'('", "')'", "','"});
  }

 private:
  char advance() {
    const char c = s_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
  }

  std::string_view s_;
  std::size_t i_ = 0;
  unsigned line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { tok_ = lex_.next(); }

  SpecNode parse_top() {
    SpecNode n = expr();
    if (tok_.kind != Token::Kind::end)
      throw SpecError(tok_.line, tok_.column, "unexpected " + describe(tok_) + " after the ring description",
                      {"end of input"});
    return n;
  }

 private:
  void bump() { tok_ = lex_.next(); }

  SpecNode expr() {
    if (tok_.kind != Token::Kind::name)
      throw SpecError(tok_.line, tok_.column, "unexpected " + describe(tok_), {"constructor name"});
    SpecNode n;
    n.kind = SpecNode::Kind::call;
    n.name = tok_.text;
    n.line = tok_.line;
    n.column = tok_.column;
    bump();
    if (tok_.kind != Token::Kind::lparen) return n;
    bump();
    if (tok_.kind == Token::Kind::rparen) {
      bump();
      return n;
    }
    for (;;) {
      n.args.push_back(arg());
      if (tok_.kind == Token::Kind::comma) {
        bump();
        continue;
      }
      if (tok_.kind == Token::Kind::rparen) {
        bump();
        return n;
      }
      throw SpecError(tok_.line, tok_.column, "unexpected " + describe(tok_), {"','", "')'"});
    }
  }

  SpecNode arg() {
    SpecNode n;
    n.line = tok_.line;
    n.column = tok_.column;
    if (tok_.kind == Token::Kind::integer) {
      n.kind = SpecNode::Kind::integer;
      try {
        std::size_t used = 0;
        n.value = std::stoll(tok_.text, &used);
      } catch (const std::out_of_range&) {
        throw SpecError(n.line, n.column, "integer out of range");
      }
      bump();
      return n;
    }
    if (tok_.kind == Token::Kind::string) {
      n.kind = SpecNode::Kind::string;
      n.text = tok_.text;
      bump();
      return n;
    }
    if (tok_.kind == Token::Kind::name) return expr();
    throw SpecError(tok_.line, tok_.column, "unexpected " + describe(tok_),
                    {"constructor name", "integer", "string"});
  }

  Lexer lex_;
  Token tok_;
};

// ---- validation ---------------------------------------------------------

enum class ArgKind { integer, string, ring };

struct Signature {
  const char* name;
  std::vector<ArgKind> fixed;
  bool variadic = false;  // repeats the last fixed kind
};

const std::vector<Signature>& signatures() {
  using A = ArgKind;
  static const std::vector<Signature> s = {
      {"Zmod", {A::integer}},
      {"Fp", {A::integer}},
      {"Quat", {}},
      {"T", {A::integer, A::ring}},
      {"DiagConst", {A::integer, A::ring}},
      {"M", {A::integer, A::ring}},
      {"TrivExt", {A::ring}},
      {"Dorroh", {A::ring, A::integer}},
      {"Product", {A::ring}, true},
      {"Quot", {A::ring, A::string}, true},
      {"CongrSubring", {A::integer}},
      {"FreeQuot", {A::integer, A::string, A::string, A::integer}},
      {"Skew", {A::ring, A::string}},
      {"ZeroAlg", {A::integer, A::integer}},
  };
  return s;
}

std::string lower(std::string_view s) {
  std::string r(s);
  for (auto& c : r) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return r;
}

const char* kind_name(ArgKind k) {
  switch (k) {
    case ArgKind::integer: return "integer";
    case ArgKind::string: return "string";
    case ArgKind::ring: return "ring description";
  }
  return "";
}

[[noreturn]] void fail_at(const SpecNode& n, const std::string& msg) { throw SpecError(n.line, n.column, msg); }

void validate(SpecNode& n);

void check_range(const SpecNode& call) {
  const auto& a = call.args;
  auto need = [&](std::size_t i, bool ok, const std::string& msg) {
    if (!ok) fail_at(a[i], call.name + ": " + msg);
  };
  const std::string& f = call.name;
  if (f == "Zmod") need(0, a[0].value >= 1, "m must be >= 1");
  if (f == "Fp") need(0, a[0].value >= 2 && is_prime(static_cast<std::uint64_t>(a[0].value)), "p must be prime");
  if (f == "T" || f == "DiagConst" || f == "M") need(0, a[0].value >= 1, "n must be >= 1");
  if (f == "Dorroh")
    need(1, a[1].value >= 1 && is_squarefree(static_cast<std::uint64_t>(a[1].value)),
         "m must be a squarefree positive integer");
  if (f == "CongrSubring") need(0, a[0].value >= 2 && a[0].value % 2 == 0, "m must be even and >= 2");
  if (f == "ZeroAlg") {
    need(0, a[0].value >= 2, "m must be >= 2");
    need(1, a[1].value >= 1 && a[1].value <= 16, "k must be between 1 and 16");
  }
  if (f == "FreeQuot") {
    need(0, a[0].value >= 2 && is_prime(static_cast<std::uint64_t>(a[0].value)), "p must be prime");
    need(3, a[3].value >= 1 && a[3].value <= 12, "cap must be between 1 and 12");
  }
}

void validate(SpecNode& n) {
  if (n.kind != SpecNode::Kind::call) return;
  const std::string key = lower(n.name);
  const Signature* sig = nullptr;
  for (const auto& s : signatures())
    if (lower(s.name) == key) sig = &s;
  if (!sig) {
    std::vector<std::string> names;
    for (const auto& s : signatures()) names.emplace_back(s.name);
    throw SpecError(n.line, n.column, "unknown constructor '" + n.name + "'", names);
  }
  n.name = sig->name;
  const std::size_t k = sig->fixed.size();
  if (n.args.size() < k || (!sig->variadic && n.args.size() > k))
    fail_at(n, n.name + " takes " + (sig->variadic ? "at least " : "") + std::to_string(k) + " argument" +
                   (k == 1 ? "" : "s") + ", got " + std::to_string(n.args.size()));
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    const ArgKind want = sig->fixed[std::min(i, k - 1)];
    auto& arg = n.args[i];
    const bool ok = (want == ArgKind::integer && arg.kind == SpecNode::Kind::integer) ||
                    (want == ArgKind::string && arg.kind == SpecNode::Kind::string) ||
                    (want == ArgKind::ring && arg.kind == SpecNode::Kind::call);
    if (!ok) fail_at(arg, n.name + ": argument " + std::to_string(i + 1) + " must be a " + kind_name(want));
    validate(arg);
  }
  check_range(n);
}

std::string quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r + "\"";
}

// ---- evaluation ---------------------------------------------------------

std::uint64_t u(const SpecNode& n) { return static_cast<std::uint64_t>(n.value); }

RingPtr need_finite(const RingValue& v, const SpecNode& at, const std::string& who) {
  if (!v.finite) fail_at(at, who + " needs an enumerable finite ring, got " + v.recipe);
  return v.finite;
}

RingValue eval(const SpecNode& n);

RingValue eval_inner(const SpecNode& n) {
  const auto& a = n.args;
  const std::string& f = n.name;
  RingValue out;
  if (f == "Zmod") {
    out.finite = zmod(u(a[0]));
  } else if (f == "Fp") {
    out.finite = prime_field(u(a[0]));
  } else if (f == "Quat") {
    out.rational = rational_quaternions();
  } else if (f == "T" || f == "TrivExt") {
    const RingValue base = eval(a.back());
    if (base.rational) {
      out.rational = f == "T" ? lin_upper_triangular(*base.rational, static_cast<unsigned>(u(a[0])))
                              : lin_trivial_extension(*base.rational);
    } else {
      RingPtr R = need_finite(base, a.back(), f);
      out.finite = f == "T" ? upper_triangular(R, static_cast<unsigned>(u(a[0]))) : trivial_extension(R);
    }
  } else if (f == "DiagConst") {
    out.finite = diag_const(need_finite(eval(a[1]), a[1], f), static_cast<unsigned>(u(a[0])));
  } else if (f == "M") {
    out.finite = full_matrix(need_finite(eval(a[1]), a[1], f), static_cast<unsigned>(u(a[0])));
  } else if (f == "Dorroh") {
    out.finite = dorroh(need_finite(eval(a[0]), a[0], f), u(a[1]));
  } else if (f == "Product") {
    std::vector<RingValue> parts;
    for (const auto& x : a) parts.push_back(eval(x));
    if (std::all_of(parts.begin(), parts.end(), [](const RingValue& v) { return v.rational != nullptr; })) {
      out.rational = parts.back().rational;
      for (std::size_t i = parts.size() - 1; i-- > 0;) out.rational = lin_direct_product(*parts[i].rational, *out.rational);
    } else {
      std::vector<RingPtr> rs;
      for (std::size_t i = 0; i < parts.size(); ++i) rs.push_back(need_finite(parts[i], a[i], f));
      out.finite = direct_product(rs);
    }
  } else if (f == "Quot") {
    RingPtr R = need_finite(eval(a[0]), a[0], f);
    std::vector<Elem> gens;
    for (std::size_t i = 1; i < a.size(); ++i) {
      const auto e = R->parse_element(a[i].text);
      if (!e) fail_at(a[i], "Quot: '" + a[i].text + "' is not an element of " + R->recipe());
      gens.push_back(*e);
    }
    out.finite = quotient(R, ideal_generated_by(*R, gens), print_spec(n));
  } else if (f == "CongrSubring") {
    out.finite = congruence_subring(u(a[0]));
  } else if (f == "FreeQuot") {
    out.free = free_algebra_quotient(u(a[0]), a[1].text, a[2].text, static_cast<unsigned>(u(a[3])));
  } else if (f == "Skew") {
    RingPtr R = need_finite(eval(a[0]), a[0], f);
    out.skew = std::make_shared<const SkewPolyRing>(endomorphism_by_name(R, a[1].text));
  } else if (f == "ZeroAlg") {
    out.finite = zero_algebra(u(a[0]), static_cast<unsigned>(u(a[1])));
  }
  out.recipe = print_spec(n);
  return out;
}

RingValue eval(const SpecNode& n) {
  try {
    return eval_inner(n);
  } catch (const SpecError&) {
    throw;
  } catch (const ResourceLimit&) {
    throw;
  } catch (const std::exception& e) {
    fail_at(n, e.what());
  }
}

}  // namespace

SpecNode parse_spec(std::string_view text) {
  SpecNode n = Parser(text).parse_top();
  validate(n);
  return n;
}

std::string print_spec(const SpecNode& n) {
  switch (n.kind) {
    case SpecNode::Kind::integer: return std::to_string(n.value);
    case SpecNode::Kind::string: return quote(n.text);
    case SpecNode::Kind::call: break;
  }
  std::string s = n.name + "(";
  for (std::size_t i = 0; i < n.args.size(); ++i) s += (i ? "," : "") + print_spec(n.args[i]);
  return s + ")";
}

RingValue evaluate_spec(const SpecNode& node) { return eval(node); }

RingValue build_ring(std::string_view text) { return evaluate_spec(parse_spec(text)); }

}  // namespace ringlab
