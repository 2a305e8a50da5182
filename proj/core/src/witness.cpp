#include "ringlab/predicates.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "ringlab/error.hpp"
#include "ringlab/ring_core.hpp"

namespace ringlab {

std::string_view truth_name(Truth t) {
  switch (t) {
    case Truth::holds: return "holds";
    case Truth::fails: return "fails";
    case Truth::undecided: return "undecided";
  }
  return "?";
}

namespace {

constexpr std::pair<Property, std::string_view> kNames[] = {
    {Property::reduced, "reduced"},
    {Property::lnzs, "lnzs"},
    {Property::semicommutative, "semicommutative"},
    {Property::reversible, "reversible"},
    {Property::weakly_semicommutative, "weakly_semicommutative"},
    {Property::ni, "ni"},
    {Property::abelian, "abelian"},
    {Property::quasi_normal, "quasinormal"},
    {Property::left_min_abel, "left_min_abel"},
    {Property::left_mc2, "left_mc2"},
    {Property::prime, "prime"},
    {Property::semiprime, "semiprime"},
    {Property::domain, "domain"},
};

std::string normalize(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '-' && c != '_' && !std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

// Recursive-descent evaluator shared by both backends.
template <class Ops>
class ExprEval {
 public:
  using V = typename Ops::Value;
  ExprEval(const Ops& ops, std::string_view s) : ops_(ops), s_(s) {}

  V run() {
    V v = sum();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("witness expression '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  V sum() {
    V acc = eat('-') ? ops_.neg(product()) : product();
    for (;;) {
      if (eat('+')) acc = ops_.add(acc, product());
      else if (eat('-')) acc = ops_.add(acc, ops_.neg(product()));
      else return acc;
    }
  }
  V product() {
    V acc = power();
    while (eat('*')) acc = ops_.mul(acc, power());
    return acc;
  }
  V power() {
    V base = atom();
    if (!eat('^')) return base;
    skip();
    const auto n = number();
    V r = base;
    if (n == 0) return ops_.one();
    for (std::uint64_t i = 1; i < n; ++i) r = ops_.mul(r, base);
    return r;
  }
  std::uint64_t number() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    return v;
  }
  V atom() {
    skip();
    if (eat('(')) {
      V v = sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return ops_.integer(number());
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a role name");
    return ops_.role(std::string(s_.substr(start, pos_ - start)));
  }

  const Ops& ops_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

struct FiniteOps {
  using Value = Elem;
  const FiniteRing& R;
  const Witness& w;
  const std::string* bound_name = nullptr;
  Elem bound{};

  Elem add(Elem a, Elem b) const { return R.add(a, b); }
  Elem neg(Elem a) const { return R.neg(a); }
  Elem mul(Elem a, Elem b) const { return R.mul(a, b); }
  Elem one() const { return R.one(); }
  Elem integer(std::uint64_t n) const { return n == 0 ? R.zero() : R.times(n, R.one()); }
  Elem role(const std::string& name) const {
    if (bound_name && name == *bound_name) return bound;
    for (const auto& [k, v] : w.elems)
      if (k == name) return v;
    throw PreconditionError("witness has no role '" + name + "'");
  }
};

struct FreeOps {
  using Value = FreeAlgebraElem;
  const FreeAlgebraQuotient& Q;
  const Witness& w;

  Value add(const Value& a, const Value& b) const { return Q.add(a, b); }
  Value neg(const Value& a) const { return Q.algebra().neg(a); }
  Value mul(const Value& a, const Value& b) const { return Q.mul(a, b); }
  Value one() const { return Q.algebra().scalar(1); }
  Value integer(std::uint64_t n) const { return Q.algebra().scalar(static_cast<std::int64_t>(n % Q.algebra().characteristic())); }
  Value role(const std::string& name) const {
    for (const auto& [k, v] : w.rendered)
      if (k == name) return Q.parse(v);
    throw PreconditionError("witness has no role '" + name + "'");
  }
};

}  // namespace

const std::vector<Property>& all_properties() {
  static const std::vector<Property> all = [] {
    std::vector<Property> v;
    for (const auto& [p, n] : kNames) v.push_back(p);
    return v;
  }();
  return all;
}

std::string_view property_name(Property p) {
  for (const auto& [q, n] : kNames)
    if (q == p) return n;
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  const std::string want = normalize(name);
  for (const auto& [p, n] : kNames)
    if (normalize(n) == want) return p;
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> Witness::flat() const {
  auto out = rendered;
  for (const auto& c : conditions)
    if (c.forall.empty() && c.claim != Condition::Claim::minimal_left_idempotent &&
        std::none_of(out.begin(), out.end(), [&](const auto& kv) { return kv.first == c.expression; }))
      out.emplace_back(c.expression, c.value);
  return out;
}

void render_roles(const FiniteRing& R, Witness& w) {
  w.rendered.clear();
  for (const auto& [k, v] : w.elems) w.rendered.emplace_back(k, R.render(v));
}

Elem evaluate(const FiniteRing& R, const Witness& w, std::string_view expression) {
  FiniteOps ops{R, w};
  return ExprEval<FiniteOps>(ops, expression).run();
}

FreeAlgebraElem evaluate(const FreeAlgebraQuotient& Q, const Witness& w, std::string_view expression) {
  FreeOps ops{Q, w};
  return ExprEval<FreeOps>(ops, expression).run();
}

bool recheck(const FiniteRing& R, const Witness& w) {
  using Claim = Condition::Claim;
  for (const auto& c : w.conditions) {
    if (!c.forall.empty()) {
      for (Elem g : R.additive_generators()) {
        FiniteOps ops{R, w, &c.forall, g};
        const Elem v = ExprEval<FiniteOps>(ops, c.expression).run();
        if ((c.claim == Claim::zero) != (v == R.zero())) return false;
      }
      continue;
    }
    const Elem v = evaluate(R, w, c.expression);
    bool ok = false;
    switch (c.claim) {
      case Claim::zero: ok = v == R.zero(); break;
      case Claim::nonzero: ok = v != R.zero(); break;
      case Claim::nilpotent: ok = R.is_nilpotent(v); break;
      case Claim::not_nilpotent: ok = !R.is_nilpotent(v); break;
      case Claim::minimal_left_idempotent: {
        const auto me = minimal_left_idempotents(R);
        ok = std::find(me.begin(), me.end(), v) != me.end();
        break;
      }
    }
    if (!ok) return false;
    if (c.claim != Claim::minimal_left_idempotent && R.render(v) != c.value) return false;
  }
  return true;
}

bool recheck(const FreeAlgebraQuotient& Q, const Witness& w) {
  using Claim = Condition::Claim;
  for (const auto& c : w.conditions) {
    if (!c.forall.empty()) return false;
    const FreeAlgebraElem v = Q.reduce(evaluate(Q, w, c.expression));
    bool ok = false;
    switch (c.claim) {
      case Claim::zero: ok = v.is_zero(); break;
      case Claim::nonzero: ok = !v.is_zero(); break;
      case Claim::nilpotent: ok = Q.nilpotency_index(v).has_value(); break;
      case Claim::not_nilpotent:
      case Claim::minimal_left_idempotent: ok = false; break;
    }
    if (!ok || Q.render(v) != c.value) return false;
  }
  return true;
}

}  // namespace ringlab
