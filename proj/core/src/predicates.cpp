#include "ringlab/predicates.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "ringlab/error.hpp"
#include "ringlab/parallel.hpp"
#include "ringlab/ring_core.hpp"

namespace ringlab {
namespace {

using Claim = Condition::Claim;

class WitnessBuilder {
 public:
  WitnessBuilder(const FiniteRing& R, Property p) : R_(R) { w_.property = std::string(property_name(p)); }
  WitnessBuilder& role(std::string name, Elem e) {
    w_.elems.emplace_back(std::move(name), e);
    return *this;
  }
  WitnessBuilder& cond(std::string expr, Claim claim, std::string forall = {}) {
    Condition c{std::move(expr), claim, "0", std::move(forall)};
    if (c.forall.empty()) c.value = R_.render(evaluate(R_, w_, c.expression));
    w_.conditions.push_back(std::move(c));
    return *this;
  }
  Witness done() {
    render_roles(R_, w_);
    return std::move(w_);
  }

 private:
  const FiniteRing& R_;
  Witness w_;
};

PropertyResult pass(Property p, std::string universe, std::string note = {}) {
  PropertyResult r;
  r.property = p;
  r.truth = Truth::holds;
  r.universe = std::move(universe);
  r.note = std::move(note);
  return r;
}

PropertyResult fail(Property p, Witness w, std::string universe) {
  PropertyResult r;
  r.property = p;
  r.truth = Truth::fails;
  r.witness = std::move(w);
  r.universe = std::move(universe);
  return r;
}

std::string full_scan(const FiniteRing& R) { return "full scan of " + std::to_string(R.size()) + " elements"; }

std::string generator_scan(const FiniteRing& R) {
  return "full scan of " + std::to_string(R.size()) + " elements, products over " +
         std::to_string(R.additive_generators().size()) + " additive generators";
}

Elem elem(std::size_t i) { return Elem{static_cast<std::uint32_t>(i)}; }

std::string power_expr(const char* name, unsigned k) { return k == 1 ? name : std::string(name) + "^" + std::to_string(k); }

}  // namespace

PropertyResult undecided(Property p, std::string note) {
  PropertyResult r;
  r.property = p;
  r.truth = Truth::undecided;
  r.universe = "not enumerable";
  r.note = std::move(note);
  return r;
}

PropertyResult is_reduced(const FiniteRing& R) {
  const std::size_t n = R.size();
  const std::size_t hit = parallel_find_first(n, [&](std::size_t i) { return i != 0 && R.is_nilpotent(elem(i)); });
  if (hit == n) return pass(Property::reduced, full_scan(R));
  const Elem a = elem(hit);
  return fail(Property::reduced,
              WitnessBuilder(R, Property::reduced)
                  .role("a", a)
                  .cond("a", Claim::nonzero)
                  .cond(power_expr("a", R.nilpotency_index(a)), Claim::zero)
                  .done(),
              full_scan(R));
}

namespace {

Witness lnzs_witness(const FiniteRing& R, Elem a, Elem r, Elem b) {
  return WitnessBuilder(R, Property::lnzs)
      .role("a", a)
      .role("r", r)
      .role("b", b)
      .cond(power_expr("b", R.nilpotency_index(b)), Claim::zero)
      .cond("a*b", Claim::zero)
      .cond("a*r*b", Claim::nonzero)
      .done();
}

}  // namespace

PropertyResult is_lnzs(const FiniteRing& R) {
  const auto& gens = R.additive_generators();
  for (Elem b : R.elements()) {
    if (b == R.zero() || !R.is_nilpotent(b)) continue;
    const Subgroup L = left_annihilator(R, b);
    for (Elem a : L.generators())
      for (Elem r : gens)
        if (R.mul3(a, r, b) != R.zero()) return fail(Property::lnzs, lnzs_witness(R, a, r, b), generator_scan(R));
  }
  const bool reduced = is_reduced(R).holds();
  return pass(Property::lnzs, generator_scan(R), reduced ? "vacuous: N(R) = {0}" : "");
}

PropertyResult is_lnzs_exhaustive(const FiniteRing& R) {
  const std::size_t n = R.size();
  for (Elem b : R.elements()) {
    if (b == R.zero() || !R.is_nilpotent(b)) continue;
    const std::size_t hit = parallel_find_first(n * n, [&](std::size_t k) {
      const Elem a = elem(k / n), r = elem(k % n);
      return R.mul(a, b) == R.zero() && R.mul3(a, r, b) != R.zero();
    }, 1024);
    if (hit != n * n) return fail(Property::lnzs, lnzs_witness(R, elem(hit / n), elem(hit % n), b), full_scan(R));
  }
  return pass(Property::lnzs, "exhaustive scan of all (b, a, r), " + std::to_string(n) + " elements");
}

PropertyResult is_lnzs_by_closure(const FiniteRing& R) {
  for (Elem b : R.elements()) {
    if (b == R.zero() || !R.is_nilpotent(b)) continue;
    if (auto f = right_closure_failure(R, left_annihilator(R, b)))
      return fail(Property::lnzs, lnzs_witness(R, f->s, f->r, b), generator_scan(R));
  }
  return pass(Property::lnzs, generator_scan(R));
}

PropertyResult is_semicommutative(const FiniteRing& R) {
  const auto& gens = R.additive_generators();
  for (Elem w : R.elements()) {
    if (w == R.zero()) continue;
    const Subgroup H = right_annihilator(R, w);
    for (Elem h : H.generators())
      for (Elem r : gens)
        if (R.mul3(w, r, h) != R.zero())
          return fail(Property::semicommutative,
                      WitnessBuilder(R, Property::semicommutative)
                          .role("w", w)
                          .role("r", r)
                          .role("h", h)
                          .cond("w*h", Claim::zero)
                          .cond("w*r*h", Claim::nonzero)
                          .done(),
                      generator_scan(R));
  }
  return pass(Property::semicommutative, generator_scan(R));
}

PropertyResult is_reversible(const FiniteRing& R) {
  for (Elem w : R.elements()) {
    if (w == R.zero()) continue;
    const Subgroup H = right_annihilator(R, w);
    for (Elem h : H.generators())
      if (R.mul(h, w) != R.zero())
        return fail(Property::reversible,
                    WitnessBuilder(R, Property::reversible)
                        .role("w", w)
                        .role("h", h)
                        .cond("w*h", Claim::zero)
                        .cond("h*w", Claim::nonzero)
                        .done(),
                    full_scan(R) + ", h over generators of r(w)");
  }
  return pass(Property::reversible, full_scan(R) + ", h over generators of r(w)");
}

PropertyResult is_weakly_semicommutative(const FiniteRing& R, const PredicateOptions& o) {
  const Property P = Property::weakly_semicommutative;
  auto witness = [&](Elem w, Elem r, Elem h) {
    return WitnessBuilder(R, P)
        .role("w", w)
        .role("r", r)
        .role("h", h)
        .cond("w*h", Claim::zero)
        .cond("w*r*h", Claim::not_nilpotent)
        .done();
  };
  const auto N = nilpotent_elements(R);
  if (Subgroup::span(R, N).size() == N.size()) {
    // N is an additive subgroup, so {(r,h) : wrh in N} is closed under
    // addition in each variable and generators suffice.
    const auto& gens = R.additive_generators();
    for (Elem w : R.elements()) {
      if (w == R.zero()) continue;
      const Subgroup H = right_annihilator(R, w);
      for (Elem h : H.generators())
        for (Elem r : gens)
          if (!R.is_nilpotent(R.mul3(w, r, h))) return fail(P, witness(w, r, h), generator_scan(R));
    }
    return pass(P, generator_scan(R) + "; N(R) is additively closed");
  }
  const std::size_t n = R.size();
  if (static_cast<std::uint64_t>(n) * n * n <= o.exhaustive_work_cap) {
    for (Elem w : R.elements()) {
      const Subgroup H = right_annihilator(R, w);
      for (Elem h : H.elements()) {
        const std::size_t hit = parallel_find_first(n, [&](std::size_t r) { return !R.is_nilpotent(R.mul3(w, elem(r), h)); });
        if (hit != n) return fail(P, witness(w, elem(hit), h), "exhaustive scan of (w, h, r)");
      }
    }
    return pass(P, "exhaustive scan of (w, h, r), " + std::to_string(n) + " elements");
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  for (std::size_t t = 0; t < o.random_trials; ++t) {
    const Elem w{pick(rng)};
    const Subgroup H = right_annihilator(R, w);
    for (Elem h : H.generators())
      for (std::size_t k = 0; k < 256; ++k) {
        const Elem r{pick(rng)};
        if (!R.is_nilpotent(R.mul3(w, r, h))) return fail(P, witness(w, r, h), "randomized search");
      }
  }
  auto res = undecided(P, "N(R) is not additively closed and the exhaustive scan exceeds the work cap; " +
                              std::to_string(o.random_trials) + " seeded random trials found no violation");
  res.universe = "seeded random search (seed " + std::to_string(o.seed) + ")";
  return res;
}

PropertyResult is_ni(const FiniteRing& R) {
  const auto N = nilpotent_elements(R);
  if (Subgroup::span(R, N).size() != N.size()) {
    for (Elem a : N)
      for (Elem b : N)
        if (!R.is_nilpotent(R.add(a, b)))
          return fail(Property::ni,
                      WitnessBuilder(R, Property::ni)
                          .role("a", a)
                          .role("b", b)
                          .cond("a", Claim::nilpotent)
                          .cond("b", Claim::nilpotent)
                          .cond("a+b", Claim::not_nilpotent)
                          .done(),
                      full_scan(R));
  }
  const Subgroup S(R, N);
  for (Elem a : S.generators())
    for (Elem r : R.additive_generators()) {
      for (const char* expr : {"r*a", "a*r"}) {
        WitnessBuilder wb(R, Property::ni);
        wb.role("a", a).role("r", r);
        const Elem v = expr[0] == 'r' ? R.mul(r, a) : R.mul(a, r);
        if (!R.is_nilpotent(v))
          return fail(Property::ni, wb.cond("a", Claim::nilpotent).cond(expr, Claim::not_nilpotent).done(),
                      generator_scan(R));
      }
    }
  return pass(Property::ni, generator_scan(R));
}

PropertyResult is_abelian(const FiniteRing& R) {
  for (Elem e : idempotents(R))
    for (Elem r : R.additive_generators())
      if (R.mul(e, r) != R.mul(r, e))
        return fail(Property::abelian,
                    WitnessBuilder(R, Property::abelian)
                        .role("e", e)
                        .role("r", r)
                        .cond("e*e-e", Claim::zero)
                        .cond("e*r-r*e", Claim::nonzero)
                        .done(),
                    generator_scan(R));
  return pass(Property::abelian, generator_scan(R));
}

PropertyResult is_quasi_normal(const FiniteRing& R) {
  const auto& gens = R.additive_generators();
  const char* expr = R.has_one() ? "e*r*(1-e)*s*e" : "e*r*s*e-e*r*e*s*e";
  for (Elem e : idempotents(R))
    for (Elem r : gens) {
      const Elem er = R.mul(e, r), ere = R.mul(er, e);
      for (Elem s : gens) {
        const Elem se = R.mul(s, e);
        if (R.sub(R.mul(er, se), R.mul(ere, se)) != R.zero())
          return fail(Property::quasi_normal,
                      WitnessBuilder(R, Property::quasi_normal)
                          .role("e", e)
                          .role("r", r)
                          .role("s", s)
                          .cond("e*e-e", Claim::zero)
                          .cond(expr, Claim::nonzero)
                          .done(),
                      generator_scan(R) + " (r and s)");
      }
    }
  return pass(Property::quasi_normal, generator_scan(R) + " (r and s)");
}

PropertyResult is_left_min_abel(const FiniteRing& R) {
  const auto me = minimal_left_idempotents(R);
  for (Elem e : me)
    for (Elem r : R.additive_generators())
      if (R.mul(r, e) != R.mul3(e, r, e))
        return fail(Property::left_min_abel,
                    WitnessBuilder(R, Property::left_min_abel)
                        .role("e", e)
                        .role("r", r)
                        .cond("e", Claim::minimal_left_idempotent)
                        .cond("r*e-e*r*e", Claim::nonzero)
                        .done(),
                    generator_scan(R));
  return pass(Property::left_min_abel, generator_scan(R), me.empty() ? "vacuous: ME_l(R) is empty" : "");
}

PropertyResult is_left_mc2(const FiniteRing& R) {
  const auto me = minimal_left_idempotents(R);
  const auto& gens = R.additive_generators();
  for (Elem e : me) {
    std::vector<Elem> ann;
    for (Elem a : R.elements())
      if (std::all_of(gens.begin(), gens.end(), [&](Elem g) { return R.mul3(a, g, e) == R.zero(); })) ann.push_back(a);
    const Subgroup A(R, std::move(ann));
    for (Elem a : A.generators())
      for (Elem r : gens)
        if (R.mul3(e, r, a) != R.zero())
          return fail(Property::left_mc2,
                      WitnessBuilder(R, Property::left_mc2)
                          .role("e", e)
                          .role("a", a)
                          .role("r", r)
                          .cond("e", Claim::minimal_left_idempotent)
                          .cond("a*g*e", Claim::zero, "g")
                          .cond("e*r*a", Claim::nonzero)
                          .done(),
                      generator_scan(R));
  }
  return pass(Property::left_mc2, generator_scan(R), me.empty() ? "vacuous: ME_l(R) is empty" : "");
}

namespace {

// a R b = 0, checked on additive generators.
bool kills(const FiniteRing& R, Elem a, Elem b) {
  for (Elem g : R.additive_generators())
    if (R.mul3(a, g, b) != R.zero()) return false;
  return true;
}

Witness prime_witness(const FiniteRing& R, Elem a, Elem b) {
  return WitnessBuilder(R, Property::prime)
      .role("a", a)
      .role("b", b)
      .cond("a", Claim::nonzero)
      .cond("b", Claim::nonzero)
      .cond("a*g*b", Claim::zero, "g")
      .done();
}

Witness semiprime_witness(const FiniteRing& R, Elem a) {
  return WitnessBuilder(R, Property::semiprime).role("a", a).cond("a", Claim::nonzero).cond("a*g*a", Claim::zero, "g").done();
}

}  // namespace

PropertyResult is_prime(const FiniteRing& R, const PredicateOptions& o) {
  const std::size_t n = R.size();
  if (n <= o.prime_cap) {
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t hit = parallel_find_first(n, [&](std::size_t j) { return j != 0 && kills(R, elem(i), elem(j)); });
      if (hit != n) return fail(Property::prime, prime_witness(R, elem(i), elem(hit)), generator_scan(R));
    }
    return pass(Property::prime, generator_scan(R));
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(n - 1));
  for (std::size_t t = 0; t < o.random_trials; ++t) {
    const Elem a{pick(rng)};
    const std::size_t hit = parallel_find_first(n, [&](std::size_t j) { return j != 0 && kills(R, a, elem(j)); });
    if (hit != n)
      return fail(Property::prime, prime_witness(R, a, elem(hit)),
                  "randomized refutation (seed " + std::to_string(o.seed) + ")");
  }
  auto res = undecided(Property::prime, "carrier exceeds the " + std::to_string(o.prime_cap) +
                                            "-element cap; randomized refutation found nothing");
  res.universe = std::to_string(o.random_trials) + " seeded random a (seed " + std::to_string(o.seed) + ")";
  return res;
}

PropertyResult is_semiprime(const FiniteRing& R, const PredicateOptions& o) {
  const std::size_t n = R.size();
  if (n <= o.prime_cap) {
    const std::size_t hit = parallel_find_first(n, [&](std::size_t i) { return i != 0 && kills(R, elem(i), elem(i)); });
    if (hit != n) return fail(Property::semiprime, semiprime_witness(R, elem(hit)), generator_scan(R));
    return pass(Property::semiprime, generator_scan(R));
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(n - 1));
  for (std::size_t t = 0; t < o.random_trials * 64; ++t) {
    const Elem a{pick(rng)};
    if (kills(R, a, a))
      return fail(Property::semiprime, semiprime_witness(R, a), "randomized refutation (seed " + std::to_string(o.seed) + ")");
  }
  auto res = undecided(Property::semiprime, "carrier exceeds the " + std::to_string(o.prime_cap) +
                                                "-element cap; randomized refutation found nothing");
  res.universe = std::to_string(o.random_trials * 64) + " seeded random a (seed " + std::to_string(o.seed) + ")";
  return res;
}

PropertyResult is_domain(const FiniteRing& R) {
  const std::size_t n = R.size();
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t hit =
        parallel_find_first(n, [&](std::size_t j) { return j != 0 && R.mul(elem(i), elem(j)) == R.zero(); });
    if (hit != n)
      return fail(Property::domain,
                  WitnessBuilder(R, Property::domain)
                      .role("a", elem(i))
                      .role("b", elem(hit))
                      .cond("a", Claim::nonzero)
                      .cond("b", Claim::nonzero)
                      .cond("a*b", Claim::zero)
                      .done(),
                  full_scan(R));
  }
  return pass(Property::domain, full_scan(R));
}

PropertyResult check(const FiniteRing& R, Property p, const PredicateOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  PropertyResult r;
  if (R.is_zero_ring()) {
    r = pass(p, "zero ring", "degenerate: zero ring (1 = 0), holds vacuously");
  } else {
    switch (p) {
      case Property::reduced: r = is_reduced(R); break;
      case Property::lnzs: r = is_lnzs(R); break;
      case Property::semicommutative: r = is_semicommutative(R); break;
      case Property::reversible: r = is_reversible(R); break;
      case Property::weakly_semicommutative: r = is_weakly_semicommutative(R, o); break;
      case Property::ni: r = is_ni(R); break;
      case Property::abelian: r = is_abelian(R); break;
      case Property::quasi_normal: r = is_quasi_normal(R); break;
      case Property::left_min_abel: r = is_left_min_abel(R); break;
      case Property::left_mc2: r = is_left_mc2(R); break;
      case Property::prime: r = is_prime(R, o); break;
      case Property::semiprime: r = is_semiprime(R, o); break;
      case Property::domain: r = is_domain(R); break;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.witness && !recheck(R, *r.witness)) throw std::logic_error("witness recheck failed for " + std::string(property_name(p)));
  return r;
}

PropertyReport check_all(const FiniteRing& R, const std::vector<Property>& props, const PredicateOptions& o) {
  PropertyReport rep{R.recipe(), {}};
  for (Property p : props) rep.results.push_back(check(R, p, o));
  return rep;
}

// ---- free-algebra quotients ---------------------------------------------

PropertyResult check(const FreeAlgebraQuotient& Q, Property p) {
  const std::string why = "free-algebra quotient " + Q.recipe() + " is not enumerable";
  if (Q.ideal().kind() == WordIdeal::Kind::linear_span || (p != Property::lnzs && p != Property::reduced))
    return undecided(p, why);
  const unsigned max_len = 4;
  const auto& A = Q.algebra();
  const std::string universe = "monomials of length <= " + std::to_string(max_len) + ", r over letters";
  auto mk = [&](Witness w) {
    for (auto& c : w.conditions) c.value = Q.render(evaluate(Q, w, c.expression));
    if (!recheck(Q, w)) throw std::logic_error("free-algebra witness recheck failed");
    return fail(p, std::move(w), universe);
  };
  if (auto f = monomial_lnzs_search(Q, max_len)) {
    Witness w;
    w.property = std::string(property_name(p));
    if (p == Property::lnzs) {
      w.rendered = {{"a", A.render_word(f->a)}, {"r", A.render_word(f->r)}, {"b", A.render_word(f->b)}};
      w.conditions = {{"b^" + std::to_string(f->b_index), Claim::zero, "", ""},
                      {"a*b", Claim::zero, "", ""},
                      {"a*r*b", Claim::nonzero, "", ""}};
    } else {
      w.rendered = {{"a", A.render_word(f->b)}};
      w.conditions = {{"a", Claim::nonzero, "", ""}, {"a^" + std::to_string(f->b_index), Claim::zero, "", ""}};
    }
    return mk(std::move(w));
  }
  auto r = undecided(p, why + "; bounded monomial search found no violation");
  r.universe = universe;
  return r;
}

}  // namespace ringlab
