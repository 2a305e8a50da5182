#include "ringlab/ring_core.hpp"

#include <algorithm>

#include "ringlab/config.hpp"
#include "ringlab/error.hpp"
#include "ringlab/parallel.hpp"

namespace ringlab {
namespace {

template <class Pred>
std::vector<Elem> scan(const FiniteRing& R, Pred&& pred) {
  require_within_cap(R.size(), R.recipe().c_str());
  std::vector<std::uint8_t> hit(R.size(), 0);
  parallel_for(R.size(), [&](std::size_t i) { hit[i] = pred(Elem{static_cast<std::uint32_t>(i)}) ? 1 : 0; });
  std::vector<Elem> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back(Elem{static_cast<std::uint32_t>(i)});
  return out;
}

// Closes `current` under x -> g*x and/or x -> x*g for additive generators g.
Subgroup close_ideal(const FiniteRing& R, Subgroup current, bool left, bool right) {
  const auto& gens = R.additive_generators();
  for (;;) {
    std::vector<Elem> extra;
    for (Elem s : current.generators())
      for (Elem g : gens) {
        if (left) {
          const Elem p = R.mul(g, s);
          if (!current.contains(p)) extra.push_back(p);
        }
        if (right) {
          const Elem p = R.mul(s, g);
          if (!current.contains(p)) extra.push_back(p);
        }
      }
    if (extra.empty()) return current;
    std::vector<Elem> all = current.generators();
    all.insert(all.end(), extra.begin(), extra.end());
    current = Subgroup::span(R, all);
  }
}

}  // namespace

std::vector<NilpotentEntry> nilpotents(const FiniteRing& R) {
  std::vector<NilpotentEntry> out;
  for (Elem a : scan(R, [&](Elem a) { return R.is_nilpotent(a); })) out.push_back({a, R.nilpotency_index(a)});
  return out;
}

std::vector<Elem> nilpotent_elements(const FiniteRing& R) {
  return scan(R, [&](Elem a) { return R.is_nilpotent(a); });
}

std::vector<Elem> idempotents(const FiniteRing& R) {
  return scan(R, [&](Elem a) { return R.mul(a, a) == a; });
}

bool is_central(const FiniteRing& R, Elem a) {
  for (Elem g : R.additive_generators())
    if (R.mul(a, g) != R.mul(g, a)) return false;
  return true;
}

std::vector<Elem> center(const FiniteRing& R) {
  return scan(R, [&](Elem a) { return is_central(R, a); });
}

std::optional<Elem> inverse(const FiniteRing& R, Elem u) {
  if (!R.has_one()) return std::nullopt;
  const Elem one = R.one();
  for (Elem x : R.elements())
    if (R.mul(u, x) == one && R.mul(x, u) == one) return x;
  return std::nullopt;
}

std::vector<Elem> units(const FiniteRing& R) {
  if (!R.has_one()) return {};
  const Elem one = R.one();
  // In a finite ring a one-sided inverse is two-sided, so ux = 1 for some x suffices.
  return scan(R, [&](Elem u) {
    for (Elem x : R.elements())
      if (R.mul(u, x) == one) return true;
    return false;
  });
}

std::optional<Elem> zero_divisor_partner(const FiniteRing& R, Elem a) {
  for (Elem x : R.elements()) {
    if (x == R.zero()) continue;
    if (R.mul(x, a) == R.zero() || R.mul(a, x) == R.zero()) return x;
  }
  return std::nullopt;
}

std::vector<Elem> central_nonzerodivisors(const FiniteRing& R) {
  return scan(R, [&](Elem a) { return is_central(R, a) && !zero_divisor_partner(R, a) && !R.is_zero_ring(); });
}

Subgroup left_annihilator(const FiniteRing& R, Elem b) {
  return Subgroup(R, scan(R, [&](Elem a) { return R.mul(a, b) == R.zero(); }));
}

Subgroup right_annihilator(const FiniteRing& R, Elem w) {
  return Subgroup(R, scan(R, [&](Elem h) { return R.mul(w, h) == R.zero(); }));
}

std::optional<ClosureWitness> right_closure_failure(const FiniteRing& R, const Subgroup& S) {
  for (Elem s : S.generators())
    for (Elem r : R.additive_generators()) {
      const Elem p = R.mul(s, r);
      if (!S.contains(p)) return ClosureWitness{s, r, p};
    }
  return std::nullopt;
}

std::optional<ClosureWitness> left_closure_failure(const FiniteRing& R, const Subgroup& S) {
  for (Elem s : S.generators())
    for (Elem r : R.additive_generators()) {
      const Elem p = R.mul(r, s);
      if (!S.contains(p)) return ClosureWitness{s, r, p};
    }
  return std::nullopt;
}

std::optional<IdealFailure> ideal_failure(const FiniteRing& R, const Subgroup& S) {
  if (auto w = left_closure_failure(R, S)) return IdealFailure{true, *w};
  if (auto w = right_closure_failure(R, S)) return IdealFailure{false, *w};
  return std::nullopt;
}

Subgroup span_of(const FiniteRing& R, const std::vector<Elem>& elems) { return Subgroup::span(R, elems); }

Subgroup ideal_generated_by(const FiniteRing& R, const std::vector<Elem>& gens) {
  return close_ideal(R, Subgroup::span(R, gens), true, true);
}

Subgroup left_ideal_generated_by(const FiniteRing& R, const std::vector<Elem>& gens) {
  return close_ideal(R, Subgroup::span(R, gens), true, false);
}

std::vector<Elem> minimal_left_idempotents(const FiniteRing& R) {
  // Re = {re} since e = 1e when R has an identity; otherwise fall back to closure.
  auto left_multiples = [&](Elem a) -> std::size_t {
    if (!R.has_one()) return left_ideal_generated_by(R, {a}).size();
    std::vector<std::uint8_t> seen(R.size(), 0);
    std::size_t count = 0;
    for (Elem r : R.elements()) {
      const Elem p = R.mul(r, a);
      if (!seen[p.index]) {
        seen[p.index] = 1;
        ++count;
      }
    }
    return count;
  };
  std::vector<Elem> out;
  for (Elem e : idempotents(R)) {
    if (e == R.zero()) continue;
    const Subgroup Re = left_ideal_generated_by(R, {e});
    bool minimal = true;
    for (Elem a : Re.elements()) {
      if (a == R.zero()) continue;
      if (left_multiples(a) != Re.size()) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

bool is_left_semicentral(const FiniteRing& R, Elem e) {
  for (Elem r : R.additive_generators())
    if (R.mul(r, e) != R.mul3(e, r, e)) return false;
  return true;
}

bool is_right_semicentral(const FiniteRing& R, Elem e) {
  for (Elem r : R.additive_generators())
    if (R.mul(e, r) != R.mul3(e, r, e)) return false;
  return true;
}

}  // namespace ringlab
