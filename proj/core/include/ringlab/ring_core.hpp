#pragma once

// Element inventories, annihilators and ideals of enumerable rings.

#include <optional>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

struct NilpotentEntry {
  Elem element;
  unsigned index;
  friend bool operator==(const NilpotentEntry&, const NilpotentEntry&) = default;
};

/// N(R) in element order, each with its least vanishing power.
std::vector<NilpotentEntry> nilpotents(const FiniteRing& R);
std::vector<Elem> nilpotent_elements(const FiniteRing& R);
std::vector<Elem> idempotents(const FiniteRing& R);
std::vector<Elem> center(const FiniteRing& R);
std::vector<Elem> units(const FiniteRing& R);
std::vector<Elem> central_nonzerodivisors(const FiniteRing& R);

bool is_central(const FiniteRing& R, Elem a);
/// u^-1 when u is a unit.
std::optional<Elem> inverse(const FiniteRing& R, Elem u);
/// Some nonzero x with x*a = 0 or a*x = 0.
std::optional<Elem> zero_divisor_partner(const FiniteRing& R, Elem a);

/// l(b) = {a : ab = 0}.
Subgroup left_annihilator(const FiniteRing& R, Elem b);
/// r(w) = {h : wh = 0}.
Subgroup right_annihilator(const FiniteRing& R, Elem w);

struct ClosureWitness {
  Elem s, r, product;
};
/// First (s, r) in generators(S) x additive_generators(R) with s*r outside S.
/// By additivity this decides closure of S under right multiplication.
std::optional<ClosureWitness> right_closure_failure(const FiniteRing& R, const Subgroup& S);
std::optional<ClosureWitness> left_closure_failure(const FiniteRing& R, const Subgroup& S);
inline bool is_right_closed(const FiniteRing& R, const Subgroup& S) { return !right_closure_failure(R, S); }

/// Structured "not an ideal" evidence: `product` = r*s (left) or s*r (right).
struct IdealFailure {
  bool left_side;
  ClosureWitness witness;
};
std::optional<IdealFailure> ideal_failure(const FiniteRing& R, const Subgroup& S);
inline bool is_ideal(const FiniteRing& R, const Subgroup& S) { return !ideal_failure(R, S); }

/// Smallest two-sided ideal containing `gens`.
Subgroup ideal_generated_by(const FiniteRing& R, const std::vector<Elem>& gens);
/// Smallest left ideal containing `gens` (includes the Z-multiples, so it
/// also works in rings without identity).
Subgroup left_ideal_generated_by(const FiniteRing& R, const std::vector<Elem>& gens);

/// Additive subgroup spanned by `elems`.
Subgroup span_of(const FiniteRing& R, const std::vector<Elem>& elems);

/// ME_l(R): nonzero idempotents e such that Ra = Re for every nonzero a in Re.
std::vector<Elem> minimal_left_idempotents(const FiniteRing& R);

/// re = ere for all r (checked on additive generators, which suffices).
bool is_left_semicentral(const FiniteRing& R, Elem e);
/// er = ere for all r.
bool is_right_semicentral(const FiniteRing& R, Elem e);

}  // namespace ringlab
