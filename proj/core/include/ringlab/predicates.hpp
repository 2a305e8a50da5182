#pragma once

// Ring-class predicates. Each returns a verdict plus, on failure, a witness
// whose conditions are expressions over its roles that re-evaluate in the
// ring to the stored values.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/free_algebra.hpp"

namespace ringlab {

enum class Truth { holds, fails, undecided };
std::string_view truth_name(Truth t);

enum class Property {
  reduced,
  lnzs,
  semicommutative,
  reversible,
  weakly_semicommutative,
  ni,
  abelian,
  quasi_normal,
  left_min_abel,
  left_mc2,
  prime,
  semiprime,
  domain,
};

const std::vector<Property>& all_properties();
std::string_view property_name(Property p);
/// Case-insensitive; '-' and '_' are ignored ("quasi-normal" = "quasinormal").
std::optional<Property> parse_property(std::string_view name);

/// One claim about an expression over the witness roles. Expressions use
/// role names, 0, 1, + - *, ^n and parentheses. With `forall` set, the claim
/// is asserted for that variable ranging over additive generators of R.
struct Condition {
  enum class Claim { zero, nonzero, nilpotent, not_nilpotent, minimal_left_idempotent };
  std::string expression;
  Claim claim;
  std::string value;  // rendered value of the expression
  std::string forall;
};

struct Witness {
  std::string property;
  std::vector<std::pair<std::string, Elem>> elems;            // roles in an enumerable ring
  std::vector<std::pair<std::string, std::string>> rendered;  // roles as element strings
  std::vector<Condition> conditions;

  /// Roles followed by the nonzero evaluated expressions, as strings.
  std::vector<std::pair<std::string, std::string>> flat() const;
};

/// Fills `rendered` from `elems`.
void render_roles(const FiniteRing& R, Witness& w);
/// Evaluates an expression over the roles of `w`.
Elem evaluate(const FiniteRing& R, const Witness& w, std::string_view expression);
/// True when every condition of `w` holds in R.
bool recheck(const FiniteRing& R, const Witness& w);
/// Same for witnesses in a free-algebra quotient (roles parsed as polynomials).
bool recheck(const FreeAlgebraQuotient& Q, const Witness& w);
FreeAlgebraElem evaluate(const FreeAlgebraQuotient& Q, const Witness& w, std::string_view expression);

struct PropertyResult {
  Property property;
  Truth truth = Truth::holds;
  std::optional<Witness> witness;
  std::string universe;
  std::string note;
  double seconds = 0;

  bool holds() const { return truth == Truth::holds; }
  bool fails() const { return truth == Truth::fails; }
};

struct PredicateOptions {
  std::size_t prime_cap = 4096;  // full prime/semiprime scans up to this size
  std::uint64_t exhaustive_work_cap = 200'000'000;
  std::size_t random_trials = 64;
  std::uint64_t seed = 1;
};

PropertyResult is_reduced(const FiniteRing& R);
/// Generator-reduced: for b in N(R) in order, a over generators of l(b),
/// r over additive generators of R.
PropertyResult is_lnzs(const FiniteRing& R);
/// Oracle: every b in N(R), every a with ab = 0, every r.
PropertyResult is_lnzs_exhaustive(const FiniteRing& R);
/// Via is_right_closed(left_annihilator(R, b)) for every nilpotent b.
PropertyResult is_lnzs_by_closure(const FiniteRing& R);
PropertyResult is_semicommutative(const FiniteRing& R);
PropertyResult is_reversible(const FiniteRing& R);
PropertyResult is_weakly_semicommutative(const FiniteRing& R, const PredicateOptions& o = {});
PropertyResult is_ni(const FiniteRing& R);
PropertyResult is_abelian(const FiniteRing& R);
PropertyResult is_quasi_normal(const FiniteRing& R);
PropertyResult is_left_min_abel(const FiniteRing& R);
PropertyResult is_left_mc2(const FiniteRing& R);
PropertyResult is_prime(const FiniteRing& R, const PredicateOptions& o = {});
PropertyResult is_semiprime(const FiniteRing& R, const PredicateOptions& o = {});
PropertyResult is_domain(const FiniteRing& R);

PropertyResult check(const FiniteRing& R, Property p, const PredicateOptions& o = {});

/// Free-algebra quotients are not enumerable: LNZS and reducedness are
/// refuted by bounded monomial search when possible, everything else is
/// undecided.
PropertyResult check(const FreeAlgebraQuotient& Q, Property p);

/// A property that cannot be decided on this backend.
PropertyResult undecided(Property p, std::string note);

struct PropertyReport {
  std::string ring;
  std::vector<PropertyResult> results;
};

PropertyReport check_all(const FiniteRing& R, const std::vector<Property>& props, const PredicateOptions& o = {});

}  // namespace ringlab
