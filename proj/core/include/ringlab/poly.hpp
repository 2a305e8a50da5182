#pragma once

// Skew polynomials R[x;a] over enumerable rings, Laurent polynomials, and
// the bounded-degree checkers for the polynomial results (alpha-condition,
// nilpotency, nilradical equality, Armendariz variants).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// Ring endomorphism stored as a full index map.
class Endomorphism {
 public:
  static Endomorphism identity(RingPtr R);
  /// Verifies that `map` preserves 0, 1, + and * (all pairs up to 4096
  /// elements, generator pairs plus seeded samples beyond).
  Endomorphism(RingPtr R, std::vector<std::uint32_t> map, std::string name);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::string& name() const noexcept { return name_; }
  bool is_identity() const noexcept { return identity_; }
  Elem operator()(Elem a) const { return Elem{map_[a.index]}; }
  /// alpha^k(a).
  Elem power(Elem a, unsigned k) const;

 private:
  RingPtr ring_;
  std::vector<std::uint32_t> map_;
  std::string name_;
  bool identity_;
};

/// "id", "swap" (Product(A,A)) or "conj:<element>" (inner automorphism by a unit).
Endomorphism endomorphism_by_name(RingPtr R, const std::string& name);

/// Coefficients a_0..a_n, trailing zeros pruned.
struct SkewPoly {
  std::vector<Elem> coeffs;
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;
};

class SkewPolyRing {
 public:
  explicit SkewPolyRing(Endomorphism alpha);

  const FiniteRing& base() const { return *alpha_.ring(); }
  const Endomorphism& alpha() const noexcept { return alpha_; }

  SkewPoly make(std::vector<Elem> coeffs) const;
  SkewPoly constant(Elem a) const { return make({a}); }
  /// c x^k.
  SkewPoly monomial(Elem c, unsigned k) const;
  SkewPoly x() const { return monomial(base().one(), 1); }
  SkewPoly one() const { return constant(base().one()); }

  SkewPoly add(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly neg(const SkewPoly& f) const;
  /// Coefficient k of fg is the sum over i+j=k of a_i alpha^i(b_j).
  SkewPoly mul(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly pow(const SkewPoly& f, unsigned k) const;
  std::string render(const SkewPoly& f) const;

  /// Polynomial number `index` among those of degree <= d, read as a
  /// |R|-ary numeral with a_0 least significant.
  SkewPoly from_index(std::uint64_t index, unsigned d) const;
  /// |R|^(d+1), or nullopt when it overflows 2^62.
  std::optional<std::uint64_t> universe_size(unsigned d) const;

 private:
  Endomorphism alpha_;
};

/// Outcome of a bounded-universe check. `universe` states exactly what was
/// covered; nothing beyond it is claimed.
struct BoundedCheck {
  bool holds = true;
  bool applicable = true;  // false when a precondition failed
  bool exhaustive = true;
  std::uint64_t covered = 0;
  std::uint64_t seed = 0;
  std::string universe;
  std::string note;
  std::vector<std::pair<std::string, std::string>> witness;
};

struct BoundedOptions {
  unsigned degree = 2;
  std::uint64_t universe_cap = 1'000'000;
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 1;
};

/// ab = 0 iff a alpha(b) = 0, scanned over all pairs.
BoundedCheck alpha_condition_check(const Endomorphism& alpha);

/// a_1...a_n = 0 iff alpha^k1(a_1)...alpha^kn(a_n) = 0. Throws
/// PreconditionError when the alpha-condition fails.
bool lemma_ac_check(const Endomorphism& alpha, const std::vector<Elem>& tuple, const std::vector<unsigned>& shifts);

struct NilpotencyResult {
  bool nilpotent = false;
  unsigned index = 0;                    // least k with f^k = 0
  std::optional<unsigned> coefficient_bound;  // sum of coefficient indices + 1 when all are nilpotent
  unsigned exact_bound = 0;              // powers tested
};

/// Exact: f is nilpotent iff f^K = 0 for K = nilpotency_bound() of the base
/// ring. Left multiplication by f acts right-F_p[x]-linearly on each free
/// layer (p^i R / p^(i+1) R)[x], so a nilpotent f kills the K layers in K steps.
NilpotencyResult nilpotency_test(const SkewPolyRing& P, const SkewPoly& f);

/// f nilpotent iff all coefficients nilpotent, for deg f <= degree.
BoundedCheck nilradical_equality_check(const SkewPolyRing& P, const BoundedOptions& options = {});
/// f^(sum m_i + 1) = 0 for every f with nilpotent coefficients.
BoundedCheck nilpotent_coefficient_bound_check(const SkewPolyRing& P, const BoundedOptions& options = {});
/// Every nilpotent f has nilpotent coefficients.
BoundedCheck nilpotent_coefficients_check(const SkewPolyRing& P, const BoundedOptions& options = {});

/// fg = 0 forces a_i b_j = 0 (ordinary polynomials).
BoundedCheck armendariz_check(RingPtr R, const BoundedOptions& options = {});
/// fg = 0 in R[x;alpha] forces a_i alpha^i(b_j) = 0.
BoundedCheck alpha_skew_armendariz_check(const SkewPolyRing& P, const BoundedOptions& options = {});
/// f h g = 0 whenever g is nilpotent and fg = 0 (h over additive generators
/// c x^l, which suffices by additivity in h).
BoundedCheck skew_lnzs_transfer_check(const SkewPolyRing& P, const BoundedOptions& options = {});
/// l(g) closed under right multiplication in R[x;alpha]: searches f, h, g
/// like skew_lnzs_transfer_check and reports the first failure.
std::optional<std::vector<std::pair<std::string, std::string>>> skew_lnzs_witness(const SkewPolyRing& P,
                                                                                 const BoundedOptions& options);

/// Laurent polynomial sum c_k x^(offset+k), both ends pruned.
struct LaurentPoly {
  int offset = 0;
  std::vector<Elem> coeffs;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

class LaurentRing {
 public:
  explicit LaurentRing(RingPtr R);
  const FiniteRing& base() const { return *ring_; }

  LaurentPoly make(int offset, std::vector<Elem> coeffs) const;
  LaurentPoly monomial(Elem c, int k) const { return make(k, {c}); }
  LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) const;
  LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) const;
  std::string render(const LaurentPoly& f) const;

  /// Rejects alpha != identity.
  LaurentPoly from_skew(const SkewPolyRing& P, const SkewPoly& f) const;
  /// Requires offset >= 0.
  SkewPoly to_skew(const SkewPolyRing& P, const LaurentPoly& f) const;

 private:
  RingPtr ring_;
};

}  // namespace ringlab
