#pragma once

// Derived rings. Every constructor returns an immutable ring whose recipe is
// the ring-description expression that rebuilds it.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/lin_ring.hpp"

namespace ringlab {

/// Z/m with element index = residue.
RingPtr zmod(std::uint64_t m);
/// Same ring as zmod(p) with recipe Fp(p); p must be prime.
RingPtr prime_field(std::uint64_t p);

/// Matrices over `base` whose entries are tied to "slots": every cell of a
/// slot holds the same base element, cells outside all slots are zero.
/// Index = mixed radix over slots, slot 0 least significant.
class MatrixPatternRing final : public FiniteRing {
 public:
  using Cell = std::pair<unsigned, unsigned>;
  MatrixPatternRing(RingPtr base, unsigned n, std::vector<std::vector<Cell>> slots, std::string recipe);

  Elem add(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  std::string render(Elem a) const override;

  const FiniteRing& base() const noexcept { return *base_; }
  unsigned order() const noexcept { return n_; }
  /// Row-major n*n entries.
  std::vector<Elem> entries(Elem a) const;
  /// Element with the given entries; throws PreconditionError if the
  /// matrix violates the pattern.
  Elem from_entries(const std::vector<Elem>& entries) const;
  /// Matrix unit e_ij (1-based), only meaningful when the pattern allows it.
  Elem unit(unsigned i, unsigned j) const;

 private:
  RingPtr base_;
  unsigned n_;
  std::vector<std::vector<Cell>> slots_;
  std::vector<int> slot_of_cell_;  // -1 for forced zeros
  std::size_t b_;
};

/// T_n(R); T_1(R) is R.
RingPtr upper_triangular(RingPtr base, unsigned n);
/// R_n: upper triangular with constant diagonal; R_1 is R.
RingPtr diag_const(RingPtr base, unsigned n);
/// M_n(R).
RingPtr full_matrix(RingPtr base, unsigned n);

/// T(R,R) on pairs (r,s), index = r + s*|R|.
RingPtr trivial_extension(RingPtr base);

/// Unitalization of a Z/m-algebra A on pairs (a,s), index = a + s*|A|.
/// m must be squarefree and m*A = 0.
RingPtr dorroh(RingPtr A, std::uint64_t m);

/// (Z/m)^k with zero multiplication (no identity).
RingPtr zero_algebra(std::uint64_t m, unsigned k);

/// Componentwise product, component 0 least significant. A single ring is
/// returned unchanged.
RingPtr direct_product(const std::vector<RingPtr>& factors);

/// R/I; I must be a two-sided ideal (NotAnIdeal otherwise, naming the
/// failing product). Cosets are ordered by their least representative.
class QuotientRing final : public FiniteRing {
 public:
  QuotientRing(RingPtr R, const Subgroup& I, std::string recipe);

  Elem add(Elem a, Elem b) const override { return project(parent_->add(lift(a), lift(b))); }
  Elem neg(Elem a) const override { return project(parent_->neg(lift(a))); }
  Elem mul(Elem a, Elem b) const override { return project(parent_->mul(lift(a), lift(b))); }
  std::string render(Elem a) const override;

  const FiniteRing& parent() const noexcept { return *parent_; }
  Elem project(Elem x) const { return Elem{coset_[x.index]}; }
  /// Least representative of the coset.
  Elem lift(Elem a) const { return reps_[a.index]; }
  /// Zero ring flag: the ideal was all of R.
  bool degenerate() const noexcept { return size() == 1; }

 private:
  RingPtr parent_;
  std::vector<std::uint32_t> coset_;
  std::vector<Elem> reps_;
};

std::shared_ptr<const QuotientRing> quotient(RingPtr R, const Subgroup& I, std::string recipe = {});

/// {[[x,y],[z,w]] over Z/m : x = w, y = z mod 2}; m even.
RingPtr congruence_subring(std::uint64_t m);

/// Index map of (x,y) -> (y,x) on Product(A,A).
std::vector<std::uint32_t> swap_map(const RingPtr& R);
/// Index map of a -> u a u^-1 for a unit u.
std::vector<std::uint32_t> conjugation_map(const RingPtr& R, Elem u);

/// Localization at a multiplicatively closed set of central non-zero-divisors.
/// In a finite ring these are units, so the ring itself carries the fractions.
struct Localization {
  RingPtr ring;
  std::map<std::uint32_t, Elem> inverses;  // delta -> delta^-1
  /// The element u^-1 a.
  Elem fraction(Elem u, Elem a) const;
};
Localization localize(RingPtr R, const std::vector<Elem>& delta);

}  // namespace ringlab
