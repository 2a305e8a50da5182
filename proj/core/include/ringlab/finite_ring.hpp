#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ringlab {

/// Element of an enumerable ring, identified by its position in the ring's
/// canonical element order. Index 0 is always the additive identity.
struct Elem {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

/// An enumerable ring on the carrier {0, ..., size-1}. Implementations are
/// immutable after construction; every query is a pure function, so a ring
/// may be shared freely between threads.
class FiniteRing {
 public:
  FiniteRing(std::size_t size, std::string recipe);
  virtual ~FiniteRing();
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  std::size_t size() const noexcept { return size_; }
  /// Construction recipe in ring-description syntax, e.g. "T(2,Zmod(2))".
  const std::string& recipe() const noexcept { return recipe_; }

  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual std::string render(Elem a) const;

  Elem zero() const noexcept { return Elem{0}; }
  bool has_one() const noexcept { return one_.has_value(); }
  /// Multiplicative identity; throws PreconditionError for rings without one.
  Elem one() const;
  bool is_zero_ring() const noexcept { return size_ == 1; }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, unsigned k) const;
  Elem mul3(Elem a, Elem b, Elem c) const { return mul(mul(a, b), c); }
  /// k*a as iterated addition.
  Elem times(std::uint64_t k, Elem a) const;

  auto elements() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(size_)) |
           std::views::transform([](std::uint32_t i) { return Elem{i}; });
  }

  /// Greedy additive generating set over the canonical order (cached).
  const std::vector<Elem>& additive_generators() const;

  /// Every nilpotent a satisfies a^K = 0 for K = max_p log_p |R_p|, where R_p
  /// is the p-primary part of (R,+): left multiplication by a is nilpotent on
  /// each F_p-layer p^i R_p / p^(i+1) R_p. Without an identity this only
  /// says a^K R = 0, so the bound is K + 1.
  unsigned nilpotency_bound() const noexcept { return nil_bound_ + (has_one() ? 0 : 1); }

  /// Least k with a^k = 0, or 0 when a is not nilpotent (cached).
  unsigned nilpotency_index(Elem a) const;
  bool is_nilpotent(Elem a) const { return nilpotency_index(a) != 0; }

  /// Element whose rendering equals `text` after whitespace removal.
  std::optional<Elem> parse_element(std::string_view text) const;

 protected:
  void set_one(std::optional<Elem> one) { one_ = one; }

 private:
  std::size_t size_;
  std::string recipe_;
  std::optional<Elem> one_;
  unsigned nil_bound_;

  mutable std::once_flag gens_once_;
  mutable std::vector<Elem> gens_;
  mutable std::once_flag nil_once_;
  mutable std::vector<std::uint8_t> nil_index_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Ring given by explicit tables.
class TableRing final : public FiniteRing {
 public:
  /// `add` and `mul` are row-major n*n tables; `one` is absent for rngs.
  /// `source`, when given, supplies element rendering.
  TableRing(std::size_t n, std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul,
            std::optional<Elem> one, std::string recipe, RingPtr source = nullptr);

  Elem add(Elem a, Elem b) const override { return Elem{add_[a.index * size() + b.index]}; }
  Elem neg(Elem a) const override { return Elem{neg_[a.index]}; }
  Elem mul(Elem a, Elem b) const override { return Elem{mul_[a.index * size() + b.index]}; }
  std::string render(Elem a) const override;

  const std::vector<std::uint32_t>& add_table() const noexcept { return add_; }
  const std::vector<std::uint32_t>& mul_table() const noexcept { return mul_; }
  /// The ring this table was copied from, if any.
  const RingPtr& source() const noexcept { return source_; }

 private:
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  RingPtr source_;
};

/// Table copy of any finite ring (same element order, recipe and rendering).
std::shared_ptr<const TableRing> materialize(const RingPtr& ring);

/// Materializes when the carrier is at most table_threshold(); otherwise
/// returns the ring unchanged.
RingPtr tabulate_if_small(RingPtr ring);

/// Additive subgroup of a finite ring stored as its sorted member list, a
/// membership bitmap, and canonical generators (greedy over the sorted
/// members), so equal subgroups compare equal member-by-member.
class Subgroup {
 public:
  /// `members` must already be closed under addition and negation.
  Subgroup(const FiniteRing& ring, std::vector<Elem> members);
  static Subgroup span(const FiniteRing& ring, std::span<const Elem> generators);
  static Subgroup whole(const FiniteRing& ring);

  bool contains(Elem a) const { return member_[a.index] != 0; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return elements_.size(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  Subgroup() = default;
  std::vector<Elem> elements_;
  std::vector<std::uint8_t> member_;
  std::vector<Elem> generators_;
};

struct AxiomReport {
  std::vector<std::string> violations;
  bool exhaustive = true;
  std::string note;
  bool ok() const noexcept { return violations.empty(); }
};

struct AxiomCheckOptions {
  bool require_identity = true;
  std::size_t exhaustive_limit = 256;  // carriers up to this size get a full triple scan
  std::size_t samples = 20000;
  std::uint64_t seed = 1;
};

/// Empty report iff the tables form an associative ring (with identity when
/// required). Larger carriers are checked on generator triples plus seeded
/// random triples; the report then says so.
AxiomReport ring_axiom_check(const FiniteRing& ring, const AxiomCheckOptions& options = {});

}  // namespace ringlab
