#include "ringlab/finite_ring.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "ringlab/error.hpp"
#include "ringlab/modarith.hpp"
#include "ringlab/parallel.hpp"

namespace ringlab {
namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Adds the cyclic subgroup <g> to `span`, recording new members in `list`.
void extend_span(const FiniteRing& ring, std::vector<std::uint8_t>& in_span, std::vector<Elem>& list, Elem g) {
  const std::size_t old_size = list.size();
  Elem t = g;
  while (!in_span[t.index]) {
    for (std::size_t i = 0; i < old_size; ++i) {
      const Elem s = ring.add(list[i], t);
      in_span[s.index] = 1;
      list.push_back(s);
    }
    t = ring.add(t, g);
  }
}

}  // namespace

FiniteRing::FiniteRing(std::size_t size, std::string recipe) : size_(size), recipe_(std::move(recipe)) {
  if (size == 0) throw PreconditionError("a ring has at least one element");
  nil_bound_ = std::max(1u, max_prime_exponent(size));
}

FiniteRing::~FiniteRing() = default;

Elem FiniteRing::one() const {
  if (!one_) throw PreconditionError("ring " + recipe_ + " has no multiplicative identity");
  return *one_;
}

std::string FiniteRing::render(Elem a) const { return "#" + std::to_string(a.index); }

Elem FiniteRing::pow(Elem a, unsigned k) const {
  if (k == 0) return one();
  Elem result = a;
  for (unsigned i = 1; i < k; ++i) result = mul(result, a);
  return result;
}

Elem FiniteRing::times(std::uint64_t k, Elem a) const {
  Elem acc = zero();
  Elem base = a;
  while (k > 0) {
    if (k & 1u) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

const std::vector<Elem>& FiniteRing::additive_generators() const {
  std::call_once(gens_once_, [this] { gens_ = Subgroup::whole(*this).generators(); });
  return gens_;
}

unsigned FiniteRing::nilpotency_index(Elem a) const {
  std::call_once(nil_once_, [this] {
    std::vector<std::uint8_t> index(size_, 0);
    parallel_for(size_, [&](std::size_t i) {
      const Elem a{static_cast<std::uint32_t>(i)};
      Elem p = a;
      for (unsigned k = 1; k <= nilpotency_bound(); ++k) {
        if (p == zero()) {
          index[i] = static_cast<std::uint8_t>(k);
          return;
        }
        p = mul(p, a);
      }
    });
    nil_index_ = std::move(index);
  });
  return nil_index_[a.index];
}

std::optional<Elem> FiniteRing::parse_element(std::string_view text) const {
  const std::string want = strip_spaces(text);
  for (Elem a : elements())
    if (strip_spaces(render(a)) == want) return a;
  return std::nullopt;
}

TableRing::TableRing(std::size_t n, std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul,
                     std::optional<Elem> one, std::string recipe, RingPtr source)
    : FiniteRing(n, std::move(recipe)), add_(std::move(add)), mul_(std::move(mul)), source_(std::move(source)) {
  if (add_.size() != n * n || mul_.size() != n * n) throw PreconditionError("table size mismatch");
  for (auto v : add_)
    if (v >= n) throw PreconditionError("addition table entry out of range");
  for (auto v : mul_)
    if (v >= n) throw PreconditionError("multiplication table entry out of range");
  neg_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (add_[a * n + b] == 0) {
        neg_[a] = static_cast<std::uint32_t>(b);
        break;
      }
  set_one(one);
}

std::string TableRing::render(Elem a) const { return source_ ? source_->render(a) : FiniteRing::render(a); }

std::shared_ptr<const TableRing> materialize(const RingPtr& ring) {
  const std::size_t n = ring->size();
  std::vector<std::uint32_t> add(n * n), mul(n * n);
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Elem x{static_cast<std::uint32_t>(a)}, y{static_cast<std::uint32_t>(b)};
      add[a * n + b] = ring->add(x, y).index;
      mul[a * n + b] = ring->mul(x, y).index;
    }
  }, 16);
  std::optional<Elem> one;
  if (ring->has_one()) one = ring->one();
  return std::make_shared<const TableRing>(n, std::move(add), std::move(mul), one, ring->recipe(), ring);
}

RingPtr tabulate_if_small(RingPtr ring) {
  if (ring->size() <= table_threshold() && !dynamic_cast<const TableRing*>(ring.get())) return materialize(ring);
  return ring;
}

Subgroup::Subgroup(const FiniteRing& ring, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  member_.assign(ring.size(), 0);
  for (Elem m : members) member_[m.index] = 1;
  std::vector<std::uint8_t> in_span(ring.size(), 0);
  std::vector<Elem> span{ring.zero()};
  in_span[0] = 1;
  for (Elem m : members) {
    if (in_span[m.index]) continue;
    generators_.push_back(m);
    extend_span(ring, in_span, span, m);
  }
  if (span.size() != members.size()) throw PreconditionError("Subgroup: member list is not closed under addition");
  elements_ = std::move(members);
}

Subgroup Subgroup::span(const FiniteRing& ring, std::span<const Elem> generators) {
  std::vector<std::uint8_t> in_span(ring.size(), 0);
  std::vector<Elem> list{ring.zero()};
  in_span[0] = 1;
  for (Elem g : generators) extend_span(ring, in_span, list, g);
  return Subgroup(ring, std::move(list));
}

Subgroup Subgroup::whole(const FiniteRing& ring) {
  std::vector<Elem> all(ring.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = Elem{static_cast<std::uint32_t>(i)};
  return Subgroup(ring, std::move(all));
}

AxiomReport ring_axiom_check(const FiniteRing& R, const AxiomCheckOptions& options) {
  AxiomReport report;
  const std::size_t n = R.size();
  auto fail = [&](std::string what) {
    if (report.violations.size() < 16) report.violations.push_back(std::move(what));
  };
  auto show = [&](Elem a) { return R.render(a); };

  if (options.require_identity && !R.has_one()) fail("no multiplicative identity");
  for (Elem a : R.elements()) {
    if (R.add(a, R.zero()) != a || R.add(R.zero(), a) != a) fail("0 is not an additive identity at " + show(a));
    if (R.add(a, R.neg(a)) != R.zero()) fail("negation fails at " + show(a));
    if (R.has_one() && (R.mul(R.one(), a) != a || R.mul(a, R.one()) != a))
      fail("1 is not a multiplicative identity at " + show(a));
  }

  auto triple = [&](Elem a, Elem b, Elem c) {
    if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
      fail("addition not associative at (" + show(a) + ", " + show(b) + ", " + show(c) + ")");
    if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
      fail("multiplication not associative at (" + show(a) + ", " + show(b) + ", " + show(c) + ")");
    if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
      fail("left distributivity fails at (" + show(a) + ", " + show(b) + ", " + show(c) + ")");
    if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))
      fail("right distributivity fails at (" + show(a) + ", " + show(b) + ", " + show(c) + ")");
  };
  auto pair = [&](Elem a, Elem b) {
    if (R.add(a, b) != R.add(b, a)) fail("addition not commutative at (" + show(a) + ", " + show(b) + ")");
  };

  if (n <= options.exhaustive_limit) {
    for (Elem a : R.elements())
      for (Elem b : R.elements()) {
        pair(a, b);
        for (Elem c : R.elements()) triple(a, b, c);
      }
    return report;
  }

  report.exhaustive = false;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  std::vector<Elem> probe = R.additive_generators();
  if (R.has_one()) probe.push_back(R.one());
  for (Elem a : probe)
    for (Elem b : probe) {
      pair(a, b);
      for (Elem c : probe) triple(a, b, c);
    }
  for (std::size_t s = 0; s < options.samples; ++s) {
    const Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
    pair(a, b);
    triple(a, b, c);
  }
  report.note = "identity and inverse laws on all " + std::to_string(n) + " elements; ring laws on generator triples and " +
                std::to_string(options.samples) + " seeded random triples (seed " + std::to_string(options.seed) + ")";
  return report;
}

}  // namespace ringlab
