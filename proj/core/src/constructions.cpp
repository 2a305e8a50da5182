#include "ringlab/constructions.hpp"

#include <algorithm>

#include "ringlab/config.hpp"
#include "ringlab/error.hpp"
#include "ringlab/modarith.hpp"
#include "ringlab/ring_core.hpp"

namespace ringlab {
namespace {

class ModularRing final : public FiniteRing {
 public:
  ModularRing(std::uint64_t m, std::string recipe) : FiniteRing(m, std::move(recipe)), m_(m) {
    set_one(Elem{static_cast<std::uint32_t>(1 % m)});
  }
  Elem add(Elem a, Elem b) const override { return Elem{static_cast<std::uint32_t>((a.index + b.index) % m_)}; }
  Elem neg(Elem a) const override { return Elem{static_cast<std::uint32_t>((m_ - a.index) % m_)}; }
  Elem mul(Elem a, Elem b) const override {
    return Elem{static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % m_)};
  }
  std::string render(Elem a) const override { return std::to_string(a.index); }

 private:
  std::uint64_t m_;
};

std::size_t checked_power(std::size_t base, std::size_t exp, const std::string& what) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (n > max_carrier() / std::max<std::size_t>(base, 1)) throw ResourceLimit(what + " exceeds the enumeration cap");
    n *= base;
  }
  require_within_cap(n, what.c_str());
  return n;
}

std::string join_elems(const FiniteRing& R, const std::vector<Elem>& xs, const char* open, const char* close) {
  std::string s = open;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += R.render(xs[i]);
  }
  return s + close;
}

// Pairs (x, y) with index x + y*|X| and an arbitrary bilinear-style product.
class PairRing final : public FiniteRing {
 public:
  using Mul = std::function<std::pair<Elem, Elem>(const PairRing&, Elem, Elem, Elem, Elem)>;
  PairRing(RingPtr first, RingPtr second, Mul mul, std::optional<std::pair<Elem, Elem>> one, std::string recipe,
           bool is_product = false)
      : FiniteRing(checked_pair_size(*first, *second, recipe), std::move(recipe)),
        first_(std::move(first)),
        second_(std::move(second)),
        mul_(std::move(mul)),
        n1_(first_->size()),
        is_product_(is_product) {
    if (one) set_one(pack(one->first, one->second));
  }

  const FiniteRing& first() const { return *first_; }
  const FiniteRing& second() const { return *second_; }
  bool is_product() const { return is_product_; }
  Elem pack(Elem x, Elem y) const { return Elem{static_cast<std::uint32_t>(x.index + y.index * n1_)}; }
  Elem x_of(Elem a) const { return Elem{static_cast<std::uint32_t>(a.index % n1_)}; }
  Elem y_of(Elem a) const { return Elem{static_cast<std::uint32_t>(a.index / n1_)}; }

  Elem add(Elem a, Elem b) const override {
    return pack(first_->add(x_of(a), x_of(b)), second_->add(y_of(a), y_of(b)));
  }
  Elem neg(Elem a) const override { return pack(first_->neg(x_of(a)), second_->neg(y_of(a))); }
  Elem mul(Elem a, Elem b) const override {
    const auto [x, y] = mul_(*this, x_of(a), y_of(a), x_of(b), y_of(b));
    return pack(x, y);
  }
  std::string render(Elem a) const override {
    return "(" + first_->render(x_of(a)) + "," + second_->render(y_of(a)) + ")";
  }

 private:
  static std::size_t checked_pair_size(const FiniteRing& a, const FiniteRing& b, const std::string& what) {
    if (a.size() > max_carrier() / b.size()) throw ResourceLimit(what + " exceeds the enumeration cap");
    return a.size() * b.size();
  }
  RingPtr first_, second_;
  Mul mul_;
  std::size_t n1_;
  bool is_product_;
};

class ZeroAlgebra final : public FiniteRing {
 public:
  ZeroAlgebra(std::uint64_t m, unsigned k)
      : FiniteRing(checked_power(m, k, "ZeroAlg"), "ZeroAlg(" + std::to_string(m) + "," + std::to_string(k) + ")"),
        m_(m),
        k_(k) {}
  Elem add(Elem a, Elem b) const override { return combine(a, b, 1); }
  Elem neg(Elem a) const override { return combine(zero(), a, m_ - 1); }
  Elem mul(Elem, Elem) const override { return zero(); }
  std::string render(Elem a) const override {
    if (k_ == 1) return std::to_string(a.index);
    std::string s = "(";
    std::uint64_t x = a.index;
    for (unsigned i = 0; i < k_; ++i) {
      if (i) s += ",";
      s += std::to_string(x % m_);
      x /= m_;
    }
    return s + ")";
  }

 private:
  // a + c*b digitwise.
  Elem combine(Elem a, Elem b, std::uint64_t c) const {
    std::uint64_t x = a.index, y = b.index, out = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += ((x % m_ + c * (y % m_)) % m_) * place;
      x /= m_;
      y /= m_;
      place *= m_;
    }
    return Elem{static_cast<std::uint32_t>(out)};
  }
  std::uint64_t m_;
  unsigned k_;
};

}  // namespace

RingPtr zmod(std::uint64_t m) {
  if (m < 1) throw PreconditionError("Zmod: modulus must be at least 1");
  require_within_cap(m, "Zmod");
  return std::make_shared<const ModularRing>(m, "Zmod(" + std::to_string(m) + ")");
}

RingPtr prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("Fp: " + std::to_string(p) + " is not prime");
  require_within_cap(p, "Fp");
  return std::make_shared<const ModularRing>(p, "Fp(" + std::to_string(p) + ")");
}

// ---- matrix patterns ----------------------------------------------------

MatrixPatternRing::MatrixPatternRing(RingPtr base, unsigned n, std::vector<std::vector<Cell>> slots, std::string recipe)
    : FiniteRing(checked_power(base->size(), slots.size(), recipe), std::move(recipe)),
      base_(std::move(base)),
      n_(n),
      slots_(std::move(slots)),
      slot_of_cell_(static_cast<std::size_t>(n) * n, -1),
      b_(base_->size()) {
  for (std::size_t s = 0; s < slots_.size(); ++s)
    for (const auto& [i, j] : slots_[s]) slot_of_cell_[i * n_ + j] = static_cast<int>(s);
  if (base_->has_one()) {
    std::vector<Elem> id(static_cast<std::size_t>(n_) * n_, base_->zero());
    for (unsigned i = 0; i < n_; ++i) id[i * n_ + i] = base_->one();
    set_one(from_entries(id));
  }
}

std::vector<Elem> MatrixPatternRing::entries(Elem a) const {
  std::vector<Elem> slot_values(slots_.size());
  std::uint64_t x = a.index;
  for (auto& v : slot_values) {
    v = Elem{static_cast<std::uint32_t>(x % b_)};
    x /= b_;
  }
  std::vector<Elem> out(static_cast<std::size_t>(n_) * n_, base_->zero());
  for (std::size_t c = 0; c < out.size(); ++c)
    if (slot_of_cell_[c] >= 0) out[c] = slot_values[static_cast<std::size_t>(slot_of_cell_[c])];
  return out;
}

Elem MatrixPatternRing::from_entries(const std::vector<Elem>& e) const {
  if (e.size() != static_cast<std::size_t>(n_) * n_) throw PreconditionError("matrix has the wrong number of entries");
  std::uint64_t index = 0;
  for (std::size_t s = slots_.size(); s-- > 0;) {
    const auto& [i, j] = slots_[s].front();
    index = index * b_ + e[i * n_ + j].index;
  }
  const Elem a{static_cast<std::uint32_t>(index)};
  for (std::size_t c = 0; c < e.size(); ++c) {
    const int s = slot_of_cell_[c];
    const Elem want = s < 0 ? base_->zero() : e[slots_[static_cast<std::size_t>(s)].front().first * n_ +
                                                   slots_[static_cast<std::size_t>(s)].front().second];
    if (e[c] != want) throw PreconditionError(recipe() + ": matrix does not fit the pattern");
  }
  return a;
}

Elem MatrixPatternRing::unit(unsigned i, unsigned j) const {
  std::vector<Elem> e(static_cast<std::size_t>(n_) * n_, base_->zero());
  e[(i - 1) * n_ + (j - 1)] = base_->one();
  return from_entries(e);
}

Elem MatrixPatternRing::add(Elem a, Elem b) const {
  std::uint64_t x = a.index, y = b.index, out = 0, place = 1;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    out += base_->add(Elem{static_cast<std::uint32_t>(x % b_)}, Elem{static_cast<std::uint32_t>(y % b_)}).index * place;
    x /= b_;
    y /= b_;
    place *= b_;
  }
  return Elem{static_cast<std::uint32_t>(out)};
}

Elem MatrixPatternRing::neg(Elem a) const {
  std::uint64_t x = a.index, out = 0, place = 1;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    out += base_->neg(Elem{static_cast<std::uint32_t>(x % b_)}).index * place;
    x /= b_;
    place *= b_;
  }
  return Elem{static_cast<std::uint32_t>(out)};
}

Elem MatrixPatternRing::mul(Elem a, Elem b) const {
  const auto A = entries(a), B = entries(b);
  std::uint64_t out = 0;
  for (std::size_t s = slots_.size(); s-- > 0;) {
    const auto [i, j] = slots_[s].front();
    Elem acc = base_->zero();
    for (unsigned k = 0; k < n_; ++k) {
      const Elem x = A[i * n_ + k], y = B[k * n_ + j];
      if (x == base_->zero() || y == base_->zero()) continue;
      acc = base_->add(acc, base_->mul(x, y));
    }
    out = out * b_ + acc.index;
  }
  return Elem{static_cast<std::uint32_t>(out)};
}

std::string MatrixPatternRing::render(Elem a) const {
  const auto e = entries(a);
  std::string s = "[";
  for (unsigned i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += join_elems(*base_, std::vector<Elem>(e.begin() + i * n_, e.begin() + (i + 1) * n_), "[", "]");
  }
  return s + "]";
}

RingPtr upper_triangular(RingPtr base, unsigned n) {
  if (n < 1) throw PreconditionError("T: n must be >= 1");
  if (n == 1) return base;
  std::vector<std::vector<MatrixPatternRing::Cell>> slots;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) slots.push_back({{i, j}});
  const std::string recipe = "T(" + std::to_string(n) + "," + base->recipe() + ")";
  return tabulate_if_small(std::make_shared<const MatrixPatternRing>(std::move(base), n, std::move(slots), recipe));
}

RingPtr diag_const(RingPtr base, unsigned n) {
  if (n < 1) throw PreconditionError("DiagConst: n must be >= 1");
  if (n == 1) return base;
  std::vector<std::vector<MatrixPatternRing::Cell>> slots(1);
  for (unsigned i = 0; i < n; ++i) slots[0].push_back({i, i});
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) slots.push_back({{i, j}});
  const std::string recipe = "DiagConst(" + std::to_string(n) + "," + base->recipe() + ")";
  return tabulate_if_small(std::make_shared<const MatrixPatternRing>(std::move(base), n, std::move(slots), recipe));
}

RingPtr full_matrix(RingPtr base, unsigned n) {
  if (n < 1) throw PreconditionError("M: n must be >= 1");
  if (n == 1) return base;
  std::vector<std::vector<MatrixPatternRing::Cell>> slots;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) slots.push_back({{i, j}});
  const std::string recipe = "M(" + std::to_string(n) + "," + base->recipe() + ")";
  return tabulate_if_small(std::make_shared<const MatrixPatternRing>(std::move(base), n, std::move(slots), recipe));
}

RingPtr trivial_extension(RingPtr base) {
  auto mul = [](const PairRing& P, Elem r1, Elem s1, Elem r2, Elem s2) {
    const FiniteRing& R = P.first();
    return std::pair{R.mul(r1, r2), R.add(R.mul(r1, s2), R.mul(s1, r2))};
  };
  std::optional<std::pair<Elem, Elem>> one;
  if (base->has_one()) one = std::pair{base->one(), base->zero()};
  const std::string recipe = "TrivExt(" + base->recipe() + ")";
  return tabulate_if_small(std::make_shared<const PairRing>(base, base, mul, one, recipe));
}

RingPtr dorroh(RingPtr A, std::uint64_t m) {
  if (m < 2 || !is_squarefree(m))
    throw PreconditionError("Dorroh: m = " + std::to_string(m) + " must be squarefree and at least 2");
  for (Elem g : A->additive_generators())
    if (A->times(m, g) != A->zero())
      throw PreconditionError("Dorroh: " + A->recipe() + " is not a Z/" + std::to_string(m) + "-algebra (" +
                              std::to_string(m) + "*" + A->render(g) + " != 0)");
  auto S = zmod(m);
  auto mul = [](const PairRing& P, Elem a, Elem s, Elem a1, Elem s1) {
    const FiniteRing& R = P.first();
    const Elem x = R.add(R.add(R.mul(a, a1), R.times(s.index, a1)), R.times(s1.index, a));
    return std::pair{x, P.second().mul(s, s1)};
  };
  const std::string recipe = "Dorroh(" + A->recipe() + "," + std::to_string(m) + ")";
  return tabulate_if_small(
      std::make_shared<const PairRing>(A, S, mul, std::pair{A->zero(), S->one()}, recipe));
}

RingPtr zero_algebra(std::uint64_t m, unsigned k) {
  if (m < 2 || k < 1) throw PreconditionError("ZeroAlg: need m >= 2 and k >= 1");
  return std::make_shared<const ZeroAlgebra>(m, k);
}

RingPtr direct_product(const std::vector<RingPtr>& factors) {
  if (factors.empty()) throw PreconditionError("Product: at least one factor is required");
  if (factors.size() == 1) return factors.front();
  std::string recipe = "Product(";
  for (std::size_t i = 0; i < factors.size(); ++i) recipe += (i ? "," : "") + factors[i]->recipe();
  recipe += ")";
  // Right-nested pairs give the same index order as a flat mixed radix.
  RingPtr tail = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) {
    auto mul = [](const PairRing& P, Elem x1, Elem y1, Elem x2, Elem y2) {
      return std::pair{P.first().mul(x1, x2), P.second().mul(y1, y2)};
    };
    std::optional<std::pair<Elem, Elem>> one;
    if (factors[i]->has_one() && tail->has_one()) one = std::pair{factors[i]->one(), tail->one()};
    std::string name = i == 0 ? recipe : "Product(" + factors[i]->recipe() + "," + tail->recipe() + ")";
    tail = std::make_shared<const PairRing>(factors[i], tail, mul, one, std::move(name), true);
  }
  return tabulate_if_small(tail);
}

// ---- quotients ----------------------------------------------------------

QuotientRing::QuotientRing(RingPtr R, const Subgroup& I, std::string recipe)
    : FiniteRing(R->size() / I.size(), std::move(recipe)), parent_(std::move(R)) {
  if (auto f = ideal_failure(*parent_, I)) {
    const auto& w = f->witness;
    throw NotAnIdeal("not an ideal: " +
                     (f->left_side ? parent_->render(w.r) + "*" + parent_->render(w.s)
                                   : parent_->render(w.s) + "*" + parent_->render(w.r)) +
                     " = " + parent_->render(w.product) + " lies outside the subgroup");
  }
  const std::uint32_t none = UINT32_MAX;
  coset_.assign(parent_->size(), none);
  for (Elem x : parent_->elements()) {
    if (coset_[x.index] != none) continue;
    const auto id = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(x);
    for (Elem i : I.elements()) coset_[parent_->add(x, i).index] = id;
  }
  if (parent_->has_one()) set_one(project(parent_->one()));
}

std::string QuotientRing::render(Elem a) const { return "[" + parent_->render(lift(a)) + "]"; }

std::shared_ptr<const QuotientRing> quotient(RingPtr R, const Subgroup& I, std::string recipe) {
  if (recipe.empty()) {
    recipe = "Quot(" + R->recipe();
    for (Elem g : I.generators()) recipe += ",\"" + R->render(g) + "\"";
    recipe += ")";
  }
  return std::make_shared<const QuotientRing>(std::move(R), I, std::move(recipe));
}

// ---- congruence subring -------------------------------------------------

RingPtr congruence_subring(std::uint64_t m) {
  if (m < 2 || m % 2 != 0) throw PreconditionError("CongrSubring: modulus must be even");
  auto algebra = lin_full_matrix(ModScalars{m}, 2);
  // Row-major coordinates (x, y, z, w).
  auto filter = [](const linalg::ModRow& v) { return (v[0] + v[3]) % 2 == 0 && (v[1] + v[2]) % 2 == 0; };
  auto renderer = [](const linalg::ModRow& v) {
    return "[[" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "],[" + std::to_string(v[2]) + "," +
           std::to_string(v[3]) + "]]";
  };
  return tabulate_if_small(std::make_shared<const EnumeratedLinRing>(
      std::move(algebra), filter, "CongrSubring(" + std::to_string(m) + ")", renderer));
}

std::vector<std::uint32_t> swap_map(const RingPtr& R) {
  const FiniteRing* ring = R.get();
  if (auto t = dynamic_cast<const TableRing*>(ring); t && t->source()) ring = t->source().get();
  const auto* pair = dynamic_cast<const PairRing*>(ring);
  if (!pair || !pair->is_product() || pair->first().recipe() != pair->second().recipe())
    throw PreconditionError("swap needs a product of two copies of one ring, got " + R->recipe());
  std::vector<std::uint32_t> map(R->size());
  for (Elem a : R->elements()) map[a.index] = pair->pack(pair->y_of(a), pair->x_of(a)).index;
  return map;
}

std::vector<std::uint32_t> conjugation_map(const RingPtr& R, Elem u) {
  const auto inv = inverse(*R, u);
  if (!inv) throw PreconditionError("conjugation needs a unit, " + R->render(u) + " is not invertible");
  std::vector<std::uint32_t> map(R->size());
  for (Elem a : R->elements()) map[a.index] = R->mul3(u, a, *inv).index;
  return map;
}

// ---- localization -------------------------------------------------------

Elem Localization::fraction(Elem u, Elem a) const {
  const auto it = inverses.find(u.index);
  if (it == inverses.end()) throw PreconditionError("element is not in the denominator set");
  return ring->mul(it->second, a);
}

Localization localize(RingPtr R, const std::vector<Elem>& delta) {
  Localization loc{R, {}};
  for (Elem d : delta) {
    if (!is_central(*R, d)) {
      for (Elem g : R->additive_generators())
        if (R->mul(d, g) != R->mul(g, d))
          throw PreconditionError("localize: " + R->render(d) + " is not central (it does not commute with " +
                                  R->render(g) + ")");
    }
    if (auto x = zero_divisor_partner(*R, d)) {
      const bool left = R->mul(*x, d) == R->zero();
      throw PreconditionError("localize: " + R->render(d) + " is a zero divisor (" +
                              (left ? R->render(*x) + "*" + R->render(d) : R->render(d) + "*" + R->render(*x)) +
                              " = 0)");
    }
  }
  for (Elem a : delta)
    for (Elem b : delta)
      if (std::find(delta.begin(), delta.end(), R->mul(a, b)) == delta.end())
        throw PreconditionError("localize: the set is not multiplicatively closed (" + R->render(a) + "*" +
                                R->render(b) + " = " + R->render(R->mul(a, b)) + ")");
  for (Elem d : delta) {
    auto inv = inverse(*R, d);
    if (!inv) throw PreconditionError("localize: " + R->render(d) + " has no inverse");
    loc.inverses.emplace(d.index, *inv);
  }
  return loc;
}

}  // namespace ringlab
