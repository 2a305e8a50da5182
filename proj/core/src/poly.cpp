#include "ringlab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/parallel.hpp"

namespace ringlab {

// ---- endomorphisms ------------------------------------------------------

Endomorphism Endomorphism::identity(RingPtr R) {
  std::vector<std::uint32_t> map(R->size());
  std::iota(map.begin(), map.end(), 0u);
  return Endomorphism(std::move(R), std::move(map), "id");
}

Endomorphism::Endomorphism(RingPtr R, std::vector<std::uint32_t> map, std::string name)
    : ring_(std::move(R)), map_(std::move(map)), name_(std::move(name)) {
  const FiniteRing& r = *ring_;
  if (map_.size() != r.size()) throw PreconditionError("endomorphism map has the wrong size");
  identity_ = true;
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] >= r.size()) throw PreconditionError("endomorphism map entry out of range");
    if (map_[i] != i) identity_ = false;
  }
  if (identity_) return;
  auto bad = [&](Elem a, Elem b) {
    const Elem fa = (*this)(a), fb = (*this)(b);
    return (*this)(r.add(a, b)) != r.add(fa, fb) || (*this)(r.mul(a, b)) != r.mul(fa, fb);
  };
  if (map_[0] != 0) throw PreconditionError(name_ + " does not fix 0");
  if (r.has_one() && (*this)(r.one()) != r.one()) throw PreconditionError(name_ + " does not fix 1");
  const std::size_t n = r.size();
  if (n <= 4096) {
    const std::size_t hit = parallel_find_first(n * n, [&](std::size_t k) {
      return bad(Elem{static_cast<std::uint32_t>(k % n)}, Elem{static_cast<std::uint32_t>(k / n)});
    }, 4096);
    if (hit != n * n) throw PreconditionError(name_ + " is not a ring endomorphism");
    return;
  }
  const auto& gens = r.additive_generators();
  for (Elem a : gens)
    for (Elem b : gens)
      if (bad(a, b)) throw PreconditionError(name_ + " is not a ring endomorphism");
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  for (int s = 0; s < 20000; ++s)
    if (bad(Elem{pick(rng)}, Elem{pick(rng)})) throw PreconditionError(name_ + " is not a ring endomorphism");
}

Elem Endomorphism::power(Elem a, unsigned k) const {
  if (identity_) return a;
  for (unsigned i = 0; i < k; ++i) a = (*this)(a);
  return a;
}

Endomorphism endomorphism_by_name(RingPtr R, const std::string& name) {
  if (name == "id") return Endomorphism::identity(std::move(R));
  if (name == "swap") {
    auto map = swap_map(R);
    return Endomorphism(std::move(R), std::move(map), "swap");
  }
  if (name.rfind("conj:", 0) == 0) {
    const auto u = R->parse_element(name.substr(5));
    if (!u) throw PreconditionError("unknown element '" + name.substr(5) + "' in " + R->recipe());
    auto map = conjugation_map(R, *u);
    return Endomorphism(std::move(R), std::move(map), name);
  }
  throw PreconditionError("unknown endomorphism '" + name + "' (expected id, swap or conj:<unit>)");
}

// ---- skew polynomials ---------------------------------------------------

SkewPolyRing::SkewPolyRing(Endomorphism alpha) : alpha_(std::move(alpha)) {}

SkewPoly SkewPolyRing::make(std::vector<Elem> coeffs) const {
  while (!coeffs.empty() && coeffs.back() == base().zero()) coeffs.pop_back();
  return SkewPoly{std::move(coeffs)};
}

SkewPoly SkewPolyRing::monomial(Elem c, unsigned k) const {
  std::vector<Elem> v(k + 1, base().zero());
  v[k] = c;
  return make(std::move(v));
}

SkewPoly SkewPolyRing::add(const SkewPoly& f, const SkewPoly& g) const {
  std::vector<Elem> v(std::max(f.coeffs.size(), g.coeffs.size()), base().zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Elem a = i < f.coeffs.size() ? f.coeffs[i] : base().zero();
    const Elem b = i < g.coeffs.size() ? g.coeffs[i] : base().zero();
    v[i] = base().add(a, b);
  }
  return make(std::move(v));
}

SkewPoly SkewPolyRing::neg(const SkewPoly& f) const {
  std::vector<Elem> v;
  for (Elem a : f.coeffs) v.push_back(base().neg(a));
  return make(std::move(v));
}

SkewPoly SkewPolyRing::mul(const SkewPoly& f, const SkewPoly& g) const {
  if (f.is_zero() || g.is_zero()) return {};
  const FiniteRing& R = base();
  std::vector<Elem> v(f.coeffs.size() + g.coeffs.size() - 1, R.zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == R.zero()) continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      if (g.coeffs[j] == R.zero()) continue;
      const Elem t = R.mul(f.coeffs[i], alpha_.power(g.coeffs[j], static_cast<unsigned>(i)));
      v[i + j] = R.add(v[i + j], t);
    }
  }
  return make(std::move(v));
}

SkewPoly SkewPolyRing::pow(const SkewPoly& f, unsigned k) const {
  SkewPoly r = one();
  for (unsigned i = 0; i < k; ++i) r = mul(r, f);
  return r;
}

std::string SkewPolyRing::render(const SkewPoly& f) const {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == base().zero()) continue;
    if (!s.empty()) s += " + ";
    s += base().render(f.coeffs[i]);
    if (i == 1) s += "*x";
    if (i > 1) s += "*x^" + std::to_string(i);
  }
  return s;
}

std::optional<std::uint64_t> SkewPolyRing::universe_size(unsigned d) const {
  std::uint64_t n = 1;
  for (unsigned i = 0; i <= d; ++i) {
    if (n > (std::uint64_t{1} << 62) / base().size()) return std::nullopt;
    n *= base().size();
  }
  return n;
}

SkewPoly SkewPolyRing::from_index(std::uint64_t index, unsigned d) const {
  std::vector<Elem> v(d + 1);
  for (auto& c : v) {
    c = Elem{static_cast<std::uint32_t>(index % base().size())};
    index /= base().size();
  }
  return make(std::move(v));
}

// ---- bounded checks -----------------------------------------------------

namespace {

// Scans `count` indices (or seeded samples of them beyond the cap) and
// returns the first index with pred true.
template <class Pred>
std::optional<std::uint64_t> scan_universe(std::optional<std::uint64_t> count, const BoundedOptions& o, BoundedCheck& out,
                                           const std::string& what, Pred&& pred) {
  if (count && *count <= o.universe_cap) {
    out.exhaustive = true;
    out.covered = *count;
    out.universe = "all " + std::to_string(*count) + " " + what;
    const std::size_t hit = parallel_find_first(static_cast<std::size_t>(*count), [&](std::size_t i) { return pred(i); }, 256);
    if (hit != *count) return hit;
    return std::nullopt;
  }
  out.exhaustive = false;
  out.seed = o.seed;
  out.covered = o.samples;
  out.universe = std::to_string(o.samples) + " seeded samples (seed " + std::to_string(o.seed) + ") of " + what;
  std::mt19937_64 rng(o.seed);
  const std::uint64_t hi = count ? *count - 1 : (std::uint64_t{1} << 62);
  std::uniform_int_distribution<std::uint64_t> pick(0, hi);
  std::vector<std::uint64_t> sample(o.samples);
  for (auto& s : sample) s = pick(rng);
  const std::size_t hit = parallel_find_first(sample.size(), [&](std::size_t i) { return pred(sample[i]); }, 256);
  if (hit != sample.size()) return sample[hit];
  return std::nullopt;
}

std::string degree_note(const SkewPolyRing& P, unsigned d, const char* kind) {
  return std::string(kind) + " of degree <= " + std::to_string(d) + " over " + P.base().recipe() +
         (P.alpha().is_identity() ? "" : " with alpha = " + P.alpha().name());
}

bool all_nilpotent(const FiniteRing& R, const SkewPoly& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [&](Elem a) { return R.is_nilpotent(a); });
}

std::optional<std::uint64_t> squared(std::optional<std::uint64_t> n) {
  if (!n || *n > (std::uint64_t{1} << 31)) return std::nullopt;
  return *n * *n;
}

}  // namespace

BoundedCheck alpha_condition_check(const Endomorphism& alpha) {
  const FiniteRing& R = *alpha.ring();
  BoundedCheck out;
  const std::size_t n = R.size();
  require_within_cap(n, R.recipe().c_str());
  out.covered = static_cast<std::uint64_t>(n) * n;
  out.universe = "all " + std::to_string(out.covered) + " pairs of " + R.recipe();
  if (alpha.is_identity()) return out;
  const std::size_t hit = parallel_find_first(n * n, [&](std::size_t k) {
    const Elem a{static_cast<std::uint32_t>(k / n)}, b{static_cast<std::uint32_t>(k % n)};
    return (R.mul(a, b) == R.zero()) != (R.mul(a, alpha(b)) == R.zero());
  }, 4096);
  if (hit == n * n) return out;
  const Elem a{static_cast<std::uint32_t>(hit / n)}, b{static_cast<std::uint32_t>(hit % n)};
  out.holds = false;
  out.witness = {{"a", R.render(a)}, {"b", R.render(b)}, {"a*b", R.render(R.mul(a, b))},
                 {"a*alpha(b)", R.render(R.mul(a, alpha(b)))}};
  return out;
}

bool lemma_ac_check(const Endomorphism& alpha, const std::vector<Elem>& tuple, const std::vector<unsigned>& shifts) {
  if (tuple.size() != shifts.size() || tuple.empty()) throw PreconditionError("tuple and shifts must have equal, nonzero length");
  if (!alpha_condition_check(alpha).holds)
    throw PreconditionError("alpha-condition fails for " + alpha.name() + " on " + alpha.ring()->recipe());
  const FiniteRing& R = *alpha.ring();
  Elem plain = tuple[0], twisted = alpha.power(tuple[0], shifts[0]);
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    plain = R.mul(plain, tuple[i]);
    twisted = R.mul(twisted, alpha.power(tuple[i], shifts[i]));
  }
  return (plain == R.zero()) == (twisted == R.zero());
}

NilpotencyResult nilpotency_test(const SkewPolyRing& P, const SkewPoly& f) {
  const FiniteRing& R = P.base();
  NilpotencyResult res;
  if (all_nilpotent(R, f)) {
    unsigned k = 1;
    for (Elem a : f.coeffs) k += R.nilpotency_index(a);
    res.coefficient_bound = k;
  }
  res.exact_bound = R.nilpotency_bound();
  SkewPoly p = f;
  for (unsigned k = 1; k <= res.exact_bound; ++k) {
    if (p.is_zero()) {
      res.nilpotent = true;
      res.index = k;
      return res;
    }
    p = P.mul(p, f);
  }
  return res;
}

BoundedCheck nilradical_equality_check(const SkewPolyRing& P, const BoundedOptions& o) {
  BoundedCheck out;
  if (auto ac = alpha_condition_check(P.alpha()); !ac.holds) {
    out.applicable = false;
    out.note = "alpha-condition fails; see witness";
    out.witness = ac.witness;
    return out;
  }
  const FiniteRing& R = P.base();
  const auto hit = scan_universe(P.universe_size(o.degree), o, out, degree_note(P, o.degree, "polynomials"),
                                 [&](std::uint64_t i) {
                                   const SkewPoly f = P.from_index(i, o.degree);
                                   return nilpotency_test(P, f).nilpotent != all_nilpotent(R, f);
                                 });
  if (hit) {
    const SkewPoly f = P.from_index(*hit, o.degree);
    out.holds = false;
    out.witness = {{"f", P.render(f)}, {"f nilpotent", nilpotency_test(P, f).nilpotent ? "true" : "false"}};
  }
  return out;
}

BoundedCheck nilpotent_coefficient_bound_check(const SkewPolyRing& P, const BoundedOptions& o) {
  BoundedCheck out;
  const auto hit = scan_universe(P.universe_size(o.degree), o, out, degree_note(P, o.degree, "polynomials"),
                                 [&](std::uint64_t i) {
                                   const SkewPoly f = P.from_index(i, o.degree);
                                   const auto r = nilpotency_test(P, f);
                                   if (!r.coefficient_bound) return false;
                                   return !P.pow(f, *r.coefficient_bound).is_zero();
                                 });
  if (hit) {
    const SkewPoly f = P.from_index(*hit, o.degree);
    out.holds = false;
    out.witness = {{"f", P.render(f)}, {"k", std::to_string(*nilpotency_test(P, f).coefficient_bound)}};
  }
  return out;
}

BoundedCheck nilpotent_coefficients_check(const SkewPolyRing& P, const BoundedOptions& o) {
  BoundedCheck out;
  const FiniteRing& R = P.base();
  const auto hit = scan_universe(P.universe_size(o.degree), o, out, degree_note(P, o.degree, "polynomials"),
                                 [&](std::uint64_t i) {
                                   const SkewPoly f = P.from_index(i, o.degree);
                                   return nilpotency_test(P, f).nilpotent && !all_nilpotent(R, f);
                                 });
  if (hit) {
    out.holds = false;
    out.witness = {{"f", P.render(P.from_index(*hit, o.degree))}};
  }
  return out;
}

namespace {

// Pair scan for the (alpha-skew) Armendariz condition.
BoundedCheck armendariz_scan(const SkewPolyRing& P, const BoundedOptions& o, bool twisted) {
  BoundedCheck out;
  const FiniteRing& R = P.base();
  const auto U = P.universe_size(o.degree);
  auto violation = [&](const SkewPoly& f, const SkewPoly& g) -> std::optional<std::pair<std::size_t, std::size_t>> {
    if (!P.mul(f, g).is_zero()) return std::nullopt;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
      for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
        const Elem b = twisted ? P.alpha().power(g.coeffs[j], static_cast<unsigned>(i)) : g.coeffs[j];
        if (R.mul(f.coeffs[i], b) != R.zero()) return std::pair{i, j};
      }
    return std::nullopt;
  };
  const auto hit = scan_universe(squared(U), o, out, degree_note(P, o.degree, "pairs of polynomials"),
                                 [&](std::uint64_t k) {
                                   return violation(P.from_index(k % *U, o.degree), P.from_index(k / *U, o.degree))
                                       .has_value();
                                 });
  if (hit) {
    const SkewPoly f = P.from_index(*hit % *U, o.degree), g = P.from_index(*hit / *U, o.degree);
    const auto [i, j] = *violation(f, g);
    const Elem b = twisted ? P.alpha().power(g.coeffs[j], static_cast<unsigned>(i)) : g.coeffs[j];
    out.holds = false;
    out.witness = {{"f", P.render(f)},
                   {"g", P.render(g)},
                   {"i", std::to_string(i)},
                   {"j", std::to_string(j)},
                   {twisted ? "a_i*alpha^i(b_j)" : "a_i*b_j", R.render(R.mul(f.coeffs[i], b))}};
  }
  return out;
}

}  // namespace

BoundedCheck armendariz_check(RingPtr R, const BoundedOptions& o) {
  return armendariz_scan(SkewPolyRing(Endomorphism::identity(std::move(R))), o, false);
}

BoundedCheck alpha_skew_armendariz_check(const SkewPolyRing& P, const BoundedOptions& o) {
  return armendariz_scan(P, o, true);
}

namespace {

struct TransferScan {
  std::vector<SkewPoly> nilpotent_g;
  std::vector<SkewPoly> h_gens;
};

TransferScan transfer_setup(const SkewPolyRing& P, unsigned d) {
  const FiniteRing& R = P.base();
  TransferScan t;
  const auto U = P.universe_size(d);
  if (!U || *U > 50'000'000) throw ResourceLimit("polynomial universe too large");
  for (std::uint64_t i = 0; i < *U; ++i) {
    SkewPoly g = P.from_index(i, d);
    if (nilpotency_test(P, g).nilpotent) t.nilpotent_g.push_back(std::move(g));
  }
  for (unsigned l = 0; l <= d; ++l)
    for (Elem c : R.additive_generators()) t.h_gens.push_back(P.monomial(c, l));
  return t;
}

}  // namespace

std::optional<std::vector<std::pair<std::string, std::string>>> skew_lnzs_witness(const SkewPolyRing& P,
                                                                                 const BoundedOptions& options) {
  auto check = skew_lnzs_transfer_check(P, options);
  if (check.holds) return std::nullopt;
  return check.witness;
}

BoundedCheck skew_lnzs_transfer_check(const SkewPolyRing& P, const BoundedOptions& o) {
  BoundedCheck out;
  const TransferScan t = transfer_setup(P, o.degree);
  const auto U = P.universe_size(o.degree);
  std::optional<std::uint64_t> count;
  if (*U <= (std::uint64_t{1} << 40) / std::max<std::size_t>(t.nilpotent_g.size(), 1)) count = *U * t.nilpotent_g.size();
  const std::size_t ng = t.nilpotent_g.size();
  auto failing_h = [&](const SkewPoly& f, const SkewPoly& g) -> std::optional<std::size_t> {
    if (!P.mul(f, g).is_zero()) return std::nullopt;
    for (std::size_t k = 0; k < t.h_gens.size(); ++k)
      if (!P.mul(P.mul(f, t.h_gens[k]), g).is_zero()) return k;
    return std::nullopt;
  };
  const auto hit = scan_universe(count, o, out, degree_note(P, o.degree, "pairs (f, g) with g nilpotent,"),
                                 [&](std::uint64_t k) {
                                   return failing_h(P.from_index(k / ng, o.degree), t.nilpotent_g[k % ng]).has_value();
                                 });
  out.universe += "; h over c*x^l with c an additive generator, l <= " + std::to_string(o.degree);
  if (hit) {
    const SkewPoly f = P.from_index(*hit / ng, o.degree), g = t.nilpotent_g[*hit % ng];
    const SkewPoly& h = t.h_gens[*failing_h(f, g)];
    out.holds = false;
    out.witness = {{"f", P.render(f)}, {"h", P.render(h)}, {"g", P.render(g)},
                   {"f*h*g", P.render(P.mul(P.mul(f, h), g))}};
  }
  return out;
}

// ---- Laurent ------------------------------------------------------------

LaurentRing::LaurentRing(RingPtr R) : ring_(std::move(R)) {}

LaurentPoly LaurentRing::make(int offset, std::vector<Elem> coeffs) const {
  while (!coeffs.empty() && coeffs.back() == ring_->zero()) coeffs.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == ring_->zero()) ++lead;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  if (coeffs.empty()) return {};
  return LaurentPoly{offset + static_cast<int>(lead), std::move(coeffs)};
}

LaurentPoly LaurentRing::add(const LaurentPoly& f, const LaurentPoly& g) const {
  if (f.coeffs.empty()) return g;
  if (g.coeffs.empty()) return f;
  const int lo = std::min(f.offset, g.offset);
  const int hi = std::max(f.offset + static_cast<int>(f.coeffs.size()), g.offset + static_cast<int>(g.coeffs.size()));
  std::vector<Elem> v(static_cast<std::size_t>(hi - lo), ring_->zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    auto& c = v[static_cast<std::size_t>(f.offset - lo) + i];
    c = ring_->add(c, f.coeffs[i]);
  }
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
    auto& c = v[static_cast<std::size_t>(g.offset - lo) + i];
    c = ring_->add(c, g.coeffs[i]);
  }
  return make(lo, std::move(v));
}

LaurentPoly LaurentRing::mul(const LaurentPoly& f, const LaurentPoly& g) const {
  if (f.coeffs.empty() || g.coeffs.empty()) return {};
  std::vector<Elem> v(f.coeffs.size() + g.coeffs.size() - 1, ring_->zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i)
    for (std::size_t j = 0; j < g.coeffs.size(); ++j)
      v[i + j] = ring_->add(v[i + j], ring_->mul(f.coeffs[i], g.coeffs[j]));
  return make(f.offset + g.offset, std::move(v));
}

std::string LaurentRing::render(const LaurentPoly& f) const {
  if (f.coeffs.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == ring_->zero()) continue;
    const int e = f.offset + static_cast<int>(i);
    if (!s.empty()) s += " + ";
    s += ring_->render(f.coeffs[i]);
    if (e == 1) s += "*x";
    else if (e != 0) s += "*x^" + std::to_string(e);
  }
  return s;
}

LaurentPoly LaurentRing::from_skew(const SkewPolyRing& P, const SkewPoly& f) const {
  if (!P.alpha().is_identity()) throw PreconditionError("Laurent view needs alpha = identity");
  return make(0, f.coeffs);
}

SkewPoly LaurentRing::to_skew(const SkewPolyRing& P, const LaurentPoly& f) const {
  if (f.offset < 0) throw PreconditionError("Laurent polynomial has negative powers");
  std::vector<Elem> v(static_cast<std::size_t>(f.offset), ring_->zero());
  v.insert(v.end(), f.coeffs.begin(), f.coeffs.end());
  return P.make(std::move(v));
}

}  // namespace ringlab
