// Acceptance checks, one per criterion. Usage: ringlab_acceptance [N ...]
// Prints one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/oracles.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/cli/cli.hpp"
#include "ringlab/config.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/free_algebra.hpp"
#include "ringlab/lin_ring.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/ring_core.hpp"
#include "ringlab/spec_lang.hpp"
#include "ringlab/verifier.hpp"

using namespace ringlab;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

RingPtr ring(const std::string& spec) { return build_ring(spec).finite; }

Elem el(const FiniteRing& R, const std::string& text) {
  auto e = R.parse_element(text);
  if (!e) throw std::runtime_error("no element " + text + " in " + R.recipe());
  return *e;
}

const MatrixPatternRing& matrices(const RingPtr& R) {
  if (auto* m = dynamic_cast<const MatrixPatternRing*>(R.get())) return *m;
  if (auto* t = dynamic_cast<const TableRing*>(R.get()))
    if (auto* m = dynamic_cast<const MatrixPatternRing*>(t->source().get())) return *m;
  throw std::runtime_error(R->recipe() + " is not a matrix ring");
}

std::string role(const PropertyResult& r, const std::string& name) {
  if (!r.witness) return "";
  for (const auto& [k, v] : r.witness->rendered)
    if (k == name) return v;
  return "";
}

void suite_passes(Outcome& o, const std::string& id) {
  const SuiteResult s = run_suite(id);
  for (const auto& v : s.verdicts)
    o.expect(v.pass, id + ": " + v.ring + ": " + v.claim + (v.detail.empty() ? "" : " (" + v.detail + ")"));
  o.expect(s.error.empty(), id + " stopped: " + s.error);
}

// 1 ----------------------------------------------------------------------
Outcome c1() {
  Outcome o;
  const auto R = ring("T(2,Fp(2))");
  const auto l = is_lnzs(*R), s = is_semicommutative(*R);
  o.expect(l.holds(), "is_lnzs(T_2(F_2)) should be true");
  o.expect(s.fails(), "is_semicommutative(T_2(F_2)) should be false");
  o.expect(oracle::lnzs(*R) && !oracle::semicommutative(*R), "definitional oracle disagrees");
  o.expect(l.universe.find("full scan") != std::string::npos, "lnzs verdict is not a full scan");
  o.summary = "T_2(F_2): lnzs=" + std::string(truth_name(l.truth)) + ", semicommutative=" +
              std::string(truth_name(s.truth)) + " (" + std::to_string(R->size()) + " elements)";
  return o;
}

// 2 ----------------------------------------------------------------------
Outcome c2() {
  Outcome o;
  const std::vector<std::pair<std::string, bool>> bases = {
      {"Fp(2)", true},  {"Fp(3)", true},  {"Fp(5)", true},  {"Zmod(6)", true}, {"Product(Fp(2),Fp(2))", true},
      {"Zmod(4)", false}, {"Zmod(8)", false}, {"Zmod(9)", false}, {"T(2,Fp(2))", false},
  };
  int replayed = 0;
  for (const auto& [spec, reduced] : bases) {
    const auto R = ring(spec);
    const auto T = ring("T(2," + spec + ")");
    const bool red = is_reduced(*R).holds();
    const bool ln = is_lnzs(*T).holds();
    o.expect(red == reduced, spec + ": reducedness");
    o.expect(ln == red, spec + ": is_lnzs(T_2(R)) != is_reduced(R)");
    if (R->size() <= 9) o.expect(oracle::lnzs(*T) == ln, spec + ": oracle lnzs disagrees");
    if (red) continue;
    // The proof's witness for a nonzero x with x^2 = 0.
    std::optional<Elem> x;
    for (Elem a : R->elements())
      if (a != R->zero() && R->mul(a, a) == R->zero()) {
        x = a;
        break;
      }
    o.expect(x.has_value(), spec + ": no square-zero element");
    if (!x) continue;
    const auto& M = matrices(T);
    const Elem one = R->one(), z = R->zero();
    const Elem a = M.from_entries({*x, one, z, *x});
    const Elem r = M.from_entries({one, one, z, z});
    const Elem b = M.from_entries({*x, R->add(*x, one), z, R->neg(*x)});
    const Elem expected = M.from_entries({z, *x, z, z});
    o.expect(T->is_nilpotent(b), spec + ": b not nilpotent");
    o.expect(T->mul(a, b) == T->zero(), spec + ": ab != 0");
    o.expect(T->mul3(a, r, b) == expected && expected != T->zero(), spec + ": arb != [[0,x],[0,0]]");
    ++replayed;
  }
  o.summary = std::to_string(bases.size()) + " bases agree; proof witness replayed for " + std::to_string(replayed) +
              " non-reduced bases";
  return o;
}

// 3 ----------------------------------------------------------------------
Outcome c3() {
  Outcome o;
  const auto R = ring("T(3,Fp(2))");
  const auto& M = matrices(R);
  const auto r = is_lnzs(*R);
  o.expect(r.fails(), "T_3(F_2) reported LNZS");
  o.expect(r.witness && r.witness->elems.size() == 3, "missing witness");
  if (r.witness && r.witness->elems.size() == 3) {
    const Elem a = r.witness->elems[0].second, x = r.witness->elems[1].second, b = r.witness->elems[2].second;
    o.expect(a == M.unit(1, 1), "a != e11");
    o.expect(x == M.unit(1, 2), "r != e12");
    o.expect(b == M.unit(2, 3), "b != e23");
    o.expect(R->mul(a, b) == R->zero(), "e11 e23 != 0");
    o.expect(R->mul3(a, x, b) == M.unit(1, 3), "e11 e12 e23 != e13");
  }
  o.summary = "witness (a, r, b) = (" + role(r, "a") + ", " + role(r, "r") + ", " + role(r, "b") + ")";
  return o;
}

// 4 ----------------------------------------------------------------------
Outcome c4() {
  Outcome o;
  // Entries as printed; EF's (1,4) entry is 2 over the reals.
  const std::vector<int> A = {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0};
  const std::vector<int> E = {0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0};
  const std::vector<int> F = {1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1};
  const std::vector<int> EF = {0, 1, 1, 2, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0};
  std::string shown;
  for (int p : {2, 3}) {
    const auto R = ring("DiagConst(4,Fp(" + std::to_string(p) + "))");
    const auto& M = matrices(R);
    auto make = [&](const std::vector<int>& v) {
      std::vector<Elem> e;
      for (int x : v) e.push_back(Elem{static_cast<std::uint32_t>(x % p)});
      return M.from_entries(e);
    };
    const Elem a = make(A), e = make(E), f = make(F), ef = make(EF);
    o.expect(R->is_nilpotent(a), "A not nilpotent mod " + std::to_string(p));
    o.expect(R->mul(e, a) == R->zero(), "EA != 0 mod " + std::to_string(p));
    o.expect(R->mul(e, f) == ef, "EF differs from the printed matrix mod " + std::to_string(p));
    o.expect(R->mul3(e, f, a) == M.unit(1, 4), "EFA != e14 mod " + std::to_string(p));
    o.expect(is_lnzs(*R).fails(), "R_4 over F_" + std::to_string(p) + " reported LNZS");
    shown += (shown.empty() ? "" : "; ") + std::string("p=") + std::to_string(p) + " EF=" + R->render(R->mul(e, f));
  }
  o.summary = shown;
  return o;
}

// 5 ----------------------------------------------------------------------
Outcome c5() {
  Outcome o;
  using namespace oracle;
  const SHH A{{q0(), qi()}, {qj(), q0()}};
  const SHH B{{q0(), q1()}, {qk(), q0()}};
  const SHH C{{qj(), qi()}, {q0(), q0()}};
  const SHH B2 = B * B, AB = A * B, ACB = A * C * B;

  // Same products through the library's structure-constant backend.
  const auto H = rational_quaternions();
  const auto T = lin_trivial_extension(*H);
  const auto S = lin_trivial_extension(*T);
  const auto LA = S->combination({{1, "((0,i),0)"}, {1, "(0,(j,0))"}});
  const auto LB = S->combination({{1, "((0,1),0)"}, {1, "(0,(k,0))"}});
  const auto LC = S->combination({{1, "((j,0),0)"}, {1, "((0,i),0)"}});
  const auto LB2 = S->mul(LB, LB), LAB = S->mul(LA, LB), LACB = S->mul3(LA, LC, LB);
  o.expect(S->is_zero(LAB) == AB.zero() && S->is_zero(LACB) == ACB.zero() && S->is_zero(LB2) == B2.zero(),
           "library and oracle quaternion products disagree");

  o.expect(B2.zero(), "B^2 = 0 is false: B^2 = " + S->render_terms(LB2) + " (B^3 = " +
                          S->render_terms(S->mul(LB2, LB)) + ", so B is nilpotent of index 3)");
  o.expect(AB.zero(), "AB != 0");
  o.expect(!ACB.zero(), "ACB = 0");

  // Sampled reversibility of T(H,H): w random, h ranging over r(w).
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> coord(-2, 2);
  int bad = 0, nontrivial = 0;
  for (int t = 0; t < 10000; ++t) {
    RationalAlgebra::Vec w(T->dim());
    for (auto& c : w) c = Rational(coord(rng));
    // (a, b) with a != 0 is a unit of T(H,H); every other sample is a zero divisor.
    if (t % 2 == 0)
      for (std::size_t k = 0; k < H->dim(); ++k) w[k] = Rational(0);
    const auto basis = rational_right_annihilator(*T, w);
    RationalAlgebra::Vec h = T->zero();
    for (const auto& v : basis) h = T->add(h, T->scale(Rational(coord(rng)), v));
    if (!T->is_zero(T->mul(w, h))) ++bad;
    if (!T->is_zero(h)) ++nontrivial;
    if (!T->is_zero(T->mul(h, w))) ++bad;
  }
  o.expect(bad == 0, std::to_string(bad) + " sampled pairs violate reversibility");
  o.summary = "AB = 0, ACB = " + S->render_terms(LACB) + ", B^2 = " + S->render_terms(LB2) + "; T(H,H) reversible on " +
              "10000 samples (" + std::to_string(nontrivial) + " with h != 0)";
  return o;
}

// 6 ----------------------------------------------------------------------
Outcome c6() {
  Outcome o;
  const auto R = ring("CongrSubring(16)");
  o.expect(R->size() == 16384, "carrier size " + std::to_string(R->size()));
  const auto q = is_quasi_normal(*R);
  const auto l = is_lnzs(*R);
  o.expect(q.holds(), "not quasi-normal");
  o.expect(l.fails(), "reported LNZS");
  if (l.witness) o.expect(recheck(*R, *l.witness), "least witness does not recheck");
  const Elem a = el(*R, "[[0,2],[0,0]]"), r = el(*R, "[[2,2],[2,2]]");
  o.expect(R->is_nilpotent(a) && R->mul(a, a) == R->zero(), "a is not square-zero");
  const Elem ara = R->mul3(a, r, a);
  o.expect(R->render(ara) == "[[0,8],[0,0]]", "ara = " + R->render(ara));
  // l(a) contains a and is not closed on the right: a in l(a), ar not in l(a).
  o.expect(!left_annihilator(*R, a).contains(R->mul(a, r)), "ar lies in l(a)");
  o.summary = "quasi-normal=" + std::string(truth_name(q.truth)) + ", lnzs=" + std::string(truth_name(l.truth)) +
              "; a=[[0,2],[0,0]], r=[[2,2],[2,2]], ara=" + R->render(ara) + "; least search witness a=" + role(l, "a") +
              " r=" + role(l, "r") + " b=" + role(l, "b");
  return o;
}

// 7 ----------------------------------------------------------------------
Outcome c7() {
  Outcome o;
  const auto W = free_algebra_quotient(2, "xy", "square:xx", 6);
  const auto x = W->parse("x"), y = W->parse("y");
  o.expect(W->is_zero(W->pow(x, 4)), "x^4 != 0 in F<x,y>/<x^2>^2");
  const auto x3yx = W->mul(W->mul(W->pow(x, 3), y), x);
  o.expect(!W->is_zero(x3yx), "x^3 y x = 0");
  o.expect(W->is_zero(W->mul(W->pow(x, 3), x)), "x^3 * x != 0");
  const auto Hq = free_algebra_quotient(2, "xyz", "factor:xy", 6);
  const auto hx = Hq->parse("x"), hy = Hq->parse("y"), hz = Hq->parse("z");
  const auto xyx = Hq->mul(Hq->mul(hx, hy), hx);
  const auto xzyx = Hq->mul(Hq->mul(Hq->mul(hx, hz), hy), hx);
  o.expect(Hq->is_zero(xyx), "xyx != 0 in D<x,y,z>/<xy>");
  o.expect(!Hq->is_zero(xzyx), "xzyx = 0");
  o.expect(Hq->is_zero(Hq->pow(Hq->mul(hy, hx), 2)), "yx not square-zero");
  o.summary = "x^3yx = " + W->render(x3yx) + ", xzyx = " + Hq->render(xzyx);
  return o;
}

// 8 ----------------------------------------------------------------------
Outcome c8() {
  Outcome o;
  const auto Q = z2a_quotient();
  o.expect(Q->ideal().truncated_dim() == 400, "truncated dimension " + std::to_string(Q->ideal().truncated_dim()));
  const auto& A = Q->algebra();
  auto p = [&](const char* s) { return A.parse(s); };
  const FreeAlgebraElem a[3] = {p("a0"), p("a1"), p("a2")}, b[3] = {p("b0"), p("b1"), p("b2")};
  const auto c = p("c");
  std::size_t in = 0;
  for (int k = 0; k <= 4; ++k) {
    FreeAlgebraElem coeff;
    for (int i = 0; i <= 2; ++i)
      if (k - i >= 0 && k - i <= 2) coeff = A.add(coeff, A.mul(b[i], a[k - i]));
    const bool member = Q->in_ideal(coeff);
    o.expect(member, "coefficient of x^" + std::to_string(k) + " is not in I");
    in += member;
  }
  const auto w = A.add(A.mul(A.mul(b[0], c), a[1]), A.mul(A.mul(b[1], c), a[0]));
  o.expect(!Q->in_ideal(w), "b0 c a1 + b1 c a0 lies in I");
  o.summary = std::to_string(in) + "/5 coefficients of fb*fa in I; b0ca1+b1ca0 not in I (normal form " + Q->render(w) + ")";
  return o;
}

// 9 ----------------------------------------------------------------------
Outcome c9() {
  Outcome o;
  const auto R = ring("Product(Fp(2),Fp(2))");
  const auto alpha = endomorphism_by_name(R, "swap");
  const SkewPolyRing P(alpha);
  const SkewPoly f = P.monomial(el(*R, "(1,0)"), 1);
  const auto f2 = P.mul(f, f), fxf = P.mul(P.mul(f, P.x()), f);
  o.expect(f2.is_zero(), "f^2 != 0");
  o.expect(!fxf.is_zero(), "f x f = 0");
  o.expect(P.render(fxf) == P.render(P.monomial(el(*R, "(1,0)"), 3)), "f x f = " + P.render(fxf));
  const auto ac = alpha_condition_check(alpha);
  o.expect(!ac.holds, "alpha-condition holds for swap");
  o.summary = "f = " + P.render(f) + ", f^2 = 0, f x f = " + P.render(fxf) + ", alpha-condition " +
              (ac.holds ? "holds" : "fails");
  return o;
}

// 10 ---------------------------------------------------------------------
Outcome c10() {
  Outcome o;
  const auto rings = Catalog::standard().finite(4096);
  std::size_t violations = 0, undecided = 0, lnzs_count = 0;
  for (const auto* e : rings) {
    auto t = [&](Property p) { return e->truth(p); };
    const Truth ln = t(Property::lnzs);
    auto implies = [&](bool hyp, Property q, const std::string& name) {
      if (!hyp) return;
      const Truth v = t(q);
      if (v == Truth::undecided) ++undecided;
      if (v == Truth::fails) {
        ++violations;
        o.expect(false, e->recipe() + ": " + name);
      }
    };
    const bool L = ln == Truth::holds;
    lnzs_count += L;
    implies(L, Property::ni, "lnzs => ni");
    implies(L, Property::weakly_semicommutative, "lnzs => weakly semicommutative");
    implies(L, Property::quasi_normal, "lnzs => quasi-normal");
    implies(L, Property::left_min_abel, "lnzs => left min-abel");
    implies(t(Property::semicommutative) == Truth::holds, Property::lnzs, "semicommutative => lnzs");
    implies(t(Property::reduced) == Truth::holds, Property::lnzs, "reduced => lnzs");
    implies(L && t(Property::prime) == Truth::holds, Property::domain, "lnzs and prime => domain");
    if (t(Property::domain) == Truth::holds) {
      implies(true, Property::lnzs, "domain => lnzs");
      implies(true, Property::prime, "domain => prime");
    }
    implies(L && t(Property::semiprime) == Truth::holds, Property::reduced, "lnzs and semiprime => reduced");
  }
  for (const char* id : {"NI", "WEAK", "QNOR", "MINABEL", "DOMPRIME", "GPVR1"}) suite_passes(o, id);
  o.expect(undecided == 0, std::to_string(undecided) + " implication instances undecided");
  o.summary = std::to_string(rings.size()) + " rings (" + std::to_string(lnzs_count) + " LNZS), " +
              std::to_string(violations) + " violations, " + std::to_string(undecided) + " undecided";
  return o;
}

// 11 ---------------------------------------------------------------------
Outcome c11() {
  Outcome o;
  std::size_t quotients = 0;
  for (const auto* e : Catalog::standard().finite(1024)) {
    if (e->truth(Property::lnzs) != Truth::holds) continue;
    const auto& R = e->finite();
    for (Elem s : nilpotent_elements(*R)) {
      const Subgroup L = left_annihilator(*R, s);
      if (!is_ideal(*R, L)) {
        o.expect(false, e->recipe() + ": l(" + R->render(s) + ") is not an ideal");
        continue;
      }
      const auto Q = quotient(R, L);
      ++quotients;
      const bool sc = Q->size() <= 64 ? oracle::semicommutative(*Q) : is_semicommutative(*Q).holds();
      o.expect(sc, e->recipe() + ": R/l(" + R->render(s) + ") is not semicommutative");
    }
  }
  const auto Z8 = ring("Zmod(8)");
  const Subgroup H = Subgroup::span(*Z8, std::vector<Elem>{Elem{2}});
  o.expect(H.size() == 4 && H.contains(Elem{6}), "H != {0,2,4,6}");
  const auto QH = quotient(Z8, H);
  o.expect(QH->size() == 2 && QH->has_one() && is_lnzs(*QH).holds() && is_reduced(*QH).holds(), "Z/8 / H is not F_2");
  suite_passes(o, "QUSEM");
  suite_passes(o, "BOUNDED");
  o.summary = std::to_string(quotients) + " quotients R/l(s) semicommutative; Z/8/{0,2,4,6} has " +
              std::to_string(QH->size()) + " elements and is LNZS";
  return o;
}

// 12 ---------------------------------------------------------------------
Outcome c12() {
  Outcome o;
  std::size_t checked = 0, hyp = 0;
  for (const auto* e : Catalog::standard().finite(32)) {
    if (e->size() < 2) continue;
    const auto T = trivial_extension(e->finite());
    ++checked;
    if (!is_lnzs(*T).holds()) continue;
    ++hyp;
    o.expect(e->truth(Property::semicommutative) == Truth::holds, e->recipe() + ": T(R,R) LNZS but R not semicommutative");
  }
  suite_passes(o, "TRIVEXT");
  o.summary = std::to_string(checked) + " rings R, " + std::to_string(hyp) + " with T(R,R) LNZS, all semicommutative";
  return o;
}

// 13 ---------------------------------------------------------------------
Outcome c13() {
  Outcome o;
  const auto Z6 = ring("Zmod(6)");
  const Subgroup I2 = ideal_generated_by(*Z6, {Elem{2}}), I3 = ideal_generated_by(*Z6, {Elem{3}});
  const auto Q2 = quotient(Z6, I2), Q3 = quotient(Z6, I3);
  // Z/6 -> Z/6/<2> x Z/6/<3> is injective.
  std::set<std::pair<std::uint32_t, std::uint32_t>> images;
  for (Elem a : Z6->elements()) images.insert({Q2->project(a).index, Q3->project(a).index});
  o.expect(images.size() == 6, "Z/6 is not a subdirect product of Z/6/<2> and Z/6/<3>");
  o.expect(is_lnzs(*Q2).holds() && is_lnzs(*Q3).holds() && is_lnzs(*Z6).holds(), "Z/6 family not LNZS");

  std::size_t dorrohs = 0;
  for (const auto* e : Catalog::standard().finite(256)) {
    const auto& A = e->finite();
    if (e->truth(Property::lnzs) != Truth::holds || A->size() < 2) continue;
    for (std::uint64_t m : {2, 3, 6}) {
      bool kills = true;
      for (Elem a : A->elements()) kills = kills && A->times(m, a) == A->zero();
      if (!kills || A->size() * m > 4096) continue;
      const auto D = dorroh(A, m);
      ++dorrohs;
      o.expect(is_lnzs(*D).holds(), "Dorroh(" + e->recipe() + "," + std::to_string(m) + ") is not LNZS");
    }
  }

  for (const auto& [spec, delta] : std::vector<std::pair<std::string, std::vector<std::uint32_t>>>{
           {"Zmod(4)", {1, 3}}, {"Zmod(6)", {1, 5}}}) {
    const auto R = ring(spec);
    std::vector<Elem> d;
    for (auto x : delta) d.push_back(Elem{x});
    const auto L = localize(R, d);
    o.expect(is_lnzs(*L.ring).truth == is_lnzs(*R).truth, spec + ": localization changes LNZS");
    for (Elem u : d)
      for (Elem a : R->elements())
        o.expect(left_annihilator(*L.ring, L.fraction(u, a)) == left_annihilator(*R, a),
                 spec + ": l(u^-1 a) != l(a) for u=" + R->render(u) + ", a=" + R->render(a));
  }
  suite_passes(o, "SUBDIR");
  suite_passes(o, "DORROH");
  suite_passes(o, "LOC");
  o.summary = "Z/6 reconstructed from {<2>,<3>}; " + std::to_string(dorrohs) +
              " Dorroh extensions LNZS; localizations of Z/4 and Z/6 keep l(u^-1 a) = l(a)";
  return o;
}

// 14 ---------------------------------------------------------------------
Outcome c14() {
  Outcome o;
  std::size_t checks = 0;
  auto record = [&](const BoundedCheck& b, const std::string& what) {
    ++checks;
    o.expect(b.applicable && b.holds, what + (b.note.empty() ? "" : ": " + b.note));
    o.expect(!b.universe.empty(), what + ": no universe recorded");
  };
  for (const char* spec : {"Zmod(4)", "Fp(2)", "Product(Fp(2),Fp(3))"}) {
    const auto R = ring(spec);
    const SkewPolyRing P(Endomorphism::identity(R));
    BoundedOptions opt;
    opt.degree = 2;
    record(nilradical_equality_check(P, opt), std::string(spec) + ": nilradical equality");
    record(nilpotent_coefficient_bound_check(P, opt), std::string(spec) + ": nilpotency bound");
  }
  BoundedOptions one;
  one.degree = 1;
  record(armendariz_check(ring("Zmod(4)"), one), "Z/4 Armendariz (degree 1)");
  for (const auto* e : Catalog::standard().group("skew")) {
    const auto& v = e->value();
    if (!v.skew) continue;
    if (!alpha_condition_check(v.skew->alpha()).holds) continue;
    BoundedOptions opt;
    opt.degree = 2;
    const auto arm = alpha_skew_armendariz_check(*v.skew, opt);
    if (!arm.holds || !is_lnzs(v.skew->base()).holds()) continue;
    record(skew_lnzs_transfer_check(*v.skew, opt), e->recipe() + ": alpha-skew Armendariz transfer");
  }
  suite_passes(o, "LAURENT");
  suite_passes(o, "ALPHA");
  o.summary = std::to_string(checks) + " bounded checks pass, each with its universe recorded";
  return o;
}

// 15 ---------------------------------------------------------------------
Outcome c15() {
  Outcome o;
  std::size_t compared = 0;
  for (const auto* e : Catalog::standard().finite(256)) {
    const auto& R = *e->finite();
    const auto g = is_lnzs(R), x = is_lnzs_exhaustive(R), c = is_lnzs_by_closure(R);
    o.expect(g.truth == x.truth && x.truth == c.truth, e->recipe() + ": lnzs variants disagree");
    if (g.witness) o.expect(recheck(R, *g.witness), e->recipe() + ": witness fails recheck");
    ++compared;
  }
  std::size_t lin = 0;
  std::vector<ModAlgebraPtr> algebras;
  for (std::uint64_t m : {2, 3, 4, 6, 8, 9}) algebras.push_back(lin_zmod(m));
  algebras.push_back(lin_upper_triangular(*lin_zmod(2), 2));
  algebras.push_back(lin_upper_triangular(*lin_zmod(3), 2));
  algebras.push_back(lin_upper_triangular(*lin_zmod(4), 2));
  algebras.push_back(lin_upper_triangular(*lin_zmod(2), 3));
  algebras.push_back(lin_trivial_extension(*lin_zmod(4)));
  algebras.push_back(lin_trivial_extension(*lin_zmod(6)));
  algebras.push_back(lin_full_matrix(ModScalars{2}, 2));
  algebras.push_back(quaternions(ModScalars{3}, "Quat(3)"));
  for (const auto& A : algebras) {
    const auto E = enumerate_algebra(A);
    const RingPtr T = materialize(E);
    for (Property p : {Property::reduced, Property::lnzs, Property::semicommutative, Property::reversible,
                       Property::ni, Property::abelian, Property::quasi_normal, Property::semiprime}) {
      const auto a = check(*E, p), b = check(*T, p);
      o.expect(a.truth == b.truth, A->recipe() + ": " + std::string(property_name(p)) + " differs");
      if (a.witness && b.witness) o.expect(a.witness->rendered == b.witness->rendered, A->recipe() + ": witness differs");
    }
    o.expect(lin_lnzs_failure(*A).has_value() == is_lnzs(*T).fails(), A->recipe() + ": module-level LNZS differs");
    ++lin;
  }
  // Byte-identical JSON with 1 and 8 workers.
  const std::vector<std::vector<std::string>> commands = {
      {"check", "T(3,Fp(2))", "--format", "json"},
      {"check", "CongrSubring(8)", "--format", "json"},
      {"check", "TrivExt(T(2,Zmod(2)))", "--format", "json"},
      {"verify-paper", "--suite", "T3,R4", "--format", "json"},
  };
  const unsigned saved = thread_count();
  for (const auto& cmd : commands) {
    std::string outputs[2];
    for (int k = 0; k < 2; ++k) {
      set_thread_count(k ? 8 : 1);
      std::istringstream in;
      std::ostringstream out, err;
      cli::run(cmd, in, out, err);
      outputs[k] = out.str();
    }
    o.expect(outputs[0] == outputs[1] && !outputs[0].empty(), cmd[1] + ": output depends on the thread count");
  }
  set_thread_count(saved);
  o.summary = std::to_string(compared) + " catalog rings: generator-reduced = exhaustive = closure; " +
              std::to_string(lin) + " algebras: LinRing = TableRing; JSON identical at 1 and 8 threads";
  return o;
}

struct Criterion {
  int id;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, 1, c1},   {2, 30, c2},  {3, 1, c3},   {4, 1, c4},    {5, 5, c5},    {6, 60, c6},   {7, 1, c7},   {8, 10, c8},
      {9, 1, c9},   {10, 120, c10}, {11, 30, c11}, {12, 30, c12}, {13, 10, c13}, {14, 120, c14}, {15, 30, c15},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  bool ok = true;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.expect(secs <= c.limit, "took longer than " + std::to_string(static_cast<int>(c.limit)) + " s");
    std::printf("criterion %2d: %s  %s  [%.2f s, limit %.0f s]\n", c.id, out.pass ? "PASS" : "FAIL",
                out.summary.c_str(), secs, c.limit);
    for (const auto& f : out.failures) std::printf("    - %s\n", f.c_str());
    ok = ok && out.pass;
  }
  return ok ? 0 : 1;
}
