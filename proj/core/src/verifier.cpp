#include "ringlab/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/parallel.hpp"
#include "ringlab/ring_core.hpp"
#include "suite_support.hpp"

namespace ringlab {

bool SuiteResult::pass() const {
  if (!error.empty()) return false;
  return std::all_of(verdicts.begin(), verdicts.end(), [](const RingVerdict& v) { return v.pass; });
}

const std::vector<SuiteInfo>& suite_table() {
  static const std::vector<SuiteInfo> t = {
      {"TRI", "T_2(R) is LNZS if and only if R is reduced", false},
      {"T3", "l(e23) is not an ideal of T_3(R)", false},
      {"NI", "LNZS rings are NI", false},
      {"WEAK", "LNZS rings are weakly semicommutative", false},
      {"WSEM-EX", "a weakly semicommutative ring that is not LNZS: F<x,y>/<x^2>^2", false},
      {"R4", "R_4 over a reduced ring is not LNZS: EF is not in l(A)", false},
      {"DOMPRIME", "R is a domain if and only if R is LNZS and prime", false},
      {"HOM", "a homomorphic image of an LNZS ring need not be LNZS: D<x,y,z>/<xy>", false},
      {"QUSEM", "R/l(s) is semicommutative for LNZS R and s in N(R)", false},
      {"BOUNDED", "R/H is LNZS for H the nilpotents of bounded index", false},
      {"TRIVEXT", "T(R,R) LNZS implies R semicommutative; the converse fails over the quaternions", false},
      {"QNOR", "LNZS rings are quasi-normal; the congruence subring separates", false},
      {"MINABEL", "LNZS rings are left min-abel", false},
      {"GPVR1", "semiprime LNZS rings are reduced", false},
      {"SUBDIR", "subdirect products of LNZS rings are LNZS", false},
      {"DORROH", "Dorroh extensions of LNZS rings are LNZS", false},
      {"SKEW-EX", "polynomial and skew polynomial rings over LNZS rings need not be LNZS", true},
      {"LOC", "l(u^-1 a) is an ideal iff l(a) is; localization preserves LNZS", false},
      {"LAURENT", "R[x] is LNZS iff R[x,x^-1] is (Armendariz R)", true},
      {"ALPHA", "alpha-condition results: products, nil radical, alpha-skew Armendariz transfer", true},
  };
  return t;
}

bool is_suite(const std::string& id) {
  for (const auto& s : suite_table())
    if (id == s.id) return true;
  return false;
}

namespace {

using SuiteFn = SuiteResult (*)(const Catalog&);

SuiteFn suite_function(const std::string& id) {
  using namespace detail;
  static const std::vector<std::pair<std::string, SuiteFn>> fns = {
      {"TRI", suite_tri},         {"T3", suite_t3},           {"NI", suite_ni},
      {"WEAK", suite_weak},       {"WSEM-EX", suite_wsem_ex}, {"R4", suite_r4},
      {"DOMPRIME", suite_domprime}, {"HOM", suite_hom},       {"QUSEM", suite_qusem},
      {"BOUNDED", suite_bounded}, {"TRIVEXT", suite_trivext}, {"QNOR", suite_qnor},
      {"MINABEL", suite_minabel}, {"GPVR1", suite_gpvr1},     {"SUBDIR", suite_subdir},
      {"DORROH", suite_dorroh},   {"SKEW-EX", suite_skew_ex}, {"LOC", suite_loc},
      {"LAURENT", suite_laurent}, {"ALPHA", suite_alpha},
  };
  for (const auto& [k, f] : fns)
    if (k == id) return f;
  return nullptr;
}

}  // namespace

SuiteResult run_suite(const std::string& id, const Catalog& catalog) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  SuiteFn fn = suite_function(id);
  if (!fn) throw PreconditionError("unknown suite '" + id + "'");
  try {
    r = fn(catalog);
  } catch (const ResourceLimit& e) {
    r.resource_limited = true;
    r.error = e.what();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.id = id;
  for (const auto& info : suite_table())
    if (id == info.id) {
      r.title = info.title;
      r.bounded = info.bounded;
    }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& ids, const Catalog& catalog) {
  for (const auto& id : ids)
    if (!is_suite(id)) throw PreconditionError("unknown suite '" + id + "'");
  std::vector<SuiteResult> out(ids.size());
  // Suites share the catalog's memoized predicate results; running them one
  // after another keeps each scan's own worker pool busy instead.
  for (std::size_t i = 0; i < ids.size(); ++i) out[i] = run_suite(ids[i], catalog);
  return out;
}

// ---- implication report -------------------------------------------------

std::string_view implication_name(Implication v) {
  switch (v) {
    case Implication::implied: return "implied-on-catalog";
    case Implication::separated: return "separated";
    case Implication::undecided: return "undecided";
  }
  return "";
}

const ImplicationCell& ImplicationReport::cell(Property from, Property to) const {
  for (const auto& c : cells)
    if (c.from == from && c.to == to) return c;
  throw PreconditionError("no implication cell for equal properties");
}

ImplicationReport implication_report(const Catalog& catalog, std::size_t max_size) {
  ImplicationReport rep;
  std::vector<const CatalogEntry*> rings;
  for (const auto& e : catalog.entries()) {
    const auto& v = e.value();
    if ((v.finite && v.finite->size() <= max_size) || v.free) rings.push_back(&e);
  }
  for (const auto* e : rings) rep.rings.push_back(e->recipe());
  const auto& props = all_properties();
  for (Property p : props)
    for (Property q : props) {
      if (p == q) continue;
      ImplicationCell cell; cell.from = p; cell.to = q;
      for (const auto* e : rings) {
        const Truth a = e->truth(p), b = e->truth(q);
        if (a == Truth::undecided || b == Truth::undecided) {
          if (a != Truth::fails && b != Truth::holds) ++cell.unknown;
          if (a == Truth::holds && b == Truth::fails) cell.separating.push_back(e->recipe());
          continue;
        }
        if (a == Truth::holds) {
          ++cell.support;
          if (b == Truth::fails) cell.separating.push_back(e->recipe());
        }
      }
      cell.verdict = !cell.separating.empty() ? Implication::separated
                     : cell.unknown > 0 && cell.support == 0 ? Implication::undecided
                                                             : Implication::implied;
      rep.cells.push_back(std::move(cell));
    }
  auto confirm = [&](Property holds, Property fails, const std::string& ring, std::string note) {
    KnownSeparation s{holds, fails, ring, false, std::move(note)};
    if (const auto* e = catalog.find(ring)) {
      const Truth a = e->truth(holds), b = e->truth(fails);
      s.confirmed = a == Truth::holds && b == Truth::fails;
      if (a == Truth::undecided && b == Truth::fails)
        s.note += (s.note.empty() ? "" : "; ") + std::string(property_name(holds)) +
                  " is quoted from the literature, not decided here";
    }
    rep.separations.push_back(std::move(s));
  };
  confirm(Property::lnzs, Property::semicommutative, "T(2,Zmod(2))", "LNZS but not semicommutative");
  confirm(Property::weakly_semicommutative, Property::lnzs, "FreeQuot(2,\"xy\",\"square:xx\",6)",
          "weakly semicommutative but not LNZS");
  confirm(Property::quasi_normal, Property::lnzs, "CongrSubring(16)", "quasi-normal but not LNZS");
  confirm(Property::lnzs, Property::reduced, "T(2,Zmod(2))", "LNZS but not reduced");
  return rep;
}

// ---- counterexample search ----------------------------------------------

namespace {

std::vector<RingPtr> closure_step(const std::vector<RingPtr>& level, const std::vector<RingPtr>& bases, std::size_t cap) {
  std::vector<RingPtr> out;
  auto fits = [&](std::size_t n) { return n <= cap; };
  for (const auto& R : level) {
    const std::size_t n = R->size();
    if (n < 2) continue;
    if (R->has_one() && fits(n * n * n)) out.push_back(upper_triangular(R, 2));
    if (fits(n * n)) out.push_back(trivial_extension(R));
    for (const auto& B : bases)
      if (fits(n * B->size())) out.push_back(direct_product({R, B}));
    if (fits(n)) {
      std::vector<Subgroup> seen;
      for (Elem a : R->elements()) {
        if (a == R->zero()) continue;
        Subgroup I = ideal_generated_by(*R, {a});
        if (I.size() == n || std::find(seen.begin(), seen.end(), I) != seen.end()) continue;
        seen.push_back(I);
        out.push_back(quotient(R, I));
      }
    }
  }
  return out;
}

}  // namespace

SearchResult counterexample_search(const std::vector<Property>& require, const std::vector<Property>& forbid,
                                   const SearchBudget& budget, const Catalog& catalog) {
  SearchResult res;
  std::set<std::string> seen;
  std::size_t undecided = 0;
  auto matches = [&](auto&& truth) {
    for (Property p : require) {
      const Truth t = truth(p);
      if (t == Truth::undecided) return std::optional<bool>{};
      if (t != Truth::holds) return std::optional<bool>{false};
    }
    for (Property p : forbid) {
      const Truth t = truth(p);
      if (t == Truth::undecided) return std::optional<bool>{};
      if (t != Truth::fails) return std::optional<bool>{false};
    }
    return std::optional<bool>{true};
  };
  auto consider = [&](const std::string& recipe, auto&& truth) {
    if (!seen.insert(recipe).second) return true;
    if (res.examined >= budget.max_rings) {
      res.exhausted = true;
      return false;
    }
    ++res.examined;
    const auto m = matches(truth);
    if (!m) ++undecided;
    else if (*m) res.rings.push_back(recipe);
    return true;
  };
  std::vector<RingPtr> level, bases;
  for (const auto& e : catalog.entries()) {
    const auto& v = e.value();
    if (v.finite && v.finite->size() > budget.max_size) continue;
    if (!v.finite && !v.free) continue;
    if (!consider(e.recipe(), [&](Property p) { return e.truth(p); })) break;
    if (v.finite) {
      if (v.finite->size() <= budget.closure_max_size) level.push_back(v.finite);
      if (e.group() == "base" && v.finite->size() <= 8) bases.push_back(v.finite);
    }
  }
  for (unsigned d = 0; d < budget.depth && !res.exhausted; ++d) {
    std::vector<RingPtr> next;
    for (const auto& R : closure_step(level, bases, budget.closure_max_size)) {
      if (seen.count(R->recipe())) continue;
      if (!consider(R->recipe(), [&](Property p) { return check(*R, p).truth; })) break;
      next.push_back(R);
    }
    level = std::move(next);
  }
  if (res.rings.empty())
    res.note = "no ring found among " + std::to_string(res.examined) +
               (res.exhausted ? " candidates" : " candidates: the implication holds on everything searched");
  if (undecided) res.note += (res.note.empty() ? "" : "; ") + std::to_string(undecided) + " candidates undecided";
  if (res.exhausted) res.note += (res.note.empty() ? "" : "; ") + std::string("budget exhausted, list may be partial");
  return res;
}

}  // namespace ringlab
