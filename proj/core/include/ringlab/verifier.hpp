#pragma once

// Executable checks for the results on LNZS rings: one suite per result or
// example, an implication matrix over the catalog, and a counterexample
// search over the catalog plus a constructor closure.

#include <string>
#include <utility>
#include <vector>

#include "ringlab/catalog.hpp"
#include "ringlab/predicates.hpp"

namespace ringlab {

/// One checked claim about one ring (or ring pair, family, ...).
struct RingVerdict {
  std::string ring;
  std::string claim;
  bool pass = true;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> values;  // witness elements and evaluated products
  std::string universe;
};

struct SuiteResult {
  std::string id;
  std::string title;
  bool bounded = false;  // "bounded verification": polynomial universes of limited degree
  std::string model;     // scalar model and transfer facts, when the source ring is infinite
  std::vector<RingVerdict> verdicts;
  std::vector<std::string> notes;
  std::string error;  // set when the suite stopped early (resource limit)
  bool resource_limited = false;
  double seconds = 0;

  bool pass() const;
};

struct SuiteInfo {
  const char* id;
  const char* title;
  bool bounded;
};

/// Suites in the order the results appear.
const std::vector<SuiteInfo>& suite_table();
bool is_suite(const std::string& id);

SuiteResult run_suite(const std::string& id, const Catalog& catalog = Catalog::standard());
/// Runs the suites in parallel; results come back in the order of `ids`.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& ids, const Catalog& catalog = Catalog::standard());

// ---- implication report -------------------------------------------------

enum class Implication { implied, separated, undecided };
std::string_view implication_name(Implication v);

struct ImplicationCell {
  Property from, to;
  Implication verdict = Implication::implied;
  std::vector<std::string> separating;  // rings with `from` true and `to` false, catalog order
  std::size_t support = 0;              // rings where both verdicts are known and `from` holds
  std::size_t unknown = 0;              // rings where either verdict is undecided
};

/// A separation known from the literature, confirmed (or not) on a named ring.
struct KnownSeparation {
  Property holds, fails;
  std::string ring;
  bool confirmed = false;
  std::string note;
};

struct ImplicationReport {
  std::vector<std::string> rings;
  std::vector<ImplicationCell> cells;  // all ordered pairs of distinct properties
  std::vector<KnownSeparation> separations;

  const ImplicationCell& cell(Property from, Property to) const;
};

ImplicationReport implication_report(const Catalog& catalog = Catalog::standard(), std::size_t max_size = 16384);

// ---- counterexample search ----------------------------------------------

struct SearchBudget {
  std::size_t max_size = 16384;         // catalog rings up to this size
  std::size_t closure_max_size = 256;   // rings built by the closure step
  unsigned depth = 1;                   // constructor applications on top of the catalog
  std::size_t max_rings = 4000;         // candidates examined before giving up
};

struct SearchResult {
  std::vector<std::string> rings;  // recipes, deterministic order
  std::size_t examined = 0;
  bool exhausted = false;  // budget ran out; the list may be partial
  std::string note;
};

SearchResult counterexample_search(const std::vector<Property>& require, const std::vector<Property>& forbid,
                                   const SearchBudget& budget = {}, const Catalog& catalog = Catalog::standard());

}  // namespace ringlab
