#pragma once

// The built-in ring inventory used by the verifier, the implication report
// and the counterexample search. Entries are ring descriptions evaluated on
// first use; predicate results are memoized per entry.

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/predicates.hpp"
#include "ringlab/spec_lang.hpp"

namespace ringlab {

class CatalogEntry {
 public:
  CatalogEntry(std::string recipe, std::string group);

  const std::string& recipe() const noexcept { return recipe_; }
  const std::string& group() const noexcept { return group_; }
  const RingValue& value() const;
  /// Null for non-enumerable entries.
  const RingPtr& finite() const { return value().finite; }
  std::size_t size() const { return finite() ? finite()->size() : 0; }

  /// check(finite ring or free quotient, p) with default options, memoized.
  const PropertyResult& property(Property p) const;
  /// Same, but undecided for anything that is neither finite nor a free
  /// quotient.
  Truth truth(Property p) const { return property(p).truth; }

 private:
  std::string recipe_;
  std::string group_;
  mutable std::once_flag built_;
  mutable RingValue value_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Property, std::unique_ptr<PropertyResult>> cache_;
};

class Catalog {
 public:
  /// The default inventory (built once).
  static const Catalog& standard();

  explicit Catalog(const std::vector<std::pair<std::string, std::string>>& recipes);

  const std::deque<CatalogEntry>& entries() const noexcept { return entries_; }
  /// Enumerable entries with at most max_size elements, in catalog order.
  std::vector<const CatalogEntry*> finite(std::size_t max_size) const;
  std::vector<const CatalogEntry*> group(std::string_view name) const;
  const CatalogEntry* find(std::string_view recipe) const;

 private:
  std::deque<CatalogEntry> entries_;
};

/// Base rings of the catalog (the coefficient rings of T_n, TrivExt, ...).
const std::vector<std::string>& catalog_bases();

}  // namespace ringlab
