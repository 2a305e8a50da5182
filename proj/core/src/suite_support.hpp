#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ringlab/catalog.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/verifier.hpp"

namespace ringlab::detail {

inline std::string tf(bool b) { return b ? "true" : "false"; }

inline RingVerdict verdict(std::string ring, std::string claim, bool pass, std::string detail = {}) {
  RingVerdict v;
  v.ring = std::move(ring);
  v.claim = std::move(claim);
  v.pass = pass;
  v.detail = std::move(detail);
  return v;
}

/// The matrix ring behind a (possibly tabulated) T_n / R_n / M_n.
const MatrixPatternRing& matrix_view(const RingPtr& R);

/// Catalog entry when present, otherwise a fresh build.
RingPtr ring_for(const Catalog& c, const std::string& recipe);
/// Memoized check through the catalog when the ring is a catalog entry.
PropertyResult property_of(const Catalog& c, const RingPtr& R, Property p);

/// For every finite catalog ring up to max_size: `antecedent` implies
/// `consequent`, each either a single property or a conjunction.
void implication_verdicts(SuiteResult& out, const Catalog& c, std::size_t max_size, const std::vector<Property>& antecedent,
                          Property consequent, const std::string& label);

std::vector<std::pair<std::string, std::string>> witness_values(const PropertyResult& r);

SuiteResult suite_tri(const Catalog&);
SuiteResult suite_t3(const Catalog&);
SuiteResult suite_ni(const Catalog&);
SuiteResult suite_weak(const Catalog&);
SuiteResult suite_wsem_ex(const Catalog&);
SuiteResult suite_r4(const Catalog&);
SuiteResult suite_domprime(const Catalog&);
SuiteResult suite_hom(const Catalog&);
SuiteResult suite_qusem(const Catalog&);
SuiteResult suite_bounded(const Catalog&);
SuiteResult suite_trivext(const Catalog&);
SuiteResult suite_qnor(const Catalog&);
SuiteResult suite_minabel(const Catalog&);
SuiteResult suite_gpvr1(const Catalog&);
SuiteResult suite_subdir(const Catalog&);
SuiteResult suite_dorroh(const Catalog&);
SuiteResult suite_loc(const Catalog&);
SuiteResult suite_laurent(const Catalog&);
SuiteResult suite_skew_ex(const Catalog&);
SuiteResult suite_alpha(const Catalog&);

/// Largest catalog carrier used by the implication-style suites.
inline constexpr std::size_t kImplicationMax = 4096;

}  // namespace ringlab::detail
