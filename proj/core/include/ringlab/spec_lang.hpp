#pragma once

// Ring descriptions: a small expression language over the constructors,
// e.g. T(2,Zmod(4)), TrivExt(TrivExt(Quat())), FreeQuot(2,"xy","square:xx",6).
//
//   expr := NAME '(' args ')' | NAME
//   args := arg (',' arg)*        arg := expr | integer | string
//
// Names are case-insensitive and printed in canonical spelling, so printing a
// parsed expression and parsing it again gives an equal tree.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/free_algebra.hpp"
#include "ringlab/lin_ring.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

struct SpecNode {
  enum class Kind { call, integer, string };
  Kind kind = Kind::call;
  std::string name;  // canonical constructor name for calls
  std::int64_t value = 0;
  std::string text;
  std::vector<SpecNode> args;
  unsigned line = 1, column = 1;

  friend bool operator==(const SpecNode& a, const SpecNode& b) {
    return a.kind == b.kind && a.name == b.name && a.value == b.value && a.text == b.text && a.args == b.args;
  }
};

/// Parse, validation and construction failures, with the source position.
class SpecError : public std::runtime_error {
 public:
  SpecError(unsigned line, unsigned column, const std::string& message, std::vector<std::string> expected = {});
  unsigned line() const noexcept { return line_; }
  unsigned column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  unsigned line_, column_;
  std::vector<std::string> expected_;
};

/// Parses and validates constructor names, arities and argument ranges.
SpecNode parse_spec(std::string_view text);
std::string print_spec(const SpecNode& node);

/// What a description evaluates to. Exactly one pointer is set.
struct RingValue {
  RingPtr finite;
  RationalAlgebraPtr rational;
  FreeQuotientPtr free;
  std::shared_ptr<const SkewPolyRing> skew;
  std::string recipe;
};

/// Builds the ring. ResourceLimit propagates; every other construction
/// failure becomes a SpecError at the offending node.
RingValue evaluate_spec(const SpecNode& node);
RingValue build_ring(std::string_view text);

}  // namespace ringlab
