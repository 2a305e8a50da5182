#pragma once

// Exact linear algebra over Z/m and Q.
//
// Row spans over Z/m are kept in Howell form: echelon rows whose pivots divide
// m, entries above each pivot reduced modulo that pivot, and closed under the
// annihilator rows (m / pivot) * row. That form is unique for a given
// submodule, so equal submodules have identical bases and membership is a
// single reduction pass. Over Z/2 the elimination runs on packed 64-bit words.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ringlab/rational.hpp"

namespace ringlab::linalg {

using ModRow = std::vector<std::uint64_t>;
using RationalRow = std::vector<Rational>;

/// Howell form of the span of `rows` in (Z/modulus)^ncols. Zero rows removed.
std::vector<ModRow> howell_form(std::vector<ModRow> rows, std::size_t ncols, std::uint64_t modulus);

/// Reduced row echelon form over GF(2) using packed words.
std::vector<ModRow> gf2_rref(const std::vector<ModRow>& rows, std::size_t ncols);

/// Canonical submodule of (Z/m)^n.
class Submodule {
 public:
  Submodule(std::uint64_t modulus, std::size_t ambient_dim, std::vector<ModRow> generators = {});

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::vector<ModRow>& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  /// Remainder of v after reduction by the basis; zero iff v is a member.
  ModRow reduce(ModRow v) const;
  bool contains(const ModRow& v) const;

  /// Number of elements, saturated at SIZE_MAX.
  std::size_t cardinality() const;

  /// All members, in the order Σ c_i basis_i with c_i < m / pivot_i taken
  /// lexicographically. Throws ResourceLimit above `limit` elements.
  std::vector<ModRow> elements(std::size_t limit) const;

  Submodule sum(const Submodule& other) const;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.modulus_ == b.modulus_ && a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

 private:
  std::uint64_t modulus_;
  std::size_t dim_;
  std::vector<ModRow> basis_;
  std::vector<std::size_t> pivot_cols_;
};

/// {x in (Z/m)^k : x * M = 0} where M has the k given rows of length ncols.
Submodule left_kernel(const std::vector<ModRow>& matrix, std::size_t ncols, std::uint64_t modulus);

/// Reduced row echelon form over Q.
std::vector<RationalRow> rational_rref(std::vector<RationalRow> rows, std::size_t ncols);

/// Basis of {x in Q^k : x * M = 0}.
std::vector<RationalRow> rational_left_kernel(const std::vector<RationalRow>& matrix, std::size_t ncols);

}  // namespace ringlab::linalg
