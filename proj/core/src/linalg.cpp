#include "ringlab/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ringlab/error.hpp"
#include "ringlab/modarith.hpp"

namespace ringlab::linalg {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t to_residue(std::int64_t v, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((v % mm) + mm) % mm);
}

// out = a*x + b*y (mod m)
void combine(ModRow& out, std::uint64_t a, const ModRow& x, std::uint64_t b, const ModRow& y, std::uint64_t m) {
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = (mulmod(a, x[k], m) + mulmod(b, y[k], m)) % m;
}

bool is_zero_row(const ModRow& r) {
  return std::all_of(r.begin(), r.end(), [](std::uint64_t v) { return v == 0; });
}

// Unit u with u*a = gcd(a, m) (mod m).
std::uint64_t normalizing_unit(std::uint64_t a, std::uint64_t m) {
  const std::uint64_t d = std::gcd(a, m);
  const std::uint64_t reduced_mod = m / d;
  std::uint64_t u = reduced_mod == 1 ? 1 : *mod_inverse((a / d) % reduced_mod, reduced_mod);
  while (std::gcd(u, m) != 1) u += reduced_mod;
  return u % m;
}

}  // namespace

std::vector<ModRow> gf2_rref(const std::vector<ModRow>& rows, std::size_t ncols) {
  const std::size_t words = (ncols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> packed;
  packed.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::uint64_t> p(words, 0);
    for (std::size_t c = 0; c < ncols; ++c)
      if (r[c] & 1u) p[c / 64] |= std::uint64_t{1} << (c % 64);
    packed.push_back(std::move(p));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < packed.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < packed.size() && !(packed[pivot][w] & bit)) ++pivot;
    if (pivot == packed.size()) continue;
    std::swap(packed[rank], packed[pivot]);
    for (std::size_t i = 0; i < packed.size(); ++i) {
      if (i == rank || !(packed[i][w] & bit)) continue;
      for (std::size_t k = w; k < words; ++k) packed[i][k] ^= packed[rank][k];
    }
    ++rank;
  }
  std::vector<ModRow> out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    ModRow r(ncols, 0);
    for (std::size_t c = 0; c < ncols; ++c) r[c] = (packed[i][c / 64] >> (c % 64)) & 1u;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ModRow> howell_form(std::vector<ModRow> rows, std::size_t ncols, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("howell_form: modulus must be positive");
  for (auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("howell_form: row length mismatch");
    for (auto& v : r) v %= modulus;
  }
  if (modulus == 1) return {};
  if (modulus == 2) return gf2_rref(rows, ncols);

  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_row), rows.end());
  std::size_t r = 0;
  ModRow tmp_r(ncols), tmp_i(ncols);
  for (std::size_t j = 0; j < ncols && r < rows.size(); ++j) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][j] == 0) continue;
      if (rows[r][j] == 0) {
        std::swap(rows[r], rows[i]);
        continue;
      }
      const auto a = static_cast<std::int64_t>(rows[r][j]);
      const auto b = static_cast<std::int64_t>(rows[i][j]);
      const auto [g, s, t] = extended_gcd(a, b);
      const std::uint64_t u = to_residue(-(b / g), modulus);
      const std::uint64_t v = to_residue(a / g, modulus);
      combine(tmp_r, to_residue(s, modulus), rows[r], to_residue(t, modulus), rows[i], modulus);
      combine(tmp_i, u, rows[r], v, rows[i], modulus);
      rows[r].swap(tmp_r);
      rows[i].swap(tmp_i);
    }
    if (rows[r][j] == 0) continue;
    const std::uint64_t unit = normalizing_unit(rows[r][j], modulus);
    for (auto& x : rows[r]) x = mulmod(x, unit, modulus);
    const std::uint64_t pivot = rows[r][j];
    const std::uint64_t annihilator = modulus / pivot;
    if (annihilator != modulus) {
      ModRow extra(ncols);
      for (std::size_t k = 0; k < ncols; ++k) extra[k] = mulmod(annihilator, rows[r][k], modulus);
      if (!is_zero_row(extra)) rows.push_back(std::move(extra));
    }
    for (std::size_t i = 0; i < r; ++i) {
      const std::uint64_t q = rows[i][j] / pivot;
      if (q == 0) continue;
      const std::uint64_t neg_q = (modulus - q % modulus) % modulus;
      for (std::size_t k = 0; k < ncols; ++k) rows[i][k] = (rows[i][k] + mulmod(neg_q, rows[r][k], modulus)) % modulus;
    }
    ++r;
  }
  rows.resize(std::min(r, rows.size()));
  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_row), rows.end());
  return rows;
}

Submodule::Submodule(std::uint64_t modulus, std::size_t ambient_dim, std::vector<ModRow> generators)
    : modulus_(modulus), dim_(ambient_dim), basis_(howell_form(std::move(generators), ambient_dim, modulus)) {
  pivot_cols_.reserve(basis_.size());
  for (const auto& row : basis_) {
    const auto it = std::find_if(row.begin(), row.end(), [](std::uint64_t v) { return v != 0; });
    pivot_cols_.push_back(static_cast<std::size_t>(it - row.begin()));
  }
}

ModRow Submodule::reduce(ModRow v) const {
  for (auto& x : v) x %= modulus_;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t j = pivot_cols_[i];
    const std::uint64_t pivot = basis_[i][j];
    if (v[j] == 0) continue;
    if (v[j] % pivot != 0) return v;
    const std::uint64_t q = v[j] / pivot;
    const std::uint64_t neg_q = (modulus_ - q % modulus_) % modulus_;
    for (std::size_t k = j; k < dim_; ++k) v[k] = (v[k] + mulmod(neg_q, basis_[i][k], modulus_)) % modulus_;
  }
  return v;
}

bool Submodule::contains(const ModRow& v) const {
  if (v.size() != dim_) throw std::invalid_argument("Submodule::contains: dimension mismatch");
  return is_zero_row(reduce(v));
}

std::size_t Submodule::cardinality() const {
  std::size_t total = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::uint64_t order = modulus_ / basis_[i][pivot_cols_[i]];
    if (total > std::numeric_limits<std::size_t>::max() / order) return std::numeric_limits<std::size_t>::max();
    total *= order;
  }
  return total;
}

std::vector<ModRow> Submodule::elements(std::size_t limit) const {
  const std::size_t count = cardinality();
  if (count > limit) throw ResourceLimit("submodule has too many elements to enumerate");
  std::vector<ModRow> out;
  out.reserve(count);
  std::vector<std::uint64_t> coeff(basis_.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    ModRow v(dim_, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t k = 0; k < dim_; ++k) v[k] = (v[k] + mulmod(coeff[i], basis_[i][k], modulus_)) % modulus_;
    out.push_back(std::move(v));
    for (std::size_t i = basis_.size(); i-- > 0;) {
      if (++coeff[i] < modulus_ / basis_[i][pivot_cols_[i]]) break;
      coeff[i] = 0;
    }
  }
  return out;
}

Submodule Submodule::sum(const Submodule& other) const {
  std::vector<ModRow> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return Submodule(modulus_, dim_, std::move(gens));
}

Submodule left_kernel(const std::vector<ModRow>& matrix, std::size_t ncols, std::uint64_t modulus) {
  const std::size_t k = matrix.size();
  std::vector<ModRow> augmented;
  augmented.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    ModRow row(ncols + k, 0);
    std::copy(matrix[i].begin(), matrix[i].end(), row.begin());
    row[ncols + i] = 1;
    augmented.push_back(std::move(row));
  }
  std::vector<ModRow> kernel_gens;
  for (auto& row : howell_form(std::move(augmented), ncols + k, modulus)) {
    if (std::any_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(ncols), [](std::uint64_t v) { return v != 0; }))
      continue;
    kernel_gens.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(ncols), row.end());
  }
  return Submodule(modulus, k, std::move(kernel_gens));
}

std::vector<RationalRow> rational_rref(std::vector<RationalRow> rows, std::size_t ncols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = Rational(1) / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::vector<RationalRow> rational_left_kernel(const std::vector<RationalRow>& matrix, std::size_t ncols) {
  const std::size_t k = matrix.size();
  // x*M = 0  <=>  M^T x^T = 0
  std::vector<RationalRow> transposed(ncols, RationalRow(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ncols; ++j) transposed[j][i] = matrix[i][j];
  const auto reduced = rational_rref(std::move(transposed), k);
  std::vector<std::size_t> pivots;
  for (const auto& row : reduced)
    pivots.push_back(static_cast<std::size_t>(
        std::find_if(row.begin(), row.end(), [](const Rational& v) { return !v.is_zero(); }) - row.begin()));
  std::vector<RationalRow> basis;
  for (std::size_t free = 0; free < k; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    RationalRow v(k);
    v[free] = 1;
    for (std::size_t r = 0; r < reduced.size(); ++r) v[pivots[r]] = -reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ringlab::linalg
