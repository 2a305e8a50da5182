#pragma once

// Structure-constant algebras: a free module over Z/m or Q with a basis
// e_0..e_{d-1} and products e_i * e_j given as coordinate vectors.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/linalg.hpp"
#include "ringlab/rational.hpp"

namespace ringlab {

struct ModScalars {
  using value_type = std::uint64_t;
  std::uint64_t modulus = 2;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % modulus; }
  value_type from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(modulus);
    return static_cast<value_type>(((v % m) + m) % m);
  }
  value_type add(value_type a, value_type b) const { return (a + b) % modulus; }
  value_type neg(value_type a) const { return (modulus - a) % modulus; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % modulus);
  }
  bool is_zero(value_type a) const { return a == 0; }
  std::string render(value_type a) const { return std::to_string(a); }
  /// Ring-description name of the coefficient ring.
  std::string name() const;
  bool is_field() const;
};

struct RationalScalars {
  using value_type = Rational;

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type from_int(std::int64_t v) const { return Rational(v); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  std::string render(const value_type& a) const { return a.to_string(); }
  std::string name() const { return "Q"; }
  bool is_field() const { return true; }
};

template <class Scalars>
class LinRing {
 public:
  using Scalar = typename Scalars::value_type;
  using Vec = std::vector<Scalar>;

  LinRing(Scalars scalars, std::vector<std::string> basis_names, std::vector<Vec> products, Vec one, std::string recipe)
      : scalars_(scalars),
        names_(std::move(basis_names)),
        products_(std::move(products)),
        one_(std::move(one)),
        recipe_(std::move(recipe)) {}

  const Scalars& scalars() const noexcept { return scalars_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::string& basis_name(std::size_t i) const { return names_[i]; }
  const std::string& recipe() const noexcept { return recipe_; }
  /// Coordinates of e_i * e_j.
  const Vec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }

  Vec zero() const { return Vec(dim(), scalars_.zero()); }
  const Vec& one() const noexcept { return one_; }
  Vec basis(std::size_t i) const {
    Vec v = zero();
    v[i] = scalars_.one();
    return v;
  }
  /// Element sum coefficient*e_i over (coefficient, basis name) pairs.
  Vec combination(const std::vector<std::pair<std::int64_t, std::string>>& terms) const;

  Vec add(const Vec& a, const Vec& b) const {
    Vec r(dim());
    for (std::size_t k = 0; k < dim(); ++k) r[k] = scalars_.add(a[k], b[k]);
    return r;
  }
  Vec neg(const Vec& a) const {
    Vec r(dim());
    for (std::size_t k = 0; k < dim(); ++k) r[k] = scalars_.neg(a[k]);
    return r;
  }
  Vec sub(const Vec& a, const Vec& b) const { return add(a, neg(b)); }
  Vec scale(const Scalar& c, const Vec& a) const {
    Vec r(dim());
    for (std::size_t k = 0; k < dim(); ++k) r[k] = scalars_.mul(c, a[k]);
    return r;
  }
  Vec mul(const Vec& a, const Vec& b) const {
    Vec r = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (scalars_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (scalars_.is_zero(b[j])) continue;
        const Scalar c = scalars_.mul(a[i], b[j]);
        const Vec& p = product(i, j);
        for (std::size_t k = 0; k < dim(); ++k)
          if (!scalars_.is_zero(p[k])) r[k] = scalars_.add(r[k], scalars_.mul(c, p[k]));
      }
    }
    return r;
  }
  Vec mul3(const Vec& a, const Vec& b, const Vec& c) const { return mul(mul(a, b), c); }
  Vec pow(const Vec& a, unsigned k) const {
    Vec r = one_;
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  bool is_zero(const Vec& a) const {
    for (const auto& x : a)
      if (!scalars_.is_zero(x)) return false;
    return true;
  }

  /// Coordinate tuple, e.g. "(0,1,0,-1)".
  std::string render(const Vec& a) const {
    std::string s = "(";
    for (std::size_t k = 0; k < dim(); ++k) {
      if (k) s += ",";
      s += scalars_.render(a[k]);
    }
    return s + ")";
  }
  /// Linear combination over basis names, e.g. "-2*(0,1)".
  std::string render_terms(const Vec& a) const;

  /// Empty report iff the structure constants are associative on all basis
  /// triples and `one` is a two-sided identity on the basis. By bilinearity
  /// this is a complete check.
  AxiomReport axiom_check() const;

 private:
  Scalars scalars_;
  std::vector<std::string> names_;
  std::vector<Vec> products_;
  Vec one_;
  std::string recipe_;
};

using ModAlgebra = LinRing<ModScalars>;
using RationalAlgebra = LinRing<RationalScalars>;
using ModAlgebraPtr = std::shared_ptr<const ModAlgebra>;
using RationalAlgebraPtr = std::shared_ptr<const RationalAlgebra>;

template <class Scalars>
typename LinRing<Scalars>::Vec LinRing<Scalars>::combination(
    const std::vector<std::pair<std::int64_t, std::string>>& terms) const {
  Vec v = zero();
  for (const auto& [c, name] : terms) {
    std::size_t i = 0;
    while (i < dim() && names_[i] != name) ++i;
    if (i == dim()) throw std::invalid_argument("unknown basis element " + name);
    v[i] = scalars_.add(v[i], scalars_.from_int(c));
  }
  return v;
}

template <class Scalars>
std::string LinRing<Scalars>::render_terms(const Vec& a) const {
  std::string s;
  for (std::size_t k = 0; k < dim(); ++k) {
    if (scalars_.is_zero(a[k])) continue;
    if (!s.empty()) s += " + ";
    const std::string c = scalars_.render(a[k]);
    s += (c == "1" ? "" : c + "*") + names_[k];
  }
  return s.empty() ? "0" : s;
}

template <class Scalars>
AxiomReport LinRing<Scalars>::axiom_check() const {
  AxiomReport report;
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Vec ei = basis(i);
    if (mul(one_, ei) != ei || mul(ei, one_) != ei) report.violations.push_back("identity fails on " + names_[i]);
    for (std::size_t j = 0; j < d; ++j) {
      const Vec eij = product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        if (mul(eij, basis(k)) != mul(ei, product(j, k)) && report.violations.size() < 16)
          report.violations.push_back("associativity fails on (" + names_[i] + ", " + names_[j] + ", " + names_[k] + ")");
      }
    }
  }
  return report;
}

// ---- constructors -------------------------------------------------------

ModAlgebraPtr lin_zmod(std::uint64_t m);
/// Hamilton quaternions with basis 1, i, j, k.
template <class Scalars>
std::shared_ptr<const LinRing<Scalars>> quaternions(Scalars scalars, std::string recipe);
RationalAlgebraPtr rational_quaternions();

template <class Scalars>
std::shared_ptr<const LinRing<Scalars>> lin_trivial_extension(const LinRing<Scalars>& base);
template <class Scalars>
std::shared_ptr<const LinRing<Scalars>> lin_upper_triangular(const LinRing<Scalars>& base, unsigned n);
template <class Scalars>
std::shared_ptr<const LinRing<Scalars>> lin_direct_product(const LinRing<Scalars>& a, const LinRing<Scalars>& b);
/// Full n x n matrices over the coefficient ring, basis E_ij row-major.
ModAlgebraPtr lin_full_matrix(ModScalars scalars, unsigned n);

// ---- enumeration --------------------------------------------------------

/// Enumerable view of a finite algebra, optionally restricted to a subring
/// cut out by `filter`. Element order: coordinate vectors read as base-m
/// numerals with coordinate 0 least significant.
class EnumeratedLinRing final : public FiniteRing {
 public:
  using Filter = std::function<bool(const linalg::ModRow&)>;
  using Renderer = std::function<std::string(const linalg::ModRow&)>;

  EnumeratedLinRing(ModAlgebraPtr algebra, Filter filter = {}, std::string recipe = {}, Renderer renderer = {});

  Elem add(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  std::string render(Elem a) const override;

  const ModAlgebra& algebra() const noexcept { return *algebra_; }
  linalg::ModRow coords(Elem a) const;
  /// Element with the given coordinates, if it lies in the carrier.
  std::optional<Elem> find(const linalg::ModRow& v) const;

 private:
  std::uint64_t encode(const std::uint16_t* coords) const;

  ModAlgebraPtr algebra_;
  Renderer renderer_;
  std::size_t dim_;
  std::uint64_t m_;
  std::vector<std::uint16_t> coords_;      // size() * dim_
  std::vector<std::uint32_t> code_index_;  // m^dim entries, UINT32_MAX when absent
  std::vector<std::uint64_t> constants_;   // dim^3 dense structure constants
};

std::shared_ptr<const EnumeratedLinRing> enumerate_algebra(ModAlgebraPtr algebra);

// ---- ring-core operations on algebras ------------------------------------

/// Nilpotency bound: dim+1 over a field, dim*(1+v) over Z/m with v the
/// largest prime exponent of m.
unsigned lin_nilpotency_bound(const ModAlgebra& a);

/// All coordinate vectors of a small algebra in element order.
std::vector<linalg::ModRow> lin_all_elements(const ModAlgebra& a);

struct LinNilpotent {
  linalg::ModRow element;
  unsigned index;
};
std::vector<LinNilpotent> lin_nilpotents(const ModAlgebra& a);
std::vector<linalg::ModRow> lin_idempotents(const ModAlgebra& a);

/// {x : x*b = 0} as the left kernel of right multiplication by b.
linalg::Submodule lin_left_annihilator(const ModAlgebra& a, const linalg::ModRow& b);
/// {x : w*x = 0}.
linalg::Submodule lin_right_annihilator(const ModAlgebra& a, const linalg::ModRow& w);

struct LinClosureWitness {
  linalg::ModRow s, r, product;
};
/// Closure of S under right multiplication, checked on basis(S) x basis.
std::optional<LinClosureWitness> lin_right_closure_failure(const ModAlgebra& a, const linalg::Submodule& s);

struct LinLnzsWitness {
  linalg::ModRow a, r, b;
};
/// Generator-reduced LNZS decision: for every nilpotent b, basis(l(b)) x basis.
std::optional<LinLnzsWitness> lin_lnzs_failure(const ModAlgebra& alg);

std::vector<RationalAlgebra::Vec> rational_left_annihilator(const RationalAlgebra& a, const RationalAlgebra::Vec& b);
std::vector<RationalAlgebra::Vec> rational_right_annihilator(const RationalAlgebra& a, const RationalAlgebra::Vec& w);

}  // namespace ringlab
