#include "ringlab/lin_ring.hpp"

#include <algorithm>
#include <limits>

#include "ringlab/config.hpp"
#include "ringlab/error.hpp"
#include "ringlab/modarith.hpp"

namespace ringlab {

std::string ModScalars::name() const {
  return (is_prime(modulus) ? "Fp(" : "Zmod(") + std::to_string(modulus) + ")";
}

bool ModScalars::is_field() const { return is_prime(modulus); }

ModAlgebraPtr lin_zmod(std::uint64_t m) {
  const ModScalars s{m};
  return std::make_shared<const ModAlgebra>(s, std::vector<std::string>{"1"}, std::vector<ModAlgebra::Vec>{{s.one()}},
                                            ModAlgebra::Vec{s.one()}, "Lin(" + s.name() + ")");
}

template <class Scalars>
std::shared_ptr<const LinRing<Scalars>> quaternions(Scalars s, std::string recipe) {
  using Vec = typename LinRing<Scalars>::Vec;
  // sign and index of basis products among 1, i, j, k
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<Vec> products;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Vec v(4, s.zero());
      v[index[a][b]] = s.from_int(sign[a][b]);
      products.push_back(std::move(v));
    }
  Vec one(4, s.zero());
  one[0] = s.one();
  return std::make_shared<const LinRing<Scalars>>(s, std::vector<std::string>{"1", "i", "j", "k"}, std::move(products),
                                                  std::move(one), std::move(recipe));
}

RationalAlgebraPtr rational_quaternions() { return quaternions(RationalScalars{}, "Quat()"); }

template <class Scalars>
std::shared_ptr<const LinRing<Scalars>> lin_trivial_extension(const LinRing<Scalars>& base) {
  using Vec = typename LinRing<Scalars>::Vec;
  const std::size_t d = base.dim();
  const auto& s = base.scalars();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back("(" + base.basis_name(i) + ",0)");
  for (std::size_t i = 0; i < d; ++i) names.push_back("(0," + base.basis_name(i) + ")");
  auto embed = [&](const Vec& v, std::size_t offset) {
    Vec out(2 * d, s.zero());
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
    return out;
  };
  std::vector<Vec> products(4 * d * d, Vec(2 * d, s.zero()));
  for (std::size_t i = 0; i < 2 * d; ++i)
    for (std::size_t j = 0; j < 2 * d; ++j) {
      const bool left_r = i < d, right_r = j < d;
      if (!left_r && !right_r) continue;  // (0,s)(0,t) = 0
      const Vec& p = base.product(i % d, j % d);
      products[i * 2 * d + j] = embed(p, left_r && right_r ? 0 : d);
    }
  return std::make_shared<const LinRing<Scalars>>(s, std::move(names), std::move(products), embed(base.one(), 0),
                                                  "TrivExt(" + base.recipe() + ")");
}

template <class Scalars>
std::shared_ptr<const LinRing<Scalars>> lin_upper_triangular(const LinRing<Scalars>& base, unsigned n) {
  using Vec = typename LinRing<Scalars>::Vec;
  if (n == 0) throw PreconditionError("matrix order must be at least 1");
  const std::size_t d = base.dim();
  const auto& s = base.scalars();
  std::vector<std::pair<unsigned, unsigned>> cells;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) cells.emplace_back(i, j);
  auto cell_index = [&](unsigned i, unsigned j) {
    return static_cast<std::size_t>(std::find(cells.begin(), cells.end(), std::pair{i, j}) - cells.begin());
  };
  const std::size_t dim = cells.size() * d;
  std::vector<std::string> names;
  for (const auto& [i, j] : cells)
    for (std::size_t k = 0; k < d; ++k)
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + "*" + base.basis_name(k));
  std::vector<Vec> products(dim * dim, Vec(dim, s.zero()));
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      const auto [i, j] = cells[x / d];
      const auto [j2, l] = cells[y / d];
      if (j != j2) continue;
      const Vec& p = base.product(x % d, y % d);
      const std::size_t off = cell_index(i, l) * d;
      for (std::size_t k = 0; k < d; ++k) products[x * dim + y][off + k] = p[k];
    }
  Vec one(dim, s.zero());
  for (unsigned i = 0; i < n; ++i)
    for (std::size_t k = 0; k < d; ++k) one[cell_index(i, i) * d + k] = base.one()[k];
  return std::make_shared<const LinRing<Scalars>>(s, std::move(names), std::move(products), std::move(one),
                                                  "T(" + std::to_string(n) + "," + base.recipe() + ")");
}

template <class Scalars>
std::shared_ptr<const LinRing<Scalars>> lin_direct_product(const LinRing<Scalars>& a, const LinRing<Scalars>& b) {
  using Vec = typename LinRing<Scalars>::Vec;
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  const auto& s = a.scalars();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < da; ++i) names.push_back("(" + a.basis_name(i) + ",0)");
  for (std::size_t i = 0; i < db; ++i) names.push_back("(0," + b.basis_name(i) + ")");
  std::vector<Vec> products(d * d, Vec(d, s.zero()));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) std::copy(a.product(i, j).begin(), a.product(i, j).end(), products[i * d + j].begin());
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      const Vec& p = b.product(i, j);
      std::copy(p.begin(), p.end(), products[(da + i) * d + da + j].begin() + static_cast<std::ptrdiff_t>(da));
    }
  Vec one(d, s.zero());
  std::copy(a.one().begin(), a.one().end(), one.begin());
  std::copy(b.one().begin(), b.one().end(), one.begin() + static_cast<std::ptrdiff_t>(da));
  return std::make_shared<const LinRing<Scalars>>(s, std::move(names), std::move(products), std::move(one),
                                                  "Product(" + a.recipe() + "," + b.recipe() + ")");
}

template std::shared_ptr<const LinRing<ModScalars>> quaternions(ModScalars, std::string);
template std::shared_ptr<const LinRing<RationalScalars>> quaternions(RationalScalars, std::string);
template std::shared_ptr<const LinRing<ModScalars>> lin_trivial_extension(const LinRing<ModScalars>&);
template std::shared_ptr<const LinRing<RationalScalars>> lin_trivial_extension(const LinRing<RationalScalars>&);
template std::shared_ptr<const LinRing<ModScalars>> lin_upper_triangular(const LinRing<ModScalars>&, unsigned);
template std::shared_ptr<const LinRing<RationalScalars>> lin_upper_triangular(const LinRing<RationalScalars>&, unsigned);
template std::shared_ptr<const LinRing<ModScalars>> lin_direct_product(const LinRing<ModScalars>&, const LinRing<ModScalars>&);
template std::shared_ptr<const LinRing<RationalScalars>> lin_direct_product(const LinRing<RationalScalars>&,
                                                                             const LinRing<RationalScalars>&);

ModAlgebraPtr lin_full_matrix(ModScalars s, unsigned n) {
  if (n == 0) throw PreconditionError("matrix order must be at least 1");
  const std::size_t d = static_cast<std::size_t>(n) * n;
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<ModAlgebra::Vec> products(d * d, ModAlgebra::Vec(d, 0));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned l = 0; l < n; ++l) products[(i * n + j) * d + (j * n + l)][i * n + l] = s.one();
  ModAlgebra::Vec one(d, 0);
  for (unsigned i = 0; i < n; ++i) one[i * n + i] = s.one();
  return std::make_shared<const ModAlgebra>(s, std::move(names), std::move(products), std::move(one),
                                            "M(" + std::to_string(n) + "," + s.name() + ")");
}

// ---- EnumeratedLinRing --------------------------------------------------

namespace {

struct Layout {
  std::vector<std::uint16_t> coords;
  std::vector<std::uint32_t> code_index;
  std::size_t count = 0;
};

Layout layout_for(const ModAlgebra& alg, const EnumeratedLinRing::Filter& filter) {
  const std::size_t d = alg.dim();
  const std::uint64_t m = alg.scalars().modulus;
  if (m > std::numeric_limits<std::uint16_t>::max()) throw ResourceLimit("modulus too large to enumerate");
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < d; ++k) {
    total *= m;
    if (total > (std::uint64_t{1} << 26)) throw ResourceLimit("algebra " + alg.recipe() + " is too large to enumerate");
  }
  Layout out;
  out.code_index.assign(total, std::numeric_limits<std::uint32_t>::max());
  linalg::ModRow v(d, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t k = 0; k < d; ++k) {
      v[k] = c % m;
      c /= m;
    }
    if (filter && !filter(v)) continue;
    out.code_index[code] = static_cast<std::uint32_t>(out.count++);
    for (std::size_t k = 0; k < d; ++k) out.coords.push_back(static_cast<std::uint16_t>(v[k]));
    if (out.count > max_carrier()) require_within_cap(out.count, alg.recipe().c_str());
  }
  return out;
}

}  // namespace

EnumeratedLinRing::EnumeratedLinRing(ModAlgebraPtr algebra, Filter filter, std::string recipe, Renderer renderer)
    : FiniteRing(layout_for(*algebra, filter).count, recipe.empty() ? algebra->recipe() : recipe),
      algebra_(std::move(algebra)),
      renderer_(std::move(renderer)),
      dim_(algebra_->dim()),
      m_(algebra_->scalars().modulus) {
  Layout layout = layout_for(*algebra_, filter);
  coords_ = std::move(layout.coords);
  code_index_ = std::move(layout.code_index);
  if (code_index_[0] != 0) throw PreconditionError("subring filter rejects zero");
  constants_.assign(dim_ * dim_ * dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) constants_[(i * dim_ + j) * dim_ + k] = algebra_->product(i, j)[k];
  set_one(find(algebra_->one()));
}

std::uint64_t EnumeratedLinRing::encode(const std::uint16_t* c) const {
  std::uint64_t code = 0;
  for (std::size_t k = dim_; k-- > 0;) code = code * m_ + c[k];
  return code;
}

linalg::ModRow EnumeratedLinRing::coords(Elem a) const {
  const std::uint16_t* c = &coords_[a.index * dim_];
  return linalg::ModRow(c, c + dim_);
}

std::optional<Elem> EnumeratedLinRing::find(const linalg::ModRow& v) const {
  if (v.size() != dim_) return std::nullopt;
  std::vector<std::uint16_t> c(dim_);
  for (std::size_t k = 0; k < dim_; ++k) c[k] = static_cast<std::uint16_t>(v[k] % m_);
  const std::uint32_t idx = code_index_[encode(c.data())];
  if (idx == std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return Elem{idx};
}

namespace {
constexpr std::size_t kMaxInlineDim = 64;
}

Elem EnumeratedLinRing::add(Elem a, Elem b) const {
  std::uint16_t out[kMaxInlineDim];
  std::vector<std::uint16_t> heap;
  std::uint16_t* r = out;
  if (dim_ > kMaxInlineDim) {
    heap.resize(dim_);
    r = heap.data();
  }
  const std::uint16_t* x = &coords_[a.index * dim_];
  const std::uint16_t* y = &coords_[b.index * dim_];
  for (std::size_t k = 0; k < dim_; ++k) r[k] = static_cast<std::uint16_t>((x[k] + y[k]) % m_);
  const std::uint32_t idx = code_index_[encode(r)];
  if (idx == std::numeric_limits<std::uint32_t>::max()) throw PreconditionError(recipe() + ": carrier not closed under addition");
  return Elem{idx};
}

Elem EnumeratedLinRing::neg(Elem a) const {
  std::uint16_t out[kMaxInlineDim];
  std::vector<std::uint16_t> heap;
  std::uint16_t* r = out;
  if (dim_ > kMaxInlineDim) {
    heap.resize(dim_);
    r = heap.data();
  }
  const std::uint16_t* x = &coords_[a.index * dim_];
  for (std::size_t k = 0; k < dim_; ++k) r[k] = static_cast<std::uint16_t>((m_ - x[k]) % m_);
  const std::uint32_t idx = code_index_[encode(r)];
  if (idx == std::numeric_limits<std::uint32_t>::max()) throw PreconditionError(recipe() + ": carrier not closed under negation");
  return Elem{idx};
}

Elem EnumeratedLinRing::mul(Elem a, Elem b) const {
  std::uint64_t acc[kMaxInlineDim] = {};
  std::vector<std::uint64_t> heap;
  std::uint64_t* r = acc;
  if (dim_ > kMaxInlineDim) {
    heap.assign(dim_, 0);
    r = heap.data();
  }
  const std::uint16_t* x = &coords_[a.index * dim_];
  const std::uint16_t* y = &coords_[b.index * dim_];
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const std::uint64_t c = static_cast<std::uint64_t>(x[i]) * y[j] % m_;
      const std::uint64_t* p = &constants_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k)
        if (p[k]) r[k] = (r[k] + c * p[k]) % m_;
    }
  }
  std::uint16_t out[kMaxInlineDim];
  std::vector<std::uint16_t> heap16;
  std::uint16_t* o = out;
  if (dim_ > kMaxInlineDim) {
    heap16.resize(dim_);
    o = heap16.data();
  }
  for (std::size_t k = 0; k < dim_; ++k) o[k] = static_cast<std::uint16_t>(r[k]);
  const std::uint32_t idx = code_index_[encode(o)];
  if (idx == std::numeric_limits<std::uint32_t>::max()) throw PreconditionError(recipe() + ": carrier not closed under multiplication");
  return Elem{idx};
}

std::string EnumeratedLinRing::render(Elem a) const {
  const auto v = coords(a);
  return renderer_ ? renderer_(v) : algebra_->render(v);
}

std::shared_ptr<const EnumeratedLinRing> enumerate_algebra(ModAlgebraPtr algebra) {
  return std::make_shared<const EnumeratedLinRing>(std::move(algebra));
}

// ---- ring-core on algebras ----------------------------------------------

unsigned lin_nilpotency_bound(const ModAlgebra& a) {
  const auto d = static_cast<unsigned>(a.dim());
  if (a.scalars().is_field()) return d + 1;
  return d * (1 + max_prime_exponent(a.scalars().modulus));
}

std::vector<linalg::ModRow> lin_all_elements(const ModAlgebra& a) {
  const std::uint64_t m = a.scalars().modulus;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    total *= m;
    if (total > max_carrier()) throw ResourceLimit("algebra " + a.recipe() + " is too large to enumerate");
  }
  std::vector<linalg::ModRow> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    linalg::ModRow v(a.dim());
    std::uint64_t c = code;
    for (auto& x : v) {
      x = c % m;
      c /= m;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<LinNilpotent> lin_nilpotents(const ModAlgebra& a) {
  const unsigned bound = lin_nilpotency_bound(a);
  std::vector<LinNilpotent> out;
  for (auto& v : lin_all_elements(a)) {
    auto p = v;
    for (unsigned k = 1; k <= bound; ++k) {
      if (a.is_zero(p)) {
        out.push_back({std::move(v), k});
        break;
      }
      p = a.mul(p, v);
    }
  }
  return out;
}

std::vector<linalg::ModRow> lin_idempotents(const ModAlgebra& a) {
  std::vector<linalg::ModRow> out;
  for (auto& v : lin_all_elements(a))
    if (a.mul(v, v) == v) out.push_back(std::move(v));
  return out;
}

linalg::Submodule lin_left_annihilator(const ModAlgebra& a, const linalg::ModRow& b) {
  std::vector<linalg::ModRow> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.mul(a.basis(i), b));
  return linalg::left_kernel(rows, a.dim(), a.scalars().modulus);
}

linalg::Submodule lin_right_annihilator(const ModAlgebra& a, const linalg::ModRow& w) {
  std::vector<linalg::ModRow> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.mul(w, a.basis(i)));
  return linalg::left_kernel(rows, a.dim(), a.scalars().modulus);
}

std::optional<LinClosureWitness> lin_right_closure_failure(const ModAlgebra& a, const linalg::Submodule& s) {
  for (const auto& g : s.basis())
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto p = a.mul(g, a.basis(j));
      if (!s.contains(p)) return LinClosureWitness{g, a.basis(j), std::move(p)};
    }
  return std::nullopt;
}

std::optional<LinLnzsWitness> lin_lnzs_failure(const ModAlgebra& alg) {
  for (const auto& [b, index] : lin_nilpotents(alg)) {
    const auto ann = lin_left_annihilator(alg, b);
    for (const auto& g : ann.basis())
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        const auto r = alg.basis(j);
        if (!alg.is_zero(alg.mul3(g, r, b))) return LinLnzsWitness{g, r, b};
      }
  }
  return std::nullopt;
}

std::vector<RationalAlgebra::Vec> rational_left_annihilator(const RationalAlgebra& a, const RationalAlgebra::Vec& b) {
  std::vector<linalg::RationalRow> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.mul(a.basis(i), b));
  return linalg::rational_left_kernel(rows, a.dim());
}

std::vector<RationalAlgebra::Vec> rational_right_annihilator(const RationalAlgebra& a, const RationalAlgebra::Vec& w) {
  std::vector<linalg::RationalRow> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.mul(w, a.basis(i)));
  return linalg::rational_left_kernel(rows, a.dim());
}

}  // namespace ringlab
