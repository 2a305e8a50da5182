#pragma once

// Reference implementations used only by the tests. They follow the
// definitions literally (full element scans, no generator reductions) and
// share nothing with the library beyond the ring operations themselves.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace oracle {

using ringlab::Elem;
using ringlab::FiniteRing;

inline bool nilpotent(const FiniteRing& R, Elem a) {
  Elem p = a;
  for (std::size_t k = 1; k <= R.size(); ++k) {
    if (p == R.zero()) return true;
    p = R.mul(p, a);
  }
  return false;
}

inline std::vector<Elem> all(const FiniteRing& R) {
  std::vector<Elem> v;
  for (Elem a : R.elements()) v.push_back(a);
  return v;
}

inline bool reduced(const FiniteRing& R) {
  for (Elem a : R.elements())
    if (a != R.zero() && nilpotent(R, a)) return false;
  return true;
}

/// b nilpotent, ab = 0 => arb = 0 for all r.
inline bool lnzs(const FiniteRing& R) {
  const auto E = all(R);
  for (Elem b : E) {
    if (!nilpotent(R, b)) continue;
    for (Elem a : E) {
      if (R.mul(a, b) != R.zero()) continue;
      for (Elem r : E)
        if (R.mul3(a, r, b) != R.zero()) return false;
    }
  }
  return true;
}

inline bool semicommutative(const FiniteRing& R) {
  const auto E = all(R);
  for (Elem w : E)
    for (Elem h : E) {
      if (R.mul(w, h) != R.zero()) continue;
      for (Elem r : E)
        if (R.mul3(w, r, h) != R.zero()) return false;
    }
  return true;
}

inline bool reversible(const FiniteRing& R) {
  for (Elem w : R.elements())
    for (Elem h : R.elements())
      if (R.mul(w, h) == R.zero() && R.mul(h, w) != R.zero()) return false;
  return true;
}

inline bool weakly_semicommutative(const FiniteRing& R) {
  const auto E = all(R);
  for (Elem w : E)
    for (Elem h : E) {
      if (R.mul(w, h) != R.zero()) continue;
      for (Elem r : E)
        if (!nilpotent(R, R.mul3(w, r, h))) return false;
    }
  return true;
}

inline bool ni(const FiniteRing& R) {
  std::vector<Elem> N;
  for (Elem a : R.elements())
    if (nilpotent(R, a)) N.push_back(a);
  for (Elem a : N)
    for (Elem b : N)
      if (!nilpotent(R, R.add(a, b))) return false;
  for (Elem a : N)
    for (Elem r : R.elements())
      if (!nilpotent(R, R.mul(r, a)) || !nilpotent(R, R.mul(a, r))) return false;
  return true;
}

inline std::vector<Elem> idempotents(const FiniteRing& R) {
  std::vector<Elem> out;
  for (Elem e : R.elements())
    if (R.mul(e, e) == e) out.push_back(e);
  return out;
}

inline bool abelian(const FiniteRing& R) {
  for (Elem e : idempotents(R))
    for (Elem r : R.elements())
      if (R.mul(e, r) != R.mul(r, e)) return false;
  return true;
}

/// eR(1-e)Re = 0, written without 1 as e r s e = e r e s e.
inline bool quasi_normal(const FiniteRing& R) {
  for (Elem e : idempotents(R))
    for (Elem r : R.elements())
      for (Elem s : R.elements()) {
        const Elem ers = R.mul(R.mul(e, r), s);
        const Elem lhs = R.mul(ers, e);
        const Elem rhs = R.mul(R.mul(R.mul(R.mul(e, r), e), s), e);
        if (lhs != rhs) return false;
      }
  return true;
}

inline std::vector<Elem> left_ideal_Ra(const FiniteRing& R, Elem a) {
  std::vector<std::uint8_t> in(R.size(), 0);
  std::vector<Elem> members;
  // Ra is closed under + because it is the image of an additive map.
  for (Elem r : R.elements()) {
    const Elem x = R.mul(r, a);
    if (!in[x.index]) {
      in[x.index] = 1;
      members.push_back(x);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline std::vector<Elem> minimal_left_idempotents(const FiniteRing& R) {
  std::vector<Elem> out;
  for (Elem e : idempotents(R)) {
    if (e == R.zero()) continue;
    const auto Re = left_ideal_Ra(R, e);
    bool minimal = true;
    for (Elem a : Re)
      if (a != R.zero() && left_ideal_Ra(R, a) != Re) minimal = false;
    if (minimal) out.push_back(e);
  }
  return out;
}

inline bool left_min_abel(const FiniteRing& R) {
  for (Elem e : minimal_left_idempotents(R))
    for (Elem r : R.elements())
      if (R.mul(r, e) != R.mul3(e, r, e)) return false;
  return true;
}

inline bool left_mc2(const FiniteRing& R) {
  for (Elem e : minimal_left_idempotents(R))
    for (Elem a : R.elements()) {
      bool aRe = true, eRa = true;
      for (Elem r : R.elements()) {
        aRe = aRe && R.mul3(a, r, e) == R.zero();
        eRa = eRa && R.mul3(e, r, a) == R.zero();
      }
      if (aRe && !eRa) return false;
    }
  return true;
}

/// aRb = 0 => a = 0 or b = 0.
inline bool prime(const FiniteRing& R) {
  for (Elem a : R.elements()) {
    if (a == R.zero()) continue;
    for (Elem b : R.elements()) {
      if (b == R.zero()) continue;
      bool all_zero = true;
      for (Elem r : R.elements()) all_zero = all_zero && R.mul3(a, r, b) == R.zero();
      if (all_zero) return false;
    }
  }
  return !R.is_zero_ring();
}

inline bool semiprime(const FiniteRing& R) {
  for (Elem a : R.elements()) {
    if (a == R.zero()) continue;
    bool all_zero = true;
    for (Elem r : R.elements()) all_zero = all_zero && R.mul3(a, r, a) == R.zero();
    if (all_zero) return false;
  }
  return true;
}

inline bool domain(const FiniteRing& R) {
  if (R.is_zero_ring()) return false;
  for (Elem a : R.elements())
    for (Elem b : R.elements())
      if (a != R.zero() && b != R.zero() && R.mul(a, b) == R.zero()) return false;
  return true;
}

/// Upper triangular n x n integer matrices mod m, enumerated independently
/// of the library (entries row-major above the diagonal).
struct TriangularModel {
  unsigned n;
  std::int64_t m;
  using Mat = std::vector<std::int64_t>;

  Mat mul(const Mat& a, const Mat& b) const {
    Mat c(n * n, 0);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i; j < n; ++j) {
        std::int64_t s = 0;
        for (unsigned k = i; k <= j; ++k) s += a[i * n + k] * b[k * n + j];
        c[i * n + j] = s % m;
      }
    return c;
  }
  bool zero(const Mat& a) const {
    for (auto x : a)
      if (x) return false;
    return true;
  }
  std::vector<Mat> elements() const {
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i; j < n; ++j) cells.push_back({i, j});
    std::size_t total = 1;
    for (std::size_t c = 0; c < cells.size(); ++c) total *= static_cast<std::size_t>(m);
    std::vector<Mat> out;
    for (std::size_t code = 0; code < total; ++code) {
      Mat a(n * n, 0);
      std::size_t x = code;
      for (auto [i, j] : cells) {
        a[i * n + j] = static_cast<std::int64_t>(x % static_cast<std::size_t>(m));
        x /= static_cast<std::size_t>(m);
      }
      out.push_back(a);
    }
    return out;
  }
  bool nilpotent(const Mat& a) const {
    Mat p = a;
    for (unsigned k = 0; k <= 8 * n; ++k) {
      if (zero(p)) return true;
      p = mul(p, a);
    }
    return false;
  }
  bool lnzs() const {
    const auto E = elements();
    for (const auto& b : E) {
      if (!nilpotent(b)) continue;
      for (const auto& a : E) {
        if (!zero(mul(a, b))) continue;
        for (const auto& r : E)
          if (!zero(mul(mul(a, r), b))) return false;
      }
    }
    return true;
  }
};

/// Integer quaternions and the trivial extensions T(H,H), T(T(H,H),T(H,H))
/// as nested pairs (x, y) with (x,y)(u,v) = (xu, xv + yu).
struct Quat {
  std::array<std::int64_t, 4> c{};  // 1, i, j, k
  friend Quat operator+(const Quat& a, const Quat& b) {
    Quat r;
    for (int t = 0; t < 4; ++t) r.c[t] = a.c[t] + b.c[t];
    return r;
  }
  friend Quat operator*(const Quat& p, const Quat& q) {
    const auto [a1, b1, c1, d1] = p.c;
    const auto [a2, b2, c2, d2] = q.c;
    return Quat{{a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                 a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2}};
  }
  bool zero() const { return c == std::array<std::int64_t, 4>{}; }
  friend bool operator==(const Quat&, const Quat&) = default;
};

template <class T>
struct Pair {
  T x, y;
  friend Pair operator+(const Pair& a, const Pair& b) { return {a.x + b.x, a.y + b.y}; }
  friend Pair operator*(const Pair& a, const Pair& b) { return {a.x * b.x, a.x * b.y + a.y * b.x}; }
  bool zero() const { return x.zero() && y.zero(); }
  friend bool operator==(const Pair&, const Pair&) = default;
};

using THH = Pair<Quat>;
using SHH = Pair<THH>;

inline Quat q1() { return Quat{{1, 0, 0, 0}}; }
inline Quat qi() { return Quat{{0, 1, 0, 0}}; }
inline Quat qj() { return Quat{{0, 0, 1, 0}}; }
inline Quat qk() { return Quat{{0, 0, 0, 1}}; }
inline Quat q0() { return Quat{}; }

}  // namespace oracle
