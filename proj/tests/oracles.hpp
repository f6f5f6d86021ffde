#pragma once

// Naive reference computations used as independent oracles. Nothing here
// calls into the library's checkers; they only read tables.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "skewtwist/brace.hpp"

namespace oracle {

using skewtwist::Elem;
using Fn2 = std::function<std::pair<Elem, Elem>(Elem, Elem)>;
using Tri = std::array<Elem, 3>;
using Fn3 = std::function<Tri(Elem, Elem, Elem)>;

inline Fn2 wrap(const skewtwist::PairMap& f) {
  return [f](Elem x, Elem y) {
    auto p = f(x, y);
    return std::pair{p.first, p.second};
  };
}

inline Fn3 wrap(const skewtwist::TripleMap& f) {
  return [f](Elem x, Elem y, Elem z) {
    auto t = f(x, y, z);
    return Tri{t.first, t.second, t.third};
  };
}

inline Tri on12(const Fn2& f, Tri t) {
  auto [a, b] = f(t[0], t[1]);
  return {a, b, t[2]};
}
inline Tri on23(const Fn2& f, Tri t) {
  auto [b, c] = f(t[1], t[2]);
  return {t[0], b, c};
}

/// r23 r12 r23 == r12 r23 r12 on every triple.
inline bool braid_holds(std::size_t n, const Fn2& r) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Tri t{x, y, z};
        if (on23(r, on12(r, on23(r, t))) != on12(r, on23(r, on12(r, t)))) return false;
      }
  return true;
}

/// T1, T2, T3 by direct evaluation.
inline bool twist_holds(std::size_t n, const Fn2& r, const Fn2& F, const Fn3& Phi,
                        const Fn3& Psi) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Tri t{x, y, z};
        auto ap = [](const Fn3& f, Tri u) { return f(u[0], u[1], u[2]); };
        if (on12(F, ap(Psi, t)) != on23(F, ap(Phi, t))) return false;
        if (ap(Phi, on23(r, t)) != on23(r, ap(Phi, t))) return false;
        if (ap(Psi, on12(r, t)) != on12(r, ap(Psi, t))) return false;
      }
  return true;
}

inline bool is_group(std::size_t n, const std::vector<Elem>& mul, Elem e) {
  auto m = [&](Elem a, Elem b) { return mul[a * n + b]; };
  for (Elem a = 0; a < n; ++a) {
    if (m(e, a) != a || m(a, e) != a) return false;
    bool has_inverse = false;
    for (Elem b = 0; b < n; ++b) has_inverse |= m(a, b) == e;
    if (!has_inverse) return false;
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) return false;
  }
  return true;
}

/// Every bijection phi with phi(ab) = phi(a)phi(b), by trying all n!
/// permutations.
inline std::vector<std::vector<Elem>> isomorphisms(const skewtwist::FiniteGroup& g,
                                                   const skewtwist::FiniteGroup& h) {
  std::vector<std::vector<Elem>> out;
  const std::size_t n = g.order();
  if (h.order() != n) return out;
  std::vector<Elem> phi(n);
  std::iota(phi.begin(), phi.end(), Elem{0});
  do {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b) ok = phi[g.mul(a, b)] == h.mul(phi[a], phi[b]);
    if (ok) out.push_back(phi);
  } while (std::next_permutation(phi.begin(), phi.end()));
  return out;
}

/// The four braiding-operator axioms by direct evaluation.
inline bool braiding_axioms_hold(const skewtwist::FiniteGroup& g, const Fn2& r) {
  const std::size_t n = g.order();
  const Elem e = g.identity();
  auto m = [&](Elem a, Elem b) { return g.mul(a, b); };
  for (Elem x = 0; x < n; ++x)
    if (r(e, x) != std::pair{x, e} || r(x, e) != std::pair{e, x}) return false;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      auto [u, v] = r(x, y);
      if (m(u, v) != m(x, y)) return false;
      for (Elem z = 0; z < n; ++z) {
        // r m12 = m23 r12 r23
        Tri s = on12(r, on23(r, Tri{x, y, z}));
        if (r(m(x, y), z) != std::pair{s[0], m(s[1], s[2])}) return false;
        // r m23 = m12 r23 r12
        Tri w = on23(r, on12(r, Tri{x, y, z}));
        if (r(x, m(y, z)) != std::pair{m(w[0], w[1]), w[2]}) return false;
      }
    }
  return true;
}

/// x * y = x . sigma_x^-1(y) as a table, or empty when some sigma_x is not
/// injective.
inline std::vector<Elem> star_table(const skewtwist::FiniteGroup& g, const Fn2& r) {
  const std::size_t n = g.order();
  std::vector<Elem> out(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    std::vector<int> pre(n, -1);
    for (Elem y = 0; y < n; ++y) {
      Elem s = r(x, y).first;
      if (pre[s] != -1) return {};
      pre[s] = static_cast<int>(y);
    }
    for (Elem y = 0; y < n; ++y) out[x * n + y] = g.mul(x, static_cast<Elem>(pre[y]));
  }
  return out;
}

/// Order of r as a permutation of X^2, by repeated application.
inline std::uint64_t order_by_iteration(std::size_t n, const Fn2& r) {
  std::uint64_t k = 1;
  std::vector<std::pair<Elem, Elem>> cur;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) cur.push_back(r(x, y));
  for (;;) {
    bool identity = true;
    for (std::size_t i = 0; i < cur.size() && identity; ++i)
      identity = cur[i] == std::pair{static_cast<Elem>(i / n), static_cast<Elem>(i % n)};
    if (identity) return k;
    for (auto& p : cur) p = r(p.first, p.second);
    ++k;
  }
}

}  // namespace oracle
