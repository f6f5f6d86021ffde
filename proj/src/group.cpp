#include "skewtwist/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "skewtwist/kernels.hpp"

namespace skewtwist {

namespace {

constexpr std::size_t kEnumerationLimit = 8;

std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> orders(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    std::size_t k = 1;
    for (Elem x = a; x != g.identity(); x = g.mul(x, a)) ++k;
    orders[a] = k;
  }
  return orders;
}

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, std::span<const Elem> phi) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
  return true;
}

}  // namespace

Report check_group_axioms(std::size_t n, std::span<const Elem> mul, Elem e) {
  if (mul.size() != n * n) return Report::fail("table size", {});
  if (n == 0) return Report::fail("identity", {});
  for (Elem v : mul)
    if (v >= n) return Report::fail("closure", {v});
  if (e >= n) return Report::fail("identity", {e});
  auto m = [&](Elem a, Elem b) { return mul[a * n + b]; };
  if (auto bad = kernels::parallel::find_first(n * n * n, [&](std::size_t i) {
        Triple t = triple_at(n, i);
        return m(m(t.first, t.second), t.third) != m(t.first, m(t.second, t.third));
      })) {
    Triple t = triple_at(n, *bad);
    return Report::fail("associativity", {t.first, t.second, t.third});
  }
  for (Elem a = 0; a < n; ++a)
    if (m(e, a) != a || m(a, e) != a) return Report::fail("identity", {a});
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) found = m(a, b) == e && m(b, a) == e;
    if (!found) return Report::fail("inverses", {a});
  }
  return Report::pass();
}

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Elem> mul, Elem e)
    : n_(n), e_(e), mul_(std::move(mul)) {
  if (mul_.size() != n * n)
    throw Error(ErrorKind::SizeMismatch, "group table needs n^2 = " + std::to_string(n * n) +
                                             " entries, got " + std::to_string(mul_.size()));
  if (Report report = check_group_axioms(n_, mul_, e_); !report)
    throw Error(ErrorKind::AxiomFails, "not a group", *report.violation);
  inv_.resize(n_);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (this->mul(a, b) == e_) inv_[a] = b;
}

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Elem> mul) {
  if (mul.size() != n * n) throw Error(ErrorKind::SizeMismatch, "group table has wrong size");
  for (Elem e = 0; e < n; ++e) {
    bool is_identity = true;
    for (Elem a = 0; a < n && is_identity; ++a)
      is_identity = mul[e * n + a] == a && mul[a * n + e] == a;
    if (is_identity) return FiniteGroup(n, std::move(mul), e);
  }
  throw Error(ErrorKind::AxiomFails, "not a group", Violation{"identity", {}});
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<Elem> mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup(n, std::move(mul), 0);
}

FiniteGroup FiniteGroup::klein() {
  std::vector<Elem> mul(16);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) mul[a * 4 + b] = a ^ b;
  return FiniteGroup(4, std::move(mul), 0);
}

FiniteGroup FiniteGroup::symmetric(std::size_t k) {
  std::vector<std::vector<Elem>> perms;
  std::vector<Elem> p(k);
  std::iota(p.begin(), p.end(), Elem{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<Elem> mul(n * n);
  std::vector<Elem> composed(k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) composed[i] = perms[a][perms[b][i]];
      auto it = std::lower_bound(perms.begin(), perms.end(), composed);
      mul[a * n + b] = static_cast<Elem>(it - perms.begin());
    }
  return FiniteGroup(n, std::move(mul), 0);
}

FiniteGroup FiniteGroup::dihedral(std::size_t k) {
  // r^i s^j is encoded as i + k*j.
  const std::size_t n = 2 * k;
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t i = a % k, sa = a / k, j = b % k, sb = b / k;
      std::size_t rot = sa ? (i + k - j) % k : (i + j) % k;
      mul[a * n + b] = static_cast<Elem>(rot + k * ((sa + sb) % 2));
    }
  return FiniteGroup(n, std::move(mul), 0);
}

FiniteGroup FiniteGroup::quaternion() {
  // 2u + s encodes sign s (0 = +, 1 = -) times unit u in {1, i, j, k}.
  static constexpr std::array<std::array<int, 4>, 4> unit_product = {{
      {0, 1, 2, 3},
      {1, 4, 3, 6},
      {2, 7, 4, 1},
      {3, 2, 5, 4},
  }};
  // Entries: 0..3 = +unit, 4 = -1, 5 = -i, 6 = -j, 7 = -k.
  std::vector<Elem> mul(64);
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) {
      int product = unit_product[a / 2][b / 2];
      unsigned sign = (a % 2) ^ (b % 2);
      unsigned unit = static_cast<unsigned>(product % 4);
      if (product >= 4) sign ^= 1u;
      mul[a * 8 + b] = static_cast<Elem>(2 * unit + sign);
    }
  return FiniteGroup(8, std::move(mul), 0);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t nb = b.order();
  const std::size_t n = a.order() * nb;
  std::vector<Elem> mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem first = a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      Elem second = b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      mul[x * n + y] = static_cast<Elem>(first * nb + second);
    }
  return FiniteGroup(n, std::move(mul), static_cast<Elem>(a.identity() * nb + b.identity()));
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace detail {

std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<bool> in_subgroup(g.order(), false);
  in_subgroup[g.identity()] = true;
  std::vector<Elem> members{g.identity()};
  for (Elem candidate = 0; candidate < g.order(); ++candidate) {
    if (in_subgroup[candidate]) continue;
    gens.push_back(candidate);
    // Close under right multiplication by all generators.
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Elem s : gens) {
        Elem next = g.mul(members[i], s);
        if (!in_subgroup[next]) {
          in_subgroup[next] = true;
          members.push_back(next);
        }
      }
  }
  return gens;
}

std::vector<Permutation> isomorphisms_by_enumeration(const FiniteGroup& g, const FiniteGroup& h,
                                                     std::optional<std::pair<Elem, Elem>> fixed) {
  std::vector<Permutation> out;
  if (g.order() != h.order()) return out;
  std::vector<Elem> phi(g.order());
  std::iota(phi.begin(), phi.end(), Elem{0});
  do {
    if (phi[g.identity()] != h.identity()) continue;
    if (fixed && phi[fixed->first] != fixed->second) continue;
    if (is_homomorphism(g, h, phi)) out.emplace_back(phi);
  } while (std::next_permutation(phi.begin(), phi.end()));
  return out;
}

std::vector<Permutation> isomorphisms_by_generators(const FiniteGroup& g, const FiniteGroup& h,
                                                    std::optional<std::pair<Elem, Elem>> fixed) {
  std::vector<Permutation> out;
  const std::size_t n = g.order();
  if (n != h.order()) return out;
  const std::vector<Elem> gens = greedy_generators(g);
  const auto g_orders = element_orders(g);
  const auto h_orders = element_orders(h);
  constexpr Elem kUnset = static_cast<Elem>(-1);

  std::vector<Elem> images(gens.size(), kUnset);

  // Extends the partial assignment of generator images 0..k-1 along words in
  // those generators; false on a conflict.
  auto extend = [&](std::size_t k, std::vector<Elem>& phi) {
    std::fill(phi.begin(), phi.end(), kUnset);
    phi[g.identity()] = h.identity();
    std::vector<Elem> frontier{g.identity()};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      Elem x = frontier[i];
      for (std::size_t s = 0; s < k; ++s) {
        Elem next = g.mul(x, gens[s]);
        Elem image = h.mul(phi[x], images[s]);
        if (phi[next] == kUnset) {
          phi[next] = image;
          frontier.push_back(next);
        } else if (phi[next] != image) {
          return false;
        }
      }
    }
    // Injective on the generated subgroup.
    std::vector<bool> used(n, false);
    for (Elem v : phi) {
      if (v == kUnset) continue;
      if (used[v]) return false;
      used[v] = true;
    }
    return true;
  };

  std::vector<Elem> phi(n);
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      if (!extend(k, phi)) return;
      if (fixed && phi[fixed->first] != fixed->second) return;
      if (is_homomorphism(g, h, phi)) out.emplace_back(phi);
      return;
    }
    for (Elem candidate = 0; candidate < n; ++candidate) {
      if (h_orders[candidate] != g_orders[gens[k]]) continue;
      images[k] = candidate;
      if (extend(k + 1, phi)) self(self, k + 1);
    }
    images[k] = kUnset;
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                          std::optional<std::pair<Elem, Elem>> fixed,
                          const std::function<bool(const Permutation&)>& visit) {
  if (g.order() != h.order()) return;
  auto g_orders = element_orders(g);
  auto h_orders = element_orders(h);
  std::sort(g_orders.begin(), g_orders.end());
  std::sort(h_orders.begin(), h_orders.end());
  if (g_orders != h_orders) return;

  const auto all = g.order() <= kEnumerationLimit
                       ? detail::isomorphisms_by_enumeration(g, h, fixed)
                       : detail::isomorphisms_by_generators(g, h, fixed);
  for (const Permutation& phi : all)
    if (!visit(phi)) return;
}

std::vector<Permutation> enumerate_isomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                                std::optional<std::pair<Elem, Elem>> fixed) {
  std::vector<Permutation> out;
  for_each_isomorphism(g, h, fixed, [&](const Permutation& phi) {
    out.push_back(phi);
    return true;
  });
  return out;
}

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  bool found = false;
  for_each_isomorphism(g, h, std::nullopt, [&](const Permutation&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace skewtwist
