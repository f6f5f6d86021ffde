#include "skewtwist/kernels.hpp"

#include <algorithm>
#include <numeric>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace skewtwist::kernels {

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

using IndexPerm = std::vector<std::size_t>;

// r as a permutation of triple indices, lifted onto positions (1,2) or (2,3).
IndexPerm lifted_index_perm(const PairMap& f, bool on_23) {
  const std::size_t n = f.universe();
  IndexPerm out(n * n * n);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Triple t = triple_at(n, i);
    if (on_23) {
      Pair p = f(t.second, t.third);
      out[i] = triple_index(n, t.first, p.first, p.second);
    } else {
      Pair p = f(t.first, t.second);
      out[i] = triple_index(n, p.first, p.second, t.third);
    }
  }
  return out;
}

bool braid_holds_at(std::span<const Pair> r, std::size_t n, std::size_t index) {
  Triple t = triple_at(n, index);
  auto at = [&](Elem a, Elem b) { return r[pair_index(n, a, b)]; };
  // r23 r12 r23
  Pair p = at(t.second, t.third);
  Pair q = at(t.first, p.first);
  Pair s = at(q.second, p.second);
  Triple lhs{q.first, s.first, s.second};
  // r12 r23 r12
  Pair u = at(t.first, t.second);
  Pair v = at(u.second, t.third);
  Pair w = at(u.first, v.first);
  Triple rhs{w.first, w.second, v.second};
  return lhs == rhs;
}

bool braid_holds(std::span<const Pair> r, std::size_t n) {
  const std::size_t cube = n * n * n;
  for (std::size_t i = 0; i < cube; ++i)
    if (!braid_holds_at(r, n, i)) return false;
  return true;
}

void require_solution_size(std::size_t n) {
  if (n > 3)
    throw Error(ErrorKind::TooLarge,
                "solution search is limited to n <= 3, got n = " + std::to_string(n));
}

void require_twist_size(std::size_t n) {
  if (n > 2)
    throw Error(ErrorKind::TooLarge,
                "brute-force twist search is limited to n <= 2, got n = " + std::to_string(n));
}

// All solutions whose table starts with pair index `head` (lexicographic).
std::vector<PairMap> solutions_with_head(std::size_t n, std::size_t head) {
  const std::size_t m = n * n;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::rotate(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(head),
              perm.begin() + static_cast<std::ptrdiff_t>(head) + 1);
  std::vector<PairMap> found;
  std::vector<Pair> table(m);
  do {
    for (std::size_t i = 0; i < m; ++i) table[i] = pair_at(n, perm[i]);
    if (braid_holds(table, n)) found.emplace_back(n, table);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return found;
}

struct TwistSearchContext {
  std::size_t n;
  IndexPerm r12;
  IndexPerm r23;
  std::vector<IndexPerm> pair_perms;  // every bijection of X^2, lexicographic
  std::vector<IndexPerm> phis;        // every Phi commuting with r23 (T2)
};

TwistSearchContext make_twist_context(const PairMap& r) {
  const std::size_t n = r.universe();
  TwistSearchContext ctx{n, lifted_index_perm(r, false), lifted_index_perm(r, true), {}, {}};
  IndexPerm perm(n * n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do ctx.pair_perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  IndexPerm phi(n * n * n);
  std::iota(phi.begin(), phi.end(), std::size_t{0});
  do {
    bool commutes = true;
    for (std::size_t i = 0; i < phi.size() && commutes; ++i)
      commutes = phi[ctx.r23[i]] == ctx.r23[phi[i]];
    if (commutes) ctx.phis.push_back(phi);
  } while (std::next_permutation(phi.begin(), phi.end()));
  return ctx;
}

std::vector<TwistCandidate> twists_for_f(const TwistSearchContext& ctx, const IndexPerm& f) {
  const std::size_t n = ctx.n;
  std::vector<Pair> f_table(n * n);
  for (std::size_t i = 0; i < f.size(); ++i) f_table[i] = pair_at(n, f[i]);
  PairMap F(n, f_table);
  IndexPerm f12 = lifted_index_perm(F, false);
  IndexPerm f23 = lifted_index_perm(F, true);
  IndexPerm f12_inv(f12.size());
  for (std::size_t i = 0; i < f12.size(); ++i) f12_inv[f12[i]] = i;

  std::vector<TwistCandidate> found;
  IndexPerm psi(f12.size());
  for (const IndexPerm& phi : ctx.phis) {
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = f12_inv[f23[phi[i]]];
    bool commutes = true;
    for (std::size_t i = 0; i < psi.size() && commutes; ++i)
      commutes = psi[ctx.r12[i]] == ctx.r12[psi[i]];
    if (!commutes) continue;
    std::vector<Triple> phi_table(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) phi_table[i] = triple_at(n, phi[i]);
    found.push_back({F, TripleMap(n, std::move(phi_table))});
  }
  return found;
}

template <class T>
std::vector<T> concat(std::vector<std::vector<T>>& blocks) {
  std::vector<T> out;
  for (auto& block : blocks)
    for (auto& item : block) out.push_back(std::move(item));
  return out;
}

}  // namespace

namespace serial {

std::optional<std::size_t> braid_violation(const PairMap& r) {
  const std::size_t n = r.universe();
  return find_first(n * n * n, [&](std::size_t i) { return !braid_holds_at(r.table(), n, i); });
}

std::vector<PairMap> enumerate_solutions(std::size_t n) {
  require_solution_size(n);
  std::vector<PairMap> out;
  for (std::size_t head = 0; head < n * n; ++head) {
    auto block = solutions_with_head(n, head);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<TwistCandidate> brute_force_twists(const PairMap& r) {
  require_twist_size(r.universe());
  TwistSearchContext ctx = make_twist_context(r);
  std::vector<TwistCandidate> out;
  for (const IndexPerm& f : ctx.pair_perms) {
    auto block = twists_for_f(ctx, f);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::optional<std::size_t> braid_violation(const PairMap& r) {
  const std::size_t n = r.universe();
  return find_first(n * n * n, [&](std::size_t i) { return !braid_holds_at(r.table(), n, i); });
}

std::vector<PairMap> enumerate_solutions(std::size_t n) {
  require_solution_size(n);
  const auto heads = static_cast<std::ptrdiff_t>(n * n);
  std::vector<std::vector<PairMap>> blocks(n * n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t head = 0; head < heads; ++head)
    blocks[static_cast<std::size_t>(head)] = solutions_with_head(n, static_cast<std::size_t>(head));
  return concat(blocks);
}

std::vector<TwistCandidate> brute_force_twists(const PairMap& r) {
  require_twist_size(r.universe());
  TwistSearchContext ctx = make_twist_context(r);
  const auto count = static_cast<std::ptrdiff_t>(ctx.pair_perms.size());
  std::vector<std::vector<TwistCandidate>> blocks(ctx.pair_perms.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    blocks[static_cast<std::size_t>(i)] = twists_for_f(ctx, ctx.pair_perms[static_cast<std::size_t>(i)]);
  return concat(blocks);
}

}  // namespace parallel

}  // namespace skewtwist::kernels
