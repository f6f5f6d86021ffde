#include "skewtwist/matched_pair.hpp"

#include <atomic>
#include <limits>

namespace skewtwist {

namespace {

constexpr Elem kUnset = std::numeric_limits<Elem>::max();

// Reads Theta from two flat arrays; kUnset marks entries not yet chosen.
struct ThetaView {
  const MatchedPair& p;
  const Elem* t1;
  const Elem* t2;

  std::size_t n() const { return p.minus().order(); }
  Elem th1(Elem a, Elem b) const { return t1[a * n() + b]; }
  Elem th2(Elem a, Elem b) const { return t2[a * n() + b]; }

  // 0 when the three conditions hold at (a,b,c) or cannot be decided yet,
  // otherwise the index of the first failing one.
  int failing_condition(Elem a, Elem b, Elem c) const {
    const FiniteGroup& plus = p.plus();
    const FiniteGroup& minus = p.minus();
    const Elem ab = minus.mul(a, b);
    const Elem bc = minus.mul(b, c);

    const Elem g = th1(ab, c);
    const Elem h = th2(a, bc);
    Elem ga = 0, gb = 0, hb = 0, hc = 0;
    if (g != kUnset) {
      ga = p.left(g, a);
      gb = p.left(p.right(g, a), b);
    }
    if (h != kUnset) {
      hb = p.left(h, b);
      hc = p.left(p.right(h, b), c);
    }

    if (g != kUnset) {
      const Elem lhs = th1(ga, gb);
      const Elem rhs = th1(a, bc);
      if (lhs != kUnset && rhs != kUnset && plus.mul(lhs, g) != rhs) return 1;
    }
    if (g != kUnset && h != kUnset) {
      const Elem lhs = th2(ga, gb);
      const Elem rhs = th1(hb, hc);
      if (lhs != kUnset && rhs != kUnset &&
          plus.mul(lhs, p.right(g, a)) != plus.mul(rhs, h))
        return 2;
    }
    if (h != kUnset) {
      const Elem lhs = th2(ab, c);
      const Elem rhs = th2(hb, hc);
      if (lhs != kUnset && rhs != kUnset && lhs != plus.mul(rhs, p.right(h, b))) return 3;
    }
    return 0;
  }
};

class ThetaSearch {
 public:
  ThetaSearch(const MatchedPair& p, std::uint64_t budget) : p_(p), budget_(budget) {
    const std::size_t n = p.minus().order();
    const Elem e = p.minus().identity();
    base1_.assign(n * n, kUnset);
    base2_.assign(n * n, kUnset);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const std::size_t i = pair_index(n, a, b);
        if (b == e)
          base1_[i] = p.plus().identity();
        else
          free_.push_back({i, 1});
        if (a == e)
          base2_[i] = p.plus().identity();
        else
          free_.push_back({i, 2});
      }
  }

  std::size_t branches() const { return free_.empty() ? 1 : p_.plus().order(); }

  /// Results of the subtree where the first free entry takes `value`.
  std::vector<ThetaMap> branch(Elem value) {
    std::vector<ThetaMap> out;
    std::vector<Elem> t1 = base1_, t2 = base2_;
    if (free_.empty()) {
      leaf(t1, t2, out);
      return out;
    }
    descend(0, value, t1, t2, out);
    return out;
  }

  bool exhausted() const { return exhausted_.load(); }

 private:
  struct Slot {
    std::size_t index;
    int component;
  };

  void descend(std::size_t depth, Elem value, std::vector<Elem>& t1, std::vector<Elem>& t2,
               std::vector<ThetaMap>& out) {
    if (exhausted_.load(std::memory_order_relaxed)) return;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      exhausted_ = true;
      return;
    }
    const Slot slot = free_[depth];
    std::vector<Elem>& table = slot.component == 1 ? t1 : t2;
    table[slot.index] = value;
    if (consistent(t1, t2)) {
      if (depth + 1 == free_.size())
        leaf(t1, t2, out);
      else
        for (Elem v = 0; v < p_.plus().order(); ++v) descend(depth + 1, v, t1, t2, out);
    }
    table[slot.index] = kUnset;
  }

  bool consistent(const std::vector<Elem>& t1, const std::vector<Elem>& t2) const {
    const ThetaView view{p_, t1.data(), t2.data()};
    const std::size_t n = p_.minus().order();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (view.failing_condition(a, b, c) != 0) return false;
    return true;
  }

  void leaf(const std::vector<Elem>& t1, const std::vector<Elem>& t2,
            std::vector<ThetaMap>& out) const {
    const std::size_t n = p_.minus().order();
    ThetaMap theta{n, std::vector<Pair>(n * n)};
    for (std::size_t i = 0; i < n * n; ++i) theta.table[i] = {t1[i], t2[i]};
    if (check_theta(p_, theta)) out.push_back(std::move(theta));
  }

  const MatchedPair& p_;
  std::uint64_t budget_;
  std::vector<Elem> base1_, base2_;
  std::vector<Slot> free_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

std::vector<ThetaMap> gather(std::vector<std::vector<ThetaMap>>& parts, const ThetaSearch& search,
                             std::uint64_t budget) {
  if (search.exhausted())
    throw Error(ErrorKind::TooLarge,
                "theta search exceeded the budget of " + std::to_string(budget) + " nodes");
  std::vector<ThetaMap> out;
  for (auto& part : parts)
    for (auto& theta : part) out.push_back(std::move(theta));
  return out;
}

}  // namespace

MatchedPair check_matched_pair(const FiniteGroup& plus, const FiniteGroup& minus,
                               std::vector<Elem> left, std::vector<Elem> right) {
  const std::size_t np = plus.order(), nm = minus.order();
  if (left.size() != np * nm || right.size() != np * nm)
    throw Error(ErrorKind::SizeMismatch, "action tables need |G+|*|G-| entries");
  auto fail = [](const char* axiom, std::vector<Elem> w) {
    throw Error(ErrorKind::AxiomFails, "not a matched pair", Violation{axiom, std::move(w)});
  };
  for (std::size_t i = 0; i < left.size(); ++i)
    if (left[i] >= nm || right[i] >= np)
      fail("range", {static_cast<Elem>(i / nm), static_cast<Elem>(i % nm)});

  auto L = [&](Elem g, Elem b) { return left[g * nm + b]; };
  auto R = [&](Elem g, Elem b) { return right[g * nm + b]; };
  const Elem ep = plus.identity(), em = minus.identity();

  for (Elem b = 0; b < nm; ++b)
    if (L(ep, b) != b) fail("left-identity", {b});
  for (Elem g = 0; g < np; ++g)
    for (Elem h = 0; h < np; ++h)
      for (Elem b = 0; b < nm; ++b)
        if (L(plus.mul(g, h), b) != L(g, L(h, b))) fail("left-action", {g, h, b});
  for (Elem g = 0; g < np; ++g)
    if (R(g, em) != g) fail("right-identity", {g});
  for (Elem g = 0; g < np; ++g)
    for (Elem b = 0; b < nm; ++b)
      for (Elem c = 0; c < nm; ++c)
        if (R(g, minus.mul(b, c)) != R(R(g, b), c)) fail("right-action", {g, b, c});
  for (Elem g = 0; g < np; ++g)
    if (L(g, em) != em) fail("left-unit", {g});
  for (Elem b = 0; b < nm; ++b)
    if (R(ep, b) != ep) fail("right-unit", {b});
  for (Elem g = 0; g < np; ++g)
    for (Elem b = 0; b < nm; ++b)
      for (Elem c = 0; c < nm; ++c)
        if (L(g, minus.mul(b, c)) != minus.mul(L(g, b), L(R(g, b), c)))
          fail("left-compat", {g, b, c});
  for (Elem g = 0; g < np; ++g)
    for (Elem h = 0; h < np; ++h)
      for (Elem b = 0; b < nm; ++b)
        if (R(plus.mul(g, h), b) != plus.mul(R(g, L(h, b)), R(h, b)))
          fail("right-compat", {g, h, b});

  MatchedPair p;
  p.plus_ = plus;
  p.minus_ = minus;
  p.left_ = std::move(left);
  p.right_ = std::move(right);
  return p;
}

MatchedPair pair_from_brace(const BraidedGroup& b) {
  const std::size_t n = b.order();
  std::vector<Elem> left(n * n), right(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    Pair image = b.r().table()[i];
    left[i] = image.first;
    right[i] = image.second;
  }
  return check_matched_pair(b.group(), b.group(), std::move(left), std::move(right));
}

ThetaMap ThetaMap::constant_identity(const MatchedPair& p) {
  const std::size_t n = p.minus().order();
  const Elem e = p.plus().identity();
  return {n, std::vector<Pair>(n * n, Pair{e, e})};
}

ThetaMap ThetaMap::canonical(const MatchedPair& p) {
  const std::size_t n = p.minus().order();
  if (p.plus().order() != n)
    throw Error(ErrorKind::SizeMismatch, "canonical theta needs |G+| = |G-|");
  ThetaMap theta{n, std::vector<Pair>(n * n)};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) theta.table[pair_index(n, x, y)] = {p.plus().identity(), x};
  return theta;
}

Report check_theta(const MatchedPair& p, const ThetaMap& theta) {
  const std::size_t n = p.minus().order();
  if (theta.n != n || theta.table.size() != n * n) return Report::fail("size", {});
  std::vector<Elem> t1(n * n), t2(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    t1[i] = theta.table[i].first;
    t2[i] = theta.table[i].second;
    if (t1[i] >= p.plus().order() || t2[i] >= p.plus().order())
      return Report::fail("range", {pair_at(n, i).first, pair_at(n, i).second});
  }
  const Elem e = p.minus().identity();
  for (Elem a = 0; a < n; ++a)
    if (theta.theta2(e, a) != p.plus().identity() || theta.theta1(a, e) != p.plus().identity())
      return Report::fail("unit", {a});

  const ThetaView view{p, t1.data(), t2.data()};
  for (int condition = 1; condition <= 3; ++condition)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          int failed = view.failing_condition(a, b, c);
          if (failed != 0 && failed <= condition)
            return Report::fail("C" + std::to_string(failed), {a, b, c});
        }
  if (!f_theta(p, theta).bijective()) return Report::fail("F-bijective", {});
  return Report::pass();
}

PairMap f_theta(const MatchedPair& p, const ThetaMap& theta) {
  return PairMap::from_function(p.minus().order(), [&](Elem g, Elem h) {
    return Pair{p.left(theta.theta1(g, h), g), p.left(theta.theta2(g, h), h)};
  });
}

TwistTriple triple_from_theta(const MatchedPair& p, const ThetaMap& theta,
                              const BraidedGroup& base) {
  if (Report report = check_theta(p, theta); !report)
    throw Error(ErrorKind::InvalidTheta, "theta fails its conditions", *report.violation);
  if (!(base.group() == p.minus()))
    throw Error(ErrorKind::InvalidTheta, "base brace is not built on G-");
  const std::size_t n = p.minus().order();
  auto m = [&](Elem a, Elem b) { return p.minus().mul(a, b); };

  std::optional<TwistTriple> t;
  try {
    t.emplace(f_theta(p, theta), TripleMap::from_function(n,
                                                          [&](Elem a, Elem b, Elem c) {
                                                            Pair th = theta(a, m(b, c));
                                                            return Triple{
                                                                p.left(th.first, a),
                                                                p.left(th.second, b),
                                                                p.left(p.right(th.second, b), c)};
                                                          }),
              TripleMap::from_function(n, [&](Elem a, Elem b, Elem c) {
                Pair th = theta(m(a, b), c);
                return Triple{p.left(th.first, a), p.left(p.right(th.first, a), b),
                              p.left(th.second, c)};
              }));
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidTheta, std::string("induced maps are not bijective: ") + e.what());
  }
  if (Report report = verify_brace_twist(base, *t); !report)
    throw Error(ErrorKind::InvalidTheta, "induced triple is not a twist on the base",
                *report.violation);
  return *t;
}

std::vector<ThetaMap> enumerate_thetas(const MatchedPair& p, std::uint64_t budget) {
  ThetaSearch search(p, budget);
  const auto count = static_cast<std::ptrdiff_t>(search.branches());
  std::vector<std::vector<ThetaMap>> parts(search.branches());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t v = 0; v < count; ++v) parts[v] = search.branch(static_cast<Elem>(v));
  return gather(parts, search, budget);
}

namespace detail {

std::vector<ThetaMap> enumerate_thetas_serial(const MatchedPair& p, std::uint64_t budget) {
  ThetaSearch search(p, budget);
  std::vector<std::vector<ThetaMap>> parts;
  for (std::size_t v = 0; v < search.branches(); ++v)
    parts.push_back(search.branch(static_cast<Elem>(v)));
  return gather(parts, search, budget);
}

}  // namespace detail

}  // namespace skewtwist
