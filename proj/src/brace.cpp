#include "skewtwist/brace.hpp"

#include "skewtwist/kernels.hpp"

namespace skewtwist {

namespace {

std::optional<Triple> first_bad_triple(std::size_t n, auto&& bad) {
  auto index = kernels::parallel::find_first(n * n * n,
                                             [&](std::size_t i) { return bad(triple_at(n, i)); });
  if (!index) return std::nullopt;
  return triple_at(n, *index);
}

std::optional<Pair> first_bad_pair(std::size_t n, auto&& bad) {
  auto index =
      kernels::parallel::find_first(n * n, [&](std::size_t i) { return bad(pair_at(n, i)); });
  if (!index) return std::nullopt;
  return pair_at(n, *index);
}

std::vector<Elem> witness(Triple t) { return {t.first, t.second, t.third}; }
std::vector<Elem> witness(Pair p) { return {p.first, p.second}; }

void require_size(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual)
    throw Error(ErrorKind::SizeMismatch, std::string(what) + ": expected size " +
                                             std::to_string(expected) + ", got " +
                                             std::to_string(actual));
}

// x * y = x . sigma_x^-1(y); empty when some sigma_x is not a bijection.
std::optional<std::vector<Elem>> star_table(const FiniteGroup& group, const PairMap& r) {
  const std::size_t n = group.order();
  std::vector<Elem> sigma_inv(n * n, static_cast<Elem>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem image = r(x, y).first;
      if (sigma_inv[x * n + image] != n) return std::nullopt;
      sigma_inv[x * n + image] = y;
    }
  std::vector<Elem> star(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) star[x * n + y] = group.mul(x, sigma_inv[x * n + y]);
  return star;
}

}  // namespace

Report check_braiding_axioms(const FiniteGroup& group, const PairMap& r) {
  const std::size_t n = group.order();
  require_size(n, r.universe(), "check_braiding_axioms");
  const Elem e = group.identity();
  auto m = [&](Elem a, Elem b) { return group.mul(a, b); };

  for (Elem g = 0; g < n; ++g)
    if (r(e, g) != Pair{g, e} || r(g, e) != Pair{e, g}) return Report::fail("brd1", {g});

  // r m12 = m23 r12 r23
  if (auto bad = first_bad_triple(n, [&](Triple t) {
        Pair lhs = r(m(t.first, t.second), t.third);
        Pair p = r(t.second, t.third);
        Pair q = r(t.first, p.first);
        return lhs != Pair{q.first, m(q.second, p.second)};
      }))
    return Report::fail("brdOpr1", witness(*bad));

  // r m23 = m12 r23 r12
  if (auto bad = first_bad_triple(n, [&](Triple t) {
        Pair lhs = r(t.first, m(t.second, t.third));
        Pair p = r(t.first, t.second);
        Pair q = r(p.second, t.third);
        return lhs != Pair{m(p.first, q.first), q.second};
      }))
    return Report::fail("brdOpr2", witness(*bad));

  if (auto bad = first_bad_pair(n, [&](Pair p) {
        Pair q = r(p);
        return m(q.first, q.second) != m(p.first, p.second);
      }))
    return Report::fail("brdcomm", witness(*bad));

  if (!r.bijective()) return Report::fail("bijective", {});
  if (auto bad = kernels::parallel::braid_violation(r))
    return Report::fail("braid", witness(triple_at(n, *bad)));

  for (Elem x = 0; x < n; ++x) {
    std::vector<bool> left(n, false), right(n, false);
    for (Elem y = 0; y < n; ++y) {
      Elem s = r(x, y).first;
      Elem g = r(y, x).second;
      if (left[s] || right[g]) return Report::fail("nondegenerate", {x});
      left[s] = right[g] = true;
    }
  }

  auto star = star_table(group, r);
  if (Report report = check_group_axioms(n, *star, e); !report)
    return Report::fail("star-" + report.violation->axiom, report.violation->witness);
  return Report::pass();
}

BraidedGroup check_braided_group(const FiniteGroup& group, const PairMap& r) {
  if (Report report = check_braiding_axioms(group, r); !report)
    throw Error(ErrorKind::AxiomFails, "not a braiding operator", *report.violation);
  BraidedGroup b;
  b.group_ = group;
  b.solution_ = check_solution(group.order(), r);
  b.star_ = FiniteGroup(group.order(), *star_table(group, r), group.identity());
  return b;
}

BraidedGroup trivial_brace(const FiniteGroup& group) {
  return check_braided_group(group, PairMap::from_function(group.order(), [&](Elem x, Elem y) {
                               return Pair{y, group.mul(group.mul(group.inv(y), x), y)};
                             }));
}

BraidedGroup braiding_from_brace(const FiniteGroup& dot, const FiniteGroup& star) {
  if (dot.order() != star.order())
    throw Error(ErrorKind::NotABrace, "the two operations live on sets of different size");
  if (dot.identity() != star.identity())
    throw Error(ErrorKind::NotABrace, "the two operations have different identities");
  const std::size_t n = dot.order();
  std::vector<Elem> sigma(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      // sigma_x^-1(y) = x^-1 . (x * y)
      Elem preimage = dot.mul(dot.inv(x), star.mul(x, y));
      sigma[x * n + preimage] = y;
    }
  PairMap r = PairMap::from_function(n, [&](Elem x, Elem y) {
    Elem s = sigma[x * n + y];
    return Pair{s, dot.mul(dot.mul(dot.inv(s), x), y)};
  });
  if (Report report = check_braiding_axioms(dot, r); !report)
    throw Error(ErrorKind::NotABrace, "operations do not form a skew brace", *report.violation);
  BraidedGroup b = check_braided_group(dot, r);
  if (!(b.star() == star))
    throw Error(ErrorKind::NotABrace, "recovered additive group differs from the given one");
  return b;
}

bool are_isomorphic_braces(const BraidedGroup& a, const BraidedGroup& b) {
  bool found = false;
  for_each_isomorphism(a.group(), b.group(), std::nullopt, [&](const Permutation& phi) {
    bool preserves = true;
    for (Elem x = 0; x < a.order() && preserves; ++x)
      for (Elem y = 0; y < a.order() && preserves; ++y) {
        Pair p = a.r()(x, y);
        preserves = b.r()(phi(x), phi(y)) == Pair{phi(p.first), phi(p.second)};
      }
    found = preserves;
    return !found;
  });
  return found;
}

Report verify_brace_twist(const BraidedGroup& b, const TwistTriple& t) {
  if (Report report = verify_twist(b.solution(), t); !report) return report;
  const std::size_t n = b.order();
  const Elem e = b.identity();
  auto m = [&](Elem x, Elem y) { return b.group().mul(x, y); };

  if (auto bad = first_bad_pair(n, [&](Pair p) {
        return t.Psi(p.first, p.second, e) != Triple{p.first, p.second, e} ||
               t.Phi(e, p.first, p.second) != Triple{e, p.first, p.second};
      }))
    return Report::fail("G1", witness(*bad));

  for (Elem x = 0; x < n; ++x)
    if (t.F(e, x) != Pair{e, x} || t.F(x, e) != Pair{x, e}) return Report::fail("G2", {x});

  if (auto bad = first_bad_triple(n, [&](Triple x) {
        Triple p = t.Phi(x);
        return Pair{p.first, m(p.second, p.third)} != t.F(x.first, m(x.second, x.third));
      }))
    return Report::fail("G3", witness(*bad));

  if (auto bad = first_bad_triple(n, [&](Triple x) {
        Triple p = t.Psi(x);
        return Pair{m(p.first, p.second), p.third} != t.F(m(x.first, x.second), x.third);
      }))
    return Report::fail("G4", witness(*bad));

  // Consequences that every brace twist must satisfy.
  if (auto bad = first_bad_pair(n, [&](Pair p) {
        Pair f = t.F(p);
        return t.Phi(p.first, p.second, e) != Triple{f.first, f.second, e} ||
               t.Phi(p.first, e, p.second) != Triple{f.first, e, f.second};
      }))
    return Report::fail("L1", witness(*bad));

  if (auto bad = first_bad_pair(n, [&](Pair p) {
        Pair f = t.F(p);
        return t.Psi(e, p.first, p.second) != Triple{e, f.first, f.second} ||
               t.Psi(p.first, e, p.second) != Triple{f.first, e, f.second};
      }))
    return Report::fail("L2", witness(*bad));

  return Report::pass();
}

BraidedGroup apply_brace_twist(const BraidedGroup& b, const TwistTriple& t) {
  if (Report report = verify_brace_twist(b, t); !report)
    throw Error(ErrorKind::InvalidTwist, "not a twist on this brace", *report.violation);
  const std::size_t n = b.order();
  const PairMap f_inv = invert(t.F);
  std::vector<Elem> mul(n * n);
  for (std::size_t i = 0; i < mul.size(); ++i) {
    Pair p = f_inv.table()[i];
    mul[i] = b.group().mul(p.first, p.second);
  }
  FiniteGroup twisted(n, std::move(mul), b.identity());
  return check_braided_group(twisted, compose(t.F, compose(b.r(), f_inv)));
}

TwistTriple theta_canonical_twist(const BraidedGroup& b) { return formulas::doikou(b.r()); }

TwistTriple phi_reconstruct(const BraidedGroup& b, const TripleMap& phi) {
  const std::size_t n = b.order();
  require_size(n, phi.universe(), "phi_reconstruct");
  if (!phi.bijective()) throw Error(ErrorKind::NotBijective, "Phi is not a bijection");
  const Elem e = b.identity();
  auto m = [&](Elem x, Elem y) { return b.group().mul(x, y); };

  std::vector<Pair> bar(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Triple p = phi(x, y, e);
      if (p.third != e)
        throw Error(ErrorKind::ShapeMismatch, "Phi(x,y,e) must end in e",
                    Violation{"shape", {x, y}});
      bar[pair_index(n, x, y)] = {p.first, p.second};
    }
  const PairMap phibar(n, std::move(bar));

  auto fail = [](const char* axiom, std::vector<Elem> w) {
    throw Error(ErrorKind::AxiomFails, "single-map twist conditions fail",
                Violation{axiom, std::move(w)});
  };

  if (auto bad = first_bad_pair(n, [&](Pair p) {
        return phi(e, p.first, p.second) != Triple{e, p.first, p.second};
      }))
    fail("Z1", witness(*bad));
  for (Elem x = 0; x < n; ++x)
    if (phibar(x, e) != Pair{x, e}) fail("Z1", {x});

  if (auto bad = first_bad_triple(n, [&](Triple x) {
        Triple p = phi(x);
        return Pair{p.first, m(p.second, p.third)} != phibar(x.first, m(x.second, x.third));
      }))
    fail("Z2", witness(*bad));

  const TripleMap psi =
      compose(invert(lift_12(phibar)), compose(lift_23(phibar), phi));

  if (auto bad = first_bad_triple(n, [&](Triple x) {
        Triple p = psi(x);
        return Pair{m(p.first, p.second), p.third} != phibar(m(x.first, x.second), x.third);
      }))
    fail("Z3", witness(*bad));

  const PairMap& r = b.r();
  if (auto bad = first_bad_triple(n, [&](Triple x) {
        Triple p = psi(x);
        Pair q = r(p.first, p.second);
        Pair s = r(x.first, x.second);
        return Triple{q.first, q.second, p.third} != psi(s.first, s.second, x.third);
      }))
    fail("Z4", witness(*bad));

  if (auto bad = first_bad_triple(n, [&](Triple x) {
        Pair s = r(x.second, x.third);
        Triple p = phi(x);
        Pair q = r(p.second, p.third);
        return phi(x.first, s.first, s.second) != Triple{p.first, q.first, q.second};
      }))
    fail("T2", witness(*bad));

  TwistTriple t(phibar, phi, psi);
  if (Report report = verify_brace_twist(b, t); !report)
    throw Error(ErrorKind::AxiomFails, "reconstructed triple is not a brace twist",
                *report.violation);
  return t;
}

TwistTriple compose_brace_twists(const TwistTriple& outer, const TwistTriple& inner,
                                 const BraidedGroup& b) {
  BraidedGroup middle = apply_brace_twist(b, inner);
  if (Report report = verify_brace_twist(middle, outer); !report)
    throw Error(ErrorKind::InvalidTwist, "outer twist is not a twist on the inner result",
                *report.violation);
  TwistTriple composite = formulas::compose(outer, inner);
  if (Report report = verify_brace_twist(b, composite); !report)
    throw Error(ErrorKind::InvalidTwist, "composite left the brace groupoid", *report.violation);
  return composite;
}

TwistTriple invert_brace_twist(const TwistTriple& t, const BraidedGroup& b) {
  BraidedGroup target = apply_brace_twist(b, t);
  TwistTriple inverse = formulas::invert(t);
  if (Report report = verify_brace_twist(target, inverse); !report)
    throw Error(ErrorKind::InvalidTwist, "inverse left the brace groupoid", *report.violation);
  return inverse;
}

}  // namespace skewtwist
