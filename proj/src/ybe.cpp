#include "skewtwist/ybe.hpp"

#include "skewtwist/kernels.hpp"

namespace skewtwist {

namespace {

void require_size(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual)
    throw Error(ErrorKind::SizeMismatch, std::string(what) + ": expected universe of size " +
                                             std::to_string(expected) + ", got " +
                                             std::to_string(actual));
}

// Index of the first triple where two triple-valued maps disagree.
template <class Lhs, class Rhs>
std::optional<Triple> first_disagreement(std::size_t n, Lhs&& lhs, Rhs&& rhs) {
  auto bad = kernels::parallel::find_first(n * n * n, [&](std::size_t i) {
    Triple t = triple_at(n, i);
    return lhs(t) != rhs(t);
  });
  if (!bad) return std::nullopt;
  return triple_at(n, *bad);
}

std::vector<Elem> as_witness(Triple t) { return {t.first, t.second, t.third}; }

bool is_bijection(std::size_t n, auto&& f) {
  std::vector<bool> seen(n, false);
  for (Elem x = 0; x < n; ++x) {
    Elem y = f(x);
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

}  // namespace

YbeSolution check_solution(std::size_t n, const PairMap& r) {
  require_size(n, r.universe(), "check_solution");
  if (!r.bijective()) throw Error(ErrorKind::NotBijective, "r is not a bijection of X^2");
  if (auto bad = kernels::parallel::braid_violation(r))
    throw Error(ErrorKind::BraidFails, "braid equation fails",
                Violation{"braid", as_witness(triple_at(n, *bad))});

  YbeSolution s;
  s.r_ = r;
  s.involutive_ = compose(r, r) == PairMap::identity(n);
  s.left_nondegenerate_ = true;
  s.right_nondegenerate_ = true;
  for (Elem x = 0; x < n; ++x) {
    s.left_nondegenerate_ =
        s.left_nondegenerate_ && is_bijection(n, [&](Elem y) { return r(x, y).first; });
    s.right_nondegenerate_ =
        s.right_nondegenerate_ && is_bijection(n, [&](Elem y) { return r(y, x).second; });
  }
  return s;
}

YbeSolution lyubashenko_solution(const Permutation& sigma, const Permutation& gamma) {
  if (sigma.size() != gamma.size())
    throw Error(ErrorKind::BadParams, "sigma and gamma act on different sets");
  if (sigma.after(gamma) != gamma.after(sigma))
    throw Error(ErrorKind::BadParams, "sigma and gamma must commute");
  const std::size_t n = sigma.size();
  return check_solution(
      n, PairMap::from_function(n, [&](Elem x, Elem y) { return Pair{sigma(y), gamma(x)}; }));
}

YbeSolution flip_solution(std::size_t n) { return check_solution(n, PairMap::flip(n)); }

// ---------------------------------------------------------------------------
// TwistTriple

TwistTriple::TwistTriple(PairMap f, TripleMap phi, TripleMap psi)
    : F(std::move(f)), Phi(std::move(phi)), Psi(std::move(psi)) {
  require_size(F.universe(), Phi.universe(), "twist Phi");
  require_size(F.universe(), Psi.universe(), "twist Psi");
  if (!F.bijective()) throw Error(ErrorKind::NotBijective, "twist F is not a bijection");
  if (!Phi.bijective()) throw Error(ErrorKind::NotBijective, "twist Phi is not a bijection");
  if (!Psi.bijective()) throw Error(ErrorKind::NotBijective, "twist Psi is not a bijection");
}

TwistTriple TwistTriple::identity(std::size_t n) {
  return {PairMap::identity(n), TripleMap::identity(n), TripleMap::identity(n)};
}

TripleMap TwistTriple::g_map() const { return compose(lift_12(F), Psi); }

Report verify_twist(const YbeSolution& s, const TwistTriple& t) {
  const std::size_t n = s.size();
  require_size(n, t.size(), "verify_twist");
  const PairMap& r = s.r();
  const PairMap& F = t.F;

  if (auto bad = first_disagreement(
          n,
          [&](Triple x) {
            Triple p = t.Psi(x);
            Pair f = F(p.first, p.second);
            return Triple{f.first, f.second, p.third};
          },
          [&](Triple x) {
            Triple p = t.Phi(x);
            Pair f = F(p.second, p.third);
            return Triple{p.first, f.first, f.second};
          }))
    return Report::fail("T1", as_witness(*bad));

  if (auto bad = first_disagreement(
          n,
          [&](Triple x) {
            Pair q = r(x.second, x.third);
            return t.Phi(x.first, q.first, q.second);
          },
          [&](Triple x) {
            Triple p = t.Phi(x);
            Pair q = r(p.second, p.third);
            return Triple{p.first, q.first, q.second};
          }))
    return Report::fail("T2", as_witness(*bad));

  if (auto bad = first_disagreement(
          n,
          [&](Triple x) {
            Pair q = r(x.first, x.second);
            return t.Psi(q.first, q.second, x.third);
          },
          [&](Triple x) {
            Triple p = t.Psi(x);
            Pair q = r(p.first, p.second);
            return Triple{q.first, q.second, p.third};
          }))
    return Report::fail("T3", as_witness(*bad));

  return Report::pass();
}

YbeSolution apply_twist(const YbeSolution& s, const TwistTriple& t) {
  if (Report report = verify_twist(s, t); !report)
    throw Error(ErrorKind::InvalidTwist, "not a twist on this solution", *report.violation);
  return check_solution(s.size(), compose(t.F, compose(s.r(), invert(t.F))));
}

namespace formulas {

TwistTriple compose(const TwistTriple& outer, const TwistTriple& inner) {
  const TripleMap f12 = lift_12(inner.F);
  const TripleMap f23 = lift_23(inner.F);
  return {skewtwist::compose(outer.F, inner.F),
          skewtwist::compose(skewtwist::invert(f23),
                             skewtwist::compose(outer.Phi, skewtwist::compose(f23, inner.Phi))),
          skewtwist::compose(skewtwist::invert(f12),
                             skewtwist::compose(outer.Psi, skewtwist::compose(f12, inner.Psi)))};
}

TwistTriple invert(const TwistTriple& t) {
  const TripleMap f12 = lift_12(t.F);
  const TripleMap f23 = lift_23(t.F);
  return {skewtwist::invert(t.F),
          skewtwist::compose(f23, skewtwist::compose(skewtwist::invert(t.Phi), skewtwist::invert(f23))),
          skewtwist::compose(f12, skewtwist::compose(skewtwist::invert(t.Psi), skewtwist::invert(f12)))};
}

TwistTriple doikou(const PairMap& r) {
  const std::size_t n = r.universe();
  auto sigma = [&](Elem x, Elem y) { return r(x, y).first; };
  auto gamma = [&](Elem y, Elem x) { return r(x, y).second; };
  return {PairMap::from_function(n, [&](Elem x, Elem y) { return Pair{x, sigma(x, y)}; }),
          TripleMap::from_function(n,
                                   [&](Elem x, Elem y, Elem z) {
                                     return Triple{x, sigma(x, y), sigma(gamma(y, x), z)};
                                   }),
          TripleMap::from_function(n, [&](Elem x, Elem y, Elem z) {
            return Triple{x, y, sigma(x, sigma(y, z))};
          })};
}

}  // namespace formulas

TwistTriple compose_twists(const TwistTriple& outer, const TwistTriple& inner,
                           const YbeSolution& s) {
  YbeSolution middle = apply_twist(s, inner);
  if (Report report = verify_twist(middle, outer); !report)
    throw Error(ErrorKind::InvalidTwist, "outer twist is not a twist on the inner result",
                *report.violation);
  return formulas::compose(outer, inner);
}

TwistTriple invert_twist(const TwistTriple& t, const YbeSolution& s) {
  if (Report report = verify_twist(s, t); !report)
    throw Error(ErrorKind::InvalidTwist, "not a twist on this solution", *report.violation);
  return formulas::invert(t);
}

TwistTriple doikou_twist(const YbeSolution& s) {
  if (!s.left_nondegenerate())
    throw Error(ErrorKind::Degenerate, "doikou twist needs every sigma_x to be a bijection");
  return formulas::doikou(s.r());
}

TwistTriple kappa_twist(const YbeSolution& s, const Permutation& kappa) {
  const std::size_t n = s.size();
  require_size(n, kappa.size(), "kappa_twist");
  if (n == 0) return TwistTriple::identity(0);
  std::vector<Elem> sigma(n), gamma(n);
  for (Elem y = 0; y < n; ++y) sigma[y] = s.r()(0, y).first;
  for (Elem x = 0; x < n; ++x) gamma[x] = s.r()(x, 0).second;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (s.r()(x, y) != Pair{sigma[y], gamma[x]})
        throw Error(ErrorKind::ShapeMismatch, "solution is not of the form (sigma(y), gamma(x))",
                    Violation{"lyubashenko-form", {x, y}});
  for (Elem x = 0; x < n; ++x)
    if (kappa(sigma[x]) != sigma[kappa(x)] || kappa(gamma[x]) != gamma[kappa(x)])
      throw Error(ErrorKind::NonCommuting, "kappa must commute with sigma and gamma",
                  Violation{"commutes", {x}});
  return {PairMap::from_function(n, [&](Elem x, Elem y) { return Pair{x, kappa(y)}; }),
          TripleMap::from_function(n, [&](Elem x, Elem y, Elem z) {
            return Triple{x, kappa(y), kappa(z)};
          }),
          TripleMap::from_function(n, [&](Elem x, Elem y, Elem z) {
            return Triple{x, y, kappa(kappa(z))};
          })};
}

std::vector<TwistTriple> brute_force_twists(const YbeSolution& s) {
  std::vector<TwistTriple> out;
  for (auto& candidate : kernels::parallel::brute_force_twists(s.r())) {
    TripleMap psi = compose(invert(lift_12(candidate.F)),
                            compose(lift_23(candidate.F), candidate.Phi));
    out.emplace_back(std::move(candidate.F), std::move(candidate.Phi), std::move(psi));
  }
  return out;
}

std::vector<YbeSolution> enumerate_solutions(std::size_t n) {
  std::vector<YbeSolution> out;
  for (const PairMap& r : kernels::parallel::enumerate_solutions(n))
    out.push_back(check_solution(n, r));
  return out;
}

YbeSolution conjugate_solution(const YbeSolution& s, const Permutation& f) {
  require_size(s.size(), f.size(), "conjugate_solution");
  const Permutation f_inv = f.inverse();
  return check_solution(s.size(), PairMap::from_function(s.size(), [&](Elem x, Elem y) {
                          Pair p = s.r()(f_inv(x), f_inv(y));
                          return Pair{f(p.first), f(p.second)};
                        }));
}

TwistTriple conjugate_twist(const TwistTriple& t, const Permutation& f) {
  const std::size_t n = t.size();
  require_size(n, f.size(), "conjugate_twist");
  const Permutation g = f.inverse();
  auto conj3 = [&](const TripleMap& m) {
    return TripleMap::from_function(n, [&](Elem x, Elem y, Elem z) {
      Triple p = m(g(x), g(y), g(z));
      return Triple{f(p.first), f(p.second), f(p.third)};
    });
  };
  return {PairMap::from_function(n,
                                 [&](Elem x, Elem y) {
                                   Pair p = t.F(g(x), g(y));
                                   return Pair{f(p.first), f(p.second)};
                                 }),
          conj3(t.Phi), conj3(t.Psi)};
}

bool has_bijective_components(const PairMap& F) {
  const std::size_t n = F.universe();
  for (Elem fixed = 0; fixed < n; ++fixed) {
    if (!is_bijection(n, [&](Elem x) { return F(x, fixed).first; })) return false;
    if (!is_bijection(n, [&](Elem y) { return F(fixed, y).second; })) return false;
  }
  return true;
}

}  // namespace skewtwist
