#include "skewtwist/classify.hpp"

namespace skewtwist {

namespace {

std::vector<std::vector<Permutation>> stabilizers(const FiniteGroup& src, const FiniteGroup& tgt) {
  std::vector<std::vector<Permutation>> out;
  if (src.order() != tgt.order()) return out;
  for (Elem g = 0; g < src.order(); ++g) out.push_back(enumerate_isomorphisms(src, tgt, {{g, g}}));
  return out;
}

}  // namespace

Report check_family(const IsoFamily& fam) {
  const std::size_t n = fam.source.order();
  if (fam.target.order() != n || fam.maps.size() != n) return Report::fail("size", {});
  for (const Permutation& f : fam.maps)
    if (f.size() != n) return Report::fail("size", {});
  for (Elem g = 0; g < n; ++g) {
    const Permutation& f = fam.maps[g];
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (f(fam.source.mul(a, b)) != fam.target.mul(f(a), f(b)))
          return Report::fail("isomorphism", {g, a, b});
    if (f(g) != g) return Report::fail("fixes", {g});
    if (f(fam.source.identity()) != fam.target.identity()) return Report::fail("unit", {g});
  }
  return Report::pass();
}

TwistTriple twist_from_family(const IsoFamily& fam) {
  if (Report report = check_family(fam); !report)
    throw Error(ErrorKind::InvalidFamily, "not an isomorphism family", *report.violation);
  const FiniteGroup& G = fam.source;
  const std::size_t n = G.order();
  std::vector<Permutation> inverse;
  for (const Permutation& f : fam.maps) inverse.push_back(f.inverse());
  auto m = [&](Elem a, Elem b) { return G.mul(a, b); };
  const auto& f = fam.maps;

  return {PairMap::from_function(n,
                                 [&](Elem x, Elem y) {
                                   const Permutation& fp = f[m(x, y)];
                                   return Pair{fp(x), fp(y)};
                                 }),
          TripleMap::from_function(n,
                                   [&](Elem x, Elem y, Elem z) {
                                     Elem c = m(y, z);
                                     const Permutation& fxc = f[m(x, c)];
                                     const Permutation& back = inverse[fxc(c)];
                                     return Triple{fxc(x), back(fxc(y)), back(fxc(z))};
                                   }),
          TripleMap::from_function(n, [&](Elem x, Elem y, Elem z) {
            Elem c = m(x, y);
            const Permutation& fcz = f[m(c, z)];
            const Permutation& back = inverse[fcz(c)];
            return Triple{back(fcz(x)), back(fcz(y)), fcz(z)};
          })};
}

IsoFamily family_from_twist(const FiniteGroup& source, const TwistTriple& t) {
  const std::size_t n = source.order();
  if (t.size() != n)
    throw Error(ErrorKind::SizeMismatch, "twist and group live on sets of different size");
  BraidedGroup target;
  try {
    target = apply_brace_twist(trivial_brace(source), t);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotClassifiable, std::string("not a twist on the trivial brace: ") +
                                                e.what());
  }
  if (!target.is_trivial())
    throw Error(ErrorKind::NotClassifiable, "twist does not land on a trivial brace");

  IsoFamily fam{source, target.group(), {}};
  for (Elem p = 0; p < n; ++p) {
    std::vector<Elem> images(n);
    std::vector<bool> seen(n, false);
    for (Elem z = 0; z < n; ++z) {
      images[z] = t.F(z, source.mul(source.inv(z), p)).first;
      if (seen[images[z]])
        throw Error(ErrorKind::NotClassifiable, "extracted map is not a bijection",
                    Violation{"bijective", {p}});
      seen[images[z]] = true;
    }
    fam.maps.emplace_back(std::move(images));
  }
  if (Report report = check_family(fam); !report)
    throw Error(ErrorKind::NotClassifiable, "extracted maps are not a family", *report.violation);
  if (!(twist_from_family(fam) == t))
    throw Error(ErrorKind::NotClassifiable, "family does not rebuild the twist");
  return fam;
}

void for_each_family(const FiniteGroup& src, const FiniteGroup& tgt,
                     const std::function<bool(const IsoFamily&)>& visit) {
  const auto choices = stabilizers(src, tgt);
  const std::size_t n = src.order();
  if (n == 0 || choices.size() != n) return;
  for (const auto& c : choices)
    if (c.empty()) return;

  std::vector<std::size_t> digit(n, 0);
  IsoFamily fam{src, tgt, {}};
  for (;;) {
    fam.maps.clear();
    for (Elem g = 0; g < n; ++g) fam.maps.push_back(choices[g][digit[g]]);
    if (!visit(fam)) return;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < choices[pos].size()) break;
      digit[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::vector<IsoFamily> enumerate_families(const FiniteGroup& src, const FiniteGroup& tgt) {
  std::vector<IsoFamily> out;
  for_each_family(src, tgt, [&](const IsoFamily& fam) {
    out.push_back(fam);
    return true;
  });
  return out;
}

std::uint64_t count_twists(const BraidedGroup& b1, const BraidedGroup& b2) {
  const auto choices = stabilizers(b1.star(), b2.star());
  if (choices.empty() && b1.order() != 0) return 0;
  std::uint64_t count = 1;
  for (const auto& c : choices) count *= c.size();
  return count;
}

void for_each_brace_twist(const BraidedGroup& b1, const BraidedGroup& b2,
                          const std::function<bool(const TwistTriple&, const IsoFamily&)>& visit) {
  const TwistTriple theta1 = theta_canonical_twist(b1);
  const TwistTriple theta2 = theta_canonical_twist(b2);
  const TwistTriple back2 = invert_brace_twist(theta2, b2);
  for_each_family(b1.star(), b2.star(), [&](const IsoFamily& fam) {
    TwistTriple middle = formulas::compose(twist_from_family(fam), theta1);
    TwistTriple twist = compose_brace_twists(back2, middle, b1);
    if (!(apply_brace_twist(b1, twist) == b2))
      throw Error(ErrorKind::InvalidTwist, "composite twist misses the target brace");
    return visit(twist, fam);
  });
}

std::vector<TwistTriple> enumerate_brace_twists(const BraidedGroup& b1, const BraidedGroup& b2) {
  std::vector<TwistTriple> out;
  for_each_brace_twist(b1, b2, [&](const TwistTriple& t, const IsoFamily&) {
    out.push_back(t);
    return true;
  });
  return out;
}

bool matches_any_twist_form(const BraidedGroup& b1, const BraidedGroup& b2, const IsoFamily& fam,
                            const TwistTriple& t) {
  const std::size_t n = b1.order();
  if (t.size() != n || b2.order() != n || fam.maps.size() != n) return false;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem p = b1.group().mul(x, y);
      Elem a = fam.maps[p](x);
      if (t.F(x, y) != Pair{a, b2.group().mul(b2.group().inv(a), p)}) return false;
    }
  return true;
}

bool are_twist_related(const BraidedGroup& b1, const BraidedGroup& b2) {
  return are_isomorphic(b1.star(), b2.star());
}

}  // namespace skewtwist
