#pragma once

// Twists between skew braces are classified by families of isomorphisms
// between their additive groups. A family {f_g : (G,*) -> (G,*')} with
// f_g(g) = g gives a twist between the trivial braces (G,*,*) and (G,*',*');
// conjugating by the canonical twists reaches arbitrary braces.

#include <cstdint>
#include <functional>
#include <vector>

#include "skewtwist/brace.hpp"

namespace skewtwist {

struct IsoFamily {
  FiniteGroup source;
  FiniteGroup target;
  /// maps[g] is f_g.
  std::vector<Permutation> maps;

  bool operator==(const IsoFamily&) const = default;
};

/// Checks sizes, then that every f_g is a homomorphism ("isomorphism",
/// witness g,a,b), fixes g ("fixes", witness g) and the identity ("unit").
Report check_family(const IsoFamily& fam);

/// F(x,y) = (f_xy(x), f_xy(y)),
/// Phi(x,y,z) = (f_xyz(x), a_{x,yz}(y), a_{x,yz}(z)),
/// Psi(x,y,z) = (b_{xy,z}(x), b_{xy,z}(y), f_xyz(z)),
/// with a_{x,c} = f^-1_{f_xc(c)} f_xc and b_{x,y} = f^-1_{f_xy(x)} f_xy, all
/// products taken in the source. Throws InvalidFamily.
TwistTriple twist_from_family(const IsoFamily& fam);

/// f_p(z) = first(F(z, z^-1 p)) for a twist t on trivial_brace(source).
/// Throws NotClassifiable unless t lands on a trivial brace and the family
/// rebuilds t exactly.
IsoFamily family_from_twist(const FiniteGroup& source, const TwistTriple& t);

/// The product over g of {isomorphisms src -> tgt fixing g}, with f_0 the
/// slowest-moving coordinate. The visitor returns false to stop.
void for_each_family(const FiniteGroup& src, const FiniteGroup& tgt,
                     const std::function<bool(const IsoFamily&)>& visit);
std::vector<IsoFamily> enumerate_families(const FiniteGroup& src, const FiniteGroup& tgt);

/// Number of families between the additive groups, i.e. of twists b1 -> b2.
std::uint64_t count_twists(const BraidedGroup& b1, const BraidedGroup& b2);

/// invert(theta_2) . family twist . theta_1 for every family between the
/// additive groups. Each yield is verified as a brace twist on b1 landing on b2.
void for_each_brace_twist(const BraidedGroup& b1, const BraidedGroup& b2,
                          const std::function<bool(const TwistTriple&, const IsoFamily&)>& visit);
std::vector<TwistTriple> enumerate_brace_twists(const BraidedGroup& b1, const BraidedGroup& b2);

/// F(x,y) = (f_{x.y}(x), f_{x.y}(x)^-1 .2 (x.y)) where . is b1's and .2 is
/// b2's multiplication.
bool matches_any_twist_form(const BraidedGroup& b1, const BraidedGroup& b2, const IsoFamily& fam,
                            const TwistTriple& t);

/// Additive groups are isomorphic.
bool are_twist_related(const BraidedGroup& b1, const BraidedGroup& b2);

}  // namespace skewtwist
