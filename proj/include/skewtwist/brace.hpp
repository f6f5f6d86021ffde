#pragma once

// Groups with braiding operators (equivalently skew braces) and the twists
// between them.
//
// A braiding operator on (G, ., e) is a solution r with
//   r(e,g) = (g,e), r(g,e) = (e,g)       brd1
//   r m12 = m23 r12 r23                  brdOpr1
//   r m23 = m12 r23 r12                  brdOpr2
//   m r = m                              brdcomm
// Its additive group is x * y = x . sigma_x^-1(y).

#include <cstddef>
#include <vector>

#include "skewtwist/group.hpp"
#include "skewtwist/ybe.hpp"

namespace skewtwist {

class BraidedGroup {
 public:
  BraidedGroup() = default;

  std::size_t order() const { return group_.order(); }
  Elem identity() const { return group_.identity(); }
  /// The multiplicative group (G, .).
  const FiniteGroup& group() const { return group_; }
  /// The additive group (G, *).
  const FiniteGroup& star() const { return star_; }
  const YbeSolution& solution() const { return solution_; }
  const PairMap& r() const { return solution_.r(); }
  Elem sigma(Elem x, Elem y) const { return solution_.sigma(x, y); }
  Elem gamma(Elem y, Elem x) const { return solution_.gamma(y, x); }

  /// Dot and star coincide.
  bool is_trivial() const { return group_ == star_; }

  bool operator==(const BraidedGroup& other) const {
    return group_ == other.group_ && solution_ == other.solution_;
  }

 private:
  friend BraidedGroup check_braided_group(const FiniteGroup& group, const PairMap& r);
  FiniteGroup group_;
  FiniteGroup star_;
  YbeSolution solution_;
};

/// Non-throwing axiom check in the order brd1, brdOpr1, brdOpr2, brdcomm,
/// bijective, braid, nondegenerate, star-group.
Report check_braiding_axioms(const FiniteGroup& group, const PairMap& r);

/// Validates r as a braiding operator on `group`. Throws AxiomFails with the
/// first failing axiom.
BraidedGroup check_braided_group(const FiniteGroup& group, const PairMap& r);

/// The trivial skew brace (G, ., .): r(x,y) = (y, y^-1 x y).
BraidedGroup trivial_brace(const FiniteGroup& group);

/// Recovers r from the two operations of a skew brace:
/// sigma_x is the inverse of y -> x^-1 . (x * y) and
/// gamma_y(x) = sigma_x(y)^-1 . x . y. Throws NotABrace when the result is not
/// a braiding operator.
BraidedGroup braiding_from_brace(const FiniteGroup& dot, const FiniteGroup& star);

/// Bijection preserving both the multiplication and the braiding.
bool are_isomorphic_braces(const BraidedGroup& a, const BraidedGroup& b);

/// T1-T3, then G1-G4, then the derived identities L1 and L2.
Report verify_brace_twist(const BraidedGroup& b, const TwistTriple& t);

/// (G, m F^-1, e) with braiding F r F^-1, fully revalidated. Throws
/// InvalidTwist when the triple is not a brace twist.
BraidedGroup apply_brace_twist(const BraidedGroup& b, const TwistTriple& t);

/// The canonical twist from (G, ., *) to the trivial brace (G, *, *):
/// F(x,y) = (x, sigma_x(y)) with the matching Phi and Psi.
TwistTriple theta_canonical_twist(const BraidedGroup& b);

/// Rebuilds the full triple from Phi alone. Phi(x,y,e) must be (Phibar(x,y), e);
/// then F = Phibar and Psi = Phibar12^-1 Phibar23 Phi. Checks Z1-Z4 and T2 and
/// throws ShapeMismatch or AxiomFails.
TwistTriple phi_reconstruct(const BraidedGroup& b, const TripleMap& phi);

TwistTriple compose_brace_twists(const TwistTriple& outer, const TwistTriple& inner,
                                 const BraidedGroup& b);
TwistTriple invert_brace_twist(const TwistTriple& t, const BraidedGroup& b);

}  // namespace skewtwist
