#pragma once

// Finite set-theoretic solutions of the braid equation
//     r23 r12 r23 = r12 r23 r12
// and Drinfeld twists (F, Phi, Psi) on them.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skewtwist/errors.hpp"
#include "skewtwist/tables.hpp"

namespace skewtwist {

/// A validated solution (X, r), with r(x,y) = (sigma_x(y), gamma_y(x)).
class YbeSolution {
 public:
  YbeSolution() = default;

  std::size_t size() const { return r_.universe(); }
  const PairMap& r() const { return r_; }
  Elem sigma(Elem x, Elem y) const { return r_(x, y).first; }
  Elem gamma(Elem y, Elem x) const { return r_(x, y).second; }

  bool involutive() const { return involutive_; }
  bool left_nondegenerate() const { return left_nondegenerate_; }
  bool right_nondegenerate() const { return right_nondegenerate_; }
  bool nondegenerate() const { return left_nondegenerate_ && right_nondegenerate_; }

  bool operator==(const YbeSolution& other) const { return r_ == other.r_; }

 private:
  friend YbeSolution check_solution(std::size_t n, const PairMap& r);
  PairMap r_;
  bool involutive_ = false;
  bool left_nondegenerate_ = false;
  bool right_nondegenerate_ = false;
};

/// Validates r. Throws SizeMismatch, NotBijective, or BraidFails (with the
/// lexicographically smallest failing triple as witness).
YbeSolution check_solution(std::size_t n, const PairMap& r);

/// Solution of the form r(x,y) = (sigma(y), gamma(x)). Throws BadParams when
/// sigma and gamma do not commute.
YbeSolution lyubashenko_solution(const Permutation& sigma, const Permutation& gamma);
YbeSolution flip_solution(std::size_t n);

/// A Drinfeld twist: bijections F on X^2 and Phi, Psi on X^3.
struct TwistTriple {
  PairMap F;
  TripleMap Phi;
  TripleMap Psi;

  /// Throws SizeMismatch or NotBijective.
  TwistTriple(PairMap f, TripleMap phi, TripleMap psi);

  static TwistTriple identity(std::size_t n);

  std::size_t size() const { return F.universe(); }
  /// G = F12 Psi (= F23 Phi for a valid twist); with F it determines the
  /// triple.
  TripleMap g_map() const;

  bool operator==(const TwistTriple&) const = default;
};

/// Checks T1 (F12 Psi = F23 Phi), T2 (Phi r23 = r23 Phi) and T3
/// (Psi r12 = r12 Psi) in that order; the witness is the lexicographically
/// smallest failing triple.
Report verify_twist(const YbeSolution& s, const TwistTriple& t);

/// (X, F r F^-1), revalidated. Throws InvalidTwist when verify_twist fails.
YbeSolution apply_twist(const YbeSolution& s, const TwistTriple& t);

/// The composite of `inner` (a twist on s) followed by `outer` (a twist on
/// apply_twist(s, inner)):
///     (G F, F23^-1 phi F23 Phi, F12^-1 psi F12 Psi).
TwistTriple compose_twists(const TwistTriple& outer, const TwistTriple& inner,
                           const YbeSolution& s);

/// (F^-1, F23 Phi^-1 F23^-1, F12 Psi^-1 F12^-1), a twist on apply_twist(s, t)
/// that recovers s.
TwistTriple invert_twist(const TwistTriple& t, const YbeSolution& s);

// Unchecked versions of the two formulas above, shared with the brace layer.
namespace formulas {
TwistTriple compose(const TwistTriple& outer, const TwistTriple& inner);
TwistTriple invert(const TwistTriple& t);
TwistTriple doikou(const PairMap& r);
}  // namespace formulas

/// F(x,y) = (x, sigma_x(y)),
/// Phi(x,y,z) = (x, sigma_x(y), sigma_{gamma_y(x)}(z)),
/// Psi(x,y,z) = (x, y, sigma_x(sigma_y(z))).
/// Throws Degenerate unless every sigma_x is a bijection. For involutive s the
/// twisted solution is the flip.
TwistTriple doikou_twist(const YbeSolution& s);

/// F(x,y) = (x, kappa(y)), Phi = (x, kappa(y), kappa(z)),
/// Psi = (x, y, kappa(kappa(z))) on a solution r(x,y) = (sigma(y), gamma(x)).
/// Throws ShapeMismatch or NonCommuting.
TwistTriple kappa_twist(const YbeSolution& s, const Permutation& kappa);

/// Every twist on s, found by exhaustive search over F in Sym(X^2) and
/// Phi in Sym(X^3) with Psi forced by T1. Throws TooLarge for n > 2.
std::vector<TwistTriple> brute_force_twists(const YbeSolution& s);

/// Every solution on n <= 3 points (lexicographic order of r's table).
/// Throws TooLarge for larger n.
std::vector<YbeSolution> enumerate_solutions(std::size_t n);

/// Transport along a bijection f: r' = (f x f) r (f x f)^-1.
YbeSolution conjugate_solution(const YbeSolution& s, const Permutation& f);
TwistTriple conjugate_twist(const TwistTriple& t, const Permutation& f);

/// True when x -> first(F(x,y)) and y -> second(F(x,y)) are bijections for
/// every fixed y and x respectively.
bool has_bijective_components(const PairMap& F);

}  // namespace skewtwist
