#pragma once

// Matched pairs of groups (G+, G-) acting on each other, and the maps
// Theta : G-^2 -> G+^2 that induce twists on G-.
//
// Actions are written g>b for the left action of G+ on G- and g<b for the
// right action of G- on G+.

#include <cstdint>
#include <vector>

#include "skewtwist/brace.hpp"

namespace skewtwist {

class MatchedPair {
 public:
  MatchedPair() = default;

  const FiniteGroup& plus() const { return plus_; }
  const FiniteGroup& minus() const { return minus_; }
  /// g > b, an element of G-.
  Elem left(Elem g, Elem b) const { return left_[g * minus_.order() + b]; }
  /// g < b, an element of G+.
  Elem right(Elem g, Elem b) const { return right_[g * minus_.order() + b]; }
  std::span<const Elem> left_table() const { return left_; }
  std::span<const Elem> right_table() const { return right_; }

  bool operator==(const MatchedPair&) const = default;

 private:
  friend MatchedPair check_matched_pair(const FiniteGroup&, const FiniteGroup&, std::vector<Elem>,
                                        std::vector<Elem>);
  FiniteGroup plus_;
  FiniteGroup minus_;
  std::vector<Elem> left_;
  std::vector<Elem> right_;
};

/// Both tables are indexed g*|G-|+b. Axioms in order: range, left-identity,
/// left-action, right-identity, right-action, left-unit, right-unit,
/// left-compat (g>(bc) = (g>b)((g<b)>c)), right-compat
/// ((gh)<b = (g<(h>b))(h<b)). Throws AxiomFails.
MatchedPair check_matched_pair(const FiniteGroup& plus, const FiniteGroup& minus,
                               std::vector<Elem> left, std::vector<Elem> right);

/// G+ = G- = (G, .), g > b = sigma_g(b), g < b = gamma_b(g).
MatchedPair pair_from_brace(const BraidedGroup& b);

/// Theta(a,b) = (Theta1(a,b), Theta2(a,b)) stored row-major over G-^2.
struct ThetaMap {
  std::size_t n = 0;
  std::vector<Pair> table;

  Pair operator()(Elem a, Elem b) const { return table[pair_index(n, a, b)]; }
  Elem theta1(Elem a, Elem b) const { return (*this)(a, b).first; }
  Elem theta2(Elem a, Elem b) const { return (*this)(a, b).second; }

  static ThetaMap constant_identity(const MatchedPair& p);
  /// Theta(x,y) = (e, x); needs G+ = G- as sets.
  static ThetaMap canonical(const MatchedPair& p);

  bool operator==(const ThetaMap&) const = default;
};

/// Checks size and range, then unit (Theta2(e,a) = e = Theta1(a,e)), the
/// three cocycle conditions C1, C2, C3 (witness a,b,c) and F-bijective.
Report check_theta(const MatchedPair& p, const ThetaMap& theta);

/// F(g,h) = (Theta1(g,h) > g, Theta2(g,h) > h). Not necessarily bijective;
/// see PairMap::bijective.
PairMap f_theta(const MatchedPair& p, const ThetaMap& theta);

/// (F, Phi, Psi) with
///   Phi(a,b,c) = (T1(a,bc) > a, T2(a,bc) > b, (T2(a,bc) < b) > c),
///   Psi(a,b,c) = (T1(ab,c) > a, (T1(ab,c) < a) > b, T2(ab,c) > c),
/// verified as a brace twist on `base`, whose group must be G-. Throws
/// InvalidTheta.
TwistTriple triple_from_theta(const MatchedPair& p, const ThetaMap& theta,
                              const BraidedGroup& base);

/// Every Theta passing check_theta, in lexicographic order of the table.
/// Backtracks over the free entries; `budget` caps the number of search nodes
/// and TooLarge is thrown past it. The subtrees of the first free entry are
/// searched in parallel.
std::vector<ThetaMap> enumerate_thetas(const MatchedPair& p, std::uint64_t budget);

namespace detail {
std::vector<ThetaMap> enumerate_thetas_serial(const MatchedPair& p, std::uint64_t budget);
}  // namespace detail

}  // namespace skewtwist
