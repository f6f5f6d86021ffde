#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "skewtwist/tables.hpp"

namespace skewtwist {

/// A finite group given by its multiplication table on {0..n-1}.
///
/// Construction validates associativity, the identity and two-sided
/// inverses; a FiniteGroup value is always a group.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// `mul[a*n+b]` is a.b. Throws AxiomFails (with witness) when the table is
  /// not a group with identity `e`.
  FiniteGroup(std::size_t n, std::vector<Elem> mul, Elem e);

  /// Finds the identity itself; throws AxiomFails when there is none.
  static FiniteGroup from_table(std::size_t n, std::vector<Elem> mul);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup klein();
  /// Sym(k) with elements numbered by the lexicographic order of their
  /// one-line notation; element 0 is the identity.
  static FiniteGroup symmetric(std::size_t k);
  static FiniteGroup dihedral(std::size_t k);  // order 2k
  static FiniteGroup quaternion();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t order() const { return n_; }
  Elem identity() const { return e_; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  std::span<const Elem> table() const { return mul_; }
  bool is_abelian() const;

  bool operator==(const FiniteGroup& other) const {
    return n_ == other.n_ && e_ == other.e_ && mul_ == other.mul_;
  }

 private:
  std::size_t n_ = 0;
  Elem e_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
};

/// Non-throwing group check over a table, in the order associativity,
/// identity, inverses.
Report check_group_axioms(std::size_t n, std::span<const Elem> mul, Elem e);

/// Visits every isomorphism phi: g -> h (phi(a.b) = phi(a)*phi(b)), in
/// lexicographic order of the image table. With `fixed = (a, b)` only those
/// with phi(a) = b are visited. Returning false from the visitor stops the
/// search.
void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                          std::optional<std::pair<Elem, Elem>> fixed,
                          const std::function<bool(const Permutation&)>& visit);

std::vector<Permutation> enumerate_isomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                                std::optional<std::pair<Elem, Elem>> fixed = {});

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

namespace detail {

// The two search strategies behind for_each_isomorphism. Exposed so tests can
// confirm they agree on small groups.
std::vector<Permutation> isomorphisms_by_enumeration(const FiniteGroup& g, const FiniteGroup& h,
                                                     std::optional<std::pair<Elem, Elem>> fixed);
std::vector<Permutation> isomorphisms_by_generators(const FiniteGroup& g, const FiniteGroup& h,
                                                    std::optional<std::pair<Elem, Elem>> fixed);

/// A generating set chosen greedily: the smallest element outside the
/// subgroup generated so far.
std::vector<Elem> greedy_generators(const FiniteGroup& g);

}  // namespace detail

}  // namespace skewtwist
