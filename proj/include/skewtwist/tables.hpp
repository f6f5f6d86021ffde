#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "skewtwist/errors.hpp"

namespace skewtwist {

// Elements of a universe of size n are the integers 0..n-1. Pairs are stored
// row-major at x*n+y and triples at x*n*n+y*n+z.

struct Pair {
  Elem first = 0;
  Elem second = 0;
  auto operator<=>(const Pair&) const = default;
};

struct Triple {
  Elem first = 0;
  Elem second = 0;
  Elem third = 0;
  auto operator<=>(const Triple&) const = default;
};

inline std::size_t pair_index(std::size_t n, Elem x, Elem y) { return x * n + y; }
inline std::size_t pair_index(std::size_t n, Pair p) { return pair_index(n, p.first, p.second); }
inline std::size_t triple_index(std::size_t n, Elem x, Elem y, Elem z) {
  return (x * n + y) * n + z;
}
inline std::size_t triple_index(std::size_t n, Triple t) {
  return triple_index(n, t.first, t.second, t.third);
}
inline Pair pair_at(std::size_t n, std::size_t index) {
  return {static_cast<Elem>(index / n), static_cast<Elem>(index % n)};
}
inline Triple triple_at(std::size_t n, std::size_t index) {
  return {static_cast<Elem>(index / (n * n)), static_cast<Elem>((index / n) % n),
          static_cast<Elem>(index % n)};
}

/// A bijection of {0..n-1}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws NotBijective unless `images` is a permutation of 0..size-1.
  explicit Permutation(std::vector<Elem> images);

  static Permutation identity(std::size_t n);
  /// Parses zero-based cycle notation such as "(0 1)(2 3)". The empty string
  /// and "()" give the identity.
  static Permutation from_cycles(std::string_view cycles, std::size_t n);

  std::size_t size() const { return images_.size(); }
  Elem operator()(Elem x) const { return images_[x]; }
  std::span<const Elem> images() const { return images_; }

  Permutation inverse() const;
  /// (*this) after `rhs`.
  Permutation after(const Permutation& rhs) const;
  bool is_identity() const;
  std::string to_cycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Elem> images_;
};

/// Total map X^2 -> X^2 as an n^2 table.
class PairMap {
 public:
  PairMap() = default;
  PairMap(std::size_t n, std::vector<Pair> table);

  static PairMap identity(std::size_t n);
  static PairMap flip(std::size_t n);

  template <class Fn>
  static PairMap from_function(std::size_t n, Fn&& fn) {
    std::vector<Pair> table(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) table[pair_index(n, x, y)] = fn(x, y);
    return PairMap(n, std::move(table));
  }

  std::size_t universe() const { return n_; }
  bool bijective() const { return bijective_; }
  std::span<const Pair> table() const { return table_; }

  Pair operator()(Elem x, Elem y) const { return table_[pair_index(n_, x, y)]; }
  Pair operator()(Pair p) const { return (*this)(p.first, p.second); }

  bool operator==(const PairMap& other) const { return n_ == other.n_ && table_ == other.table_; }

 private:
  std::size_t n_ = 0;
  std::vector<Pair> table_;
  bool bijective_ = true;
};

/// Total map X^3 -> X^3 as an n^3 table.
class TripleMap {
 public:
  TripleMap() = default;
  TripleMap(std::size_t n, std::vector<Triple> table);

  static TripleMap identity(std::size_t n);

  template <class Fn>
  static TripleMap from_function(std::size_t n, Fn&& fn) {
    std::vector<Triple> table(n * n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) table[triple_index(n, x, y, z)] = fn(x, y, z);
    return TripleMap(n, std::move(table));
  }

  std::size_t universe() const { return n_; }
  bool bijective() const { return bijective_; }
  std::span<const Triple> table() const { return table_; }

  Triple operator()(Elem x, Elem y, Elem z) const { return table_[triple_index(n_, x, y, z)]; }
  Triple operator()(Triple t) const { return (*this)(t.first, t.second, t.third); }

  bool operator==(const TripleMap& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Triple> table_;
  bool bijective_ = true;
};

/// f after g. Throws SizeMismatch when the universes differ.
PairMap compose(const PairMap& f, const PairMap& g);
TripleMap compose(const TripleMap& f, const TripleMap& g);

/// Throws NotBijective when the table is not a permutation.
PairMap invert(const PairMap& f);
TripleMap invert(const TripleMap& f);

// Index lifting: lift_23(f)(x,y,z) = (x, f(y,z)) and so on.
TripleMap lift_12(const PairMap& f);
TripleMap lift_23(const PairMap& f);
TripleMap lift_13(const PairMap& f);
TripleMap lift_1(const Permutation& p);
TripleMap lift_2(const Permutation& p);
TripleMap lift_3(const Permutation& p);

/// Order of a bijective pair map as an element of Sym(X^2).
std::uint64_t permutation_order(const PairMap& f);

}  // namespace skewtwist
