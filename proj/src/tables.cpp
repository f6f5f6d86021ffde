#include "skewtwist/tables.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace skewtwist {

std::string Violation::to_string() const {
  std::ostringstream out;
  out << axiom << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) out << (i ? "," : "") << witness[i];
  out << ")";
  return out.str();
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::BraidFails: return "BraidFails";
    case ErrorKind::AxiomFails: return "AxiomFails";
    case ErrorKind::InvalidTwist: return "InvalidTwist";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotABrace: return "NotABrace";
    case ErrorKind::NotClassifiable: return "NotClassifiable";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::InvalidTheta: return "InvalidTheta";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::Format: return "Format";
  }
  return "Unknown";
}

namespace {

template <class T>
bool is_table_bijective(std::span<const T> table, std::size_t n, auto index_of) {
  std::vector<bool> seen(table.size(), false);
  for (const T& value : table) {
    std::size_t i = index_of(n, value);
    if (seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorKind::SizeMismatch,
                "universe sizes differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Elem> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Elem x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorKind::NotBijective, "image list is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Elem> images(n);
  std::iota(images.begin(), images.end(), Elem{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view cycles, std::size_t n) {
  std::vector<Elem> images(n);
  std::iota(images.begin(), images.end(), Elem{0});
  std::vector<bool> moved(n, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos]))) ++pos;
  };
  skip_space();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(')
      throw Error(ErrorKind::BadParams, "expected '(' in cycle notation: " + std::string(cycles));
    ++pos;
    std::vector<Elem> cycle;
    for (;;) {
      skip_space();
      if (pos < cycles.size() && cycles[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= cycles.size())
        throw Error(ErrorKind::BadParams, "unterminated cycle: " + std::string(cycles));
      if (cycles[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(cycles[pos])))
        throw Error(ErrorKind::BadParams, "bad character in cycle notation: " + std::string(cycles));
      std::size_t value = 0;
      while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos])))
        value = value * 10 + static_cast<std::size_t>(cycles[pos++] - '0');
      if (value >= n)
        throw Error(ErrorKind::BadParams, "cycle entry " + std::to_string(value) + " out of range");
      if (moved[value])
        throw Error(ErrorKind::BadParams, "element " + std::to_string(value) + " repeated in cycles");
      moved[value] = true;
      cycle.push_back(static_cast<Elem>(value));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Elem> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<Elem>(x);
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& rhs) const {
  require_same_size(size(), rhs.size());
  std::vector<Elem> out(size());
  for (std::size_t x = 0; x < size(); ++x) out[x] = images_[rhs.images_[x]];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> done(size(), false);
  for (Elem start = 0; start < size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    for (Elem x = start; !done[x]; x = images_[x]) {
      if (x != start) out += ' ';
      out += std::to_string(x);
      done[x] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// PairMap / TripleMap

PairMap::PairMap(std::size_t n, std::vector<Pair> table) : n_(n), table_(std::move(table)) {
  if (table_.size() != n * n)
    throw Error(ErrorKind::SizeMismatch, "pair table needs n^2 = " + std::to_string(n * n) +
                                             " entries, got " + std::to_string(table_.size()));
  for (const Pair& p : table_)
    if (p.first >= n || p.second >= n)
      throw Error(ErrorKind::OutOfRange, "pair table entry out of range");
  bijective_ = is_table_bijective<Pair>(table_, n_, [](std::size_t m, Pair p) {
    return pair_index(m, p);
  });
}

PairMap PairMap::identity(std::size_t n) {
  return from_function(n, [](Elem x, Elem y) { return Pair{x, y}; });
}

PairMap PairMap::flip(std::size_t n) {
  return from_function(n, [](Elem x, Elem y) { return Pair{y, x}; });
}

TripleMap::TripleMap(std::size_t n, std::vector<Triple> table) : n_(n), table_(std::move(table)) {
  if (table_.size() != n * n * n)
    throw Error(ErrorKind::SizeMismatch, "triple table needs n^3 = " + std::to_string(n * n * n) +
                                             " entries, got " + std::to_string(table_.size()));
  for (const Triple& t : table_)
    if (t.first >= n || t.second >= n || t.third >= n)
      throw Error(ErrorKind::OutOfRange, "triple table entry out of range");
  bijective_ = is_table_bijective<Triple>(table_, n_, [](std::size_t m, Triple t) {
    return triple_index(m, t);
  });
}

TripleMap TripleMap::identity(std::size_t n) {
  return from_function(n, [](Elem x, Elem y, Elem z) { return Triple{x, y, z}; });
}

PairMap compose(const PairMap& f, const PairMap& g) {
  require_same_size(f.universe(), g.universe());
  std::vector<Pair> out(g.table().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(g.table()[i]);
  return PairMap(f.universe(), std::move(out));
}

TripleMap compose(const TripleMap& f, const TripleMap& g) {
  require_same_size(f.universe(), g.universe());
  std::vector<Triple> out(g.table().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(g.table()[i]);
  return TripleMap(f.universe(), std::move(out));
}

PairMap invert(const PairMap& f) {
  if (!f.bijective()) throw Error(ErrorKind::NotBijective, "pair map is not a bijection");
  const std::size_t n = f.universe();
  std::vector<Pair> out(f.table().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[pair_index(n, f.table()[i])] = pair_at(n, i);
  return PairMap(n, std::move(out));
}

TripleMap invert(const TripleMap& f) {
  if (!f.bijective()) throw Error(ErrorKind::NotBijective, "triple map is not a bijection");
  const std::size_t n = f.universe();
  std::vector<Triple> out(f.table().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[triple_index(n, f.table()[i])] = triple_at(n, i);
  return TripleMap(n, std::move(out));
}

TripleMap lift_12(const PairMap& f) {
  return TripleMap::from_function(f.universe(), [&](Elem x, Elem y, Elem z) {
    Pair p = f(x, y);
    return Triple{p.first, p.second, z};
  });
}

TripleMap lift_23(const PairMap& f) {
  return TripleMap::from_function(f.universe(), [&](Elem x, Elem y, Elem z) {
    Pair p = f(y, z);
    return Triple{x, p.first, p.second};
  });
}

TripleMap lift_13(const PairMap& f) {
  return TripleMap::from_function(f.universe(), [&](Elem x, Elem y, Elem z) {
    Pair p = f(x, z);
    return Triple{p.first, y, p.second};
  });
}

TripleMap lift_1(const Permutation& p) {
  return TripleMap::from_function(p.size(), [&](Elem x, Elem y, Elem z) {
    return Triple{p(x), y, z};
  });
}

TripleMap lift_2(const Permutation& p) {
  return TripleMap::from_function(p.size(), [&](Elem x, Elem y, Elem z) {
    return Triple{x, p(y), z};
  });
}

TripleMap lift_3(const Permutation& p) {
  return TripleMap::from_function(p.size(), [&](Elem x, Elem y, Elem z) {
    return Triple{x, y, p(z)};
  });
}

std::uint64_t permutation_order(const PairMap& f) {
  if (!f.bijective()) throw Error(ErrorKind::NotBijective, "order of a non-bijective map");
  const std::size_t n = f.universe();
  const std::size_t count = f.table().size();
  std::vector<bool> done(count, false);
  std::uint64_t order = 1;
  for (std::size_t start = 0; start < count; ++start) {
    if (done[start]) continue;
    std::uint64_t length = 0;
    for (std::size_t i = start; !done[i]; i = pair_index(n, f.table()[i])) {
      done[i] = true;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

}  // namespace skewtwist
