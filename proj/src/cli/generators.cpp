#include "skewtwist/cli/generators.hpp"

#include <charconv>
#include <functional>

namespace skewtwist::cli {

namespace {

std::size_t size_arg(const GenParams& p, std::size_t index, const std::string& name) {
  if (p.args.size() <= index)
    throw Error(ErrorKind::BadParams, name + " needs a size parameter");
  const std::string& s = p.args[index];
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || value == 0 || value > 64)
    throw Error(ErrorKind::BadParams, name + ": bad size \"" + s + "\"");
  return value;
}

template <class T>
const T& input_as(const GenParams& p, const std::string& name, const char* kind) {
  if (!p.input) throw Error(ErrorKind::BadParams, name + " needs --in with a " + kind);
  const T* value = p.input->get<T>();
  if (!value) throw Error(ErrorKind::BadParams, name + " needs a " + kind + " document");
  return *value;
}

MatchedPair pair_input(const GenParams& p, const std::string& name) {
  if (p.input) {
    if (const auto* pair = p.input->get<MatchedPair>()) return *pair;
    if (const auto* b = p.input->get<BraidedGroup>()) return pair_from_brace(*b);
  }
  throw Error(ErrorKind::BadParams, name + " needs --in with a brace or matched-pair");
}

Document named(Payload payload, std::string name, std::string notes = {}) {
  return Document{std::move(payload), Meta{std::move(name), std::move(notes)}};
}

const Permutation& s4_sigma() {
  static const Permutation p = Permutation::from_cycles("(0 1)", 4);
  return p;
}
const Permutation& s4_gamma() {
  static const Permutation p = Permutation::from_cycles("(2 3)", 4);
  return p;
}

using Generator = std::function<Document(const GenParams&, const std::string&)>;

const std::vector<std::pair<std::string, Generator>>& registry() {
  static const std::vector<std::pair<std::string, Generator>> table = {
      {"s4-solution",
       [](const GenParams&, const std::string& name) {
         return named(lyubashenko_solution(s4_sigma(), s4_gamma()), name,
                      "r(x,y) = (sigma(y), gamma(x)), sigma = (0 1), gamma = (2 3)");
       }},
      {"lyubashenko",
       [](const GenParams& p, const std::string& name) {
         const std::size_t n = size_arg(p, 0, name);
         return named(lyubashenko_solution(Permutation::from_cycles(p.sigma, n),
                                           Permutation::from_cycles(p.gamma, n)),
                      name, "sigma = " + p.sigma + ", gamma = " + p.gamma);
       }},
      {"flip",
       [](const GenParams& p, const std::string& name) {
         return named(flip_solution(size_arg(p, 0, name)), name);
       }},
      {"cyclic-trivial-brace",
       [](const GenParams& p, const std::string& name) {
         return named(trivial_brace(FiniteGroup::cyclic(size_arg(p, 0, name))), name);
       }},
      {"klein-trivial-brace",
       [](const GenParams&, const std::string& name) {
         return named(trivial_brace(FiniteGroup::klein()), name);
       }},
      {"z4-brace",
       [](const GenParams&, const std::string& name) {
         std::vector<Elem> dot(16);
         for (Elem x = 0; x < 4; ++x)
           for (Elem y = 0; y < 4; ++y) dot[x * 4 + y] = (x + y + 2 * x * y) % 4;
         return named(braiding_from_brace(FiniteGroup(4, std::move(dot), 0), FiniteGroup::cyclic(4)),
                      name, "x.y = x+y+2xy mod 4 over additive Z4");
       }},
      {"sym-trivial-brace",
       [](const GenParams& p, const std::string& name) {
         const std::size_t k = size_arg(p, 0, name);
         if (k > 4) throw Error(ErrorKind::BadParams, name + ": k must be at most 4");
         return named(trivial_brace(FiniteGroup::symmetric(k)), name);
       }},
      {"cyclic-group",
       [](const GenParams& p, const std::string& name) {
         return named(FiniteGroup::cyclic(size_arg(p, 0, name)), name);
       }},
      {"klein-group",
       [](const GenParams&, const std::string& name) { return named(FiniteGroup::klein(), name); }},
      {"sym-group",
       [](const GenParams& p, const std::string& name) {
         const std::size_t k = size_arg(p, 0, name);
         if (k > 4) throw Error(ErrorKind::BadParams, name + ": k must be at most 4");
         return named(FiniteGroup::symmetric(k), name);
       }},
      {"dihedral-group",
       [](const GenParams& p, const std::string& name) {
         return named(FiniteGroup::dihedral(size_arg(p, 0, name)), name);
       }},
      {"quaternion-group",
       [](const GenParams&, const std::string& name) {
         return named(FiniteGroup::quaternion(), name);
       }},
      {"s4-twist",
       [](const GenParams&, const std::string& name) {
         const Permutation& s = s4_sigma();
         const Permutation& g = s4_gamma();
         return named(
             TwistTriple(
                 PairMap::from_function(4, [&](Elem x, Elem y) { return Pair{s(x), g(y)}; }),
                 TripleMap::from_function(
                     4, [&](Elem x, Elem y, Elem z) { return Triple{g(s(x)), s(y), s(z)}; }),
                 TripleMap::from_function(
                     4, [&](Elem x, Elem y, Elem z) { return Triple{g(x), g(y), g(s(z))}; })),
             name, "twist on s4-solution");
       }},
      {"identity-twist",
       [](const GenParams& p, const std::string& name) {
         return named(TwistTriple::identity(size_arg(p, 0, name)), name);
       }},
      {"doikou-twist",
       [](const GenParams& p, const std::string& name) {
         return named(doikou_twist(input_as<YbeSolution>(p, name, "solution")), name);
       }},
      {"kappa-twist",
       [](const GenParams& p, const std::string& name) {
         const auto& s = input_as<YbeSolution>(p, name, "solution");
         return named(kappa_twist(s, Permutation::from_cycles(p.kappa, s.size())), name,
                      "kappa = " + p.kappa);
       }},
      {"theta-canonical",
       [](const GenParams& p, const std::string& name) {
         return named(theta_canonical_twist(input_as<BraidedGroup>(p, name, "brace")), name);
       }},
      {"brace-pair",
       [](const GenParams& p, const std::string& name) {
         return named(pair_from_brace(input_as<BraidedGroup>(p, name, "brace")), name);
       }},
      {"canonical-theta",
       [](const GenParams& p, const std::string& name) {
         MatchedPair pair = pair_input(p, name);
         ThetaMap theta = ThetaMap::canonical(pair);
         if (Report report = check_theta(pair, theta); !report)
           throw Error(ErrorKind::InvalidTheta, "canonical theta fails", *report.violation);
         return named(ThetaDoc{std::move(pair), std::move(theta)}, name, "Theta(x,y) = (e,x)");
       }},
      {"constant-theta",
       [](const GenParams& p, const std::string& name) {
         MatchedPair pair = pair_input(p, name);
         ThetaMap theta = ThetaMap::constant_identity(pair);
         return named(ThetaDoc{std::move(pair), std::move(theta)}, name, "Theta(x,y) = (e,e)");
       }},
  };
  return table;
}

}  // namespace

Document generate(const std::string& name, const GenParams& params) {
  for (const auto& [key, make] : registry())
    if (key == name) return make(params, name);
  throw Error(ErrorKind::UnknownGenerator, "unknown generator \"" + name + "\"");
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

}  // namespace skewtwist::cli
