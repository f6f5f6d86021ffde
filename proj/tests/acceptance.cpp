// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "skewtwist/classify.hpp"
#include "skewtwist/cli/commands.hpp"
#include "skewtwist/cli/document.hpp"
#include "skewtwist/matched_pair.hpp"

using namespace skewtwist;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

// Twist conditions and G1-G4 evaluated directly on tables.
bool brace_twist_holds(const BraidedGroup& b, const TwistTriple& t) {
  const std::size_t n = b.order();
  if (!oracle::twist_holds(n, oracle::wrap(b.r()), oracle::wrap(t.F), oracle::wrap(t.Phi),
                           oracle::wrap(t.Psi)))
    return false;
  const Elem e = b.identity();
  auto m = [&](Elem x, Elem y) { return b.group().mul(x, y); };
  for (Elem x = 0; x < n; ++x) {
    if (t.F(e, x) != Pair{e, x} || t.F(x, e) != Pair{x, e}) return false;
    for (Elem y = 0; y < n; ++y) {
      if (t.Psi(x, y, e) != Triple{x, y, e} || t.Phi(e, x, y) != Triple{e, x, y}) return false;
      for (Elem z = 0; z < n; ++z) {
        Triple p = t.Phi(x, y, z);
        if (Pair{p.first, m(p.second, p.third)} != t.F(x, m(y, z))) return false;
        Triple q = t.Psi(x, y, z);
        if (Pair{m(q.first, q.second), q.third} != t.F(m(x, y), z)) return false;
      }
    }
  }
  return true;
}

// The twisted structure recomputed from b and F alone.
bool twisted_structure_ok(const BraidedGroup& b, const TwistTriple& t, const BraidedGroup& out) {
  const std::size_t n = b.order();
  PairMap finv = invert(t.F);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Pair u = finv(x, y);
      if (out.group().mul(x, y) != b.group().mul(u.first, u.second)) return false;
      if (out.r()(x, y) != t.F(b.r()(u.first, u.second))) return false;
    }
  if (!oracle::braiding_axioms_hold(out.group(), oracle::wrap(out.r()))) return false;
  auto star = oracle::star_table(out.group(), oracle::wrap(out.r()));
  return !star.empty() && oracle::is_group(n, star, out.identity());
}

BraidedGroup z4_brace() {
  std::vector<Elem> dot(16);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) dot[x * 4 + y] = (x + y + 2 * x * y) % 4;
  return braiding_from_brace(FiniteGroup(4, std::move(dot), 0), FiniteGroup::cyclic(4));
}

const Permutation kSigma = Permutation::from_cycles("(0 1)", 4);
const Permutation kGamma = Permutation::from_cycles("(2 3)", 4);

TwistTriple s4_twist() {
  return {PairMap::from_function(4, [](Elem x, Elem y) { return Pair{kSigma(x), kGamma(y)}; }),
          TripleMap::from_function(
              4, [](Elem x, Elem y, Elem z) { return Triple{kGamma(kSigma(x)), kSigma(y), kSigma(z)}; }),
          TripleMap::from_function(
              4, [](Elem x, Elem y, Elem z) { return Triple{kGamma(x), kGamma(y), kGamma(kSigma(z))}; })};
}

std::string c1() {
  YbeSolution s = lyubashenko_solution(kSigma, kGamma);
  TwistTriple t = s4_twist();
  require(oracle::twist_holds(4, oracle::wrap(s.r()), oracle::wrap(t.F), oracle::wrap(t.Phi),
                              oracle::wrap(t.Psi)),
          "triple is not a twist");
  YbeSolution out = apply_twist(s, t);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y)
      require(out.r()(x, y) == Pair{kGamma(y), kSigma(x)}, "twisted table differs");
  require(apply_twist(out, invert_twist(t, s)) == s, "inverse does not recover the solution");
  return "twisted table is (gamma(y), sigma(x)); inverse recovers r";
}

// Involutive non-degenerate solutions on n points, by scanning every
// bijection of X^2 directly.
std::size_t count_involutive_by_scan(std::size_t n) {
  const std::size_t sq = n * n;
  std::vector<Elem> perm(sq);
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::size_t count = 0;
  do {
    auto r = [&](Elem x, Elem y) {
      Elem v = perm[x * n + y];
      return std::pair<Elem, Elem>{v / static_cast<Elem>(n), v % static_cast<Elem>(n)};
    };
    bool ok = true;
    for (Elem i = 0; i < sq && ok; ++i) ok = perm[perm[i]] == i;
    for (Elem x = 0; x < n && ok; ++x) {
      std::vector<bool> left(n), right(n);
      for (Elem y = 0; y < n; ++y) {
        left[r(x, y).first] = true;
        right[r(y, x).second] = true;
      }
      for (Elem y = 0; y < n; ++y) ok = ok && left[y] && right[y];
    }
    ok = ok && oracle::braid_holds(n, r);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::string c2() {
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t found = 0;
    for (const YbeSolution& s : enumerate_solutions(n)) {
      if (!s.involutive() || !s.nondegenerate()) continue;
      ++found;
      require(apply_twist(s, doikou_twist(s)).r() == PairMap::flip(n), "twisted solution is not flip");
    }
    require(found == count_involutive_by_scan(n),
            "enumeration missed solutions at n=" + std::to_string(n));
    total += found;
  }
  return std::to_string(total) + " involutive non-degenerate solutions (n <= 3) twist to flip";
}

std::string c3() {
  std::size_t laws = 0;
  auto check = [&](const BraidedGroup& b, const std::vector<TwistTriple>& twists) {
    const TwistTriple id = TwistTriple::identity(b.order());
    for (const TwistTriple& t : twists) {
      BraidedGroup target = apply_brace_twist(b, t);
      require(compose_brace_twists(invert_brace_twist(t, b), t, b) == id, "inverse law fails");
      require(compose_brace_twists(id, t, b) == t && compose_brace_twists(t, id, b) == t,
              "identity law fails");
      for (const TwistTriple& u : twists) {
        if (!verify_brace_twist(target, u)) continue;
        require(apply_brace_twist(b, compose_brace_twists(u, t, b)) ==
                    apply_brace_twist(target, u),
                "apply of compose differs");
        ++laws;
      }
    }
  };
  for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                               FiniteGroup::klein()}) {
    BraidedGroup b = trivial_brace(g);
    check(b, enumerate_brace_twists(b, b));
  }
  YbeSolution s = lyubashenko_solution(kSigma, kGamma);
  const TwistTriple id = TwistTriple::identity(4);
  for (const TwistTriple& t : {s4_twist(), kappa_twist(s, kSigma), kappa_twist(s, kGamma)}) {
    YbeSolution target = apply_twist(s, t);
    require(compose_twists(invert_twist(t, s), t, s) == id, "inverse law fails on S4");
    require(compose_twists(id, t, s) == t && compose_twists(t, id, s) == t, "identity law fails");
    for (const TwistTriple& u : {s4_twist(), kappa_twist(target, kSigma), kappa_twist(target, kGamma)}) {
      if (!verify_twist(target, u)) continue;
      require(apply_twist(s, compose_twists(u, t, s)) == apply_twist(target, u),
              "apply of compose differs on S4");
      ++laws;
    }
  }
  return std::to_string(laws) + " compositions checked with inverse and identity laws";
}

std::string c4() {
  struct Case {
    const char* name;
    FiniteGroup g;
    std::size_t count;
  };
  std::ostringstream msg;
  for (const Case& c : {Case{"Z2", FiniteGroup::cyclic(2), 1}, Case{"Z3", FiniteGroup::cyclic(3), 2},
                        Case{"Z4", FiniteGroup::cyclic(4), 4}, Case{"V4", FiniteGroup::klein(), 48}}) {
    BraidedGroup b = trivial_brace(c.g);
    auto twists = enumerate_brace_twists(b, b);
    require(twists.size() == c.count, std::string(c.name) + " count is " +
                                          std::to_string(twists.size()));
    msg << c.name << ":" << twists.size() << " ";
  }
  BraidedGroup z2 = trivial_brace(FiniteGroup::cyclic(2));
  std::vector<TwistTriple> found;
  for (const TwistTriple& t : brute_force_twists(z2.solution()))
    if (brace_twist_holds(z2, t)) found.push_back(t);
  require(found == enumerate_brace_twists(z2, z2), "n=2 brute force disagrees");
  msg << "complete at n=2";
  return msg.str();
}

std::string c5() {
  BraidedGroup z4t = trivial_brace(FiniteGroup::cyclic(4));
  BraidedGroup kt = trivial_brace(FiniteGroup::klein());
  require(count_twists(z4t, kt) == 0 && !are_twist_related(z4t, kt), "Z4 and Klein are related");
  require(enumerate_brace_twists(z4t, kt).empty(), "twists found between Z4 and Klein");
  BraidedGroup b1 = z4_brace();
  require(are_twist_related(b1, z4t) && count_twists(b1, z4t) == 4, "Z4 braces not related by 4");
  std::size_t seen = 0;
  for (const TwistTriple& t : enumerate_brace_twists(b1, z4t)) {
    require(brace_twist_holds(b1, t), "enumerated twist fails verification");
    BraidedGroup out = apply_brace_twist(b1, t);
    require(twisted_structure_ok(b1, t, out), "twisted structure differs");
    for (Elem x = 0; x < 4; ++x)
      for (Elem y = 0; y < 4; ++y) {
        require(out.group().mul(x, y) == (x + y) % 4, "mF^-1 is not addition");
        require(out.r()(x, y) == Pair{y, x}, "FrF^-1 is not flip");
      }
    ++seen;
  }
  require(seen == 4, "expected 4 twists");
  return "Z4/Klein unrelated; Z4 brace to trivial Z4 by 4 verified twists";
}

std::vector<FiniteGroup> groups_up_to_8() {
  auto z2 = FiniteGroup::cyclic(2);
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back(FiniteGroup::cyclic(n));
  out.push_back(FiniteGroup::klein());
  out.push_back(FiniteGroup::symmetric(3));
  out.push_back(FiniteGroup::dihedral(4));
  out.push_back(FiniteGroup::quaternion());
  out.push_back(FiniteGroup::direct_product(z2, FiniteGroup::cyclic(4)));
  out.push_back(FiniteGroup::direct_product(z2, FiniteGroup::klein()));
  return out;
}

constexpr std::uint64_t kExhaustiveLimit = 20000;
constexpr std::uint64_t kSampleSize = 2000;

// Families drawn uniformly from the stabilizer product with a fixed seed.
std::vector<IsoFamily> sample_families(const FiniteGroup& g, std::size_t count) {
  std::vector<std::vector<Permutation>> stabilizers;
  for (Elem x = 0; x < g.order(); ++x)
    stabilizers.push_back(enumerate_isomorphisms(g, g, std::pair{x, x}));
  std::mt19937_64 rng(20261016);
  std::vector<IsoFamily> out;
  for (std::size_t i = 0; i < count; ++i) {
    IsoFamily fam{g, g, {}};
    for (const auto& stab : stabilizers)
      fam.maps.push_back(stab[std::uniform_int_distribution<std::size_t>(0, stab.size() - 1)(rng)]);
    out.push_back(std::move(fam));
  }
  return out;
}

std::string c6() {
  std::uint64_t checked = 0, sampled_groups = 0;
  auto check = [&](const BraidedGroup& b, const TwistTriple& t) {
    require(brace_twist_holds(b, t), "produced twist fails verification");
    require(twisted_structure_ok(b, t, apply_brace_twist(b, t)), "twisted structure invalid");
    ++checked;
  };
  for (const FiniteGroup& g : groups_up_to_8()) {
    BraidedGroup b = trivial_brace(g);
    TwistTriple theta = theta_canonical_twist(b);
    check(b, theta);
    if (count_twists(b, b) <= kExhaustiveLimit) {
      for_each_brace_twist(b, b, [&](const TwistTriple& t, const IsoFamily&) {
        check(b, t);
        return true;
      });
      continue;
    }
    ++sampled_groups;
    TwistTriple theta_inv = invert_brace_twist(theta, b);
    for (const IsoFamily& fam : sample_families(g, kSampleSize)) {
      TwistTriple t = twist_from_family(fam);
      check(b, t);
      if (!g.is_abelian()) check(b, compose_brace_twists(theta_inv, compose_brace_twists(t, theta, b), b));
    }
  }
  BraidedGroup z4 = z4_brace();
  BraidedGroup z4t = trivial_brace(FiniteGroup::cyclic(4));
  check(z4, theta_canonical_twist(z4));
  for (const TwistTriple& t : enumerate_brace_twists(z4, z4t)) check(z4, t);
  for (const BraidedGroup& b : {z4, z4t}) {
    MatchedPair p = pair_from_brace(b);
    for (const ThetaMap& theta : enumerate_thetas(p, 10000000)) check(b, triple_from_theta(p, theta, b));
  }
  return std::to_string(checked) + " twisted braces valid (" + std::to_string(sampled_groups) +
         " groups with more than " + std::to_string(kExhaustiveLimit) + " twists sampled)";
}

std::string c7() {
  for (const BraidedGroup& b : {z4_brace(), trivial_brace(FiniteGroup::symmetric(3)),
                                trivial_brace(FiniteGroup::cyclic(4))}) {
    MatchedPair p = pair_from_brace(b);
    ThetaMap canonical = ThetaMap::canonical(p);
    require(check_theta(p, canonical).passed(), "Theta(x,y)=(e,x) rejected");
    require(triple_from_theta(p, canonical, b) == theta_canonical_twist(b),
            "Theta triple differs from the canonical twist");
    require(triple_from_theta(p, ThetaMap::constant_identity(p), b) == TwistTriple::identity(b.order()),
            "constant Theta is not the identity");
  }
  BraidedGroup source = z4_brace();
  BraidedGroup target = trivial_brace(FiniteGroup::cyclic(4));
  TwistTriple inverse = invert_brace_twist(theta_canonical_twist(source), source);
  MatchedPair p = pair_from_brace(target);
  auto thetas = enumerate_thetas(p, 10000000);
  for (const ThetaMap& theta : thetas)
    require(!(triple_from_theta(p, theta, target) == inverse), "inverse twist has a Theta");
  return "canonical and constant Theta reproduce their twists; none of " +
         std::to_string(thetas.size()) + " Theta on trivial Z4 gives the inverse";
}

std::string c8() {
  std::uint64_t pairs = 0;
  auto same_order = [&](const PairMap& r, const PairMap& twisted) {
    const std::size_t n = r.universe();
    require(oracle::order_by_iteration(n, oracle::wrap(r)) ==
                oracle::order_by_iteration(n, oracle::wrap(twisted)),
            "order changed under a twist");
    ++pairs;
  };
  for (const YbeSolution& s : enumerate_solutions(2)) {
    if (!s.nondegenerate()) continue;
    for (const TwistTriple& t : brute_force_twists(s)) same_order(s.r(), apply_twist(s, t).r());
  }
  YbeSolution s4 = lyubashenko_solution(kSigma, kGamma);
  for (const TwistTriple& t : {s4_twist(), kappa_twist(s4, kSigma), kappa_twist(s4, kGamma),
                               doikou_twist(s4)})
    same_order(s4.r(), apply_twist(s4, t).r());
  for (std::size_t n = 1; n <= 3; ++n)
    for (const YbeSolution& s : enumerate_solutions(n))
      if (s.left_nondegenerate()) same_order(s.r(), apply_twist(s, doikou_twist(s)).r());
  for (const FiniteGroup& g : {FiniteGroup::klein(), FiniteGroup::symmetric(3)}) {
    BraidedGroup b = trivial_brace(g);
    for (const TwistTriple& t : enumerate_brace_twists(b, b)) same_order(b.r(), apply_brace_twist(b, t).r());
  }
  BraidedGroup z4 = z4_brace();
  for (const TwistTriple& t : enumerate_brace_twists(z4, trivial_brace(FiniteGroup::cyclic(4))))
    same_order(z4.r(), apply_brace_twist(z4, t).r());
  return std::to_string(pairs) + " (solution, twist) pairs preserve the order of r";
}

int tool(const std::vector<std::string>& args, const std::string& input, std::string& out) {
  std::istringstream in(input);
  std::ostringstream o, e;
  int code = cli::run(args, in, o, e);
  out = o.str();
  return code;
}

std::string c9() {
  const std::vector<std::vector<std::string>> plain = {
      {"s4-solution"},     {"flip", "3"},           {"cyclic-trivial-brace", "4"},
      {"klein-trivial-brace"}, {"z4-brace"},        {"sym-trivial-brace", "3"},
      {"cyclic-group", "5"}, {"klein-group"},        {"sym-group", "3"},
      {"dihedral-group", "4"}, {"quaternion-group"}, {"s4-twist"},
      {"identity-twist", "3"}, {"lyubashenko", "4", "--sigma", "(0 1)", "--gamma", "(2 3)"}};
  std::size_t fixtures = 0;
  auto round_trip = [&](const std::string& text) {
    std::string line = text.substr(0, text.find('\n'));
    require(cli::serialize(cli::parse_document(std::string_view(line))) == line,
            "round trip changed " + line.substr(0, 40));
    ++fixtures;
  };
  std::string out, s4, z4;
  for (auto args : plain) {
    args.insert(args.begin(), "gen");
    require(tool(args, "", out) == 0, "gen " + args[1] + " failed");
    round_trip(out);
    if (args[1] == "s4-solution") s4 = out;
    if (args[1] == "z4-brace") z4 = out;
  }
  for (const char* derived : {"doikou-twist", "theta-canonical", "brace-pair", "canonical-theta",
                              "constant-theta"}) {
    const std::string& input = std::string(derived) == "doikou-twist" ? s4 : z4;
    require(tool({"gen", derived, "--in", "-"}, input, out) == 0, std::string("gen ") + derived);
    round_trip(out);
  }
  require(tool({"verify", "--in", "-"}, s4, out) == 0, "verify failed");
  round_trip(out);

  require(tool({"verify", "--in", "-"}, "{not json", out) == 2, "bad JSON is not exit 2");
  require(tool({"gen", "nope"}, "", out) == 2, "unknown generator is not exit 2");
  require(tool({"verify", "--in", "-"}, R"({"kind":"solution","n":2,"r":[[0,1],[0,0],[1,0],[1,1]]})",
               out) == 1,
          "non-solution is not exit 1");
  cli::Json theta = cli::Json::parse(
      [&] {
        tool({"gen", "constant-theta", "--in", "-"}, z4, out);
        return out;
      }());
  theta["theta"][1] = cli::Json::array({1, 0});
  require(tool({"matched-check", "--in", "-"}, theta.dump(), out) == 1, "bad Theta is not exit 1");
  require(tool({"enumerate", "thetas", "--in", "-", "--budget", "10"}, z4, out) == 3,
          "budget overrun is not exit 3");
  return std::to_string(fixtures) + " fixtures round-trip; exit codes 1, 2, 3 honoured";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
      {"four-point golden twist", c1}, {"doikou twist gives flip", c2},
      {"groupoid laws", c3},           {"twist counts", c4},
      {"additive-group criterion", c5}, {"twisted braces are braces", c6},
      {"matched-pair Theta suite", c7}, {"order of r is invariant", c8},
      {"command-line contract", c9}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " - " << detail << " (" << secs << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
