#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "skewtwist/cli/commands.hpp"
#include "skewtwist/cli/document.hpp"
#include "skewtwist/cli/generators.hpp"

using namespace skewtwist;
using namespace skewtwist::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

class Workdir {
 public:
  Workdir() : path_(std::filesystem::temp_directory_path() / "skewtwist_test_cli") {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~Workdir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    auto file = path_ / name;
    std::ofstream(file) << text;
    return file.string();
  }

  std::string gen(const std::string& name, std::vector<std::string> args) const {
    args.insert(args.begin(), "gen");
    Outcome o = run_cli(args);
    REQUIRE_MESSAGE(o.code == 0, o.err);
    return write(name, o.out);
  }

 private:
  std::filesystem::path path_;
};

Json last_json(const std::string& out) { return Json::parse(lines(out).back()); }

}  // namespace

TEST_CASE("every generator fixture round-trips byte for byte") {
  Workdir w;
  std::string s4 = w.gen("s4.json", {"s4-solution"});
  std::string z4 = w.gen("z4.json", {"z4-brace"});
  const std::vector<std::vector<std::string>> fixtures = {
      {"s4-solution"},
      {"lyubashenko", "3", "--sigma", "(0 1 2)", "--gamma", "(0 2 1)"},
      {"flip", "3"},
      {"cyclic-trivial-brace", "4"},
      {"klein-trivial-brace"},
      {"z4-brace"},
      {"sym-trivial-brace", "3"},
      {"cyclic-group", "5"},
      {"klein-group"},
      {"sym-group", "3"},
      {"dihedral-group", "4"},
      {"quaternion-group"},
      {"s4-twist"},
      {"identity-twist", "3"},
      {"doikou-twist", "--in", s4},
      {"kappa-twist", "--in", s4, "--kappa", "(0 1)"},
      {"theta-canonical", "--in", z4},
      {"brace-pair", "--in", z4},
      {"canonical-theta", "--in", z4},
      {"constant-theta", "--in", z4},
  };
  std::set<std::string> covered;
  for (auto args : fixtures) {
    CAPTURE(args.front());
    covered.insert(args.front());
    args.insert(args.begin(), "gen");
    Outcome o = run_cli(args);
    REQUIRE_MESSAGE(o.code == 0, o.err);
    auto text = lines(o.out);
    REQUIRE(text.size() == 1);
    Document doc = parse_document(std::string_view(text[0]));
    CHECK(serialize(doc) == text[0]);
    CHECK(serialize(parse_document(to_json(doc))) == text[0]);
  }
  CHECK(covered.size() == generator_names().size());

  // A report document too.
  Outcome v = run_cli({"verify", "--in", s4});
  CHECK(serialize(parse_document(std::string_view(lines(v.out)[0]))) == lines(v.out)[0]);
}

TEST_CASE("documents keep their metadata") {
  Outcome o = run_cli({"gen", "s4-solution"});
  Json j = last_json(o.out);
  CHECK(j["kind"] == "solution");
  CHECK(j["n"] == 4);
  CHECK(j["meta"]["name"] == "s4-solution");
  CHECK(j["r"].size() == 16);
  CHECK(j["r"][2 * 4 + 1] == Json::array({0, 3}));
}

TEST_CASE("the four-point twist through the tool") {
  Workdir w;
  std::string s4 = w.gen("s4.json", {"s4-solution"});
  std::string t = w.gen("t.json", {"s4-twist"});
  Outcome twisted = run_cli({"twist", "--in", s4, "--twist", t});
  REQUIRE(twisted.code == 0);
  Document doc = parse_document(std::string_view(lines(twisted.out)[0]));
  const auto* s = doc.get<YbeSolution>();
  REQUIRE(s);
  Permutation sigma = Permutation::from_cycles("(0 1)", 4);
  Permutation gamma = Permutation::from_cycles("(2 3)", 4);
  CHECK(s->r() == PairMap::from_function(4, [&](Elem x, Elem y) { return Pair{gamma(y), sigma(x)}; }));

  std::string target = w.write("target.json", twisted.out);
  Outcome inv = run_cli({"invert", "--twist", t, "--base", s4});
  REQUIRE(inv.code == 0);
  std::string inverse = w.write("inv.json", inv.out);
  Outcome back = run_cli({"twist", "--in", target, "--twist", inverse});
  REQUIRE(back.code == 0);
  std::ifstream original(s4);
  std::string first_line;
  std::getline(original, first_line);
  Document orig = parse_document(std::string_view(first_line));
  CHECK(serialize(parse_document(std::string_view(lines(back.out)[0]))) ==
        serialize(Document{orig.payload, std::nullopt}));

  CHECK(run_cli({"verify", "--in", t, "--base", s4}).code == 0);
}

TEST_CASE("composing with the identity is byte-identical") {
  Workdir w;
  std::string s4 = w.gen("s4.json", {"s4-solution"});
  std::string t = w.gen("t.json", {"s4-twist"});
  std::string id = w.gen("id.json", {"identity-twist", "4"});
  Outcome plain = run_cli({"gen", "s4-twist"});
  Document expected = parse_document(std::string_view(lines(plain.out)[0]));
  const std::string want = serialize(Document{expected.payload, std::nullopt});
  Outcome left = run_cli({"compose", "--outer", id, "--inner", t, "--base", s4});
  REQUIRE(left.code == 0);
  CHECK(lines(left.out)[0] == want);
  Outcome right = run_cli({"compose", "--outer", t, "--inner", id, "--base", s4});
  REQUIRE(right.code == 0);
  CHECK(lines(right.out)[0] == want);
}

TEST_CASE("stdin is accepted as -") {
  Outcome gen = run_cli({"gen", "flip", "3"});
  Outcome v = run_cli({"verify", "--in", "-"}, gen.out);
  CHECK(v.code == 0);
  Json j = last_json(v.out);
  CHECK(j["kind"] == "report");
  CHECK(j["passed"] == true);
  CHECK(j["details"]["involutive"] == true);
}

TEST_CASE("exit codes") {
  Workdir w;
  std::string s4 = w.gen("s4.json", {"s4-solution"});
  std::string z4 = w.gen("z4.json", {"z4-brace"});

  SUBCASE("axiom violations exit 1 with a report") {
    // The four-point twist with two Phi entries swapped.
    Json twist = Json::parse(lines(run_cli({"gen", "s4-twist"}).out)[0]);
    std::swap(twist["Phi"][0], twist["Phi"][1]);
    std::string t = w.write("t.json", twist.dump());
    Outcome o = run_cli({"verify", "--in", t, "--base", s4});
    CHECK(o.code == 1);
    Json j = last_json(o.out);
    CHECK(j["passed"] == false);
    CHECK(j["violation"]["axiom"] == "T1");
    CHECK(j["violation"]["witness"] == Json::array({0, 0, 0}));
    Outcome applied = run_cli({"twist", "--in", s4, "--twist", t});
    CHECK(applied.code == 1);
    CHECK(applied.err.find("InvalidTwist") != std::string::npos);

    // A non-solution table.
    std::string bad = w.write("bad.json", R"({"kind":"solution","n":2,"r":[[0,1],[0,0],[1,0],[1,1]]})");
    Outcome b = run_cli({"verify", "--in", bad});
    CHECK(b.code == 1);
    CHECK(b.err.find("BraidFails") != std::string::npos);

    // A theta that breaks its unit condition.
    Json theta = Json::parse(lines(run_cli({"gen", "constant-theta", "--in", z4}).out)[0]);
    theta["theta"][1] = Json::array({1, 0});
    std::string bad_theta = w.write("theta.json", theta.dump());
    Outcome th = run_cli({"matched-check", "--in", bad_theta});
    CHECK(th.code == 1);
    CHECK(th.err.find("InvalidTheta") != std::string::npos);
  }
  SUBCASE("format errors exit 2") {
    CHECK(run_cli({"verify", "--in", w.write("junk.json", "{not json")}).code == 2);
    CHECK(run_cli({"verify", "--in", w.write("kind.json", R"({"kind":"banana"})")}).code == 2);
    CHECK(run_cli({"verify", "--in",
                   w.write("short.json", R"({"kind":"solution","n":2,"r":[[0,0]]})")})
              .code == 2);
    CHECK(run_cli({"verify", "--in",
                   w.write("range.json",
                           R"({"kind":"solution","n":1,"r":[[0,5]]})")})
              .code == 2);
    CHECK(run_cli({"verify", "--in", "/nonexistent/file.json"}).code == 2);
    CHECK(run_cli({"gen", "no-such-generator"}).code == 2);
    CHECK(run_cli({"gen", "flip", "zero"}).code == 2);
    CHECK(run_cli({"gen", "lyubashenko", "3", "--sigma", "(0 1)", "--gamma", "(1 2)"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"verify", "--in", s4, "--format", "yaml"}).code == 2);
    CHECK(run_cli({"twist", "--in", s4, "--twist", s4}).code == 2);
  }
  SUBCASE("budget overruns exit 3") {
    CHECK(run_cli({"enumerate", "thetas", "--in", z4, "--budget", "10"}).code == 3);
    std::string k = w.gen("k.json", {"klein-trivial-brace"});
    CHECK(run_cli({"enumerate", "families", "--from", k, "--to", k, "--budget", "5"}).code == 3);
    CHECK(run_cli({"enumerate", "twists", "--from", k, "--to", k, "--budget", "5"}).code == 3);
  }
  SUBCASE("help exits 0") { CHECK(run_cli({"--help"}).code == 0); }
}

TEST_CASE("enumeration streams end in a count") {
  Workdir w;
  std::string z3 = w.gen("z3.json", {"cyclic-trivial-brace", "3"});
  std::string z4 = w.gen("z4t.json", {"cyclic-trivial-brace", "4"});
  std::string k = w.gen("k.json", {"klein-trivial-brace"});

  Outcome t3 = run_cli({"enumerate", "twists", "--from", z3, "--to", z3});
  REQUIRE(t3.code == 0);
  auto l = lines(t3.out);
  CHECK(l.size() == 3);
  CHECK(last_json(t3.out)["details"]["count"] == 2);
  for (std::size_t i = 0; i + 1 < l.size(); ++i) CHECK(Json::parse(l[i])["kind"] == "twist");

  Outcome none = run_cli({"enumerate", "twists", "--from", z4, "--to", k});
  REQUIRE(none.code == 0);
  CHECK(lines(none.out).size() == 1);
  CHECK(last_json(none.out)["details"]["count"] == 0);

  Outcome fam = run_cli({"enumerate", "families", "--from", k, "--to", k});
  REQUIRE(fam.code == 0);
  CHECK(last_json(fam.out)["details"]["count"] == 48);
  CHECK(lines(fam.out).size() == 49);

  Outcome sols = run_cli({"enumerate", "solutions", "2"});
  REQUIRE(sols.code == 0);
  CHECK(last_json(sols.out)["details"]["count"] == enumerate_solutions(2).size());

  Outcome th = run_cli({"enumerate", "thetas", "--in", z3});
  REQUIRE(th.code == 0);
  CHECK(last_json(th.out)["details"]["count"] == 27);
}

TEST_CASE("classify") {
  Workdir w;
  std::string z4 = w.gen("z4.json", {"z4-brace"});
  std::string z4t = w.gen("z4t.json", {"cyclic-trivial-brace", "4"});
  std::string k = w.gen("k.json", {"klein-trivial-brace"});

  Outcome o = run_cli({"classify", "--from", z4, "--to", z4t});
  REQUIRE(o.code == 0);
  Json d = last_json(o.out)["details"];
  CHECK(d["related"] == true);
  CHECK(d["count"] == 4);
  CHECK(d["twists"].size() == 4);
  CHECK(d["any_twist_form"] == true);

  Outcome self = run_cli({"classify", "--from", z4, "--to", z4});
  CHECK(last_json(self.out)["details"]["related"] == true);

  Outcome no = run_cli({"classify", "--from", z4t, "--to", k});
  REQUIRE(no.code == 0);
  CHECK(last_json(no.out)["details"]["related"] == false);
  CHECK(last_json(no.out)["details"]["count"] == 0);
}

TEST_CASE("theta-apply builds the canonical twist") {
  Workdir w;
  std::string z4 = w.gen("z4.json", {"z4-brace"});
  std::string theta = w.gen("theta.json", {"canonical-theta", "--in", z4});
  Outcome t = run_cli({"theta-apply", "--in", theta, "--base", z4});
  REQUIRE(t.code == 0);
  Outcome canonical = run_cli({"gen", "theta-canonical", "--in", z4});
  Document a = parse_document(std::string_view(lines(t.out)[0]));
  Document b = parse_document(std::string_view(lines(canonical.out)[0]));
  CHECK(*a.get<TwistTriple>() == *b.get<TwistTriple>());

  Outcome applied = run_cli({"theta-apply", "--in", theta, "--base", z4, "--apply"});
  REQUIRE(applied.code == 0);
  Document brace = parse_document(std::string_view(lines(applied.out)[0]));
  CHECK(*brace.get<BraidedGroup>() == trivial_brace(FiniteGroup::cyclic(4)));
}

TEST_CASE("--out writes to a file") {
  Workdir w;
  std::string path = w.write("out.json", "");
  Outcome o = run_cli({"gen", "flip", "2", "--out", path});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  CHECK(parse_document(std::string_view(line)).kind() == "solution");
}
