#include "skewtwist/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skewtwist/cli/document.hpp"
#include "skewtwist/cli/generators.hpp"

namespace skewtwist::cli {

namespace {

constexpr std::uint64_t kDefaultBudget = 10'000'000;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SKEWTWIST_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return value;
  }
  return kDefaultBudget;
}

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Document load(const std::string& path) {
    if (path.empty()) throw Error(ErrorKind::Format, "missing input file");
    std::string text;
    if (path == "-") {
      if (stdin_used_) throw Error(ErrorKind::Format, "stdin can only be read once");
      stdin_used_ = true;
      std::ostringstream buffer;
      buffer << in_.rdbuf();
      text = buffer.str();
    } else {
      std::ifstream file(path);
      if (!file) throw Error(ErrorKind::Format, "cannot open " + path);
      std::ostringstream buffer;
      buffer << file.rdbuf();
      text = buffer.str();
    }
    return parse_document(std::string_view(text));
  }

  void open_output(const std::string& path) {
    if (path == "-" || path.empty()) return;
    file_.open(path);
    if (!file_) throw Error(ErrorKind::Format, "cannot write " + path);
  }

  std::ostream& sink() { return file_.is_open() ? static_cast<std::ostream&>(file_) : out_; }

  void emit(const Document& doc) { sink() << serialize(doc) << '\n'; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ofstream file_;
  bool stdin_used_ = false;
};

Document report(std::string command, Report result, Json details = Json::object()) {
  ReportDoc r;
  r.command = std::move(command);
  r.passed = result.passed();
  r.violation = result.violation;
  r.details = std::move(details);
  return Document{std::move(r), std::nullopt};
}

template <class T>
const T& expect(const Document& doc, const char* kind, const char* role) {
  const T* value = doc.get<T>();
  if (!value)
    throw Error(ErrorKind::Format, std::string(role) + " must be a " + kind + " document, got " +
                                       std::string(doc.kind()));
  return *value;
}

const FiniteGroup& additive_group(const Document& doc, const char* role) {
  if (const auto* g = doc.get<FiniteGroup>()) return *g;
  if (const auto* b = doc.get<BraidedGroup>()) return b->star();
  throw Error(ErrorKind::Format, std::string(role) + " must be a group or brace document");
}

MatchedPair pair_of(const Document& doc) {
  if (const auto* p = doc.get<MatchedPair>()) return *p;
  if (const auto* b = doc.get<BraidedGroup>()) return pair_from_brace(*b);
  if (const auto* t = doc.get<ThetaDoc>()) return t->pair;
  throw Error(ErrorKind::Format, "expected a matched-pair, brace or theta document");
}

Json describe(const Document& doc) {
  Json d = {{"kind", std::string(doc.kind())}};
  if (const auto* s = doc.get<YbeSolution>()) {
    d["n"] = s->size();
    d["involutive"] = s->involutive();
    d["left_nondegenerate"] = s->left_nondegenerate();
    d["right_nondegenerate"] = s->right_nondegenerate();
    d["order"] = permutation_order(s->r());
  } else if (const auto* g = doc.get<FiniteGroup>()) {
    d["n"] = g->order();
    d["abelian"] = g->is_abelian();
  } else if (const auto* b = doc.get<BraidedGroup>()) {
    d["n"] = b->order();
    d["trivial"] = b->is_trivial();
    d["involutive"] = b->solution().involutive();
    d["order"] = permutation_order(b->r());
  } else if (const auto* t = doc.get<TwistTriple>()) {
    d["n"] = t->size();
  } else if (const auto* th = doc.get<ThetaDoc>()) {
    d["f_theta_bijective"] = f_theta(th->pair, th->theta).bijective();
  }
  return d;
}

Json twist_summary(const TwistTriple& t) {
  return to_json(Document{t, std::nullopt});
}

struct Options {
  std::string out = "-";
  std::string format = "json";
  std::uint64_t budget = default_budget();
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Output file, - for stdout");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json"}));
  cmd->add_option("--budget", o.budget, "Search budget (nodes or results)");
}

void check_budget(std::uint64_t count, std::uint64_t budget, const char* what) {
  if (count > budget)
    throw Error(ErrorKind::TooLarge, std::string(what) + ": " + std::to_string(count) +
                                         " results exceed the budget of " +
                                         std::to_string(budget));
}

}  // namespace

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
      return kBudgetExceeded;
    case ErrorKind::Format:
    case ErrorKind::SizeMismatch:
    case ErrorKind::OutOfRange:
    case ErrorKind::BadParams:
    case ErrorKind::UnknownGenerator:
      return kFormatError;
    default:
      return kAxiomViolation;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Twists of set-theoretic braid solutions and skew braces", "skewtwist"};
  app.require_subcommand(1);
  Options o;

  // gen
  std::string gen_name, gen_in;
  std::vector<std::string> gen_args;
  GenParams gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a named structure");
  gen_cmd->add_option("name", gen_name, "Generator name")->required();
  gen_cmd->add_option("params", gen_args, "Generator parameters");
  gen_cmd->add_option("--in", gen_in, "Input document for derived generators");
  gen_cmd->add_option("--sigma", gen.sigma, "Permutation in cycle notation");
  gen_cmd->add_option("--gamma", gen.gamma, "Permutation in cycle notation");
  gen_cmd->add_option("--kappa", gen.kappa, "Permutation in cycle notation");
  add_common(gen_cmd, o);

  // verify
  std::string verify_in, verify_base;
  auto* verify_cmd = app.add_subcommand("verify", "Validate a document");
  verify_cmd->add_option("--in", verify_in, "Document to validate")->required();
  verify_cmd->add_option("--base", verify_base, "Solution or brace a twist is checked on");
  add_common(verify_cmd, o);

  // twist
  std::string twist_in, twist_twist;
  auto* twist_cmd = app.add_subcommand("twist", "Apply a twist to a solution or brace");
  twist_cmd->add_option("--in", twist_in, "Solution or brace")->required();
  twist_cmd->add_option("--twist", twist_twist, "Twist document")->required();
  add_common(twist_cmd, o);

  // compose
  std::string compose_outer, compose_inner, compose_base;
  auto* compose_cmd = app.add_subcommand("compose", "Compose two twists");
  compose_cmd->add_option("--outer", compose_outer, "Twist applied second")->required();
  compose_cmd->add_option("--inner", compose_inner, "Twist applied first")->required();
  compose_cmd->add_option("--base", compose_base, "Solution or brace of the inner twist")
      ->required();
  add_common(compose_cmd, o);

  // invert
  std::string invert_in, invert_base;
  auto* invert_cmd = app.add_subcommand("invert", "Invert a twist");
  invert_cmd->add_option("--twist", invert_in, "Twist document")->required();
  invert_cmd->add_option("--base", invert_base, "Solution or brace it acts on")->required();
  add_common(invert_cmd, o);

  // enumerate
  std::string enum_what, enum_in, enum_from, enum_to;
  std::vector<std::string> enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "Stream structures, one JSON object per line");
  enum_cmd->add_option("what", enum_what, "twists, families, thetas, brute-force or solutions")
      ->required()
      ->check(CLI::IsMember({"twists", "families", "thetas", "brute-force", "solutions"}));
  enum_cmd->add_option("params", enum_args, "Size for solutions");
  enum_cmd->add_option("--in", enum_in, "Input for thetas and brute-force");
  enum_cmd->add_option("--from", enum_from, "Source brace or group");
  enum_cmd->add_option("--to", enum_to, "Target brace or group");
  add_common(enum_cmd, o);

  // classify
  std::string cls_from, cls_to;
  auto* cls_cmd = app.add_subcommand("classify", "Decide twist-relatedness of two braces");
  cls_cmd->add_option("--from", cls_from, "Source brace")->required();
  cls_cmd->add_option("--to", cls_to, "Target brace")->required();
  add_common(cls_cmd, o);

  // matched-check
  std::string mc_in;
  auto* mc_cmd = app.add_subcommand("matched-check", "Validate a matched pair or theta");
  mc_cmd->add_option("--in", mc_in, "Matched-pair, brace or theta document")->required();
  add_common(mc_cmd, o);

  // theta-apply
  std::string ta_in, ta_base;
  bool ta_apply = false;
  auto* ta_cmd = app.add_subcommand("theta-apply", "Build the twist induced by a theta");
  ta_cmd->add_option("--in", ta_in, "Theta document")->required();
  ta_cmd->add_option("--base", ta_base, "Brace on G-")->required();
  ta_cmd->add_flag("--apply", ta_apply, "Emit the twisted brace instead of the twist");
  add_common(ta_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kFormatError;
  }

  Io io(in, out);
  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (gen_cmd->parsed()) {
      gen.args = gen_args;
      if (!gen_in.empty()) gen.input = io.load(gen_in);
      Document doc = generate(gen_name, gen);
      io.open_output(o.out);
      io.emit(doc);
      return kOk;
    }

    if (verify_cmd->parsed()) {
      Document doc = io.load(verify_in);
      Report result;
      Json details = describe(doc);
      if (!verify_base.empty()) {
        const auto& t = expect<TwistTriple>(doc, "twist", "--in");
        Document base = io.load(verify_base);
        if (const auto* s = base.get<YbeSolution>())
          result = verify_twist(*s, t);
        else
          result = verify_brace_twist(expect<BraidedGroup>(base, "solution or brace", "--base"),
                                      t);
        details["base"] = std::string(base.kind());
      }
      io.open_output(o.out);
      io.emit(report("verify", result, details));
      if (!result) {
        err << "verify: " << result.violation->to_string() << '\n';
        return kAxiomViolation;
      }
      err << "verify: " << doc.kind() << " ok\n";
      return kOk;
    }

    if (twist_cmd->parsed()) {
      Document base = io.load(twist_in);
      Document twist = io.load(twist_twist);
      const auto& t = expect<TwistTriple>(twist, "twist", "--twist");
      Document result;
      if (const auto* s = base.get<YbeSolution>())
        result.payload = apply_twist(*s, t);
      else
        result.payload = apply_brace_twist(expect<BraidedGroup>(base, "solution or brace", "--in"), t);
      io.open_output(o.out);
      io.emit(result);
      err << "twist: produced a " << result.kind() << '\n';
      return kOk;
    }

    if (compose_cmd->parsed()) {
      Document outer = io.load(compose_outer);
      Document inner = io.load(compose_inner);
      Document base = io.load(compose_base);
      const auto& t2 = expect<TwistTriple>(outer, "twist", "--outer");
      const auto& t1 = expect<TwistTriple>(inner, "twist", "--inner");
      Document result;
      if (const auto* s = base.get<YbeSolution>())
        result.payload = compose_twists(t2, t1, *s);
      else
        result.payload = compose_brace_twists(
            t2, t1, expect<BraidedGroup>(base, "solution or brace", "--base"));
      io.open_output(o.out);
      io.emit(result);
      return kOk;
    }

    if (invert_cmd->parsed()) {
      Document twist = io.load(invert_in);
      Document base = io.load(invert_base);
      const auto& t = expect<TwistTriple>(twist, "twist", "--twist");
      Document result;
      if (const auto* s = base.get<YbeSolution>())
        result.payload = invert_twist(t, *s);
      else
        result.payload =
            invert_brace_twist(t, expect<BraidedGroup>(base, "solution or brace", "--base"));
      io.open_output(o.out);
      io.emit(result);
      return kOk;
    }

    if (enum_cmd->parsed()) {
      std::uint64_t count = 0;
      if (enum_what == "twists") {
        Document from = io.load(enum_from);
        Document to = io.load(enum_to);
        const auto& b1 = expect<BraidedGroup>(from, "brace", "--from");
        const auto& b2 = expect<BraidedGroup>(to, "brace", "--to");
        check_budget(count_twists(b1, b2), o.budget, "twists");
        io.open_output(o.out);
        for_each_brace_twist(b1, b2, [&](const TwistTriple& t, const IsoFamily&) {
          io.emit(Document{t, std::nullopt});
          ++count;
          return true;
        });
      } else if (enum_what == "families") {
        Document from = io.load(enum_from);
        Document to = io.load(enum_to);
        const FiniteGroup& g1 = additive_group(from, "--from");
        const FiniteGroup& g2 = additive_group(to, "--to");
        io.open_output(o.out);
        for_each_family(g1, g2, [&](const IsoFamily& fam) {
          check_budget(count + 1, o.budget, "families");
          io.emit(Document{fam, std::nullopt});
          ++count;
          return true;
        });
      } else if (enum_what == "thetas") {
        MatchedPair pair = pair_of(io.load(enum_in));
        auto thetas = enumerate_thetas(pair, o.budget);
        io.open_output(o.out);
        for (auto& theta : thetas) {
          io.emit(Document{ThetaDoc{pair, std::move(theta)}, std::nullopt});
          ++count;
        }
      } else if (enum_what == "brute-force") {
        Document input = io.load(enum_in);
        const auto& s = expect<YbeSolution>(input, "solution", "--in");
        auto twists = brute_force_twists(s);
        io.open_output(o.out);
        for (auto& t : twists) {
          io.emit(Document{std::move(t), std::nullopt});
          ++count;
        }
      } else {
        if (enum_args.empty()) throw Error(ErrorKind::BadParams, "solutions needs a size");
        const std::string& s = enum_args.front();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
          throw Error(ErrorKind::BadParams, "bad size \"" + s + "\"");
        auto solutions = enumerate_solutions(std::stoul(s));
        io.open_output(o.out);
        for (auto& sol : solutions) {
          io.emit(Document{std::move(sol), std::nullopt});
          ++count;
        }
      }
      io.emit(report("enumerate", Report::pass(), {{"what", enum_what}, {"count", count}}));
      err << "enumerate " << enum_what << ": count=" << count << '\n';
      return kOk;
    }

    if (cls_cmd->parsed()) {
      Document from = io.load(cls_from);
      Document to = io.load(cls_to);
      const auto& b1 = expect<BraidedGroup>(from, "brace", "--from");
      const auto& b2 = expect<BraidedGroup>(to, "brace", "--to");
      const bool related = are_twist_related(b1, b2);
      const std::uint64_t count = count_twists(b1, b2);
      check_budget(count, o.budget, "classify");
      Json details = {{"related", related}, {"count", count}};
      Json twists = Json::array();
      bool all_match = true;
      if (related) {
        details["theta_source"] = twist_summary(theta_canonical_twist(b1));
        details["theta_target_inverse"] =
            twist_summary(invert_brace_twist(theta_canonical_twist(b2), b2));
        for_each_brace_twist(b1, b2, [&](const TwistTriple& t, const IsoFamily& fam) {
          Json maps = Json::array();
          for (const Permutation& f : fam.maps)
            maps.push_back(std::vector<Elem>(f.images().begin(), f.images().end()));
          const bool form = matches_any_twist_form(b1, b2, fam, t);
          all_match = all_match && form;
          twists.push_back({{"family", maps}, {"any_twist_form", form}});
          return true;
        });
      }
      details["twists"] = twists;
      details["any_twist_form"] = all_match;
      io.open_output(o.out);
      io.emit(report("classify", all_match ? Report::pass()
                                           : Report::fail("any-twist-form", {}),
                     details));
      err << "classify: related=" << (related ? "true" : "false") << " count=" << count << '\n';
      return all_match ? kOk : kAxiomViolation;
    }

    if (mc_cmd->parsed()) {
      Document doc = io.load(mc_in);
      MatchedPair pair = pair_of(doc);
      Json details = describe(doc);
      details["plus_order"] = pair.plus().order();
      details["minus_order"] = pair.minus().order();
      io.open_output(o.out);
      io.emit(report("matched-check", Report::pass(), details));
      err << "matched-check: " << doc.kind() << " ok\n";
      return kOk;
    }

    if (ta_cmd->parsed()) {
      Document theta_doc = io.load(ta_in);
      const auto& theta = expect<ThetaDoc>(theta_doc, "theta", "--in");
      Document base_doc = io.load(ta_base);
      const auto& base = expect<BraidedGroup>(base_doc, "brace", "--base");
      TwistTriple t = triple_from_theta(theta.pair, theta.theta, base);
      io.open_output(o.out);
      if (ta_apply)
        io.emit(Document{apply_brace_twist(base, t), std::nullopt});
      else
        io.emit(Document{std::move(t), std::nullopt});
      return kOk;
    }
  } catch (const Error& e) {
    const ExitCode code = exit_code_for(e.kind());
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    if (code == kAxiomViolation) {
      Report failed = e.violation() ? Report{e.violation()} : Report::fail(to_string(e.kind()), {});
      io.emit(report(command, failed, {{"error", to_string(e.kind())}}));
    }
    return code;
  }
  return kFormatError;
}

}  // namespace skewtwist::cli
