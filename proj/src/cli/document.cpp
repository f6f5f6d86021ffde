#include "skewtwist/cli/document.hpp"

namespace skewtwist::cli {

namespace {

[[noreturn]] void format_error(const std::string& what) { throw Error(ErrorKind::Format, what); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) format_error(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& value = field(j, key);
  if (!value.is_array()) format_error(std::string("field \"") + key + "\" must be an array");
  return value;
}

Elem elem(const Json& j, std::size_t bound) {
  if (!j.is_number_unsigned()) format_error("expected a non-negative integer, got " + j.dump());
  auto value = j.get<std::uint64_t>();
  if (value >= bound)
    format_error("element " + std::to_string(value) + " out of range for size " +
                 std::to_string(bound));
  return static_cast<Elem>(value);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& value = field(j, key);
  if (!value.is_number_unsigned()) format_error(std::string("field \"") + key + "\" must be a size");
  auto n = value.get<std::uint64_t>();
  if (n > 4096) format_error("size " + std::to_string(n) + " is unreasonably large");
  return static_cast<std::size_t>(n);
}

std::vector<Elem> elems(const Json& j, std::size_t count, std::size_t bound) {
  if (!j.is_array() || j.size() != count)
    format_error("expected an array of " + std::to_string(count) + " elements");
  std::vector<Elem> out;
  out.reserve(count);
  for (const Json& v : j) out.push_back(elem(v, bound));
  return out;
}

PairMap pair_map(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n * n)
    format_error("expected " + std::to_string(n * n) + " pairs");
  std::vector<Pair> table;
  table.reserve(n * n);
  for (const Json& v : j) {
    auto e = elems(v, 2, n);
    table.push_back({e[0], e[1]});
  }
  return PairMap(n, std::move(table));
}

TripleMap triple_map(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n * n * n)
    format_error("expected " + std::to_string(n * n * n) + " triples");
  std::vector<Triple> table;
  table.reserve(n * n * n);
  for (const Json& v : j) {
    auto e = elems(v, 3, n);
    table.push_back({e[0], e[1], e[2]});
  }
  return TripleMap(n, std::move(table));
}

Json pairs_json(const PairMap& f) {
  Json out = Json::array();
  for (Pair p : f.table()) out.push_back({p.first, p.second});
  return out;
}

Json triples_json(const TripleMap& f) {
  Json out = Json::array();
  for (Triple t : f.table()) out.push_back({t.first, t.second, t.third});
  return out;
}

FiniteGroup group_body(const Json& j) {
  const std::size_t n = size_field(j, "n");
  Elem e = elem(field(j, "identity"), std::max<std::size_t>(n, 1));
  return FiniteGroup(n, elems(array_field(j, "mul"), n * n, n), e);
}

Json group_json(const FiniteGroup& g) {
  return {{"n", g.order()},
          {"identity", g.identity()},
          {"mul", std::vector<Elem>(g.table().begin(), g.table().end())}};
}

MatchedPair pair_body(const Json& j) {
  FiniteGroup plus = group_body(field(j, "plus"));
  FiniteGroup minus = group_body(field(j, "minus"));
  const std::size_t cells = plus.order() * minus.order();
  return check_matched_pair(plus, minus, elems(array_field(j, "left"), cells, minus.order()),
                            elems(array_field(j, "right"), cells, plus.order()));
}

Json pair_json(const MatchedPair& p) {
  return {{"plus", group_json(p.plus())},
          {"minus", group_json(p.minus())},
          {"left", std::vector<Elem>(p.left_table().begin(), p.left_table().end())},
          {"right", std::vector<Elem>(p.right_table().begin(), p.right_table().end())}};
}

Json violation_json(const Violation& v) { return {{"axiom", v.axiom}, {"witness", v.witness}}; }

Payload parse_payload(const std::string& kind, const Json& j) {
  if (kind == "solution") {
    const std::size_t n = size_field(j, "n");
    return check_solution(n, pair_map(field(j, "r"), n));
  }
  if (kind == "group") return group_body(j);
  if (kind == "brace") {
    FiniteGroup g = group_body(j);
    return check_braided_group(g, pair_map(field(j, "r"), g.order()));
  }
  if (kind == "twist") {
    const std::size_t n = size_field(j, "n");
    return TwistTriple(pair_map(field(j, "F"), n), triple_map(field(j, "Phi"), n),
                       triple_map(field(j, "Psi"), n));
  }
  if (kind == "family") {
    IsoFamily fam{group_body(field(j, "source")), group_body(field(j, "target")), {}};
    const std::size_t n = fam.source.order();
    const Json& maps = array_field(j, "maps");
    if (maps.size() != n) format_error("a family needs one map per element");
    for (const Json& m : maps) fam.maps.emplace_back(elems(m, n, n));
    if (Report report = check_family(fam); !report)
      throw Error(ErrorKind::InvalidFamily, "not an isomorphism family", *report.violation);
    return fam;
  }
  if (kind == "matched-pair") return pair_body(j);
  if (kind == "theta") {
    ThetaDoc doc{pair_body(field(j, "pair")), {}};
    const std::size_t n = doc.pair.minus().order();
    const Json& table = array_field(j, "theta");
    if (table.size() != n * n) format_error("theta needs one entry per pair of G-");
    doc.theta.n = n;
    for (const Json& v : table) {
      auto e = elems(v, 2, doc.pair.plus().order());
      doc.theta.table.push_back({e[0], e[1]});
    }
    if (Report report = check_theta(doc.pair, doc.theta); !report)
      throw Error(ErrorKind::InvalidTheta, "theta fails its conditions", *report.violation);
    return doc;
  }
  if (kind == "report") {
    ReportDoc r;
    const Json& command = field(j, "command");
    const Json& passed = field(j, "passed");
    if (!command.is_string() || !passed.is_boolean()) format_error("malformed report");
    r.command = command.get<std::string>();
    r.passed = passed.get<bool>();
    if (auto it = j.find("violation"); it != j.end()) {
      const Json& axiom = field(*it, "axiom");
      if (!axiom.is_string()) format_error("malformed violation");
      Violation v{axiom.get<std::string>(), {}};
      for (const Json& w : array_field(*it, "witness")) v.witness.push_back(elem(w, 1u << 31));
      r.violation = std::move(v);
    }
    if (auto it = j.find("details"); it != j.end()) r.details = *it;
    return r;
  }
  format_error("unknown document kind \"" + kind + "\"");
}

}  // namespace

std::string_view Document::kind() const {
  static constexpr std::string_view names[] = {"solution", "group",        "brace", "twist",
                                               "family",   "matched-pair", "theta", "report"};
  return names[payload.index()];
}

Document parse_document(const Json& json) {
  if (!json.is_object()) format_error("a document must be a JSON object");
  const Json& kind = field(json, "kind");
  if (!kind.is_string()) format_error("\"kind\" must be a string");
  Document doc;
  try {
    doc.payload = parse_payload(kind.get<std::string>(), json);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SizeMismatch || e.kind() == ErrorKind::OutOfRange)
      format_error(e.what());
    throw;
  } catch (const Json::exception& e) {
    format_error(e.what());
  }
  if (auto it = json.find("meta"); it != json.end()) {
    if (!it->is_object()) format_error("\"meta\" must be an object");
    Meta meta;
    if (auto name = it->find("name"); name != it->end() && name->is_string()) meta.name = *name;
    if (auto notes = it->find("notes"); notes != it->end() && notes->is_string())
      meta.notes = *notes;
    doc.meta = std::move(meta);
  }
  return doc;
}

Document parse_document(std::string_view text) {
  Json json = Json::parse(text.begin(), text.end(), nullptr, false);
  if (json.is_discarded()) format_error("input is not valid JSON");
  return parse_document(json);
}

Json to_json(const Document& doc) {
  Json j = std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, YbeSolution>) {
          return {{"n", v.size()}, {"r", pairs_json(v.r())}};
        } else if constexpr (std::is_same_v<T, FiniteGroup>) {
          return group_json(v);
        } else if constexpr (std::is_same_v<T, BraidedGroup>) {
          Json out = group_json(v.group());
          out["r"] = pairs_json(v.r());
          return out;
        } else if constexpr (std::is_same_v<T, TwistTriple>) {
          return {{"n", v.size()},
                  {"F", pairs_json(v.F)},
                  {"Phi", triples_json(v.Phi)},
                  {"Psi", triples_json(v.Psi)}};
        } else if constexpr (std::is_same_v<T, IsoFamily>) {
          Json maps = Json::array();
          for (const Permutation& f : v.maps)
            maps.push_back(std::vector<Elem>(f.images().begin(), f.images().end()));
          return {{"source", group_json(v.source)},
                  {"target", group_json(v.target)},
                  {"maps", maps}};
        } else if constexpr (std::is_same_v<T, MatchedPair>) {
          return pair_json(v);
        } else if constexpr (std::is_same_v<T, ThetaDoc>) {
          Json table = Json::array();
          for (Pair p : v.theta.table) table.push_back({p.first, p.second});
          return {{"pair", pair_json(v.pair)}, {"theta", table}};
        } else {
          Json out = {{"command", v.command}, {"passed", v.passed}, {"details", v.details}};
          if (v.violation) out["violation"] = violation_json(*v.violation);
          return out;
        }
      },
      doc.payload);
  j["kind"] = std::string(doc.kind());
  if (doc.meta) j["meta"] = {{"name", doc.meta->name}, {"notes", doc.meta->notes}};
  return j;
}

std::string serialize(const Document& doc) { return to_json(doc).dump(); }

}  // namespace skewtwist::cli
