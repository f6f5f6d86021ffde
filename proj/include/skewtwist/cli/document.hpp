#pragma once

// JSON documents exchanged by the command-line tool.
//
// Every document is an object with a "kind" field. Elements are integers,
// pairs are stored row-major (x*n+y) and triples at x*n*n+y*n+z. Parsing
// validates the payload with the matching checker, so a loaded Document
// always holds valid structures. Serialization is canonical: sorted keys,
// no whitespace.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "skewtwist/classify.hpp"
#include "skewtwist/matched_pair.hpp"

namespace skewtwist::cli {

using Json = nlohmann::json;

struct Meta {
  std::string name;
  std::string notes;
  bool operator==(const Meta&) const = default;
};

/// A Theta together with the matched pair it is checked against.
struct ThetaDoc {
  MatchedPair pair;
  ThetaMap theta;
  bool operator==(const ThetaDoc&) const = default;
};

struct ReportDoc {
  std::string command;
  bool passed = true;
  std::optional<Violation> violation;
  Json details = Json::object();
  bool operator==(const ReportDoc&) const = default;
};

using Payload = std::variant<YbeSolution, FiniteGroup, BraidedGroup, TwistTriple, IsoFamily,
                             MatchedPair, ThetaDoc, ReportDoc>;

struct Document {
  Payload payload;
  std::optional<Meta> meta;

  std::string_view kind() const;

  template <class T>
  const T* get() const {
    return std::get_if<T>(&payload);
  }
};

/// Throws Error(Format) on malformed JSON or shape errors; checker errors
/// (AxiomFails, BraidFails, ...) propagate with their own kinds.
Document parse_document(const Json& json);
Document parse_document(std::string_view text);

Json to_json(const Document& doc);
/// Compact canonical form, no trailing newline.
std::string serialize(const Document& doc);

}  // namespace skewtwist::cli
