#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewtwist {

using Elem = std::uint32_t;

/// A failed axiom together with the (lexicographically smallest) input that
/// breaks it.
struct Violation {
  std::string axiom;
  std::vector<Elem> witness;

  std::string to_string() const;
  bool operator==(const Violation&) const = default;
};

/// Outcome of a non-throwing check. An empty report means every axiom held.
struct Report {
  std::optional<Violation> violation;

  bool passed() const { return !violation.has_value(); }
  explicit operator bool() const { return passed(); }

  static Report pass() { return {}; }
  static Report fail(std::string axiom, std::vector<Elem> witness) {
    return Report{Violation{std::move(axiom), std::move(witness)}};
  }
};

enum class ErrorKind {
  SizeMismatch,
  OutOfRange,
  NotBijective,
  BraidFails,
  AxiomFails,
  InvalidTwist,
  Degenerate,
  ShapeMismatch,
  NonCommuting,
  TooLarge,
  NotABrace,
  NotClassifiable,
  InvalidFamily,
  InvalidTheta,
  BadParams,
  UnknownGenerator,
  Format,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Error(ErrorKind kind, const std::string& what, Violation violation)
      : std::runtime_error(what + ": " + violation.to_string()),
        kind_(kind),
        violation_(std::move(violation)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<Violation>& violation() const noexcept { return violation_; }

 private:
  ErrorKind kind_;
  std::optional<Violation> violation_;
};

}  // namespace skewtwist
