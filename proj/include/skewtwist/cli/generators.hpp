#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewtwist/cli/document.hpp"

namespace skewtwist::cli {

struct GenParams {
  /// Positional parameters after the generator name, such as a size.
  std::vector<std::string> args;
  /// Permutations in zero-based cycle notation.
  std::string sigma;
  std::string gamma;
  std::string kappa;
  /// Structure the generator derives from (doikou-twist, brace-pair, ...).
  std::optional<Document> input;
};

/// Builds the named structure. Throws UnknownGenerator or BadParams; the
/// result is always validated.
Document generate(const std::string& name, const GenParams& params);

/// Generator names in the order `gen --help` lists them.
const std::vector<std::string>& generator_names();

}  // namespace skewtwist::cli
