#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lexsel {

enum class ErrorKind {
  Malformed,
  DuplicateConcept,
  DanglingParent,
  Cycle,
  RootCount,
  UnknownDomain,
  UnknownConcept,
  CrossDomain,
  DuplicateSense,
  InvalidSense,
  UnknownLexeme,
  UnboundRole,
  InvalidWeights,
  MalformedTree,
  UnknownMarker,
  MalformedCorpus,
  MissingGold,
  EmptyCorpus,
  VocabularyGap,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

// Every failure surfaced by the library carries a kind so callers (and the
// CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lexsel
