#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domcyc {

/// A bounded search ran out of its node-expansion or wall-clock allowance.
/// Distinct from a negative answer: nothing may be concluded.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input does not satisfy the hypotheses of a structural lemma.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed graph6 input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& detail, std::size_t offset)
      : std::runtime_error(detail + " at byte " + std::to_string(offset)),
        detail_(detail),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

}  // namespace domcyc
