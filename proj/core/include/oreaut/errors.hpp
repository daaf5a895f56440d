#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oreaut {

/// A violated precondition or otherwise invalid mathematical input.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 0-based character offset of the problem.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : DomainError(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/// An internal consistency check failed (e.g. two independent computations disagree).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace oreaut
