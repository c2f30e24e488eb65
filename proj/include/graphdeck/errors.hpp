#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphdeck {

// Input data that cannot be parsed (graph6 lines, deck files) or that is
// internally inconsistent (e.g. a deck failing the edge-count divisibility
// check).
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what, std::size_t byte_offset = npos)
      : std::runtime_error(what), offset_(byte_offset) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool has_offset() const { return offset_ != npos; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A documented size cap was exceeded (vertex count, enumeration order,
// oracle order, longest-path order).
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on otherwise well-formed arguments was violated.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace graphdeck
