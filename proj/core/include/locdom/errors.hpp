#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locdom {

/// Malformed textual input. `offset` is the byte offset (graph6) or line number (text formats).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

/// Exact search refused because the graph is larger than the configured cap.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// No proved closed form exists for the requested query.
class NotAvailable : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parameters outside the region where a construction exists.
class Infeasible : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace locdom
