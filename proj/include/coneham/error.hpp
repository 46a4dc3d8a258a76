#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace coneham {

enum class ErrorKind {
  invalid_parameter,
  shape,
  invalid_measure,
  sampling_failure,
  unsupported_cone,
  nonlinearity_domain,
  oracle_failure,
  syntax,
  evaluation,
  problem_file,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception. `offset` is set for errors tied to a position in
/// parsed text (expressions, problem files).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(what), kind_(kind), offset_(offset) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> offset_;
};

}  // namespace coneham
