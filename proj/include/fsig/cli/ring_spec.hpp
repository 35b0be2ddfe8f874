#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fsig/error.hpp"
#include "fsig/monomial.hpp"
#include "fsig/ring.hpp"

namespace fsig::cli {

// Ring spec file, one `key = value` per line, `#` to end of line is a comment:
//   p         = 7                   prime, 2 <= p < 2^31
//   vars      = x, y, z             comma separated, letter then letters/digits
//   relations = x*y - z^2           comma separated polynomials, may be empty
//   order     = grevlex             optional: grevlex (default), lex, grlex
// p and vars are required; each key appears at most once.
struct RingSpec {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  OrderKind order = OrderKind::Grevlex;
};

// Diagnostics carry 1-based line and column.
class SpecError : public Error {
 public:
  SpecError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const char* kind() const noexcept override { return "spec"; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Parses and validates (prime, names, relation syntax) in one pass.
RingPresentation parse_ring_spec(std::string_view text, RingSpec* spec_out = nullptr);
RingPresentation load_ring_spec(const std::string& path, RingSpec* spec_out = nullptr);

}  // namespace fsig::cli
