#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weyl {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient operands disagree on exact vs truncated mode (or on the
// truncation order).
struct mode_mismatch : error {
  using error::error;
};

// Elements from different algebra contexts were combined.
struct context_mismatch : error {
  using error::error;
};

// Generator or derivative index outside 1..N.
struct invalid_generator : error {
  using error::error;
};

// Negative generator exponent requested in polynomial mode.
struct negative_exponent : error {
  using error::error;
};

// Polynomial-representation oracle requested for a Laurent-mode value.
struct laurent_unsupported : error {
  using error::error;
};

// Checked machine-integer arithmetic overflowed.
struct exponent_overflow : error {
  using error::error;
};

struct parse_error : error {
  std::size_t position;
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace weyl
