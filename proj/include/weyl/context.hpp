#pragma once

#include <string>

#include "weyl/cseries.hpp"
#include "weyl/errors.hpp"

namespace weyl {

enum class ExpMode { polynomial, laurent };

inline const char* to_cstring(ExpMode m) {
  return m == ExpMode::polynomial ? "polynomial" : "laurent";
}

// N conjugate pairs, the exponent regime, and the coefficient truncation
// order. Polynomial mode works with exact coefficient polynomials; Laurent
// mode admits negative generator exponents and computes modulo c^(K+1).
struct Context {
  int n_pairs = 1;
  ExpMode mode = ExpMode::polynomial;
  int trunc_order = 8;

  bool operator==(const Context&) const = default;

  bool laurent() const { return mode == ExpMode::laurent; }

  int coeff_trunc() const {
    return laurent() ? trunc_order : CSeries::kExact;
  }

  CSeries cs_zero() const { return CSeries::zero(coeff_trunc()); }
  CSeries cs_one() const { return CSeries::constant(1, coeff_trunc()); }
  CSeries cs_constant(const Rational& r) const {
    return CSeries::constant(r, coeff_trunc());
  }
  CSeries cs_c_power(int degree, const Rational& r) const {
    return CSeries::c_power(degree, r, coeff_trunc());
  }

  void check_index(int m) const {
    if (m < 1 || m > n_pairs) {
      throw invalid_generator("generator index " + std::to_string(m) +
                              " outside 1.." + std::to_string(n_pairs));
    }
  }
};

inline Context polynomial_context(int n_pairs) {
  if (n_pairs < 1) throw error("n_pairs must be >= 1");
  return Context{n_pairs, ExpMode::polynomial, 8};
}

inline Context laurent_context(int n_pairs, int trunc_order) {
  if (n_pairs < 1) throw error("n_pairs must be >= 1");
  if (trunc_order < 0) throw error("truncation order must be >= 0");
  return Context{n_pairs, ExpMode::laurent, trunc_order};
}

}  // namespace weyl
