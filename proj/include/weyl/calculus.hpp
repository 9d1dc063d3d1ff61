#pragma once

#include <vector>

#include "weyl/element.hpp"

namespace weyl {

// k-fold formal derivative with respect to p_index or q_index: each
// monomial's exponent e contributes the falling factorial e(e-1)...(e-k+1)
// and drops to e - k. Valid for every integer exponent; in polynomial mode
// the factorial reaches zero before any exponent can go negative.
inline Element derivative(const Element& a, int index, GenKind kind,
                          int order) {
  a.ctx().check_index(index);
  if (order < 0) throw error("derivative order must be >= 0");
  if (order == 0) return a;
  Element out(a.ctx());
  for (const auto& [mono, cs] : a.terms()) {
    const int e = mono.exp(index, kind);
    const BigInt ff = falling_factorial(e, order);
    if (ff == 0) continue;
    out.add_term(mono.with_exponent(index, kind, checked_sub(e, order)),
                 cs.scaled(Rational(ff)));
  }
  return out;
}

inline Element d_p(const Element& a, int index, int order = 1) {
  return derivative(a, index, GenKind::p, order);
}

inline Element d_q(const Element& a, int index, int order = 1) {
  return derivative(a, index, GenKind::q, order);
}

// Composition over all indices, \partial^{k_1}_1 ... \partial^{k_N}_N on
// the chosen side; the order of application does not matter.
inline Element d_multi(const Element& a, const std::vector<int>& orders,
                       GenKind kind) {
  if (static_cast<int>(orders.size()) != a.ctx().n_pairs) {
    throw error("multi-index length must equal the number of pairs");
  }
  Element out = a;
  for (int m = 1; m <= a.ctx().n_pairs; ++m) {
    if (orders[m - 1] == 0) continue;
    out = derivative(out, m, kind, orders[m - 1]);
    if (out.is_zero()) break;
  }
  return out;
}

}  // namespace weyl
