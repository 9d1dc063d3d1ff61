#pragma once

#include <map>
#include <utility>
#include <vector>

#include "weyl/element.hpp"

namespace weyl {

// State of the polynomial representation: a polynomial in commuting
// variables x_1..x_N with CSeries coefficients. Generators act by
//   q_m : multiply by x_m
//   p_m : c * d/dx_m
// which realizes the defining commutation relations, giving an equality
// check that shares no code with the rewriter.
class PolyState {
 public:
  explicit PolyState(const Context& ctx) : ctx_(ctx) {}

  static PolyState basis(const Context& ctx, std::vector<int> exps) {
    PolyState s(ctx);
    s.add_term(std::move(exps), ctx.cs_one());
    return s;
  }

  const Context& ctx() const { return ctx_; }
  const std::map<std::vector<int>, CSeries>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(std::vector<int> exps, const CSeries& coeff) {
    if (coeff.is_zero()) return;
    if (static_cast<int>(exps.size()) != ctx_.n_pairs) {
      throw error("state exponent vector length must equal the pair count");
    }
    auto [it, inserted] = coeffs_.try_emplace(std::move(exps), coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  bool operator==(const PolyState&) const = default;

 private:
  Context ctx_;
  std::map<std::vector<int>, CSeries> coeffs_;
};

inline PolyState apply(const Element& a, const PolyState& s) {
  if (a.ctx() != s.ctx()) throw context_mismatch("algebra context mismatch");
  if (a.ctx().laurent()) {
    throw laurent_unsupported(
        "the polynomial representation has no inverse generators");
  }
  const CSeries unit = a.ctx().cs_one();
  PolyState out(a.ctx());
  for (const auto& [mono, mcoeff] : a.terms()) {
    for (const auto& [exps, scoeff] : s.coeffs()) {
      std::vector<int> e = exps;
      BigInt factor = 1;
      int c_shift = 0;
      bool alive = true;
      for (const auto& entry : mono.entries()) {
        const int slot = entry.index - 1;
        e[slot] = checked_add(e[slot], entry.q_exp);
        if (entry.p_exp > 0) {
          factor *= falling_factorial(e[slot], entry.p_exp);
          if (factor == 0) {
            alive = false;
            break;
          }
          c_shift = checked_add(c_shift, entry.p_exp);
          e[slot] = checked_sub(e[slot], entry.p_exp);
        }
      }
      if (!alive) continue;
      if (scoeff == unit) {
        out.add_term(std::move(e), mcoeff.shift_scaled(c_shift, Rational(factor)));
      } else {
        out.add_term(std::move(e), (mcoeff * scoeff)
                                       .shift_scaled(c_shift, Rational(factor)));
      }
    }
  }
  return out;
}

namespace detail {

template <typename Fn>
inline void basis_exponents_rec(std::vector<int>& exps, std::size_t pos,
                                int budget, Fn&& fn) {
  if (pos == exps.size()) {
    fn(const_cast<const std::vector<int>&>(exps));
    return;
  }
  for (int v = 0; v <= budget; ++v) {
    exps[pos] = v;
    basis_exponents_rec(exps, pos + 1, budget - v, fn);
  }
}

}  // namespace detail

// True iff a and b act identically on every basis monomial of total degree
// at most max_degree. With max_degree >= (max q-exponent + max p-exponent)
// of the operands this is equivalent to equality of canonical forms.
inline bool rep_equal(const Element& a, const Element& b, int max_degree) {
  if (a.ctx() != b.ctx()) throw context_mismatch("algebra context mismatch");
  if (a.ctx().laurent()) {
    throw laurent_unsupported(
        "the polynomial representation has no inverse generators");
  }
  std::vector<int> exps(a.ctx().n_pairs, 0);
  bool equal = true;
  detail::basis_exponents_rec(
      exps, 0, max_degree, [&](const std::vector<int>& e) {
        if (!equal) return;
        const PolyState basis = PolyState::basis(a.ctx(), e);
        if (!(apply(a, basis) == apply(b, basis))) equal = false;
      });
  return equal;
}

// Compares several candidates against one reference, computing the
// reference images only once per basis monomial.
inline bool rep_equal_all(const Element& ref,
                          const std::vector<const Element*>& candidates,
                          int max_degree) {
  for (const Element* e : candidates) {
    if (ref.ctx() != e->ctx()) {
      throw context_mismatch("algebra context mismatch");
    }
  }
  if (ref.ctx().laurent()) {
    throw laurent_unsupported(
        "the polynomial representation has no inverse generators");
  }
  std::vector<int> exps(ref.ctx().n_pairs, 0);
  bool equal = true;
  detail::basis_exponents_rec(
      exps, 0, max_degree, [&](const std::vector<int>& e) {
        if (!equal) return;
        const PolyState basis = PolyState::basis(ref.ctx(), e);
        const PolyState image = apply(ref, basis);
        for (const Element* cand : candidates) {
          if (!(apply(*cand, basis) == image)) {
            equal = false;
            return;
          }
        }
      });
  return equal;
}

inline int default_rep_degree(const Element& a, const Element& b) {
  int max_p = 0, max_q = 0;
  for (int m = 1; m <= a.ctx().n_pairs; ++m) {
    max_p = std::max({max_p, a.max_p_exp(m), b.max_p_exp(m)});
    max_q = std::max({max_q, a.max_q_exp(m), b.max_q_exp(m)});
  }
  return max_p + max_q + 1;
}

inline bool rep_equal(const Element& a, const Element& b) {
  return rep_equal(a, b, default_rep_degree(a, b));
}

}  // namespace weyl
