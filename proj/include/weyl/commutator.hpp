#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "weyl/calculus.hpp"
#include "weyl/normal_order.hpp"

namespace weyl {

inline Element commutator_direct(const Element& a, const Element& b) {
  if (a.ctx() != b.ctx()) throw context_mismatch("algebra context mismatch");
  return a * b - b * a;
}

namespace detail {

// Visits every (k_1,...,k_parts) with sum == total and k_i <= caps[i]
// (no per-index bound when caps is empty), in lexicographic order.
template <typename Fn>
inline void compositions_rec(std::vector<int>& kvec, std::size_t pos,
                             int remaining, std::span<const int> caps,
                             Fn&& fn) {
  if (pos + 1 == kvec.size()) {
    if (!caps.empty() && remaining > caps[pos]) return;
    kvec[pos] = remaining;
    fn(const_cast<const std::vector<int>&>(kvec));
    return;
  }
  const int hi =
      caps.empty() ? remaining : std::min(remaining, caps[pos]);
  for (int v = 0; v <= hi; ++v) {
    kvec[pos] = v;
    compositions_rec(kvec, pos + 1, remaining - v, caps, fn);
  }
}

template <typename Fn>
inline void for_each_composition(int parts, int total,
                                 std::span<const int> caps, Fn&& fn) {
  if (parts < 1 || total < 0) throw error("invalid composition arguments");
  std::vector<int> kvec(parts, 0);
  compositions_rec(kvec, 0, total, caps, fn);
}

inline BigInt multinomial(const std::vector<int>& kvec) {
  int total = 0;
  for (int k : kvec) total = checked_add(total, k);
  BigInt acc = factorial(total);
  for (int k : kvec) acc /= factorial(k);
  return acc;
}

// (d_p^kvec a)(d_q^kvec b) - (d_p^kvec b)(d_q^kvec a)
inline Element mixed_bracket(const Element& a, const Element& b,
                             const std::vector<int>& kvec) {
  Element out(a.ctx());
  {
    Element da = d_multi(a, kvec, GenKind::p);
    if (!da.is_zero()) {
      Element db = d_multi(b, kvec, GenKind::q);
      if (!db.is_zero()) out += da * db;
    }
  }
  {
    Element db = d_multi(b, kvec, GenKind::p);
    if (!db.is_zero()) {
      Element da = d_multi(a, kvec, GenKind::q);
      if (!da.is_zero()) out += -(db * da);
    }
  }
  return out;
}

// Per-index derivative-order caps beyond which every bracket vanishes.
// In polynomial mode exponents bound the useful orders; in Laurent mode
// the c^total prefactor dies past the truncation order instead.
inline std::vector<int> derivative_caps(const Element& a, const Element& b) {
  const Context& ctx = a.ctx();
  std::vector<int> caps(ctx.n_pairs, 0);
  if (ctx.laurent()) {
    caps.assign(ctx.n_pairs, ctx.trunc_order);
    return caps;
  }
  for (int m = 1; m <= ctx.n_pairs; ++m) {
    int cap = std::max(std::min(a.max_p_exp(m), b.max_q_exp(m)),
                       std::min(b.max_p_exp(m), a.max_q_exp(m)));
    caps[m - 1] = cap;
  }
  return caps;
}

inline int total_order_bound(const Element& a, const Element& b,
                             const std::vector<int>& caps) {
  if (a.ctx().laurent()) return a.ctx().trunc_order;
  int total = 0;
  for (int c : caps) total = checked_add(total, c);
  return total;
}

// -(-1)^k / k!  — the scalar part of the order-k prefactor -(-c)^k / k!.
inline Rational order_prefactor(int k) {
  Rational r = Rational(1) / Rational(factorial(k));
  return (k % 2 == 0) ? Rational(-r) : r;
}

// Derivative multi-indices tallied from the N^k flat index tuples
// (n_1,...,n_k); the multiplicities come from the enumeration itself.
// Memoized per (n, k) since the tallies do not depend on the operands.
inline const std::vector<std::pair<std::vector<int>, BigInt>>&
flat_index_tallies(int n, int k) {
  thread_local std::map<std::pair<int, int>,
                        std::vector<std::pair<std::vector<int>, BigInt>>>
      cache;
  auto [it, inserted] = cache.try_emplace({n, k});
  if (inserted) {
    std::map<std::vector<int>, BigInt> tallies;
    std::vector<int> tuple(k, 1);
    while (true) {
      std::vector<int> kvec(n, 0);
      for (int idx : tuple) ++kvec[idx - 1];
      ++tallies[kvec];
      int pos = k - 1;
      while (pos >= 0 && tuple[pos] == n) {
        tuple[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++tuple[pos];
    }
    it->second.assign(tallies.begin(), tallies.end());
  }
  return it->second;
}

}  // namespace detail

// Commutator from the graded derivative series: the sum over all nonzero
// derivative multi-indices of -prod_m ((-c)^{k_m} / k_m!) times the mixed
// derivative bracket. Equals commutator_direct exactly in polynomial mode
// and modulo c^(K+1) in Laurent mode.
inline Element commutator_series(const Element& a, const Element& b) {
  if (a.ctx() != b.ctx()) throw context_mismatch("algebra context mismatch");
  Element out(a.ctx());
  if (a.is_zero() || b.is_zero()) return out;
  const std::vector<int> caps = detail::derivative_caps(a, b);
  const int bound = detail::total_order_bound(a, b, caps);
  for (int total = 1; total <= bound; ++total) {
    detail::for_each_composition(
        a.ctx().n_pairs, total, caps, [&](const std::vector<int>& kvec) {
          Element bracket = detail::mixed_bracket(a, b, kvec);
          if (bracket.is_zero()) return;
          BigInt denom = 1;
          for (int k : kvec) denom *= factorial(k);
          Rational r = Rational(1) / Rational(denom);
          if (total % 2 == 0) r = -r;
          out += bracket.scaled(a.ctx().cs_c_power(total, r));
        });
  }
  return out;
}

// Same series grouped by total order k: -((-c)^k / k!) times the
// multinomial-weighted sum over the compositions of k.
inline Element commutator_series_grouped(const Element& a, const Element& b) {
  if (a.ctx() != b.ctx()) throw context_mismatch("algebra context mismatch");
  Element out(a.ctx());
  if (a.is_zero() || b.is_zero()) return out;
  const std::vector<int> caps = detail::derivative_caps(a, b);
  const int bound = detail::total_order_bound(a, b, caps);
  for (int k = 1; k <= bound; ++k) {
    Element inner(a.ctx());
    detail::for_each_composition(
        a.ctx().n_pairs, k, caps, [&](const std::vector<int>& kvec) {
          Element bracket = detail::mixed_bracket(a, b, kvec);
          if (bracket.is_zero()) return;
          inner += bracket.scaled(Rational(detail::multinomial(kvec)));
        });
    if (inner.is_zero()) continue;
    out += inner.scaled(a.ctx().cs_c_power(k, detail::order_prefactor(k)));
  }
  return out;
}

// Same series evaluated over flat index tuples: for each order k, all N^k
// tuples (n_1,...,n_k) are enumerated and tallied into derivative
// multi-indices, so the multiplicities come from the enumeration itself.
inline Element commutator_series_flat(const Element& a, const Element& b) {
  if (a.ctx() != b.ctx()) throw context_mismatch("algebra context mismatch");
  Element out(a.ctx());
  if (a.is_zero() || b.is_zero()) return out;
  const int n = a.ctx().n_pairs;
  const std::vector<int> caps = detail::derivative_caps(a, b);
  const int bound = detail::total_order_bound(a, b, caps);

  double tuple_estimate = 0;
  for (int k = 1; k <= bound; ++k) {
    double t = 1;
    for (int i = 0; i < k; ++i) t *= n;
    tuple_estimate += t;
  }
  if (tuple_estimate > 1e8) {
    throw error("flat-index enumeration too large for these inputs");
  }

  for (int k = 1; k <= bound; ++k) {
    Element inner(a.ctx());
    for (const auto& [kvec, count] : detail::flat_index_tallies(n, k)) {
      bool within = true;
      for (int m = 0; m < n; ++m) {
        if (kvec[m] > caps[m]) {
          within = false;
          break;
        }
      }
      if (!within) continue;  // every derivative in this tally vanishes
      Element bracket = detail::mixed_bracket(a, b, kvec);
      if (bracket.is_zero()) continue;
      inner += bracket.scaled(Rational(count));
    }
    if (inner.is_zero()) continue;
    out += inner.scaled(a.ctx().cs_c_power(k, detail::order_prefactor(k)));
  }
  return out;
}

// The full order-k contribution of the series, prefactor included; summing
// over k >= 1 reproduces commutator_series.
inline Element series_term_k(const Element& a, const Element& b, int k) {
  if (a.ctx() != b.ctx()) throw context_mismatch("algebra context mismatch");
  if (k < 1) throw error("series order must be >= 1");
  Element out(a.ctx());
  if (a.is_zero() || b.is_zero()) return out;
  const CSeries prefactor =
      a.ctx().cs_c_power(k, detail::order_prefactor(k));
  if (prefactor.is_zero()) return out;  // beyond the truncation order
  const std::vector<int> caps = detail::derivative_caps(a, b);
  Element inner(a.ctx());
  detail::for_each_composition(
      a.ctx().n_pairs, k, caps, [&](const std::vector<int>& kvec) {
        Element bracket = detail::mixed_bracket(a, b, kvec);
        if (bracket.is_zero()) return;
        inner += bracket.scaled(Rational(detail::multinomial(kvec)));
      });
  return inner.scaled(prefactor);
}

// Sum over single first derivatives: the order-1 bracket content without
// any power of c.
inline Element poisson_leading(const Element& a, const Element& b) {
  if (a.ctx() != b.ctx()) throw context_mismatch("algebra context mismatch");
  Element out(a.ctx());
  for (int m = 1; m <= a.ctx().n_pairs; ++m) {
    out += d_p(a, m) * d_q(b, m);
    out += -(d_p(b, m) * d_q(a, m));
  }
  return out;
}

// Explicit order-2 bracket content: N unmixed terms plus the coefficient-2
// mixed terms over index pairs m < n. No (-c)^2/2! prefactor.
inline Element grouped_term_k2(const Element& a, const Element& b) {
  if (a.ctx() != b.ctx()) throw context_mismatch("algebra context mismatch");
  const int n = a.ctx().n_pairs;
  Element out(a.ctx());
  for (int m = 1; m <= n; ++m) {
    out += d_p(a, m, 2) * d_q(b, m, 2);
    out += -(d_p(b, m, 2) * d_q(a, m, 2));
  }
  for (int m = 1; m <= n - 1; ++m) {
    for (int k = m + 1; k <= n; ++k) {
      Element mixed(a.ctx());
      mixed += d_p(d_p(a, m), k) * d_q(d_q(b, m), k);
      mixed += -(d_p(d_p(b, m), k) * d_q(d_q(a, m), k));
      out += mixed.scaled(Rational(2));
    }
  }
  return out;
}

// Explicit order-3 bracket content: unmixed terms, coefficient-3 terms with
// one single and one double derivative (ordered pairs m != n), and
// coefficient-6 terms over index triples m < n < o.
inline Element grouped_term_k3(const Element& a, const Element& b) {
  if (a.ctx() != b.ctx()) throw context_mismatch("algebra context mismatch");
  const int n = a.ctx().n_pairs;
  Element out(a.ctx());
  for (int m = 1; m <= n; ++m) {
    out += d_p(a, m, 3) * d_q(b, m, 3);
    out += -(d_p(b, m, 3) * d_q(a, m, 3));
  }
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= n; ++k) {
      if (k == m) continue;
      Element mixed(a.ctx());
      mixed += d_p(d_p(a, m), k, 2) * d_q(d_q(b, m), k, 2);
      mixed += -(d_p(d_p(b, m), k, 2) * d_q(d_q(a, m), k, 2));
      out += mixed.scaled(Rational(3));
    }
  }
  for (int m = 1; m <= n - 2; ++m) {
    for (int k = m + 1; k <= n - 1; ++k) {
      for (int o = k + 1; o <= n; ++o) {
        Element mixed(a.ctx());
        mixed += d_p(d_p(d_p(a, m), k), o) * d_q(d_q(d_q(b, m), k), o);
        mixed += -(d_p(d_p(d_p(b, m), k), o) * d_q(d_q(d_q(a, m), k), o));
        out += mixed.scaled(Rational(6));
      }
    }
  }
  return out;
}

// Sum of the multinomial coefficients k!/(k_1!...k_N!) over all
// compositions of k into N parts, by enumeration. Equals N^k.
inline BigInt multinomial_sum(int n_parts, int k) {
  if (n_parts < 1 || k < 0) throw error("invalid counting arguments");
  BigInt acc = 0;
  detail::for_each_composition(n_parts, k, {},
                               [&](const std::vector<int>& kvec) {
                                 acc += detail::multinomial(kvec);
                               });
  return acc;
}

// Number of compositions of k into N parts, by enumeration. Equals
// binomial(N-1+k, k).
inline BigInt composition_count(int n_parts, int k) {
  if (n_parts < 1 || k < 0) throw error("invalid counting arguments");
  BigInt acc = 0;
  detail::for_each_composition(n_parts, k, {},
                               [&](const std::vector<int>&) { ++acc; });
  return acc;
}

}  // namespace weyl
