#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/normal_order.hpp"

namespace weyl {

// Deterministic source of small random values. Only the raw mt19937_64
// stream is consumed (no distribution objects), so identical seeds give
// identical sequences on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  int below(int n) {  // [0, n)
    return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n));
  }

  int range(int lo, int hi) {  // [lo, hi]
    return lo + below(hi - lo + 1);
  }

  bool chance(int percent) { return below(100) < percent; }

  Rational rational(int max_abs_num = 3, int max_den = 2) {
    int num = 0;
    while (num == 0) num = range(-max_abs_num, max_abs_num);
    return Rational(num, range(1, max_den));
  }

 private:
  std::mt19937_64 engine_;
};

inline NormalMonomial random_monomial(Rng& rng, const Context& ctx,
                                      int max_abs_exp) {
  std::vector<NormalMonomial::Entry> entries;
  for (int m = 1; m <= ctx.n_pairs; ++m) {
    int a, b;
    if (ctx.laurent()) {
      a = rng.range(-max_abs_exp, max_abs_exp);
      b = rng.range(-max_abs_exp, max_abs_exp);
    } else {
      a = rng.below(max_abs_exp + 1);
      b = rng.below(max_abs_exp + 1);
    }
    if (a != 0 || b != 0) entries.push_back({m, a, b});
  }
  return NormalMonomial::from_entries(std::move(entries));
}

inline Element random_element(Rng& rng, const Context& ctx, int max_terms,
                              int max_abs_exp) {
  Element out(ctx);
  const int terms = rng.range(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    out.add_term(random_monomial(rng, ctx, max_abs_exp),
                 ctx.cs_constant(rng.rational()));
  }
  return out;
}

inline Word random_word(Rng& rng, const Context& ctx, int max_factors,
                        int max_abs_exp) {
  Word w;
  const int factors = rng.range(1, max_factors);
  for (int t = 0; t < factors; ++t) {
    const Gen g = rng.chance(50) ? p_gen(rng.range(1, ctx.n_pairs))
                                 : q_gen(rng.range(1, ctx.n_pairs));
    int exp = 0;
    while (exp == 0) {
      exp = ctx.laurent() ? rng.range(-max_abs_exp, max_abs_exp)
                          : rng.range(1, max_abs_exp);
    }
    w.append(g, exp);
  }
  return w;
}

}  // namespace weyl
