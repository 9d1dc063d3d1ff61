#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weyl/commutator.hpp"
#include "weyl/parse.hpp"
#include "weyl/poly_rep.hpp"
#include "weyl/random_gen.hpp"

namespace weyl {

struct SuiteReport {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> notes;

  bool ok() const { return failures == 0; }

  void check(bool pass, const std::string& label) {
    ++cases;
    if (!pass) {
      ++failures;
      notes.push_back("FAIL " + label);
    }
  }
};

// Commutator algebra laws on random polynomial-mode elements:
// anticommutativity, four-term linearity, Jacobi, the Leibniz product
// rule, and the five-term product-pair expansion.
inline SuiteReport verify_axioms(std::uint64_t seed, int random_cases) {
  SuiteReport report{"axioms"};
  Rng rng(seed);
  for (int i = 0; i < random_cases; ++i) {
    const Context ctx = polynomial_context(1 + i % 3);
    const Element a = random_element(rng, ctx, 3, 2);
    const Element b = random_element(rng, ctx, 3, 2);
    const Element c = random_element(rng, ctx, 3, 2);
    const Element d = random_element(rng, ctx, 3, 2);
    const Rational ra = rng.rational(), rb = rng.rational();
    const Rational rc = rng.rational(), rd = rng.rational();
    const std::string label = "case " + std::to_string(i);

    report.check(commutator_direct(a, b) == -commutator_direct(b, a),
                 label + ": anticommutativity");
    report.check(
        commutator_direct(a.scaled(ra) + b.scaled(rb),
                          c.scaled(rc) + d.scaled(rd)) ==
            commutator_direct(a, c).scaled(ra * rc) +
                commutator_direct(a, d).scaled(ra * rd) +
                commutator_direct(b, c).scaled(rb * rc) +
                commutator_direct(b, d).scaled(rb * rd),
        label + ": linearity");
    report.check(commutator_direct(a, commutator_direct(b, c)) +
                         commutator_direct(b, commutator_direct(c, a)) +
                         commutator_direct(c, commutator_direct(a, b)) ==
                     Element::zero(ctx),
                 label + ": jacobi");
    report.check(commutator_direct(a, b * c) ==
                     commutator_direct(a, b) * c + b * commutator_direct(a, c),
                 label + ": leibniz");
    report.check(
        commutator_direct(a * b, c * d) ==
            commutator_direct(a, c) * b * d +
                c * commutator_direct(a, d) * b +
                a * commutator_direct(b, c) * d +
                a * c * commutator_direct(b, d) -
                commutator_direct(a, c) * commutator_direct(b, d),
        label + ": product-pair expansion");
  }
  return report;
}

// Direct expansion vs every series evaluation on random polynomial-mode
// pairs, cross-checked through the polynomial representation.
inline SuiteReport verify_series(std::uint64_t seed, int random_cases) {
  SuiteReport report{"series"};
  Rng rng(seed);
  for (int i = 0; i < random_cases; ++i) {
    const Context ctx = polynomial_context(1 + i % 3);
    const Element a = random_element(rng, ctx, 4, 3);
    const Element b = random_element(rng, ctx, 4, 3);
    const std::string label = "case " + std::to_string(i);

    const Element direct = commutator_direct(a, b);
    const Element series = commutator_series(a, b);
    const Element grouped = commutator_series_grouped(a, b);
    const Element flat = commutator_series_flat(a, b);

    report.check(direct == series, label + ": direct == series");
    report.check(direct == grouped, label + ": direct == grouped");
    report.check(direct == flat, label + ": direct == flat");
    report.check(rep_equal_all(direct, {&series, &grouped, &flat},
                               default_rep_degree(direct, series)),
                 label + ": representation oracle");
  }
  return report;
}

namespace detail {

inline Element power_element(const Context& ctx, Gen g, int exp) {
  Word w;
  w.append(g, exp);
  return normal_order(w, ctx);
}

// -sum_{k=1..K} ((-c)^k / k!) ff(x,k) ff(y,k) p^{x-k} q^{y-k}, assembled
// straight from the falling-factorial closed form.
inline Element single_pair_series_closed_form(const Context& ctx, int x,
                                              int y) {
  Element out(ctx);
  for (int k = 1; k <= ctx.trunc_order; ++k) {
    Rational r = Rational(falling_factorial(x, k) * falling_factorial(y, k)) /
                 Rational(factorial(k));
    if (k % 2 == 0) r = -r;
    if (r == 0) continue;
    std::vector<NormalMonomial::Entry> entries;
    if (x - k != 0 || y - k != 0) entries.push_back({1, x - k, y - k});
    out.add_term(NormalMonomial::from_entries(std::move(entries)),
                 ctx.cs_c_power(k, r));
  }
  return out;
}

}  // namespace detail

// Laurent-mode checks at truncation order 6: exact inverse laws, the
// first-order inverse commutators, the integer-power commutator series for
// x, y in -3..3, its derivative-shifted variant, the product rule for
// k-fold derivatives, and random four-way method agreement.
inline SuiteReport verify_laurent(std::uint64_t seed, int random_cases) {
  SuiteReport report{"laurent"};
  constexpr int kTrunc = 6;
  const Context ctx = laurent_context(1, kTrunc);

  const auto power = [&](Gen g, int e) {
    return detail::power_element(ctx, g, e);
  };

  report.check(power(p_gen(1), -1) * power(p_gen(1), 1) ==
                   Element::identity(ctx),
               "p^-1 p == I");
  report.check(power(q_gen(1), -1) * power(q_gen(1), 1) ==
                   Element::identity(ctx),
               "q^-1 q == I");
  report.check(commutator_direct(power(p_gen(1), -1), power(q_gen(1), 1)) ==
                   Element::from_monomial(
                       NormalMonomial::single(p_gen(1), -2),
                       ctx.cs_c_power(1, -1), ctx),
               "[p^-1, q] == -c p^-2");
  report.check(commutator_direct(power(p_gen(1), 1), power(q_gen(1), -1)) ==
                   Element::from_monomial(
                       NormalMonomial::single(q_gen(1), -2),
                       ctx.cs_c_power(1, -1), ctx),
               "[p, q^-1] == -c q^-2");

  for (int x = -3; x <= 3; ++x) {
    for (int y = -3; y <= 3; ++y) {
      if (x == 0 || y == 0) continue;
      const Element px = power(p_gen(1), x);
      const Element qy = power(q_gen(1), y);
      const Element direct = commutator_direct(px, qy);
      const Element series = commutator_series(px, qy);
      const Element closed = detail::single_pair_series_closed_form(ctx, x, y);
      const std::string label =
          "[p^" + std::to_string(x) + ", q^" + std::to_string(y) + "]";
      report.check(direct == series, label + ": direct == series");
      report.check(direct == closed, label + ": direct == closed form");
    }
  }

  for (int x = -3; x <= 3; ++x) {
    for (int y = -3; y <= 3; ++y) {
      if (x == 0 || y == 0) continue;
      const Element px = power(p_gen(1), x);
      const Element qy = power(q_gen(1), y);
      for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
          const Element lhs = commutator_direct(d_p(px, 1, i), d_q(qy, 1, j));
          Element rhs(ctx);
          for (int k = 1; k <= kTrunc; ++k) {
            Rational r = Rational(1) / Rational(factorial(k));
            if (k % 2 == 0) r = -r;
            rhs += (d_p(px, 1, k + i) * d_q(qy, 1, k + j))
                       .scaled(ctx.cs_c_power(k, r));
          }
          report.check(lhs == rhs,
                       "shifted series x=" + std::to_string(x) +
                           " y=" + std::to_string(y) +
                           " i=" + std::to_string(i) +
                           " j=" + std::to_string(j));
        }
      }
    }
  }

  for (int x = -4; x <= 4; ++x) {
    for (int y = -4; y <= 4; ++y) {
      const Element px = power(p_gen(1), x);
      const Element py = power(p_gen(1), y);
      for (int k = 0; k <= 6; ++k) {
        const Element lhs = d_p(px * py, 1, k);
        Element rhs(ctx);
        for (int l = 0; l <= k; ++l) {
          rhs += (d_p(px, 1, k - l) * d_p(py, 1, l))
                     .scaled(Rational(binomial(k, l)));
        }
        report.check(lhs == rhs, "product rule x=" + std::to_string(x) +
                                     " y=" + std::to_string(y) +
                                     " k=" + std::to_string(k));
      }
    }
  }

  Rng rng(seed);
  for (int i = 0; i < random_cases; ++i) {
    const Context rctx = laurent_context(1 + i % 3, kTrunc);
    const Element a = random_element(rng, rctx, 3, 3);
    const Element b = random_element(rng, rctx, 3, 3);
    const std::string label = "random case " + std::to_string(i);
    const Element direct = commutator_direct(a, b);
    report.check(direct == commutator_series(a, b),
                 label + ": direct == series");
    report.check(direct == commutator_series_grouped(a, b),
                 label + ": direct == grouped");
    report.check(direct == commutator_series_flat(a, b),
                 label + ": direct == flat");
  }
  return report;
}

// Enumerated counting identities for the composition sums.
inline SuiteReport verify_counting() {
  SuiteReport report{"counting"};
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= 6; ++k) {
      const BigInt n_to_k = boost::multiprecision::pow(BigInt(n),
                                                       static_cast<unsigned>(k));
      report.check(multinomial_sum(n, k) == n_to_k,
                   "multinomial_sum(" + std::to_string(n) + "," +
                       std::to_string(k) + ") == N^k");
      report.check(composition_count(n, k) == binomial(n - 1 + k, k),
                   "composition_count(" + std::to_string(n) + "," +
                       std::to_string(k) + ") == C(N-1+k,k)");
    }
  }

  int ones = 0, threes = 0, sixes = 0, others = 0, total = 0;
  detail::for_each_composition(4, 3, {}, [&](const std::vector<int>& kvec) {
    ++total;
    const BigInt m = detail::multinomial(kvec);
    if (m == 1) ++ones;
    else if (m == 3) ++threes;
    else if (m == 6) ++sixes;
    else ++others;
  });
  report.check(total == 20 && ones == 4 && threes == 12 && sixes == 4 &&
                   others == 0,
               "N=4 k=3 coefficient multiset is {1 x4, 3 x12, 6 x4}");
  report.notes.push_back("multinomial_sum(4,3) = " +
                         to_string(multinomial_sum(4, 3)));
  report.notes.push_back("composition_count(4,3) = " +
                         to_string(composition_count(4, 3)));
  return report;
}

inline std::vector<SuiteReport> verify_all(std::uint64_t seed,
                                           int random_cases) {
  return {verify_axioms(seed, random_cases), verify_series(seed, random_cases),
          verify_laurent(seed, random_cases), verify_counting()};
}

}  // namespace weyl
