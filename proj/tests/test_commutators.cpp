#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace weyl;
using weyl::testing::gen_power;
using weyl::testing::mono_term;

namespace {

Element comm_by(const std::string& method, const Element& a, const Element& b) {
  if (method == "direct") return commutator_direct(a, b);
  if (method == "series") return commutator_series(a, b);
  if (method == "grouped") return commutator_series_grouped(a, b);
  return commutator_series_flat(a, b);
}

const char* kMethods[] = {"direct", "series", "grouped", "flat"};

}  // namespace

TEST_CASE("canonical pair commutator") {
  const Context ctx = polynomial_context(1);
  const Element p = gen_power(ctx, p_gen(1), 1);
  const Element q = gen_power(ctx, q_gen(1), 1);
  const Element c_identity = mono_term(ctx, {}, 1, 1);
  for (const char* method : kMethods) {
    REQUIRE(comm_by(method, p, q) == c_identity);
  }
}

TEST_CASE("squares commutator by every method") {
  const Context ctx = polynomial_context(1);
  const Element p2 = gen_power(ctx, p_gen(1), 2);
  const Element q2 = gen_power(ctx, q_gen(1), 2);
  Element expected = mono_term(ctx, {{1, 1, 1}}, 4, 1);
  expected += mono_term(ctx, {}, -2, 2);
  for (const char* method : kMethods) {
    REQUIRE(comm_by(method, p2, q2) == expected);
  }
}

TEST_CASE("powers of one generator commute") {
  const Context ctx = polynomial_context(1);
  const Element p = gen_power(ctx, p_gen(1), 1);
  const Element p3 = gen_power(ctx, p_gen(1), 3);
  for (const char* method : kMethods) {
    REQUIRE(comm_by(method, p, p3).is_zero());
  }
}

TEST_CASE("two-pair product commutator") {
  const Context ctx = polynomial_context(2);
  const Element p1p2 = mono_term(ctx, {{1, 1, 0}, {2, 1, 0}}, 1);
  const Element q1q2 = mono_term(ctx, {{1, 0, 1}, {2, 0, 1}}, 1);
  Element expected = mono_term(ctx, {{1, 1, 1}}, 1, 1);
  expected += mono_term(ctx, {{2, 1, 1}}, 1, 1);
  expected += mono_term(ctx, {}, -1, 2);
  for (const char* method : kMethods) {
    REQUIRE(comm_by(method, p1p2, q1q2) == expected);
  }
}

TEST_CASE("laurent inverse commutators") {
  const Context ctx = laurent_context(1, 6);
  const Element p_inv = gen_power(ctx, p_gen(1), -1);
  const Element q = gen_power(ctx, q_gen(1), 1);
  const Element expected = mono_term(ctx, {{1, -2, 0}}, -1, 1);
  for (const char* method : kMethods) {
    REQUIRE(comm_by(method, p_inv, q) == expected);
  }
}

TEST_CASE("square against a negative power") {
  const Context ctx = laurent_context(1, 4);
  const Element p2 = gen_power(ctx, p_gen(1), 2);
  const Element q_m2 = gen_power(ctx, q_gen(1), -2);
  // c (2p)(y q^{y-1}) - (c^2/2)(2)(y(y-1) q^{y-2}) at y = -2
  Element expected = mono_term(ctx, {{1, 1, -3}}, -4, 1);
  expected += mono_term(ctx, {{1, 0, -4}}, -6, 2);
  for (const char* method : kMethods) {
    REQUIRE(comm_by(method, p2, q_m2) == expected);
  }
}

TEST_CASE("order-k series terms") {
  const Context ctx = polynomial_context(1);
  const Element p = gen_power(ctx, p_gen(1), 1);
  const Element q = gen_power(ctx, q_gen(1), 1);
  REQUIRE(series_term_k(p, q, 1) == mono_term(ctx, {}, 1, 1));
  REQUIRE(series_term_k(p, q, 2).is_zero());

  const Element p2 = gen_power(ctx, p_gen(1), 2);
  const Element q2 = gen_power(ctx, q_gen(1), 2);
  REQUIRE(series_term_k(p2, q2, 2) == mono_term(ctx, {}, -2, 2));
  REQUIRE(series_term_k(p2, q2, 3).is_zero());

  REQUIRE_THROWS_AS(series_term_k(p, q, 0), error);
}

TEST_CASE("series terms sum to the commutator") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const Context ctx = polynomial_context(1 + i % 3);
    const Element a = random_element(rng, ctx, 3, 3);
    const Element b = random_element(rng, ctx, 3, 3);
    Element sum = Element::zero(ctx);
    for (int k = 1; k <= 2 * 3 * ctx.n_pairs; ++k) sum += series_term_k(a, b, k);
    REQUIRE(sum == commutator_direct(a, b));
  }
}

TEST_CASE("order-1 bracket content") {
  const Context ctx = polynomial_context(1);
  const Element p = gen_power(ctx, p_gen(1), 1);
  const Element q = gen_power(ctx, q_gen(1), 1);
  REQUIRE(poisson_leading(p, q) == Element::identity(ctx));

  const Element p2 = gen_power(ctx, p_gen(1), 2);
  const Element q2 = gen_power(ctx, q_gen(1), 2);
  REQUIRE(poisson_leading(p2, q2) == mono_term(ctx, {{1, 1, 1}}, 4));

  const Element pq = mono_term(ctx, {{1, 1, 1}}, 1);
  REQUIRE(poisson_leading(pq, pq).is_zero());

  // equals the order-1 series term with the c prefactor stripped
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    const Context rctx = polynomial_context(1 + i % 3);
    const Element a = random_element(rng, rctx, 3, 3);
    const Element b = random_element(rng, rctx, 3, 3);
    REQUIRE(series_term_k(a, b, 1) ==
            poisson_leading(a, b).scaled(rctx.cs_c_power(1, 1)));
  }
}

TEST_CASE("explicit order-2 and order-3 bracket loops") {
  const Context ctx1 = polynomial_context(1);
  const Element p2 = gen_power(ctx1, p_gen(1), 2);
  const Element q2 = gen_power(ctx1, q_gen(1), 2);
  REQUIRE(grouped_term_k2(p2, q2) == mono_term(ctx1, {}, 4));
  REQUIRE(grouped_term_k3(p2, q2).is_zero());

  const Context ctx2 = polynomial_context(2);
  const Element p1p2 = mono_term(ctx2, {{1, 1, 0}, {2, 1, 0}}, 1);
  const Element q1q2 = mono_term(ctx2, {{1, 0, 1}, {2, 0, 1}}, 1);
  REQUIRE(grouped_term_k2(p1p2, q1q2) == mono_term(ctx2, {}, 2));
}

TEST_CASE("explicit loops match the composition sums") {
  Rng rng(606);
  for (int i = 0; i < 40; ++i) {
    const Context ctx = polynomial_context(2 + i % 3);
    const Element a = random_element(rng, ctx, 3, 3);
    const Element b = random_element(rng, ctx, 3, 3);
    REQUIRE(series_term_k(a, b, 2) ==
            grouped_term_k2(a, b).scaled(ctx.cs_c_power(2, Rational(-1, 2))));
    REQUIRE(series_term_k(a, b, 3) ==
            grouped_term_k3(a, b).scaled(ctx.cs_c_power(3, Rational(1, 6))));
  }
}

TEST_CASE("counting values") {
  REQUIRE(multinomial_sum(4, 3) == 64);
  REQUIRE(composition_count(4, 3) == 20);
  for (int k = 0; k <= 8; ++k) REQUIRE(multinomial_sum(1, k) == 1);
  REQUIRE(verify_counting().ok());
}

TEST_CASE("series forms agree with the direct expansion") {
  Rng rng(47);
  for (int i = 0; i < 30; ++i) {
    const Context ctx = polynomial_context(1 + i % 3);
    const Element a = random_element(rng, ctx, 4, 3);
    const Element b = random_element(rng, ctx, 4, 3);
    const Element direct = commutator_direct(a, b);
    REQUIRE(commutator_series(a, b) == direct);
    REQUIRE(commutator_series_grouped(a, b) == direct);
    REQUIRE(commutator_series_flat(a, b) == direct);
  }
}

TEST_CASE("series forms agree in laurent mode") {
  Rng rng(48);
  for (int i = 0; i < 20; ++i) {
    const Context ctx = laurent_context(1 + i % 3, 6);
    const Element a = random_element(rng, ctx, 3, 3);
    const Element b = random_element(rng, ctx, 3, 3);
    const Element direct = commutator_direct(a, b);
    REQUIRE(commutator_series(a, b) == direct);
    REQUIRE(commutator_series_grouped(a, b) == direct);
    REQUIRE(commutator_series_flat(a, b) == direct);
  }
}

TEST_CASE("series terms grade by order") {
  Rng rng(52);
  for (int i = 0; i < 30; ++i) {
    const Context ctx = polynomial_context(1 + i % 2);
    const Element a = random_element(rng, ctx, 3, 3);
    const Element b = random_element(rng, ctx, 3, 3);
    const Element direct = commutator_direct(a, b);
    const int bound = 2 * 3 * ctx.n_pairs;
    for (int k = 1; k <= bound; ++k) {
      const Element term = series_term_k(a, b, k);
      for (const auto& [mono, cs] : term.terms()) {
        REQUIRE(cs.min_degree() >= k);
      }
    }
    // each c-grade of the direct result is reproduced by the terms
    for (int g = 0; g <= bound; ++g) {
      Element graded = Element::zero(ctx);
      for (int k = 1; k <= g; ++k) graded += series_term_k(a, b, k).graded_part(g);
      REQUIRE(graded == direct.graded_part(g));
    }
  }
}

TEST_CASE("zero operands short-circuit") {
  const Context ctx = polynomial_context(1);
  const Element zero = Element::zero(ctx);
  const Element p = gen_power(ctx, p_gen(1), 1);
  REQUIRE(commutator_series(zero, p).is_zero());
  REQUIRE(commutator_series_grouped(p, zero).is_zero());
  REQUIRE(commutator_series_flat(zero, zero).is_zero());
}

TEST_CASE("commutators demand a shared context") {
  const Element a = Element::identity(polynomial_context(1));
  const Element b = Element::identity(polynomial_context(2));
  REQUIRE_THROWS_AS(commutator_direct(a, b), context_mismatch);
  REQUIRE_THROWS_AS(commutator_series(a, b), context_mismatch);
}
