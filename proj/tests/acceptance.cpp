// Acceptance suite: runs every acceptance criterion and prints one
// PASS/FAIL line each. Expects the CLI binary path as argv[1] for the
// determinism checks. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "weyl/json_io.hpp"
#include "weyl/weyl.hpp"

namespace {

using namespace weyl;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back(what);
    }
  }
};

int g_failures = 0;

template <typename Fn>
void criterion(int id, const std::string& name, double budget_seconds,
               Fn&& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.check(false, std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (elapsed >= budget_seconds) {
    outcome.check(false, "budget of " + std::to_string(budget_seconds) +
                             " s exceeded");
  }
  std::printf("criterion %d: %-52s %s (%.2f s)\n", id, name.c_str(),
              outcome.pass ? "PASS" : "FAIL", elapsed);
  for (const auto& d : outcome.details) {
    std::printf("    %s\n", d.c_str());
  }
  if (!outcome.pass) ++g_failures;
}

Element term_of(const Context& ctx,
                std::vector<NormalMonomial::Entry> entries, const Rational& r,
                int c_degree = 0) {
  return Element::from_monomial(
      NormalMonomial::from_entries(std::move(entries)),
      ctx.cs_c_power(c_degree, r), ctx);
}

std::pair<int, std::string> run_command(const std::string& command) {
  std::string out;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return {-1, out};
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    out.append(buffer, n);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void golden_identities(Outcome& out) {
  const Context ctx = polynomial_context(1);

  Element expected = term_of(ctx, {{1, 2, 2}}, 1);
  expected += term_of(ctx, {{1, 1, 1}}, -1, 1);
  out.check(parse_element("p1 q1 p1 q1", ctx) == expected, "p q p q");

  expected = term_of(ctx, {{1, 2, 2}}, 1);
  expected += term_of(ctx, {{1, 1, 1}}, -3, 1);
  expected += term_of(ctx, {}, 1, 2);
  out.check(parse_element("q1 p1 q1 p1", ctx) == expected, "q p q p");

  expected = term_of(ctx, {{1, 2, 2}}, 1);
  expected += term_of(ctx, {{1, 1, 1}}, -4, 1);
  expected += term_of(ctx, {}, 2, 2);
  out.check(parse_element("q1^2 p1^2", ctx) == expected, "q q p p");

  expected = term_of(ctx, {{1, 2, 2}}, 1);
  expected += term_of(ctx, {{1, 1, 1}}, 5, 1);
  expected += term_of(ctx, {}, -4, 2);
  out.check(parse_element("3 p1 q1 p1 q1 - 2 q1^2 p1^2", ctx) == expected,
            "3 pqpq - 2 qqpp");

  const Context ctx2 = polynomial_context(2);
  Element expansion = term_of(ctx2, {{1, 2, 2}, {2, 2, 2}}, 1);
  expansion += term_of(ctx2, {{1, 2, 2}, {2, 1, 1}}, -1, 1);
  expansion += term_of(ctx2, {{1, 1, 1}, {2, 2, 2}}, -1, 1);
  expansion += term_of(ctx2, {{1, 1, 1}, {2, 1, 1}}, 1, 2);
  out.check(parse_element("p2 p1 q1 q2 p1 p2 q2 q1", ctx2) == expansion,
            "two-pair factorization");

  const Element p2 = parse_element("p1^2", ctx);
  const Element q2 = parse_element("q1^2", ctx);
  Element squares = term_of(ctx, {{1, 1, 1}}, 4, 1);
  squares += term_of(ctx, {}, -2, 2);
  out.check(commutator_direct(p2, q2) == squares, "[p^2,q^2] direct");
  out.check(commutator_series(p2, q2) == squares, "[p^2,q^2] series");
  out.check(commutator_series_grouped(p2, q2) == squares,
            "[p^2,q^2] grouped");
  out.check(commutator_series_flat(p2, q2) == squares, "[p^2,q^2] flat");
}

void explicit_low_order_loops(Outcome& out) {
  Rng rng(20240806);
  for (int i = 0; i < 100; ++i) {
    const Context ctx = polynomial_context(2 + i % 3);
    const Element a = random_element(rng, ctx, 3, 3);
    const Element b = random_element(rng, ctx, 3, 3);
    const bool k2 = series_term_k(a, b, 2) ==
                    grouped_term_k2(a, b).scaled(
                        ctx.cs_c_power(2, Rational(-1, 2)));
    const bool k3 = series_term_k(a, b, 3) ==
                    grouped_term_k3(a, b).scaled(
                        ctx.cs_c_power(3, Rational(1, 6)));
    out.check(k2, "order-2 loop, case " + std::to_string(i));
    out.check(k3, "order-3 loop, case " + std::to_string(i));
    if (!k2 || !k3) break;
  }
}

void cli_determinism(Outcome& out, const std::string& cli) {
  if (cli.empty()) {
    out.check(false, "no CLI path supplied");
    return;
  }
  const std::string exe = "'" + cli + "'";
  const std::vector<std::string> commands = {
      exe + " no 'q1^2 p1^2'",
      exe + " no --output json 'q1 p1'",
      exe + " no --mode laurent --trunc 4 'q1 p1^-1'",
      exe + " comm 'p1^2' 'q1^2' --method all",
      exe + " comm --mode laurent --trunc 6 'p1^-1' 'q1' --method all",
      exe + " comm --mode laurent --trunc 6 'p1^-2 q1^-1' 'q1^-3 p1^2'"
            " --method all --output json",
      exe + " term 'p1 p2' 'q1 q2' 2",
      exe + " verify axioms --cases 20 --seed 3",
      exe + " verify counting",
  };
  for (const auto& cmd : commands) {
    const auto first = run_command(cmd);
    const auto second = run_command(cmd);
    out.check(first.first == 0, "exit code 0 for: " + cmd);
    out.check(first == second, "byte-identical reruns for: " + cmd);
  }

  // documented outputs stay pinned
  out.check(run_command(exe + " no 'q1^2 p1^2'").second ==
                "p1^2 q1^2 - 4*c*p1 q1 + 2*c^2*I\n",
            "pinned text output");
  out.check(run_command(exe + " comm 'p1^2' 'q1^2' --method all").second ==
                "4*c*p1 q1 - 2*c^2*I\n",
            "pinned commutator output");
  out.check(
      run_command(exe + " comm --mode laurent --trunc 6 'p1^-1' 'q1'").second ==
          "-c*p1^-2\n",
      "pinned laurent output");
  out.check(run_command(exe + " term 'p1^2' 'q1^2' 2").second == "-2*c^2*I\n",
            "pinned order-2 term output");
  out.check(run_command(exe + " term 'p1 p2' 'q1 q2' 2").second == "-c^2*I\n",
            "pinned two-pair order-2 term output");
  out.check(run_command(exe + " term 'p1' 'q1' 2").second == "0\n",
            "pinned vanishing term output");
  out.check(run_command(exe + " comm 'p1' 'p1'").second == "0\n",
            "pinned zero output");

  // exit codes: usage errors are 1, success is 0
  out.check(run_command(exe + " no 'q1 +'").first == 1, "parse error exit");
  out.check(run_command(exe + " term 'p1' 'q1' 0").first == 1,
            "usage error exit");
  out.check(run_command(exe + " verify series --cases 0").first == 1,
            "zero cases exit");

  // the truncation default honors the environment override
  const auto env_run = run_command("WEYL_TRUNC_DEFAULT=5 " + exe +
                                   " no --mode laurent --output json 'q1 p1^-1'");
  out.check(env_run.first == 0 &&
                env_run.second.find("\"trunc\":5") != std::string::npos,
            "WEYL_TRUNC_DEFAULT override");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "golden reordering and commutator identities", 1.0,
            [](Outcome& out) { golden_identities(out); });

  criterion(2, "series methods vs direct and representation (500 pairs)",
            60.0, [](Outcome& out) {
              const SuiteReport r = verify_series(42, 500);
              out.check(r.ok(), "series suite: " +
                                    std::to_string(r.failures) + " failures");
            });

  criterion(3, "commutator algebra laws (200 triples)", 60.0,
            [](Outcome& out) {
              const SuiteReport r = verify_axioms(42, 200);
              out.check(r.ok(), "axiom suite: " +
                                    std::to_string(r.failures) + " failures");
            });

  criterion(4, "laurent identities at truncation order 6", 120.0,
            [](Outcome& out) {
              const SuiteReport r = verify_laurent(42, 100);
              out.check(r.ok(), "laurent suite: " +
                                    std::to_string(r.failures) + " failures");
            });

  criterion(5, "composition counting identities", 5.0, [](Outcome& out) {
    const SuiteReport r = verify_counting();
    out.check(r.ok(),
              "counting suite: " + std::to_string(r.failures) + " failures");
  });

  criterion(6, "explicit order-2/order-3 loops (100 pairs)", 60.0,
            [](Outcome& out) { explicit_low_order_loops(out); });

  criterion(7, "CLI determinism and pinned outputs", 120.0,
            [&cli](Outcome& out) { cli_determinism(out, cli); });

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
