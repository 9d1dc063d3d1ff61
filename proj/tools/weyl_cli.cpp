#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "weyl/json_io.hpp"
#include "weyl/weyl.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitMethodDisagreement = 3;

struct RunConfig {
  int n = 0;  // 0 = infer from the inputs
  std::string mode = "polynomial";
  int trunc = -1;  // -1 = WEYL_TRUNC_DEFAULT or 8
  std::string output = "text";
  std::uint64_t seed = 1;
  int cases = 100;
  std::string method = "all";
};

int default_trunc_order() {
  const char* env = std::getenv("WEYL_TRUNC_DEFAULT");
  if (env == nullptr) return 8;
  const std::string text(env);
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 0) {
    throw weyl::error("WEYL_TRUNC_DEFAULT must be a non-negative integer");
  }
  return value;
}

struct Inputs {
  weyl::Context ctx;
  std::vector<weyl::Element> elements;
};

Inputs prepare(const RunConfig& cfg, const std::vector<std::string>& sources) {
  std::vector<weyl::ExprPtr> asts;
  int top_index = 0;
  for (const auto& src : sources) {
    asts.push_back(weyl::parse_expression(src));
    top_index = std::max(top_index, weyl::max_gen_index(*asts.back()));
  }
  const int n = cfg.n > 0 ? cfg.n : std::max(top_index, 1);
  const int trunc = cfg.trunc >= 0 ? cfg.trunc : default_trunc_order();
  const weyl::Context ctx{
      n, cfg.mode == "laurent" ? weyl::ExpMode::laurent
                               : weyl::ExpMode::polynomial,
      trunc};
  Inputs in{ctx, {}};
  for (const auto& ast : asts) {
    const int used = weyl::max_gen_index(*ast);
    if (used > n) {
      throw weyl::invalid_generator("generator index " + std::to_string(used) +
                                    " outside 1.." + std::to_string(n));
    }
    in.elements.push_back(weyl::lower(*ast, ctx));
  }
  return in;
}

void print_element(const weyl::Element& e, const std::string& output) {
  if (output == "json") {
    std::cout << weyl::element_json(e).dump() << "\n";
  } else {
    std::cout << e.str() << "\n";
  }
}

int run_comm(const RunConfig& cfg, const std::string& src_a,
             const std::string& src_b) {
  const Inputs in = prepare(cfg, {src_a, src_b});
  const weyl::Element& a = in.elements[0];
  const weyl::Element& b = in.elements[1];
  if (cfg.method == "direct") {
    print_element(weyl::commutator_direct(a, b), cfg.output);
    return 0;
  }
  if (cfg.method == "series") {
    print_element(weyl::commutator_series(a, b), cfg.output);
    return 0;
  }
  if (cfg.method == "grouped") {
    print_element(weyl::commutator_series_grouped(a, b), cfg.output);
    return 0;
  }
  if (cfg.method == "flat") {
    print_element(weyl::commutator_series_flat(a, b), cfg.output);
    return 0;
  }
  const weyl::Element direct = weyl::commutator_direct(a, b);
  const weyl::Element series = weyl::commutator_series(a, b);
  const weyl::Element grouped = weyl::commutator_series_grouped(a, b);
  const weyl::Element flat = weyl::commutator_series_flat(a, b);
  if (!(direct == series && direct == grouped && direct == flat)) {
    std::cerr << "method disagreement:\n"
              << "  direct:  " << direct.str() << "\n"
              << "  series:  " << series.str() << "\n"
              << "  grouped: " << grouped.str() << "\n"
              << "  flat:    " << flat.str() << "\n";
    return kExitMethodDisagreement;
  }
  print_element(direct, cfg.output);
  return 0;
}

int run_verify(const RunConfig& cfg, const std::string& suite) {
  std::vector<weyl::SuiteReport> reports;
  if (suite == "axioms") {
    reports.push_back(weyl::verify_axioms(cfg.seed, cfg.cases));
  } else if (suite == "series") {
    reports.push_back(weyl::verify_series(cfg.seed, cfg.cases));
  } else if (suite == "laurent") {
    reports.push_back(weyl::verify_laurent(cfg.seed, cfg.cases));
  } else if (suite == "counting") {
    reports.push_back(weyl::verify_counting());
  } else {
    reports = weyl::verify_all(cfg.seed, cfg.cases);
  }
  bool all_ok = true;
  for (const auto& r : reports) {
    std::cout << "suite " << r.name << ": cases=" << r.cases
              << " failures=" << r.failures << (r.ok() ? " PASS" : " FAIL")
              << "\n";
    for (const auto& note : r.notes) std::cout << "  " << note << "\n";
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic engine for algebras of canonical conjugate pairs"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string expr_a, expr_b, suite;
  int order_k = 1;

  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of conjugate pairs (default: inferred)")
        ->check(CLI::Range(1, 1 << 20));
    sub->add_option("--mode", cfg.mode, "exponent mode (default: polynomial)")
        ->check(CLI::IsMember({"polynomial", "laurent"}));
    sub->add_option("--trunc", cfg.trunc,
                    "truncation order for laurent mode (default: 8, or "
                    "WEYL_TRUNC_DEFAULT)")
        ->check(CLI::Range(0, 1 << 20));
    sub->add_option("--output", cfg.output, "output format (default: text)")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* cmd_no = app.add_subcommand("no", "normal-order an expression");
  cmd_no->add_option("expr", expr_a, "expression to normal-order")->required();
  add_common(cmd_no);

  CLI::App* cmd_comm = app.add_subcommand("comm", "commutator [A, B]");
  cmd_comm->add_option("a", expr_a, "left operand")->required();
  cmd_comm->add_option("b", expr_b, "right operand")->required();
  cmd_comm
      ->add_option("--method", cfg.method,
                   "evaluation method (default: all, which cross-checks)")
      ->check(CLI::IsMember({"direct", "series", "grouped", "flat", "all"}));
  add_common(cmd_comm);

  CLI::App* cmd_term = app.add_subcommand(
      "term", "order-k term of the commutator series of [A, B]");
  cmd_term->add_option("a", expr_a, "left operand")->required();
  cmd_term->add_option("b", expr_b, "right operand")->required();
  cmd_term->add_option("k", order_k, "series order (k >= 1)")
      ->required()
      ->check(CLI::Range(1, 1 << 20));
  add_common(cmd_term);

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run a verification suite");
  cmd_verify
      ->add_option("suite", suite,
                   "axioms | series | laurent | counting | all")
      ->required()
      ->check(CLI::IsMember({"axioms", "series", "laurent", "counting", "all"}));
  cmd_verify->add_option("--cases", cfg.cases, "random cases (default: 100)")
      ->check(CLI::Range(1, 1 << 24));
  cmd_verify->add_option("--seed", cfg.seed, "random seed (default: 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_no->parsed()) {
      const Inputs in = prepare(cfg, {expr_a});
      print_element(in.elements[0], cfg.output);
      return 0;
    }
    if (cmd_comm->parsed()) return run_comm(cfg, expr_a, expr_b);
    if (cmd_term->parsed()) {
      const Inputs in = prepare(cfg, {expr_a, expr_b});
      print_element(weyl::series_term_k(in.elements[0], in.elements[1], order_k),
                    cfg.output);
      return 0;
    }
    if (cmd_verify->parsed()) return run_verify(cfg, suite);
  } catch (const weyl::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
