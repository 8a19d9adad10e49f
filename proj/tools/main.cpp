#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jantzen/serialize.hpp"

namespace {

using namespace jantzen;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification mismatch
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string cartan = "A2";
  Int p = 3;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--cartan", opts.cartan, "Cartan type, e.g. A2, C2, G2")->capture_default_str();
  cmd->add_option("--p", opts.p, "prime p >= Coxeter number")->capture_default_str();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

Session make_session(const CommonOpts& opts) {
  return Session::create(CartanType::parse(opts.cartan), opts.p);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_jsf(const CommonOpts& opts, const std::string& lambda_str) {
  Session sess = make_session(opts);
  IntVec coords = parse_int_list(lambda_str);
  if (static_cast<int>(coords.size()) != sess.rank())
    throw std::invalid_argument("--lambda needs " + std::to_string(sess.rank()) + " coordinates");
  JsfResult res = compute_jsf(sess, Weight{coords});
  if (opts.format == "json") {
    print_json(jsf_result_to_json(sess, res));
  } else {
    std::cout << "lambda = " << weight_text(res.lambda) << "  (" << opts.cartan
              << ", p = " << res.p << ")\n";
    std::cout << "JSF character: " << charvec_text(res.character) << "\n";
    if (res.asph) std::cout << "JSF asph:      " << asph_text(sess, *res.asph) << "\n";
    if (res.verdict) std::cout << "verdict: " << *res.verdict << "\n";
    if (!res.asph) std::cout << "(lambda is p-singular; no anti-spherical form)\n";
  }
  return res.verdict && *res.verdict != "AGREE" ? kExitFailure : kExitOk;
}

int cmd_verify(const CommonOpts& opts, int max_length, std::uint64_t seed) {
  Session sess = make_session(opts);
  VerifyOptions vopts;
  vopts.max_length = max_length;
  vopts.seed = seed;
  VerifyReport report = run_verify(sess, vopts);
  if (opts.format == "json") {
    print_json(verify_report_to_json(report));
  } else {
    std::printf("%-20s %10s %10s\n", "suite", "checked", "failures");
    for (const SuiteResult& s : report.suites)
      std::printf("%-20s %10lld %10lld\n", s.name.c_str(), s.checked, s.failures);
    if (report.all_pass()) {
      std::cout << "ALL PASS\n";
    } else {
      for (const SuiteResult& s : report.suites)
        if (!s.pass()) {
          std::cout << "FAILED: " << s.name << ": " << s.first_counterexample << "\n";
          break;
        }
    }
  }
  return report.all_pass() ? kExitOk : kExitFailure;
}

int cmd_example_an(const CommonOpts& opts) {
  Session sess = make_session(opts);
  ExampleAnReport report = run_example_an(sess);
  if (opts.format == "json") {
    print_json(example_an_to_json(report));
  } else {
    std::cout << "A" << report.n << ", p = " << report.p
              << ", lambda = " << weight_text(report.lambda) << "\n";
    std::printf("%3s %-14s %7s %9s %11s %5s %12s\n", "i", "x_i.lambda", "weight", "lambda_i",
                "reflection", "jsf", "chain bound");
    for (const ExampleAnRow& row : report.rows)
      std::printf("%3d %-14s %7s %9s %11s %5s %6lld (%s)\n", row.i,
                  weight_text(row.weight).c_str(), row.weight_ok ? "ok" : "FAIL",
                  row.lambda_i_ok ? "ok" : "FAIL", row.reflection_ok ? "ok" : "FAIL",
                  row.jsf_ok ? "ok" : "FAIL", static_cast<long long>(row.chain_bound),
                  row.bound_ok ? "ok" : "FAIL");
    std::cout << (report.pass ? "ALL PASS" : "FAILURES") << "\n";
  }
  return report.pass ? kExitOk : kExitFailure;
}

int cmd_asf(const CommonOpts& opts, const std::string& x_word, const std::string& y_word) {
  Session sess = make_session(opts);
  AffineElement x = element_from_word(sess, parse_word(x_word));
  AffineElement y = element_from_word(sess, parse_word(y_word));
  if (!is_min_rep(sess, x) || !is_min_rep(sess, y))
    throw std::invalid_argument("word reduces out of the minimal coset representatives");
  Int lhs = asf_pair_regular(sess, x, y);
  Int rhs = n_star_pairing(sess, x, jsf_recursive(sess, y));
  const char* verdict = lhs == rhs ? "AGREE" : "MISMATCH";
  if (opts.format == "json") {
    Json j;
    j["x_word"] = reduced_word(sess, x);
    j["y_word"] = reduced_word(sess, y);
    j["asf_pairing"] = lhs;
    j["jsf_coefficient"] = rhs;
    j["verdict"] = verdict;
    print_json(j);
  } else {
    std::cout << "<ASF_x, N_y>   = " << lhs << "\n";
    std::cout << "<N_x^*, JSF_y> = " << rhs << "\n";
    std::cout << "verdict: " << verdict << "\n";
  }
  return lhs == rhs ? kExitOk : kExitFailure;
}

int cmd_bounds(const CommonOpts& opts, const std::string& word) {
  Session sess = make_session(opts);
  AffineElement x = element_from_word(sess, parse_word(word));
  if (!is_min_rep(sess, x))
    throw std::invalid_argument("word reduces out of the minimal coset representatives");
  BoundReport report = bounds(sess, x);
  if (opts.format == "json") {
    print_json(bound_report_to_json(report));
  } else {
    std::cout << "valuation sum over R_L(x): " << report.length_bound_sum << "\n";
    std::cout << "2^l(x) - 1:                " << report.length_bound_exp << "\n";
    std::printf("%-14s %14s %10s\n", "prefix", "contribution", "running");
    for (const BoundStep& s : report.per_step)
      std::printf("%-14s %14lld %10lld\n", word_text(s.prefix).c_str(),
                  static_cast<long long>(s.contribution), static_cast<long long>(s.running));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Jantzen/Andersen sum formulas for Weyl modules via alcove "
      "combinatorics of the affine Weyl group"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  CommonOpts opts;
  std::string lambda_str, x_word, y_word, word;
  int max_length = -1;
  std::uint64_t seed = 0;

  CLI::App* jsf = app.add_subcommand(
      "jsf", "Jantzen sum formula for a dominant weight (all routes compared when p-regular)");
  add_common(jsf, opts);
  jsf->add_option("--lambda", lambda_str, "dominant weight, fundamental-weight coordinates")
      ->required();

  CLI::App* verify = app.add_subcommand("verify", "run the exhaustive verification sweeps");
  add_common(verify, opts);
  verify->add_option("--max-length", max_length, "length cap for the exhaustive sweeps");
  verify->add_option("--seed", seed, "seed for the randomized suites")->capture_default_str();

  CLI::App* example = app.add_subcommand(
      "example-an", "reproduce the type-A chain x_i = s_0...s_{i-1} end to end");
  add_common(example, opts);

  CLI::App* asf = app.add_subcommand(
      "asf", "Andersen pairing <ASF_x, N_y> and its comparison against the JSF coefficient");
  add_common(asf, opts);
  asf->add_option("--x-word", x_word, "word for x (indices, 0 = affine generator; 'e' = identity)")
      ->required();
  asf->add_option("--y-word", y_word, "word for y")->required();

  CLI::App* bnd = app.add_subcommand("bounds", "Jantzen filtration length bounds for an alcove");
  add_common(bnd, opts);
  bnd->add_option("--word", word, "word for x (indices, 0 = affine generator; 'e' = identity)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (jsf->parsed()) return cmd_jsf(opts, lambda_str);
    if (verify->parsed()) return cmd_verify(opts, max_length, seed);
    if (example->parsed()) return cmd_example_an(opts);
    if (asf->parsed()) return cmd_asf(opts, x_word, y_word);
    if (bnd->parsed()) return cmd_bounds(opts, word);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
