#include <doctest.h>

#include <cstdlib>

#include "jantzen/example_an.hpp"
#include "jantzen/verify.hpp"

using namespace jantzen;

TEST_CASE("verification sweeps pass at desk scale") {
  Session sess = Session::create(CartanType::parse("A2"), 3);
  VerifyOptions opts;
  opts.max_length = 4;
  opts.singular_samples = 60;
  opts.word_independence_samples = 20;
  opts.seed = 1;
  VerifyReport report = run_verify(sess, opts);
  CHECK(report.all_pass());
  for (const SuiteResult& s : report.suites) {
    CAPTURE(s.name);
    CAPTURE(s.first_counterexample);
    CHECK(s.failures == 0);
    CHECK(s.checked > 0);
  }
}

TEST_CASE("corrupted valuation is detected with a counterexample") {
  Session sess = Session::create(CartanType::parse("A2"), 3);
  // Shifting every valuation by a constant is invisible: the unweighted
  // double sum cancels in pairs (m against <lam+rho,alpha^vee> - m). A
  // scaling corruption changes the result wherever it is nonzero.
  NuFn corrupted = [](Int p, Int m) { return 2 * nu_p(p, m); };
  SuiteResult res = sweep_three_way(sess, 4, 1, corrupted);
  CHECK(res.failures > 0);
  CHECK_FALSE(res.first_counterexample.empty());

  // the invisible corruption really is invisible, which is why the negative
  // control must scale
  NuFn shifted = [](Int p, Int m) { return nu_p(p, m) + 1; };
  CHECK(sweep_three_way(sess, 4, 1, shifted).failures == 0);
}

TEST_CASE("thread cap honors the environment variable") {
  setenv("JANTZEN_KIT_THREADS", "2", 1);
  CHECK(resolve_threads(0) <= 2);
  CHECK(resolve_threads(8) == 2);
  unsetenv("JANTZEN_KIT_THREADS");
  CHECK(resolve_threads(3) == 3);
}

TEST_CASE("sweeps are deterministic in the seed") {
  Session sess = Session::create(CartanType::parse("C2"), 5);
  SuiteResult a = sweep_duality_singular(sess, 40, 99);
  SuiteResult b = sweep_duality_singular(sess, 40, 99);
  CHECK(a.checked == b.checked);
  CHECK(a.failures == 0);
  CHECK(b.failures == 0);
}

TEST_CASE("the type-A chain example") {
  for (auto [n, p] : {std::pair<int, Int>{2, 3}, {2, 5}, {3, 5}}) {
    Session sess = Session::create(CartanType{'A', n}, p);
    ExampleAnReport report = run_example_an(sess);
    CAPTURE(n);
    CAPTURE(p);
    CHECK(report.pass);
    CHECK(static_cast<int>(report.rows.size()) == n);
    for (const ExampleAnRow& row : report.rows) CHECK(row.chain_bound == 3);
  }
  // the chain needs type A and rank at least 2
  CHECK_THROWS_AS(run_example_an(Session::create(CartanType::parse("C2"), 5)),
                  std::invalid_argument);
}
