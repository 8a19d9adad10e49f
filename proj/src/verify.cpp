#include "jantzen/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <random>
#include <thread>

#include "jantzen/serialize.hpp"

namespace jantzen {

namespace {

std::string elem_text(const Session& sess, const AffineElement& x) {
  return "[" + word_text(reduced_word(sess, x)) + "]";
}

std::string refl_set_text(const std::set<Reflection>& s) {
  std::string out = "{";
  bool first = true;
  for (const Reflection& r : s) {
    if (!first) out += ", ";
    first = false;
    out += "(" + weight_text(r.beta.sr) + ";" + std::to_string(r.m) + ")";
  }
  return out + "}";
}

struct FailureTracker {
  SuiteResult& res;
  void check(bool ok, const std::function<std::string()>& describe) {
    ++res.checked;
    if (ok) return;
    ++res.failures;
    if (res.first_counterexample.empty()) res.first_counterexample = describe();
  }
};

std::vector<AffineElement> min_reps_up_to(const Session& sess,
                                          const std::vector<std::pair<AffineElement, int>>& bfs) {
  std::vector<AffineElement> out;
  for (const auto& [x, len] : bfs)
    if (is_min_rep(sess, x)) out.push_back(x);
  return out;
}

// Runs f(i) for i in [0, n) across worker tasks; each f must only touch its
// own slot. Chunks are contiguous so merged results stay deterministic.
void parallel_over(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const std::size_t chunk = (n + threads - 1) / threads;
  std::vector<std::future<void>> futures;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t end = std::min(n, begin + chunk);
    futures.push_back(std::async(std::launch::async, [begin, end, &f] {
      for (std::size_t i = begin; i < end; ++i) f(i);
    }));
  }
  for (auto& fut : futures) fut.get();
}

}  // namespace

int default_sweep_length(int rank) {
  if (rank <= 2) return 6;
  if (rank == 3) return 5;
  return 3;
}

unsigned resolve_threads(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("JANTZEN_KIT_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end && *end == '\0' && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

SuiteResult sweep_reflection_sets(const Session& sess, int max_length) {
  SuiteResult res{"reflection-sets"};
  FailureTracker t{res};
  const auto bfs = enumerate_waff(sess, max_length);

  for (const auto& [x, len] : bfs) {
    const auto via_word = rl_via_word(sess, x);
    const auto via_hyp = rl_via_hyperplanes(sess, x);
    t.check(static_cast<Int>(via_word.size()) == length(sess, x), [&] {
      return "|R_L(x)| != l(x) at x=" + elem_text(sess, x);
    });
    t.check(via_word == via_hyp, [&] {
      return "R_L mismatch at x=" + elem_text(sess, x) + ": word " + refl_set_text(via_word) +
             " vs hyperplanes " + refl_set_text(via_hyp);
    });

    // covers x < xs: R_L(xs) = R_L(x) disjoint-union {xsx^-1}
    for (int i = 0; i < sess.generator_count(); ++i) {
      AffineElement xs = x * sess.generator(i);
      if (length(sess, xs) != len + 1) continue;
      Reflection conj = reflection_from_element(sess, xs * x.inverse());
      auto expected = via_word;
      bool disjoint = expected.insert(conj).second;
      auto actual = rl_via_hyperplanes(sess, xs);
      t.check(disjoint && actual == expected, [&] {
        return "cover identity failed at x=" + elem_text(sess, x) + " s=" + std::to_string(i);
      });
    }
  }

  // at most one reflection moves y into the coset of x
  const auto reps = min_reps_up_to(sess, bfs);
  auto key_of = [&](const AffineElement& z) {
    auto [w, m] = canonical_decompose(sess, z);
    (void)w;
    return p_dot(sess, m, Weight::zero(sess.rank())).fw;
  };
  for (const AffineElement& y : reps) {
    const auto rl = rl_via_hyperplanes(sess, y);
    for (const AffineElement& x : reps) {
      const IntVec xkey = p_dot(sess, x, Weight::zero(sess.rank())).fw;
      int hits = 0;
      for (const Reflection& s : rl)
        if (key_of(reflection_element(sess, s) * y) == xkey) ++hits;
      t.check(hits <= 1, [&] {
        return "uniqueness failed: " + std::to_string(hits) + " reflections move y=" +
               elem_text(sess, y) + " into the coset of x=" + elem_text(sess, x);
      });
    }
  }

  // finite conjugation: w (R_L(x) \ R_fin) w^-1 = R_L(wx) \ R_fin
  for (const FinWeylElement& w : sess.wfin()) {
    const AffineElement we = embed(sess, w);
    for (const auto& [x, len] : bfs) {
      std::set<Reflection> lhs;
      for (const Reflection& s : rl_via_hyperplanes(sess, x)) {
        if (s.m == 0) continue;
        lhs.insert(reflection_from_element(sess, we * reflection_element(sess, s) * we.inverse()));
      }
      std::set<Reflection> rhs;
      for (const Reflection& s : rl_via_hyperplanes(sess, we * x))
        if (s.m != 0) rhs.insert(s);
      t.check(lhs == rhs, [&] {
        return "conjugation identity failed at x=" + elem_text(sess, x) +
               " w of length " + std::to_string(length(sess, we));
      });
    }
  }
  return res;
}

SuiteResult sweep_prefix_closure(const Session& sess, int max_length) {
  SuiteResult res{"prefix-closure"};
  FailureTracker t{res};
  const auto bfs = enumerate_waff(sess, max_length);

  for (const AffineElement& x : min_reps_up_to(sess, bfs)) {
    AffineElement prefix = sess.identity();
    bool ok = true;
    for (int idx : reduced_word(sess, x)) {
      prefix = prefix * sess.generator(idx);
      if (!is_min_rep(sess, prefix)) {
        ok = false;
        break;
      }
    }
    t.check(ok, [&] { return "prefix left W_aff^+ for x=" + elem_text(sess, x); });
  }

  // minimality in the coset agrees with the finite-descent definition
  for (const auto& [x, len] : bfs) {
    bool no_finite_descent = true;
    for (int i = 0; i < sess.rank(); ++i) {
      AffineElement ux = embed(sess, sess.rs().simple_reflection(i)) * x;
      if (length(sess, ux) <= len) {
        no_finite_descent = false;
        break;
      }
    }
    t.check(is_min_rep(sess, x) == no_finite_descent, [&] {
      return "min-rep definitions disagree at x=" + elem_text(sess, x);
    });
  }
  return res;
}

SuiteResult sweep_asph_transport(const Session& sess, int max_length) {
  SuiteResult res{"asph-transport"};
  FailureTracker t{res};
  const Weight lam0 = Weight::zero(sess.rank());
  const auto bfs = enumerate_waff(sess, max_length);

  for (const auto& [y, len] : bfs) {
    // chi_{y . lam0} |-> N_y, for arbitrary y and through the sign rule
    SignedDominant sdc = sess.rs().signed_dominant_conjugate(p_dot(sess, y, lam0));
    bool ok = false;
    if (!sdc.is_zero()) {
      CharacterVector chi;
      chi.add(*sdc.dominant, sdc.sign);
      ok = psi(sess, lam0, chi) == n_of(sess, y);
    }
    t.check(ok, [&] { return "psi transport failed at y=" + elem_text(sess, y); });

    // quadratic relation of the right action
    AsphElement v = n_of(sess, y);
    for (int i = 0; i < sess.generator_count(); ++i) {
      t.check(act_generator(sess, act_generator(sess, v, i), i) == v, [&] {
        return "(v.s).s != v at y=" + elem_text(sess, y) + " s=" + std::to_string(i);
      });
    }

    // basis action: N_x . s is +N_{xs} when xs stays minimal, and a signed
    // basis vector otherwise
    if (is_min_rep(sess, y)) {
      for (int i = 0; i < sess.generator_count(); ++i) {
        AffineElement ys = y * sess.generator(i);
        AsphElement acted = act_generator(sess, v, i);
        if (acted.terms().size() != 1) {
          t.check(false, [&] { return "N_x.s is not a single term at x=" + elem_text(sess, y); });
          continue;
        }
        Int c = acted.terms().begin()->second.coeff;
        bool rule_ok = is_min_rep(sess, ys)
                           ? (c == 1 && acted == n_of(sess, ys))
                           : (c == -1 && acted == n_of(sess, ys));
        t.check(rule_ok, [&] {
          return "basis action sign rule failed at x=" + elem_text(sess, y) +
                 " s=" + std::to_string(i);
        });
      }
    }
  }
  return res;
}

SuiteResult sweep_three_way(const Session& sess, int max_length, unsigned threads,
                            const NuFn& nu_override) {
  SuiteResult res{"three-way-jsf"};
  const NuFn nu = nu_override ? nu_override : NuFn([](Int p, Int m) { return nu_p(p, m); });
  const auto reps = min_reps_up_to(sess, enumerate_waff(sess, max_length));
  const Weight lam0 = Weight::zero(sess.rank());

  std::vector<std::string> failures(reps.size());
  parallel_over(reps.size(), threads, [&](std::size_t i) {
    const AffineElement& x = reps[i];
    CharacterVector classical = jsf_classical_with(sess, p_dot(sess, x, lam0), nu);
    AsphElement from_classical = psi(sess, lam0, classical);
    AsphElement direct = jsf_direct(sess, x);
    AsphElement recursive = jsf_recursive(sess, x);
    if (!(from_classical == direct && direct == recursive))
      failures[i] = "three-way mismatch at x=" + elem_text(sess, x) + ": classical->" +
                    asph_text(sess, from_classical) + ", direct " + asph_text(sess, direct) +
                    ", recursive " + asph_text(sess, recursive);
  });

  FailureTracker t{res};
  for (std::size_t i = 0; i < reps.size(); ++i)
    t.check(failures[i].empty(), [&] { return failures[i]; });
  return res;
}

SuiteResult sweep_duality_regular(const Session& sess, int max_length, unsigned threads) {
  SuiteResult res{"duality-regular"};
  const auto reps = min_reps_up_to(sess, enumerate_waff(sess, max_length));

  std::vector<AsphElement> jsfs(reps.size());
  parallel_over(reps.size(), threads,
                [&](std::size_t i) { jsfs[i] = jsf_recursive(sess, reps[i]); });

  std::vector<std::string> failures(reps.size());
  parallel_over(reps.size(), threads, [&](std::size_t iy) {
    for (std::size_t ix = 0; ix < reps.size(); ++ix) {
      Int lhs = asf_pair_regular(sess, reps[ix], reps[iy]);
      Int rhs = n_star_pairing(sess, reps[ix], jsfs[iy]);
      if (lhs != rhs && failures[iy].empty())
        failures[iy] = "duality mismatch at x=" + elem_text(sess, reps[ix]) +
                       " y=" + elem_text(sess, reps[iy]) + ": <ASF_x,N_y>=" + std::to_string(lhs) +
                       " but <N_x^*,JSF_y>=" + std::to_string(rhs);
    }
  });

  FailureTracker t{res};
  for (std::size_t iy = 0; iy < reps.size(); ++iy) {
    res.checked += static_cast<long long>(reps.size()) - 1;
    t.check(failures[iy].empty(), [&] { return failures[iy]; });
  }
  return res;
}

SuiteResult sweep_self_pairing(const Session& sess, int max_length) {
  SuiteResult res{"self-pairing"};
  FailureTracker t{res};
  for (const AffineElement& x : min_reps_up_to(sess, enumerate_waff(sess, max_length))) {
    Int v = n_star_pairing(sess, x, jsf_recursive(sess, x));
    t.check(v == 0, [&] {
      return "a Weyl module appeared in its own sum formula at x=" + elem_text(sess, x) +
             " with coefficient " + std::to_string(v);
    });
  }
  return res;
}

SuiteResult sweep_bounds(const Session& sess, int max_length) {
  SuiteResult res{"bounds"};
  FailureTracker t{res};
  const Int p2 = checked_mul(sess.p(), sess.p());
  const IntVec& ah_row = sess.rs().coroot_row(sess.rs().alpha_h_index());
  for (const AffineElement& x : min_reps_up_to(sess, enumerate_waff(sess, max_length))) {
    BoundReport report = bounds(sess, x);
    t.check(report.length_bound_sum >= length(sess, x), [&] {
      return "valuation sum below l(x) at x=" + elem_text(sess, x);
    });
    const Weight x0 = p_dot(sess, x, Weight::zero(sess.rank()));
    if (vec_dot((x0 + sess.rs().rho()).fw, ah_row) < p2) {
      t.check(report.length_bound_sum == length(sess, x), [&] {
        return "lowest p^2-alcove bound != l(x) at x=" + elem_text(sess, x);
      });
    }
    bool all_ones = std::all_of(report.per_step.begin(), report.per_step.end(),
                                [](const BoundStep& s) { return s.contribution == 1; });
    if (all_ones) {
      Int final_running = report.per_step.empty() ? 0 : report.per_step.back().running;
      t.check(final_running == report.length_bound_exp, [&] {
        return "doubling bound != 2^l - 1 at x=" + elem_text(sess, x);
      });
    }
  }
  return res;
}

SuiteResult sweep_duality_singular(const Session& sess, int samples, std::uint64_t seed) {
  SuiteResult res{"duality-singular"};
  FailureTracker t{res};
  std::mt19937_64 rng(seed);
  const RootSystem& rs = sess.rs();
  const IntVec& ah_row = rs.coroot_row(rs.alpha_h_index());
  const Int cap = checked_mul(4, sess.p());

  auto draw_dominant = [&]() {
    std::uniform_int_distribution<Int> coord(0, cap);
    for (;;) {
      Weight w = Weight::zero(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) w.fw[i] = coord(rng);
      if (vec_dot((w + rs.rho()).fw, ah_row) <= cap) return w;
    }
  };
  auto on_wall = [&](const Weight& w) {
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
      if (vec_dot((w + rs.rho()).fw, rs.coroot_row(static_cast<int>(k))) % sess.p() == 0)
        return true;
    return false;
  };

  for (int i = 0; i < samples; ++i) {
    Weight mu = draw_dominant();
    if (i % 3 == 0) {  // force a share of wall weights
      for (int tries = 0; tries < 200 && !on_wall(mu); ++tries) mu = draw_dominant();
    }
    CharacterVector jsf_mu = jsf_classical(sess, mu);
    Weight lam = draw_dominant();
    if (i % 2 == 0 && !jsf_mu.is_zero()) {
      std::uniform_int_distribution<std::size_t> pick(0, jsf_mu.terms().size() - 1);
      auto it = jsf_mu.terms().begin();
      std::advance(it, pick(rng));
      lam = Weight{it->first};
    }
    Int lhs = asf_pair_singular(sess, lam, mu);
    Int rhs = jsf_mu.coeff(lam);
    t.check(lhs == rhs, [&] {
      return "singular duality mismatch at lambda=(" + weight_text(lam.fw) + ") mu=(" +
             weight_text(mu.fw) + "): ASF " + std::to_string(lhs) + " vs JSF coefficient " +
             std::to_string(rhs);
    });
  }
  return res;
}

SuiteResult sweep_word_independence(const Session& sess, int samples, std::uint64_t seed) {
  SuiteResult res{"word-independence"};
  FailureTracker t{res};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(3, 9);
  std::uniform_int_distribution<int> gen_dist(0, sess.generator_count() - 1);

  int found = 0;
  long long attempts = 0;
  const long long attempt_cap = 2000LL * samples;
  while (found < samples && attempts < attempt_cap) {
    ++attempts;
    std::vector<int> letters(len_dist(rng));
    for (int& l : letters) l = gen_dist(rng);
    auto [w, x] = canonical_decompose(sess, element_from_word(sess, letters));
    (void)w;
    if (length(sess, x) < 2) continue;
    auto lo = reduced_word(sess, x, DescentRule::lowest_index);
    auto hi = reduced_word(sess, x, DescentRule::highest_index);
    if (lo == hi) continue;
    ++found;
    t.check(jsf_from_word(sess, lo) == jsf_from_word(sess, hi), [&] {
      return "recursion differs between words [" + word_text(lo) + "] and [" + word_text(hi) +
             "]";
    });
  }
  t.check(found == samples, [&] {
    return "only found " + std::to_string(found) + " of " + std::to_string(samples) +
           " elements with two distinct reduced words";
  });
  return res;
}

VerifyReport run_verify(const Session& sess, const VerifyOptions& opts) {
  const int max_length =
      opts.max_length > 0 ? opts.max_length : default_sweep_length(sess.rank());
  const int duality_length =
      opts.duality_length > 0 ? opts.duality_length : std::max(1, max_length - 1);
  const unsigned threads = resolve_threads(opts.threads);

  VerifyReport report;
  report.suites.push_back(sweep_prefix_closure(sess, max_length));
  report.suites.push_back(sweep_asph_transport(sess, max_length));
  report.suites.push_back(sweep_three_way(sess, max_length, threads, opts.nu_override));
  report.suites.push_back(sweep_self_pairing(sess, max_length));
  report.suites.push_back(sweep_bounds(sess, max_length));
  report.suites.push_back(
      sweep_word_independence(sess, opts.word_independence_samples, opts.seed));
  // the remaining suites enumerate the finite Weyl group
  if (sess.wfin_available()) {
    report.suites.push_back(sweep_reflection_sets(sess, max_length));
    report.suites.push_back(sweep_duality_regular(sess, duality_length, threads));
    report.suites.push_back(sweep_duality_singular(sess, opts.singular_samples, opts.seed));
  }
  return report;
}

}  // namespace jantzen
