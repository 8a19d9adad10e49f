#include <doctest.h>

#include <random>

#include "jantzen/asph.hpp"

using namespace jantzen;

namespace {

Session a2p3() { return Session::create(CartanType::parse("A2"), 3); }

}  // namespace

TEST_CASE("n_of and the sign rule") {
  Session sess = a2p3();

  AsphElement plus = n_of(sess, sess.generator(0));
  CHECK(plus.coeff_at(Weight{{1, 1}}) == 1);
  CHECK(plus.terms().size() == 1);

  // finite simple reflection: det = -1, minimal part e
  AsphElement minus = n_of(sess, sess.generator(1));
  CHECK(minus.coeff_at(Weight::zero(2)) == -1);
  CHECK(minus.terms().size() == 1);

  // y = s_1 s_0: decomposes with a finite prefix
  AffineElement y = sess.generator(1) * sess.generator(0);
  auto [w, x] = canonical_decompose(sess, y);
  AsphElement v = n_of(sess, y);
  CHECK(v.coeff_at(p_dot(sess, x, Weight::zero(2))) == w.det());
}

TEST_CASE("module arithmetic") {
  Session sess = a2p3();
  AsphElement zero;
  CHECK(zero.is_zero());
  CHECK(act_generator(sess, zero, 0).is_zero());

  AsphElement v = n_of(sess, sess.generator(0));
  AsphElement cancel = v;
  cancel += v * (-1);
  CHECK(cancel.is_zero());
  CHECK((v * 3).coeff_at(Weight{{1, 1}}) == 3);
  CHECK((v * 0).is_zero());
}

TEST_CASE("n_star pairing") {
  Session sess = a2p3();
  AffineElement s0 = sess.generator(0);
  AsphElement v = n_of(sess, s0);
  CHECK(n_star_pairing(sess, s0, v) == 1);
  CHECK(n_star_pairing(sess, sess.identity(), v) == 0);
  // non-minimal representative picks up the determinant
  CHECK(n_star_pairing(sess, sess.generator(1) * s0, v) == -1);

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> gen(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    AffineElement a = sess.identity(), b = sess.identity();
    for (int i = 0; i < 5; ++i) {
      a = a * sess.generator(gen(rng));
      b = b * sess.generator(gen(rng));
    }
    auto [wa, xa] = canonical_decompose(sess, a);
    auto [wb, xb] = canonical_decompose(sess, b);
    Int expected = (xa == xb) ? Int(wa.det()) * wb.det() : 0;
    CHECK(n_star_pairing(sess, a, n_of(sess, b)) == expected);
  }
}

TEST_CASE("right action of the generators") {
  Session sess = a2p3();
  AsphElement n_e = n_of(sess, sess.identity());

  // N_e . s_0 = N_{s_0}
  CHECK(act_generator(sess, n_e, 0) == n_of(sess, sess.generator(0)));
  // N_e . s_1 = -N_e (falls back into the finite coset)
  AsphElement acted = act_generator(sess, n_e, 1);
  CHECK(acted.coeff_at(Weight::zero(2)) == -1);

  // commuting finite letter flips the sign: N_{x_1} . s_2 = -N_{x_1} in A3
  Session a3 = Session::create(CartanType::parse("A3"), 5);
  AsphElement nx1 = n_of(a3, a3.generator(0));
  AsphElement flipped = act_generator(a3, nx1, 2);
  CHECK(flipped == nx1 * (-1));
}

TEST_CASE("psi on basis characters") {
  Session sess = a2p3();
  Weight lam0 = Weight::zero(2);

  CHECK(psi(sess, lam0, CharacterVector{}).is_zero());

  CharacterVector chi0;
  chi0.add(lam0, 1);
  CHECK(psi(sess, lam0, chi0) == n_of(sess, sess.identity()));

  CharacterVector chi_s0;
  chi_s0.add(Weight{{1, 1}}, 1);
  CHECK(psi(sess, lam0, chi_s0) == n_of(sess, sess.generator(0)));

  // base weight must be interior to the fundamental alcove
  CHECK_THROWS_AS(psi(sess, Weight{{1, 1}}, chi0), std::invalid_argument);
  // and keys must lie in its linkage class: (2,2) is regular but not linked to 0
  CharacterVector bad;
  bad.add(Weight{{2, 2}}, 1);
  CHECK_THROWS_AS(psi(sess, lam0, bad), std::invalid_argument);
}

TEST_CASE("psi inverts psi_inv") {
  Session sess = a2p3();
  Weight lam0 = Weight::zero(2);
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> gen(0, 2), coeff(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    AsphElement v;
    for (int t = 0; t < 3; ++t) {
      AffineElement y = sess.identity();
      for (int i = 0; i < 4; ++i) y = y * sess.generator(gen(rng));
      v += n_of(sess, y) * coeff(rng);
    }
    CHECK(psi(sess, lam0, psi_inv(sess, lam0, v)) == v);
  }
}

TEST_CASE("character vectors reject non-dominant keys") {
  CharacterVector c;
  CHECK_THROWS_AS(c.add(Weight{{-1, 0}}, 1), std::invalid_argument);
  c.add(Weight{{1, 0}}, 2);
  c.add(Weight{{1, 0}}, -2);
  CHECK(c.is_zero());
}
