#include <doctest.h>

#include "jantzen/root_system.hpp"

using namespace jantzen;

TEST_CASE("cartan type parsing and validation") {
  CHECK(CartanType::parse("A1").rank == 1);
  CHECK(CartanType::parse("E8").name() == "E8");
  CHECK_THROWS_AS(CartanType::parse("A0"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("F5"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("G3"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("H4"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("Axy"), std::invalid_argument);
  CHECK_THROWS_WITH(CartanType::parse("D3"), doctest::Contains("A3"));
}

TEST_CASE("A2 Cartan datum") {
  RootSystem rs = build_root_system(CartanType::parse("A2"));
  CHECK(rs.positive_roots().size() == 3);
  CHECK(rs.alpha_h() == Root{{1, 1}});
  CHECK(rs.coxeter_number() == 3);
  CHECK(rs.pairing(rs.rho(), rs.alpha_h()) == 2);
}

TEST_CASE("G2 and B2 data") {
  RootSystem g2 = build_root_system(CartanType::parse("G2"));
  CHECK(g2.positive_roots().size() == 6);
  CHECK(g2.coxeter_number() == 6);

  // alpha_h is the highest SHORT root, not the highest root
  RootSystem b2 = build_root_system(CartanType::parse("B2"));
  CHECK(b2.alpha_h() == Root{{1, 1}});
  CHECK(b2.root_length2_half(b2.alpha_h_index()) == 1);
  bool has_longer_higher = false;
  for (std::size_t k = 0; k < b2.positive_roots().size(); ++k)
    if (b2.root_length2_half(static_cast<int>(k)) == 2 &&
        b2.to_weight(b2.positive_roots()[k]).is_dominant())
      has_longer_higher = true;
  CHECK(has_longer_higher);  // the highest (long) root is a different dominant root
  CHECK(b2.coxeter_number() == 4);
}

TEST_CASE("positive root counts across families") {
  CHECK(build_root_system(CartanType::parse("A3")).positive_roots().size() == 6);
  CHECK(build_root_system(CartanType::parse("B3")).positive_roots().size() == 9);
  CHECK(build_root_system(CartanType::parse("C3")).positive_roots().size() == 9);
  CHECK(build_root_system(CartanType::parse("D4")).positive_roots().size() == 12);
  CHECK(build_root_system(CartanType::parse("F4")).positive_roots().size() == 24);
  CHECK(build_root_system(CartanType::parse("E6")).positive_roots().size() == 36);
  CHECK(build_root_system(CartanType::parse("E7")).positive_roots().size() == 63);
  CHECK(build_root_system(CartanType::parse("E8")).positive_roots().size() == 120);
  CHECK(build_root_system(CartanType::parse("E8")).coxeter_number() == 30);
  CHECK(build_root_system(CartanType::parse("F4")).coxeter_number() == 12);
  CHECK(build_root_system(CartanType::parse("D4")).coxeter_number() == 6);
}

TEST_CASE("pairing basics") {
  RootSystem rs = build_root_system(CartanType::parse("A2"));
  Root alpha1{{1, 0}}, alpha2{{0, 1}};
  CHECK(rs.pairing(Weight::zero(2), rs.alpha_h()) == 0);
  CHECK(rs.pairing(Weight{{1, 0}}, alpha1) == 1);
  CHECK(rs.pairing(Weight{{1, 0}}, alpha2) == 0);
  CHECK(rs.pairing(Weight{{1, 0}}, -alpha1) == -1);
  CHECK_THROWS_AS(rs.pairing(rs.rho(), Root{{2, 0}}), std::invalid_argument);

  // linearity
  Weight a{{3, -2}}, b{{-1, 5}};
  for (const Root& beta : rs.positive_roots())
    CHECK(rs.pairing(a + b, beta) == rs.pairing(a, beta) + rs.pairing(b, beta));

  // rho pairs to 1 with every simple root, h - 1 with alpha_h
  for (int i = 0; i < rs.rank(); ++i) {
    IntVec e(rs.rank(), 0);
    e[i] = 1;
    CHECK(rs.pairing(rs.rho(), Root{e}) == 1);
  }
  CHECK(rs.pairing(rs.rho(), rs.alpha_h()) == rs.coxeter_number() - 1);
}

TEST_CASE("dot action") {
  RootSystem rs = build_root_system(CartanType::parse("A2"));
  Weight zero = Weight::zero(2);
  CHECK(rs.dot_apply(rs.identity_element(), Weight{{4, -1}}) == Weight{{4, -1}});
  CHECK(rs.dot_apply(rs.simple_reflection(0), zero) == Weight{{-2, 1}});

  // longest element: w0(rho) = -rho, so w0 . 0 = -2rho and w0 . (-2rho) = 0
  FinWeylElement w0 = rs.identity_element();
  for (int i : {0, 1, 0}) w0 = w0 * rs.simple_reflection(i);
  CHECK(rs.dot_apply(w0, zero) == Weight{{-2, -2}});
  CHECK(rs.dot_apply(w0, Weight{{-2, -2}}) == zero);

  // group action: w . (v . lam) = (wv) . lam
  auto all = enumerate_wfin(rs);
  Weight lam{{2, -3}};
  for (const auto& w : all)
    for (const auto& v : all)
      CHECK(rs.dot_apply(w, rs.dot_apply(v, lam)) == rs.dot_apply(w * v, lam));

  // affine with linear part: w . (lam + mu) = w . lam + w(mu)
  Weight mu{{1, 1}};
  for (const auto& w : all)
    CHECK(rs.dot_apply(w, lam + mu) == rs.dot_apply(w, lam) + w(mu));
}

TEST_CASE("signed dominant conjugation") {
  RootSystem rs = build_root_system(CartanType::parse("A2"));

  SignedDominant dom = rs.signed_dominant_conjugate(Weight{{2, 0}});
  REQUIRE_FALSE(dom.is_zero());
  CHECK(*dom.dominant == Weight{{2, 0}});
  CHECK(dom.sign == 1);
  CHECK(dom.witness->is_identity());

  SignedDominant flip = rs.signed_dominant_conjugate(Weight{{-2, -2}});
  REQUIRE_FALSE(flip.is_zero());
  CHECK(*flip.dominant == Weight::zero(2));
  CHECK(flip.sign == -1);
  CHECK(flip.witness->det() == -1);
  CHECK(rs.dot_apply(*flip.witness, *flip.dominant) == Weight{{-2, -2}});

  CHECK(rs.signed_dominant_conjugate(Weight{{-1, 0}}).is_zero());
}

TEST_CASE("finite Weyl enumeration") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  auto elements = enumerate_wfin(a2);
  CHECK(elements.size() == 6);
  CHECK(elements.front().is_identity());
  CHECK(enumerate_wfin(build_root_system(CartanType::parse("C2"))).size() == 8);
  CHECK(enumerate_wfin(build_root_system(CartanType::parse("G2"))).size() == 12);
  CHECK_THROWS_AS(enumerate_wfin(build_root_system(CartanType::parse("A5"))),
                  std::invalid_argument);

  // every element permutes the root set, and det = (-1)^(number of inversions)
  for (const auto& w : elements) {
    int inversions = 0;
    for (const Root& beta : a2.positive_roots()) {
      auto idx = a2.signed_root_index(w(beta));
      REQUIRE(idx.has_value());
      if (idx->second < 0) ++inversions;
    }
    CHECK(w.det() == (inversions % 2 == 0 ? 1 : -1));
    CHECK((w * w.inverse()).is_identity());
  }

  // sign rule on dot orbits of a regular dominant weight
  Weight lam{{1, 2}};
  for (const auto& w : elements) {
    SignedDominant sdc = a2.signed_dominant_conjugate(a2.dot_apply(w, lam));
    REQUIRE_FALSE(sdc.is_zero());
    CHECK(*sdc.dominant == lam);
    CHECK(sdc.sign == w.det());
  }

  // constancy on orbits of a non-dominant regular weight, signs tracking det
  Weight irregular_start{{-4, 3}};
  SignedDominant base = a2.signed_dominant_conjugate(irregular_start);
  REQUIRE_FALSE(base.is_zero());
  for (const auto& w : elements) {
    SignedDominant sdc = a2.signed_dominant_conjugate(a2.dot_apply(w, irregular_start));
    REQUIRE_FALSE(sdc.is_zero());
    CHECK(*sdc.dominant == *base.dominant);
    CHECK(sdc.sign == w.det() * base.sign);
  }

  // wall orbits stay on walls
  for (const auto& w : elements)
    CHECK(a2.signed_dominant_conjugate(a2.dot_apply(w, Weight{{-1, 0}})).is_zero());
}

TEST_CASE("root/weight coordinate conversion round-trips") {
  for (const char* name : {"A2", "B3", "C3", "G2", "F4"}) {
    RootSystem rs = build_root_system(CartanType::parse(name));
    std::map<IntVec, int> by_weight;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      const Root& beta = rs.positive_roots()[k];
      auto [it, inserted] = by_weight.try_emplace(rs.to_weight(beta).fw, static_cast<int>(k));
      CHECK(inserted);  // conversion is injective, so it inverts on roots
      auto idx = rs.signed_root_index(beta);
      REQUIRE(idx.has_value());
      CHECK(idx->first == static_cast<int>(k));
      CHECK(idx->second == 1);
    }
  }
}

TEST_CASE("simple reflections are involutions") {
  for (const char* name : {"A2", "C2", "G2", "A3"}) {
    RootSystem rs = build_root_system(CartanType::parse(name));
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK((rs.simple_reflection(i) * rs.simple_reflection(i)).is_identity());
      CHECK(rs.simple_reflection(i).det() == -1);
    }
  }
}
