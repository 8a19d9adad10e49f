#include <doctest.h>

#include "jantzen/serialize.hpp"

using namespace jantzen;

namespace {

Session a2p3() { return Session::create(CartanType::parse("A2"), 3); }

}  // namespace

TEST_CASE("text rendering") {
  Session sess = a2p3();
  CHECK(word_text(std::vector<int>{}) == "e");
  CHECK(word_text(std::vector<int>{0, 1}) == "0,1");
  CHECK(weight_text({1, -2}) == "1,-2");

  AsphElement v = n_of(sess, sess.identity()) * (-1);
  v += n_of(sess, sess.generator(0)) * 2;
  CHECK(asph_text(sess, v) == "-1*N(e) +2*N(0)");
  CHECK(asph_text(sess, AsphElement{}) == "0");

  CharacterVector c;
  c.add(Weight{{0, 0}}, 1);
  CHECK(charvec_text(c) == "+1*chi(0,0)");
}

TEST_CASE("integer list parsing") {
  CHECK(parse_int_list("1,-2,0") == IntVec{1, -2, 0});
  CHECK(parse_int_list("").empty());
  CHECK(parse_int_list("e").empty());
  CHECK(parse_word("0,2") == std::vector<int>{0, 2});
  CHECK_THROWS_AS(parse_int_list("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("-1"), std::invalid_argument);
}

TEST_CASE("asph serialization is sorted and round-trips") {
  Session sess = a2p3();
  AsphElement v;
  v += n_of(sess, sess.generator(0) * sess.generator(1)) * 2;
  v += n_of(sess, sess.identity()) * (-1);
  v += n_of(sess, sess.generator(0));

  Json j = asph_to_json(sess, v);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["word"].get<std::vector<int>>().empty());      // length 0 first
  CHECK(j[1]["word"] == Json::array({0}));
  CHECK(j[2]["word"] == Json::array({0, 1}));
  CHECK(asph_from_json(sess, j) == v);

  Json bad = j;
  bad[0]["word"] = Json::array({1});  // finite letter, not a minimal representative
  CHECK_THROWS_AS(asph_from_json(sess, bad), std::invalid_argument);
}

TEST_CASE("jsf result round-trips through json") {
  Session sess = a2p3();
  JsfResult res = compute_jsf(sess, Weight{{1, 1}});
  Json j = jsf_result_to_json(sess, res);
  JsfResult back = jsf_result_from_json(sess, j);
  CHECK(back.lambda == res.lambda);
  CHECK(back.p == res.p);
  CHECK(back.method == res.method);
  CHECK(back.character == res.character);
  REQUIRE(back.asph.has_value());
  CHECK(*back.asph == *res.asph);
  CHECK(back.verdict == res.verdict);
  CHECK(jsf_result_to_json(sess, back) == j);

  // p-singular result has no asph section
  Json j2 = jsf_result_to_json(sess, compute_jsf(sess, Weight{{2, 0}}));
  CHECK_FALSE(j2.contains("asph"));
}

TEST_CASE("bound report round-trips through json") {
  Session sess = a2p3();
  BoundReport r = bounds(sess, sess.generator(0) * sess.generator(1));
  Json j = bound_report_to_json(r);
  BoundReport back = bound_report_from_json(j);
  CHECK(back.length_bound_sum == r.length_bound_sum);
  CHECK(back.length_bound_exp == r.length_bound_exp);
  REQUIRE(back.per_step.size() == r.per_step.size());
  for (std::size_t i = 0; i < r.per_step.size(); ++i) {
    CHECK(back.per_step[i].prefix == r.per_step[i].prefix);
    CHECK(back.per_step[i].contribution == r.per_step[i].contribution);
    CHECK(back.per_step[i].running == r.per_step[i].running);
  }
  CHECK(bound_report_to_json(back) == j);
}
