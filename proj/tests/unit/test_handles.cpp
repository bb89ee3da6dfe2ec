#include <doctest.h>

#include <gemkit/errors.hpp>
#include <gemkit/handles.hpp>

#include "fixtures.hpp"

using namespace gemkit;

TEST_SUITE("handle_predictor") {
  TEST_CASE("closed predictions") {
    const auto r0 = predict_closed(0);
    REQUIRE(r0.variants.size() == 2);
    CHECK(r0.variants[0].handles == HandleVector{{1, 2, 1, 1, 1}});
    CHECK(r0.variants[1].handles == HandleVector{{1, 1, 0, 1, 1}});
    CHECK(r0.chi_certificate);
    CHECK(r0.conditional.empty());
    CHECK_FALSE(r0.realized_label);

    const auto r3 = predict_closed(3);
    CHECK(r3.variants[0].handles == HandleVector{{1, 2, 4, 1, 1}});
    CHECK(r3.variants[1].handles == HandleVector{{1, 1, 3, 1, 1}});
  }

  TEST_CASE("boundary predictions") {
    const auto r0 = predict_boundary(0);
    REQUIRE(r0.variants.size() == 2);
    CHECK(r0.variants[0].handles == HandleVector{{1, 2, 1, 0, 0}});
    CHECK(r0.variants[1].handles == HandleVector{{1, 1, 0, 0, 0}});
    for (const auto& v : r0.variants) {
      CHECK(v.cap == Cap::CircleTimesBall);
      CHECK(v.asserted);
    }
    REQUIRE(r0.conditional.size() == 2);
    CHECK(r0.conditional[0].handles == HandleVector{{1, 2, 1, 1, 0}});
    CHECK(r0.conditional[1].handles == HandleVector{{1, 1, 0, 1, 0}});
    for (const auto& v : r0.conditional) CHECK_FALSE(v.asserted);

    const auto r2 = predict_boundary(2);
    CHECK(r2.variants[0].handles == HandleVector{{1, 2, 3, 0, 0}});
    CHECK(r2.variants[1].handles == HandleVector{{1, 1, 2, 0, 0}});
  }

  TEST_CASE("negative beta2") {
    for (auto f : {predict_closed, predict_boundary}) {
      try {
        f(-1, std::nullopt);
        FAIL("expected NegativeBetti");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeBetti);
      }
    }
  }

  TEST_CASE("V' data selects a variant") {
    CHECK(predict_closed(0, v_prime_constraints(0, 2, 1)).realized_label == "(1)");
    CHECK(predict_closed(0, v_prime_constraints(0, 1, 0)).realized_label == "(2)");
    CHECK_FALSE(predict_closed(0, v_prime_constraints(0, 0, -1)).realized_label);
  }

  TEST_CASE("chi consistency") {
    CHECK(chi_consistency(HandleVector{{1, 1, 0, 1, 1}}, 0));
    CHECK(chi_consistency(HandleVector{{1, 2, 1, 1, 1}}, 0));
    CHECK_FALSE(chi_consistency(HandleVector{{1, 0, 0, 0, 1}}, 0));
    CHECK(HandleVector{{1, 0, 0, 0, 1}}.alternating_sum() == 2);
    CHECK(HandleVector{{1, 2, 1, 1, 1}}.to_string() == "(1,2,1,1,1)");
  }

  TEST_CASE("split statistics") {
    const auto s1 = split_statistics(fixtures::catalog_graph("s1xs3_8"), 1, 4);
    CHECK(s1.pair == ColorSet{1, 4});
    CHECK(s1.triple == ColorSet{0, 2, 3});
    CHECK(s1.pair_residue_count == 3);
    CHECK(s1.triple_residue_count == 2);
    CHECK(s1.neighbourhood_is_circle_times_ball);
    int triangles = 0;
    for (int size : s1.family_sizes) triangles += size;
    CHECK(triangles == s1.pair_residue_count);
    CHECK(s1.triple_edges.size() == 3);
    for (const auto& [edge, count] : s1.triple_edges) CHECK(count == 2);

    const auto s4 = split_statistics(fixtures::s4_2(), 1, 4);
    CHECK(s4.pair_residue_count == 1);
    CHECK_FALSE(s4.neighbourhood_is_circle_times_ball);

    for (auto [i, j] : {std::pair{1, 7}, std::pair{2, 2}, std::pair{-1, 0}}) {
      try {
        split_statistics(fixtures::s4_2(), i, j);
        FAIL("expected BadPair");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadPair);
      }
    }
  }
}
