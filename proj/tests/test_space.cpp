#include <doctest.h>

#include "metrize/space_io.hpp"
#include "oracle.hpp"

using namespace metrize;

TEST_CASE("make_space accepts singleton and two-point spaces") {
  DistanceSpace one = oracle::make({"x"}, {{"0"}});
  CHECK(one.size() == 1);
  DistanceSpace two = oracle::make({"x", "y"}, {{"0", "1"}, {"1", "0"}});
  CHECK(two.d(0, 1).rat() == Rational(1));
}

TEST_CASE("make_space enumerates every violating cell") {
  PointSet pts;
  pts.labels = {"x", "y", "z"};
  DistanceMatrix grid(3);
  grid.at(0, 1) = Scalar::exact(1);
  grid.at(1, 0) = Scalar::exact(2);       // asymmetric
  grid.at(0, 2) = Scalar::exact(-1);      // negative
  grid.at(2, 0) = Scalar::exact(-1);
  grid.at(1, 1) = Scalar::exact(3);       // nonzero diagonal
  // (1,2)/(2,1) left at zero: degenerate pair
  try {
    make_space(std::move(pts), std::move(grid));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.cells().size() >= 4);
  }
}

TEST_CASE("zero off-diagonal entries need allow_degenerate") {
  std::vector<std::vector<std::string>> cells{{"0", "0"}, {"0", "0"}};
  CHECK_THROWS_AS(oracle::make({"x", "y"}, cells), ValidationError);
  DistanceSpace sp = oracle::make({"x", "y"}, cells, {}, /*allow_degenerate=*/true);
  CHECK(degenerate_pairs(sp).size() == 1);
}

TEST_CASE("power_entrywise takes perfect roots exactly to float") {
  DistanceSpace sp = oracle::make({"x", "y"}, {{"0", "4"}, {"4", "0"}});
  DistanceSpace half = power_entrywise(sp, Scalar::exact(1, 2));
  CHECK(!half.d(0, 1).is_exact());
  CHECK(half.d(0, 1).value() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(half.d(0, 0).value() == 0.0);

  DistanceSpace same = power_entrywise(sp, Scalar::exact(1));
  CHECK(same.d(0, 1).rat() == Rational(4));

  CHECK(power_entrywise(sp, Scalar::exact(1, 3)).d(0, 1).value() ==
        doctest::Approx(std::pow(4.0, 1.0 / 3)));
  CHECK_THROWS_AS(power_entrywise(sp, Scalar::exact(2)), Error);
  CHECK_THROWS_AS(power_entrywise(sp, Scalar()), Error);
}

TEST_CASE("min and max distance helpers") {
  DistanceSpace sp = oracle::make({"a", "b", "c"},
                                  {{"0", "1/4", "3"}, {"1/4", "0", "1/2"}, {"3", "1/2", "0"}});
  CHECK(min_positive_distance(sp)->rat() == Rational(1, 4));
  CHECK(max_distance(sp).rat() == Rational(3));
  DistanceSpace one = oracle::make({"x"}, {{"0"}});
  CHECK(!min_positive_distance(one).has_value());
}

TEST_CASE("claimed class round-trips through its string form") {
  for (const char* text : {"raw-distance", "metric", "b-metric(2)", "b-metric(5/2)",
                           "two-generalized", "nu-generalized(3)", "F-distance", "CF-metric"}) {
    CHECK(ClaimedClass::parse(text).str() == text);
  }
  CHECK_THROWS_AS(ClaimedClass::parse("ultra"), Error);
  CHECK_THROWS_AS(ClaimedClass::parse("b-metric"), Error);
}

TEST_CASE("CSV round-trip is the identity on rational entries") {
  DistanceSpace sp = oracle::make({"a", "b", "c"},
                                  {{"0", "1/3", "2"}, {"1/3", "0", "9/7"}, {"2", "9/7", "0"}},
                                  ClaimedClass{SpaceKind::Metric, {}});
  std::string csv = space_to_csv(sp);
  DistanceSpace back = space_from_csv(csv);
  REQUIRE(back.size() == 3);
  CHECK(back.points.labels == sp.points.labels);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(back.d(i, j).rat() == sp.d(i, j).rat());
}

TEST_CASE("CSV rejects malformed grids") {
  CHECK_THROWS_AS(space_from_csv(",a,b\na,0,1\n"), Error);           // missing row
  CHECK_THROWS_AS(space_from_csv(",a,b\na,0\nb,1,0\n"), Error);      // short row
  CHECK_THROWS_AS(space_from_csv(",a,b\nb,0,1\na,1,0\n"), Error);    // label mismatch
  CHECK_THROWS_AS(space_from_csv(",a,b\na,0,x\nb,x,0\n"), Error);    // bad cell
  CHECK_THROWS_AS(space_from_csv(",a,b\na,0,2\nb,1,0\n"), ValidationError);
}

TEST_CASE("JSON round-trip keeps exact entries exact") {
  DistanceSpace sp = oracle::make({"p", "q"}, {{"0", "22/7"}, {"22/7", "0"}},
                                  ClaimedClass{SpaceKind::BMetric, Scalar::exact(2)});
  Json j = space_to_json(sp);
  CHECK(j["mode"] == "exact");
  CHECK(j["claimed_class"] == "b-metric(2)");
  DistanceSpace back = space_from_json(j);
  CHECK(back.d(0, 1).rat() == Rational(22, 7));
  CHECK(back.claimed.str() == "b-metric(2)");
}

TEST_CASE("JSON in exact mode rejects fractional numbers") {
  Json j{{"labels", {"a", "b"}}, {"entries", {{0, 0.5}, {0.5, 0}}}};
  CHECK_THROWS_AS(space_from_json(j), Error);
  DistanceSpace sp = space_from_json(j, /*as_float=*/true);
  CHECK(!sp.d(0, 1).is_exact());
  // A "mode": "float" tag opts the whole file in.
  Json jf{{"labels", {"a", "b"}}, {"entries", {{0, 0.5}, {0.5, 0}}}, {"mode", "float"}};
  CHECK(space_from_json(jf).d(0, 1).value() == doctest::Approx(0.5));
}

TEST_CASE("JSON integers stay exact and coords travel") {
  Json j{{"labels", {"a", "b"}},
         {"entries", {{0, 3}, {3, 0}}},
         {"coords", {"0", "1/2"}}};
  DistanceSpace sp = space_from_json(j);
  CHECK(sp.d(0, 1).rat() == Rational(3));
  REQUIRE(sp.points.has_coords());
  CHECK(sp.points.coords[1].rat() == Rational(1, 2));
  Json out = space_to_json(sp);
  CHECK(out["coords"][1] == "1/2");
}

TEST_CASE("scalar_from_json follows the entry rules") {
  CHECK(scalar_from_json(Json("5/8")).rat() == Rational(5, 8));
  CHECK(scalar_from_json(Json(4)).rat() == Rational(4));
  CHECK_THROWS_AS(scalar_from_json(Json(0.25)), Error);
  CHECK(scalar_from_json(Json(0.25), true).value() == doctest::Approx(0.25));
  CHECK_THROWS_AS(scalar_from_json(Json(true)), Error);
}

TEST_CASE("PointSet::find locates labels") {
  DistanceSpace sp = oracle::make({"a", "b"}, {{"0", "1"}, {"1", "0"}});
  CHECK(sp.points.find("b") == size_t{1});
  CHECK(!sp.points.find("zz").has_value());
}

TEST_CASE("fnv1a64 digest is stable") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64("a") != fnv1a64("b"));
  CHECK(fnv1a64_hex("abc").size() == 16);
}