#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "curvres/hilbert.hpp"

using namespace curvres;

TEST_CASE("numerator of a table") {
  auto table = minimal_table(ArithmeticSequence::validate(3, 1, 2));
  NumeratorPolynomial expected{{0, 1}, {8, -1}, {9, -1}, {10, -1}, {13, 1}, {14, 1}};
  CHECK(numerator(table) == expected);

  auto cusp = numerator(minimal_table(ArithmeticSequence::validate(2, 1, 1)));
  CHECK(cusp == NumeratorPolynomial{{0, 1}, {6, -1}});
}

TEST_CASE("series expansion") {
  // 1 / ((1 - t^2)(1 - t^3)) = 1 + t^2 + t^3 + t^4 + ...
  ArithmeticSequence s = ArithmeticSequence::validate(2, 1, 1);
  CHECK(expand(NumeratorPolynomial{{0, 1}}, s, 4) ==
        SeriesCoefficients{1, 0, 1, 1, 1});
  // (1 - t^6) / ((1 - t^2)(1 - t^3)) matches the membership indicator.
  CHECK(expand(NumeratorPolynomial{{0, 1}, {6, -1}}, s, 10) == semigroup_series(s, 10));

  CHECK_THROWS_AS(expand(NumeratorPolynomial{{0, 1}}, s, -1), std::out_of_range);
  CHECK_THROWS_AS(expand(NumeratorPolynomial{{-2, 1}}, s, 4), std::out_of_range);
}

TEST_CASE("series verification on golden curves") {
  for (auto [m0, d, n] : std::vector<std::array<long long, 3>>{
           {11, 2, 4}, {7, 5, 4}, {5, 1, 4}, {6, 1, 4}, {8, 1, 4}, {3, 1, 2}, {2, 1, 1}}) {
    auto s = ArithmeticSequence::validate(m0, d, n);
    auto report = verify_hilbert(s);
    CHECK(report.pass);
    CHECK_FALSE(report.first_mismatch.has_value());
  }
}

TEST_CASE("default bound covers the last shift plus the largest generator") {
  auto s = ArithmeticSequence::validate(3, 1, 2);
  auto report = verify_hilbert(s);
  CHECK(report.bound == 19);  // max shift 14 plus generator 5
  auto deep = verify_hilbert(s, 500);
  CHECK(deep.pass);
}

TEST_CASE("a corrupted table fails with the first mismatch degree") {
  auto table = minimal_table(ArithmeticSequence::validate(11, 2, 4));
  table.columns[1].erase(26);
  add_shift(table.columns[1], 27);
  auto report = verify_hilbert_table(table, 150);
  CHECK_FALSE(report.pass);
  REQUIRE(report.first_mismatch.has_value());
  CHECK(*report.first_mismatch == 26);
}

TEST_CASE("sweep: table series equals semigroup series") {
  long long checked = 0;
  for (long long n = 1; n <= 5; ++n) {
    for (long long m0 = n + 1; m0 <= 24; ++m0) {
      for (long long d = 1; d <= 5; ++d) {
        if (std::gcd(m0, d) != 1) continue;
        auto s = ArithmeticSequence::validate(m0, d, n);
        CHECK(verify_hilbert(s).pass);
        ++checked;
      }
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("report rendering") {
  auto s = ArithmeticSequence::validate(3, 1, 2);
  auto report = verify_hilbert(s);
  CHECK(render_text(report) == "series comparison up to degree 19: PASS\n");
  std::string json = to_json(report);
  CHECK(json.find("\"status\": \"PASS\"") != std::string::npos);
  CHECK(json.find("\"bound\": 19") != std::string::npos);
  CHECK(json.find("\"first_mismatch\": null") != std::string::npos);
  CHECK(to_json(report) == json);

  auto table = minimal_table(s);
  table.columns[2].erase(13);
  add_shift(table.columns[2], 12);
  auto bad = verify_hilbert_table(table, 19);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.first_mismatch.has_value());
  CHECK(*bad.first_mismatch == 12);
  CHECK(render_text(bad) ==
        "series comparison up to degree 19: FAIL (first mismatch at degree 12)\n");
  CHECK(to_json(bad).find("\"first_mismatch\": 12") != std::string::npos);
}
