#include "msarea/area.h"
#include "msarea/engine.h"

#include "doctest.h"
#include "json.hpp"
#include "test_support.h"

#include <numbers>
#include <sstream>

using namespace msarea;
using testing_support::dy;

TEST_CASE("compensated sum recovers lost low-order terms") {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i)
    s.add(1e-16);
  CHECK(s.value() == doctest::Approx(1.0 + 1e-13).epsilon(1e-15));
  CompensatedSum t;
  t.add(1e100);
  t.add(1.0);
  t.add(-1e100);
  CHECK(t.value() == 1.0);
}

TEST_CASE("empty sum gives pi") {
  const std::vector<double> b = {-0.5, 0.0, 0.0, 0.0};
  const std::int64_t pts[] = {0, 3};
  const auto s = accumulate(b, pts);
  REQUIRE(s.samples.size() == 2);
  CHECK(s.samples[0].area == std::numbers::pi);
  CHECK(s.samples[1].area == std::numbers::pi);
}

TEST_CASE("A_3 from exact coefficients") {
  const std::vector<DyadicRational> b = {dy(-1, 1), dy(1, 3), dy(-1, 2), dy(15, 7)};
  // 1/64 + 2/16 + 3 * 225/16384 = 2979/16384
  CHECK(exact_weighted_square_sum(b, 3) == dy(2979, 14));
  const double expect = std::numbers::pi * (13405.0 / 16384.0);
  CHECK(exact_area_bound(b, 3) == doctest::Approx(expect).epsilon(1e-16));
  std::vector<double> f;
  for (const auto& x : b)
    f.push_back(x.to_double());
  const std::int64_t pts[] = {3};
  CHECK(accumulate(f, pts).samples[0].area == doctest::Approx(expect).epsilon(1e-16));
}

TEST_CASE("sample points are sorted and checked") {
  const std::vector<double> b = {-0.5, 0.125, -0.25};
  const std::int64_t pts[] = {2, 1, 2};
  const auto s = accumulate(b, pts);
  REQUIRE(s.samples.size() == 2);
  CHECK(s.samples[0].n == 1);
  CHECK(s.samples[1].n == 2);
  const std::int64_t far[] = {3};
  CHECK_THROWS_AS(accumulate(b, far), std::invalid_argument);
}

TEST_CASE("area bounds are monotone and agree with exact sums") {
  FloatTable ft;
  ExactTable et;
  const auto fb = run(ft, 2049).b;
  const auto eb = run(et, 2049).b;
  const auto bounds = area_bounds(fb);
  for (std::size_t n = 1; n < bounds.size(); ++n)
    REQUIRE(bounds[n] <= bounds[n - 1]);
  CHECK(bounds[0] == std::numbers::pi);
  double worst = 0;
  for (std::int64_t n : {1, 10, 100, 511, 1024, 2048})
    worst = std::max(worst, std::abs(bounds[n] - exact_area_bound(eb, n)));
  CHECK(worst < 1e-12);
  std::vector<std::int64_t> pts;
  for (std::int64_t n = 0; n <= 2048; n += 128)
    pts.push_back(n);
  const auto naive = accumulate(fb, pts, Summation::naive);
  const auto comp = accumulate(fb, pts, Summation::compensated);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(std::abs(naive.samples[i].area - comp.samples[i].area) < 1e-12);
}

TEST_CASE("tail statistic") {
  const std::vector<double> b = {9.0, 1.0, -3.0, 2.0, -0.5};
  CHECK(max_abs_tail(b, 4) == 2.0);  // m in {3, 4}
  CHECK(max_abs_tail(b, 3) == 3.0);  // m in {2, 3}
}

TEST_CASE("export formats") {
  AreaSeries s;
  s.samples.push_back({3, 2.5706996147787});
  std::ostringstream csv;
  export_csv(s, csv);
  CHECK(csv.str() == "N,A_N\n3,2.570699615\n");
  std::ostringstream js;
  export_json(s, js);
  const auto parsed = nlohmann::json::parse(js.str());
  REQUIRE(parsed.is_array());
  CHECK(parsed[0]["N"] == 3);
  CHECK(parsed[0]["A_N"].get<double>() == 2.5706996147787);
  AreaSeries empty;
  std::ostringstream sink;
  CHECK_THROWS(export_csv(empty, sink));
  CHECK_THROWS(export_json(empty, sink));
  const auto summary = nlohmann::json::parse(summary_json("float", 10, 2.0, 1e-3));
  CHECK(summary["mode"] == "float");
  CHECK(summary["N"] == 10);
  CHECK(summary["area_upper_bound"] == 2.0);
  CHECK(summary["max_abs_bm_tail"] == 1e-3);
}
