#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "boxed_bertrand/continuum.hpp"
#include "boxed_bertrand/errors.hpp"
#include "boxed_bertrand/grid_circle.hpp"
#include "boxed_bertrand/lattice.hpp"
#include "oracles.hpp"

using namespace boxed_bertrand;

namespace {

std::set<std::pair<std::int64_t, std::int64_t>> as_set(const std::vector<GridBox>& boxes) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& b : boxes) out.emplace(b.i(), b.j());
  return out;
}

}  // namespace

TEST_CASE("circle sizes") {
  CHECK(circle_size_formula(1) == 4);
  CHECK(circle_size_formula(3) == 20);
  CHECK(circle_size_formula(5) == 28);
  CHECK(circle_size_formula(2) == 12);
  CHECK_THROWS_AS(circle_size_formula(0), InvalidArgument);
  CHECK_THROWS_AS(enumerate_circle(0), InvalidArgument);
}

TEST_CASE("small rings by hand") {
  const auto ring1 = as_set(enumerate_circle(1).boxes());
  CHECK(ring1 == std::set<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {-1, 0}, {0, -1}, {-1, -1}});

  const std::set<std::pair<std::int64_t, std::int64_t>> ring2 = {
      {-2, -2}, {-2, -1}, {-2, 0}, {-2, 1}, {-1, -2}, {-1, 1},
      {0, -2},  {0, 1},   {1, -2}, {1, -1}, {1, 0},   {1, 1}};
  CHECK(as_set(enumerate_circle(2).boxes()) == ring2);
  CHECK(enumerate_circle(3).size() == 20);
}

TEST_CASE("enumeration equals the exhaustive scan and the column walk") {
  for (std::int64_t n = 1; n <= 80; ++n) {
    const auto ring = enumerate_circle(n);
    const auto listed = as_set(ring.boxes());
    REQUIRE(listed.size() == ring.size());
    REQUIRE(listed == oracle::exhaustive_circle(n));
    REQUIRE(as_set(scan_circle_columns(n)) == listed);
  }
}

TEST_CASE("ring order is counter-clockwise from angle 0") {
  for (std::int64_t n : {1, 2, 5, 13, 64, 325}) {
    const auto ring = enumerate_circle(n);
    for (std::size_t k = 0; k < ring.size(); ++k) {
      REQUIRE(ring.entry_angle(k) >= 0.0);
      REQUIRE(ring.entry_angle(k) < kTwoPi);
      if (k > 0) REQUIRE(ring.entry_angle(k - 1) <= ring.entry_angle(k));
    }
    // The box the circle enters at (1, 0) is just above the positive x-axis.
    CHECK(ring[0].box == GridBox(n - 1, 0, n));
    CHECK(ring[0].entry_angle == 0.0);
  }
}

TEST_CASE("size and class counts up to n=300") {
  for (std::int64_t n = 1; n <= 300; ++n) {
    const auto ring = enumerate_circle(n);
    const auto r = r2_of_square(static_cast<std::uint64_t>(n));
    REQUIRE(static_cast<std::int64_t>(ring.size()) == 8 * n - r);
    REQUIRE(static_cast<std::int64_t>(ring.count_vertical()) == 4 * n);
    REQUIRE(static_cast<std::int64_t>(ring.count_horizontal()) == 4 * n);
    REQUIRE(static_cast<std::int64_t>(ring.count_enters_at_vertex()) == r);
  }
}

TEST_CASE("class structure and symmetry") {
  for (std::int64_t n : {1, 4, 5, 25, 65, 130}) {
    const auto ring = enumerate_circle(n);
    const auto listed = as_set(ring.boxes());
    for (const auto& e : ring.entries()) {
      REQUIRE((e.vertical || e.horizontal));
      REQUIRE((e.vertical && e.horizontal) == e.enters_at_vertex);
      if (e.enters_at_vertex) REQUIRE(is_exceptional(e.box));
      const std::int64_t i = e.box.i(), j = e.box.j();
      // Reflections of the box [i, i+1] x [j, j+1] across the axes and diagonal.
      REQUIRE(listed.count({-i - 1, j}));
      REQUIRE(listed.count({i, -j - 1}));
      REQUIRE(listed.count({j, i}));
    }
  }
}

TEST_CASE("an exceptional box need not enter at a vertex") {
  // At n=5 the box [3,4]x[3,4]/5 has corner (3,4)/5 on the circle but the
  // counter-clockwise path enters it through a side.
  const auto ring = enumerate_circle(5);
  bool found = false;
  for (const auto& e : ring.entries()) {
    if (is_exceptional(e.box) && !e.enters_at_vertex) found = true;
  }
  CHECK(found);
}

TEST_CASE("ring csv") {
  std::ostringstream os;
  write_ring_csv(os, enumerate_circle(1));
  const std::string text = os.str();
  CHECK(text.rfind("i,j,n,angle_entry,vertical,horizontal,enters_at_vertex\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}

TEST_CASE("disc counts") {
  const std::int64_t expected[] = {4, 16, 36, 60, 88};
  for (std::int64_t n = 1; n <= 5; ++n) CHECK(disc_count(n) == expected[n - 1]);
  for (std::int64_t n = 1; n <= 20; ++n) {
    std::int64_t brute = 0;
    for (std::int64_t i = -n - 1; i <= n + 1; ++i) {
      for (std::int64_t j = -n - 1; j <= n + 1; ++j) {
        brute += static_cast<std::int64_t>(min_sq_dist_origin(GridBox(i, j, n)).num) < n * n;
      }
    }
    REQUIRE(disc_count(n) == brute);
  }
}

TEST_CASE("disc bound with a 50-digit pi") {
  using Big = boost::multiprecision::cpp_bin_float_50;
  const Big pi = boost::math::constants::pi<Big>();
  for (std::int64_t n = 1; n <= 512; ++n) {
    const Big area = pi * n * n;
    const Big disc = disc_count(n);
    REQUIRE(area <= disc);
    REQUIRE(disc <= area + circle_size_formula(n));
  }
}

TEST_CASE("ordered pairs outnumber disc boxes") {
  for (std::int64_t n = 2; n <= 200; ++n) {
    const std::int64_t c = circle_size_formula(n);
    REQUIRE(c * c - c > disc_count(n));
  }
}

TEST_CASE("arc validation") {
  CHECK_THROWS_AS(validate_arc({1.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(validate_arc({-0.1, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(validate_arc({0.0, 7.0}), InvalidArgument);
  CHECK_NOTHROW(validate_arc({0.0, kTwoPi}));
}

TEST_CASE("whole-circle arc counts everything") {
  for (std::int64_t n : {1, 3, 8, 100}) {
    const auto ring = enumerate_circle(n);
    CHECK(arc_count(ring, {0.0, kTwoPi}) == static_cast<std::int64_t>(ring.size()));
    CHECK(arc_count(ring, {0.0, kTwoPi}, ArcFilter::kVertical) == 4 * n);
    CHECK(arc_count(ring, {0.0, kTwoPi}, ArcFilter::kHorizontal) == 4 * n);
  }
}

TEST_CASE("arc counts match a per-box edge-crossing oracle") {
  const double arcs[][2] = {{0.1, 1.3}, {0.0, std::numbers::pi / 3}, {2.0, 5.5}, {4.0, 6.2}, {0.7, 0.71}};
  for (std::int64_t n : {3, 7, 16, 33, 100}) {
    const auto ring = enumerate_circle(n);
    for (const auto& a : arcs) {
      REQUIRE_MESSAGE(arc_count(ring, {a[0], a[1]}) == oracle::scan_arc_count(n, a[0], a[1]),
                      "n=" << n << " arc=(" << a[0] << "," << a[1] << ")");
    }
  }
}

TEST_CASE("clock arc at n=4096") {
  const std::int64_t n = 4096;
  const auto ring = enumerate_circle(n);
  CHECK(ring.size() == 32764);
  const double third = std::numbers::pi / 3;
  const auto count = arc_count(ring, {0.0, third});
  const double estimate = (std::sin(third) - std::cos(third) + 1.0) * n;
  CHECK(std::abs(static_cast<double>(count) - estimate) <= 16.0);
  CHECK(count == oracle::scan_arc_count(n, 0.0, third));

  const auto vertical = arc_count(ring, {0.0, std::numbers::pi / 2}, ArcFilter::kVertical);
  CHECK(std::abs(vertical - n) <= 2);
}

TEST_CASE("angular histogram") {
  const auto ring = enumerate_circle(4096);
  const auto one = angular_histogram(ring, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].count == static_cast<std::int64_t>(ring.size()));
  CHECK_THROWS_AS(angular_histogram(ring, 0), InvalidArgument);

  const auto bins = angular_histogram(ring, 8);
  REQUIRE(bins.size() == 8);
  const double total = static_cast<double>(ring.size());
  const double mass = oracle::simpson(density_f, 0.0, std::numbers::pi / 4);
  CHECK(std::abs(bins[0].count / total - mass) <= 2e-3);
  for (std::size_t k = 0; k < 8; ++k) CHECK(bins[k].count == bins[(k + 2) % 8].count);
  CHECK(bins[0].expected == doctest::Approx(total * mass).epsilon(1e-9));

  const auto fine = angular_histogram(ring, 24);
  for (std::size_t k = 0; k < 24; ++k) CHECK(fine[k].count == fine[(k + 6) % 24].count);
}
