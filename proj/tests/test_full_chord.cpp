#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "boxed_bertrand/errors.hpp"
#include "boxed_bertrand/full_chord.hpp"
#include "boxed_bertrand/grid_circle.hpp"
#include "oracles.hpp"

using namespace boxed_bertrand;

namespace {

bool contains(const FullChord& chord, const GridBox& b) {
  return std::binary_search(chord.boxes.begin(), chord.boxes.end(), b);
}

}  // namespace

TEST_CASE("two-layer coincidence at n=8") {
  const std::int64_t n = 8;
  const auto first = full_chord(GridBox(-n, 0, n), GridBox(n, -1, n));
  const auto second = full_chord(GridBox(-n, -1, n), GridBox(n, 0, n));
  CHECK(first.same_boxes(second));
  CHECK(first.boxes.size() == 2 * (2 * n + 1));
  // Inside the ring the same picture sits one column in.
  const auto a = full_chord(GridBox(-n, 0, n), GridBox(n - 1, -1, n));
  const auto b = full_chord(GridBox(-n, -1, n), GridBox(n - 1, 0, n));
  CHECK(a.same_boxes(b));
}

TEST_CASE("adjacent boxes and diagonal neighbours") {
  const auto side = full_chord(GridBox(2, 1, 4), GridBox(3, 1, 4));
  CHECK(side.boxes == std::vector<GridBox>{GridBox(2, 1, 4), GridBox(3, 1, 4)});
  const auto up = full_chord(GridBox(2, 1, 4), GridBox(2, 2, 4));
  CHECK(up.boxes.size() == 2);
  // Diagonal neighbours share only a corner; the hull is a hexagon that cuts
  // into both off-diagonal boxes.
  const auto diag = full_chord(GridBox(0, 0, 4), GridBox(1, 1, 4));
  CHECK(diag.boxes.size() == 4);
}

TEST_CASE("long diagonal includes the middle box") {
  const auto chord = full_chord(GridBox(0, 0, 4), GridBox(2, 2, 4));
  CHECK(contains(chord, GridBox(1, 1, 4)));
  CHECK(contains(chord, GridBox(0, 1, 4)));
  CHECK_FALSE(contains(chord, GridBox(0, 2, 4)));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(full_chord(GridBox(0, 0, 4), GridBox(0, 0, 4)), InvalidChord);
  CHECK_THROWS_AS(full_chord(GridBox(0, 0, 4), GridBox(1, 0, 5)), ResolutionMismatch);
  CHECK_THROWS_AS(count_distinct_full_chords(64), CapExceeded);
  try {
    count_distinct_full_chords(40, 32);
    FAIL("expected a refusal");
  } catch (const CapExceeded& e) {
    CHECK(e.estimated_cost() > 0);
  }
  CHECK_THROWS_AS(count_distinct_full_chords(0), InvalidArgument);
}

TEST_CASE("symmetry, containment and bounding rectangle for n <= 8") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    const auto boxes = enumerate_circle(n).boxes();
    for (std::size_t x = 0; x < boxes.size(); ++x) {
      for (std::size_t y = x + 1; y < boxes.size(); ++y) {
        const auto& a = boxes[x];
        const auto& b = boxes[y];
        const auto ab = full_chord(a, b);
        REQUIRE(ab.same_boxes(full_chord(b, a)));
        REQUIRE(contains(ab, a));
        REQUIRE(contains(ab, b));
        REQUIRE(std::is_sorted(ab.boxes.begin(), ab.boxes.end()));
        const auto [il, ih] = std::minmax(a.i(), b.i());
        const auto [jl, jh] = std::minmax(a.j(), b.j());
        for (const auto& c : ab.boxes) {
          REQUIRE(c.i() >= il);
          REQUIRE(c.i() <= ih);
          REQUIRE(c.j() >= jl);
          REQUIRE(c.j() <= jh);
        }
      }
    }
  }
}

TEST_CASE("every box hit by sampled segments is reported") {
  const std::pair<GridBox, GridBox> pairs[] = {
      {GridBox(-8, 0, 8), GridBox(7, -3, 8)},
      {GridBox(0, 0, 4), GridBox(2, 2, 4)},
      {GridBox(-5, 3, 6), GridBox(4, -6, 6)},
      {GridBox(-1, -16, 16), GridBox(15, 3, 16)},
  };
  std::uint64_t seed = 11;
  for (const auto& [a, b] : pairs) {
    const auto chord = full_chord(a, b);
    std::set<std::pair<std::int64_t, std::int64_t>> exact;
    for (const auto& c : chord.boxes) exact.emplace(c.i(), c.j());
    const auto sampled = oracle::sampled_full_chord(a, b, 1000, seed++);
    for (const auto& hit : sampled) REQUIRE(exact.count(hit));
    CHECK(sampled.size() <= exact.size());
  }
}

TEST_CASE("hull and overlap primitives") {
  const auto hull = box_pair_hull(GridBox(0, 0, 3), GridBox(2, 0, 3));
  CHECK(hull.size() == 4);
  const auto hex = box_pair_hull(GridBox(0, 0, 3), GridBox(2, 2, 3));
  CHECK(hex.size() == 6);
  // Corner contact is not overlap.
  const std::vector<LatticePoint> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK_FALSE(box_meets_open_polygon(GridBox(1, 1, 3), square));
  CHECK_FALSE(box_meets_open_polygon(GridBox(1, 0, 3), square));
  CHECK(box_meets_open_polygon(GridBox(0, 0, 3), square));
}

TEST_CASE("distinct full chords at small n") {
  const auto one = count_distinct_full_chords(1);
  CHECK(one.unordered_pairs == 6);
  CHECK(one.distinct == 5);
  CHECK(one.ratio == doctest::Approx(5.0 / 6.0));

  const auto eight = count_distinct_full_chords(8, kDefaultFullChordCap, 1);
  CHECK(eight.unordered_pairs == 60 * 59 / 2);
  CHECK(eight.distinct < eight.unordered_pairs);
  CHECK(count_distinct_full_chords(8, kDefaultFullChordCap, 3).distinct == eight.distinct);
}

TEST_CASE("full chord csv") {
  std::ostringstream os;
  write_full_chord_csv(os, full_chord(GridBox(0, 0, 4), GridBox(1, 0, 4)));
  CHECK(os.str() == "i,j,n\n0,0,4\n1,0,4\n");
}
