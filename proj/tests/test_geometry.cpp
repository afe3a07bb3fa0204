#include <random>
#include <vector>

#include "doctest.h"
#include "properties.hpp"
#include "jchains/geometry.hpp"

using namespace jchains;

TEST_CASE("Corner validation, rendering and realization") {
  CHECK(Corner::make(7, 4, 3).realize() == Point{Rational(7, 4), Rational(3)});
  CHECK(Corner::integral(4, 12).realize() == Point{Rational(4), Rational(12)});
  CHECK(Corner::make(14, 4, 6).realize() == Point{Rational(7, 2), Rational(6)});
  CHECK(Corner::make(14, 4, 6).to_string() == "14⊛4:6");
  CHECK(Corner::integral(4, 12).to_string() == "4:12");
  CHECK_THROWS_AS(Corner::make(0, 1, 3), DomainError);
  CHECK_THROWS_AS(Corner::make(1, 0, 3), DomainError);
  CHECK_THROWS_AS(Corner::make(1, 1, -1), DomainError);
}

TEST_CASE("corners keep their level unreduced") {
  const Corner c = Corner::make(14, 4, 6);
  const Corner r = Corner::make(7, 2, 6);
  CHECK(c != r);
  CHECK(same_realization(c, r));
  CHECK_FALSE(same_realization(c, Corner::make(7, 2, 5)));
}

TEST_CASE("valuations") {
  CHECK(val(Direction(1, 1), Corner::integral(4, 12).realize()) == Rational(16));
  CHECK(val(Direction(1, -1), Corner::make(7, 4, 3).realize()) == Rational(-5, 4));
  CHECK(val(Direction(4, -1), Corner::integral(8, 24).realize()) == Rational(8));
  CHECK(val_scaled(Direction(8, -3), Corner::make(14, 4, 6)) == 40);
  CHECK(Corner::make(7, 4, 3).v1m1_scaled() == -5);
}

TEST_CASE("dir examples") {
  CHECK(dir(Rational(9, 4), Rational(4)) == Direction(16, -9));
  CHECK(dir(Rational(3), Rational(12)) == Direction(4, -1));
  CHECK(dir(Rational(6), Rational(24)) == Direction(4, -1));
  CHECK(dir_between(Corner::make(14, 4, 6).realize(), Corner::make(5, 4, 2).realize()) ==
        Direction(16, -9));
  CHECK_THROWS_AS(dir(Rational(0), Rational(0)), DomainError);
  CHECK_THROWS_AS(Direction(2, -4), DomainError);
  CHECK_THROWS_AS(Direction(0, 0), DomainError);
}

TEST_CASE("dir is invariant under positive scaling and orthogonal to its argument") {
  const auto r = support::dir_scale_invariance(5000, 7);
  CHECK_MESSAGE(r.ok, r.detail);

  // dir_between agrees with the valuation: both endpoints have equal value
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> coord(-60, 60);
  std::uniform_int_distribution<Int> pos(1, 60);
  for (int trial = 0; trial < 5000; ++trial) {
    const Rational vx(coord(rng), pos(rng));
    const Rational vy(coord(rng), pos(rng));
    if (vx == Rational(0) && vy == Rational(0)) continue;
    const Point p{Rational(coord(rng), pos(rng)), Rational(coord(rng), pos(rng))};
    const Point p2{p.x + vx, p.y + vy};
    const Direction e = dir_between(p2, p);
    REQUIRE(val(e, p2) == val(e, p));
  }
}

TEST_CASE("cmp_dir examples") {
  CHECK(dir_less(Direction(0, -1), Direction(1, -2)));
  CHECK(dir_less(Direction(1, -2), Direction(1, -1)));
  CHECK(dir_less(Direction(4, -1), Direction(1, 0)));
  CHECK(compare_directions(Direction(3, -1), Direction(3, -1)) == std::strong_ordering::equal);
  CHECK(compare_directions(Direction(1, 0), Direction(16, -9)) == std::strong_ordering::greater);
}

TEST_CASE("cmp_dir is a strict total order on primitive directions of the sector") {
  const auto r = support::cmp_dir_total_order(8);
  CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("sector membership") {
  CHECK(in_sector_I(Direction(1, 0)));
  CHECK(in_sector_I(Direction(4, -1)));
  CHECK(in_sector_I(Direction(16, -9)));
  CHECK_FALSE(in_sector_I(Direction(1, -1)));
  CHECK_FALSE(in_sector_I(Direction(1, 1)));
  CHECK(in_final_pair_sector(Direction(0, -1)));
  CHECK(in_final_pair_sector(Direction(1, -2)));
  CHECK_FALSE(in_final_pair_sector(Direction(1, -1)));
  CHECK_FALSE(in_final_pair_sector(Direction(1, 0)));
}

TEST_CASE("gap") {
  CHECK(gap(16, 4) == 4);
  CHECK(gap(4, 1) == 4);
  CHECK(gap(3, 3) == 1);
  CHECK_THROWS_AS(gap(0, 3), DomainError);
  for (Int rho = 1; rho <= 60; ++rho) {
    for (Int l = 1; l <= 60; ++l) {
      const Int g = gap(rho, l);
      REQUIRE(rho % g == 0);
      REQUIRE((g == 1) == (l % rho == 0));
    }
  }
}
