#include "harperlab/shadows.hpp"

#include <stdexcept>
#include <random>

#include <doctest.h>

#include "harperlab/orders.hpp"
#include "oracles.hpp"

using namespace harperlab;

namespace {

UniformFamily uf(std::uint32_t ground, int r,
                 std::initializer_list<std::uint32_t> members) {
  return UniformFamily::create(ground, r, std::vector<std::uint32_t>(members));
}

}  // namespace

TEST_CASE("uniform family validation") {
  CHECK_THROWS_AS(uf(0b111, 2, {0b011, 0b011}), std::invalid_argument);
  CHECK_THROWS_AS(uf(0b111, 2, {0b1001}), std::invalid_argument);
  CHECK_THROWS_AS(uf(0b111, 2, {0b111}), std::invalid_argument);
  const UniformFamily f = uf(0b10110, 1, {0b00010, 0b10000});
  CHECK(f.ground_labels() == std::vector<int>{2, 3, 5});
  CHECK(f.ground_size() == 3);
}

TEST_CASE("lower shadow") {
  // d{{1,2},{1,3}} = {{1},{2},{3}}
  const UniformFamily f = uf(0b111, 2, {0b011, 0b101});
  CHECK(lower_shadow(f).members() == std::vector<std::uint32_t>{1, 2, 4});
  // d^{-r} of any nonempty family is {0}
  CHECK(lower_shadow(f, 2).members() == std::vector<std::uint32_t>{0});
  // shadow of the colex segment (4,2,3) has the oracle minimum size
  const UniformFamily seg = initial_segment_colex(4, 2, 3);
  CHECK(lower_shadow(seg).size() == 3);
  CHECK(lower_shadow(seg).size() == kk_min_lower_shadow(4, 2, 3));
  CHECK_THROWS_AS(lower_shadow(f, 3), std::invalid_argument);
  // empty family: empty shadow at every valid t
  const UniformFamily none = UniformFamily::empty(0b1111, 3);
  CHECK(lower_shadow(none, 2).size() == 0);
}

TEST_CASE("upper shadow respects the explicit ground set") {
  const UniformFamily f = uf(0b111, 1, {0b001});
  CHECK(upper_shadow(f).members() == std::vector<std::uint32_t>{0b011, 0b101});
  // same member, larger ground
  const UniformFamily g = uf(0b1111, 1, {0b001});
  CHECK(upper_shadow(g).size() == 3);
  // full layer maps onto the full next layer
  const UniformFamily layer = UniformFamily::full_layer(0b11111, 2);
  CHECK(upper_shadow(layer) == UniformFamily::full_layer(0b11111, 3));
  CHECK_THROWS_AS(upper_shadow(uf(0b111, 2, {0b011}), 2),
                  std::invalid_argument);
}

TEST_CASE("shadows agree with the element-list oracle") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int r = 1 + static_cast<int>(rng() % n);
    const auto layer = UniformFamily::full_layer((1u << n) - 1, r).members();
    std::vector<std::uint32_t> members;
    for (auto m : layer) {
      if (rng() & 1) members.push_back(m);
    }
    const UniformFamily fam =
        UniformFamily::create((1u << n) - 1, r, members);
    const auto brute_low = oracles::brute_lower_shadow(members);
    CHECK(lower_shadow(fam).size() == brute_low.size());
    if (r + 1 <= n) {
      const auto brute_up = oracles::brute_upper_shadow(members, (1u << n) - 1);
      CHECK(upper_shadow(fam).size() == brute_up.size());
    }
  }
}

TEST_CASE("uniform sections") {
  const UniformFamily f = uf(0b111, 1, {0b001});
  const auto [f10, f11] = uniform_sections(f, 1);
  CHECK(f10.members() == std::vector<std::uint32_t>{0});
  CHECK(f11.size() == 0);
  CHECK(f10.ground_mask() == 0b110);

  const UniformFamily g = uf(0b111, 2, {0b011, 0b101, 0b110});
  const auto [g10, g11] = uniform_sections(g, 1);
  CHECK(g10.members() == std::vector<std::uint32_t>{0b010, 0b100});
  CHECK(g11.members() == std::vector<std::uint32_t>{0b110});
  CHECK(g10.size() + g11.size() == g.size());

  const UniformFamily layer = UniformFamily::full_layer(0b11111, 3);
  const auto [l0, l1] = uniform_sections(layer, 4);
  CHECK(l0 == UniformFamily::full_layer(0b10111, 2));
  CHECK(l1 == UniformFamily::full_layer(0b10111, 3));

  CHECK_THROWS_AS(uniform_sections(f, 4), std::invalid_argument);
}

TEST_CASE("local LYM margin") {
  CHECK(local_lym_margin(UniformFamily::full_layer(0b1111, 2)) ==
        Rational::make(0, 1));
  CHECK(local_lym_margin(UniformFamily::empty(0b1111, 2)) ==
        Rational::make(0, 1));
  // {{1}} over [3]: 2/3 - 1/3 = 1/3
  CHECK(local_lym_margin(uf(0b111, 1, {0b001})) == Rational::make(1, 3));
}

TEST_CASE("local LYM margin nonnegative, zero iff empty or full (n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    for (int r = 0; r <= n - 1; ++r) {
      const auto layer = UniformFamily::full_layer((1u << n) - 1, r).members();
      REQUIRE(layer.size() <= 10);
      for (std::uint32_t pick = 0; pick < (1u << layer.size()); ++pick) {
        std::vector<std::uint32_t> members;
        for (std::size_t j = 0; j < layer.size(); ++j) {
          if (pick & (1u << j)) members.push_back(layer[j]);
        }
        const UniformFamily fam =
            UniformFamily::create((1u << n) - 1, r, members);
        const Rational margin = local_lym_margin(fam);
        REQUIRE(margin.num >= 0);
        const bool boundary = fam.size() == 0 || fam.size() == layer.size();
        REQUIRE((margin.num == 0) == boundary);
      }
    }
  }
}

TEST_CASE("shadow minimality predicates") {
  // colex segments are minimal at every t
  for (int n = 3; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) {
      for (std::uint64_t m = 0; m <= binomial(n, r); m += 2) {
        const UniformFamily seg = initial_segment_colex(n, r, m);
        for (int t = 1; t <= r; ++t) CHECK(is_shadow_minimal(seg, t));
      }
    }
  }
  // {{1,2},{3,4}}: shadow 4 > 3 = minimum
  const UniformFamily split = uf(0b1111, 2, {0b0011, 0b1100});
  CHECK(lower_shadow(split).size() == 4);
  CHECK(kk_min_lower_shadow(4, 2, 2) == 3);
  CHECK_FALSE(is_shadow_minimal(split, 1));
}

TEST_CASE("upper shadow minimality transfers through member complements") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const int r = 1 + static_cast<int>(rng() % (n - 1));
    const auto layer = UniformFamily::full_layer((1u << n) - 1, r).members();
    std::vector<std::uint32_t> members;
    for (auto m : layer) {
      if (rng() & 1) members.push_back(m);
    }
    const UniformFamily fam = UniformFamily::create((1u << n) - 1, r, members);
    const UniformFamily flipped = complement_members(fam);
    const int t = 1 + static_cast<int>(rng() % (n - r));
    CHECK(upper_shadow(fam, t).size() == lower_shadow(flipped, t).size());
    CHECK(is_upper_shadow_minimal(fam, t) == is_shadow_minimal(flipped, t));
  }
}

TEST_CASE("rational reduction") {
  CHECK(Rational::make(2, 4) == Rational::make(1, 2));
  CHECK(Rational::make(-2, -4) == Rational::make(1, 2));
  CHECK(Rational::make(3, -6) == Rational::make(-1, 2));
  CHECK_THROWS_AS(Rational::make(1, 0), std::invalid_argument);
}
