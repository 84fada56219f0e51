#include "harperlab/cube.hpp"

#include <stdexcept>
#include <random>

#include <doctest.h>

#include "harperlab/orders.hpp"
#include "oracles.hpp"

using namespace harperlab;

TEST_CASE("distance basics") {
  // d({1,2},{2,3}) = |{1,3}| = 2
  CHECK(distance(Vertex(0b011, 3), Vertex(0b110, 3)) == 2);
  CHECK(distance(Vertex(5, 3), Vertex(5, 3)) == 0);
  for (int n = 1; n <= 8; ++n) {
    CHECK(distance(Vertex(0, n), Vertex((1u << n) - 1, n)) == n);
  }
  CHECK_THROWS_AS(distance(Vertex(0, 3), Vertex(0, 4)), std::invalid_argument);
}

TEST_CASE("distance symmetry and triangle inequality") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, 255);
  for (int trial = 0; trial < 500; ++trial) {
    const Vertex x(pick(rng), 8), y(pick(rng), 8), z(pick(rng), 8);
    CHECK(distance(x, y) == distance(y, x));
    CHECK(distance(x, z) <= distance(x, y) + distance(y, z));
    CHECK(distance(x, y) == oracles::brute_distance(x.mask, y.mask));
  }
}

TEST_CASE("hamming_ball small cases") {
  // B(0,1) in Q_3 = {0, 1, 2, 4}
  CHECK(hamming_ball(3, Vertex(0, 3), 1) == Family::of(3, {0, 1, 2, 4}));
  CHECK(hamming_ball(4, Vertex(9, 4), 0) == Family::of(4, {9}));
  // B({1,2},1) in Q_3 = {{1,2},{1},{2},{1,2,3}} = masks {3,1,2,7}
  CHECK(hamming_ball(3, Vertex(3, 3), 1) == Family::of(3, {1, 2, 3, 7}));
  // r above n clamps to the full cube
  CHECK(hamming_ball(3, Vertex(0, 3), 7) == Family::full(3));
  CHECK_THROWS_AS(hamming_ball(3, Vertex(0, 3), -1), std::invalid_argument);
}

TEST_CASE("hamming_ball sizes are f(n,r)") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 12; ++n) {
    std::uniform_int_distribution<std::uint32_t> pick(0, (1u << n) - 1);
    for (int r = 0; r <= n; ++r) {
      const Vertex x(pick(rng), n);
      CHECK(hamming_ball(n, x, r).size() == f_value(n, r));
    }
  }
}

TEST_CASE("neighborhood matches the pairwise-distance oracle") {
  // N({0}) in Q_2 = {0,1,2}
  CHECK(neighborhood(Family::of(2, {0})) == Family::of(2, {0, 1, 2}));
  // N({{1},{2},{3}}) in Q_3 = B(0,2), size 7
  const Family punctured = Family::of(3, {1, 2, 4});
  CHECK(neighborhood(punctured) == hamming_ball(3, Vertex(0, 3), 2));
  CHECK(neighborhood(punctured).size() == 7);
  // N(B(0,1)) in Q_3 = B(0,2)
  CHECK(neighborhood(hamming_ball(3, Vertex(0, 3), 1)) ==
        hamming_ball(3, Vertex(0, 3), 2));

  std::mt19937_64 rng(23);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Family a = oracles::random_family(n, rng);
      CHECK(neighborhood(a) == oracles::brute_neighborhood(a));
    }
  }
}

TEST_CASE("t_neighborhood iterates, saturates, and composes") {
  std::mt19937_64 rng(29);
  for (int n = 2; n <= 6; ++n) {
    const Family a = oracles::random_family(n, rng);
    CHECK(t_neighborhood(a, 0) == a);
    for (int t = 1; t <= n; ++t) {
      CHECK(t_neighborhood(a, t) == oracles::brute_t_neighborhood(a, t));
    }
    if (!a.empty()) {
      CHECK(t_neighborhood(a, n) == Family::full(n));
      CHECK(t_neighborhood(a, n + 3) == Family::full(n));
    }
    // composition: N^{s+t} = N^t(N^s)
    for (int s = 0; s <= 3; ++s) {
      for (int t = 0; t <= 3; ++t) {
        CHECK(t_neighborhood(a, s + t) ==
              t_neighborhood(t_neighborhood(a, s), t));
      }
    }
  }
  CHECK(t_neighborhood(Family(4), 3) == Family(4));  // empty stays empty
}

TEST_CASE("punctured ball expands to the grown ball") {
  // N^t(B(x,r) minus x) = B(x, r+t) for r >= 1
  for (int n = 3; n <= 6; ++n) {
    for (int r = 1; r <= n - 1; ++r) {
      Family a = hamming_ball(n, Vertex(5 & ((1u << n) - 1), n), r);
      a.erase(5 & ((1u << n) - 1));
      for (int t = 1; t <= n - r; ++t) {
        CHECK(t_neighborhood(a, t) ==
              hamming_ball(n, Vertex(5 & ((1u << n) - 1), n), r + t));
      }
    }
  }
}

TEST_CASE("complement involution and sizes") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 8; ++n) {
    const Family a = oracles::random_family(n, rng);
    const Family c = complement_family(a);
    CHECK(a.size() + c.size() == a.universe_size());
    CHECK(complement_family(c) == a);
  }
  CHECK(complement_family(Family(3)) == Family::full(3));
}

TEST_CASE("sections split and join exactly") {
  // sections(B_1 in Q_4, 1): plus = B({2},1), minus = B(0,1) over Q_3.
  // B_1 = B(0,1) u B({1,2},1) in Q_4.
  Family b1(4);
  for (auto m : hamming_ball(4, Vertex(0, 4), 1).members()) b1.insert(m);
  for (auto m : hamming_ball(4, Vertex(3, 4), 1).members()) b1.insert(m);
  const SectionPair p = sections(b1, 1);
  CHECK(p.plus == hamming_ball(3, Vertex(1, 3), 1));
  CHECK(p.minus == hamming_ball(3, Vertex(0, 3), 1));
  CHECK(join_sections(p) == b1);

  const Family full = Family::full(5);
  const SectionPair pf = sections(full, 3);
  CHECK(pf.plus == Family::full(4));
  CHECK(pf.minus == Family::full(4));

  std::mt19937_64 rng(37);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Family a = oracles::random_family(n, rng);
      for (int i = 1; i <= n; ++i) {
        const SectionPair sp = sections(a, i);
        CHECK(sp.plus.size() + sp.minus.size() == a.size());
        CHECK(join_sections(sp) == a);
      }
    }
  }
}

TEST_CASE("neighborhood commutes with sections") {
  // N(A)_+ = N(A_+) u A_-, N(A)_- = N(A_-) u A_+
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      const Family a = oracles::random_family(n, rng);
      const Family na = neighborhood(a);
      for (int i = 1; i <= n; ++i) {
        const SectionPair sa = sections(a, i);
        const SectionPair sn = sections(na, i);
        Family expect_plus = neighborhood(sa.plus);
        for (auto m : sa.minus.members()) expect_plus.insert(m);
        Family expect_minus = neighborhood(sa.minus);
        for (auto m : sa.plus.members()) expect_minus.insert(m);
        CHECK(sn.plus == expect_plus);
        CHECK(sn.minus == expect_minus);
      }
    }
  }
}

namespace {

// |N^t(A_+) u N^{t-1}(A_-)| + |N^t(A_-) u N^{t-1}(A_+)|, the corrected
// two-term section recursion.
std::uint64_t section_recursion_size(const Family& a, int i, int t) {
  const SectionPair p = sections(a, i);
  Family first = t_neighborhood(p.plus, t);
  for (auto m : t_neighborhood(p.minus, t - 1).members()) first.insert(m);
  Family second = t_neighborhood(p.minus, t);
  for (auto m : t_neighborhood(p.plus, t - 1).members()) second.insert(m);
  return first.size() + second.size();
}

}  // namespace

TEST_CASE("section recursion for |N^t|, exhaustive at n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    const std::uint32_t families = std::uint32_t{1} << (1 << n);
    for (std::uint32_t bits = 0; bits < families; ++bits) {
      Family a(n);
      a.mutable_words()[0] = bits;
      // |N^t(A)| for t = 0..n, computed once
      std::vector<std::uint64_t> direct{a.size()};
      Family cur = a;
      for (int t = 1; t <= n; ++t) {
        cur = neighborhood(cur);
        direct.push_back(cur.size());
      }
      for (int i = 1; i <= n; ++i) {
        const SectionPair p = sections(a, i);
        std::vector<std::uint64_t> pw{p.plus.words()[0]};
        std::vector<std::uint64_t> mw{p.minus.words()[0]};
        Family fp = p.plus, fm = p.minus;
        for (int t = 1; t <= n; ++t) {
          fp = neighborhood(fp);
          fm = neighborhood(fm);
          pw.push_back(fp.words()[0]);
          mw.push_back(fm.words()[0]);
        }
        for (int t = 1; t <= n; ++t) {
          const std::uint64_t via_sections =
              std::popcount(pw[t] | mw[t - 1]) + std::popcount(mw[t] | pw[t - 1]);
          REQUIRE(direct[t] == via_sections);
        }
      }
    }
  }
}

TEST_CASE("section recursion randomized at n <= 8") {
  std::mt19937_64 rng(43);
  int checked = 0;
  while (checked < 1200) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const Family a = oracles::random_family(n, rng);
    const int i = 1 + static_cast<int>(rng() % n);
    const int t = 1 + static_cast<int>(rng() % n);
    REQUIRE(t_neighborhood(a, t).size() == section_recursion_size(a, i, t));
    ++checked;
  }
}

TEST_CASE("family membership order helper") {
  const Family a = Family::of(3, {0, 3});
  const Family b = Family::of(3, {0, 5});
  CHECK(family_precedes(a, b));
  CHECK_FALSE(family_precedes(b, a));
  CHECK_FALSE(family_precedes(a, a));
}
