// The heavier exhaustive and randomized property sweeps: the shadow
// decomposition identities, the full n=5 classification cross-checks, the
// transposition criterion at n = 5 and 6, and the large randomized
// equivariance batches.

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include <doctest.h>

#include "harperlab/classifier.hpp"
#include "harperlab/constructions.hpp"
#include "harperlab/extremality.hpp"
#include "harperlab/isomorphism.hpp"
#include "harperlab/orders.hpp"
#include "harperlab/shadows.hpp"
#include "oracles.hpp"

using namespace harperlab;

namespace {

int worker_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 4u));
}

// Members of f lifted by the label "n" (assumed outside f's ground).
std::vector<std::uint32_t> lift(const UniformFamily& f, int n) {
  std::vector<std::uint32_t> out;
  for (auto m : f.members()) out.push_back(m | (std::uint32_t{1} << (n - 1)));
  return out;
}

std::set<std::uint32_t> as_set(const std::vector<std::uint32_t>& v) {
  return {v.begin(), v.end()};
}

UniformFamily shadow_or_self(const UniformFamily& f, int t) {
  return t == 0 ? f : lower_shadow(f, t);
}

UniformFamily upper_or_self(const UniformFamily& f, int t) {
  return t == 0 ? f : upper_shadow(f, t);
}

// One instance of the Theorem-2-proof shape: A = X^(>= k) + A1 + A0 with
// A1 in the (k-1)-layer and A0 in the (k-2)-layer of [n-1]. Checks the
// shadow decomposition (2), the expansion formulas (4) and (10), and the
// two-ground upper-shadow identity (5)/(8).
void check_decomposition_instance(int n, int k,
                                  const std::vector<std::uint32_t>& a1,
                                  const std::vector<std::uint32_t>& a0) {
  const std::uint32_t ground_n = (std::uint32_t{1} << n) - 1;
  const std::uint32_t ground_sub = ground_n >> 1;  // [n-1]
  const UniformFamily fam_a1 = UniformFamily::create(ground_sub, k - 1, a1);
  const UniformFamily fam_a0 = UniformFamily::create(ground_sub, k - 2, a0);

  // A as a vertex family
  Family family(n);
  for (std::uint32_t v = 0; v <= ground_n; ++v) {
    if (std::popcount(v) >= k) family.insert(v);
  }
  for (auto m : a1) family.insert(m);
  for (auto m : a0) family.insert(m);

  // the merged (k-1)-uniform system over [n]
  std::vector<std::uint32_t> merged = a1;
  for (auto m : lift(fam_a0, n)) merged.push_back(m);
  const UniformFamily script_a = UniformFamily::create(ground_n, k - 1, merged);

  // Eq (2), as sets, for 1 <= t <= k-2
  for (int t = 1; t <= k - 2; ++t) {
    std::set<std::uint32_t> rhs;
    for (auto m : lift(lower_shadow(fam_a0, t), n)) rhs.insert(m);
    for (auto m : shadow_or_self(fam_a0, t - 1).members()) rhs.insert(m);
    for (auto m : lower_shadow(fam_a1, t).members()) rhs.insert(m);
    REQUIRE(as_set(lower_shadow(script_a, t).members()) == rhs);
  }

  // Eq (4): |N^t(A)| = |X^(>= k-t)| + |d^{-t} script_a| for 1 <= t <= k-1
  for (int t = 1; t <= k - 1; ++t) {
    std::uint64_t upper_layers = 0;
    for (int j = k - t; j <= n; ++j) upper_layers += binomial(n, j);
    REQUIRE(t_neighborhood(family, t).size() ==
            upper_layers + lower_shadow(script_a, t).size());
  }

  // complements within the layers
  std::vector<std::uint32_t> b1, b0;
  for (auto m : UniformFamily::full_layer(ground_sub, k - 1).members()) {
    if (!std::binary_search(a1.begin(), a1.end(), m)) b1.push_back(m);
  }
  for (auto m : UniformFamily::full_layer(ground_sub, k - 2).members()) {
    if (!std::binary_search(a0.begin(), a0.end(), m)) b0.push_back(m);
  }
  const UniformFamily fam_b1 = UniformFamily::create(ground_sub, k - 1, b1);
  const UniformFamily fam_b0 = UniformFamily::create(ground_sub, k - 2, b0);
  std::vector<std::uint32_t> merged_b = b1;
  for (auto m : lift(fam_b0, n)) merged_b.push_back(m);
  const UniformFamily script_b =
      UniformFamily::create(ground_n, k - 1, merged_b);

  for (int t = 1; t <= n - k; ++t) {
    // Eq (5): the set-level two-ground decomposition of d^{+t} script_b
    std::set<std::uint32_t> rhs;
    {
      std::set<std::uint32_t> inner;
      for (auto m : upper_shadow(fam_b0, t).members()) inner.insert(m);
      for (auto m : upper_or_self(fam_b1, t - 1).members()) inner.insert(m);
      for (auto m : inner) rhs.insert(m | (std::uint32_t{1} << (n - 1)));
      for (auto m : upper_shadow(fam_b1, t).members()) rhs.insert(m);
    }
    REQUIRE(as_set(upper_shadow(script_b, t).members()) == rhs);

    // Eq (8): the size identity
    std::set<std::uint32_t> first;
    for (auto m : upper_shadow(fam_b0, t).members()) first.insert(m);
    for (auto m : upper_or_self(fam_b1, t - 1).members()) first.insert(m);
    REQUIRE(first.size() + upper_shadow(fam_b1, t).size() ==
            upper_shadow(script_b, t).size());

    // Eq (10): |N^t(A^c)| = |X^(<= k+t-2)| + |d^{+t} script_b|
    std::uint64_t lower_layers = 0;
    for (int j = 0; j <= k + t - 2; ++j) lower_layers += binomial(n, j);
    REQUIRE(t_neighborhood(complement_family(family), t).size() ==
            lower_layers + upper_shadow(script_b, t).size());
  }
}

}  // namespace

TEST_CASE("shadow decomposition identities, exhaustive at n <= 4") {
  for (int n = 3; n <= 4; ++n) {
    for (int k = 2; k <= n; ++k) {
      const auto layer1 =
          UniformFamily::full_layer((1u << (n - 1)) - 1, k - 1).members();
      const auto layer0 =
          UniformFamily::full_layer((1u << (n - 1)) - 1, k - 2).members();
      for (std::uint32_t p1 = 0; p1 < (1u << layer1.size()); ++p1) {
        for (std::uint32_t p0 = 0; p0 < (1u << layer0.size()); ++p0) {
          std::vector<std::uint32_t> a1, a0;
          for (std::size_t j = 0; j < layer1.size(); ++j) {
            if (p1 & (1u << j)) a1.push_back(layer1[j]);
          }
          for (std::size_t j = 0; j < layer0.size(); ++j) {
            if (p0 & (1u << j)) a0.push_back(layer0[j]);
          }
          check_decomposition_instance(n, k, a1, a0);
        }
      }
    }
  }
}

TEST_CASE("shadow decomposition identities, randomized at n <= 8") {
  std::mt19937_64 rng(109);
  int instances = 0;
  while (instances < 1100) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % (n - 1));
    std::vector<std::uint32_t> a1, a0;
    for (auto m :
         UniformFamily::full_layer((1u << (n - 1)) - 1, k - 1).members()) {
      if (rng() & 1) a1.push_back(m);
    }
    for (auto m :
         UniformFamily::full_layer((1u << (n - 1)) - 1, k - 2).members()) {
      if (rng() & 1) a0.push_back(m);
    }
    check_decomposition_instance(n, k, a1, a0);
    ++instances;
  }
}

TEST_CASE("Pascal identity behind the complement count") {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 2; k <= n; ++k) {
      for (int t = 1; t <= n - k + 2; ++t) {
        if (k + t - 2 > n || k + t - 3 < 0) continue;
        CHECK(binomial(n - 1, k + t - 3) + binomial(n - 1, k + t - 2) ==
              binomial(n, k + t - 2));
      }
    }
  }
}

TEST_CASE("classification at n=5, all window sizes, sandwich mode") {
  for (int r = 0; r <= 4; ++r) {
    for (std::uint64_t k = f_value(5, r) + 1; k <= g_value(5, r); ++k) {
      StatementParams params;
      params.n = 5;
      params.k = k;
      params.threads = worker_threads();
      const StatementResult result = verify_statement("theorem2", params);
      CAPTURE(k);
      CHECK(result.verified);
    }
  }
}

TEST_CASE("gap-2 containment at n=5: exhaustive over every window size") {
  // assumption-free full sweeps; this is the fact the sandwich mode rests on
  for (int r = 0; r <= 3; ++r) {
    for (std::uint64_t k = f_value(5, r) + 1; k <= g_value(5, r); ++k) {
      StatementParams params;
      params.n = 5;
      params.k = k;
      params.threads = worker_threads();
      const StatementResult result = verify_statement("lemma4", params);
      CAPTURE(k);
      CHECK(result.verified);
    }
  }
}

TEST_CASE("transposition criterion over all (r,k,i,j) up to n = 7") {
  for (int n = 5; n <= 7; ++n) {
    for (int rho = 1; rho <= n - 1; ++rho) {
      for (std::uint64_t kappa = 1; kappa <= binomial(n - 1, rho); ++kappa) {
        StatementParams params;
        params.n = n;
        params.r = rho;
        params.k = kappa;
        const StatementResult result = verify_statement("lemma9", params);
        CAPTURE(n);
        CAPTURE(rho);
        CAPTURE(kappa);
        REQUIRE(result.verified);
      }
    }
  }
}

TEST_CASE("equivariance and canonical invariance, >= 10^3 pairs up to n = 7") {
  std::mt19937_64 rng(113);
  const int per_n[] = {0, 0, 225, 225, 225, 225, 80, 20};
  int total = 0;
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < per_n[n]; ++trial) {
      Family a = oracles::random_family(n, rng);
      Automorphism phi = Automorphism::identity(n);
      std::shuffle(phi.perm.begin(), phi.perm.end(), rng);
      phi.shift = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
      const Family image = apply_automorphism(a, phi);
      REQUIRE(neighborhood(image) == apply_automorphism(neighborhood(a), phi));
      REQUIRE(canonical_form(image) == canonical_form(a));
      ++total;
    }
  }
  CHECK(total == 1000);
}

TEST_CASE("A_i families are extremal for every valid parameter, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    for (int rho = 0; rho <= n - 1; ++rho) {
      for (std::uint64_t kappa = 1; kappa <= binomial(n - 1, rho); ++kappa) {
        for (int i = 1; i <= n; ++i) {
          REQUIRE(extremality_report(build_A_i(n, rho, kappa, i))
                      .strong_extremal);
        }
      }
    }
  }
}

TEST_CASE("A_i below the g-case contains a unique top ball") {
  for (int n = 4; n <= 6; ++n) {
    for (int rho = 1; rho <= n - 2; ++rho) {
      const int window_r = n - rho - 1;
      for (std::uint64_t kappa = 1; kappa < binomial(n - 1, rho); ++kappa) {
        for (int i = 1; i <= n; ++i) {
          const auto centers =
              balls_contained(build_A_i(n, rho, kappa, i), window_r);
          REQUIRE(centers.size() == 1);
          REQUIRE(centers[0].mask == (1u << n) - 1);
        }
      }
    }
  }
}

TEST_CASE("A_n is isomorphic to the initial segment") {
  for (int n = 3; n <= 6; ++n) {
    for (int rho = 0; rho <= n - 1; ++rho) {
      for (std::uint64_t kappa = 1; kappa <= binomial(n - 1, rho);
           kappa += 2) {
        const Family a_n = build_A_i(n, rho, kappa, n);
        CHECK(are_isomorphic(a_n,
                             initial_segment_simplicial(n, a_n.size())));
      }
    }
  }
}

TEST_CASE("pairwise non-isomorphic extremal multiplicity: s = 1 and s = 2") {
  // s = 1: n = 5, colex segment of size C(2,2) = 1 in the 2-layer
  {
    const ClassificationResult result = enumerate_extremal(
        5, f_value(5, 2) + 1, EnumerationMode::kSandwich, false,
        worker_threads());
    CHECK(result.theorem2_verified.value_or(false));
    CHECK(result.classes.size() >= 1);
  }
  // s = 2: n = 7, segment size C(2,2) + C(4,3) = 5 in the 3-layer,
  // family size |X^(>=4)| + 5 = 69; indices 2 and 4 land in distinct
  // classes, so at least 2 classes appear
  {
    const UniformFamily segment = initial_segment_colex(7, 3, 5);
    CHECK_FALSE(transposition_fixes(segment, 2, 4));
    const ClassificationResult result = enumerate_extremal(
        7, 69, EnumerationMode::kSandwich, false, worker_threads());
    CHECK(result.theorem2_verified.value_or(false));
    CHECK(result.classes.size() >= 2);
    CHECK_FALSE(are_isomorphic(build_A_i(7, 3, 5, 2), build_A_i(7, 3, 5, 4)));
  }
}

TEST_CASE("section sizes of minimal-boundary families at the g-sizes") {
  // after the balancing translation, every direction has
  // |A_+| in { g(n-1,r-1), f(n-1,r) }  (sizes g(n,r), minimal |N|, r >= 1)
  for (int n = 3; n <= 5; ++n) {
    for (int r = 1; r <= n - 3; ++r) {
      const SweepOutcome sweep = sweep_full(
          n, g_value(n, r), FilterLevel::kT1Forward, worker_threads());
      for (const Family& fam : sweep.survivors) {
        const Family balanced = balance_translate(fam);
        for (int i = 1; i <= n; ++i) {
          const std::uint64_t plus = sections(balanced, i).plus.size();
          REQUIRE((plus == g_value(n - 1, r - 1) || plus == f_value(n - 1, r)));
        }
      }
    }
  }
}

TEST_CASE("n=5 full sweeps agree with sandwich-derived classes at g-sizes") {
  for (int r : {1, 2}) {
    const std::uint64_t size = g_value(5, r);
    const SweepOutcome sweep =
        sweep_full(5, size, FilterLevel::kStrong, worker_threads());
    const auto classes = isomorphism_classes(sweep.survivors);
    const ClassificationResult sandwich = enumerate_extremal(
        5, size, EnumerationMode::kSandwich, false, worker_threads());
    REQUIRE(classes.size() == sandwich.classes.size());
    for (std::size_t j = 0; j < classes.size(); ++j) {
      CHECK(classes[j] == sandwich.classes[j].representative);
    }
  }
}
