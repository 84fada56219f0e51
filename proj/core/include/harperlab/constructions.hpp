// Generators for the named families, each produced by its defining recipe
// rather than by search:
//
//   G_r  = X^(<= r) + { B in X^(r+1) : 1 in B }          (size g(n,r))
//   B_r  = X^(<= r) + { B in X^(r+1) u X^(r+2) : {1,2} subset B }
//          = B(0,r) u B({1,2},r), two exact balls with centres distance 2
//   A_i  = X^(>= r+1) + A_{i,1} + A_{i,0}, built from the colex initial
//          segment of size k in [n]^(r)
//   the large-gap family: X^(>= r) minus a chain {1..r}, ..., {1..r+k-1}
//   punctured balls and two-ball unions.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "harperlab/cube.hpp"

namespace harperlab {

enum class ConstructionKind {
  kInitialSegment,
  kG,
  kC,  // the simplicial segment of size g(n,r)
  kB,
  kAI,
  kProp10,
  kPuncturedBall,
  kTwoBallUnion,
};

// CLI payload for the construct subcommand.
struct ConstructionSpec {
  ConstructionKind kind;
  int n = 0;
  std::optional<int> r;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> size;
  std::optional<int> i;
  std::optional<int> s;
  std::optional<std::uint32_t> x;
  std::optional<std::uint32_t> y;
};

Family build_from_spec(const ConstructionSpec& spec);

// X^(<= r) + { B in X^(r+1) : 1 in B }; 0 <= r <= n-1.
Family build_G(int n, int r);

// The simplicial segment of size g(n,r); equals G_r.
Family build_C(int n, int r);

// The two-ball union B(0,r) u B({1,2},r) in closed form. Accepts
// 0 <= r <= n-2: radius 0 gives the distance-2 vertex pair, and r = n-2
// still differs from the same-size segment; r = n-1 would collapse to the
// full cube and is rejected.
Family build_B(int n, int r);

// A_i from the colex initial segment of size k in [n]^(r);
// requires 1 <= k <= C(n-1, r) and 1 <= i <= n.
Family build_A_i(int n, int r, std::uint64_t k, int i);

// The weak-version family with no bounded ball sandwich: n = 2s+8,
// r = s+4, k = s+2, A = X^(>= r) minus { {1..r+i} : 0 <= i <= k-1 }.
// s <= 6 keeps n within the dimension cap.
Family build_prop10(int s);

// B(x,r) minus its centre; r >= 1.
Family build_punctured_ball(int n, const Vertex& x, int r);

// B(x,r) u B(y,r); requires x != y.
Family build_two_ball_union(int n, const Vertex& x, const Vertex& y, int r);

}  // namespace harperlab
