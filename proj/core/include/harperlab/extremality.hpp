// Minimality predicates against the Harper bound, the per-t extremality
// report, ball-containment structure, Hamming-ball recognition and
// codimension-1 compression.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "harperlab/cube.hpp"

namespace harperlab {

// One row of the per-t table: |N^t| against the segment bound, for the
// family and for its complement.
struct ExtremalityRow {
  int t = 0;
  std::uint64_t forward_size = 0;
  std::uint64_t forward_min = 0;
  bool forward_ok = false;
  std::uint64_t backward_size = 0;
  std::uint64_t backward_min = 0;
  bool backward_ok = false;
};

// Verdicts:
//   strong_extremal: every row ok in both directions (t = 1..n; beyond
//                    saturation both sides equal 2^n, so the cap is complete)
//   weak_extremal:   the t = 1 row ok in both directions
//   forward_only:    all forward rows ok but not strong
// Degenerate sizes 0 and 2^n are vacuously extremal.
struct ExtremalityReport {
  int n = 0;
  std::uint64_t size = 0;
  std::vector<ExtremalityRow> rows;
  bool strong_extremal = false;
  bool weak_extremal = false;
  bool forward_only = false;
};

// A containment certificate B(center, inner) subset A subset B(center, outer).
struct BallSandwich {
  Vertex center;
  int inner_radius = 0;
  int outer_radius = 0;

  int gap() const { return outer_radius - inner_radius; }
};

// |N(A)| == harper_min(n, |A|).
bool is_neighborhood_minimal(const Family& a);

ExtremalityReport extremality_report(const Family& a);

// All centres x with B(x, r) subset A, in ascending mask order.
std::vector<Vertex> balls_contained(const Family& a, int r);

// The optimal sandwich: maximal inner radius, then minimal outer radius,
// ties broken by the simplicially smallest centre. Empty for the degenerate
// inputs (empty family, full cube); any other family admits one.
std::optional<BallSandwich> ball_sandwich(const Family& a);

// True iff B(x,r) strict-subset A subset B(x,r+1) for some x and some
// r >= -1 (so singletons and exact balls qualify; the empty family does not).
bool is_hamming_ball(const Family& a);

// min over centres x of (outer_x - inner_x): the smallest gap any
// containment certificate can achieve, regardless of the sandwich
// tie-breaking. Empty for degenerate inputs.
std::optional<int> min_sandwich_gap(const Family& a);

// Codimension-1 compression in direction i: both i-sections are replaced by
// simplicial initial segments of the same sizes. Preserves |A| and never
// increases |N(A)|.
Family compress_codim1(const Family& a, int i);

// Translates A by I = { i : |A_+| > |A_-| }, after which |A_+| <= |A_-|
// holds in every direction. The result is isomorphic to A.
Family balance_translate(const Family& a);

}  // namespace harperlab
