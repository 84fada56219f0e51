// The lexicographic, colexicographic and simplicial orders, initial
// segments, the size functions f and g, and the minimum oracles that define
// "minimal" for neighbourhoods and shadows.
//
// All arithmetic is exact integer arithmetic (Pascal-table binomials); the
// library contains no floating point.

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "harperlab/cube.hpp"
#include "harperlab/shadows.hpp"

namespace harperlab {

enum class OrderKind { kLex, kColex, kSimplicial };

// Binomial coefficient from a cached Pascal table; exact for results below
// 2^63, throws on overflow.
std::uint64_t binomial(int n, int k);

// f(n,r) = |X^(<= r)| = sum_{j<=r} C(n,j): the size of an exact ball.
std::uint64_t f_value(int n, int r);

// g(n,r) = f(n,r) + C(n-1,r): the size of the segment
// C_r = X^(<= r) + ({1} + X_1^(r)). Defined for 0 <= r <= n-1.
std::uint64_t g_value(int n, int r);

// Both size arrays for one dimension: f(n,0..n) and g(n,0..n-1).
struct SizeTable {
  int n = 0;
  std::vector<std::uint64_t> f;
  std::vector<std::uint64_t> g;

  static SizeTable for_dimension(int n);
};

// Order predicates applied verbatim to arbitrary vertex pairs:
//   lex:        min(a delta b) in a
//   colex:      max(a delta b) in b
//   simplicial: |a| < |b|, ties broken by lex
// lex/colex are total orders on each layer and still well defined (and
// applied as-is) across layers.
bool lex_less(std::uint32_t a, std::uint32_t b);
bool colex_less(std::uint32_t a, std::uint32_t b);
bool simplicial_less(std::uint32_t a, std::uint32_t b);

std::strong_ordering compare(OrderKind kind, const Vertex& a, const Vertex& b);

// The k smallest vertices of Q_n in simplicial order.
Family initial_segment_simplicial(int n, std::uint64_t k);

// All 2^n vertex masks of Q_n in simplicial order.
std::vector<std::uint32_t> simplicial_order(int n);

// The m colex-smallest r-subsets of [n], as an r-uniform family over
// ground set [n].
UniformFamily initial_segment_colex(int n, int r, std::uint64_t m);

// harper_min(n,k) = |N(S)| for S the simplicial segment of size k: the
// minimum of |N(A)| over all A of size k (Harper). Memoized per (n,k).
std::uint64_t harper_min(int n, std::uint64_t k);

// harper_min applied t times; harper_min_t(n,k,0) = k.
std::uint64_t harper_min_t(int n, std::uint64_t k, int t);

// Minimum |shadow| over m-member r-uniform families on [n] (Kruskal-Katona,
// realized by the colex segment). The upper variant goes through the
// member-complement identity |d^{+t} F| = |d^{-t} F'|.
std::uint64_t kk_min_lower_shadow(int n, int r, std::uint64_t m);
std::uint64_t kk_min_upper_shadow(int n, int r, std::uint64_t m);
std::uint64_t kk_min_lower_shadow_t(int n, int r, std::uint64_t m, int t);
std::uint64_t kk_min_upper_shadow_t(int n, int r, std::uint64_t m, int t);

// Sum of member cardinalities, sum_{B in A} |B|.
std::uint64_t total_weight(const Family& a);

}  // namespace harperlab
