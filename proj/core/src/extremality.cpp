#include "harperlab/extremality.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "harperlab/orders.hpp"

namespace harperlab {

bool is_neighborhood_minimal(const Family& a) {
  return neighborhood(a).size() == harper_min(a.dim(), a.size());
}

ExtremalityReport extremality_report(const Family& a) {
  const int n = a.dim();
  ExtremalityReport report;
  report.n = n;
  report.size = a.size();
  const std::uint64_t csize = a.universe_size() - report.size;

  Family forward = a;
  Family backward = complement_family(a);
  bool all_forward = true;
  bool all_backward = true;
  for (int t = 1; t <= n; ++t) {
    forward = neighborhood(forward);
    backward = neighborhood(backward);
    ExtremalityRow row;
    row.t = t;
    row.forward_size = forward.size();
    row.forward_min = harper_min_t(n, report.size, t);
    row.forward_ok = row.forward_size == row.forward_min;
    row.backward_size = backward.size();
    row.backward_min = harper_min_t(n, csize, t);
    row.backward_ok = row.backward_size == row.backward_min;
    all_forward = all_forward && row.forward_ok;
    all_backward = all_backward && row.backward_ok;
    report.rows.push_back(row);
  }
  report.strong_extremal = all_forward && all_backward;
  report.weak_extremal = report.rows[0].forward_ok && report.rows[0].backward_ok;
  report.forward_only = all_forward && !report.strong_extremal;
  return report;
}

std::vector<Vertex> balls_contained(const Family& a, int r) {
  if (r < 0) throw std::invalid_argument("balls_contained: negative radius");
  const int n = a.dim();
  // B(x,r) subset A  <=>  d(x, A^c) > r  <=>  x not in N^r(A^c).
  const Family reach = t_neighborhood(complement_family(a), r);
  std::vector<Vertex> centers;
  for (std::uint32_t v = 0; v < a.universe_size(); ++v) {
    if (!reach.contains(v)) centers.push_back(Vertex(v, n));
  }
  return centers;
}

std::optional<BallSandwich> ball_sandwich(const Family& a) {
  const int n = a.dim();
  if (a.empty() || a.is_full()) return std::nullopt;

  // inner radius at x: d(x, A^c) - 1 (only x in A competes);
  // outer radius at x: max_{v in A} d(x,v) = n - d(x^c, A).
  const std::vector<int> dist_to_complement =
      distance_transform(complement_family(a));
  const std::vector<int> dist_to_a = distance_transform(a);
  const std::uint32_t all = a.universe_size() - 1;

  bool have = false;
  BallSandwich best;
  for (std::uint32_t x = 0; x <= all; ++x) {
    if (!a.contains(x)) continue;
    const int inner = dist_to_complement[x] - 1;
    const int outer = n - dist_to_a[x ^ all];
    if (!have || inner > best.inner_radius ||
        (inner == best.inner_radius && outer < best.outer_radius) ||
        (inner == best.inner_radius && outer == best.outer_radius &&
         simplicial_less(x, best.center.mask))) {
      best = BallSandwich{Vertex(x, n), inner, outer};
      have = true;
    }
  }
  return best;
}

bool is_hamming_ball(const Family& a) {
  const int n = a.dim();
  if (a.empty()) return false;
  if (a.is_full()) return true;
  const std::vector<int> dist_to_complement =
      distance_transform(complement_family(a));
  const std::vector<int> dist_to_a = distance_transform(a);
  const std::uint32_t all = a.universe_size() - 1;
  for (std::uint32_t x = 0; x <= all; ++x) {
    if (!a.contains(x)) continue;
    const int inner = dist_to_complement[x] - 1;
    const int outer = n - dist_to_a[x ^ all];
    // B(x, outer-1) subset A subset B(x, outer); strictness is automatic
    // because outer is minimal for x.
    if (inner >= outer - 1) return true;
  }
  return false;
}

std::optional<int> min_sandwich_gap(const Family& a) {
  const int n = a.dim();
  if (a.empty() || a.is_full()) return std::nullopt;
  const std::vector<int> dist_to_complement =
      distance_transform(complement_family(a));
  const std::vector<int> dist_to_a = distance_transform(a);
  const std::uint32_t all = a.universe_size() - 1;
  int best = n + 1;
  for (std::uint32_t x = 0; x <= all; ++x) {
    if (!a.contains(x)) continue;
    const int inner = dist_to_complement[x] - 1;
    const int outer = n - dist_to_a[x ^ all];
    best = std::min(best, outer - inner);
  }
  return best;
}

Family compress_codim1(const Family& a, int i) {
  SectionPair p = sections(a, i);
  const int m = a.dim() - 1;
  SectionPair compressed{initial_segment_simplicial(m, p.plus.size()),
                         initial_segment_simplicial(m, p.minus.size()), i};
  return join_sections(compressed);
}

Family balance_translate(const Family& a) {
  std::uint32_t translate = 0;
  for (int i = 1; i <= a.dim(); ++i) {
    SectionPair p = sections(a, i);
    if (p.plus.size() > p.minus.size()) translate |= std::uint32_t{1} << (i - 1);
  }
  Family out = a;
  detail::translate_words(out.mutable_words().data(), a.dim(), translate);
  return out;
}

}  // namespace harperlab
