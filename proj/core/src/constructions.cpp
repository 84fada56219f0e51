#include "harperlab/constructions.hpp"

#include <bit>
#include <stdexcept>

#include "harperlab/orders.hpp"
#include "harperlab/shadows.hpp"

namespace harperlab {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Family build_G(int n, int r) {
  require(n >= 1 && n <= kMaxDimension, "build_G: bad dimension");
  require(r >= 0 && r <= n - 1, "build_G: r out of [0, n-1]");
  Family out(n);
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < total; ++v) {
    const int w = std::popcount(v);
    if (w <= r || (w == r + 1 && (v & 1u))) out.insert(v);
  }
  return out;
}

Family build_C(int n, int r) {
  require(n >= 1 && n <= kMaxDimension, "build_C: bad dimension");
  require(r >= 0 && r <= n - 1, "build_C: r out of [0, n-1]");
  return initial_segment_simplicial(n, g_value(n, r));
}

Family build_B(int n, int r) {
  require(n >= 2 && n <= kMaxDimension, "build_B: bad dimension");
  require(r >= 0 && r <= n - 2, "build_B: r out of [0, n-2]");
  Family out(n);
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < total; ++v) {
    const int w = std::popcount(v);
    if (w <= r || ((w == r + 1 || w == r + 2) && (v & 3u) == 3u)) out.insert(v);
  }
  return out;
}

Family build_A_i(int n, int r, std::uint64_t k, int i) {
  require(n >= 2 && n <= kMaxDimension, "build_A_i: bad dimension");
  require(r >= 0 && r <= n, "build_A_i: bad uniformity");
  require(i >= 1 && i <= n, "build_A_i: bad direction");
  require(k >= 1 && k <= binomial(n - 1, r),
          "build_A_i: k out of [1, C(n-1,r)]");
  const UniformFamily segment = initial_segment_colex(n, r, k);
  const std::uint32_t bit = std::uint32_t{1} << (i - 1);
  Family out(n);
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < total; ++v) {
    if (std::popcount(v) >= r + 1) out.insert(v);
  }
  for (std::uint32_t m : segment.members()) {
    // A_{i,0}: members containing i, with i removed; A_{i,1}: the rest.
    out.insert(m & ~bit);
  }
  return out;
}

Family build_prop10(int s) {
  require(s >= 1 && s <= 6, "build_prop10: s out of [1, 6]");
  const int n = 2 * s + 8;
  const int r = s + 4;
  const int k = s + 2;
  Family out(n);
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < total; ++v) {
    if (std::popcount(v) >= r) out.insert(v);
  }
  for (int i = 0; i <= k - 1; ++i) {
    out.erase((std::uint32_t{1} << (r + i)) - 1);  // {1, ..., r+i}
  }
  return out;
}

Family build_punctured_ball(int n, const Vertex& x, int r) {
  require(r >= 1, "build_punctured_ball: radius must be >= 1");
  Family out = hamming_ball(n, x, r);
  out.erase(x.mask);
  return out;
}

Family build_two_ball_union(int n, const Vertex& x, const Vertex& y, int r) {
  require(x.mask != y.mask, "build_two_ball_union: centres must differ");
  Family out = hamming_ball(n, x, r);
  for (auto m : hamming_ball(n, y, r).members()) out.insert(m);
  return out;
}

Family build_from_spec(const ConstructionSpec& spec) {
  auto need = [](const auto& opt, const char* what) {
    if (!opt) throw std::invalid_argument(std::string("construct: missing ") + what);
    return *opt;
  };
  switch (spec.kind) {
    case ConstructionKind::kInitialSegment:
      return initial_segment_simplicial(spec.n, need(spec.size, "--size"));
    case ConstructionKind::kG:
      return build_G(spec.n, need(spec.r, "--r"));
    case ConstructionKind::kC:
      return build_C(spec.n, need(spec.r, "--r"));
    case ConstructionKind::kB:
      return build_B(spec.n, need(spec.r, "--r"));
    case ConstructionKind::kAI:
      return build_A_i(spec.n, need(spec.r, "--r"), need(spec.k, "--k"),
                       need(spec.i, "--i"));
    case ConstructionKind::kProp10:
      return build_prop10(need(spec.s, "--s"));
    case ConstructionKind::kPuncturedBall:
      return build_punctured_ball(spec.n, Vertex(need(spec.x, "--x"), spec.n),
                                  need(spec.r, "--r"));
    case ConstructionKind::kTwoBallUnion:
      return build_two_ball_union(spec.n, Vertex(need(spec.x, "--x"), spec.n),
                                  Vertex(need(spec.y, "--y"), spec.n),
                                  need(spec.r, "--r"));
  }
  throw std::invalid_argument("construct: unknown kind");
}

}  // namespace harperlab
