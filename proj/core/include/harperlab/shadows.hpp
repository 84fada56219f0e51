// Uniform set systems with explicit ground sets, lower/upper shadows,
// uniform sections, the Local LYM margin and shadow-minimality predicates.
//
// Ground sets are always explicit: the compression arguments switch between
// [n], [n] minus i, and [n] minus {1,i}, and upper shadows silently change
// meaning when the ground set is implicit.

#pragma once

#include <cstdint>
#include <vector>

namespace harperlab {

// Exact rational, reduced, with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long num, long long den);

  friend bool operator==(const Rational&, const Rational&) = default;
};

// An r-uniform set system over an explicit ground set. Members keep their
// original coordinate labels (bit l-1 for label l); the ground set is a
// label mask. Members are stored sorted ascending and duplicate-free.
class UniformFamily {
 public:
  UniformFamily() = default;

  // Validates: every member has exactly r elements, all inside ground.
  static UniformFamily create(std::uint32_t ground_mask, int r,
                              std::vector<std::uint32_t> members);
  static UniformFamily empty(std::uint32_t ground_mask, int r);
  static UniformFamily full_layer(std::uint32_t ground_mask, int r);

  std::uint32_t ground_mask() const { return ground_; }
  std::vector<int> ground_labels() const;  // sorted coordinate labels
  int ground_size() const;
  int uniformity() const { return r_; }
  std::uint64_t size() const { return members_.size(); }
  bool contains(std::uint32_t m) const;

  // Ref-qualified: calling members() on a temporary hands back an owning
  // copy, so `for (auto m : make_family(...).members())` stays valid.
  const std::vector<std::uint32_t>& members() const& { return members_; }
  std::vector<std::uint32_t> members() && { return std::move(members_); }

  friend bool operator==(const UniformFamily&, const UniformFamily&) = default;

 private:
  std::uint32_t ground_ = 0;
  int r_ = 0;
  std::vector<std::uint32_t> members_;
};

// Iterated lower shadow: the (r-t)-uniform family of sets obtainable by
// deleting t elements from members. Requires t <= r; the empty family has
// empty shadows at every t.
UniformFamily lower_shadow(const UniformFamily& f, int t = 1);

// Iterated upper shadow within f's ground set: requires r + t <= |ground|.
UniformFamily upper_shadow(const UniformFamily& f, int t = 1);

// The i-sections of a uniform family: (f_i0, f_i1) with
//   f_i0 = { B : B + {i} in f }   ((r-1)-uniform over ground minus i)
//   f_i1 = { B : i not in B, B in f }   (r-uniform over ground minus i)
std::pair<UniformFamily, UniformFamily> uniform_sections(
    const UniformFamily& f, int i);

// |d+ f| / C(g, r+1) - |f| / C(g, r), exact. Nonnegative by Local LYM, and
// zero exactly for the empty family and the full layer.
Rational local_lym_margin(const UniformFamily& f);

// |d^{-t} f| (resp. |d^{+t} f|) compared against the colex-segment minimum
// for the same size.
bool is_shadow_minimal(const UniformFamily& f, int t = 1);
bool is_upper_shadow_minimal(const UniformFamily& f, int t = 1);

// Replaces every member by its complement within the ground set; swaps the
// roles of lower and upper shadows.
UniformFamily complement_members(const UniformFamily& f);

}  // namespace harperlab
