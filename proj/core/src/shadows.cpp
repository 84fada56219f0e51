#include "harperlab/shadows.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "harperlab/orders.hpp"

namespace harperlab {

Rational Rational::make(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

UniformFamily UniformFamily::create(std::uint32_t ground_mask, int r,
                                    std::vector<std::uint32_t> members) {
  if (r < 0 || r > std::popcount(ground_mask)) {
    throw std::invalid_argument("UniformFamily: uniformity outside ground");
  }
  std::sort(members.begin(), members.end());
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (j > 0 && members[j] == members[j - 1]) {
      throw std::invalid_argument("UniformFamily: duplicate member");
    }
    if (members[j] & ~ground_mask) {
      throw std::invalid_argument("UniformFamily: member outside ground set");
    }
    if (std::popcount(members[j]) != r) {
      throw std::invalid_argument("UniformFamily: member of wrong size");
    }
  }
  UniformFamily f;
  f.ground_ = ground_mask;
  f.r_ = r;
  f.members_ = std::move(members);
  return f;
}

UniformFamily UniformFamily::empty(std::uint32_t ground_mask, int r) {
  return create(ground_mask, r, {});
}

UniformFamily UniformFamily::full_layer(std::uint32_t ground_mask, int r) {
  // Enumerate r-subsets of the ground labels.
  std::vector<int> labels;
  for (int l = 1; l <= 32; ++l) {
    if (ground_mask & (std::uint32_t{1} << (l - 1))) labels.push_back(l);
  }
  const int g = static_cast<int>(labels.size());
  if (r < 0 || r > g) {
    throw std::invalid_argument("full_layer: uniformity outside ground");
  }
  std::vector<std::uint32_t> members;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  if (r == 0) {
    members.push_back(0);
  } else {
    while (true) {
      std::uint32_t m = 0;
      for (int j : idx) m |= std::uint32_t{1} << (labels[j] - 1);
      members.push_back(m);
      int j = r - 1;
      while (j >= 0 && idx[j] == g - (r - j)) --j;
      if (j < 0) break;
      ++idx[j];
      for (int l = j + 1; l < r; ++l) idx[l] = idx[l - 1] + 1;
    }
  }
  return create(ground_mask, r, std::move(members));
}

std::vector<int> UniformFamily::ground_labels() const {
  std::vector<int> labels;
  for (int l = 1; l <= 32; ++l) {
    if (ground_ & (std::uint32_t{1} << (l - 1))) labels.push_back(l);
  }
  return labels;
}

int UniformFamily::ground_size() const { return std::popcount(ground_); }

bool UniformFamily::contains(std::uint32_t m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

namespace {

UniformFamily one_step_lower(const UniformFamily& f) {
  std::vector<std::uint32_t> out;
  out.reserve(f.size() * f.uniformity());
  for (std::uint32_t m : f.members()) {
    std::uint32_t rest = m;
    while (rest) {
      const std::uint32_t bit = rest & (~rest + 1);
      out.push_back(m ^ bit);
      rest ^= bit;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return UniformFamily::create(f.ground_mask(), f.uniformity() - 1,
                               std::move(out));
}

UniformFamily one_step_upper(const UniformFamily& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m : f.members()) {
    std::uint32_t rest = f.ground_mask() & ~m;
    while (rest) {
      const std::uint32_t bit = rest & (~rest + 1);
      out.push_back(m | bit);
      rest ^= bit;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return UniformFamily::create(f.ground_mask(), f.uniformity() + 1,
                               std::move(out));
}

}  // namespace

UniformFamily lower_shadow(const UniformFamily& f, int t) {
  if (t < 1) throw std::invalid_argument("lower_shadow: t must be >= 1");
  if (t > f.uniformity()) {
    throw std::invalid_argument("lower_shadow: t exceeds uniformity");
  }
  UniformFamily cur = f;
  for (int s = 0; s < t; ++s) cur = one_step_lower(cur);
  return cur;
}

UniformFamily upper_shadow(const UniformFamily& f, int t) {
  if (t < 1) throw std::invalid_argument("upper_shadow: t must be >= 1");
  if (f.uniformity() + t > f.ground_size()) {
    throw std::invalid_argument("upper_shadow: r + t exceeds ground size");
  }
  UniformFamily cur = f;
  for (int s = 0; s < t; ++s) cur = one_step_upper(cur);
  return cur;
}

std::pair<UniformFamily, UniformFamily> uniform_sections(
    const UniformFamily& f, int i) {
  const std::uint32_t bit = std::uint32_t{1} << (i - 1);
  if (i < 1 || !(f.ground_mask() & bit)) {
    throw std::invalid_argument("uniform_sections: label not in ground set");
  }
  std::vector<std::uint32_t> with_i, without_i;
  for (std::uint32_t m : f.members()) {
    if (m & bit) {
      with_i.push_back(m ^ bit);
    } else {
      without_i.push_back(m);
    }
  }
  const std::uint32_t rest = f.ground_mask() ^ bit;
  return {UniformFamily::create(rest, f.uniformity() - 1, std::move(with_i)),
          UniformFamily::create(rest, f.uniformity(), std::move(without_i))};
}

Rational local_lym_margin(const UniformFamily& f) {
  const int g = f.ground_size();
  const int r = f.uniformity();
  if (r + 1 > g) throw std::invalid_argument("local_lym_margin: r + 1 > ground");
  const long long upper = static_cast<long long>(upper_shadow(f, 1).size());
  const long long size = static_cast<long long>(f.size());
  const long long c_up = static_cast<long long>(binomial(g, r + 1));
  const long long c_here = static_cast<long long>(binomial(g, r));
  return Rational::make(upper * c_here - size * c_up, c_up * c_here);
}

bool is_shadow_minimal(const UniformFamily& f, int t) {
  if (f.size() == 0) return true;
  const std::uint64_t actual = lower_shadow(f, t).size();
  return actual == kk_min_lower_shadow_t(f.ground_size(), f.uniformity(),
                                         f.size(), t);
}

bool is_upper_shadow_minimal(const UniformFamily& f, int t) {
  if (f.size() == 0) return true;
  const std::uint64_t actual = upper_shadow(f, t).size();
  return actual == kk_min_upper_shadow_t(f.ground_size(), f.uniformity(),
                                         f.size(), t);
}

UniformFamily complement_members(const UniformFamily& f) {
  std::vector<std::uint32_t> out;
  out.reserve(f.size());
  for (std::uint32_t m : f.members()) out.push_back(f.ground_mask() & ~m);
  return UniformFamily::create(f.ground_mask(),
                               f.ground_size() - f.uniformity(),
                               std::move(out));
}

}  // namespace harperlab
