#include "harperlab/cube.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace harperlab {

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("dimension out of range [1, 20]: " +
                                std::to_string(n));
  }
}

void check_mask(std::uint32_t mask, int n) {
  if (mask >> n) {
    throw std::invalid_argument("vertex mask " + std::to_string(mask) +
                                " out of range for Q_" + std::to_string(n));
  }
}

// Masks selecting the lower half of each 2^(c+1)-block, c = 0..5.
constexpr std::uint64_t kHalf[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

inline std::uint64_t swap_halves(std::uint64_t w, int c) {
  const int s = 1 << c;
  return ((w & kHalf[c]) << s) | ((w >> s) & kHalf[c]);
}

inline std::uint64_t universe_mask(int n) {
  return n >= 6 ? ~0ull : (1ull << (1 << n)) - 1;
}

}  // namespace

Vertex::Vertex(std::uint32_t mask_in, int dim_in) : mask(mask_in), dim(dim_in) {
  check_dim(dim);
  check_mask(mask, dim);
}

int Vertex::weight() const { return std::popcount(mask); }

Family::Family(int n) : dim_(n) {
  check_dim(n);
  words_.assign(detail::word_count(n), 0);
}

Family Family::full(int n) {
  Family f(n);
  for (auto& w : f.words_) w = ~0ull;
  f.words_.back() &= universe_mask(n);
  return f;
}

Family Family::of(int n, std::initializer_list<std::uint32_t> masks) {
  Family f(n);
  for (auto m : masks) f.insert(m);
  return f;
}

Family Family::from_members(int n, const std::vector<std::uint32_t>& masks) {
  Family f(n);
  for (auto m : masks) f.insert(m);
  return f;
}

bool Family::contains(std::uint32_t mask) const {
  return (words_[mask >> 6] >> (mask & 63)) & 1;
}

void Family::insert(std::uint32_t mask) {
  check_mask(mask, dim_);
  words_[mask >> 6] |= 1ull << (mask & 63);
}

void Family::erase(std::uint32_t mask) {
  check_mask(mask, dim_);
  words_[mask >> 6] &= ~(1ull << (mask & 63));
}

std::uint64_t Family::size() const {
  return detail::popcount_words(words_.data(), dim_);
}

std::vector<std::uint32_t> Family::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(size());
  for (std::size_t j = 0; j < words_.size(); ++j) {
    std::uint64_t w = words_[j];
    while (w) {
      out.push_back(static_cast<std::uint32_t>((j << 6) + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::string Family::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto m : members()) {
    os << (first ? " " : ", ");
    first = false;
    os << "{";
    bool e = true;
    for (int i = 1; i <= dim_; ++i) {
      if (m & (1u << (i - 1))) {
        os << (e ? "" : ",") << i;
        e = false;
      }
    }
    os << "}";
  }
  os << " }";
  return os.str();
}

bool family_precedes(const Family& a, const Family& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("family_precedes: dimension mismatch");
  }
  const auto& aw = a.words();
  const auto& bw = b.words();
  for (std::size_t j = 0; j < aw.size(); ++j) {
    const std::uint64_t d = aw[j] ^ bw[j];
    if (d) return (aw[j] >> std::countr_zero(d)) & 1;
  }
  return false;
}

int distance(const Vertex& x, const Vertex& y) {
  if (x.dim != y.dim) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  return std::popcount(x.mask ^ y.mask);
}

Family hamming_ball(int n, const Vertex& x, int r) {
  check_dim(n);
  if (x.dim != n) throw std::invalid_argument("hamming_ball: center dimension");
  if (r < 0) throw std::invalid_argument("hamming_ball: negative radius");
  if (r >= n) return Family::full(n);
  Family out(n);
  auto* words = out.mutable_words().data();
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < total; ++v) {
    if (std::popcount(v ^ x.mask) <= r) words[v >> 6] |= 1ull << (v & 63);
  }
  return out;
}

namespace detail {

void flip_shift_words(const std::uint64_t* in, std::uint64_t* out,
                      int n, int c) {
  const int words = word_count(n);
  if (c < 6) {
    for (int j = 0; j < words; ++j) out[j] = swap_halves(in[j], c);
  } else {
    const int stride = 1 << (c - 6);
    for (int j = 0; j < words; ++j) out[j] = in[j ^ stride];
  }
}

void neighborhood_words(const std::uint64_t* in, std::uint64_t* out, int n) {
  const int words = word_count(n);
  for (int j = 0; j < words; ++j) out[j] = in[j];
  for (int c = 0; c < n && c < 6; ++c) {
    for (int j = 0; j < words; ++j) out[j] |= swap_halves(in[j], c);
  }
  for (int c = 6; c < n; ++c) {
    const int stride = 1 << (c - 6);
    for (int j = 0; j < words; ++j) out[j] |= in[j ^ stride];
  }
  if (n < 6) out[0] &= universe_mask(n);
}

void translate_words(std::uint64_t* words, int n, std::uint32_t w) {
  const int count = word_count(n);
  for (int c = 0; c < n && c < 6; ++c) {
    if (!(w & (1u << c))) continue;
    for (int j = 0; j < count; ++j) words[j] = swap_halves(words[j], c);
  }
  for (int c = 6; c < n; ++c) {
    if (!(w & (1u << c))) continue;
    const int stride = 1 << (c - 6);
    for (int j = 0; j < count; ++j) {
      if (j < (j ^ stride)) std::swap(words[j], words[j ^ stride]);
    }
  }
}

std::uint64_t popcount_words(const std::uint64_t* words, int n) {
  std::uint64_t total = 0;
  for (int j = 0; j < word_count(n); ++j) total += std::popcount(words[j]);
  return total;
}

}  // namespace detail

Family neighborhood(const Family& a) {
  Family out(a.dim());
  detail::neighborhood_words(a.words().data(), out.mutable_words().data(),
                             a.dim());
  return out;
}

Family t_neighborhood(const Family& a, int t) {
  if (t < 0) throw std::invalid_argument("t_neighborhood: negative t");
  Family cur = a;
  // Saturation: expanding a nonempty family more than n times is a no-op.
  const int steps = std::min(t, a.dim());
  for (int s = 0; s < steps; ++s) {
    Family next = neighborhood(cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

Family complement_family(const Family& a) {
  Family out = a;
  auto& words = out.mutable_words();
  for (auto& w : words) w = ~w;
  if (a.dim() < 6) words[0] &= universe_mask(a.dim());
  return out;
}

SectionPair sections(const Family& a, int i) {
  const int n = a.dim();
  if (n < 2) throw std::invalid_argument("sections: need dimension >= 2");
  if (i < 1 || i > n) throw std::invalid_argument("sections: bad coordinate");
  const int c = i - 1;
  SectionPair p{Family(n - 1), Family(n - 1), i};
  const std::uint32_t low = (std::uint32_t{1} << c) - 1;
  const std::uint32_t half = std::uint32_t{1} << (n - 1);
  for (std::uint32_t v = 0; v < half; ++v) {
    const std::uint32_t parent = ((v & ~low) << 1) | (v & low);
    if (a.contains(parent | (std::uint32_t{1} << c))) p.plus.insert(v);
    if (a.contains(parent)) p.minus.insert(v);
  }
  return p;
}

Family join_sections(const SectionPair& p) {
  const int m = p.plus.dim();
  if (p.minus.dim() != m) {
    throw std::invalid_argument("join_sections: section dimension mismatch");
  }
  const int n = m + 1;
  if (p.direction < 1 || p.direction > n) {
    throw std::invalid_argument("join_sections: bad direction");
  }
  const int c = p.direction - 1;
  Family out(n);
  const std::uint32_t low = (std::uint32_t{1} << c) - 1;
  const std::uint32_t half = std::uint32_t{1} << m;
  for (std::uint32_t v = 0; v < half; ++v) {
    const std::uint32_t parent = ((v & ~low) << 1) | (v & low);
    if (p.plus.contains(v)) out.insert(parent | (std::uint32_t{1} << c));
    if (p.minus.contains(v)) out.insert(parent);
  }
  return out;
}

std::vector<int> distance_transform(const Family& a) {
  const int n = a.dim();
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<int> dist(total, n + 1);
  if (a.empty()) return dist;
  Family cur = a;
  for (std::uint32_t v = 0; v < total; ++v) {
    if (cur.contains(v)) dist[v] = 0;
  }
  for (int t = 1; t <= n; ++t) {
    Family next = neighborhood(cur);
    if (next == cur) break;
    for (std::uint32_t v = 0; v < total; ++v) {
      if (next.contains(v) && !cur.contains(v)) dist[v] = t;
    }
    cur = std::move(next);
  }
  return dist;
}

}  // namespace harperlab
