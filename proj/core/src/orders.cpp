#include "harperlab/orders.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace harperlab {

namespace {

constexpr int kPascalRows = 72;

const std::vector<std::vector<std::uint64_t>>& pascal_table() {
  static const std::vector<std::vector<std::uint64_t>> table = [] {
    std::vector<std::vector<std::uint64_t>> t(kPascalRows);
    constexpr std::uint64_t kCap = ~0ull;
    for (int i = 0; i < kPascalRows; ++i) {
      t[i].assign(i + 1, 1);
      for (int j = 1; j < i; ++j) {
        const std::uint64_t a = t[i - 1][j - 1];
        const std::uint64_t b = t[i - 1][j];
        t[i][j] = (a > kCap - b) ? kCap : a + b;  // saturate, checked on read
      }
    }
    return t;
  }();
  return table;
}

void check_nr(int n, int r, const char* what) {
  if (n < 1 || n > kMaxDimension || r < 0) {
    throw std::invalid_argument(std::string(what) + ": bad parameters");
  }
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n >= kPascalRows) throw std::out_of_range("binomial: n too large");
  const std::uint64_t v = pascal_table()[n][k];
  if (v == ~0ull) throw std::overflow_error("binomial: value overflows u64");
  return v;
}

std::uint64_t f_value(int n, int r) {
  check_nr(n, r, "f_value");
  if (r > n) throw std::out_of_range("f_value: r > n");
  std::uint64_t total = 0;
  for (int j = 0; j <= r; ++j) total += binomial(n, j);
  return total;
}

std::uint64_t g_value(int n, int r) {
  check_nr(n, r, "g_value");
  if (r > n - 1) throw std::out_of_range("g_value: r > n-1");
  return f_value(n, r) + binomial(n - 1, r);
}

SizeTable SizeTable::for_dimension(int n) {
  SizeTable t;
  t.n = n;
  for (int r = 0; r <= n; ++r) t.f.push_back(f_value(n, r));
  for (int r = 0; r <= n - 1; ++r) t.g.push_back(g_value(n, r));
  return t;
}

bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t d = a ^ b;
  if (!d) return false;
  return a & (d & -d);  // lowest differing coordinate belongs to a
}

bool colex_less(std::uint32_t a, std::uint32_t b) {
  // max(a delta b) in b is exactly the integer order on masks.
  return a < b;
}

bool simplicial_less(std::uint32_t a, std::uint32_t b) {
  const int wa = std::popcount(a);
  const int wb = std::popcount(b);
  if (wa != wb) return wa < wb;
  return lex_less(a, b);
}

std::strong_ordering compare(OrderKind kind, const Vertex& a, const Vertex& b) {
  if (a.dim != b.dim) throw std::invalid_argument("compare: dimension mismatch");
  bool less = false, greater = false;
  switch (kind) {
    case OrderKind::kLex:
      less = lex_less(a.mask, b.mask);
      greater = lex_less(b.mask, a.mask);
      break;
    case OrderKind::kColex:
      less = colex_less(a.mask, b.mask);
      greater = colex_less(b.mask, a.mask);
      break;
    case OrderKind::kSimplicial:
      less = simplicial_less(a.mask, b.mask);
      greater = simplicial_less(b.mask, a.mask);
      break;
  }
  if (less) return std::strong_ordering::less;
  if (greater) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

// Appends the c-subsets of [n] in lexicographic order (smallest-element
// first), stopping once `limit` masks have been emitted in total.
void append_layer_lex(int n, int c, std::uint64_t limit,
                      std::vector<std::uint32_t>& out) {
  if (c == 0) {
    if (out.size() < limit) out.push_back(0);
    return;
  }
  if (c > n) return;
  std::vector<int> elems(c);
  for (int j = 0; j < c; ++j) elems[j] = j + 1;
  while (out.size() < limit) {
    std::uint32_t mask = 0;
    for (int e : elems) mask |= std::uint32_t{1} << (e - 1);
    out.push_back(mask);
    // next combination in lex order
    int j = c - 1;
    while (j >= 0 && elems[j] == n - (c - 1 - j)) --j;
    if (j < 0) break;
    ++elems[j];
    for (int l = j + 1; l < c; ++l) elems[l] = elems[l - 1] + 1;
  }
}

}  // namespace

std::vector<std::uint32_t> simplicial_order(int n) {
  std::vector<std::uint32_t> out;
  out.reserve(std::uint64_t{1} << n);
  for (int c = 0; c <= n; ++c) {
    append_layer_lex(n, c, ~0ull, out);
  }
  return out;
}

Family initial_segment_simplicial(int n, std::uint64_t k) {
  if (k > (std::uint64_t{1} << n)) {
    throw std::out_of_range("initial_segment_simplicial: k > 2^n");
  }
  std::vector<std::uint32_t> masks;
  masks.reserve(k);
  for (int c = 0; c <= n && masks.size() < k; ++c) {
    append_layer_lex(n, c, k, masks);
  }
  Family out(n);
  for (auto m : masks) out.insert(m);
  return out;
}

UniformFamily initial_segment_colex(int n, int r, std::uint64_t m) {
  check_nr(n, r, "initial_segment_colex");
  if (r > n || m > binomial(n, r)) {
    throw std::out_of_range("initial_segment_colex: m out of range");
  }
  const std::uint32_t ground = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> members;
  members.reserve(m);
  if (m > 0) {
    // Colex order on r-sets is the integer order on masks: Gosper's hack.
    std::uint64_t mask = (std::uint64_t{1} << r) - 1;
    for (std::uint64_t idx = 0; idx < m; ++idx) {
      members.push_back(static_cast<std::uint32_t>(mask));
      if (idx + 1 == m) break;
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
  }
  return UniformFamily::create(ground, r, std::move(members));
}

namespace {

std::map<std::pair<int, std::uint64_t>, std::uint64_t>& harper_memo() {
  static std::map<std::pair<int, std::uint64_t>, std::uint64_t> memo;
  return memo;
}

std::mutex& harper_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::uint64_t harper_min(int n, std::uint64_t k) {
  if (k > (std::uint64_t{1} << n)) {
    throw std::out_of_range("harper_min: k > 2^n");
  }
  {
    std::lock_guard<std::mutex> lock(harper_mutex());
    auto it = harper_memo().find({n, k});
    if (it != harper_memo().end()) return it->second;
  }
  const std::uint64_t value = neighborhood(initial_segment_simplicial(n, k)).size();
  std::lock_guard<std::mutex> lock(harper_mutex());
  harper_memo().emplace(std::pair<int, std::uint64_t>{n, k}, value);
  return value;
}

std::uint64_t harper_min_t(int n, std::uint64_t k, int t) {
  if (t < 0) throw std::invalid_argument("harper_min_t: negative t");
  std::uint64_t value = k;
  for (int s = 0; s < t; ++s) {
    value = harper_min(n, value);
    if (value == (std::uint64_t{1} << n)) break;  // saturated
  }
  return value;
}

std::uint64_t kk_min_lower_shadow_t(int n, int r, std::uint64_t m, int t) {
  if (t > r) throw std::invalid_argument("kk_min_lower_shadow_t: t > r");
  if (m == 0) return 0;
  return lower_shadow(initial_segment_colex(n, r, m), t).size();
}

std::uint64_t kk_min_lower_shadow(int n, int r, std::uint64_t m) {
  return kk_min_lower_shadow_t(n, r, m, 1);
}

std::uint64_t kk_min_upper_shadow_t(int n, int r, std::uint64_t m, int t) {
  if (r + t > n) throw std::invalid_argument("kk_min_upper_shadow_t: r+t > n");
  // Complementing members swaps upper and lower shadows, so the minimum
  // upper shadow of m members in [n]^(r) is the minimum lower shadow of m
  // members in [n]^(n-r).
  return kk_min_lower_shadow_t(n, n - r, m, t);
}

std::uint64_t kk_min_upper_shadow(int n, int r, std::uint64_t m) {
  return kk_min_upper_shadow_t(n, r, m, 1);
}

std::uint64_t total_weight(const Family& a) {
  std::uint64_t total = 0;
  for (auto m : a.members()) total += std::popcount(m);
  return total;
}

}  // namespace harperlab
