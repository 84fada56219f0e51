// Vertices and vertex families of the hypercube Q_n, the Hamming metric,
// neighbourhood expansion and coordinate sections.
//
// Conventions used throughout the library:
//   - a vertex of Q_n is a subset of {1..n}, stored as a bit mask with
//     coordinate i on bit i-1, so masks run over [0, 2^n);
//   - a family is a membership bitset of length 2^n (bit v set <=> vertex v
//     is a member), packed into 64-bit words;
//   - dimensions are capped at n = 20 so every family fits in 128 KiB and
//     all arithmetic stays in machine words.
//
// All operations are pure: they never mutate their arguments and the
// returned values are safe to share across threads.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace harperlab {

inline constexpr int kMaxDimension = 20;

// One point of Q_n.
struct Vertex {
  std::uint32_t mask = 0;
  int dim = 0;

  Vertex() = default;
  Vertex(std::uint32_t mask_in, int dim_in);

  int weight() const;  // |x|, the number of coordinates present

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// A subset of Q_n as a packed membership bitset.
class Family {
 public:
  Family() = default;
  explicit Family(int n);

  static Family full(int n);
  static Family of(int n, std::initializer_list<std::uint32_t> masks);
  static Family from_members(int n, const std::vector<std::uint32_t>& masks);

  int dim() const { return dim_; }
  std::uint32_t universe_size() const { return std::uint32_t{1} << dim_; }

  bool contains(std::uint32_t mask) const;
  void insert(std::uint32_t mask);
  void erase(std::uint32_t mask);

  std::uint64_t size() const;
  bool empty() const { return size() == 0; }
  bool is_full() const { return size() == universe_size(); }

  std::vector<std::uint32_t> members() const;  // ascending masks

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& mutable_words() { return words_; }

  std::string to_string() const;  // "{ {}, {1,2}, ... }" for diagnostics

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int dim_ = 0;
  std::vector<std::uint64_t> words_;
};

// Total order on equal-dimension families: the family containing the
// smallest differing vertex comes first. This is the tie-break order used
// for canonical forms and for deterministic CLI output.
bool family_precedes(const Family& a, const Family& b);

// The i-sections of a family, both living in Q_{n-1}. Coordinate i is
// deleted and the remaining coordinates are re-indexed order-preservingly.
struct SectionPair {
  Family plus;    // { B : i not in B, B + {i} in A }
  Family minus;   // { B : i not in B, B in A }
  int direction;  // the sliced coordinate i, 1-based in the parent cube
};

// Hamming distance |x delta y|. Throws on dimension mismatch.
int distance(const Vertex& x, const Vertex& y);

// Exact Hamming ball B(x, r) = { y : d(x,y) <= r }. Radii above n clamp to
// n (the full cube); negative radii are rejected.
Family hamming_ball(int n, const Vertex& x, int r);

// N(A) = { x : d(x, A) <= 1 }. The empty family expands to itself.
Family neighborhood(const Family& a);

// N^t(A), the t-fold iterate. t = 0 returns A; for nonempty A the result
// saturates at the full cube once t >= n.
Family t_neighborhood(const Family& a, int t);

Family complement_family(const Family& a);

SectionPair sections(const Family& a, int i);
Family join_sections(const SectionPair& p);  // exact inverse of sections

// Distance transform: entry v holds d(v, A), i.e. the least t with
// v in N^t(A). For an empty family every entry is dim+1 (unreachable).
std::vector<int> distance_transform(const Family& a);

namespace detail {

// out[v] = in[v ^ 2^c]: membership bitset of the coordinate-c flip.
void flip_shift_words(const std::uint64_t* in, std::uint64_t* out,
                      int n, int c);

// Accumulates N(in) into out (out and in must not alias).
void neighborhood_words(const std::uint64_t* in, std::uint64_t* out, int n);

// In-place XOR-translation of a membership bitset: out[v] = in[v ^ w].
void translate_words(std::uint64_t* words, int n, std::uint32_t w);

std::uint64_t popcount_words(const std::uint64_t* words, int n);

inline int word_count(int n) { return n < 6 ? 1 : (1 << (n - 6)); }

}  // namespace detail

}  // namespace harperlab
