// Exhaustive and pruned enumeration of extremal families up to isomorphism,
// plus one-shot verifiers for the named statements.
//
// Enumeration modes:
//   full     - every size-k subset of Q_n (assumption-free; n <= 4)
//   sandwich - only candidates with B(0,r) subset A subset B(0,r+2) for the
//              window radius r of k. Complete for strong extremality by the
//              gap-2 containment lemma (itself verified exhaustively by the
//              lemma4 statement checker at n <= 5); n <= 7.
//
// Sizes outside the windows (f_r, g_r] are normalized by complementation;
// sizes equal to some f_r reduce to the exact-ball uniqueness statement.
//
// The candidate space is partitioned deterministically by combination rank;
// the result is identical at any thread count.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "harperlab/cube.hpp"

namespace harperlab {

enum class EnumerationMode { kFull, kSandwich };

// Parameters of the A_i construction a representative matches
// (build_A_i(n, r, k, i)); `complemented` marks classes reached through the
// complement normalization.
struct MatchedConstruction {
  int r = 0;
  std::uint64_t k = 0;
  int i = 0;
  bool complemented = false;
};

struct ClassRecord {
  Family representative;  // canonical form
  std::string label;      // "A_i(...)", "exact-ball(r)", or "unmatched"
  std::optional<MatchedConstruction> matched;
};

struct ClassificationStats {
  std::uint64_t candidates = 0;
  std::uint64_t t1_survivors = 0;
  std::uint64_t extremal = 0;
};

struct ClassificationResult {
  int n = 0;
  std::uint64_t size = 0;
  EnumerationMode mode = EnumerationMode::kFull;
  bool weak = false;
  int window_r = -1;                     // forward window radius, -1 if none
  bool normalized_by_complement = false;
  std::vector<ClassRecord> classes;      // sorted by canonical representative
  // Present for strong-mode runs over a window or ball size: true iff the
  // enumerated classes are exactly the predicted ones.
  std::optional<bool> theorem2_verified;
  ClassificationStats stats;
  std::string notes;
};

// Complete list of isomorphism classes of (strong or weak) extremal
// families of size k in Q_n.
ClassificationResult enumerate_extremal(int n, std::uint64_t k,
                                        EnumerationMode mode, bool weak,
                                        int threads = 1);

struct StatementParams {
  std::optional<int> n;
  std::optional<int> r;
  std::optional<std::uint64_t> k;
  std::optional<int> i;
  std::optional<int> s;
  std::optional<int> t;
  std::optional<EnumerationMode> mode;
  bool weak = false;
  int threads = 1;
};

struct StatementResult {
  std::string name;
  bool verified = false;
  std::string details;
  std::map<std::string, std::int64_t> stats;
  std::vector<Family> witnesses;  // counterexamples when verified == false
};

// Statement names: theorem2, prop3, lemma4, lemma5, prop6, cor7, cor8,
// lemma9, prop10, theorem11, cor12, theorem13. Throws std::invalid_argument
// for unknown names or infeasible parameters.
StatementResult verify_statement(const std::string& name,
                                 const StatementParams& params);

std::vector<std::string> statement_names();

// Shared sweep engine (exposed for the verifiers and tests).
enum class FilterLevel { kT1Forward, kWeak, kStrong };

struct SweepOutcome {
  std::vector<Family> survivors;  // ascending bitset order
  std::uint64_t candidates = 0;
  std::uint64_t t1_survivors = 0;
};

// Every size-k family of Q_n passing the filter; n <= 6.
SweepOutcome sweep_full(int n, std::uint64_t k, FilterLevel level,
                        int threads = 1);

// Every size-k family with B(0,r) subset A subset B(0,r+2) passing the
// filter.
SweepOutcome sweep_sandwich(int n, std::uint64_t k, int r, FilterLevel level,
                            int threads = 1);

// Deduplicates up to isomorphism; returns canonical forms, sorted.
std::vector<Family> isomorphism_classes(const std::vector<Family>& families);

}  // namespace harperlab
