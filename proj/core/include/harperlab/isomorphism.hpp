// The automorphism group of Q_n: coordinate permutations composed with XOR
// translations, acting as v -> perm(v) delta shift (permutation first).
// Canonical forms are exact minima over the full group of size 2^n * n!,
// available up to n = 8; isomorphism tests combine invariant rejection with
// an anchored exact search at contained-ball centres.

#pragma once

#include <cstdint>
#include <vector>

#include "harperlab/cube.hpp"
#include "harperlab/shadows.hpp"

namespace harperlab {

// Fixed convention: the permutation acts first, then the translation.
// perm[c] is the 0-based image of coordinate index c, i.e. bit c of the
// input lands on bit perm[c].
struct Automorphism {
  std::vector<std::uint8_t> perm;
  std::uint32_t shift = 0;

  static Automorphism identity(int n);

  int dim() const { return static_cast<int>(perm.size()); }
  std::uint32_t apply(std::uint32_t mask) const;
};

// (f * g)(v) = f(g(v)).
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism inverse(const Automorphism& a);

Family apply_automorphism(const Family& a, const Automorphism& phi);

// Largest dimension for which canonical_form sweeps the whole group.
inline constexpr int kCanonicalFormMaxDim = 8;

// The minimum of { phi(A) } over all automorphisms, under family_precedes.
// Equal canonical forms characterise isomorphic families. Throws above the
// n <= 8 cap.
Family canonical_form(const Family& a);

struct IsoCheck {
  bool isomorphic = false;
  // True when the answer is certified exactly (invariant mismatch, anchored
  // search, or a full canonical-form comparison). Only very large inputs
  // above the canonicalization cap fall back to invariant-only verdicts.
  bool verified_exact = false;
};

IsoCheck are_isomorphic_detailed(const Family& a, const Family& b);
bool are_isomorphic(const Family& a, const Family& b);

// True iff swapping labels i and j maps the uniform family onto itself.
bool transposition_fixes(const UniformFamily& f, int i, int j);

}  // namespace harperlab
