#pragma once

#include <span>
#include <string>
#include <vector>

#include "antipodal/formula.hpp"
#include "antipodal/graph.hpp"
#include "antipodal/radio.hpp"

namespace antipodal {

enum class TorusClass {
  C00,             // r, s = 0 (mod 4)
  C10,             // r = 1, s = 0 (mod 4)
  C32,             // r = 3, s = 2 (mod 4)
  C20,             // r = 2, s = 0 (mod 4)
  C30,             // r = 3, s = 0 (mod 4)
  C22Homogeneous,  // r, s = 2 (mod 4), both 2 or both 6 (mod 8)
  C22Mixed,        // r = 6, s = 2 (mod 8)
  C12,             // r = 1, s = 2 (mod 4)
  OddOdd,
};

/// Residue class after swap normalization. (r, s) here are the normalized
/// sizes; `swapped` records whether they were transposed from the input.
struct TorusCase {
  int r = 0;
  int s = 0;
  TorusClass cls = TorusClass::OddOdd;
  std::string label;
  bool swapped = false;
};

TorusCase torus_case(int r, int s);

struct ResidueSet {
  std::vector<int> values;  // sorted
  int expected_size = 0;    // n / gcd(n, step)
  bool distinct = false;
};

/// {(i * step + offset) mod n : i = 0 .. n/p - 1}, p = gcd(n, step).
ResidueSet modular_residue_set(int n, int step, int offset);

/// The closed-form ordering in normalized coordinates, before any repair.
/// May contain repeated vertices (s = 6 mod 8 in the (3,2) and (1,2) classes).
std::vector<GridVertex> torus_literal_ordering(int r, int s);

/// The ordering actually emitted, as indices of make_torus(r, s) for the
/// caller's (r, s). Falls back to a lattice repair when the closed form is not
/// a permutation or its coloring misses the closed-form span.
std::vector<int> torus_ordering(int r, int s);

/// Least non-decreasing antipodal coloring along torus_ordering(r, s).
Coloring torus_antipodal_coloring(int r, int s);

/// Coloring built from the per-class increment rules on the closed-form
/// ordering. Kept for comparison; it is not valid for every class.
/// Throws std::domain_error when the closed-form ordering is not a permutation.
Coloring torus_rule_coloring(int r, int s);

FormulaResult torus_ac_formula(int r, int s);

/// Ordering, coloring and formula together. `source` is "closed-form",
/// "lattice-repair" or "fallback".
Construction torus_construction(int r, int s);

/// Distance clauses (a)-(d) for the closed-form ordering of the class.
PatternReport validate_torus_ordering(int r, int s);
/// Same clauses against an arbitrary sequence of make_torus(r, s) indices.
PatternReport validate_torus_sequence(int r, int s, std::span<const int> sequence);

struct TriameterResult {
  int max_sum = 0;
  GridVertex u, v, w;
};

/// Exhaustive max of d(u,v) + d(v,w) + d(w,u). Throws std::invalid_argument if
/// r * s exceeds `budget`.
TriameterResult triameter_max(int r, int s, int budget = 15 * 15);

}  // namespace antipodal
