#pragma once

#include <string>
#include <vector>

#include "antipodal/formula.hpp"
#include "antipodal/graph.hpp"
#include "antipodal/radio.hpp"

namespace antipodal {

enum class GpClass {
  ZeroMod4,      // n = 0 (mod 4)
  OneMod4,       // n = 1 (mod 4)
  TwoMod4OddT,   // n = 4t + 2, t odd  (n = 6 mod 8)
  TwoMod4EvenT,  // n = 4t + 2, t even (n = 2 mod 8)
  ThreeMod4,     // n = 3 (mod 4)
};

struct GpCase {
  int n = 0;
  GpClass cls = GpClass::ZeroMod4;
  int t = -1;  // (n - 2) / 4 when n = 2 (mod 4), else -1
  std::string label;
};

GpCase gp_case(int n);

/// v_1..v_{2n} as vertex indices of make_gp(n) (x_j -> j, y_j -> n + j).
std::vector<int> gp_ordering(int n);

/// Index step between consecutive outer-cycle vertices of the ordering; it is
/// also the distance d(v_j, v_{j+2}) the ordering realises.
int gp_step(int n);

/// Color increment on every even -> odd step of the ordering.
int gp_increment(int n);

/// Constant on each antipodal pair, then +gp_increment(n). For n = 2 (mod 8)
/// this is the (n+2)/4 + 1 increment whose span meets the upper-bound formula.
Coloring gp_antipodal_coloring(int n);

/// Same ordering with increment (n+2)/4 when n = 2 (mod 8); identical to
/// gp_antipodal_coloring otherwise. Smaller span, see the README.
Coloring gp_tight_increment_coloring(int n);

FormulaResult gp_ac_formula(int n);

Construction gp_construction(int n);

/// Permutation, antipodal-pair, consecutive and two-step distance checks.
PatternReport validate_gp_ordering(int n);

}  // namespace antipodal
