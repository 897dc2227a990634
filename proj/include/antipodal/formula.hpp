#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antipodal/radio.hpp"

namespace antipodal {

enum class FormulaStatus { Exact, UpperBound, LowerBound };

std::string to_string(FormulaStatus status);

struct FormulaResult {
  long long value = 0;
  FormulaStatus status = FormulaStatus::Exact;
  std::string case_label;
  // Set when the closed form as printed disagrees with the construction-derived value.
  // Kept as text because the printed value may be fractional ("65/2").
  std::optional<std::string> printed_value;
  std::optional<std::string> discrepancy;
};

enum class Relation { Equal, AtLeast };

struct PatternMismatch {
  std::string clause;
  int position = 0;  // 1-based j
  Relation relation = Relation::Equal;
  int expected = 0;
  int observed = 0;
};

struct PatternReport {
  bool ok = true;
  std::string description;
  int checks = 0;
  std::vector<PatternMismatch> mismatches;

  void expect(const std::string& clause, int position, Relation relation, int expected,
              int observed) {
    ++checks;
    const bool pass = relation == Relation::Equal ? observed == expected : observed >= expected;
    if (!pass) {
      mismatches.push_back({clause, position, relation, expected, observed});
      ok = false;
    }
  }
};

/// Ordering plus coloring as produced by one of the family constructions.
struct Construction {
  std::vector<int> ordering;  // v_1..v_N as vertex indices
  Coloring coloring;
  std::string label;  // e.g. "gp-0mod4", "torus-(0,0)"
  std::string source = "closed-form";
  FormulaResult formula;
};

}  // namespace antipodal
