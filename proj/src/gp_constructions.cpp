#include "antipodal/gp_constructions.hpp"

#include <stdexcept>

namespace antipodal {

std::string to_string(FormulaStatus status) {
  switch (status) {
    case FormulaStatus::Exact: return "Exact";
    case FormulaStatus::UpperBound: return "UpperBound";
    case FormulaStatus::LowerBound: return "LowerBound";
  }
  return "Exact";
}

GpCase gp_case(int n) {
  if (n < 3) throw std::invalid_argument("GP(n,1) needs n >= 3");
  GpCase c;
  c.n = n;
  switch (n % 4) {
    case 0: c.cls = GpClass::ZeroMod4; c.label = "0mod4"; break;
    case 1: c.cls = GpClass::OneMod4; c.label = "1mod4"; break;
    case 3: c.cls = GpClass::ThreeMod4; c.label = "3mod4"; break;
    default:
      c.t = (n - 2) / 4;
      if (c.t % 2 == 1) {
        c.cls = GpClass::TwoMod4OddT;
        c.label = "6mod8";
      } else {
        c.cls = GpClass::TwoMod4EvenT;
        c.label = "2mod8";
      }
  }
  return c;
}

int gp_step(int n) {
  switch (gp_case(n).cls) {
    case GpClass::ZeroMod4: return n / 4;
    case GpClass::OneMod4: return (n - 1) / 4;
    case GpClass::TwoMod4OddT: return (n - 2) / 4;
    case GpClass::TwoMod4EvenT: return (n + 2) / 4;
    case GpClass::ThreeMod4: return (n + 1) / 4;
  }
  return 0;
}

int gp_increment(int n) {
  switch (gp_case(n).cls) {
    case GpClass::ZeroMod4: return n / 4 + 1;
    case GpClass::OneMod4: return (n + 3) / 4;
    case GpClass::TwoMod4OddT:
    case GpClass::TwoMod4EvenT: return (n + 2) / 4 + 1;
    case GpClass::ThreeMod4: return (n + 1) / 4;
  }
  return 0;
}

namespace {

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

// Consecutive even -> odd distance the ordering is built to realise.
int gp_short_distance(int n) {
  switch (gp_case(n).cls) {
    case GpClass::ZeroMod4: return n / 4 + 1;
    case GpClass::OneMod4: return (n + 3) / 4;
    case GpClass::TwoMod4OddT: return (n + 2) / 4 + 1;
    case GpClass::TwoMod4EvenT: return (n + 2) / 4;
    case GpClass::ThreeMod4: return (n + 1) / 4;
  }
  return 0;
}

Coloring color_by_increment(int n, const std::vector<int>& order, int increment) {
  Coloring g{std::vector<int>(2 * n, 0), gp_diameter_formula(n) - 1};
  int color = 0;
  for (int pos = 0; pos < 2 * n; ++pos) {
    // 0-based even pos is the odd 1-based index j = pos + 1; entering it from an
    // even index costs one increment.
    if (pos > 0 && pos % 2 == 0) color += increment;
    g.colors[order[pos]] = color;
  }
  return g;
}

}  // namespace

std::vector<int> gp_ordering(int n) {
  const GpCase c = gp_case(n);
  auto x = [n](long long j) { return mod(j, n); };
  auto y = [n](long long j) { return n + mod(j, n); };
  std::vector<int> order;
  order.reserve(2 * n);

  if (c.cls == GpClass::ZeroMod4) {
    // Blocks of four antipodal pairs; the outer vertex leads in even blocks
    // and the inner one leads in odd blocks.
    const int q = n / 4;
    for (int j = 0; j < n; ++j) {
      const int block = j / 4;
      const int i = j % 4;
      const int outer = x(static_cast<long long>(i) * q + block + 1);
      const int inner = y(n / 2 + static_cast<long long>(i) * q + block + 1);
      if (block % 2 == 0) {
        order.push_back(outer);
        order.push_back(inner);
      } else {
        order.push_back(inner);
        order.push_back(outer);
      }
    }
    return order;
  }

  const int step = gp_step(n);
  // Offset of the inner partner: an antipode of x_{a} is y_{a + off}.
  const int off = n % 2 == 1 ? (n - 1) / 2 : n / 2;
  for (int j = 0; j < n; ++j) {
    order.push_back(x(static_cast<long long>(j) * step + 1));
    order.push_back(y(off + static_cast<long long>(j) * step + 1));
  }
  return order;
}

Coloring gp_antipodal_coloring(int n) {
  return color_by_increment(n, gp_ordering(n), gp_increment(n));
}

Coloring gp_tight_increment_coloring(int n) {
  const int inc = gp_case(n).cls == GpClass::TwoMod4EvenT ? (n + 2) / 4 : gp_increment(n);
  return color_by_increment(n, gp_ordering(n), inc);
}

FormulaResult gp_ac_formula(int n) {
  const GpCase c = gp_case(n);
  const long long m = n;
  FormulaResult f;
  f.case_label = c.label;
  switch (c.cls) {
    case GpClass::ZeroMod4: f.value = (m * m + 3 * m - 4) / 4; break;
    case GpClass::OneMod4: f.value = (m * m + 2 * m - 3) / 4; break;
    case GpClass::TwoMod4OddT: f.value = (m * m + 5 * m - 6) / 4; break;
    case GpClass::TwoMod4EvenT:
      f.value = (m * m + 5 * m - 6) / 4;
      f.status = FormulaStatus::UpperBound;
      break;
    case GpClass::ThreeMod4: f.value = (m * m - 1) / 4; break;
  }
  return f;
}

Construction gp_construction(int n) {
  Construction c;
  c.ordering = gp_ordering(n);
  c.coloring = gp_antipodal_coloring(n);
  c.formula = gp_ac_formula(n);
  c.label = "gp-" + c.formula.case_label;
  return c;
}

PatternReport validate_gp_ordering(int n) {
  const GpCase c = gp_case(n);
  const Graph g = make_gp(n);
  const DistanceMatrix dist = all_pairs_distances(g);
  const std::vector<int> order = gp_ordering(n);
  const int d = dist.diameter();
  const int big = 2 * n;

  PatternReport report;
  report.description = "GP(" + std::to_string(n) + ",1) class " + c.label +
                       ": consecutive distances alternate " + std::to_string(d) + " and " +
                       std::to_string(gp_short_distance(n)) + ", two-step distance " +
                       std::to_string(gp_step(n));

  std::vector<int> seen(big, 0);
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
    const int v = order[pos];
    report.expect("in-range", pos + 1, Relation::Equal, 1, v >= 0 && v < big ? 1 : 0);
    if (v >= 0 && v < big) {
      ++seen[v];
      report.expect("permutation", pos + 1, Relation::Equal, 1, seen[v]);
    }
  }
  report.expect("length", big, Relation::Equal, big, static_cast<int>(order.size()));
  if (!report.ok) return report;

  auto dv = [&](int a, int b) { return dist(order[a - 1], order[b - 1]); };
  for (int j = 1; j < big; ++j) {
    if (j % 2 == 1) {
      report.expect("antipodal-pair", j, Relation::Equal, d, dv(j, j + 1));
    } else {
      report.expect("short-step", j, Relation::Equal, gp_short_distance(n), dv(j, j + 1));
    }
  }
  for (int j = 1; j + 2 <= big; ++j) {
    report.expect("two-step", j, Relation::Equal, gp_step(n), dv(j, j + 2));
  }
  return report;
}

}  // namespace antipodal
