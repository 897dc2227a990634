#include "antipodal/radio.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace antipodal {

int span(const Coloring& coloring) {
  if (coloring.colors.empty()) return 0;
  return *std::max_element(coloring.colors.begin(), coloring.colors.end());
}

namespace {

void check_coloring_shape(const DistanceMatrix& dist, const Coloring& coloring) {
  if (static_cast<int>(coloring.colors.size()) != dist.order()) {
    throw std::invalid_argument("coloring size does not match graph order");
  }
  if (coloring.k < 1 || coloring.k > std::max(dist.diameter(), 1)) {
    throw std::invalid_argument("k must satisfy 1 <= k <= diameter");
  }
  for (int c : coloring.colors) {
    if (c < 0) throw std::invalid_argument("colors must be non-negative");
  }
}

}  // namespace

VerificationReport verify_radio_k(const DistanceMatrix& dist, const Coloring& coloring,
                                  VerifyOptions options) {
  check_coloring_shape(dist, coloring);
  const int n = dist.order();
  const int k = coloring.k;
  const auto& g = coloring.colors;
  VerificationReport report;

  auto check_pair = [&](int u, int v) {
    const int required = 1 + k - dist(u, v);
    const int actual = std::abs(g[u] - g[v]);
    if (actual < required) report.violations.push_back({u, v, required, actual});
  };

  if (!options.skip_wide_gaps) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) check_pair(u, v);
  } else {
    // Walk vertices in color order; once the gap reaches k + 1 every later
    // vertex satisfies the condition as well.
    std::vector<int> by_color(n);
    std::iota(by_color.begin(), by_color.end(), 0);
    std::stable_sort(by_color.begin(), by_color.end(),
                     [&](int a, int b) { return g[a] < g[b]; });
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n && g[by_color[b]] - g[by_color[a]] < k + 1; ++b) {
        check_pair(std::min(by_color[a], by_color[b]), std::max(by_color[a], by_color[b]));
      }
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& x, const Violation& y) {
                return std::pair(x.u, x.v) < std::pair(y.u, y.v);
              });
  }
  report.valid = report.violations.empty();
  return report;
}

VerificationReport verify_radio_k(const DistanceMatrix& dist, const Coloring& coloring, int k,
                                  VerifyOptions options) {
  if (coloring.k != k) {
    throw std::invalid_argument("coloring was built for k = " + std::to_string(coloring.k) +
                                ", not " + std::to_string(k));
  }
  return verify_radio_k(dist, coloring, options);
}

ColorOrdering ordering_from_sequence(const Coloring& coloring, const DistanceMatrix& dist,
                                     std::span<const int> sequence) {
  const int n = static_cast<int>(coloring.colors.size());
  if (n != dist.order()) throw std::invalid_argument("coloring size does not match graph order");
  if (static_cast<int>(sequence.size()) != n) {
    throw std::invalid_argument("sequence length does not match graph order");
  }
  std::vector<char> seen(n, 0);
  for (int v : sequence) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("sequence is not a permutation");
    seen[v] = 1;
  }

  ColorOrdering ordering;
  ordering.k = coloring.k;
  ordering.order.assign(sequence.begin(), sequence.end());
  ordering.colors.reserve(n);
  for (int v : sequence) ordering.colors.push_back(coloring.colors[v]);
  for (int i = 1; i < n; ++i) {
    if (ordering.colors[i] < ordering.colors[i - 1]) {
      throw std::invalid_argument("sequence is not sorted by color");
    }
    const int gap = ordering.colors[i] - ordering.colors[i - 1];
    ordering.epsilons.push_back(gap - (1 + coloring.k - dist(sequence[i], sequence[i - 1])));
  }
  return ordering;
}

ColorOrdering order_by_color(const Coloring& coloring, const DistanceMatrix& dist) {
  const auto& g = coloring.colors;
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g[a] < g[b]; });
  return ordering_from_sequence(coloring, dist, order);
}

long long span_identity_residual(const ColorOrdering& ordering, const DistanceMatrix& dist,
                                 int k) {
  if (ordering.k != k) throw std::invalid_argument("ordering was built for a different k");
  const int n = ordering.size();
  if (n == 0) return 0;
  if (ordering.colors.front() != 0) {
    throw std::invalid_argument("span identity needs a coloring whose smallest color is 0");
  }
  long long distance_sum = 0;
  long long epsilon_sum = 0;
  for (int j = 2; j <= n; ++j) {
    distance_sum += dist(ordering.vertex_at(j), ordering.vertex_at(j - 1));
    epsilon_sum += ordering.epsilon(j);
  }
  const long long predicted =
      static_cast<long long>(n - 1) * (k + 1) - distance_sum + epsilon_sum;
  return static_cast<long long>(ordering.colors.back()) - predicted;
}

std::string to_string(CertificateClause clause) {
  switch (clause) {
    case CertificateClause::ConsecutiveDiametral: return "consecutive-diametral";
    case CertificateClause::TwoStepBalance: return "two-step-balance";
    case CertificateClause::FinalPairDiametral: return "final-pair-diametral";
    case CertificateClause::FinalEpsilonZero: return "final-epsilon-zero";
  }
  return "unknown";
}

std::string to_string(CertificateStatus status) {
  return status == CertificateStatus::Certified ? "Certified" : "CriterionFailed";
}

MinimalityCertificate minimality_certificate(const ColorOrdering& ordering,
                                             const DistanceMatrix& dist) {
  const int d = dist.diameter();
  if (ordering.k != d - 1) {
    throw std::invalid_argument("minimality certificate applies only to k = diameter - 1");
  }
  const int n = ordering.size();
  auto dv = [&](int a, int b) { return dist(ordering.vertex_at(a), ordering.vertex_at(b)); };

  MinimalityCertificate cert;
  const int last_j = n % 2 == 0 ? n - 3 : n - 2;
  for (int j = 1; j <= last_j; j += 2) {
    if (dv(j, j + 1) != d) {
      cert.failures.push_back({j, CertificateClause::ConsecutiveDiametral, dv(j, j + 1), d});
    }
    const int rhs = dv(j, j + 2) + ordering.epsilon(j + 1) + ordering.epsilon(j + 2);
    if (dv(j + 1, j + 2) != rhs) {
      cert.failures.push_back({j, CertificateClause::TwoStepBalance, dv(j + 1, j + 2), rhs});
    }
  }
  if (n % 2 == 0 && n >= 2) {
    if (dv(n - 1, n) != d) {
      cert.failures.push_back({n - 1, CertificateClause::FinalPairDiametral, dv(n - 1, n), d});
    }
    if (ordering.epsilon(n) != 0) {
      cert.failures.push_back({n, CertificateClause::FinalEpsilonZero, ordering.epsilon(n), 0});
    }
  }
  cert.status = cert.failures.empty() ? CertificateStatus::Certified
                                      : CertificateStatus::CriterionFailed;
  return cert;
}

Coloring greedy_coloring_along(std::span<const int> sequence, const DistanceMatrix& dist, int k) {
  const int n = dist.order();
  if (static_cast<int>(sequence.size()) != n) {
    throw std::invalid_argument("sequence length does not match graph order");
  }
  if (k < 1 || k > std::max(dist.diameter(), 1)) {
    throw std::invalid_argument("k must satisfy 1 <= k <= diameter");
  }
  Coloring coloring{std::vector<int>(n, -1), k};
  int previous = 0;
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    const int v = sequence[pos];
    if (v < 0 || v >= n || coloring.colors[v] >= 0) {
      throw std::invalid_argument("sequence is not a permutation");
    }
    int color = previous;
    for (std::size_t earlier = 0; earlier < pos; ++earlier) {
      const int u = sequence[earlier];
      color = std::max(color, coloring.colors[u] + 1 + k - dist(u, v));
    }
    coloring.colors[v] = color;
    previous = color;
  }
  return coloring;
}

}  // namespace antipodal
