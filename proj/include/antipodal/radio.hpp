#pragma once

#include <span>
#include <string>
#include <vector>

#include "antipodal/graph.hpp"

namespace antipodal {

/// Vertex-indexed colors for a radio k-coloring. Colors are non-negative.
struct Coloring {
  std::vector<int> colors;
  int k = 1;
};

/// Largest color used (0 for an empty coloring).
int span(const Coloring& coloring);

/// A pair (u < v) whose color gap is below 1 + k - d(u, v).
struct Violation {
  int u = 0;
  int v = 0;
  int required_gap = 0;
  int actual_gap = 0;
  bool operator==(const Violation&) const = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;  // lexicographic by (u, v)
};

struct VerifyOptions {
  /// Skip pairs whose color gap already reaches k + 1; the report is unchanged.
  bool skip_wide_gaps = false;
};

/// Checks |g(u) - g(v)| >= 1 + k - d(u, v) for every unordered pair.
/// Throws std::invalid_argument when k is outside 1..diameter, when the
/// coloring size does not match, or when colors are negative.
VerificationReport verify_radio_k(const DistanceMatrix& dist, const Coloring& coloring,
                                  VerifyOptions options = {});
/// Same, but rejects a coloring whose k differs from the one requested.
VerificationReport verify_radio_k(const DistanceMatrix& dist, const Coloring& coloring, int k,
                                  VerifyOptions options = {});

/// Vertices sorted by (color, index) plus the slack sequence along that order.
struct ColorOrdering {
  std::vector<int> order;
  std::vector<int> colors;    // colors along `order`
  std::vector<int> epsilons;  // epsilons[i] is the slack between positions i and i + 1
  int k = 1;

  int size() const { return static_cast<int>(order.size()); }
  /// 1-based position access, matching the usual v_1..v_n notation.
  int vertex_at(int position) const { return order.at(position - 1); }
  /// Slack at 1-based position j (2 <= j <= n).
  int epsilon(int j) const { return epsilons.at(j - 2); }
};

ColorOrdering order_by_color(const Coloring& coloring, const DistanceMatrix& dist);

/// Builds the ordering for an explicit vertex sequence. Throws if the sequence
/// is not a permutation or if its colors decrease anywhere.
ColorOrdering ordering_from_sequence(const Coloring& coloring, const DistanceMatrix& dist,
                                     std::span<const int> sequence);

/// span - [(n-1)(k+1) - sum d(v_j, v_{j-1}) + sum eps_j]; zero for any ordering
/// whose smallest color is 0. Throws on a k mismatch or a nonzero minimum color.
long long span_identity_residual(const ColorOrdering& ordering, const DistanceMatrix& dist, int k);

enum class CertificateClause {
  ConsecutiveDiametral,  // d(v_j, v_{j+1}) = d
  TwoStepBalance,        // d(v_{j+1}, v_{j+2}) = d(v_j, v_{j+2}) + eps_{j+1} + eps_{j+2}
  FinalPairDiametral,    // d(v_{n-1}, v_n) = d, even n
  FinalEpsilonZero,      // eps_n = 0, even n
};

std::string to_string(CertificateClause clause);

struct CertificateFailure {
  int j = 0;  // 1-based position the clause was evaluated at
  CertificateClause clause = CertificateClause::ConsecutiveDiametral;
  int observed = 0;
  int required = 0;
};

enum class CertificateStatus { Certified, CriterionFailed };

std::string to_string(CertificateStatus status);

struct MinimalityCertificate {
  CertificateStatus status = CertificateStatus::CriterionFailed;
  std::vector<CertificateFailure> failures;
};

/// Sufficient minimality condition for antipodal colorings (k = d - 1), evaluated
/// over the pairs (v_j, v_{j+1}) for odd j. Throws std::invalid_argument if
/// ordering.k != diameter - 1.
MinimalityCertificate minimality_certificate(const ColorOrdering& ordering,
                                             const DistanceMatrix& dist);

/// The smallest coloring that is non-decreasing along `sequence` and satisfies
/// the radio k condition: g(v_1) = 0 and each v_j gets the least color that is
/// at least g(v_{j-1}) and compatible with every earlier vertex.
Coloring greedy_coloring_along(std::span<const int> sequence, const DistanceMatrix& dist, int k);

}  // namespace antipodal
