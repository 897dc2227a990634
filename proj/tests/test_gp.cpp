#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "antipodal/gp_constructions.hpp"

using namespace antipodal;

TEST_CASE("case dispatch") {
  CHECK(gp_case(8).label == "0mod4");
  CHECK(gp_case(9).label == "1mod4");
  CHECK(gp_case(14).label == "6mod8");
  CHECK(gp_case(14).t == 3);
  CHECK(gp_case(10).label == "2mod8");
  CHECK(gp_case(10).t == 2);
  CHECK(gp_case(7).label == "3mod4");
  CHECK_THROWS_AS(gp_case(2), std::invalid_argument);
}

TEST_CASE("formula values") {
  CHECK(gp_ac_formula(3).value == 2);
  CHECK(gp_ac_formula(4).value == 6);
  CHECK(gp_ac_formula(5).value == 8);
  CHECK(gp_ac_formula(6).value == 15);
  CHECK(gp_ac_formula(7).value == 12);
  CHECK(gp_ac_formula(8).value == 21);
  CHECK(gp_ac_formula(10).value == 36);
  CHECK(gp_ac_formula(10).status == FormulaStatus::UpperBound);
  CHECK(gp_ac_formula(18).value == 102);
  CHECK(gp_ac_formula(18).status == FormulaStatus::UpperBound);
  CHECK(gp_ac_formula(14).status == FormulaStatus::Exact);
}

TEST_CASE("constructions for n = 3..24") {
  for (int n = 3; n <= 24; ++n) {
    CAPTURE(n);
    auto d = all_pairs_distances(make_gp(n));
    auto c = gp_construction(n);
    std::vector<int> sorted = c.ordering;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ids(2 * n);
    std::iota(ids.begin(), ids.end(), 0);
    REQUIRE(sorted == ids);
    REQUIRE(c.coloring.k == d.diameter() - 1);
    REQUIRE(verify_radio_k(d, c.coloring).valid);
    CHECK(span(c.coloring) == c.formula.value);

    auto o = ordering_from_sequence(c.coloring, d, c.ordering);
    CHECK(span_identity_residual(o, d, c.coloring.k) == 0);
    auto cert = minimality_certificate(o, d);
    if (n % 8 == 2) {
      CHECK(cert.status == CertificateStatus::CriterionFailed);
      REQUIRE_FALSE(cert.failures.empty());
      for (const auto& f : cert.failures) CHECK(f.clause == CertificateClause::TwoStepBalance);
    } else {
      CHECK(cert.status == CertificateStatus::Certified);
    }
  }
}

TEST_CASE("ordering validator") {
  for (int n = 3; n <= 24; ++n) {
    CAPTURE(n);
    auto rep = validate_gp_ordering(n);
    CHECK(rep.ok);
    CHECK(rep.checks > 0);
  }
  auto r14 = validate_gp_ordering(14);
  CHECK(r14.description.find("alternate 8 and 5") != std::string::npos);
}

TEST_CASE("co-primality of the ordering steps up to 200") {
  for (int n = 5; n <= 200; ++n) {
    CAPTURE(n);
    switch (gp_case(n).cls) {
      case GpClass::OneMod4: CHECK(std::gcd((n - 1) / 4, n) == 1); break;
      case GpClass::TwoMod4OddT: CHECK(std::gcd((n - 2) / 4, n) == 1); break;
      case GpClass::TwoMod4EvenT: CHECK(std::gcd((n + 2) / 4, n) == 1); break;
      case GpClass::ThreeMod4: CHECK(std::gcd((n + 1) / 4, n) == 1); break;
      case GpClass::ZeroMod4: break;
    }
  }
}

TEST_CASE("2 mod 8: the smaller increment also verifies and certifies") {
  for (int n : {10, 18}) {
    auto d = all_pairs_distances(make_gp(n));
    auto g = gp_tight_increment_coloring(n);
    REQUIRE(verify_radio_k(d, g).valid);
    auto o = ordering_from_sequence(g, d, gp_ordering(n));
    CHECK(minimality_certificate(o, d).status == CertificateStatus::Certified);
    CHECK(span(g) < gp_ac_formula(n).value);
  }
  CHECK(span(gp_tight_increment_coloring(10)) == 27);
  CHECK(span(gp_tight_increment_coloring(18)) == 85);
  for (int n : {8, 9, 14, 15}) {
    CHECK(gp_tight_increment_coloring(n).colors == gp_antipodal_coloring(n).colors);
  }
}
