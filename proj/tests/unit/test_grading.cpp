#include <doctest.h>

#include <random>

#include "gradnil/grading.hpp"
#include "gradnil/zoo.hpp"

using namespace gradnil;

namespace {

// Oracle: every b_i b_j is homogeneous of degree deg(i) deg(j).
bool grading_holds(const Ring& r, const Monoid& m, const std::vector<MonoidElement>& deg) {
  for (std::size_t i = 0; i < r.rank(); ++i) {
    for (std::size_t j = 0; j < r.rank(); ++j) {
      for (const Term& t : r.product(i, j)) {
        if (deg[t.index] != m.mul(deg[i], deg[j])) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("grading") {
  TEST_CASE("support and components of SUT_4") {
    const GradedRing gr = zoo::sut(4, CoeffDomain::prime_field(2));
    CHECK(gr.support() == std::vector<MonoidElement>{1, 2, 3});
    CHECK(gr.support_size() == 3);
    CHECK(gr.neutral_basis().empty());
    CHECK(gr.neutral_ring().is_zero_ring());
    CHECK(gr.basis_of_degree(1).size() == 3);
    CHECK(gr.basis_of_degree(3).size() == 1);
    CHECK_FALSE(gr.in_support(0));
    CHECK_FALSE(gr.in_support(-1));
  }

  TEST_CASE("homogeneous parts add back up") {
    const GradedRing gr = zoo::grassmann_star(3, CoeffDomain::prime_field(5));
    const Ring& r = gr.ring();
    Vector v(r.rank());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = Scalar(static_cast<long>(i % 5));
    }
    const Element a = r.element(v);
    Element sum = r.zero();
    for (const auto& [g, part] : gr.homogeneous_parts(a)) {
      CHECK(gr.in_support(g));
      sum = sum + part;
    }
    CHECK(sum == a);
  }

  TEST_CASE("grading axiom failures name the triple") {
    const Ring r = zoo::sut(3, CoeffDomain::prime_field(2)).ring();
    // E12 E23 = E13 needs deg E13 = 2.
    try {
      GradedRing(r, Monoid::integers(), {1, 1, 1});
      FAIL("accepted");
    } catch (const ValidationError& e) {
      CHECK(e.axiom() == "grading axiom");
      CHECK(e.witness().find("(0, 2, 1)") != std::string::npos);
    }
    CHECK_THROWS_AS(GradedRing(r, Monoid::cyclic(2), {1, 1, 5}), Error);
  }

  TEST_CASE("monoids that are not left cancellative are rejected") {
    const Monoid lz = Monoid::from_table({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
    const Ring r = Ring::zero_product(CoeffDomain::prime_field(2), 1);
    try {
      GradedRing(r, lz, {1});
      FAIL("accepted");
    } catch (const ValidationError& e) {
      CHECK(e.axiom() == "left cancellativity");
    }
  }

  TEST_CASE("random degree maps are accepted exactly when the axiom holds") {
    const Ring r = matrix_ring(zoo::two_z_2k(2), 2);
    const Monoid m = Monoid::cyclic(3);
    std::mt19937 rng(17);
    int accepted_count = 0;
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<MonoidElement> deg;
      for (std::size_t i = 0; i < r.rank(); ++i) {
        deg.emplace_back(static_cast<unsigned long>(rng() % 3));
      }
      bool accepted = true;
      try {
        GradedRing(r, m, deg);
      } catch (const ValidationError&) {
        accepted = false;
      }
      accepted_count += accepted;
      CHECK(accepted == grading_holds(r, m, deg));
    }
    CHECK(accepted_count > 0);
  }

  TEST_CASE("elementary grading") {
    const Ring r = zoo::two_z_2k(3);
    const GradedRing m = elementary_grading(r, 3);
    CHECK(m.monoid() == Monoid::cyclic(3));
    CHECK(m.support_size() == 3);
    const auto diag = m.neutral_basis();
    REQUIRE(diag.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(diag[i] == matrix_index(r, 3, i, i, 0));
    }
    CHECK(m.degree(matrix_index(r, 3, 0, 2, 0)) == 2);
    CHECK(m.degree(matrix_index(r, 3, 2, 0, 0)) == 1);
    // M_0 is a copy of r^3.
    CHECK(power_chain(m.neutral_ring(), 16).terms.size() == power_chain(r, 16).terms.size());
  }

  TEST_CASE("induced quotient grading") {
    const GradedRing m = elementary_grading(zoo::two_z_2k(3), 4);
    const Congruence mod2 = Congruence::from_labels(m.monoid(), {0, 1, 0, 1});
    const GradedRing q = induced_quotient_grading(m, mod2);
    CHECK(q.support() == std::vector<MonoidElement>{0, 1});
    CHECK(q.neutral_basis().size() == 8);
    CHECK(q.ring() == m.ring());
    const GradedRing same = induced_quotient_grading(m, Congruence::discrete(m.monoid()));
    CHECK(same.degrees() == m.degrees());
    CHECK(induced_quotient_grading(m, Congruence::universal(m.monoid())).support_size() == 1);
  }

  TEST_CASE("trivial grading and restriction") {
    const Ring r = zoo::grassmann_star(2, CoeffDomain::prime_field(3)).ring();
    const GradedRing t = trivial_grading(r);
    CHECK(t.support_size() == 1);
    CHECK(t.neutral_ring() == r);
    const Ring top = restrict_ring(r, {2});
    CHECK(top.rank() == 1);
    CHECK(top.is_zero_product());
  }
}
