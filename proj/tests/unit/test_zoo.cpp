#include <doctest.h>

#include "gradnil/nil.hpp"
#include "gradnil/zoo.hpp"

using namespace gradnil;

namespace {

std::optional<std::uint64_t> nd(const Ring& r) { return nilpotency_index(r, Caps{}).index; }
std::optional<std::uint64_t> nd_nil(const Ring& r) { return ring_is_nil(r, Caps{}).index; }

}  // namespace

TEST_SUITE("zoo") {
  TEST_CASE("strictly upper triangular matrices") {
    for (std::size_t n = 2; n <= 7; ++n) {
      const GradedRing gr = zoo::sut(n, CoeffDomain::prime_field(2));
      CHECK(gr.ring().rank() == n * (n - 1) / 2);
      CHECK(gr.support_size() == n - 1);
      CHECK(gr.neutral_basis().empty());
      CHECK(nd(gr.ring()) == n);
    }
    CHECK(zoo::sut(12, CoeffDomain::prime_field(2)).ring().name(0) == "E1_2");
    CHECK_THROWS_AS(zoo::sut(1, CoeffDomain::prime_field(2)), Error);
  }

  TEST_CASE("truncated Nagata rings") {
    const Ring a = zoo::truncated_nagata(1, 2);
    CHECK(a.rank() == 1);
    CHECK(a.is_zero_product());
    CHECK(nd_nil(zoo::truncated_nagata(2, 2)) == 2u);
    CHECK(nd(zoo::truncated_nagata(1, 3)) == 3u);
    CHECK(nd(zoo::truncated_nagata(2, 3)) == 5u);
    CHECK(nd_nil(zoo::truncated_nagata(2, 3)) == 3u);
    CHECK(zoo::truncated_nagata(2, 3).names()[3] == "x1x2");
    CHECK_THROWS_AS(zoo::truncated_nagata(6, 5), Error);
    CHECK_THROWS_AS(zoo::truncated_nagata(2, 4), Error);
  }

  TEST_CASE("exterior algebras") {
    const GradedRing g = zoo::grassmann_star(2, CoeffDomain::prime_field(3));
    CHECK(g.ring().rank() == 3);
    CHECK(g.basis_of_degree(0) == std::vector<std::size_t>{2});
    CHECK(nd(g.ring()) == 3u);
    CHECK(zoo::grassmann_star(1, CoeffDomain::rationals()).ring().is_zero_product());
    const Ring e3 = zoo::grassmann_star(3, CoeffDomain::rationals()).ring();
    CHECK(nd(e3) == 4u);
    // Generators anticommute.
    CHECK(e3.basis(0) * e3.basis(1) == -(e3.basis(1) * e3.basis(0)));
  }

  TEST_CASE("2Z/2^kZ models") {
    CHECK(nd(zoo::two_z_2k(2)) == 2u);
    CHECK(nd(zoo::two_z_2k(3)) == 3u);
    for (unsigned k = 2; k <= 8; ++k) {
      const Ring r = zoo::two_z_2k(k);
      CHECK(nd(r) == k);
      CHECK(element_nil_index(r.basis(0), 64).status == VerdictStatus::Proved);
    }
    CHECK_THROWS_AS(zoo::two_z_2k(1), Error);
  }

  TEST_CASE("truncated polynomial rings") {
    const GradedRing p4 = zoo::truncated_poly_positive(4, CoeffDomain::prime_field(2));
    CHECK(nd(p4.ring()) == 4u);
    CHECK(p4.support_size() == 3);
    CHECK(zoo::truncated_poly_positive(2, CoeffDomain::prime_field(2)).ring().is_zero_product());
    CHECK(nd(zoo::truncated_poly_positive(3, CoeffDomain::rationals()).ring()) == 3u);
  }

  TEST_CASE("catalog") {
    for (const auto& name : {"sut", "nagata", "grassmann", "two-z", "poly"}) {
      REQUIRE(zoo::lookup(name));
      CHECK(zoo::lookup(name)->constructible);
    }
    for (const auto& name : {"golod", "nagata-union", "polynomial-full"}) {
      REQUIRE(zoo::lookup(name));
      CHECK_FALSE(zoo::lookup(name)->constructible);
      CHECK_FALSE(zoo::lookup(name)->note.empty());
    }
    CHECK_FALSE(zoo::lookup("nothing"));
  }
}
