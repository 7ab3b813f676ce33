#include <doctest.h>

#include <random>

#include "gradnil/nil.hpp"
#include "gradnil/zoo.hpp"

using namespace gradnil;

namespace {

// Oracle: multiply a by itself until zero or until `cap` factors.
std::optional<std::uint64_t> naive_nil_index(const Element& a, std::uint64_t cap) {
  Element p = a;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (p.is_zero()) {
      return n;
    }
    p = p * a;
  }
  return std::nullopt;
}

Element random_element(const Ring& r, std::mt19937& rng, long spread) {
  Vector v(r.rank());
  for (auto& x : v) {
    x = r.domain().from_int(static_cast<long>(rng() % static_cast<unsigned long>(2 * spread + 1)) - spread);
  }
  return r.element(v);
}

Ring idempotent(const CoeffDomain& dom) { return Ring(dom, 1, {"e"}, {{0, 0, 0, 1}}); }

Caps small_caps() {
  Caps c;
  c.samples = 500;
  return c;
}

}  // namespace

TEST_SUITE("nil") {
  TEST_CASE("element nil index examples") {
    const NilVerdict two = element_nil_index(zoo::two_z_2k(3).basis(0), 64);
    CHECK(two.status == VerdictStatus::Proved);
    CHECK(two.index == 3u);

    const Ring e = idempotent(CoeffDomain::prime_field(2));
    const NilVerdict v = element_nil_index(e.basis(0), 64);
    CHECK(v.status == VerdictStatus::Refuted);
    REQUIRE(v.witness);
    CHECK(*v.witness == e.basis(0));

    const Ring g = zoo::grassmann_star(2, CoeffDomain::prime_field(3)).ring();
    const NilVerdict x = element_nil_index(g.basis(0) + g.basis(2), 64);
    CHECK(x.status == VerdictStatus::Proved);
    CHECK(x.index == 2u);

    CHECK(element_nil_index(g.zero(), 8).index == 1u);
  }

  TEST_CASE("element nil index agrees with repeated multiplication") {
    std::mt19937 rng(5);
    const std::vector<Ring> rings{
        zoo::sut(4, CoeffDomain::prime_field(3)).ring(),
        zoo::truncated_nagata(2, 3),
        zoo::grassmann_star(3, CoeffDomain::zmod(4)).ring(),
        zoo::sut(3, CoeffDomain::rationals()).ring(),
        zoo::two_z_2k(5),
    };
    for (const Ring& r : rings) {
      for (int i = 0; i < 60; ++i) {
        const Element a = random_element(r, rng, 3);
        const NilVerdict v = element_nil_index(a, 256);
        REQUIRE(v.status == VerdictStatus::Proved);
        CHECK(v.index == naive_nil_index(a, 256));
      }
    }
  }

  TEST_CASE("non-nil elements are refuted over finite and rational domains") {
    const Ring q = idempotent(CoeffDomain::rationals());
    // Over a field a nilpotent element of an n-dimensional ring has a^(n+1) = 0.
    const NilVerdict qv = element_nil_index(q.basis(0).scaled(3), 32);
    CHECK(qv.status == VerdictStatus::Refuted);
    CHECK(qv.method == "field-bound");
    const Ring f = idempotent(CoeffDomain::prime_field(5));
    CHECK(element_nil_index(f.basis(0).scaled(3), 32).status == VerdictStatus::Refuted);
  }

  TEST_CASE("ring nil verdicts") {
    const Caps caps = small_caps();
    const NilVerdict sut = ring_is_nil(zoo::sut(3, CoeffDomain::prime_field(2)).ring(), caps);
    CHECK(sut.status == VerdictStatus::Proved);
    CHECK(sut.method == "exhaustive");
    CHECK(sut.checked == 8);

    const NilVerdict e = ring_is_nil(idempotent(CoeffDomain::prime_field(2)), caps);
    CHECK(e.status == VerdictStatus::Refuted);
    CHECK(e.witness.has_value());

    const Ring m2 = matrix_ring(zoo::two_z_2k(3), 2);
    const NilVerdict m = ring_is_nil(m2, caps);
    CHECK(m.status == VerdictStatus::Proved);
    CHECK(m.checked == 256);

    const NilVerdict eq = ring_is_nil(idempotent(CoeffDomain::rationals()), caps);
    CHECK(eq.status == VerdictStatus::Refuted);
    CHECK(eq.method == "symbolic");
  }

  TEST_CASE("bounded index: enumeration and symbolic expansion") {
    const Caps caps = small_caps();
    CHECK(nil_bounded_index(zoo::two_z_2k(3), NilMode::Enum, caps).index == 3u);
    const Ring gq = zoo::grassmann_star(2, CoeffDomain::rationals()).ring();
    const NilVerdict s = nil_bounded_index(gq, NilMode::Symbolic, caps, 2);
    CHECK(s.status == VerdictStatus::Proved);
    CHECK(s.index == 2u);
    CHECK(nil_bounded_index(gq, NilMode::Enum, caps).status == VerdictStatus::Capped);
    CHECK_THROWS_AS(nil_bounded_index(gq, NilMode::Symbolic, caps), Error);

    const NilVerdict too_small = nil_bounded_index(zoo::sut(3, CoeffDomain::rationals()).ring(), NilMode::Symbolic,
                                                   caps, 2);
    CHECK(too_small.status == VerdictStatus::Refuted);
    CHECK_FALSE(too_small.monomial.empty());

    CHECK(nil_bounded_index(Ring::zero_product(CoeffDomain::prime_field(2), 0), NilMode::Enum, caps).index == 1u);
    CHECK(nil_bounded_index(Ring::zero_product(CoeffDomain::prime_field(2), 2), NilMode::Enum, caps).index == 2u);
  }

  TEST_CASE("enumeration and symbolic verdicts agree on finite domains") {
    const Caps caps = small_caps();
    const std::vector<Ring> rings{
        zoo::sut(3, CoeffDomain::prime_field(2)).ring(),
        zoo::grassmann_star(2, CoeffDomain::prime_field(3)).ring(),
        zoo::two_z_2k(3),
        zoo::truncated_nagata(1, 3),
        zoo::truncated_nagata(2, 2),
        zoo::truncated_poly_positive(4, CoeffDomain::prime_field(5)).ring(),
    };
    for (const Ring& r : rings) {
      const NilVerdict e = nil_bounded_index(r, NilMode::Enum, caps);
      REQUIRE(e.status == VerdictStatus::Proved);
      const NilVerdict s = nil_bounded_index(r, NilMode::Symbolic, caps, 16);
      REQUIRE(s.status == VerdictStatus::Proved);
      CHECK(s.index == e.index);
    }
  }

  TEST_CASE("nilpotency index") {
    const Caps caps = small_caps();
    for (std::size_t n = 2; n <= 6; ++n) {
      CHECK(nilpotency_index(zoo::sut(n, CoeffDomain::prime_field(2)).ring(), caps).index == n);
    }
    CHECK(nilpotency_index(Ring::zero_product(CoeffDomain::rationals(), 0), caps).index == 1u);
    const NilVerdict e = nilpotency_index(idempotent(CoeffDomain::prime_field(3)), caps);
    CHECK(e.status == VerdictStatus::Refuted);
    CHECK_FALSE(e.index.has_value());
  }

  TEST_CASE("nilpotent implies nil of bounded index on zoo rings") {
    const Caps caps = small_caps();
    const std::vector<Ring> rings{
        zoo::sut(4, CoeffDomain::prime_field(2)).ring(), zoo::truncated_nagata(2, 3),
        zoo::grassmann_star(3, CoeffDomain::prime_field(3)).ring(), zoo::two_z_2k(4),
        zoo::truncated_poly_positive(5, CoeffDomain::zmod(6)).ring(),
    };
    for (const Ring& r : rings) {
      const NilVerdict nd = nilpotency_index(r, caps);
      REQUIRE(nd.status == VerdictStatus::Proved);
      const NilVerdict nil = ring_is_nil(r, caps);
      REQUIRE(nil.status == VerdictStatus::Proved);
      CHECK(*nil.index <= *nd.index);
    }
  }

  TEST_CASE("S-nil check") {
    const Caps caps = small_caps();
    const DegreeVerdicts sut = s_nil_check(zoo::sut(3, CoeffDomain::prime_field(2)), caps);
    CHECK(sut.size() == 2);
    for (const auto& [g, v] : sut) {
      CHECK(v.status == VerdictStatus::Proved);
    }
    const GradedRing m = elementary_grading(idempotent(CoeffDomain::prime_field(2)), 2);
    const DegreeVerdicts mv = s_nil_check(m, caps);
    CHECK(mv.at(0).status == VerdictStatus::Refuted);
    // E12 + E21 squares to the identity matrix.
    CHECK(mv.at(1).status == VerdictStatus::Refuted);

    const Ring g = zoo::grassmann_star(2, CoeffDomain::prime_field(3)).ring();
    const DegreeVerdicts t = s_nil_check(trivial_grading(g), caps);
    REQUIRE(t.size() == 1);
    CHECK(t.begin()->second.index == ring_is_nil(g, caps).index);
  }

  TEST_CASE("homogeneous component powers on M_2(2Z_8)") {
    const GradedRing m = elementary_grading(zoo::two_z_2k(3), 2);
    const ComponentPowerReport rep = component_power_check(m, Caps{});
    REQUIRE(rep.applicable);
    CHECK(rep.s == 3);
    CHECK(rep.k_g.at(0) == 1);
    CHECK(rep.k_g.at(1) == 2);
    CHECK(rep.k == 2);
    CHECK(rep.status == VerdictStatus::Proved);
    CHECK(rep.exhaustive);
    // 16 neutral elements, then 16^2 pairs from the odd component.
    CHECK(rep.tuples_checked == 16 + 256);

    const ComponentPowerReport none = component_power_check(zoo::sut(3, CoeffDomain::prime_field(2)), Caps{});
    CHECK_FALSE(none.applicable);
  }

  TEST_CASE("k is the lcm of the capped orders") {
    // Z_6 with support {0, 2, 3}: orders 1, 3, 2 and d = 3.
    const Ring r = Ring::zero_product(CoeffDomain::prime_field(2), 3);
    const GradedRing gr(r, Monoid::cyclic(6), {0, 3, 2});
    const ComponentPowerReport rep = component_power_check(gr, Caps{});
    REQUIRE(rep.applicable);
    CHECK(rep.s == 2);
    CHECK(rep.k_g.at(0) == 1);
    CHECK(rep.k_g.at(2) == 3);
    CHECK(rep.k_g.at(3) == 2);
    CHECK(rep.k == 6);
    CHECK(rep.status == VerdictStatus::Proved);

    // Infinite order is capped at d.
    const GradedRing z(Ring::zero_product(CoeffDomain::prime_field(2), 4), Monoid::integers(), {0, 1, 2, 3});
    const ComponentPowerReport zr = component_power_check(z, Caps{});
    CHECK(zr.k_g.at(1) == 4);
    CHECK(zr.k == 4);
  }
}
