#include <doctest.h>

#include "gradnil/theorems.hpp"
#include "gradnil/zoo.hpp"

using namespace gradnil;

namespace {

std::optional<mpz_class> value_of(const std::vector<NamedValue>& values, const std::string& name) {
  for (const auto& v : values) {
    if (v.name == name) {
      return v.value;
    }
  }
  return std::nullopt;
}

std::optional<mpz_class> bound_of(const TheoremCheck& c, const std::string& name) { return value_of(c.bounds, name); }
std::optional<mpz_class> observed(const TheoremCheck& c, const std::string& name) {
  return value_of(c.observed, name);
}

VerifyOptions opts() {
  VerifyOptions o;
  o.caps.samples = 2000;
  return o;
}

GradedRing m2_2z8() { return elementary_grading(zoo::two_z_2k(3), 2); }
GradedRing grassmann(const CoeffDomain& dom) { return zoo::grassmann_star(2, dom); }
GradedRing zero_ring() { return trivial_grading(Ring::zero_product(CoeffDomain::prime_field(2), 0)); }
GradedRing idempotent() { return trivial_grading(Ring(CoeffDomain::rationals(), 1, {"e"}, {{0, 0, 0, 1}})); }

// Geometric-series oracle for 2sd^2 (d^(2d) - 1)/(d - 1), d > 1.
mpz_class closed_form(unsigned long s, unsigned long d) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), d, 2 * d);
  return 2 * s * d * d * (p - 1) / (d - 1);
}

}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("identifiers") {
    CHECK(all_theorems().size() == 12);
    for (TheoremId id : all_theorems()) {
      CHECK(parse_theorem_id(code(id)) == id);
    }
    CHECK(parse_theorem_id("p3.03") == TheoremId::NeutralZero);
    CHECK(parse_theorem_id("T3.29") == TheoremId::DiagonalReduction);
    CHECK_FALSE(parse_theorem_id("T9.99"));
    CHECK(to_string(CheckStatus::NotApplicable) == "NOT_APPLICABLE");
  }

  TEST_CASE("bound formulas") {
    CHECK(nil_lifting_bound(2, 2) == 240);
    for (unsigned long s = 1; s <= 6; ++s) {
      CHECK(nil_lifting_bound(s, 1) == 4 * s);
      for (unsigned long d = 2; d <= 7; ++d) {
        CHECK(nil_lifting_bound(s, d) == closed_form(s, d));
      }
    }
    // Far past 64 bits.
    CHECK(nil_lifting_bound(9, 40) == closed_form(9, 40));
    CHECK(field_nilpotency_bound(3, 2, 5) == mpz_class(14));
    CHECK(field_nilpotency_bound(5, 2, 0) == mpz_class(50));
    CHECK(field_nilpotency_bound(2, 2, 0) == mpz_class(6));
    CHECK(field_nilpotency_bound(4, 1, 0) == mpz_class(15));
    CHECK_FALSE(field_nilpotency_bound(3, 2, 3));
    CHECK(field_nilpotency_bound(3, 1, 7) == mpz_class(7));
  }

  TEST_CASE("neutral component zero") {
    const TheoremCheck sut = verify(TheoremId::NeutralZero, zoo::sut(5, CoeffDomain::prime_field(2)), opts());
    CHECK(sut.status == CheckStatus::Pass);
    CHECK(bound_of(sut, "nd(R) upper") == mpz_class(5));
    CHECK(observed(sut, "nd(R)") == mpz_class(5));

    const TheoremCheck triv =
        verify(TheoremId::NeutralZero, trivial_grading(zoo::two_z_2k(3)), opts());
    CHECK(triv.status == CheckStatus::NotApplicable);
    CHECK_FALSE(triv.applicable);

    const TheoremCheck zero = verify(TheoremId::NeutralZero, zero_ring(), opts());
    CHECK(zero.status == CheckStatus::Pass);
    CHECK(observed(zero, "nd(R)") == mpz_class(1));
  }

  TEST_CASE("nil lifting") {
    const TheoremCheck g = verify(TheoremId::NilLifting, grassmann(CoeffDomain::prime_field(3)), opts());
    CHECK(g.status == CheckStatus::Pass);
    CHECK(bound_of(g, "nd_nil(R) upper") == mpz_class(240));
    CHECK(observed(g, "nd_nil(R)") == mpz_class(2));

    const TheoremCheck t = verify(TheoremId::NilLifting, trivial_grading(zoo::two_z_2k(3)), opts());
    CHECK(t.status == CheckStatus::Pass);
    CHECK(bound_of(t, "nd_nil(R) upper") == mpz_class(12));

    const TheoremCheck e = verify(TheoremId::NilLifting, idempotent(), opts());
    CHECK(e.status == CheckStatus::NotApplicable);
  }

  TEST_CASE("nilpotency range") {
    const TheoremCheck m = verify(TheoremId::NilpotencyRange, m2_2z8(), opts());
    CHECK(m.status == CheckStatus::Pass);
    CHECK(bound_of(m, "r") == mpz_class(3));
    CHECK(bound_of(m, "nd(R) lower") == mpz_class(3));
    CHECK(bound_of(m, "nd(R) upper") == mpz_class(6));

    const TheoremCheck s = verify(TheoremId::NilpotencyRange, zoo::sut(3, CoeffDomain::prime_field(2)), opts());
    CHECK(s.status == CheckStatus::Pass);
    CHECK(bound_of(s, "nd(R) upper") == mpz_class(3));
    CHECK(observed(s, "nd(R)") == mpz_class(3));

    const TheoremCheck t = verify(TheoremId::NilpotencyRange, trivial_grading(zoo::sut(4, CoeffDomain::rationals()).ring()),
                                  opts());
    CHECK(t.status == CheckStatus::Pass);
    CHECK(bound_of(t, "nd(R) lower") == mpz_class(4));
    CHECK(bound_of(t, "nd(R) upper") == mpz_class(4));
  }

  TEST_CASE("generator bound") {
    const TheoremCheck a = verify(TheoremId::GeneratorBound, trivial_grading(zoo::two_z_2k(3)), opts());
    CHECK(a.status == CheckStatus::Pass);
    CHECK(bound_of(a, "n") == mpz_class(1));
    CHECK(bound_of(a, "nd(R) upper") == mpz_class(3));
    CHECK(observed(a, "nd(R)") == mpz_class(3));

    const TheoremCheck z =
        verify(TheoremId::GeneratorBound, trivial_grading(Ring::zero_product(CoeffDomain::prime_field(3), 2)), opts());
    CHECK(z.status == CheckStatus::Pass);
    CHECK(bound_of(z, "nd(R) upper") == mpz_class(3));
    CHECK(observed(z, "nd(R)") == mpz_class(2));

    const TheoremCheck g = verify(TheoremId::GeneratorBound, grassmann(CoeffDomain::prime_field(3)), opts());
    CHECK(g.status == CheckStatus::Pass);
    CHECK(bound_of(g, "n") == mpz_class(2));
    CHECK(bound_of(g, "s") == mpz_class(2));
    CHECK(observed(g, "nd(R)") == mpz_class(3));
  }

  TEST_CASE("graded generator bound") {
    const TheoremCheck m = verify(TheoremId::GradedGeneratorBound, m2_2z8(), opts());
    CHECK(m.status == CheckStatus::Pass);
    CHECK(bound_of(m, "n") == mpz_class(2));
    CHECK(bound_of(m, "nd(R) upper") == mpz_class(10));

    const TheoremCheck s = verify(TheoremId::GradedGeneratorBound, zoo::sut(4, CoeffDomain::prime_field(2)), opts());
    CHECK(s.status == CheckStatus::Pass);
    CHECK(bound_of(s, "nd(R) upper") == mpz_class(4));

    // With d = 1 the graded bound is the ungraded one.
    const GradedRing t = trivial_grading(zoo::two_z_2k(4));
    const TheoremCheck graded = verify(TheoremId::GradedGeneratorBound, t, opts());
    const TheoremCheck plain = verify(TheoremId::GeneratorBound, t, opts());
    CHECK(bound_of(graded, "nd(R) upper") == bound_of(plain, "nd(R) upper"));
  }

  TEST_CASE("square-zero neutral component") {
    const GradedRing g = trivial_grading(grassmann(CoeffDomain::prime_field(3)).ring());
    const TheoremCheck c = verify(TheoremId::SquareZeroNeutral, g, opts());
    CHECK(c.status == CheckStatus::Pass);
    CHECK(bound_of(c, "nd(R) upper") == mpz_class(3));
    CHECK(observed(c, "nd(R)") == mpz_class(3));

    CHECK(verify(TheoremId::SquareZeroNeutral, trivial_grading(zoo::two_z_2k(2)), opts()).status ==
          CheckStatus::NotApplicable);
    CHECK(verify(TheoremId::SquareZeroNeutral, trivial_grading(zoo::two_z_2k(3)), opts()).status ==
          CheckStatus::NotApplicable);
  }

  TEST_CASE("field bound") {
    const TheoremCheck q = verify(TheoremId::FieldBound, grassmann(CoeffDomain::rationals()), opts());
    CHECK(q.status == CheckStatus::Pass);
    CHECK(bound_of(q, "s") == mpz_class(2));
    CHECK(bound_of(q, "p") == mpz_class(0));
    CHECK(bound_of(q, "nd(R) upper") == mpz_class(6));
    CHECK(observed(q, "nd(R)") == mpz_class(3));

    CHECK(verify(TheoremId::FieldBound, m2_2z8(), opts()).status == CheckStatus::NotApplicable);
    // p = 3 with s = 3 is outside every clause.
    const GradedRing n = trivial_grading(zoo::truncated_nagata(1, 3));
    CHECK(verify(TheoremId::FieldBound, n, opts()).status == CheckStatus::NotApplicable);
  }

  TEST_CASE("product length") {
    const TheoremCheck g = verify(TheoremId::ProductLength, grassmann(CoeffDomain::prime_field(5)), opts());
    CHECK(g.status == CheckStatus::Pass);
    CHECK(bound_of(g, "product length") == mpz_class(6));

    const GradedRing p = trivial_grading(zoo::truncated_poly_positive(3, CoeffDomain::prime_field(5)).ring());
    const TheoremCheck c = verify(TheoremId::ProductLength, p, opts());
    CHECK(c.status == CheckStatus::Pass);
    CHECK(bound_of(c, "product length") == mpz_class(7));

    CHECK(verify(TheoremId::ProductLength, grassmann(CoeffDomain::prime_field(3)), opts()).status ==
          CheckStatus::NotApplicable);
  }

  TEST_CASE("matrix nil") {
    const TheoremCheck a = verify(TheoremId::MatrixNil, trivial_grading(zoo::two_z_2k(3)), opts());
    CHECK(a.status == CheckStatus::Pass);
    const TheoremCheck z =
        verify(TheoremId::MatrixNil, trivial_grading(Ring::zero_product(CoeffDomain::prime_field(2), 1)), opts());
    CHECK(z.status == CheckStatus::Pass);
    CHECK(verify(TheoremId::MatrixNil, idempotent(), opts()).status == CheckStatus::NotApplicable);
  }

  TEST_CASE("diagonal reduction") {
    const TheoremCheck a = verify(TheoremId::DiagonalReduction, trivial_grading(zoo::two_z_2k(3)), opts());
    CHECK(a.status == CheckStatus::Pass);
    CHECK(observed(a, "nd_nil(R)") == mpz_class(3));
    CHECK(observed(a, "nd_nil(M_0)") == mpz_class(3));

    const TheoremCheck z = verify(TheoremId::DiagonalReduction, zero_ring(), opts());
    CHECK(z.status == CheckStatus::Pass);

    const TheoremCheck e = verify(TheoremId::DiagonalReduction, idempotent(), opts());
    CHECK(e.status == CheckStatus::Pass);
    CHECK_FALSE(e.witnesses.empty());
  }

  TEST_CASE("quotient grading") {
    const Ring r = Ring::zero_product(CoeffDomain::prime_field(3), 2);
    const GradedRing gr(r, Monoid::cyclic(4), {1, 3});
    VerifyOptions o = opts();
    CHECK(verify(TheoremId::QuotientGrading, gr, o).status == CheckStatus::NotApplicable);

    o.congruence = Congruence::from_labels(gr.monoid(), {0, 1, 0, 1});
    const TheoremCheck c = verify(TheoremId::QuotientGrading, gr, o);
    CHECK(c.status == CheckStatus::Pass);
    CHECK(bound_of(c, "d (quotient)") == mpz_class(1));

    o.congruence = Congruence::universal(gr.monoid());
    CHECK(verify(TheoremId::QuotientGrading, gr, o).status == CheckStatus::Pass);

    o.congruence = Congruence::discrete(gr.monoid());
    const TheoremCheck same = verify(TheoremId::QuotientGrading, gr, o);
    const TheoremCheck direct = verify(TheoremId::NeutralZero, gr, opts());
    CHECK(same.status == CheckStatus::Pass);
    CHECK(bound_of(same, "P3.03 nd(R) upper") == bound_of(direct, "nd(R) upper"));
  }

  TEST_CASE("full reports") {
    const VerifierReport sut = full_report(zoo::sut(5, CoeffDomain::prime_field(2)), opts());
    CHECK(sut.checks.size() == 12);
    for (const auto& c : sut.checks) {
      CHECK(c.status != CheckStatus::Fail);
      if (c.id == TheoremId::NeutralZero) {
        CHECK(c.status == CheckStatus::Pass);
      }
    }
    CHECK(sut.nilpotency.index == 5u);

    const VerifierReport m = full_report(m2_2z8(), opts());
    for (const auto& c : m.checks) {
      CHECK(c.status != CheckStatus::Fail);
      if (c.id == TheoremId::NilpotencyRange || c.id == TheoremId::GradedGeneratorBound ||
          c.id == TheoremId::ComponentPowers || c.id == TheoremId::MatrixNil) {
        CHECK(c.status == CheckStatus::Pass);
      }
    }

    const VerifierReport z = full_report(zero_ring(), opts());
    for (const auto& c : z.checks) {
      CHECK((c.status == CheckStatus::Pass || c.status == CheckStatus::NotApplicable));
    }
    CHECK(z.nilpotency.index == 1u);
  }

  TEST_CASE("both range checks agree on the observed index") {
    for (const GradedRing& gr : {m2_2z8(), grassmann(CoeffDomain::prime_field(3)),
                                 zoo::truncated_poly_positive(5, CoeffDomain::prime_field(2))}) {
      const TheoremCheck a = verify(TheoremId::NilpotencyRange, gr, opts());
      const TheoremCheck b = verify(TheoremId::GradedGeneratorBound, gr, opts());
      if (a.applicable && b.applicable) {
        CHECK(a.status == CheckStatus::Pass);
        CHECK(b.status == CheckStatus::Pass);
        CHECK(observed(a, "nd(R)") == observed(b, "nd(R)"));
      }
    }
  }
}
