#include <doctest.h>

#include "gradnil/specfile.hpp"
#include "gradnil/zoo.hpp"

using namespace gradnil;

namespace {

void check_round_trip(const GradedRing& gr) {
  const std::string text = emit_spec(gr);
  const SpecDocument doc = parse_spec(text);
  REQUIRE(doc.graded);
  CHECK(*doc.graded == gr);
  CHECK(emit_spec(doc) == text);
}

int diagnostic_line(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    REQUIRE_FALSE(e.diagnostics().empty());
    return static_cast<int>(e.diagnostics().front().line);
  }
  return -1;
}

}  // namespace

TEST_SUITE("specfile") {
  TEST_CASE("zoo objects round trip") {
    check_round_trip(zoo::sut(3, CoeffDomain::prime_field(2)));
    check_round_trip(zoo::sut(6, CoeffDomain::rationals()));
    check_round_trip(zoo::grassmann_star(3, CoeffDomain::zmod(9)));
    check_round_trip(zoo::grassmann_star(2, CoeffDomain::rationals()));
    check_round_trip(zoo::truncated_poly_positive(5, CoeffDomain::prime_field(7)));
    check_round_trip(trivial_grading(zoo::truncated_nagata(2, 3)));
    check_round_trip(trivial_grading(zoo::two_z_2k(3)));
    check_round_trip(elementary_grading(zoo::two_z_2k(3), 3));
    check_round_trip(trivial_grading(Ring::zero_product(CoeffDomain::prime_field(2), 0)));
  }

  TEST_CASE("ungraded ring files") {
    const SpecDocument doc = parse_spec("[ring]\ndomain = Z8\nrank = 1\nsc = 0 0 0 10\n");
    CHECK_FALSE(doc.graded);
    CHECK(doc.ring.structure_constants().front().coeff == 2);
    CHECK(doc.ring.names() == std::vector<std::string>{"b1"});
    CHECK(doc.grading().support_size() == 1);
  }

  TEST_CASE("rational and big coefficients") {
    const SpecDocument doc = parse_spec(
        "[ring]\ndomain = Q\nrank = 2\nnames = x y\nsc = 0 0 1 -3/4\n"
        "[monoid]\nkind = int-add\n[grading]\ndeg = 0 123456789012345678901234567890\n"
        "deg = 1 246913578024691357802469135780\n");
    CHECK(doc.ring.structure_constants().front().coeff == Scalar(-3, 4));
    CHECK(doc.graded->degree(0) == mpz_class("123456789012345678901234567890"));
    CHECK(parse_spec(emit_spec(doc)).graded == doc.graded);
  }

  TEST_CASE("f maps, actions and congruences round trip") {
    const std::string text =
        "[monoid]\nkind = table\nsize = 4\nrow = 0 1 2 3\nrow = 1 2 3 0\nrow = 2 3 0 1\nrow = 3 0 1 2\n"
        "[ring]\ndomain = F3\nrank = 2\nnames = u v\n"
        "[grading]\ndeg = 0 1\ndeg = 1 3\n"
        "[fmap]\nrule = pointwise\ncandidates = 1 2\nvariant = weak\n"
        "[congruence]\nclass = 0 2\nclass = 1 3\n";
    const SpecDocument doc = parse_spec(text);
    REQUIRE(doc.f);
    CHECK(doc.f->f.kind() == FMap::Kind::Pointwise);
    CHECK(doc.f->f.variant() == CommutatorVariant::Weak);
    REQUIRE(doc.congruence);
    CHECK(doc.congruence->class_count() == 2);
    const std::string again = emit_spec(doc);
    CHECK(emit_spec(parse_spec(again)) == again);

    const std::string linear =
        "[ring]\ndomain = Z8\nrank = 1\nnames = b\nsc = 0 0 0 2\n"
        "[action]\nkind = linear\nsize = 2\nrow = 0 1\nrow = 1 1\nmatrix = 0 0 0 1\n"
        "[fmap]\nconstant = #0\n";
    const SpecDocument lin = parse_spec(linear);
    REQUIRE(lin.f);
    CHECK(lin.f->act.kind() == Action::Kind::Linear);
    CHECK(*lin.f->f.constant_value() == Actor::id(0));
    const std::string lin_text = emit_spec(lin);
    CHECK(emit_spec(parse_spec(lin_text)) == lin_text);

    const std::string table =
        "[ring]\ndomain = F5\nrank = 1\nsc = 0 0 0 1\n"
        "[fmap]\npair = 1 ; 2 -> 4\ndefault = 1\n";
    const SpecDocument tab = parse_spec(table);
    REQUIRE(tab.f);
    CHECK(tab.f->f.kind() == FMap::Kind::Table);
    CHECK(tab.f->f.entries().size() == 1);
    const std::string tab_text = emit_spec(tab);
    CHECK(emit_spec(parse_spec(tab_text)) == tab_text);
  }

  TEST_CASE("syntax errors carry line numbers") {
    CHECK(diagnostic_line("[ring]\ndomain = F2\nrank = two\n") == 3);
    CHECK(diagnostic_line("[ring]\ndomain = F2\nrank = 1\nsc = 0 0\n") == 4);
    CHECK(diagnostic_line("# header\n[bogus]\n") == 2);
    CHECK(diagnostic_line("[ring]\ndomain = F4\nrank = 1\n") == 2);
    CHECK(diagnostic_line("[ring]\ndomain = F2\nrank = 1\nwhat = 1\n") == 4);
    CHECK(diagnostic_line("[ring]\ndomain = F2\n") > 0);
    CHECK(diagnostic_line("") >= 0);
    try {
      parse_spec("[ring]\ndomain = F2\nrank = x\n");
    } catch (const SpecError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("inconsistent sections") {
    CHECK_THROWS_AS(parse_spec("[ring]\ndomain = F2\nrank = 1\n[grading]\ndeg = 0 0\n"), SpecError);
    CHECK_THROWS_AS(parse_spec("[monoid]\nkind = int-add\n[ring]\ndomain = F2\nrank = 1\n"), SpecError);
    CHECK_THROWS_AS(parse_spec("[ring]\ndomain = F2\nrank = 1\n[action]\nkind = scalar\n"), SpecError);
  }

  TEST_CASE("validation failures name the witness") {
    // One corrupted constant in SUT_3: E12 E23 = E13 moved onto E12.
    const std::string bad =
        "[ring]\ndomain = F2\nrank = 3\nnames = E12 E13 E23\nsc = 0 2 0 1\n";
    try {
      parse_spec(bad);
      FAIL("accepted");
    } catch (const ValidationError& e) {
      CHECK(e.axiom() == "associativity");
      CHECK(e.witness().find("basis triple") != std::string::npos);
    }
    const std::string grading =
        "[monoid]\nkind = int-add\n[ring]\ndomain = F2\nrank = 3\nnames = E12 E13 E23\nsc = 0 2 1 1\n"
        "[grading]\ndeg = 0 1\ndeg = 1 1\ndeg = 2 1\n";
    try {
      parse_spec(grading);
      FAIL("accepted");
    } catch (const ValidationError& e) {
      CHECK(e.axiom() == "grading axiom");
      CHECK(e.witness() == "(i, j, k) = (0, 2, 1)");
    }
    CHECK_THROWS_AS(parse_spec("[monoid]\nkind = table\nsize = 2\nrow = 0 1\nrow = 1 1\n[ring]\ndomain = F2\nrank = 1\n"
                               "[grading]\ndeg = 0 1\n"),
                    ValidationError);
  }

  TEST_CASE("loading from disk") {
    const SpecDocument doc = load_spec(GRADNIL_TEST_DATA "/z4_odd.spec");
    REQUIRE(doc.graded);
    CHECK(doc.graded->support() == std::vector<MonoidElement>{1, 3});
    CHECK(doc.congruence);
    CHECK_THROWS_AS(load_spec(GRADNIL_TEST_DATA "/missing.spec"), Error);
    CHECK_THROWS_AS(load_spec(GRADNIL_TEST_DATA "/broken_assoc.spec"), ValidationError);
  }
}
