#include <doctest.h>

#include <random>
#include <set>

#include "gradnil/kernel.hpp"
#include "gradnil/submodule.hpp"
#include "gradnil/zoo.hpp"

using namespace gradnil;

namespace {

using Key = std::vector<long>;

Key key(const Vector& v) {
  Key k;
  for (const auto& x : v) {
    k.push_back(x.get_num().get_si());
  }
  return k;
}

// Additive closure of the generators in (Z/m)^dim by breadth-first search.
std::set<Key> brute_span(long m, std::size_t dim, const std::vector<Vector>& gens) {
  std::set<Key> seen{Key(dim, 0)};
  std::vector<Key> frontier{Key(dim, 0)};
  while (!frontier.empty()) {
    std::vector<Key> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        Key w(dim);
        for (std::size_t i = 0; i < dim; ++i) {
          w[i] = (v[i] + g[i].get_num().get_si()) % m;
        }
        if (seen.insert(w).second) {
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

Vector random_vector(std::mt19937& rng, long m, std::size_t dim) {
  Vector v;
  for (std::size_t i = 0; i < dim; ++i) {
    v.emplace_back(static_cast<long>(rng() % m));
  }
  return v;
}

}  // namespace

TEST_SUITE("coeff") {
  TEST_CASE("domains") {
    const auto z8 = CoeffDomain::parse("Z8");
    CHECK(z8.kind() == CoeffKind::ZMod);
    CHECK(z8.name() == "Z8");
    CHECK_FALSE(z8.is_field());
    CHECK_FALSE(z8.two_is_unit());
    CHECK(z8.reduce(Scalar(-1)) == 7);
    CHECK(z8.reduce(Scalar(1, 3)) == 3);
    CHECK_THROWS_AS(z8.reduce(Scalar(1, 2)), Error);
    CHECK(z8.inverse(Scalar(3)) == std::optional<Scalar>(Scalar(3)));
    CHECK_FALSE(z8.inverse(Scalar(2)).has_value());
    CHECK(*z8.cardinality() == 8);

    const auto f5 = CoeffDomain::parse("F5");
    CHECK(f5.is_field());
    CHECK(f5.two_is_unit());
    CHECK(f5.parse_scalar("-2/3") == f5.mul(f5.neg(2), *f5.inverse(3)));
    CHECK_THROWS_AS(CoeffDomain::parse("F6"), Error);
    CHECK_THROWS_AS(CoeffDomain::parse("Z1"), Error);
    CHECK_THROWS_AS(CoeffDomain::parse("R"), Error);

    const auto q = CoeffDomain::rationals();
    CHECK(q.parse_scalar("6/4") == Scalar(3, 2));
    CHECK(q.characteristic() == 0);
    CHECK_FALSE(q.cardinality().has_value());
    CHECK(q.format(Scalar(-3, 2)) == "-3/2");
  }

  TEST_CASE("Howell spans over Z_m agree with brute-force closure") {
    std::mt19937 rng(5);
    for (long m : {4L, 6L, 8L, 9L, 12L}) {
      const auto dom = CoeffDomain::zmod(m);
      for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = 1 + rng() % 3;
        std::vector<Vector> gens;
        for (std::size_t g = 0; g < 1 + rng() % 3; ++g) {
          gens.push_back(random_vector(rng, m, dim));
        }
        const Submodule s = Submodule::span(dom, dim, gens);
        const auto oracle = brute_span(m, dim, gens);
        CHECK(*s.cardinality() == oracle.size());
        for (int probe = 0; probe < 20; ++probe) {
          const Vector v = random_vector(rng, m, dim);
          CHECK(s.contains(v) == (oracle.count(key(v)) == 1));
        }
        // Canonical form: spanning by the rows gives the same module.
        CHECK(Submodule::span(dom, dim, s.rows()) == s);
      }
    }
  }

  TEST_CASE("spans over F_p have p^rank elements") {
    std::mt19937 rng(9);
    const auto f3 = CoeffDomain::prime_field(3);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t dim = 1 + rng() % 4;
      std::vector<Vector> gens;
      for (std::size_t g = 0; g < rng() % 4; ++g) {
        gens.push_back(random_vector(rng, 3, dim));
      }
      const Submodule s = Submodule::span(f3, dim, gens);
      CHECK(*s.cardinality() == brute_span(3, dim, gens).size());
    }
  }

  TEST_CASE("spans over Q") {
    const auto q = CoeffDomain::rationals();
    const Submodule s = Submodule::span(q, 3, {{1, 2, 0}, {2, 4, 0}, {0, 0, Scalar(1, 2)}});
    CHECK(s.rows().size() == 2);
    CHECK(s.contains(Vector{3, 6, 5}));
    CHECK_FALSE(s.contains(Vector{1, 0, 0}));
    CHECK(Submodule::full(q, 3).contains(s));
    CHECK_FALSE(s.contains(Submodule::full(q, 3)));
    CHECK_FALSE(s.cardinality().has_value());
    CHECK(*Submodule::zero(q, 3).cardinality() == 1);
  }

  TEST_CASE("residue kernel agrees with exact arithmetic") {
    const Ring r = zoo::grassmann_star(3, CoeffDomain::zmod(6)).ring();
    const auto k = ResidueKernel::build(r);
    REQUIRE(k.has_value());
    CHECK(*k->count(2) == 36);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const Element a = r.element(random_vector(rng, 6, r.rank()));
      const Element b = r.element(random_vector(rng, 6, r.rank()));
      ResidueKernel::Vec out;
      k->mul(k->from_element(a), k->from_element(b), out);
      CHECK(k->to_element(r, out) == a * b);
    }
    CHECK_FALSE(ResidueKernel::build(zoo::grassmann_star(2, CoeffDomain::rationals()).ring()).has_value());
  }
}
