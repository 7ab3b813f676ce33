#include <doctest.h>

#include <random>
#include <set>

#include "gradnil/words.hpp"

using namespace gradnil;

namespace {

DegreeWord word(const Monoid& m, std::initializer_list<long> degs) {
  std::vector<MonoidElement> v;
  for (long g : degs) {
    v.emplace_back(g);
  }
  return DegreeWord(m, std::move(v));
}

DegreeSet set_of(std::initializer_list<long> elems) {
  std::vector<MonoidElement> v;
  for (long g : elems) {
    v.emplace_back(g);
  }
  return make_degree_set(std::move(v));
}

// Oracle: fold every contiguous range from scratch.
DegreeSet naive_lambda(const DegreeWord& w) {
  std::vector<MonoidElement> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      MonoidElement p = w.degrees[i];
      for (std::size_t k = i + 1; k < j; ++k) {
        p = w.monoid.mul(p, w.degrees[k]);
      }
      out.push_back(p);
    }
  }
  return make_degree_set(std::move(out));
}

void check_blocks(const DegreeWord& w, const Decomposition& dec) {
  for (std::size_t j = 1; j < dec.cuts.size(); ++j) {
    REQUIRE(dec.cuts[j - 1] < dec.cuts[j]);
    CHECK(block_degree(w, dec.cuts[j - 1], dec.cuts[j]) == w.monoid.identity());
  }
}

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("lambda sets") {
    CHECK(lambda_set(word(Monoid::cyclic(2), {1, 1})) == set_of({0, 1}));
    CHECK(lambda_set(word(Monoid::cyclic(5), {3})) == set_of({3}));
    CHECK(lambda_set(word(Monoid::integers(), {1, 2, 1})) == set_of({1, 2, 3, 4}));
    CHECK(lambda_set(word(Monoid::integers(), {-2, 2})) == set_of({-2, 0, 2}));
  }

  TEST_CASE("lambda sets match the naive fold") {
    std::mt19937 rng(11);
    const Monoid s3 = Monoid::from_table({{0, 1, 2, 3, 4, 5},
                                          {1, 0, 4, 5, 2, 3},
                                          {2, 3, 0, 1, 5, 4},
                                          {3, 2, 5, 4, 0, 1},
                                          {4, 5, 1, 0, 3, 2},
                                          {5, 4, 3, 2, 1, 0}});
    for (const Monoid& m : {Monoid::cyclic(4), Monoid::cyclic(7), s3, Monoid::integers()}) {
      for (int t = 0; t < 200; ++t) {
        std::vector<MonoidElement> degs(1 + rng() % 9);
        for (auto& g : degs) {
          g = m.is_table() ? static_cast<unsigned long>(rng() % m.size()) : static_cast<long>(rng() % 7) - 3;
        }
        const DegreeWord w(m, degs);
        CHECK(lambda_set(w) == naive_lambda(w));
      }
    }
  }

  TEST_CASE("zero-product prediction") {
    CHECK(zero_product_predictor(word(Monoid::integers(), {1, 1, 1, 1, 1}), set_of({1, 2, 3, 4})) ==
          ZeroPrediction::ForcedZero);
    CHECK(zero_product_predictor(word(Monoid::cyclic(3), {0, 0, 0}), set_of({0})) ==
          ZeroPrediction::PossiblyNonzero);
    CHECK(zero_product_predictor(word(Monoid::cyclic(2), {1, 1}), set_of({1})) == ZeroPrediction::ForcedZero);
  }

  TEST_CASE("neutral decomposition examples") {
    const DegreeWord z2 = word(Monoid::cyclic(2), {1, 1, 1, 1});
    const auto a = neutral_decomposition(z2, 2, set_of({0, 1}));
    REQUIRE(a.kind == DecompositionResult::Kind::Found);
    CHECK(a.decomposition.cuts == std::vector<std::size_t>{0, 2, 4});

    const auto b = neutral_decomposition(word(Monoid::cyclic(2), {0, 0}), 2, set_of({0}));
    REQUIRE(b.kind == DecompositionResult::Kind::Found);
    CHECK(b.decomposition.cuts == std::vector<std::size_t>{0, 1, 2});

    const DegreeWord z3 = word(Monoid::cyclic(3), {1, 1, 1, 1, 1, 1});
    const auto c = neutral_decomposition(z3, 2, set_of({0, 1, 2}));
    REQUIRE(c.kind == DecompositionResult::Kind::Found);
    CHECK(c.decomposition.cuts == std::vector<std::size_t>{0, 3, 6});

    // Prefixes 1, 2 without e: the g_0 branch takes equal prefixes.
    const DegreeWord ints = word(Monoid::integers(), {1, 0, 0, 1});
    const auto d = neutral_decomposition(ints, 2, set_of({0, 1}));
    CHECK(d.kind == DecompositionResult::Kind::ForcedZero);
    const auto e = neutral_decomposition(word(Monoid::integers(), {1, 0, 0, 0}), 2, set_of({0, 1}));
    REQUIRE(e.kind == DecompositionResult::Kind::Found);
    CHECK(e.decomposition.cuts == std::vector<std::size_t>{1, 2, 3});
    check_blocks(word(Monoid::integers(), {1, 0, 0, 0}), e.decomposition);
  }

  TEST_CASE("shape errors") {
    const Monoid z2 = Monoid::cyclic(2);
    CHECK_THROWS_AS(neutral_decomposition(word(z2, {1, 1, 1}), 2, set_of({0, 1})), Error);
    CHECK_THROWS_AS(neutral_decomposition(word(z2, {1, 1}), 1, set_of({0, 1})), Error);
    const Monoid lz = Monoid::from_table({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
    CHECK_THROWS_AS(neutral_decomposition(word(lz, {1, 2}), 2, set_of({1})), Error);
    CHECK_THROWS_AS(DegreeWord(z2, {MonoidElement(2)}), Error);
  }

  TEST_CASE("constructive and brute-force decompositions agree") {
    for (std::uint32_t n : {2u, 3u}) {
      const Monoid m = Monoid::cyclic(n);
      // All supports containing e, all words of length r*d with r = 2.
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<MonoidElement> supp{0};
        for (std::uint32_t g = 1; g < n; ++g) {
          if (mask & (1u << (g - 1))) {
            supp.emplace_back(static_cast<unsigned long>(g));
          }
        }
        const DegreeSet s = make_degree_set(supp);
        const std::size_t len = 2 * s.size();
        std::size_t total = 1;
        for (std::size_t i = 0; i < len; ++i) {
          total *= n;
        }
        for (std::size_t code = 0; code < total; ++code) {
          std::vector<MonoidElement> degs;
          std::size_t rest = code;
          for (std::size_t i = 0; i < len; ++i) {
            degs.emplace_back(static_cast<unsigned long>(rest % n));
            rest /= n;
          }
          const DegreeWord w(m, degs);
          const auto fast = neutral_decomposition(w, 2, s);
          const auto slow = oracle_decomposition(w, 2, s);
          REQUIRE(fast.kind == slow.kind);
          if (fast.kind == DecompositionResult::Kind::Found) {
            check_blocks(w, fast.decomposition);
            check_blocks(w, slow.decomposition);
          }
        }
      }
    }
  }

  TEST_CASE("integer words either leave the support or decompose") {
    std::mt19937 rng(3);
    const DegreeSet supp = set_of({-1, 0, 1});
    for (int t = 0; t < 2000; ++t) {
      const std::size_t r = 2 + rng() % 2;
      std::vector<MonoidElement> degs;
      for (std::size_t i = 0; i < r * 3; ++i) {
        degs.emplace_back(static_cast<long>(rng() % 3) - 1);
      }
      const DegreeWord w(Monoid::integers(), degs);
      const auto fast = neutral_decomposition(w, r, supp);
      const auto slow = oracle_decomposition(w, r, supp);
      REQUIRE(fast.kind == slow.kind);
      CHECK(fast.kind != DecompositionResult::Kind::None);
      if (fast.kind == DecompositionResult::Kind::Found) {
        CHECK(fast.decomposition.blocks() == r);
        check_blocks(w, fast.decomposition);
      }
    }
  }

  TEST_CASE("prefix buckets satisfy the pigeonhole dichotomy") {
    std::mt19937 rng(8);
    const Monoid m = Monoid::cyclic(4);
    const DegreeSet supp = set_of({0, 1, 2, 3});
    for (int t = 0; t < 500; ++t) {
      std::vector<MonoidElement> degs;
      for (int i = 0; i < 8; ++i) {
        degs.emplace_back(static_cast<unsigned long>(rng() % 4));
      }
      const auto buckets = prefix_buckets(DegreeWord(m, degs));
      std::size_t total = 0;
      std::size_t best_other = 0;
      for (const auto& [g, pos] : buckets) {
        total += pos.size();
        if (g != 0) {
          best_other = std::max(best_other, pos.size());
        }
      }
      CHECK(total == 8);
      const auto it = buckets.find(0);
      const std::size_t neutral = it == buckets.end() ? 0 : it->second.size();
      CHECK((neutral >= 2 || best_other >= 3));
    }
  }

  TEST_CASE("gap selection") {
    CHECK(gap_selection(Decomposition{{0, 2, 4}}, 2) == std::vector<std::size_t>{1, 2});
    CHECK(gap_selection(Decomposition{{0, 1, 2, 3}}, 1) == std::vector<std::size_t>{1, 2, 3});
    CHECK(gap_selection(Decomposition{{0, 1, 6}}, 3) == std::vector<std::size_t>{1, 2});
    CHECK(gap_selection(Decomposition{{0, 1, 2, 8}}, 3) == std::vector<std::size_t>{1, 2, 3});
    CHECK_THROWS_AS(gap_selection(Decomposition{{0, 5}}, 3), Error);
    CHECK_THROWS_AS(gap_selection(Decomposition{{0, 1, 7}}, 3), Error);
  }
}
