#include "gradnil/zoo.hpp"

#include <algorithm>
#include <map>

namespace gradnil::zoo {

namespace {

std::string pair_name(const char* prefix, std::size_t i, std::size_t j, std::size_t n) {
  if (n > 9) {
    return prefix + std::to_string(i) + "_" + std::to_string(j);
  }
  return prefix + std::to_string(i) + std::to_string(j);
}

}  // namespace

GradedRing sut(std::size_t n, const CoeffDomain& domain) {
  if (n < 2) {
    throw Error("SUT_n needs n >= 2");
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::string> names;
  std::vector<MonoidElement> degrees;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      index[{i, j}] = names.size();
      names.push_back(pair_name("E", i, j, n));
      degrees.emplace_back(static_cast<unsigned long>(j - i));
    }
  }
  std::vector<StructureConstant> sc;
  for (const auto& [ij, a] : index) {
    for (std::size_t k = ij.second + 1; k <= n; ++k) {
      sc.push_back({a, index.at({ij.second, k}), index.at({ij.first, k}), Scalar(1)});
    }
  }
  const std::size_t rank = names.size();
  Ring r(domain, rank, std::move(names), std::move(sc));
  return GradedRing(std::move(r), Monoid::integers(), std::move(degrees));
}

Ring truncated_nagata(std::size_t k, unsigned long p, std::size_t max_rank) {
  if (k < 1) {
    throw Error("truncated Nagata ring needs k >= 1");
  }
  const CoeffDomain dom = CoeffDomain::prime_field(p);
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, k);
  if (count - 1 > max_rank) {
    throw Error("truncated Nagata ring of rank " + mpz_class(count - 1).get_str() + " exceeds the rank cap " +
                std::to_string(max_rank));
  }
  const std::size_t total = count.get_ui();
  // Monomial index = exponent vector read in base p (x_1 least significant).
  auto exponents = [&](std::size_t idx) {
    std::vector<unsigned long> e(k);
    for (auto& x : e) {
      x = idx % p;
      idx /= p;
    }
    return e;
  };
  std::vector<std::string> names;
  for (std::size_t idx = 1; idx < total; ++idx) {
    const auto e = exponents(idx);
    std::string name;
    for (std::size_t i = 0; i < k; ++i) {
      if (e[i] == 0) {
        continue;
      }
      name += (k > 9 && !name.empty() ? "*" : "") + std::string("x") + std::to_string(i + 1);
      if (e[i] > 1) {
        name += "^" + std::to_string(e[i]);
      }
    }
    names.push_back(name);
  }
  std::vector<StructureConstant> sc;
  for (std::size_t a = 1; a < total; ++a) {
    const auto ea = exponents(a);
    for (std::size_t b = 1; b < total; ++b) {
      const auto eb = exponents(b);
      std::size_t target = 0;
      std::size_t place = 1;
      bool zero = false;
      for (std::size_t i = 0; i < k; ++i) {
        const unsigned long s = ea[i] + eb[i];
        if (s >= p) {
          zero = true;
          break;
        }
        target += s * place;
        place *= p;
      }
      if (!zero) {
        sc.push_back({a - 1, b - 1, target - 1, Scalar(1)});
      }
    }
  }
  return Ring(dom, total - 1, std::move(names), std::move(sc));
}

GradedRing grassmann_star(std::size_t k, const CoeffDomain& domain) {
  if (k < 1 || k > 16) {
    throw Error("Grassmann ring needs 1 <= k <= 16");
  }
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1U << k); ++m) {
    masks.push_back(m);
  }
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    const int pa = __builtin_popcount(a);
    const int pb = __builtin_popcount(b);
    if (pa != pb) {
      return pa < pb;
    }
    // Lexicographic on the sorted generator lists.
    for (unsigned bit = 0; bit < 32; ++bit) {
      const bool ia = (a >> bit) & 1U;
      const bool ib = (b >> bit) & 1U;
      if (ia != ib) {
        return ia;
      }
    }
    return false;
  });
  std::map<unsigned, std::size_t> index;
  std::vector<std::string> names;
  std::vector<MonoidElement> degrees;
  for (unsigned m : masks) {
    index[m] = names.size();
    std::string name;
    for (unsigned bit = 0; bit < k; ++bit) {
      if ((m >> bit) & 1U) {
        name += (name.empty() ? "e" : "^e") + std::to_string(bit + 1);
      }
    }
    names.push_back(name);
    degrees.emplace_back(static_cast<unsigned long>(__builtin_popcount(m) % 2));
  }
  std::vector<StructureConstant> sc;
  for (unsigned a : masks) {
    for (unsigned b : masks) {
      if (a & b) {
        continue;
      }
      // Sign of merging: count pairs (i in a, j in b) with i > j.
      unsigned inversions = 0;
      for (unsigned i = 0; i < k; ++i) {
        if ((a >> i) & 1U) {
          inversions += __builtin_popcount(b & ((1U << i) - 1));
        }
      }
      sc.push_back({index[a], index[b], index[a | b], Scalar(inversions % 2 ? -1 : 1)});
    }
  }
  const std::size_t rank = names.size();
  Ring r(domain, rank, std::move(names), std::move(sc));
  return GradedRing(std::move(r), Monoid::cyclic(2), std::move(degrees));
}

Ring two_z_2k(unsigned k) {
  if (k < 2) {
    throw Error("2Z_{2^k} model needs k >= 2");
  }
  const CoeffDomain dom = CoeffDomain::zmod(mpz_class(1) << (k - 1));
  return Ring(dom, 1, {"b"}, {{0, 0, 0, Scalar(2)}});
}

GradedRing truncated_poly_positive(std::size_t N, const CoeffDomain& domain) {
  if (N < 2) {
    throw Error("truncated polynomial ring needs N >= 2");
  }
  std::vector<std::string> names;
  std::vector<MonoidElement> degrees;
  for (std::size_t i = 1; i < N; ++i) {
    names.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    degrees.emplace_back(static_cast<unsigned long>(i));
  }
  std::vector<StructureConstant> sc;
  for (std::size_t i = 1; i < N; ++i) {
    for (std::size_t j = 1; i + j < N; ++j) {
      sc.push_back({i - 1, j - 1, i + j - 1, Scalar(1)});
    }
  }
  Ring r(domain, N - 1, std::move(names), std::move(sc));
  return GradedRing(std::move(r), Monoid::integers(), std::move(degrees));
}

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries{
      {"sut", true, "strictly upper triangular matrices with the Z-grading j - i; R_0 = 0 and nd = n"},
      {"nagata", true,
       "finite truncation in k variables; the union over all k is nil of bounded index but not nilpotent"},
      {"grassmann", true, "exterior algebra without unit, Z_2-graded by parity; the even part is commutative and nil"},
      {"two-z", true, "commutative nil ring 2Z/2^kZ as a rank-1 structure-constant model"},
      {"poly", true,
       "truncation x D[x]/(x^N); the full ring of polynomials without constant term has infinite support "
       "and no power of it vanishes"},
      {"golod", false,
       "Golod-Shafarevich algebras are infinite dimensional nil algebras that are not nilpotent; no finite "
       "structure-constant model exists"},
      {"nagata-union", false,
       "the union of the truncated rings over all k is infinite dimensional; only the truncations are built"},
      {"polynomial-full", false, "the full polynomial ring has infinite rank; use 'poly' with a truncation degree"},
  };
  return entries;
}

std::optional<Entry> lookup(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) {
      return e;
    }
  }
  return std::nullopt;
}

}  // namespace gradnil::zoo
