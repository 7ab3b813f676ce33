#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradnil/grading.hpp"

namespace gradnil::zoo {

/// Strictly upper triangular n x n matrices, Z-graded by deg E_ij = j - i.
GradedRing sut(std::size_t n, const CoeffDomain& domain);

/// F_p[x_1..x_k]/(x_i^p) without constant term; commutative, nil of index p
/// over char p. Rank p^k - 1, capped at `max_rank`.
Ring truncated_nagata(std::size_t k, unsigned long p, std::size_t max_rank = 4096);

/// Exterior algebra on k generators without unit, Z_2-graded by word-length parity.
GradedRing grassmann_star(std::size_t k, const CoeffDomain& domain);

/// Rank-1 model of the ideal 2Z in Z/2^k Z: basis b over Z/2^(k-1) with b*b = 2b.
Ring two_z_2k(unsigned k);

/// x D[x]/(x^N), Z-graded by degree.
GradedRing truncated_poly_positive(std::size_t N, const CoeffDomain& domain);

struct Entry {
  std::string name;
  bool constructible = true;
  std::string note;
};

/// Every example known to the zoo, including non-constructible ones.
const std::vector<Entry>& catalog();
/// nullopt for unknown names.
std::optional<Entry> lookup(const std::string& name);

}  // namespace gradnil::zoo
