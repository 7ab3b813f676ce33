#pragma once

#include <map>
#include <vector>

#include "gradnil/grading.hpp"
#include "gradnil/monoid.hpp"

namespace gradnil {

/// Degrees g_1..g_n of a product of homogeneous elements.
struct DegreeWord {
  DegreeWord(Monoid m, std::vector<MonoidElement> degrees);

  Monoid monoid;
  std::vector<MonoidElement> degrees;

  std::size_t size() const noexcept { return degrees.size(); }
};

/// A sorted set of monoid elements.
using DegreeSet = std::vector<MonoidElement>;

DegreeSet make_degree_set(std::vector<MonoidElement> elems);

/// All contiguous subproducts g_i g_{i+1} ... g_j.
DegreeSet lambda_set(const DegreeWord& w);

enum class ZeroPrediction { ForcedZero, PossiblyNonzero };

/// ForcedZero iff some contiguous subproduct lies outside supp.
ZeroPrediction zero_product_predictor(const DegreeWord& w, const DegreeSet& supp);

/// Cuts s_0 < s_1 < ... < s_r; block j covers letters s_{j-1}+1 .. s_j.
struct Decomposition {
  std::vector<std::size_t> cuts;

  std::size_t blocks() const noexcept { return cuts.empty() ? 0 : cuts.size() - 1; }
  bool operator==(const Decomposition&) const = default;
};

struct DecompositionResult {
  enum class Kind { Found, ForcedZero, None };
  Kind kind = Kind::None;
  Decomposition decomposition;
};

/// Prefix positions (1-based) grouped by prefix degree.
std::map<MonoidElement, std::vector<std::size_t>, MpzLess> prefix_buckets(const DegreeWord& w);

/// Constructive neutral-block decomposition of a word of length r*|supp|.
/// Either reports ForcedZero (a subproduct leaves supp) or returns r
/// consecutive blocks of degree e. Throws Error on a wrong word length,
/// r < 2 or a monoid that is not left cancellative.
DecompositionResult neutral_decomposition(const DegreeWord& w, std::size_t r, const DegreeSet& supp);

/// Brute force over all cut sequences; same contract, used for cross-checks.
DecompositionResult oracle_decomposition(const DegreeWord& w, std::size_t r, const DegreeSet& supp);

/// 1-based indices of blocks with s_i - s_{i-1} <= 2d. Throws InternalError
/// if fewer than floor(r/2)+1 blocks qualify.
std::vector<std::size_t> gap_selection(const Decomposition& dec, std::size_t d);

/// Monoid product of letters from+1 .. to (1-based, inclusive).
MonoidElement block_degree(const DegreeWord& w, std::size_t from, std::size_t to);

}  // namespace gradnil
