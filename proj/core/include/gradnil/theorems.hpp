#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradnil/fcomm.hpp"
#include "gradnil/grading.hpp"
#include "gradnil/nil.hpp"

namespace gradnil {

/// The checks the verifier knows. `code()` gives the external identifier
/// accepted on the command line.
enum class TheoremId {
  NeutralZero,           // R_e = 0 gives R^(d+1) = 0
  ComponentPowers,       // homogeneous powers (a_1...a_{k_g})^s = 0
  NilLifting,            // R_e nil and f-commutative gives R nil, with index bound
  NilpotencyRange,       // r <= nd(R) <= dr
  GeneratorBound,        // s <= nd(R) <= (s-1)n+1 for f-commutative nil R
  GradedGeneratorBound,  // s <= nd(R) <= d((s-1)n+1)
  SquareZeroNeutral,     // nd_nil(R_e) = 2, char != 2 gives nd(R) <= 3d
  FieldBound,            // d(2^s-1) or dq over fields
  ProductLength,         // products of length d(2^s-1) vanish
  MatrixNil,             // M_2(R) nil for nil f-commutative R
  DiagonalReduction,     // diagonal powers and M_0 nil iff R nil
  QuotientGrading,       // the checks above on an induced quotient grading
};

std::string code(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);
const std::vector<TheoremId>& all_theorems();

enum class CheckStatus { Pass, Fail, NotApplicable, Capped };
std::string to_string(CheckStatus s);

struct NamedValue {
  std::string name;
  mpz_class value;
};

struct TheoremCheck {
  TheoremId id = TheoremId::NeutralZero;
  /// The checked statement as a formula.
  std::string anchor;
  bool applicable = false;
  std::string reason;
  std::vector<NamedValue> bounds;
  std::vector<NamedValue> observed;
  CheckStatus status = CheckStatus::NotApplicable;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  std::optional<std::uint64_t> seed;
  std::optional<double> millis;
  /// Everything needed to reproduce a FAIL.
  std::optional<std::string> bundle;
};

struct VerifyOptions {
  Caps caps;
  std::optional<FContext> f;
  std::optional<Congruence> congruence;
  bool timings = false;
};

/// 2 s d (d + d^2 + ... + d^(2d)); equals 2sd^2 (d^(2d)-1)/(d-1) for d >= 2.
mpz_class nil_lifting_bound(std::uint64_t s, std::uint64_t d);
/// d(2^s - 1) for p > s; d*q for p = 0; nullopt when p <= s.
std::optional<mpz_class> field_nilpotency_bound(std::uint64_t s, std::uint64_t d, const mpz_class& p);

TheoremCheck verify(TheoremId id, const GradedRing& gr, const VerifyOptions& opts);

struct VerifierReport {
  std::vector<TheoremCheck> checks;
  Caps caps;
  std::string domain;
  std::size_t rank = 0;
  std::vector<MonoidElement> support;
  NilVerdict nilpotency;
  NilVerdict nil;
};

/// Every check in id order, sharing intermediate results.
VerifierReport full_report(const GradedRing& gr, const VerifyOptions& opts);

}  // namespace gradnil
