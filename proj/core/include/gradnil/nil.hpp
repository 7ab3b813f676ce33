#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradnil/grading.hpp"

namespace gradnil {

enum class VerdictStatus { Proved, Refuted, Capped, SampledOk };

std::string to_string(VerdictStatus s);

struct NilVerdict {
  VerdictStatus status = VerdictStatus::Capped;
  /// Exact index when PROVED; largest index seen when SAMPLED_OK.
  std::optional<std::uint64_t> index;
  std::optional<Element> witness;
  /// Non-vanishing coefficient of a symbolic refutation.
  std::string monomial;
  /// exhaustive, symbolic, sampled, cycle, field-bound, power-chain.
  std::string method;
  std::optional<std::uint64_t> seed;
  std::uint64_t checked = 0;
};

/// Enumeration and sampling limits. Every verdict that depends on one of
/// these is reported as CAPPED or SAMPLED_OK, never PROVED.
struct Caps {
  std::uint64_t elements = 1ULL << 20;
  std::uint64_t tuples = 1'000'000;
  std::uint64_t powers = 4096;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 20240611;
  std::uint64_t symbolic_terms = 200'000;
};

/// Smallest n with a^n = 0.
NilVerdict element_nil_index(const Element& a, std::uint64_t cap);

/// Largest nil index over the span of the given basis vectors (powers
/// taken in r). The span need not be a subring.
NilVerdict nil_index_on(const Ring& r, const std::vector<std::size_t>& basis, const Caps& caps);

NilVerdict ring_is_nil(const Ring& r, const Caps& caps);

enum class NilMode { Enum, Symbolic };

/// ENUM: exhaustive maximum of element nil indices. SYMBOLIC: smallest
/// exponent t <= s with (sum l_i b_i)^t = 0 as a polynomial identity.
NilVerdict nil_bounded_index(const Ring& r, NilMode mode, const Caps& caps, std::optional<std::uint64_t> s = {});

/// Smallest t <= max_exponent making the generic power vanish, restricted to
/// the span of `basis`. nullopt if the term cap was hit or no such t exists.
struct SymbolicPower {
  std::optional<std::uint64_t> vanishing_exponent;
  bool term_cap_hit = false;
  /// Generic power at max_exponent when it does not vanish.
  std::optional<std::string> monomial;
};
SymbolicPower symbolic_nil_index(const Ring& r, const std::vector<std::size_t>& basis, std::uint64_t max_exponent,
                                 const Caps& caps);

/// nd(R) from the power chain: PROVED with index, REFUTED when the chain
/// stabilizes at a nonzero term.
NilVerdict nilpotency_index(const Ring& r, const Caps& caps);

using DegreeVerdicts = std::map<MonoidElement, NilVerdict, MpzLess>;

/// Nil verdict of each homogeneous component in the support.
DegreeVerdicts s_nil_check(const GradedRing& gr, const Caps& caps);

/// Homogeneous-power check: k_g = min{o(g), d}, k = lcm, and
/// (a_1 ... a_{k_g})^s = 0 on tuples from each component.
struct ComponentPowerReport {
  bool applicable = false;
  std::string reason;
  std::uint64_t s = 0;
  std::map<MonoidElement, std::uint64_t, MpzLess> k_g;
  mpz_class k = 1;
  VerdictStatus status = VerdictStatus::Capped;
  std::uint64_t tuples_checked = 0;
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;
  /// A tuple violating the identity; the statement says none exists.
  std::optional<std::vector<Element>> counterexample;
  /// Each component is nil of index at most k*s.
  DegreeVerdicts components;
};

ComponentPowerReport component_power_check(const GradedRing& gr, const Caps& caps);

}  // namespace gradnil
