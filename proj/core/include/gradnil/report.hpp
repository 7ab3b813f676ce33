#pragma once

#include <string>
#include <vector>

#include "gradnil/theorems.hpp"

namespace gradnil {

/// Support, components, and nil/nilpotency verdicts of a graded ring.
struct RingAnalysis {
  std::string domain;
  std::size_t rank = 0;
  std::string monoid;
  std::vector<MonoidElement> support;
  /// Rank of each nonzero component, in support order.
  std::vector<std::size_t> component_ranks;
  DegreeVerdicts components;
  NilVerdict neutral_nil;
  NilVerdict nilpotency;
  NilVerdict nil;
  Caps caps;
};

RingAnalysis analyze(const GradedRing& gr, const Caps& caps);

std::string render_text(const RingAnalysis& a);
std::string render_json(const RingAnalysis& a);

std::string render_text(const TheoremCheck& c, const Caps& caps);
std::string render_json(const TheoremCheck& c, const Caps& caps);

std::string render_text(const VerifierReport& r);
std::string render_json(const VerifierReport& r);

}  // namespace gradnil
