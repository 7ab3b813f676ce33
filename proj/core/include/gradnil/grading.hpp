#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gradnil/monoid.hpp"
#include "gradnil/ring.hpp"

namespace gradnil {

struct MpzLess {
  bool operator()(const mpz_class& a, const mpz_class& b) const { return cmp(a, b) < 0; }
};

/// A ring graded by a left-cancellative monoid, with every basis vector
/// homogeneous.
class GradedRing {
 public:
  /// Throws ValidationError for a monoid that is not left cancellative
  /// ("left cancellativity", "(g, h, t)") or a broken grading axiom
  /// ("grading axiom", "(i, j, k)").
  GradedRing(Ring ring, Monoid monoid, std::vector<MonoidElement> degrees);

  const Ring& ring() const noexcept { return ring_; }
  const Monoid& monoid() const noexcept { return monoid_; }
  const std::vector<MonoidElement>& degrees() const noexcept { return degrees_; }
  const MonoidElement& degree(std::size_t i) const { return degrees_.at(i); }

  /// Sorted degrees of nonzero components.
  const std::vector<MonoidElement>& support() const noexcept { return support_; }
  std::size_t support_size() const noexcept { return support_.size(); }
  bool in_support(const MonoidElement& g) const;

  std::vector<std::size_t> basis_of_degree(const MonoidElement& g) const;
  Submodule component(const MonoidElement& g) const;
  std::vector<std::size_t> neutral_basis() const { return basis_of_degree(monoid_.identity()); }
  /// R_e as a ring on its own basis (closed since e*e = e).
  Ring neutral_ring() const;

  /// Homogeneous parts of an element, keyed by degree (zero parts omitted).
  std::map<MonoidElement, Element, MpzLess> homogeneous_parts(const Element& a) const;

  bool operator==(const GradedRing& o) const {
    return ring_ == o.ring_ && monoid_ == o.monoid_ && degrees_ == o.degrees_;
  }

 private:
  Ring ring_;
  Monoid monoid_;
  std::vector<MonoidElement> degrees_;
  std::vector<MonoidElement> support_;
};

/// Ring restricted to the listed basis vectors, which must span a subring.
Ring restrict_ring(const Ring& r, const std::vector<std::size_t>& basis);

GradedRing trivial_grading(const Ring& r);

/// Same ring graded by S/~; rejects quotients that are not left cancellative.
GradedRing induced_quotient_grading(const GradedRing& gr, const Congruence& c);

/// M_n(r) graded by deg E_ij(b) = (j - i) mod n over the cyclic table monoid.
GradedRing elementary_grading(const Ring& r, std::size_t n);

}  // namespace gradnil
