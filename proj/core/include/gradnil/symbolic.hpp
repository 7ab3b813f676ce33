#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradnil/ring.hpp"

namespace gradnil {

/// Ring element whose coordinates are polynomials in commuting
/// indeterminates l_1..l_v, stored as monomial -> coefficient vector.
class GenericPolynomial {
 public:
  using Exponent = std::vector<std::uint8_t>;

  /// l_1 b_{basis[0]} + ... + l_v b_{basis[v-1]}.
  static GenericPolynomial generic_element(const Ring& r, const std::vector<std::size_t>& basis);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t variables() const noexcept { return vars_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<Exponent, Vector>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// nullopt once the product would exceed term_cap monomials.
  std::optional<GenericPolynomial> multiply(const GenericPolynomial& o, std::size_t term_cap) const;

  /// Value at l_i = point[i].
  Vector evaluate(const std::vector<Scalar>& point) const;
  /// Lexicographically first monomial with a nonzero coefficient vector,
  /// rendered like "l1^2*l3 -> (0, 2, 0)".
  std::string first_term_string() const;

 private:
  GenericPolynomial(Ring ring, std::size_t vars) : ring_(std::move(ring)), vars_(vars) {}

  Ring ring_;
  std::size_t vars_;
  std::map<Exponent, Vector> terms_;
};

}  // namespace gradnil
