#pragma once

#include <optional>
#include <vector>

#include "gradnil/coeff.hpp"

namespace gradnil {

using Vector = std::vector<Scalar>;

/// A submodule of D^n in canonical row form: reduced row echelon form over
/// F_p and Q, Howell form over Z/mZ. Two submodules are equal iff their
/// canonical rows are equal.
class Submodule {
 public:
  static Submodule span(const CoeffDomain& domain, std::size_t dim, const std::vector<Vector>& gens);
  static Submodule zero(const CoeffDomain& domain, std::size_t dim);
  static Submodule full(const CoeffDomain& domain, std::size_t dim);

  const CoeffDomain& domain() const noexcept { return domain_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  /// Column of the leading entry of each canonical row.
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return rows_.empty(); }

  /// Remainder of v after reduction by the canonical rows; zero iff v is a member.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Submodule& other) const;

  /// Number of elements for finite domains.
  std::optional<mpz_class> cardinality() const;

  bool operator==(const Submodule& other) const {
    return domain_ == other.domain_ && dim_ == other.dim_ && rows_ == other.rows_;
  }

 private:
  Submodule(CoeffDomain domain, std::size_t dim) : domain_(std::move(domain)), dim_(dim) {}

  void build_field(std::vector<Vector> gens);
  void build_howell(const std::vector<Vector>& gens);

  CoeffDomain domain_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gradnil
