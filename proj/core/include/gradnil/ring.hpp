#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradnil/coeff.hpp"
#include "gradnil/submodule.hpp"

namespace gradnil {

/// b_left * b_right contributes coeff * b_target.
struct StructureConstant {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t target = 0;
  Scalar coeff;

  bool operator==(const StructureConstant&) const = default;
};

struct Term {
  std::size_t index;
  Scalar coeff;
};

class Element;

/// Finite-rank associative ring given by structure constants on a free
/// D-module with basis b_0..b_{rank-1}. No unit is assumed. Copies share
/// the same immutable data.
class Ring {
 public:
  /// Duplicate triples are summed, zero coefficients dropped. Throws
  /// ValidationError("associativity", "basis triple (i, j, k)") on failure.
  Ring(CoeffDomain domain, std::size_t rank, std::vector<std::string> names,
       std::vector<StructureConstant> constants);

  /// Ring of the given rank with all products zero.
  static Ring zero_product(CoeffDomain domain, std::size_t rank, std::vector<std::string> names = {});

  const CoeffDomain& domain() const noexcept;
  std::size_t rank() const noexcept;
  const std::vector<std::string>& names() const noexcept;
  const std::string& name(std::size_t i) const;
  /// Sorted by (left, right, target), nonzero coefficients only.
  const std::vector<StructureConstant>& structure_constants() const noexcept;
  /// Sparse expansion of b_i * b_j.
  const std::vector<Term>& product(std::size_t i, std::size_t j) const;

  Element zero() const;
  Element basis(std::size_t i) const;
  Element element(Vector coords) const;

  bool is_zero_ring() const noexcept { return rank() == 0; }
  bool is_zero_product() const noexcept { return structure_constants().empty(); }

  /// Same underlying object (identity, not structural equality).
  bool same(const Ring& other) const noexcept { return impl_ == other.impl_; }
  bool operator==(const Ring& other) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// An element of a Ring with reduced coordinates.
class Element {
 public:
  Element(Ring ring, Vector coords);

  const Ring& ring() const noexcept { return ring_; }
  const Vector& coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element scaled(const Scalar& c) const;
  /// a^n for n >= 1.
  Element pow(std::uint64_t n) const;

  bool operator==(const Element& o) const { return coords_ == o.coords_; }
  std::string to_string() const;

 private:
  void check_same(const Element& o) const;

  Ring ring_;
  Vector coords_;
};

/// Product of two coordinate vectors, without building Elements.
Vector multiply(const Ring& r, const Vector& a, const Vector& b);

/// n x n matrices over r. Basis E_ij(b_t) sits at index (i*n + j)*rank + t.
Ring matrix_ring(const Ring& r, std::size_t n);
std::size_t matrix_index(const Ring& r, std::size_t n, std::size_t i, std::size_t j, std::size_t t);

/// Direct product r^n (used to compare diagonal components).
Ring product_ring(const Ring& r, std::size_t n);

struct PowerChain {
  enum class End { ReachedZero, Stabilized, CapReached };
  /// R^1, R^2, ...; the zero module is included when End::ReachedZero.
  std::vector<Submodule> terms;
  End end = End::CapReached;
};

/// Descending chain R^{k+1} = span{x * b_j}. Throws InternalError if the
/// chain outlives the length bound implied by the module's composition length.
PowerChain power_chain(const Ring& r, std::size_t cap);

/// Products x*y for x, y ranging over the canonical rows of a and b.
Submodule product_span(const Ring& r, const Submodule& a, const Submodule& b);

/// Smallest subring containing gens.
Submodule generated_subring(const Ring& r, const std::vector<Vector>& gens);

struct GeneratorSearch {
  enum class Status { Exact, Unknown };
  Status status = Status::Unknown;
  /// Exact minimum, or the best upper bound found.
  std::size_t count = 0;
  std::vector<Vector> witness;
  std::size_t lower_bound = 0;
};

/// Minimum number of ring generators. The search space is combinations of
/// nonzero elements; it is exhaustive only while the number of candidate
/// sets stays within `cap`.
GeneratorSearch min_generators(const Ring& r, std::uint64_t cap);

}  // namespace gradnil
