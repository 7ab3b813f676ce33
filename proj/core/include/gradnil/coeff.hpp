#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "gradnil/error.hpp"

namespace gradnil {

/// Exact coefficient. Residue-ring values are kept as integers in [0, m).
using Scalar = mpq_class;

enum class CoeffKind { ZMod, Fp, Rat };

/// Z/mZ, F_p or Q.
class CoeffDomain {
 public:
  static CoeffDomain zmod(const mpz_class& m);
  /// Throws if p is not prime.
  static CoeffDomain prime_field(const mpz_class& p);
  static CoeffDomain rationals();
  /// Accepts "Z<m>", "F<p>" and "Q".
  static CoeffDomain parse(std::string_view text);

  CoeffKind kind() const noexcept { return kind_; }
  const mpz_class& modulus() const noexcept { return modulus_; }
  bool is_finite() const noexcept { return kind_ != CoeffKind::Rat; }
  bool is_field() const noexcept { return kind_ != CoeffKind::ZMod; }
  /// m for Z/mZ, p for F_p and 0 for Q.
  const mpz_class& characteristic() const noexcept { return modulus_; }
  /// True when 2 is invertible, i.e. the additive group has no 2-torsion.
  bool two_is_unit() const;
  std::optional<mpz_class> cardinality() const;
  std::string name() const;

  Scalar reduce(const Scalar& x) const;
  Scalar from_int(long v) const { return reduce(Scalar(v)); }
  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_unit(const Scalar& a) const;
  std::optional<Scalar> inverse(const Scalar& a) const;

  /// Integers, negative integers and "p/q" fractions; residues are reduced.
  Scalar parse_scalar(std::string_view text) const;
  std::string format(const Scalar& a) const;

  bool operator==(const CoeffDomain& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }

 private:
  CoeffDomain(CoeffKind kind, mpz_class modulus) : kind_(kind), modulus_(std::move(modulus)) {}

  CoeffKind kind_;
  mpz_class modulus_;
};

}  // namespace gradnil
