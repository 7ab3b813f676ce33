#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gradnil/ring.hpp"

namespace gradnil {

/// Machine-integer copy of a ring over Z/mZ or F_p with m < 2^31, used by
/// the exhaustive enumerators. Coordinates are kept in [0, m).
class ResidueKernel {
 public:
  using Vec = std::vector<std::int64_t>;

  static std::optional<ResidueKernel> build(const Ring& r);

  std::size_t rank() const noexcept { return rank_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  void mul(const Vec& a, const Vec& b, Vec& out) const;
  void add(const Vec& a, const Vec& b, Vec& out) const;
  static bool is_zero(const Vec& a);

  /// m^|coords|, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> count(std::size_t coords) const;
  /// Base-m digits of `index` written into the listed coordinates; others are zero.
  void from_index(std::uint64_t index, const std::vector<std::size_t>& coords, Vec& out) const;

  Vec from_element(const Element& a) const;
  Element to_element(const Ring& r, const Vec& a) const;

  struct PowerWalk {
    enum class Kind { Zero, Cycle, Capped };
    Kind kind = Kind::Capped;
    /// Smallest n with a^n = 0 when kind == Zero.
    std::uint64_t index = 0;
  };
  /// Walks a, a^2, ... with Brent cycle detection.
  PowerWalk nil_index(const Vec& a, std::uint64_t cap) const;

 private:
  struct Entry {
    std::uint32_t target;
    std::int64_t coeff;
  };

  std::size_t rank_ = 0;
  std::int64_t modulus_ = 0;
  std::vector<std::vector<Entry>> table_;
};

}  // namespace gradnil
