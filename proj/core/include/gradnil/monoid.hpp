#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradnil/error.hpp"

namespace gradnil {

/// Table monoids use dense ids 0..size-1; the integer monoid uses the
/// integers themselves. The identity is 0 in both cases.
using MonoidElement = mpz_class;

/// Order of a monoid element. `std::nullopt` stands for infinite order.
using ElementOrder = std::optional<std::uint64_t>;

enum class MonoidKind { Table, IntAdd };

class Monoid {
 public:
  using Table = std::vector<std::vector<std::uint32_t>>;

  /// Validates the table: square, closed, id 0 is a two-sided identity,
  /// associative (checked exhaustively).
  static Monoid from_table(Table table);
  static Monoid cyclic(std::uint32_t n);
  static Monoid trivial() { return cyclic(1); }
  static Monoid integers();

  MonoidKind kind() const noexcept { return kind_; }
  bool is_table() const noexcept { return kind_ == MonoidKind::Table; }

  /// Number of elements of a table monoid.
  std::size_t size() const;
  const Table& table() const { return table_; }

  MonoidElement identity() const { return 0; }
  bool contains(const MonoidElement& g) const;
  MonoidElement mul(const MonoidElement& g, const MonoidElement& h) const;
  MonoidElement pow(const MonoidElement& g, std::uint64_t n) const;

  /// Table fast path; ids are not range checked.
  std::uint32_t mul_id(std::uint32_t g, std::uint32_t h) const noexcept {
    return table_[g][h];
  }
  std::uint32_t id_of(const MonoidElement& g) const;

  /// All elements of a table monoid, in id order.
  std::vector<MonoidElement> elements() const;
  std::string describe() const;

  bool operator==(const Monoid&) const = default;

 private:
  MonoidKind kind_ = MonoidKind::IntAdd;
  Table table_;
};

struct Cancellativity {
  bool left = false;
  bool right = false;
};

/// Left: every row of the table is injective. Right: every column is.
Cancellativity check_cancellative(const Monoid& m);

/// Smallest n >= 1 with g^n = e, or nullopt if the identity never recurs.
ElementOrder element_order(const Monoid& m, const MonoidElement& g);

/// min{o(g), d} with infinite order treated as +infinity.
std::uint64_t order_capped(const ElementOrder& order, std::uint64_t d);

/// A multiplication-compatible partition of a table monoid. Classes are
/// stored sorted and ordered by their least member, so the class of the
/// identity is always class 0.
class Congruence {
 public:
  /// Throws ValidationError naming (g, h, k, t) with g~h, k~t but gk !~ ht.
  Congruence(const Monoid& m, std::vector<std::vector<std::uint32_t>> classes);

  static Congruence from_labels(const Monoid& m, const std::vector<std::uint32_t>& labels);
  static Congruence universal(const Monoid& m);
  static Congruence discrete(const Monoid& m);

  const Monoid& monoid() const noexcept { return monoid_; }
  const std::vector<std::vector<std::uint32_t>>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::uint32_t class_of(std::uint32_t g) const { return class_of_.at(g); }

 private:
  Monoid monoid_;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<std::uint32_t> class_of_;
};

/// Table monoid on the congruence classes with [g][h] = [gh].
Monoid quotient(const Monoid& m, const Congruence& c);

}  // namespace gradnil
