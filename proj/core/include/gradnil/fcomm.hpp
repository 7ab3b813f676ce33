#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gradnil/grading.hpp"
#include "gradnil/nil.hpp"

namespace gradnil {

/// Finite semigroup on ids 0..size-1; no identity required.
class SemigroupTable {
 public:
  using Table = std::vector<std::vector<std::uint32_t>>;

  /// Throws ValidationError on a non-closed or non-associative table.
  static SemigroupTable from_table(Table table);

  std::size_t size() const noexcept { return table_.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_.at(a).at(b); }
  const Table& table() const noexcept { return table_; }

  bool operator==(const SemigroupTable&) const = default;

 private:
  Table table_;
};

/// A semigroup element: a scalar for scalar actions, a table id for linear
/// actions. Products of n actions (the diagonal lift) carry n parts.
struct Actor {
  using Part = std::variant<Scalar, std::uint32_t>;
  std::vector<Part> parts;

  static Actor scalar(Scalar s) { return Actor{{Part(std::move(s))}}; }
  static Actor id(std::uint32_t i) { return Actor{{Part(i)}}; }
  std::string to_string() const;
  bool operator==(const Actor&) const = default;
};

/// Semigroup action on a ring satisfying (l g).x = l.(g.x) and l.(xy) = (l.x)y.
class Action {
 public:
  enum class Kind { Scalar, Linear, Diagonal };

  /// The multiplicative monoid of the coefficient domain acting by scalars.
  static Action scalar(const Ring& r);
  /// Table semigroup acting through matrices; matrices[l][k][i] is the
  /// b_k-coordinate of l.b_i.
  static Action linear(const Ring& r, SemigroupTable s, std::vector<std::vector<Vector>> matrices);
  /// base acting blockwise on the n diagonal blocks of a ring of rank n*base.rank().
  static Action diagonal(const Action& base, const Ring& target, std::size_t n);

  Kind kind() const noexcept { return kind_; }
  const Ring& ring() const noexcept { return ring_; }
  const std::optional<SemigroupTable>& semigroup() const noexcept { return semigroup_; }
  const std::vector<std::vector<Vector>>& matrices() const noexcept { return matrices_; }

  Element act(const Actor& l, const Element& x) const;
  Actor compose(const Actor& l, const Actor& g) const;
  /// Actors used for law validation: all table ids, or a fixed scalar
  /// sample (all residues when the domain has at most 64 elements).
  std::vector<Actor> sample_actors() const;

  /// Checks both laws on basis vectors and sample actors; throws
  /// ValidationError("action law", ...) naming the failing triple.
  void validate() const;

 private:
  Kind kind_ = Kind::Scalar;
  Ring ring_;
  std::optional<SemigroupTable> semigroup_;
  std::vector<std::vector<Vector>> matrices_;
  std::shared_ptr<const Action> base_;
  std::size_t blocks_ = 1;

  explicit Action(Ring r) : ring_(std::move(r)) {}
};

enum class CommutatorVariant { Standard, Weak };

/// The map f: R x R -> S.
class FMap {
 public:
  enum class Kind { Constant, Table, Pointwise, DiagonalLift };

  static FMap constant(Actor value);
  /// Explicit values at listed pairs, with an optional fallback.
  static FMap table(std::vector<std::pair<std::pair<Vector, Vector>, Actor>> entries, std::optional<Actor> fallback);
  /// Solves ab = l.(ba) pointwise over `candidates`, first match wins.
  static FMap pointwise(std::vector<Scalar> candidates);
  /// Componentwise lift of a map on r to the diagonal blocks of M_n(r).
  static FMap diagonal_lift(const FMap& base, const Action& base_action, const Ring& base_ring, std::size_t n);

  Kind kind() const noexcept { return kind_; }
  CommutatorVariant variant() const noexcept { return variant_; }
  FMap with_variant(CommutatorVariant v) const;
  /// The same actor at every pair (so the f-commutator is bilinear).
  bool is_constant() const;
  const std::optional<Actor>& constant_value() const noexcept { return constant_; }
  const std::vector<std::pair<std::pair<Vector, Vector>, Actor>>& entries() const noexcept { return entries_; }
  const std::vector<Scalar>& candidates() const noexcept { return candidates_; }

  /// nullopt where f is undefined.
  std::optional<Actor> at(const Element& a, const Element& b, const Action& act) const;
  std::string describe() const;

 private:
  Kind kind_ = Kind::Constant;
  CommutatorVariant variant_ = CommutatorVariant::Standard;
  std::optional<Actor> constant_;
  std::vector<std::pair<std::pair<Vector, Vector>, Actor>> entries_;
  std::vector<Scalar> candidates_;
  std::shared_ptr<const FMap> base_;
  std::shared_ptr<const Action> base_action_;
  std::optional<Ring> base_ring_;
  std::size_t blocks_ = 1;
};

/// ab - f(a,b).(ba), or ab - (f(a,b).b)a for the weak variant. Throws if f
/// is undefined at (a, b).
Element f_commutator(const Element& a, const Element& b, const FMap& f, const Action& act);

struct FCommVerdict {
  VerdictStatus status = VerdictStatus::Capped;
  std::optional<std::pair<Element, Element>> witness;
  /// bilinear (basis pairs suffice), exhaustive or sampled.
  std::string method;
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> seed;
};

FCommVerdict check_f_commutative(const Ring& r, const FMap& f, const Action& act, const Caps& caps);

struct FSearchResult {
  std::optional<FMap> map;
  FCommVerdict verdict;
  /// A pair (a, b) with no scalar l satisfying ab = l.ba.
  std::optional<std::pair<Element, Element>> witness;
};

/// Scalar witness search: a uniform constant if one fits every basis pair,
/// otherwise a pointwise rule checked on element pairs.
FSearchResult scalar_f_search(const Ring& r, const Caps& caps);

struct RewriteVerdict {
  VerdictStatus status = VerdictStatus::Capped;
  std::uint64_t tuples = 0;
  bool exhaustive = false;
  std::optional<std::uint64_t> seed;
  /// (x, m1, y, m2, z, m3, t) and the identity that failed.
  std::optional<std::vector<Element>> counterexample;
  std::string failed_identity;
};

/// Both rewriting chains of x m1 y m2 z m3 t, with every intermediate line.
RewriteVerdict rewrite_identity_check(const Ring& r, const FMap& f, const Action& act, const Caps& caps);

struct DiagonalLift {
  GradedRing elementary;
  Ring neutral;
  Action action;
  FMap map;
  FCommVerdict verdict;
};

DiagonalLift lift_f_to_diagonal(const FMap& f, const Action& act, const Ring& r, std::size_t n, const Caps& caps);

/// A map f together with the action it is read through.
struct FContext {
  FMap f;
  Action act;
};

/// Default scalar candidates: every residue for small finite domains,
/// {0, +-1, +-2, +-3, +-1/2} otherwise; 1 and -1 come first.
std::vector<Scalar> default_scalar_candidates(const CoeffDomain& dom);

}  // namespace gradnil
