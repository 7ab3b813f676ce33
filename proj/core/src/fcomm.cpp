#include "gradnil/fcomm.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace gradnil {

namespace {

std::string part_string(const Actor::Part& p) {
  if (const auto* s = std::get_if<Scalar>(&p)) {
    return s->get_str();
  }
  return "#" + std::to_string(std::get<std::uint32_t>(p));
}

const Scalar& scalar_part(const Actor& a) {
  if (a.parts.size() != 1 || !std::holds_alternative<Scalar>(a.parts[0])) {
    throw Error("scalar action applied to non-scalar actor " + a.to_string());
  }
  return std::get<Scalar>(a.parts[0]);
}

std::uint32_t id_part(const Actor& a) {
  if (a.parts.size() != 1 || !std::holds_alternative<std::uint32_t>(a.parts[0])) {
    throw Error("linear action applied to non-table actor " + a.to_string());
  }
  return std::get<std::uint32_t>(a.parts[0]);
}

Element block_of(const Element& x, const Ring& base, std::size_t i) {
  const std::size_t k = base.rank();
  Vector v(x.coords().begin() + static_cast<std::ptrdiff_t>(i * k),
           x.coords().begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
  return base.element(std::move(v));
}

std::optional<std::uint64_t> element_count(const Ring& r) {
  if (!r.domain().is_finite() || !r.domain().modulus().fits_ulong_p()) {
    return std::nullopt;
  }
  mpz_class t;
  mpz_pow_ui(t.get_mpz_t(), r.domain().modulus().get_mpz_t(), r.rank());
  if (!t.fits_ulong_p()) {
    return std::nullopt;
  }
  return t.get_ui();
}

Element element_at(const Ring& r, std::uint64_t idx) {
  const std::uint64_t m = r.domain().modulus().get_ui();
  Vector v(r.rank());
  for (auto& x : v) {
    x = Scalar(static_cast<unsigned long>(idx % m));
    idx /= m;
  }
  return r.element(std::move(v));
}

Element random_element(const Ring& r, std::mt19937_64& rng) {
  Vector v(r.rank());
  if (r.domain().is_finite()) {
    const mpz_class& m = r.domain().modulus();
    for (auto& x : v) {
      mpz_class z = mpz_class(static_cast<unsigned long>(rng())) << 64;
      z += mpz_class(static_cast<unsigned long>(rng()));
      x = Scalar(mpz_class(z % m));
    }
  } else {
    std::uniform_int_distribution<long> dist(-3, 3);
    for (auto& x : v) {
      x = Scalar(dist(rng));
    }
  }
  return r.element(std::move(v));
}

std::uint64_t pow_capped(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > limit / base) {
      return limit + 1;
    }
    out *= base;
  }
  return out;
}

}  // namespace

SemigroupTable SemigroupTable::from_table(Table table) {
  const std::size_t n = table.size();
  if (n == 0) {
    throw ValidationError("semigroup is nonempty", "size 0");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw ValidationError("square multiplication table", "row " + std::to_string(a));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw ValidationError("closure", "entry (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw ValidationError("associativity", "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                                     std::to_string(c) + ")");
        }
      }
    }
  }
  SemigroupTable s;
  s.table_ = std::move(table);
  return s;
}

std::string Actor::to_string() const {
  if (parts.size() == 1) {
    return part_string(parts[0]);
  }
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? ", " : "") + part_string(parts[i]);
  }
  return out + ")";
}

Action Action::scalar(const Ring& r) {
  Action a(r);
  a.kind_ = Kind::Scalar;
  return a;
}

Action Action::linear(const Ring& r, SemigroupTable s, std::vector<std::vector<Vector>> matrices) {
  if (matrices.size() != s.size()) {
    throw Error("linear action needs one matrix per semigroup element");
  }
  for (auto& m : matrices) {
    if (m.size() != r.rank() || std::any_of(m.begin(), m.end(), [&](const Vector& row) { return row.size() != r.rank(); })) {
      throw Error("action matrices must be rank x rank");
    }
    for (auto& row : m) {
      for (auto& x : row) {
        x = r.domain().reduce(x);
      }
    }
  }
  Action a(r);
  a.kind_ = Kind::Linear;
  a.semigroup_ = std::move(s);
  a.matrices_ = std::move(matrices);
  return a;
}

Action Action::diagonal(const Action& base, const Ring& target, std::size_t n) {
  if (target.rank() != n * base.ring().rank()) {
    throw Error("diagonal action: target rank is not n * base rank");
  }
  Action a(target);
  a.kind_ = Kind::Diagonal;
  a.base_ = std::make_shared<const Action>(base);
  a.blocks_ = n;
  return a;
}

Element Action::act(const Actor& l, const Element& x) const {
  switch (kind_) {
    case Kind::Scalar:
      return x.scaled(scalar_part(l));
    case Kind::Linear: {
      const auto& m = matrices_.at(id_part(l));
      Vector v(ring_.rank(), Scalar(0));
      for (std::size_t i = 0; i < ring_.rank(); ++i) {
        if (sgn(x[i]) == 0) {
          continue;
        }
        for (std::size_t k = 0; k < ring_.rank(); ++k) {
          v[k] += m[k][i] * x[i];
        }
      }
      return ring_.element(std::move(v));
    }
    case Kind::Diagonal: {
      if (l.parts.size() != blocks_) {
        throw Error("diagonal actor needs " + std::to_string(blocks_) + " parts");
      }
      const Ring& base = base_->ring();
      Vector v;
      v.reserve(ring_.rank());
      for (std::size_t i = 0; i < blocks_; ++i) {
        const Element part = base_->act(Actor{{l.parts[i]}}, block_of(x, base, i));
        v.insert(v.end(), part.coords().begin(), part.coords().end());
      }
      return ring_.element(std::move(v));
    }
  }
  throw InternalError("unknown action kind");
}

Actor Action::compose(const Actor& l, const Actor& g) const {
  switch (kind_) {
    case Kind::Scalar:
      return Actor::scalar(ring_.domain().mul(scalar_part(l), scalar_part(g)));
    case Kind::Linear:
      return Actor::id(semigroup_->mul(id_part(l), id_part(g)));
    case Kind::Diagonal: {
      Actor out;
      for (std::size_t i = 0; i < blocks_; ++i) {
        out.parts.push_back(base_->compose(Actor{{l.parts.at(i)}}, Actor{{g.parts.at(i)}}).parts[0]);
      }
      return out;
    }
  }
  throw InternalError("unknown action kind");
}

std::vector<Actor> Action::sample_actors() const {
  std::vector<Actor> out;
  switch (kind_) {
    case Kind::Scalar: {
      const auto card = ring_.domain().cardinality();
      if (card && *card <= 64) {
        for (unsigned long s = 0; s < card->get_ui(); ++s) {
          out.push_back(Actor::scalar(Scalar(s)));
        }
      } else {
        for (long s : {0L, 1L, -1L, 2L, 3L}) {
          out.push_back(Actor::scalar(ring_.domain().from_int(s)));
        }
        if (!ring_.domain().is_finite()) {
          out.push_back(Actor::scalar(Scalar(1, 2)));
        }
      }
      break;
    }
    case Kind::Linear:
      for (std::uint32_t i = 0; i < semigroup_->size(); ++i) {
        out.push_back(Actor::id(i));
      }
      break;
    case Kind::Diagonal: {
      const auto base = base_->sample_actors();
      out.push_back(Actor{});
      for (std::size_t i = 0; i < blocks_; ++i) {
        std::vector<Actor> next;
        for (const auto& prefix : out) {
          for (const auto& b : base) {
            Actor a = prefix;
            a.parts.push_back(b.parts[0]);
            next.push_back(std::move(a));
          }
        }
        out = std::move(next);
      }
      break;
    }
  }
  return out;
}

void Action::validate() const {
  const auto actors = sample_actors();
  for (std::size_t li = 0; li < actors.size(); ++li) {
    for (std::size_t gi = 0; gi < actors.size(); ++gi) {
      const Actor lg = compose(actors[li], actors[gi]);
      for (std::size_t x = 0; x < ring_.rank(); ++x) {
        const Element bx = ring_.basis(x);
        if (!(act(lg, bx) == act(actors[li], act(actors[gi], bx)))) {
          throw ValidationError("action law (lg).x = l.(g.x)", "(l, g, x) = (" + actors[li].to_string() + ", " +
                                                                   actors[gi].to_string() + ", " +
                                                                   ring_.name(x) + ")");
        }
      }
    }
  }
  for (const auto& l : actors) {
    for (std::size_t x = 0; x < ring_.rank(); ++x) {
      for (std::size_t y = 0; y < ring_.rank(); ++y) {
        const Element bx = ring_.basis(x);
        const Element by = ring_.basis(y);
        if (!(act(l, bx * by) == act(l, bx) * by)) {
          throw ValidationError("action law l.(xy) = (l.x)y", "(l, x, y) = (" + l.to_string() + ", " +
                                                                  ring_.name(x) + ", " + ring_.name(y) + ")");
        }
      }
    }
  }
}

FMap FMap::constant(Actor value) {
  FMap f;
  f.kind_ = Kind::Constant;
  f.constant_ = std::move(value);
  return f;
}

FMap FMap::table(std::vector<std::pair<std::pair<Vector, Vector>, Actor>> entries, std::optional<Actor> fallback) {
  FMap f;
  f.kind_ = Kind::Table;
  f.entries_ = std::move(entries);
  f.constant_ = std::move(fallback);
  return f;
}

FMap FMap::pointwise(std::vector<Scalar> candidates) {
  FMap f;
  f.kind_ = Kind::Pointwise;
  f.candidates_ = std::move(candidates);
  return f;
}

FMap FMap::diagonal_lift(const FMap& base, const Action& base_action, const Ring& base_ring, std::size_t n) {
  FMap f;
  f.kind_ = Kind::DiagonalLift;
  f.variant_ = base.variant_;
  f.base_ = std::make_shared<const FMap>(base);
  f.base_action_ = std::make_shared<const Action>(base_action);
  f.base_ring_ = base_ring;
  f.blocks_ = n;
  if (base.is_constant()) {
    Actor lifted;
    for (std::size_t i = 0; i < n; ++i) {
      lifted.parts.push_back(base.constant_->parts.at(0));
    }
    f.constant_ = std::move(lifted);
  }
  return f;
}

FMap FMap::with_variant(CommutatorVariant v) const {
  FMap f = *this;
  f.variant_ = v;
  return f;
}

bool FMap::is_constant() const {
  switch (kind_) {
    case Kind::Constant:
      return true;
    case Kind::Table:
      return entries_.empty() && constant_.has_value();
    case Kind::Pointwise:
      return false;
    case Kind::DiagonalLift:
      return base_->is_constant();
  }
  return false;
}

std::optional<Actor> FMap::at(const Element& a, const Element& b, const Action& act) const {
  switch (kind_) {
    case Kind::Constant:
      return constant_;
    case Kind::Table:
      for (const auto& [key, value] : entries_) {
        if (key.first == a.coords() && key.second == b.coords()) {
          return value;
        }
      }
      return constant_;
    case Kind::Pointwise: {
      const Element ab = a * b;
      for (const auto& l : candidates_) {
        const Actor actor = Actor::scalar(l);
        const Element rhs = variant_ == CommutatorVariant::Weak ? act.act(actor, b) * a : act.act(actor, b * a);
        if (rhs == ab) {
          return actor;
        }
      }
      return std::nullopt;
    }
    case Kind::DiagonalLift: {
      if (constant_) {
        return constant_;
      }
      Actor out;
      for (std::size_t i = 0; i < blocks_; ++i) {
        auto part = base_->at(block_of(a, *base_ring_, i), block_of(b, *base_ring_, i), *base_action_);
        if (!part) {
          return std::nullopt;
        }
        out.parts.push_back(part->parts.at(0));
      }
      return out;
    }
  }
  return std::nullopt;
}

std::string FMap::describe() const {
  std::string v = variant_ == CommutatorVariant::Weak ? " (weak)" : "";
  switch (kind_) {
    case Kind::Constant:
      return "constant " + constant_->to_string() + v;
    case Kind::Table:
      return "table of " + std::to_string(entries_.size()) + " pairs" +
             (constant_ ? ", default " + constant_->to_string() : "") + v;
    case Kind::Pointwise: {
      std::string s = "pointwise over {";
      for (std::size_t i = 0; i < candidates_.size(); ++i) {
        s += (i ? ", " : "") + candidates_[i].get_str();
      }
      return s + "}" + v;
    }
    case Kind::DiagonalLift:
      return "diagonal lift of " + base_->describe();
  }
  return "?";
}

Element f_commutator(const Element& a, const Element& b, const FMap& f, const Action& act) {
  const auto l = f.at(a, b, act);
  if (!l) {
    throw Error("f is undefined at (" + a.to_string() + ", " + b.to_string() + ")");
  }
  if (f.variant() == CommutatorVariant::Weak) {
    return a * b - act.act(*l, b) * a;
  }
  return a * b - act.act(*l, b * a);
}

namespace {

// False when f is undefined or the commutator is nonzero.
bool commutes(const Element& a, const Element& b, const FMap& f, const Action& act) {
  if (!f.at(a, b, act)) {
    return false;
  }
  return f_commutator(a, b, f, act).is_zero();
}

}  // namespace

FCommVerdict check_f_commutative(const Ring& r, const FMap& f, const Action& act, const Caps& caps) {
  FCommVerdict v;
  for (std::size_t i = 0; i < r.rank(); ++i) {
    for (std::size_t j = 0; j < r.rank(); ++j) {
      ++v.checked;
      if (!commutes(r.basis(i), r.basis(j), f, act)) {
        v.status = VerdictStatus::Refuted;
        v.witness = std::make_pair(r.basis(i), r.basis(j));
        v.method = "basis pairs";
        return v;
      }
    }
  }
  if (f.is_constant() || r.rank() == 0) {
    // A constant f gives a bilinear commutator, so basis pairs decide it.
    v.status = VerdictStatus::Proved;
    v.method = "bilinear";
    return v;
  }
  const auto count = element_count(r);
  if (count && pow_capped(*count, 2, caps.tuples) <= caps.tuples) {
    v.method = "exhaustive";
    for (std::uint64_t x = 0; x < *count; ++x) {
      const Element a = element_at(r, x);
      for (std::uint64_t y = 0; y < *count; ++y) {
        const Element b = element_at(r, y);
        ++v.checked;
        if (!commutes(a, b, f, act)) {
          v.status = VerdictStatus::Refuted;
          v.witness = std::make_pair(a, b);
          return v;
        }
      }
    }
    v.status = VerdictStatus::Proved;
    return v;
  }
  v.method = "sampled";
  v.seed = caps.seed;
  std::mt19937_64 rng(caps.seed);
  for (std::uint64_t n = 0; n < caps.samples; ++n) {
    const Element a = random_element(r, rng);
    const Element b = random_element(r, rng);
    ++v.checked;
    if (!commutes(a, b, f, act)) {
      v.status = VerdictStatus::Refuted;
      v.witness = std::make_pair(a, b);
      return v;
    }
  }
  v.status = VerdictStatus::SampledOk;
  return v;
}

std::vector<Scalar> default_scalar_candidates(const CoeffDomain& dom) {
  std::vector<Scalar> out{dom.from_int(1), dom.from_int(-1)};
  const auto card = dom.cardinality();
  if (card && *card <= 4096) {
    for (unsigned long s = 0; s < card->get_ui(); ++s) {
      out.emplace_back(s);
    }
  } else {
    for (long s : {0L, 2L, -2L, 3L, -3L}) {
      out.push_back(dom.from_int(s));
    }
    if (!dom.is_finite()) {
      out.emplace_back(1, 2);
      out.emplace_back(-1, 2);
    }
  }
  std::vector<Scalar> unique;
  for (const auto& s : out) {
    if (std::find(unique.begin(), unique.end(), s) == unique.end()) {
      unique.push_back(s);
    }
  }
  return unique;
}

FSearchResult scalar_f_search(const Ring& r, const Caps& caps) {
  FSearchResult res;
  const Action act = Action::scalar(r);
  const auto candidates = default_scalar_candidates(r.domain());
  std::vector<Scalar> uniform = candidates;
  for (std::size_t i = 0; i < r.rank() && !uniform.empty(); ++i) {
    for (std::size_t j = 0; j < r.rank(); ++j) {
      const Element ab = r.basis(i) * r.basis(j);
      const Element ba = r.basis(j) * r.basis(i);
      std::vector<Scalar> keep;
      for (const auto& l : uniform) {
        if (ba.scaled(l) == ab) {
          keep.push_back(l);
        }
      }
      uniform = std::move(keep);
    }
  }
  if (!uniform.empty()) {
    FMap f = FMap::constant(Actor::scalar(uniform.front()));
    res.verdict = check_f_commutative(r, f, act, caps);
    res.map = std::move(f);
    return res;
  }
  FMap f = FMap::pointwise(candidates);
  res.verdict = check_f_commutative(r, f, act, caps);
  if (res.verdict.status == VerdictStatus::Refuted) {
    res.witness = res.verdict.witness;
    return res;
  }
  res.map = std::move(f);
  return res;
}

namespace {

// Empty when all lines agree, else the name of the first failing line.
std::string rewrite_mismatch(const std::vector<Element>& t, const FMap& f, const Action& act) {
  const Element &x = t[0], &m1 = t[1], &y = t[2], &m2 = t[3], &z = t[4], &m3 = t[5], &tt = t[6];
  auto f_at = [&](const Element& a, const Element& b) {
    auto l = f.at(a, b, act);
    if (!l) {
      throw Error("f is undefined at (" + a.to_string() + ", " + b.to_string() + ")");
    }
    return *l;
  };
  const Element lhs = x * m1 * y * m2 * z * m3 * tt;
  const Element xy = x * y;
  const Element xyz = xy * z;
  const Element u1 = act.act(f_at(x, m1), m1);
  const Element u2 = act.act(f_at(xy, m2), m2);
  const Element u3 = act.act(f_at(xyz, m3), m3);
  if (!(u1 * x * y * m2 * z * m3 * tt == lhs)) {
    return "first chain, line 1";
  }
  if (!(u1 * u2 * xyz * m3 * tt == lhs)) {
    return "first chain, line 2";
  }
  if (!(u1 * u2 * u3 * xyz * tt == lhs)) {
    return "first chain, line 3";
  }
  const Element v1 = act.act(f_at(m1, y), y);
  const Element m12 = m1 * m2;
  const Element v2 = act.act(f_at(m12, z), z);
  if (!(x * v1 * m1 * m2 * z * m3 * tt == lhs)) {
    return "second chain, line 1";
  }
  if (!(x * v1 * v2 * m12 * m3 * tt == lhs)) {
    return "second chain, line 2";
  }
  return {};
}

}  // namespace

RewriteVerdict rewrite_identity_check(const Ring& r, const FMap& f, const Action& act, const Caps& caps) {
  RewriteVerdict v;
  auto check = [&](std::vector<Element> tuple) {
    ++v.tuples;
    std::string bad = rewrite_mismatch(tuple, f, act);
    if (!bad.empty()) {
      v.status = VerdictStatus::Refuted;
      v.failed_identity = std::move(bad);
      v.counterexample = std::move(tuple);
      return false;
    }
    return true;
  };
  const auto count = element_count(r);
  if (count && pow_capped(*count, 7, caps.tuples) <= caps.tuples) {
    v.exhaustive = true;
    const std::uint64_t total = pow_capped(*count, 7, caps.tuples);
    std::vector<Element> elems;
    for (std::uint64_t i = 0; i < *count; ++i) {
      elems.push_back(element_at(r, i));
    }
    for (std::uint64_t n = 0; n < total; ++n) {
      std::vector<Element> tuple;
      std::uint64_t rest = n;
      for (int k = 0; k < 7; ++k) {
        tuple.push_back(elems[rest % *count]);
        rest /= *count;
      }
      if (!check(std::move(tuple))) {
        return v;
      }
    }
    v.status = VerdictStatus::Proved;
    return v;
  }
  v.seed = caps.seed;
  std::mt19937_64 rng(caps.seed);
  for (std::uint64_t n = 0; n < caps.samples; ++n) {
    std::vector<Element> tuple;
    for (int k = 0; k < 7; ++k) {
      tuple.push_back(random_element(r, rng));
    }
    if (!check(std::move(tuple))) {
      return v;
    }
  }
  v.status = VerdictStatus::SampledOk;
  return v;
}

DiagonalLift lift_f_to_diagonal(const FMap& f, const Action& act, const Ring& r, std::size_t n, const Caps& caps) {
  GradedRing el = elementary_grading(r, n);
  Ring neutral = el.neutral_ring();
  Action lifted = Action::diagonal(act, neutral, n);
  lifted.validate();
  FMap map = FMap::diagonal_lift(f, act, r, n);
  FCommVerdict verdict = check_f_commutative(neutral, map, lifted, caps);
  return DiagonalLift{std::move(el), std::move(neutral), std::move(lifted), std::move(map), std::move(verdict)};
}

}  // namespace gradnil
