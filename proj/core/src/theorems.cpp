#include "gradnil/theorems.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "gradnil/kernel.hpp"
#include "gradnil/specfile.hpp"

namespace gradnil {

namespace {

struct Info {
  TheoremId id;
  const char* code;
  const char* anchor;
};

const Info kInfo[] = {
    {TheoremId::NeutralZero, "P3.03", "R_e = 0  =>  R^(d+1) = 0"},
    {TheoremId::ComponentPowers, "P3.31",
     "k_g = min{o(g), d}, k = lcm{k_g}:  (a_1...a_{k_g})^s = 0 on R_g, nd_nil(R_g) <= ks"},
    {TheoremId::NilLifting, "T3.15",
     "R_e nil and f-commutative  =>  R nil,  nd_nil(R) <= 2sd^2 (d^(2d) - 1)/(d - 1)"},
    {TheoremId::NilpotencyRange, "T3.18",
     "r = nd(R_e):  r <= nd(R) <= dr (r > 1),  r <= nd(R) <= d + 1 (r = 1)"},
    {TheoremId::GeneratorBound, "T3.19", "R nil, f-commutative, n generators:  s <= nd(R) <= (s - 1)n + 1"},
    {TheoremId::GradedGeneratorBound, "T3.20",
     "R_e nil, f-commutative, n generators:  s <= nd(R) <= d((s - 1)n + 1);  R_e = 0:  nd(R) <= d + 1"},
    {TheoremId::SquareZeroNeutral, "P3.17", "nd_nil(R_e) = 2, char != 2  =>  (R_e)^3 = 0,  nd(R) <= 3d"},
    {TheoremId::FieldBound, "T3.24",
     "p > s:  nd(R) <= d(2^s - 1);  p = 0:  nd(R) <= dq, q = 2^s - 1 (s <= 4), s^2 (s >= 5);  "
     "nd(R_e) = 1:  nd(R) <= d + 1"},
    {TheoremId::ProductLength, "C3.28", "char not in {2, 3}, s in {2, 3, 4}  =>  a_1 a_2 ... a_{d(2^s - 1)} = 0"},
    {TheoremId::MatrixNil, "T3.26", "R nil and f-commutative  =>  M_2(R) nil"},
    {TheoremId::DiagonalReduction, "T3.29-REDUCTION",
     "(sum E_ii(b_i))^s = sum E_ii(b_i^s);  M_0 nil  <=>  R nil"},
    {TheoremId::QuotientGrading, "C3.04",
     "S/~ grading:  {h ~ e} misses Supp => R^(d+1) = 0;  R_[e] nil f-comm => R nil;  R_[e] nilpotent <=> R nilpotent"},
};

const Info& info(TheoremId id) {
  for (const auto& i : kInfo) {
    if (i.id == id) {
      return i;
    }
  }
  throw InternalError("unknown theorem id");
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

mpz_class Z(std::uint64_t v) { return mpz_class(std::to_string(v)); }

mpz_class pow_z(std::uint64_t base, std::uint64_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

bool is_proved(const NilVerdict& v) { return v.status == VerdictStatus::Proved; }

std::string describe(const NilVerdict& v) {
  std::ostringstream os;
  os << to_string(v.status);
  if (v.index) {
    os << " index " << *v.index;
  }
  os << " (" << v.method;
  if (v.checked) {
    os << ", " << v.checked << " checked";
  }
  if (v.seed) {
    os << ", seed " << *v.seed;
  }
  os << ")";
  if (v.witness) {
    os << " witness " << v.witness->to_string();
  }
  if (!v.monomial.empty()) {
    os << " monomial " << v.monomial;
  }
  return os.str();
}

std::string pair_string(const std::pair<Element, Element>& p) {
  return "a = " + p.first.to_string() + ", b = " + p.second.to_string();
}

struct FResolution {
  VerdictStatus status = VerdictStatus::Capped;
  std::optional<FContext> ctx;
  std::string how;
};

// Restricts a context given on R to the neutral component; nullopt when the
// map or action does not restrict along the basis inclusion.
std::optional<FContext> restrict_context(const FContext& ctx, const std::vector<std::size_t>& basis,
                                         const Ring& sub) {
  const std::size_t rank = ctx.act.ring().rank();
  std::vector<long> slot(rank, -1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    slot[basis[i]] = static_cast<long>(i);
  }
  auto project = [&](const Vector& v) -> std::optional<Vector> {
    if (v.size() != rank) {
      return std::nullopt;
    }
    Vector out(basis.size(), Scalar(0));
    for (std::size_t k = 0; k < rank; ++k) {
      if (sgn(v[k]) == 0) {
        continue;
      }
      if (slot[k] < 0) {
        return std::nullopt;
      }
      out[static_cast<std::size_t>(slot[k])] = v[k];
    }
    return out;
  };

  std::optional<Action> act;
  switch (ctx.act.kind()) {
    case Action::Kind::Scalar:
      act = Action::scalar(sub);
      break;
    case Action::Kind::Linear: {
      std::vector<std::vector<Vector>> mats;
      for (const auto& m : ctx.act.matrices()) {
        std::vector<Vector> rows(basis.size(), Vector(basis.size(), Scalar(0)));
        for (std::size_t k = 0; k < rank; ++k) {
          for (std::size_t i = 0; i < basis.size(); ++i) {
            const Scalar& x = m[k][basis[i]];
            if (sgn(x) == 0) {
              continue;
            }
            if (slot[k] < 0) {
              return std::nullopt;
            }
            rows[static_cast<std::size_t>(slot[k])][i] = x;
          }
        }
        mats.push_back(std::move(rows));
      }
      act = Action::linear(sub, *ctx.act.semigroup(), std::move(mats));
      break;
    }
    case Action::Kind::Diagonal:
      return std::nullopt;
  }

  switch (ctx.f.kind()) {
    case FMap::Kind::Constant:
    case FMap::Kind::Pointwise:
      return FContext{ctx.f, *act};
    case FMap::Kind::Table: {
      std::vector<std::pair<std::pair<Vector, Vector>, Actor>> entries;
      for (const auto& [key, value] : ctx.f.entries()) {
        auto a = project(key.first);
        auto b = project(key.second);
        if (a && b) {
          entries.push_back({{std::move(*a), std::move(*b)}, value});
        }
      }
      return FContext{FMap::table(std::move(entries), ctx.f.constant_value()).with_variant(ctx.f.variant()), *act};
    }
    case FMap::Kind::DiagonalLift:
      return std::nullopt;
  }
  return std::nullopt;
}

FResolution resolve_f(const Ring& x, const std::optional<FContext>& user, const Caps& caps) {
  FResolution out;
  if (user) {
    try {
      user->act.validate();
    } catch (const ValidationError& e) {
      out.status = VerdictStatus::Refuted;
      out.how = std::string("supplied action rejected: ") + e.what();
      return out;
    }
    FCommVerdict v;
    try {
      v = check_f_commutative(x, user->f, user->act, caps);
    } catch (const Error& e) {
      out.status = VerdictStatus::Refuted;
      out.how = std::string("supplied f unusable: ") + e.what();
      return out;
    }
    out.status = v.status;
    out.ctx = *user;
    out.how = "supplied f " + user->f.describe() + ", " + to_string(v.status) + " (" + v.method + ")";
    if (v.witness) {
      out.how += ", fails at " + pair_string(*v.witness);
    }
    return out;
  }
  FSearchResult res = scalar_f_search(x, caps);
  if (!res.map) {
    out.status = VerdictStatus::Refuted;
    out.how = "no scalar f";
    if (res.witness) {
      out.how += ": ab is not a multiple of ba at " + pair_string(*res.witness);
    }
    return out;
  }
  out.status = res.verdict.status;
  out.how = "scalar f " + res.map->describe() + ", " + to_string(res.verdict.status) + " (" + res.verdict.method + ")";
  out.ctx = FContext{std::move(*res.map), Action::scalar(x)};
  return out;
}

// Shared intermediate results; each is computed at most once.
class Analysis {
 public:
  Analysis(const GradedRing& gr, const VerifyOptions& opts) : gr_(gr), opts_(opts) {}

  const GradedRing& gr() const { return gr_; }
  const VerifyOptions& opts() const { return opts_; }
  const Caps& caps() const { return opts_.caps; }
  std::uint64_t d() const { return gr_.support_size(); }

  const NilVerdict& nd() {
    if (!nd_) {
      nd_ = nilpotency_index(gr_.ring(), caps());
    }
    return *nd_;
  }
  const NilVerdict& nil() {
    if (!nil_) {
      nil_ = ring_is_nil(gr_.ring(), caps());
    }
    return *nil_;
  }
  const Ring& neutral() {
    if (!neutral_) {
      neutral_ = gr_.neutral_ring();
    }
    return *neutral_;
  }
  const NilVerdict& neutral_nd() {
    if (!neutral_nd_) {
      neutral_nd_ = nilpotency_index(neutral(), caps());
    }
    return *neutral_nd_;
  }
  const NilVerdict& neutral_nil() {
    if (!neutral_nil_) {
      neutral_nil_ = ring_is_nil(neutral(), caps());
    }
    return *neutral_nil_;
  }
  const FResolution& ring_f() {
    if (!ring_f_) {
      ring_f_ = resolve_f(gr_.ring(), opts_.f, caps());
    }
    return *ring_f_;
  }
  const FResolution& neutral_f() {
    if (!neutral_f_) {
      std::optional<FContext> sub;
      std::string note;
      if (opts_.f) {
        sub = restrict_context(*opts_.f, gr_.neutral_basis(), neutral());
        if (!sub) {
          note = "supplied f does not restrict to R_e; ";
        }
      }
      neutral_f_ = resolve_f(neutral(), sub, caps());
      neutral_f_->how = note + neutral_f_->how;
    }
    return *neutral_f_;
  }
  const GeneratorSearch& ring_generators() {
    if (!ring_gens_) {
      ring_gens_ = min_generators(gr_.ring(), caps().tuples);
    }
    return *ring_gens_;
  }
  const GeneratorSearch& neutral_generators() {
    if (!neutral_gens_) {
      neutral_gens_ = min_generators(neutral(), caps().tuples);
    }
    return *neutral_gens_;
  }

 private:
  const GradedRing& gr_;
  const VerifyOptions& opts_;
  std::optional<NilVerdict> nd_, nil_, neutral_nd_, neutral_nil_;
  std::optional<Ring> neutral_;
  std::optional<FResolution> ring_f_, neutral_f_;
  std::optional<GeneratorSearch> ring_gens_, neutral_gens_;
};

TheoremCheck start(TheoremId id) {
  TheoremCheck c;
  c.id = id;
  c.anchor = info(id).anchor;
  c.applicable = true;
  return c;
}

TheoremCheck not_applicable(TheoremCheck c, std::string reason) {
  c.applicable = false;
  c.status = CheckStatus::NotApplicable;
  c.reason = std::move(reason);
  return c;
}

// A premise that could not be decided within the caps.
TheoremCheck undecided(TheoremCheck c, std::string reason) {
  c.applicable = false;
  c.status = CheckStatus::Capped;
  c.reason = std::move(reason);
  return c;
}

void bound(TheoremCheck& c, std::string name, mpz_class v) { c.bounds.push_back({std::move(name), std::move(v)}); }
void observe(TheoremCheck& c, std::string name, mpz_class v) { c.observed.push_back({std::move(name), std::move(v)}); }

// Compares a verdict on nd(R) or nd_nil(R) with [lo, hi]. A REFUTED verdict
// contradicts the statement, as does an index outside the range.
void judge_index(TheoremCheck& c, const NilVerdict& v, const std::string& name, const mpz_class& lo,
                 const mpz_class& hi) {
  c.notes.push_back(name + ": " + describe(v));
  if (v.seed) {
    c.seed = v.seed;
  }
  switch (v.status) {
    case VerdictStatus::Proved: {
      const mpz_class x = Z(*v.index);
      observe(c, name, x);
      if (x < lo || x > hi) {
        c.status = CheckStatus::Fail;
        c.witnesses.push_back(name + " = " + x.get_str() + " outside [" + lo.get_str() + ", " + hi.get_str() + "]");
      } else {
        c.status = CheckStatus::Pass;
      }
      return;
    }
    case VerdictStatus::Refuted:
      c.status = CheckStatus::Fail;
      c.witnesses.push_back(name + " is infinite: " + describe(v));
      return;
    case VerdictStatus::SampledOk:
    case VerdictStatus::Capped:
      c.status = CheckStatus::Capped;
      if (v.index) {
        observe(c, name + " (sampled lower estimate)", Z(*v.index));
      }
      return;
  }
}

std::uint64_t effective_d(std::uint64_t d, TheoremCheck& c) {
  if (d == 0) {
    c.notes.push_back("empty support; formulas evaluated at d = 1");
    return 1;
  }
  return d;
}

std::uint64_t max_generator_index(const GeneratorSearch& g, const Ring& r, const Caps& caps, bool& ok) {
  std::uint64_t s = 1;
  ok = true;
  for (const auto& v : g.witness) {
    const NilVerdict nv = element_nil_index(r.element(v), caps.powers);
    if (!is_proved(nv)) {
      ok = false;
      return 0;
    }
    s = std::max(s, *nv.index);
  }
  return s;
}

std::string generators_string(const GeneratorSearch& g, const Ring& r) {
  std::string out = "{";
  for (std::size_t i = 0; i < g.witness.size(); ++i) {
    out += (i ? ", " : "") + r.element(g.witness[i]).to_string();
  }
  return out + "}";
}

TheoremCheck check_neutral_zero(Analysis& a) {
  TheoremCheck c = start(TheoremId::NeutralZero);
  if (!a.gr().neutral_basis().empty()) {
    return not_applicable(std::move(c), "R_e != 0");
  }
  const std::uint64_t d = a.d();
  bound(c, "d", Z(d));
  bound(c, "nd(R) upper", Z(d + 1));
  judge_index(c, a.nd(), "nd(R)", 1, Z(d + 1));
  return c;
}

TheoremCheck check_component_powers(Analysis& a) {
  TheoremCheck c = start(TheoremId::ComponentPowers);
  const ComponentPowerReport rep = component_power_check(a.gr(), a.caps());
  if (!rep.applicable) {
    return not_applicable(std::move(c), rep.reason);
  }
  bound(c, "s", Z(rep.s));
  for (const auto& [g, k] : rep.k_g) {
    bound(c, "k_g(" + g.get_str() + ")", Z(k));
  }
  bound(c, "k", rep.k);
  bound(c, "ks", rep.k * Z(rep.s));
  observe(c, "tuples checked", Z(rep.tuples_checked));
  std::uint64_t worst = 1;
  for (const auto& [g, v] : rep.components) {
    c.notes.push_back("R_" + g.get_str() + ": " + describe(v));
    if (v.index) {
      worst = std::max(worst, *v.index);
    }
  }
  observe(c, "max nd_nil(R_g)", Z(worst));
  c.notes.push_back(rep.exhaustive ? "tuples checked exhaustively" : "tuples sampled");
  c.seed = rep.seed;
  switch (rep.status) {
    case VerdictStatus::Proved:
      c.status = CheckStatus::Pass;
      break;
    case VerdictStatus::Refuted:
      c.status = CheckStatus::Fail;
      if (rep.counterexample) {
        std::string t = "tuple (";
        for (std::size_t i = 0; i < rep.counterexample->size(); ++i) {
          t += (i ? ", " : "") + (*rep.counterexample)[i].to_string();
        }
        c.witnesses.push_back(t + ")");
      }
      for (const auto& [g, v] : rep.components) {
        if (v.status == VerdictStatus::Refuted || (v.index && Z(*v.index) > rep.k * Z(rep.s))) {
          c.witnesses.push_back("R_" + g.get_str() + ": " + describe(v));
        }
      }
      break;
    case VerdictStatus::SampledOk:
      c.notes.push_back("no failures in " + std::to_string(rep.tuples_checked) + " sampled tuples");
      c.status = CheckStatus::Capped;
      break;
    case VerdictStatus::Capped:
      c.status = CheckStatus::Capped;
      break;
  }
  return c;
}

// Shared premise of the nil-lifting and generator checks on R_e.
std::optional<TheoremCheck> neutral_nil_fcomm_premise(Analysis& a, TheoremCheck& c) {
  const NilVerdict& en = a.neutral_nil();
  c.notes.push_back("nd_nil(R_e): " + describe(en));
  if (en.status == VerdictStatus::Refuted) {
    return not_applicable(c, "R_e is not nil");
  }
  if (!is_proved(en)) {
    return undecided(c, "nil verdict of R_e is " + to_string(en.status));
  }
  const FResolution& f = a.neutral_f();
  c.notes.push_back("f on R_e: " + f.how);
  if (f.status == VerdictStatus::Refuted) {
    return not_applicable(c, "R_e is not f-commutative (" + f.how + ")");
  }
  if (f.status != VerdictStatus::Proved) {
    return undecided(c, "f-commutativity of R_e is " + to_string(f.status));
  }
  return std::nullopt;
}

TheoremCheck check_nil_lifting(Analysis& a) {
  TheoremCheck c = start(TheoremId::NilLifting);
  if (auto stop = neutral_nil_fcomm_premise(a, c)) {
    return *stop;
  }
  const std::uint64_t s = *a.neutral_nil().index;
  const std::uint64_t d = effective_d(a.d(), c);
  bound(c, "s", Z(s));
  bound(c, "d", Z(d));
  bound(c, "nd_nil(R) upper", nil_lifting_bound(s, d));
  judge_index(c, a.nil(), "nd_nil(R)", 1, nil_lifting_bound(s, d));
  return c;
}

TheoremCheck check_nilpotency_range(Analysis& a) {
  TheoremCheck c = start(TheoremId::NilpotencyRange);
  const NilVerdict& en = a.neutral_nd();
  c.notes.push_back("nd(R_e): " + describe(en));
  if (en.status == VerdictStatus::Refuted) {
    return not_applicable(std::move(c), "R_e is not nilpotent");
  }
  if (!is_proved(en)) {
    return undecided(std::move(c), "nilpotency of R_e is " + to_string(en.status));
  }
  const std::uint64_t r = *en.index;
  const std::uint64_t d = effective_d(a.d(), c);
  const mpz_class hi = r > 1 ? Z(d) * Z(r) : Z(d + 1);
  bound(c, "r", Z(r));
  bound(c, "d", Z(d));
  bound(c, "nd(R) lower", Z(r));
  bound(c, "nd(R) upper", hi);
  judge_index(c, a.nd(), "nd(R)", Z(r), hi);
  return c;
}

TheoremCheck check_generator_bound(Analysis& a) {
  TheoremCheck c = start(TheoremId::GeneratorBound);
  const Ring& r = a.gr().ring();
  const NilVerdict& nv = a.nil();
  c.notes.push_back("nd_nil(R): " + describe(nv));
  if (nv.status == VerdictStatus::Refuted) {
    return not_applicable(std::move(c), "R is not nil");
  }
  if (!is_proved(nv)) {
    return undecided(std::move(c), "nil verdict of R is " + to_string(nv.status));
  }
  const FResolution& f = a.ring_f();
  c.notes.push_back("f on R: " + f.how);
  if (f.status == VerdictStatus::Refuted) {
    return not_applicable(std::move(c), "R is not f-commutative (" + f.how + ")");
  }
  if (f.status != VerdictStatus::Proved) {
    return undecided(std::move(c), "f-commutativity of R is " + to_string(f.status));
  }
  const GeneratorSearch& g = a.ring_generators();
  if (g.status != GeneratorSearch::Status::Exact) {
    c.status = CheckStatus::Capped;
    c.notes.push_back("minimum generator count unknown: between " + std::to_string(g.lower_bound) + " and " +
                      std::to_string(g.count));
    return c;
  }
  bool ok = true;
  const std::uint64_t s = max_generator_index(g, r, a.caps(), ok);
  if (!ok) {
    c.status = CheckStatus::Capped;
    c.notes.push_back("nil index of a generator exceeded the power cap");
    return c;
  }
  const std::uint64_t n = g.count;
  c.notes.push_back("generators " + generators_string(g, r));
  bound(c, "n", Z(n));
  bound(c, "s", Z(s));
  bound(c, "nd(R) lower", Z(s));
  bound(c, "nd(R) upper", Z(s - 1) * Z(n) + 1);
  judge_index(c, a.nd(), "nd(R)", Z(s), Z(s - 1) * Z(n) + 1);
  return c;
}

TheoremCheck check_graded_generator_bound(Analysis& a) {
  TheoremCheck c = start(TheoremId::GradedGeneratorBound);
  if (auto stop = neutral_nil_fcomm_premise(a, c)) {
    return *stop;
  }
  const std::uint64_t d = effective_d(a.d(), c);
  bound(c, "d", Z(d));
  if (a.neutral().is_zero_ring()) {
    c.notes.push_back("R_e = 0");
    bound(c, "nd(R) lower", 1);
    bound(c, "nd(R) upper", Z(d + 1));
    judge_index(c, a.nd(), "nd(R)", 1, Z(d + 1));
    return c;
  }
  const GeneratorSearch& g = a.neutral_generators();
  if (g.status != GeneratorSearch::Status::Exact) {
    c.status = CheckStatus::Capped;
    c.notes.push_back("minimum generator count of R_e unknown: between " + std::to_string(g.lower_bound) + " and " +
                      std::to_string(g.count));
    return c;
  }
  bool ok = true;
  const std::uint64_t s = max_generator_index(g, a.neutral(), a.caps(), ok);
  if (!ok) {
    c.status = CheckStatus::Capped;
    c.notes.push_back("nil index of a generator exceeded the power cap");
    return c;
  }
  const std::uint64_t n = g.count;
  const mpz_class hi = Z(d) * (Z(s - 1) * Z(n) + 1);
  c.notes.push_back("generators of R_e " + generators_string(g, a.neutral()));
  bound(c, "n", Z(n));
  bound(c, "s", Z(s));
  bound(c, "nd(R) lower", Z(s));
  bound(c, "nd(R) upper", hi);
  judge_index(c, a.nd(), "nd(R)", Z(s), hi);
  return c;
}

TheoremCheck check_square_zero_neutral(Analysis& a) {
  TheoremCheck c = start(TheoremId::SquareZeroNeutral);
  const NilVerdict& en = a.neutral_nil();
  c.notes.push_back("nd_nil(R_e): " + describe(en));
  if (!is_proved(en)) {
    return en.status == VerdictStatus::Refuted ? not_applicable(std::move(c), "R_e is not nil")
                                               : undecided(std::move(c), "nil verdict of R_e is " + to_string(en.status));
  }
  if (*en.index != 2) {
    return not_applicable(std::move(c), "nd_nil(R_e) = " + std::to_string(*en.index) + ", not 2");
  }
  if (!a.gr().ring().domain().two_is_unit()) {
    return not_applicable(std::move(c), "characteristic 2 divides the coefficient domain " +
                                             a.gr().ring().domain().name());
  }
  const std::uint64_t d = effective_d(a.d(), c);
  bound(c, "s", 2);
  bound(c, "nd(R_e) upper", 3);
  bound(c, "nd(R) upper", Z(3 * d));
  TheoremCheck cube = c;
  judge_index(cube, a.neutral_nd(), "nd(R_e)", 1, 3);
  judge_index(c, a.nd(), "nd(R)", 1, Z(3 * d));
  c.observed.insert(c.observed.begin(), cube.observed.begin(), cube.observed.end());
  c.notes.insert(c.notes.begin(), cube.notes.back());
  c.witnesses.insert(c.witnesses.begin(), cube.witnesses.begin(), cube.witnesses.end());
  if (cube.status == CheckStatus::Fail || c.status == CheckStatus::Fail) {
    c.status = CheckStatus::Fail;
  } else if (cube.status == CheckStatus::Capped) {
    c.status = CheckStatus::Capped;
  }
  return c;
}

// Field premise shared by the field bound and the product-length check.
std::optional<TheoremCheck> field_premise(Analysis& a, TheoremCheck& c, std::uint64_t& s) {
  const CoeffDomain& dom = a.gr().ring().domain();
  if (!dom.is_field()) {
    return not_applicable(c, "coefficient domain " + dom.name() + " is not a field");
  }
  const NilVerdict& en = a.neutral_nil();
  c.notes.push_back("nd_nil(R_e): " + describe(en));
  if (en.status == VerdictStatus::Refuted) {
    return not_applicable(c, "R_e is not nil");
  }
  if (!is_proved(en)) {
    return undecided(c, "nil verdict of R_e is " + to_string(en.status));
  }
  s = *en.index;
  return std::nullopt;
}

TheoremCheck check_field_bound(Analysis& a) {
  TheoremCheck c = start(TheoremId::FieldBound);
  std::uint64_t s = 0;
  if (auto stop = field_premise(a, c, s)) {
    return *stop;
  }
  const mpz_class p = a.gr().ring().domain().characteristic();
  const std::uint64_t d = effective_d(a.d(), c);
  mpz_class hi;
  if (s == 1) {
    hi = Z(d + 1);
  } else if (auto b = field_nilpotency_bound(s, d, p)) {
    hi = *b;
  } else {
    return not_applicable(std::move(c), "p = " + p.get_str() + " <= s = " + std::to_string(s));
  }
  bound(c, "p", p);
  bound(c, "s", Z(s));
  bound(c, "d", Z(d));
  bound(c, "nd(R) upper", hi);
  // Both bounds are reported when the nil-lifting premise also holds.
  if (s > 1 && a.neutral_f().status == VerdictStatus::Proved) {
    bound(c, "nd_nil(R) upper (nil lifting)", nil_lifting_bound(s, d));
  }
  judge_index(c, a.nd(), "nd(R)", 1, hi);
  return c;
}

Element random_element(const Ring& r, std::mt19937_64& rng) {
  const CoeffDomain& dom = r.domain();
  Vector v(r.rank(), Scalar(0));
  for (auto& x : v) {
    if (dom.is_finite()) {
      mpz_class t = Z(rng());
      t = (t << 64) + Z(rng());
      x = dom.reduce(Scalar(t));
    } else {
      x = Scalar(static_cast<long>(rng() % 7) - 3);
    }
  }
  return r.element(std::move(v));
}

TheoremCheck check_product_length(Analysis& a) {
  TheoremCheck c = start(TheoremId::ProductLength);
  std::uint64_t s = 0;
  if (auto stop = field_premise(a, c, s)) {
    return *stop;
  }
  const mpz_class p = a.gr().ring().domain().characteristic();
  if (p == 2 || p == 3) {
    return not_applicable(std::move(c), "characteristic " + p.get_str() + " is 2 or 3");
  }
  if (s < 2 || s > 4) {
    return not_applicable(std::move(c), "s = " + std::to_string(s) + " is not in {2, 3, 4}");
  }
  const std::uint64_t d = effective_d(a.d(), c);
  const std::uint64_t len = d * ((1ULL << s) - 1);
  bound(c, "s", Z(s));
  bound(c, "d", Z(d));
  bound(c, "product length", Z(len));

  const Ring& r = a.gr().ring();
  const Caps& caps = a.caps();
  std::mt19937_64 rng(caps.seed);
  std::uint64_t checked = 0;
  std::optional<std::vector<Element>> bad;
  if (!r.is_zero_ring()) {
    for (; checked < caps.samples && !bad; ++checked) {
      std::vector<Element> tuple;
      tuple.reserve(len);
      Element prod = random_element(r, rng);
      tuple.push_back(prod);
      for (std::uint64_t i = 1; i < len && !prod.is_zero(); ++i) {
        tuple.push_back(random_element(r, rng));
        prod = prod * tuple.back();
      }
      if (!prod.is_zero()) {
        bad = std::move(tuple);
      }
    }
  }
  c.seed = caps.seed;
  observe(c, "sampled products", Z(checked));
  if (bad) {
    c.status = CheckStatus::Fail;
    std::string t = "nonzero product of (";
    for (std::size_t i = 0; i < bad->size(); ++i) {
      t += (i ? ", " : "") + (*bad)[i].to_string();
    }
    c.witnesses.push_back(t + ")");
    return c;
  }
  // The power chain decides every product of the given length at once.
  judge_index(c, a.nd(), "nd(R)", 1, Z(len));
  if (c.status == CheckStatus::Capped) {
    c.notes.push_back("no failures in " + std::to_string(checked) + " sampled products");
  }
  return c;
}

TheoremCheck check_matrix_nil(Analysis& a) {
  TheoremCheck c = start(TheoremId::MatrixNil);
  // Prefer R itself; fall back to R_e, which is nil and f-commutative
  // whenever the nil-lifting premise holds.
  std::optional<Ring> target;
  std::optional<FContext> ctx;
  std::string which;
  if (is_proved(a.nil()) && a.ring_f().status == VerdictStatus::Proved) {
    target = a.gr().ring();
    ctx = a.ring_f().ctx;
    which = "R";
    c.notes.push_back("f on R: " + a.ring_f().how);
  } else if (!a.neutral().is_zero_ring() && is_proved(a.neutral_nil()) &&
             a.neutral_f().status == VerdictStatus::Proved) {
    target = a.neutral();
    ctx = a.neutral_f().ctx;
    which = "R_e";
    c.notes.push_back("R is not known to be nil and f-commutative; using R_e");
    c.notes.push_back("f on R_e: " + a.neutral_f().how);
  } else {
    const bool undecided_premise = a.nil().status == VerdictStatus::Capped ||
                                   a.nil().status == VerdictStatus::SampledOk ||
                                   a.ring_f().status == VerdictStatus::Capped ||
                                   a.ring_f().status == VerdictStatus::SampledOk;
    std::string why = "neither R nor R_e is proved nil and f-commutative";
    return undecided_premise ? undecided(std::move(c), why) : not_applicable(std::move(c), why);
  }
  c.notes.push_back("target " + which + " of rank " + std::to_string(target->rank()));

  const DiagonalLift lift = lift_f_to_diagonal(ctx->f, ctx->act, *target, 2, a.caps());
  c.notes.push_back("lifted f on M_0: " + to_string(lift.verdict.status) + " (" + lift.verdict.method + ")");
  if (lift.verdict.status == VerdictStatus::Refuted) {
    c.status = CheckStatus::Fail;
    if (lift.verdict.witness) {
      c.witnesses.push_back("lifted f fails on M_0 at " + pair_string(*lift.verdict.witness));
    }
    return c;
  }
  const NilVerdict m0 = ring_is_nil(lift.neutral, a.caps());
  c.notes.push_back("nd_nil(M_0): " + describe(m0));
  if (m0.status == VerdictStatus::Refuted) {
    c.status = CheckStatus::Fail;
    c.witnesses.push_back("M_0 not nil: " + describe(m0));
    return c;
  }
  if (!is_proved(m0)) {
    c.status = CheckStatus::Capped;
    return c;
  }
  const std::uint64_t s = *m0.index;
  const std::uint64_t d = std::max<std::uint64_t>(lift.elementary.support_size(), 1);
  bound(c, "s", Z(s));
  bound(c, "d", Z(d));
  bound(c, "nd_nil(M_2) upper", nil_lifting_bound(s, d));
  const NilVerdict m2 = ring_is_nil(lift.elementary.ring(), a.caps());
  judge_index(c, m2, "nd_nil(M_2)", 1, nil_lifting_bound(s, d));
  if (lift.verdict.status != VerdictStatus::Proved && c.status == CheckStatus::Pass) {
    c.status = CheckStatus::Capped;
  }
  return c;
}

TheoremCheck check_diagonal_reduction(Analysis& a) {
  TheoremCheck c = start(TheoremId::DiagonalReduction);
  constexpr std::size_t n = 2;
  constexpr std::uint64_t max_exp = 5;
  const Ring& r = a.gr().ring();
  const Caps& caps = a.caps();
  const GradedRing m = elementary_grading(r, n);
  const std::size_t rank = r.rank();

  std::vector<std::size_t> diag;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < rank; ++t) {
      diag.push_back(matrix_index(r, n, i, i, t));
    }
  }
  bound(c, "n", Z(n));
  bound(c, "exponents checked", Z(max_exp));

  // Diagonal blocks multiplying like R^n on basis pairs makes M_0 a copy of
  // R^n, so the power identity then holds for every exponent.
  bool structural = true;
  std::optional<std::string> bad;
  for (std::size_t i = 0; i < n && !bad; ++i) {
    for (std::size_t j = 0; j < n && !bad; ++j) {
      for (std::size_t s = 0; s < rank && !bad; ++s) {
        for (std::size_t t = 0; t < rank && !bad; ++t) {
          const Element got = m.ring().basis(matrix_index(r, n, i, i, s)) * m.ring().basis(matrix_index(r, n, j, j, t));
          Vector expect(m.ring().rank(), Scalar(0));
          if (i == j) {
            for (const Term& term : r.product(s, t)) {
              expect[matrix_index(r, n, i, i, term.index)] = term.coeff;
            }
          }
          if (!(got == m.ring().element(expect))) {
            structural = false;
            bad = "E_" + std::to_string(i + 1) + std::to_string(i + 1) + "(" + r.name(s) + ") E_" +
                  std::to_string(j + 1) + std::to_string(j + 1) + "(" + r.name(t) + ") = " + got.to_string();
          }
        }
      }
    }
  }
  if (structural) {
    c.notes.push_back("diagonal blocks multiply componentwise on basis pairs");
  }

  std::uint64_t checked = 0;
  bool exhaustive = false;
  auto kr = ResidueKernel::build(r);
  auto km = ResidueKernel::build(m.ring());
  std::mt19937_64 rng(caps.seed);
  if (bad) {
  } else if (kr && km) {
    const auto count = km->count(diag.size());
    exhaustive = count && *count <= caps.tuples;
    const std::uint64_t total = exhaustive ? *count : caps.samples;
    ResidueKernel::Vec dvec, dpow, tmp;
    std::vector<ResidueKernel::Vec> blocks(n), bpow(n);
    for (std::uint64_t idx = 0; idx < total && !bad; ++idx) {
      if (exhaustive) {
        km->from_index(idx, diag, dvec);
      } else {
        dvec.assign(km->rank(), 0);
        for (std::size_t k : diag) {
          dvec[k] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(km->modulus()));
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        blocks[i].assign(rank, 0);
        for (std::size_t t = 0; t < rank; ++t) {
          blocks[i][t] = dvec[matrix_index(r, n, i, i, t)];
        }
        bpow[i] = blocks[i];
      }
      dpow = dvec;
      for (std::uint64_t e = 1; e <= max_exp && !bad; ++e) {
        if (e > 1) {
          km->mul(dpow, dvec, tmp);
          dpow.swap(tmp);
          for (std::size_t i = 0; i < n; ++i) {
            kr->mul(bpow[i], blocks[i], tmp);
            bpow[i].swap(tmp);
          }
        }
        ResidueKernel::Vec expect(km->rank(), 0);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t t = 0; t < rank; ++t) {
            expect[matrix_index(r, n, i, i, t)] = bpow[i][t];
          }
        }
        if (expect != dpow) {
          bad = "D = " + km->to_element(m.ring(), dvec).to_string() + " at exponent " + std::to_string(e);
        }
      }
      checked = idx + 1;
    }
  } else {
    for (; checked < caps.samples && !bad; ++checked) {
      std::vector<Element> blocks;
      Vector dv(m.ring().rank(), Scalar(0));
      for (std::size_t i = 0; i < n; ++i) {
        blocks.push_back(random_element(r, rng));
        for (std::size_t t = 0; t < rank; ++t) {
          dv[matrix_index(r, n, i, i, t)] = blocks[i][t];
        }
      }
      const Element dm = m.ring().element(dv);
      for (std::uint64_t e = 1; e <= max_exp && !bad; ++e) {
        Vector expect(m.ring().rank(), Scalar(0));
        for (std::size_t i = 0; i < n; ++i) {
          const Element p = blocks[i].pow(e);
          for (std::size_t t = 0; t < rank; ++t) {
            expect[matrix_index(r, n, i, i, t)] = p[t];
          }
        }
        if (!(dm.pow(e) == m.ring().element(expect))) {
          bad = "D = " + dm.to_string() + " at exponent " + std::to_string(e);
        }
      }
    }
  }
  if (!exhaustive) {
    c.seed = caps.seed;
  }
  observe(c, "diagonal matrices checked", Z(checked));
  c.notes.push_back(std::string("diagonal matrices ") + (exhaustive ? "enumerated" : "sampled"));
  exhaustive = exhaustive || structural;
  if (bad) {
    c.status = CheckStatus::Fail;
    c.witnesses.push_back("diagonal power identity fails: " + *bad);
    return c;
  }

  const NilVerdict& vr = a.nil();
  const NilVerdict vm = ring_is_nil(m.neutral_ring(), caps);
  c.notes.push_back("nd_nil(R): " + describe(vr));
  c.notes.push_back("nd_nil(M_0): " + describe(vm));
  if (vm.witness && vm.status == VerdictStatus::Refuted) {
    c.witnesses.push_back("M_0 non-nil diagonal witness " + vm.witness->to_string());
  }
  const bool decided = (is_proved(vr) || vr.status == VerdictStatus::Refuted) &&
                       (is_proved(vm) || vm.status == VerdictStatus::Refuted);
  if (!decided) {
    c.status = CheckStatus::Capped;
    return c;
  }
  if (vr.status != vm.status || (is_proved(vr) && *vr.index != *vm.index)) {
    c.status = CheckStatus::Fail;
    c.witnesses.push_back("nil verdicts disagree: R " + describe(vr) + ", M_0 " + describe(vm));
    return c;
  }
  if (is_proved(vr)) {
    observe(c, "nd_nil(R)", Z(*vr.index));
    observe(c, "nd_nil(M_0)", Z(*vm.index));
  }
  c.status = exhaustive ? CheckStatus::Pass : CheckStatus::Capped;
  if (!exhaustive) {
    c.notes.push_back("no failures in " + std::to_string(checked) + " sampled diagonal matrices");
  }
  return c;
}

TheoremCheck run(TheoremId id, Analysis& a);

TheoremCheck check_quotient(Analysis& a) {
  TheoremCheck c = start(TheoremId::QuotientGrading);
  if (!a.opts().congruence) {
    return not_applicable(std::move(c), "no congruence supplied");
  }
  std::optional<GradedRing> induced;
  try {
    induced = induced_quotient_grading(a.gr(), *a.opts().congruence);
  } catch (const Error& e) {
    return not_applicable(std::move(c), std::string("induced grading rejected: ") + e.what());
  }
  VerifyOptions sub_opts = a.opts();
  sub_opts.congruence.reset();
  Analysis sub(*induced, sub_opts);
  bound(c, "d (quotient)", Z(induced->support_size()));

  bool fail = false;
  bool capped = false;
  for (TheoremId id : {TheoremId::NeutralZero, TheoremId::NilLifting, TheoremId::NilpotencyRange}) {
    const TheoremCheck s = run(id, sub);
    std::string line = code(id) + " on S/~: " + to_string(s.status);
    if (!s.reason.empty()) {
      line += " (" + s.reason + ")";
    }
    c.notes.push_back(line);
    for (const auto& b : s.bounds) {
      bound(c, code(id) + " " + b.name, b.value);
    }
    for (const auto& o : s.observed) {
      observe(c, code(id) + " " + o.name, o.value);
    }
    for (const auto& w : s.witnesses) {
      c.witnesses.push_back(code(id) + ": " + w);
    }
    fail = fail || s.status == CheckStatus::Fail;
    capped = capped || s.status == CheckStatus::Capped;
  }

  const NilVerdict& whole = a.nd();
  const NilVerdict& part = sub.neutral_nd();
  c.notes.push_back("nd(R): " + describe(whole));
  c.notes.push_back("nd(R_[e]): " + describe(part));
  auto decided = [](const NilVerdict& v) { return is_proved(v) || v.status == VerdictStatus::Refuted; };
  if (!decided(whole) || !decided(part)) {
    capped = true;
  } else if (is_proved(whole) != is_proved(part)) {
    fail = true;
    c.witnesses.push_back("R_[e] and R disagree on nilpotency");
  }
  c.status = fail ? CheckStatus::Fail : capped ? CheckStatus::Capped : CheckStatus::Pass;
  return c;
}

TheoremCheck run(TheoremId id, Analysis& a) {
  switch (id) {
    case TheoremId::NeutralZero:
      return check_neutral_zero(a);
    case TheoremId::ComponentPowers:
      return check_component_powers(a);
    case TheoremId::NilLifting:
      return check_nil_lifting(a);
    case TheoremId::NilpotencyRange:
      return check_nilpotency_range(a);
    case TheoremId::GeneratorBound:
      return check_generator_bound(a);
    case TheoremId::GradedGeneratorBound:
      return check_graded_generator_bound(a);
    case TheoremId::SquareZeroNeutral:
      return check_square_zero_neutral(a);
    case TheoremId::FieldBound:
      return check_field_bound(a);
    case TheoremId::ProductLength:
      return check_product_length(a);
    case TheoremId::MatrixNil:
      return check_matrix_nil(a);
    case TheoremId::DiagonalReduction:
      return check_diagonal_reduction(a);
    case TheoremId::QuotientGrading:
      return check_quotient(a);
  }
  throw InternalError("unknown theorem id");
}

std::string bundle(const TheoremCheck& c, const GradedRing& gr, const VerifyOptions& opts) {
  std::ostringstream os;
  os << "check " << code(c.id) << " FAIL\n";
  os << "statement " << c.anchor << "\n";
  for (const auto& b : c.bounds) {
    os << "bound " << b.name << " = " << b.value.get_str() << "\n";
  }
  for (const auto& o : c.observed) {
    os << "observed " << o.name << " = " << o.value.get_str() << "\n";
  }
  for (const auto& w : c.witnesses) {
    os << "witness " << w << "\n";
  }
  for (const auto& n : c.notes) {
    os << "note " << n << "\n";
  }
  const Caps& k = opts.caps;
  os << "caps elements=" << k.elements << " tuples=" << k.tuples << " powers=" << k.powers
     << " samples=" << k.samples << " seed=" << k.seed << "\n";
  SpecDocument doc{gr.ring(), gr.monoid(), gr, opts.f, opts.congruence};
  os << "--- input ---\n" << emit_spec(doc);
  return os.str();
}

TheoremCheck timed(TheoremId id, Analysis& a) {
  const auto t0 = std::chrono::steady_clock::now();
  TheoremCheck c = run(id, a);
  if (a.opts().timings) {
    c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  if (c.status == CheckStatus::Fail) {
    c.bundle = bundle(c, a.gr(), a.opts());
  }
  return c;
}

}  // namespace

std::string code(TheoremId id) { return info(id).code; }

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  const std::string t = upper(text);
  for (const auto& i : kInfo) {
    if (t == i.code) {
      return i.id;
    }
  }
  if (t == "T3.29") {
    return TheoremId::DiagonalReduction;
  }
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& i : kInfo) {
      out.push_back(i.id);
    }
    return out;
  }();
  return ids;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::NotApplicable:
      return "NOT_APPLICABLE";
    case CheckStatus::Capped:
      return "CAPPED";
  }
  return "?";
}

mpz_class nil_lifting_bound(std::uint64_t s, std::uint64_t d) {
  // The geometric-sum form stays defined at d = 1.
  mpz_class sum = 0;
  mpz_class term = 1;
  for (std::uint64_t i = 1; i <= 2 * d; ++i) {
    term *= Z(d);
    sum += term;
  }
  return 2 * Z(s) * Z(d) * sum;
}

std::optional<mpz_class> field_nilpotency_bound(std::uint64_t s, std::uint64_t d, const mpz_class& p) {
  if (p == 0) {
    const mpz_class q = s <= 4 ? mpz_class(pow_z(2, s) - 1) : mpz_class(Z(s) * Z(s));
    return Z(d) * q;
  }
  if (p > Z(s)) {
    return Z(d) * (pow_z(2, s) - 1);
  }
  return std::nullopt;
}

TheoremCheck verify(TheoremId id, const GradedRing& gr, const VerifyOptions& opts) {
  Analysis a(gr, opts);
  return timed(id, a);
}

VerifierReport full_report(const GradedRing& gr, const VerifyOptions& opts) {
  Analysis a(gr, opts);
  VerifierReport rep;
  rep.caps = opts.caps;
  rep.domain = gr.ring().domain().name();
  rep.rank = gr.ring().rank();
  rep.support = gr.support();
  for (TheoremId id : all_theorems()) {
    rep.checks.push_back(timed(id, a));
  }
  rep.nilpotency = a.nd();
  rep.nil = a.nil();
  return rep;
}

}  // namespace gradnil
