#include "gradnil/nil.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gradnil/kernel.hpp"
#include "gradnil/symbolic.hpp"

namespace gradnil {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Proved:
      return "PROVED";
    case VerdictStatus::Refuted:
      return "REFUTED";
    case VerdictStatus::Capped:
      return "CAPPED";
    case VerdictStatus::SampledOk:
      return "SAMPLED_OK";
  }
  return "?";
}

namespace {

std::vector<std::size_t> all_basis(const Ring& r) {
  std::vector<std::size_t> b(r.rank());
  std::iota(b.begin(), b.end(), 0);
  return b;
}

// Length bound on a strictly descending chain of submodules; a nilpotent
// element's powers vanish within it.
std::uint64_t nil_exponent_bound(const Ring& r) {
  if (r.domain().is_field()) {
    return r.rank() + 1;
  }
  return r.rank() * mpz_sizeinbase(r.domain().modulus().get_mpz_t(), 2) + 1;
}

Scalar random_scalar(const CoeffDomain& dom, std::mt19937_64& rng) {
  if (!dom.is_finite()) {
    std::uniform_int_distribution<long> dist(-3, 3);
    return Scalar(dist(rng));
  }
  mpz_class x = 0;
  const std::size_t words = mpz_sizeinbase(dom.modulus().get_mpz_t(), 2) / 64 + 2;
  for (std::size_t i = 0; i < words; ++i) {
    x <<= 64;
    x += mpz_class(static_cast<unsigned long>(rng()));
  }
  return dom.reduce(Scalar(x));
}

Element random_element(const Ring& r, const std::vector<std::size_t>& basis, std::mt19937_64& rng) {
  Vector v(r.rank(), Scalar(0));
  for (std::size_t i : basis) {
    v[i] = random_scalar(r.domain(), rng);
  }
  return r.element(std::move(v));
}

NilVerdict proved(std::uint64_t index, std::string method, std::uint64_t checked = 0) {
  NilVerdict v;
  v.status = VerdictStatus::Proved;
  v.index = index;
  v.method = std::move(method);
  v.checked = checked;
  return v;
}

NilVerdict refuted(Element witness, std::string method) {
  NilVerdict v;
  v.status = VerdictStatus::Refuted;
  v.witness = std::move(witness);
  v.method = std::move(method);
  return v;
}

NilVerdict capped(std::string method) {
  NilVerdict v;
  v.status = VerdictStatus::Capped;
  v.method = std::move(method);
  return v;
}

// Brent cycle detection on a, a^2, ... for finite domains without a kernel.
NilVerdict walk_powers_generic(const Element& a, std::uint64_t cap) {
  if (a.is_zero()) {
    return proved(1, "cycle");
  }
  Element tortoise = a;
  Element hare = a * a;
  std::uint64_t n = 2;
  std::uint64_t power = 1;
  std::uint64_t lam = 1;
  for (;;) {
    if (hare.is_zero()) {
      return proved(n, "cycle");
    }
    if (hare == tortoise) {
      return refuted(a, "cycle");
    }
    if (n >= cap) {
      return capped("cycle");
    }
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = hare * a;
    ++lam;
    ++n;
  }
}

NilVerdict from_walk(const ResidueKernel::PowerWalk& w, const Element& a) {
  switch (w.kind) {
    case ResidueKernel::PowerWalk::Kind::Zero:
      return proved(w.index, "cycle");
    case ResidueKernel::PowerWalk::Kind::Cycle:
      return refuted(a, "cycle");
    case ResidueKernel::PowerWalk::Kind::Capped:
      break;
  }
  return capped("cycle");
}

std::optional<Element> find_nonvanishing_power(const Ring& r, const std::vector<std::size_t>& basis,
                                               std::uint64_t exponent, std::uint64_t seed) {
  for (std::size_t i : basis) {
    Element b = r.basis(i);
    if (!b.pow(exponent).is_zero()) {
      return b;
    }
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Vector v(r.rank(), Scalar(0));
    std::uniform_int_distribution<long> dist(-static_cast<long>(exponent) - 3, static_cast<long>(exponent) + 3);
    for (std::size_t i : basis) {
      v[i] = r.domain().reduce(Scalar(dist(rng)));
    }
    Element a = r.element(std::move(v));
    if (!a.pow(exponent).is_zero()) {
      return a;
    }
  }
  return std::nullopt;
}

}  // namespace

NilVerdict element_nil_index(const Element& a, std::uint64_t cap) {
  const Ring& r = a.ring();
  if (r.domain().is_finite()) {
    if (auto k = ResidueKernel::build(r)) {
      return from_walk(k->nil_index(k->from_element(a), cap), a);
    }
    return walk_powers_generic(a, cap);
  }
  const std::uint64_t bound = nil_exponent_bound(r);
  Element p = a;
  for (std::uint64_t n = 1;; ++n) {
    if (p.is_zero()) {
      return proved(n, "powers");
    }
    if (n >= bound) {
      // A nilpotent element of an algebra of dimension rank satisfies a^(rank+1) = 0.
      return refuted(a, "field-bound");
    }
    if (n >= cap) {
      return capped("powers");
    }
    p = p * a;
  }
}

SymbolicPower symbolic_nil_index(const Ring& r, const std::vector<std::size_t>& basis, std::uint64_t max_exponent,
                                 const Caps& caps) {
  SymbolicPower out;
  const GenericPolynomial g = GenericPolynomial::generic_element(r, basis);
  GenericPolynomial p = g;
  for (std::uint64_t t = 1; t <= max_exponent; ++t) {
    if (p.is_zero()) {
      out.vanishing_exponent = t;
      return out;
    }
    if (t == max_exponent) {
      out.monomial = p.first_term_string();
      return out;
    }
    auto next = p.multiply(g, caps.symbolic_terms);
    if (!next) {
      out.term_cap_hit = true;
      return out;
    }
    p = std::move(*next);
  }
  return out;
}

NilVerdict nil_index_on(const Ring& r, const std::vector<std::size_t>& basis, const Caps& caps) {
  if (basis.empty()) {
    return proved(1, "exhaustive", 1);
  }
  if (auto kernel = ResidueKernel::build(r)) {
    const auto count = kernel->count(basis.size());
    if (count && *count <= caps.elements) {
      std::uint64_t best = 1;
      ResidueKernel::Vec v;
      for (std::uint64_t idx = 0; idx < *count; ++idx) {
        kernel->from_index(idx, basis, v);
        const auto walk = kernel->nil_index(v, caps.powers);
        if (walk.kind != ResidueKernel::PowerWalk::Kind::Zero) {
          NilVerdict out = from_walk(walk, kernel->to_element(r, v));
          out.method = "exhaustive";
          out.checked = idx + 1;
          return out;
        }
        best = std::max(best, walk.index);
      }
      return proved(best, "exhaustive", *count);
    }
  }

  const SymbolicPower sp = symbolic_nil_index(r, basis, nil_exponent_bound(r), caps);
  if (sp.vanishing_exponent) {
    return proved(*sp.vanishing_exponent, "symbolic");
  }
  if (!sp.term_cap_hit && !r.domain().is_finite()) {
    // Over Q a nonzero polynomial identity has a nonzero rational value.
    NilVerdict out;
    out.status = VerdictStatus::Refuted;
    out.method = "symbolic";
    out.monomial = sp.monomial.value_or("");
    out.seed = caps.seed;
    out.witness = find_nonvanishing_power(r, basis, nil_exponent_bound(r), caps.seed);
    return out;
  }

  std::mt19937_64 rng(caps.seed);
  NilVerdict out;
  out.status = VerdictStatus::SampledOk;
  out.method = "sampled";
  out.seed = caps.seed;
  std::uint64_t best = 1;
  const std::uint64_t total = basis.size() + caps.samples;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Element a = i < basis.size() ? r.basis(basis[i]) : random_element(r, basis, rng);
    NilVerdict v = element_nil_index(a, caps.powers);
    out.checked = i + 1;
    if (v.status == VerdictStatus::Refuted) {
      v.method = "sampled";
      v.seed = caps.seed;
      v.checked = i + 1;
      return v;
    }
    if (v.status == VerdictStatus::Capped) {
      out.status = VerdictStatus::Capped;
      continue;
    }
    best = std::max(best, v.index.value_or(1));
  }
  out.index = best;
  return out;
}

NilVerdict ring_is_nil(const Ring& r, const Caps& caps) { return nil_index_on(r, all_basis(r), caps); }

NilVerdict nil_bounded_index(const Ring& r, NilMode mode, const Caps& caps, std::optional<std::uint64_t> s) {
  const auto basis = all_basis(r);
  if (mode == NilMode::Enum) {
    auto kernel = ResidueKernel::build(r);
    const auto count = kernel ? kernel->count(r.rank()) : std::nullopt;
    if (!kernel || !count || *count > caps.elements) {
      return capped("exhaustive");
    }
    return nil_index_on(r, basis, caps);
  }
  if (!s) {
    throw Error("symbolic bounded-index check needs a candidate exponent");
  }
  const SymbolicPower sp = symbolic_nil_index(r, basis, *s, caps);
  if (sp.vanishing_exponent) {
    return proved(*sp.vanishing_exponent, "symbolic");
  }
  NilVerdict out = capped("symbolic");
  out.monomial = sp.monomial.value_or("");
  if (!sp.term_cap_hit && !r.domain().is_finite()) {
    out.status = VerdictStatus::Refuted;
    out.seed = caps.seed;
    out.witness = find_nonvanishing_power(r, basis, *s, caps.seed);
  }
  return out;
}

NilVerdict nilpotency_index(const Ring& r, const Caps& caps) {
  const PowerChain chain = power_chain(r, caps.powers);
  switch (chain.end) {
    case PowerChain::End::ReachedZero:
      return proved(chain.terms.size(), "power-chain");
    case PowerChain::End::Stabilized:
      // R^k = R^(k+1) != 0; any nonzero element of R^k is a witness.
      return refuted(r.element(chain.terms.back().rows().front()), "power-chain");
    case PowerChain::End::CapReached:
      break;
  }
  return capped("power-chain");
}

DegreeVerdicts s_nil_check(const GradedRing& gr, const Caps& caps) {
  DegreeVerdicts out;
  for (const auto& g : gr.support()) {
    out.emplace(g, nil_index_on(gr.ring(), gr.basis_of_degree(g), caps));
  }
  return out;
}

namespace {

// (a_1 ... a_k)^s == 0
bool tuple_power_vanishes(const std::vector<Element>& tuple, std::uint64_t s) {
  Element prod = tuple.front();
  for (std::size_t i = 1; i < tuple.size() && !prod.is_zero(); ++i) {
    prod = prod * tuple[i];
  }
  return prod.is_zero() || prod.pow(s).is_zero();
}

bool kernel_tuple_vanishes(const ResidueKernel& k, const std::vector<ResidueKernel::Vec>& tuple, std::uint64_t s,
                           ResidueKernel::Vec& prod, ResidueKernel::Vec& scratch) {
  prod = tuple.front();
  for (std::size_t i = 1; i < tuple.size() && !ResidueKernel::is_zero(prod); ++i) {
    k.mul(prod, tuple[i], scratch);
    std::swap(prod, scratch);
  }
  ResidueKernel::Vec base = prod;
  for (std::uint64_t e = 1; e < s && !ResidueKernel::is_zero(prod); ++e) {
    k.mul(prod, base, scratch);
    std::swap(prod, scratch);
  }
  return ResidueKernel::is_zero(prod);
}

}  // namespace

ComponentPowerReport component_power_check(const GradedRing& gr, const Caps& caps) {
  ComponentPowerReport rep;
  const Ring& r = gr.ring();
  const auto neutral = gr.neutral_basis();
  if (neutral.empty()) {
    rep.reason = "neutral component is zero";
    return rep;
  }
  const NilVerdict ve = nil_index_on(r, neutral, caps);
  if (ve.status != VerdictStatus::Proved) {
    rep.reason = "neutral component not proved nil of bounded index (" + to_string(ve.status) + ")";
    return rep;
  }
  rep.applicable = true;
  rep.s = *ve.index;
  const std::uint64_t d = gr.support_size();
  for (const auto& g : gr.support()) {
    const std::uint64_t kg = order_capped(element_order(gr.monoid(), g), d);
    rep.k_g[g] = kg;
    mpz_lcm_ui(rep.k.get_mpz_t(), rep.k.get_mpz_t(), kg);
  }

  auto kernel = ResidueKernel::build(r);
  std::mt19937_64 rng(caps.seed);
  bool sampled = false;
  for (const auto& [g, kg] : rep.k_g) {
    const auto basis = gr.basis_of_degree(g);
    std::optional<std::uint64_t> tuples;
    std::optional<std::uint64_t> per_slot;
    if (kernel) {
      per_slot = kernel->count(basis.size());
      if (per_slot) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), *per_slot, kg);
        if (t <= caps.tuples) {
          tuples = t.get_ui();
        }
      }
    }
    if (tuples) {
      std::vector<ResidueKernel::Vec> tuple(kg);
      ResidueKernel::Vec prod, scratch;
      for (std::uint64_t n = 0; n < *tuples; ++n) {
        std::uint64_t rest = n;
        for (std::size_t i = 0; i < kg; ++i) {
          kernel->from_index(rest % *per_slot, basis, tuple[i]);
          rest /= *per_slot;
        }
        ++rep.tuples_checked;
        if (!kernel_tuple_vanishes(*kernel, tuple, rep.s, prod, scratch)) {
          std::vector<Element> witness;
          for (const auto& v : tuple) {
            witness.push_back(kernel->to_element(r, v));
          }
          rep.counterexample = std::move(witness);
          rep.status = VerdictStatus::Refuted;
          return rep;
        }
      }
    } else {
      sampled = true;
      rep.exhaustive = false;
      rep.seed = caps.seed;
      for (std::uint64_t n = 0; n < caps.samples; ++n) {
        std::vector<Element> tuple;
        for (std::size_t i = 0; i < kg; ++i) {
          tuple.push_back(random_element(r, basis, rng));
        }
        ++rep.tuples_checked;
        if (!tuple_power_vanishes(tuple, rep.s)) {
          rep.counterexample = std::move(tuple);
          rep.status = VerdictStatus::Refuted;
          return rep;
        }
      }
    }
  }

  bool all_proved = true;
  for (const auto& g : gr.support()) {
    NilVerdict v = nil_index_on(r, gr.basis_of_degree(g), caps);
    if (v.status == VerdictStatus::Refuted || (v.status == VerdictStatus::Proved && rep.k * rep.s < *v.index)) {
      rep.status = VerdictStatus::Refuted;
      rep.components.emplace(g, std::move(v));
      return rep;
    }
    all_proved = all_proved && v.status == VerdictStatus::Proved;
    rep.components.emplace(g, std::move(v));
  }
  if (all_proved && !sampled) {
    rep.status = VerdictStatus::Proved;
  } else {
    rep.status = VerdictStatus::SampledOk;
  }
  return rep;
}

}  // namespace gradnil
