#include "gradnil/ring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace gradnil {

struct Ring::Impl {
  CoeffDomain domain;
  std::size_t rank = 0;
  std::vector<std::string> names;
  std::vector<StructureConstant> constants;
  std::vector<std::vector<Term>> table;  // rank*rank entries
};

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "basis triple (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

void add_into(Vector& acc, const std::vector<Term>& terms, const Scalar& factor) {
  for (const auto& t : terms) {
    acc[t.index] += factor * t.coeff;
  }
}

}  // namespace

Ring::Ring(CoeffDomain domain, std::size_t rank, std::vector<std::string> names,
           std::vector<StructureConstant> constants) {
  auto impl = std::make_shared<Impl>(Impl{domain, rank, {}, {}, {}});
  if (names.empty()) {
    for (std::size_t i = 0; i < rank; ++i) {
      names.push_back("b" + std::to_string(i + 1));
    }
  }
  if (names.size() != rank) {
    throw Error("expected " + std::to_string(rank) + " basis names, got " + std::to_string(names.size()));
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || n.find_first_of(" \t\r\n") != std::string::npos) {
      throw Error("basis name '" + n + "' must be a nonempty token");
    }
    if (!seen.insert(n).second) {
      throw Error("duplicate basis name '" + n + "'");
    }
  }
  impl->names = std::move(names);

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> merged;
  for (const auto& c : constants) {
    if (c.left >= rank || c.right >= rank || c.target >= rank) {
      throw Error("structure constant index out of range in (" + std::to_string(c.left) + ", " +
                  std::to_string(c.right) + ", " + std::to_string(c.target) + ")");
    }
    auto& slot = merged[{c.left, c.right, c.target}];
    slot = domain.add(slot, c.coeff);
  }
  impl->table.assign(rank * rank, {});
  for (const auto& [key, coeff] : merged) {
    if (sgn(coeff) == 0) {
      continue;
    }
    const auto [i, j, k] = key;
    impl->constants.push_back({i, j, k, coeff});
    impl->table[i * rank + j].push_back({k, coeff});
  }

  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      const auto& ij = impl->table[i * rank + j];
      for (std::size_t k = 0; k < rank; ++k) {
        Vector lhs(rank, Scalar(0));
        Vector rhs(rank, Scalar(0));
        for (const auto& t : ij) {
          add_into(lhs, impl->table[t.index * rank + k], t.coeff);
        }
        for (const auto& t : impl->table[j * rank + k]) {
          add_into(rhs, impl->table[i * rank + t.index], t.coeff);
        }
        for (std::size_t x = 0; x < rank; ++x) {
          if (domain.reduce(lhs[x]) != domain.reduce(rhs[x])) {
            throw ValidationError("associativity", triple(i, j, k));
          }
        }
      }
    }
  }
  impl_ = std::move(impl);
}

Ring Ring::zero_product(CoeffDomain domain, std::size_t rank, std::vector<std::string> names) {
  return Ring(std::move(domain), rank, std::move(names), {});
}

const CoeffDomain& Ring::domain() const noexcept { return impl_->domain; }
std::size_t Ring::rank() const noexcept { return impl_->rank; }
const std::vector<std::string>& Ring::names() const noexcept { return impl_->names; }
const std::string& Ring::name(std::size_t i) const { return impl_->names.at(i); }
const std::vector<StructureConstant>& Ring::structure_constants() const noexcept { return impl_->constants; }

const std::vector<Term>& Ring::product(std::size_t i, std::size_t j) const {
  return impl_->table[i * impl_->rank + j];
}

Element Ring::zero() const { return Element(*this, Vector(rank(), Scalar(0))); }

Element Ring::basis(std::size_t i) const {
  if (i >= rank()) {
    throw Error("basis index " + std::to_string(i) + " out of range");
  }
  Vector v(rank(), Scalar(0));
  v[i] = 1;
  return Element(*this, std::move(v));
}

Element Ring::element(Vector coords) const { return Element(*this, std::move(coords)); }

bool Ring::operator==(const Ring& other) const {
  if (same(other)) {
    return true;
  }
  return domain() == other.domain() && rank() == other.rank() && names() == other.names() &&
         structure_constants() == other.structure_constants();
}

Vector multiply(const Ring& r, const Vector& a, const Vector& b) {
  const std::size_t n = r.rank();
  Vector out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) {
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) {
        continue;
      }
      const auto& terms = r.product(i, j);
      if (terms.empty()) {
        continue;
      }
      const Scalar f = a[i] * b[j];
      for (const auto& t : terms) {
        out[t.index] += f * t.coeff;
      }
    }
  }
  for (auto& x : out) {
    x = r.domain().reduce(x);
  }
  return out;
}

Element::Element(Ring ring, Vector coords) : ring_(std::move(ring)), coords_(std::move(coords)) {
  if (coords_.size() != ring_.rank()) {
    throw Error("element has " + std::to_string(coords_.size()) + " coordinates, ring rank is " +
                std::to_string(ring_.rank()));
  }
  for (auto& x : coords_) {
    x = ring_.domain().reduce(x);
  }
}

bool Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

void Element::check_same(const Element& o) const {
  if (!(ring_ == o.ring_)) {
    throw Error("elements belong to different rings");
  }
}

Element Element::operator+(const Element& o) const {
  check_same(o);
  Vector v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = coords_[i] + o.coords_[i];
  }
  return Element(ring_, std::move(v));
}

Element Element::operator-(const Element& o) const {
  check_same(o);
  Vector v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = coords_[i] - o.coords_[i];
  }
  return Element(ring_, std::move(v));
}

Element Element::operator-() const {
  Vector v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = -coords_[i];
  }
  return Element(ring_, std::move(v));
}

Element Element::operator*(const Element& o) const {
  check_same(o);
  return Element(ring_, multiply(ring_, coords_, o.coords_));
}

Element Element::scaled(const Scalar& c) const {
  Vector v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = c * coords_[i];
  }
  return Element(ring_, std::move(v));
}

Element Element::pow(std::uint64_t n) const {
  if (n == 0) {
    throw Error("a^0 is undefined in a ring without unit");
  }
  Element result = *this;
  Element base = *this;
  bool have = false;
  while (n > 0) {
    if (n & 1U) {
      result = have ? result * base : base;
      have = true;
    }
    n >>= 1U;
    if (n > 0) {
      base = base * base;
    }
  }
  return result;
}

std::string Element::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) == 0) {
      continue;
    }
    if (!first) {
      os << " + ";
    }
    first = false;
    if (coords_[i] != 1) {
      os << ring_.domain().format(coords_[i]) << "*";
    }
    os << ring_.name(i);
  }
  return first ? "0" : os.str();
}

std::size_t matrix_index(const Ring& r, std::size_t n, std::size_t i, std::size_t j, std::size_t t) {
  return (i * n + j) * r.rank() + t;
}

Ring matrix_ring(const Ring& r, std::size_t n) {
  if (n == 0) {
    throw Error("matrix size must be at least 1");
  }
  const std::size_t rank = r.rank();
  std::vector<std::string> names;
  names.reserve(n * n * rank);
  const bool wide = n > 9;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < rank; ++t) {
        std::string idx = wide ? std::to_string(i + 1) + "_" + std::to_string(j + 1)
                               : std::to_string(i + 1) + std::to_string(j + 1);
        names.push_back(n == 1 ? r.name(t) : "E" + idx + "(" + r.name(t) + ")");
      }
    }
  }
  std::vector<StructureConstant> sc;
  for (const auto& c : r.structure_constants()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          sc.push_back({matrix_index(r, n, i, j, c.left), matrix_index(r, n, j, l, c.right),
                        matrix_index(r, n, i, l, c.target), c.coeff});
        }
      }
    }
  }
  return Ring(r.domain(), n * n * rank, std::move(names), std::move(sc));
}

Ring product_ring(const Ring& r, std::size_t n) {
  const std::size_t rank = r.rank();
  std::vector<std::string> names;
  std::vector<StructureConstant> sc;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t t = 0; t < rank; ++t) {
      names.push_back(r.name(t) + "_" + std::to_string(f + 1));
    }
    for (const auto& c : r.structure_constants()) {
      sc.push_back({f * rank + c.left, f * rank + c.right, f * rank + c.target, c.coeff});
    }
  }
  return Ring(r.domain(), n * rank, std::move(names), std::move(sc));
}

Submodule product_span(const Ring& r, const Submodule& a, const Submodule& b) {
  std::vector<Vector> gens;
  for (const auto& x : a.rows()) {
    for (const auto& y : b.rows()) {
      Vector p = multiply(r, x, y);
      if (std::any_of(p.begin(), p.end(), [](const Scalar& s) { return sgn(s) != 0; })) {
        gens.push_back(std::move(p));
      }
    }
  }
  return Submodule::span(r.domain(), r.rank(), gens);
}

namespace {

std::size_t chain_length_bound(const Ring& r) {
  if (r.domain().is_field()) {
    return r.rank() + 1;
  }
  const std::size_t bits = mpz_sizeinbase(r.domain().modulus().get_mpz_t(), 2);
  return r.rank() * bits + 1;
}

}  // namespace

PowerChain power_chain(const Ring& r, std::size_t cap) {
  if (cap == 0) {
    throw Error("power chain cap must be at least 1");
  }
  PowerChain chain;
  const std::size_t bound = chain_length_bound(r);
  Submodule cur = Submodule::full(r.domain(), r.rank());
  chain.terms.push_back(cur);
  if (cur.is_zero()) {
    chain.end = PowerChain::End::ReachedZero;
    return chain;
  }
  for (;;) {
    if (chain.terms.size() >= cap) {
      chain.end = PowerChain::End::CapReached;
      return chain;
    }
    std::vector<Vector> gens;
    for (const auto& x : cur.rows()) {
      for (std::size_t j = 0; j < r.rank(); ++j) {
        Vector p(r.rank(), Scalar(0));
        for (std::size_t i = 0; i < r.rank(); ++i) {
          if (sgn(x[i]) != 0) {
            for (const auto& t : r.product(i, j)) {
              p[t.index] += x[i] * t.coeff;
            }
          }
        }
        gens.push_back(std::move(p));
      }
    }
    Submodule next = Submodule::span(r.domain(), r.rank(), gens);
    if (next.is_zero()) {
      chain.terms.push_back(std::move(next));
      chain.end = PowerChain::End::ReachedZero;
      return chain;
    }
    if (next == cur) {
      chain.end = PowerChain::End::Stabilized;
      return chain;
    }
    chain.terms.push_back(next);
    cur = std::move(next);
    if (chain.terms.size() > bound) {
      throw InternalError("power chain longer than the composition-length bound " + std::to_string(bound));
    }
  }
}

Submodule generated_subring(const Ring& r, const std::vector<Vector>& gens) {
  Submodule s = Submodule::span(r.domain(), r.rank(), gens);
  for (;;) {
    std::vector<Vector> all = s.rows();
    const Submodule prod = product_span(r, s, s);
    all.insert(all.end(), prod.rows().begin(), prod.rows().end());
    Submodule next = Submodule::span(r.domain(), r.rank(), all);
    if (next == s) {
      return s;
    }
    s = std::move(next);
  }
}

namespace {

std::vector<mpz_class> prime_divisors(mpz_class m) {
  std::vector<mpz_class> out;
  for (mpz_class p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) {
        m /= p;
      }
    }
  }
  if (m > 1) {
    out.push_back(m);
  }
  return out;
}

// Minimal number of module generators of R/R^2, a lower bound for ring generators.
std::size_t generator_lower_bound(const Ring& r) {
  if (r.rank() == 0) {
    return 0;
  }
  const Submodule full = Submodule::full(r.domain(), r.rank());
  const Submodule sq = product_span(r, full, full);
  std::size_t lower = 0;
  if (r.domain().is_field()) {
    lower = r.rank() - sq.rows().size();
  } else {
    for (const auto& p : prime_divisors(r.domain().modulus())) {
      const Submodule mod_p = Submodule::span(CoeffDomain::prime_field(p), r.rank(), sq.rows());
      lower = std::max(lower, r.rank() - mod_p.rows().size());
    }
  }
  return std::max<std::size_t>(lower, 1);
}

bool generates(const Ring& r, const std::vector<Vector>& gens, const Submodule& full) {
  return generated_subring(r, gens) == full;
}

Vector element_from_index(const Ring& r, std::uint64_t index) {
  const std::uint64_t m = r.domain().modulus().get_ui();
  Vector v(r.rank(), Scalar(0));
  for (std::size_t i = 0; i < r.rank(); ++i) {
    v[i] = Scalar(static_cast<unsigned long>(index % m));
    index /= m;
  }
  return v;
}

// C(n, k) saturated at limit + 1.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
  if (k > n) {
    return 0;
  }
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  if (b > limit) {
    return limit + 1;
  }
  return b.get_ui();
}

}  // namespace

GeneratorSearch min_generators(const Ring& r, std::uint64_t cap) {
  GeneratorSearch out;
  const Submodule full = Submodule::full(r.domain(), r.rank());
  out.lower_bound = generator_lower_bound(r);
  if (r.rank() == 0) {
    out.status = GeneratorSearch::Status::Exact;
    return out;
  }

  std::vector<Vector> greedy;
  Submodule covered = Submodule::zero(r.domain(), r.rank());
  for (std::size_t i = 0; i < r.rank(); ++i) {
    Vector b = r.basis(i).coords();
    if (!covered.contains(b)) {
      greedy.push_back(std::move(b));
      covered = generated_subring(r, greedy);
    }
  }
  for (std::size_t k = greedy.size(); k-- > 0;) {
    std::vector<Vector> trial = greedy;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
    if (!trial.empty() && generates(r, trial, full)) {
      greedy = std::move(trial);
    }
  }
  out.count = greedy.size();
  out.witness = greedy;
  if (out.count == out.lower_bound) {
    out.status = GeneratorSearch::Status::Exact;
    return out;
  }
  if (!r.domain().is_finite()) {
    return out;
  }
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), r.domain().modulus().get_mpz_t(), r.rank());
  if (total - 1 > cap) {
    return out;
  }
  const std::uint64_t nonzero = total.get_ui() - 1;
  for (std::size_t c = out.lower_bound; c < out.count; ++c) {
    if (binomial_capped(nonzero, c, cap) > cap) {
      return out;
    }
    std::vector<std::uint64_t> idx(c);
    for (std::size_t i = 0; i < c; ++i) {
      idx[i] = i + 1;
    }
    for (;;) {
      std::vector<Vector> cand;
      for (auto x : idx) {
        cand.push_back(element_from_index(r, x));
      }
      if (generates(r, cand, full)) {
        out.status = GeneratorSearch::Status::Exact;
        out.count = c;
        out.witness = std::move(cand);
        return out;
      }
      std::size_t pos = c;
      while (pos > 0 && idx[pos - 1] == nonzero - (c - pos)) {
        --pos;
      }
      if (pos == 0) {
        break;
      }
      ++idx[pos - 1];
      for (std::size_t i = pos; i < c; ++i) {
        idx[i] = idx[i - 1] + 1;
      }
    }
  }
  out.status = GeneratorSearch::Status::Exact;
  return out;
}

}  // namespace gradnil
