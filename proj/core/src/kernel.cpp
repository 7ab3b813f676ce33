#include "gradnil/kernel.hpp"

#include <algorithm>

namespace gradnil {

std::optional<ResidueKernel> ResidueKernel::build(const Ring& r) {
  const CoeffDomain& dom = r.domain();
  if (!dom.is_finite() || dom.modulus() >= (mpz_class(1) << 31)) {
    return std::nullopt;
  }
  ResidueKernel k;
  k.rank_ = r.rank();
  k.modulus_ = static_cast<std::int64_t>(dom.modulus().get_si());
  k.table_.assign(k.rank_ * k.rank_, {});
  for (const auto& c : r.structure_constants()) {
    k.table_[c.left * k.rank_ + c.right].push_back(
        {static_cast<std::uint32_t>(c.target), static_cast<std::int64_t>(c.coeff.get_num().get_si())});
  }
  return k;
}

void ResidueKernel::mul(const Vec& a, const Vec& b, Vec& out) const {
  out.assign(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) {
      continue;
    }
    const auto* row = &table_[i * rank_];
    for (std::size_t j = 0; j < rank_; ++j) {
      if (b[j] == 0 || row[j].empty()) {
        continue;
      }
      const std::int64_t ab = (a[i] * b[j]) % modulus_;
      for (const auto& e : row[j]) {
        out[e.target] = (out[e.target] + ab * e.coeff) % modulus_;
      }
    }
  }
}

void ResidueKernel::add(const Vec& a, const Vec& b, Vec& out) const {
  out.resize(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    out[i] = (a[i] + b[i]) % modulus_;
  }
}

bool ResidueKernel::is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

std::optional<std::uint64_t> ResidueKernel::count(std::size_t coords) const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < coords; ++i) {
    if (total > UINT64_MAX / static_cast<std::uint64_t>(modulus_)) {
      return std::nullopt;
    }
    total *= static_cast<std::uint64_t>(modulus_);
  }
  return total;
}

void ResidueKernel::from_index(std::uint64_t index, const std::vector<std::size_t>& coords, Vec& out) const {
  out.assign(rank_, 0);
  const auto m = static_cast<std::uint64_t>(modulus_);
  for (std::size_t c : coords) {
    out[c] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
}

ResidueKernel::Vec ResidueKernel::from_element(const Element& a) const {
  Vec v(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    v[i] = a[i].get_num().get_si();
  }
  return v;
}

Element ResidueKernel::to_element(const Ring& r, const Vec& a) const {
  Vector v(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    v[i] = Scalar(static_cast<long>(a[i]));
  }
  return r.element(std::move(v));
}

ResidueKernel::PowerWalk ResidueKernel::nil_index(const Vec& a, std::uint64_t cap) const {
  PowerWalk walk;
  if (is_zero(a)) {
    walk.kind = PowerWalk::Kind::Zero;
    walk.index = 1;
    return walk;
  }
  // Zero is a fixed point of x -> x*a, so a cycle that avoids it proves a is not nil.
  Vec tortoise = a;
  Vec hare;
  Vec scratch;
  mul(a, a, hare);
  std::uint64_t n = 2;
  std::uint64_t power = 1;
  std::uint64_t lam = 1;
  for (;;) {
    if (is_zero(hare)) {
      walk.kind = PowerWalk::Kind::Zero;
      walk.index = n;
      return walk;
    }
    if (hare == tortoise) {
      walk.kind = PowerWalk::Kind::Cycle;
      return walk;
    }
    if (n >= cap) {
      return walk;
    }
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    mul(hare, a, scratch);
    std::swap(hare, scratch);
    ++lam;
    ++n;
  }
}

}  // namespace gradnil
