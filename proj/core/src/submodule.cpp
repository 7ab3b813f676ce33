#include "gradnil/submodule.hpp"

#include <algorithm>

namespace gradnil {

namespace {

using ZRow = std::vector<mpz_class>;

mpz_class mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// A unit u of Z/N with u*a = gcd(a, N) (mod N).
mpz_class normalizing_unit(const mpz_class& a, const mpz_class& n) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  const mpz_class a1 = a / g;
  const mpz_class n1 = n / g;
  mpz_class u;
  if (n1 == 1) {
    u = 1;
  } else {
    mpz_invert(u.get_mpz_t(), a1.get_mpz_t(), n1.get_mpz_t());
  }
  // u is a unit mod n1; shift by multiples of n1 until it is a unit mod n.
  for (;;) {
    mpz_class h;
    mpz_gcd(h.get_mpz_t(), u.get_mpz_t(), n.get_mpz_t());
    if (h == 1) {
      return u;
    }
    u += n1;
  }
}

void reduce_row(ZRow& row, const mpz_class& n) {
  for (auto& x : row) {
    x = mod(x, n);
  }
}

bool row_is_zero(const ZRow& row) {
  return std::all_of(row.begin(), row.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace

Submodule Submodule::span(const CoeffDomain& domain, std::size_t dim, const std::vector<Vector>& gens) {
  for (const auto& g : gens) {
    if (g.size() != dim) {
      throw Error("generator length " + std::to_string(g.size()) + " does not match dimension " +
                  std::to_string(dim));
    }
  }
  Submodule s(domain, dim);
  if (domain.kind() == CoeffKind::ZMod) {
    s.build_howell(gens);
  } else {
    s.build_field(gens);
  }
  return s;
}

Submodule Submodule::zero(const CoeffDomain& domain, std::size_t dim) { return Submodule(domain, dim); }

Submodule Submodule::full(const CoeffDomain& domain, std::size_t dim) {
  std::vector<Vector> gens(dim, Vector(dim, Scalar(0)));
  for (std::size_t i = 0; i < dim; ++i) {
    gens[i][i] = 1;
  }
  return span(domain, dim, gens);
}

// Fraction-free elimination: rows are scaled to primitive integer vectors
// (over Q) and combined with integer multipliers; the echelon form is then
// normalized to reduced row echelon form.
void Submodule::build_field(std::vector<Vector> gens) {
  const bool rational = domain_.kind() == CoeffKind::Rat;
  std::vector<ZRow> work;
  for (auto& g : gens) {
    ZRow row(dim_);
    if (rational) {
      mpz_class den = 1;
      for (const auto& x : g) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      }
      for (std::size_t c = 0; c < dim_; ++c) {
        row[c] = g[c].get_num() * (den / g[c].get_den());
      }
    } else {
      for (std::size_t c = 0; c < dim_; ++c) {
        row[c] = domain_.reduce(g[c]).get_num();
      }
    }
    if (!row_is_zero(row)) {
      work.push_back(std::move(row));
    }
  }
  const mpz_class& p = domain_.modulus();
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < dim_ && r < work.size(); ++c) {
    std::size_t sel = r;
    while (sel < work.size() && work[sel][c] == 0) {
      ++sel;
    }
    if (sel == work.size()) {
      continue;
    }
    std::swap(work[r], work[sel]);
    for (std::size_t i = r + 1; i < work.size(); ++i) {
      if (work[i][c] == 0) {
        continue;
      }
      const mpz_class a = work[r][c];
      const mpz_class b = work[i][c];
      mpz_class content = 0;
      for (std::size_t k = c; k < dim_; ++k) {
        work[i][k] = a * work[i][k] - b * work[r][k];
        if (rational) {
          mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), work[i][k].get_mpz_t());
        } else {
          work[i][k] = mod(work[i][k], p);
        }
      }
      if (rational && content > 1) {
        for (std::size_t k = c; k < dim_; ++k) {
          mpz_divexact(work[i][k].get_mpz_t(), work[i][k].get_mpz_t(), content.get_mpz_t());
        }
      }
    }
    piv.push_back(c);
    ++r;
  }
  rows_.clear();
  for (std::size_t i = 0; i < r; ++i) {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      v[k] = domain_.reduce(Scalar(work[i][k]));
    }
    const Scalar inv = *domain_.inverse(v[piv[i]]);
    for (auto& x : v) {
      x = domain_.mul(x, inv);
    }
    rows_.push_back(std::move(v));
  }
  // Back substitution.
  for (std::size_t i = r; i-- > 0;) {
    for (std::size_t j = 0; j < i; ++j) {
      const Scalar f = rows_[j][piv[i]];
      if (sgn(f) == 0) {
        continue;
      }
      for (std::size_t k = 0; k < dim_; ++k) {
        rows_[j][k] = domain_.sub(rows_[j][k], domain_.mul(f, rows_[i][k]));
      }
    }
  }
  pivots_ = std::move(piv);
}

void Submodule::build_howell(const std::vector<Vector>& gens) {
  const mpz_class& n = domain_.modulus();
  std::vector<ZRow> work;
  for (const auto& g : gens) {
    ZRow row(dim_);
    for (std::size_t c = 0; c < dim_; ++c) {
      row[c] = domain_.reduce(g[c]).get_num();
    }
    if (!row_is_zero(row)) {
      work.push_back(std::move(row));
    }
  }
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < dim_ && r < work.size(); ++c) {
    // Bring a gcd of column c (rows r..) into row r with unimodular 2x2 steps.
    for (std::size_t i = r + 1; i < work.size(); ++i) {
      if (work[i][c] == 0) {
        continue;
      }
      if (work[r][c] == 0) {
        std::swap(work[r], work[i]);
        continue;
      }
      const mpz_class a = work[r][c];
      const mpz_class b = work[i][c];
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const mpz_class u = -(b / g);
      const mpz_class v = a / g;
      for (std::size_t k = c; k < dim_; ++k) {
        const mpz_class x = work[r][k];
        const mpz_class y = work[i][k];
        work[r][k] = mod(s * x + t * y, n);
        work[i][k] = mod(u * x + v * y, n);
      }
    }
    if (work[r][c] == 0) {
      continue;
    }
    const mpz_class unit = normalizing_unit(work[r][c], n);
    for (std::size_t k = c; k < dim_; ++k) {
      work[r][k] = mod(work[r][k] * unit, n);
    }
    const mpz_class p = work[r][c];
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), work[i][c].get_mpz_t(), p.get_mpz_t());
      if (q != 0) {
        for (std::size_t k = c; k < dim_; ++k) {
          work[i][k] -= q * work[r][k];
        }
        reduce_row(work[i], n);
      }
    }
    // The annihilator multiple keeps the span saturated (Howell property).
    ZRow ann = work[r];
    const mpz_class factor = n / p;
    for (auto& x : ann) {
      x *= factor;
    }
    reduce_row(ann, n);
    if (!row_is_zero(ann)) {
      work.push_back(std::move(ann));
    }
    piv.push_back(c);
    ++r;
  }
  rows_.clear();
  for (std::size_t i = 0; i < r; ++i) {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      v[k] = Scalar(work[i][k]);
    }
    rows_.push_back(std::move(v));
  }
  pivots_ = std::move(piv);
}

Vector Submodule::reduce(Vector v) const {
  if (v.size() != dim_) {
    throw Error("vector length does not match submodule dimension");
  }
  for (auto& x : v) {
    x = domain_.reduce(x);
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (sgn(v[c]) == 0) {
      continue;
    }
    Scalar q;
    if (domain_.kind() == CoeffKind::ZMod) {
      mpz_class zq;
      mpz_fdiv_q(zq.get_mpz_t(), v[c].get_num_mpz_t(), rows_[i][c].get_num_mpz_t());
      q = zq;
    } else {
      q = v[c];
    }
    if (sgn(q) == 0) {
      continue;
    }
    for (std::size_t k = c; k < dim_; ++k) {
      v[k] = domain_.sub(v[k], domain_.mul(q, rows_[i][k]));
    }
  }
  return v;
}

bool Submodule::contains(const Vector& v) const {
  const Vector rest = reduce(v);
  return std::all_of(rest.begin(), rest.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool Submodule::contains(const Submodule& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Vector& v) { return contains(v); });
}

std::optional<mpz_class> Submodule::cardinality() const {
  if (!domain_.is_finite()) {
    if (rows_.empty()) {
      return mpz_class(1);
    }
    return std::nullopt;
  }
  mpz_class count = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    count *= domain_.modulus() / rows_[i][pivots_[i]].get_num();
  }
  return count;
}

}  // namespace gradnil
