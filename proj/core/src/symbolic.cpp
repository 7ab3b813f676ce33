#include "gradnil/symbolic.hpp"

#include <algorithm>
#include <sstream>

namespace gradnil {

GenericPolynomial GenericPolynomial::generic_element(const Ring& r, const std::vector<std::size_t>& basis) {
  GenericPolynomial g(r, basis.size());
  for (std::size_t v = 0; v < basis.size(); ++v) {
    Exponent e(basis.size(), 0);
    e[v] = 1;
    g.terms_[e] = r.basis(basis[v]).coords();
  }
  return g;
}

std::optional<GenericPolynomial> GenericPolynomial::multiply(const GenericPolynomial& o, std::size_t term_cap) const {
  GenericPolynomial out(ring_, vars_);
  for (const auto& [ea, va] : terms_) {
    for (const auto& [eb, vb] : o.terms_) {
      Vector p = gradnil::multiply(ring_, va, vb);
      if (std::all_of(p.begin(), p.end(), [](const Scalar& x) { return sgn(x) == 0; })) {
        continue;
      }
      Exponent e(vars_);
      for (std::size_t i = 0; i < vars_; ++i) {
        const unsigned sum = static_cast<unsigned>(ea[i]) + eb[i];
        if (sum > 255) {
          throw Error("symbolic exponent overflow");
        }
        e[i] = static_cast<std::uint8_t>(sum);
      }
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_.emplace(std::move(e), std::move(p));
        if (out.terms_.size() > term_cap) {
          return std::nullopt;
        }
      } else {
        for (std::size_t k = 0; k < p.size(); ++k) {
          it->second[k] = ring_.domain().add(it->second[k], p[k]);
        }
      }
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    const auto& v = it->second;
    if (std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; })) {
      it = out.terms_.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

Vector GenericPolynomial::evaluate(const std::vector<Scalar>& point) const {
  Vector out(ring_.rank(), Scalar(0));
  for (const auto& [e, v] : terms_) {
    Scalar mono = 1;
    for (std::size_t i = 0; i < vars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) {
        mono *= point[i];
      }
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
      out[k] += mono * v[k];
    }
  }
  for (auto& x : out) {
    x = ring_.domain().reduce(x);
  }
  return out;
}

std::string GenericPolynomial::first_term_string() const {
  if (terms_.empty()) {
    return "0";
  }
  const auto& [e, v] = *terms_.begin();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < vars_; ++i) {
    if (e[i] == 0) {
      continue;
    }
    os << (first ? "" : "*") << "l" << (i + 1);
    if (e[i] > 1) {
      os << "^" << static_cast<unsigned>(e[i]);
    }
    first = false;
  }
  os << " -> (";
  for (std::size_t k = 0; k < v.size(); ++k) {
    os << (k ? ", " : "") << ring_.domain().format(v[k]);
  }
  os << ")";
  return os.str();
}

}  // namespace gradnil
