#include "gradnil/grading.hpp"

#include <algorithm>
#include <set>

namespace gradnil {

GradedRing::GradedRing(Ring ring, Monoid monoid, std::vector<MonoidElement> degrees)
    : ring_(std::move(ring)), monoid_(std::move(monoid)), degrees_(std::move(degrees)) {
  if (degrees_.size() != ring_.rank()) {
    throw Error("grading assigns " + std::to_string(degrees_.size()) + " degrees to a ring of rank " +
                std::to_string(ring_.rank()));
  }
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (!monoid_.contains(degrees_[i])) {
      throw Error("degree " + degrees_[i].get_str() + " of basis " + std::to_string(i) + " is not a monoid element");
    }
  }
  if (monoid_.is_table()) {
    const auto& t = monoid_.table();
    const std::size_t n = t.size();
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<int> seen(n, -1);
      for (std::size_t h = 0; h < n; ++h) {
        const std::uint32_t v = t[g][h];
        if (seen[v] >= 0) {
          throw ValidationError("left cancellativity", "(g, h, t) = (" + std::to_string(g) + ", " +
                                                           std::to_string(seen[v]) + ", " + std::to_string(h) + ")");
        }
        seen[v] = static_cast<int>(h);
      }
    }
  }
  for (const auto& c : ring_.structure_constants()) {
    if (monoid_.mul(degrees_[c.left], degrees_[c.right]) != degrees_[c.target]) {
      throw ValidationError("grading axiom", "(i, j, k) = (" + std::to_string(c.left) + ", " +
                                                 std::to_string(c.right) + ", " + std::to_string(c.target) + ")");
    }
  }
  std::set<MonoidElement, MpzLess> supp(degrees_.begin(), degrees_.end());
  support_.assign(supp.begin(), supp.end());
}

bool GradedRing::in_support(const MonoidElement& g) const {
  return std::binary_search(support_.begin(), support_.end(), g, MpzLess{});
}

std::vector<std::size_t> GradedRing::basis_of_degree(const MonoidElement& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] == g) {
      out.push_back(i);
    }
  }
  return out;
}

Submodule GradedRing::component(const MonoidElement& g) const {
  std::vector<Vector> gens;
  for (std::size_t i : basis_of_degree(g)) {
    gens.push_back(ring_.basis(i).coords());
  }
  return Submodule::span(ring_.domain(), ring_.rank(), gens);
}

Ring GradedRing::neutral_ring() const { return restrict_ring(ring_, neutral_basis()); }

std::map<MonoidElement, Element, MpzLess> GradedRing::homogeneous_parts(const Element& a) const {
  std::map<MonoidElement, Element, MpzLess> parts;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (sgn(a[i]) == 0) {
      continue;
    }
    auto it = parts.find(degrees_[i]);
    if (it == parts.end()) {
      it = parts.emplace(degrees_[i], ring_.zero()).first;
    }
    Vector v = it->second.coords();
    v[i] = a[i];
    it->second = ring_.element(std::move(v));
  }
  return parts;
}

Ring restrict_ring(const Ring& r, const std::vector<std::size_t>& basis) {
  std::vector<long> pos(r.rank(), -1);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    pos[basis[k]] = static_cast<long>(k);
    names.push_back(r.name(basis[k]));
  }
  std::vector<StructureConstant> sc;
  for (const auto& c : r.structure_constants()) {
    if (pos[c.left] < 0 || pos[c.right] < 0) {
      continue;
    }
    if (pos[c.target] < 0) {
      throw Error("basis subset is not closed under multiplication");
    }
    sc.push_back({static_cast<std::size_t>(pos[c.left]), static_cast<std::size_t>(pos[c.right]),
                  static_cast<std::size_t>(pos[c.target]), c.coeff});
  }
  return Ring(r.domain(), basis.size(), std::move(names), std::move(sc));
}

GradedRing trivial_grading(const Ring& r) {
  return GradedRing(r, Monoid::trivial(), std::vector<MonoidElement>(r.rank(), MonoidElement(0)));
}

GradedRing induced_quotient_grading(const GradedRing& gr, const Congruence& c) {
  if (!(c.monoid() == gr.monoid())) {
    throw Error("congruence is defined on a different monoid");
  }
  Monoid q = quotient(gr.monoid(), c);
  if (!check_cancellative(q).left) {
    throw ValidationError("left cancellativity", "quotient monoid of " + std::to_string(c.class_count()) + " classes");
  }
  std::vector<MonoidElement> degrees;
  for (const auto& g : gr.degrees()) {
    degrees.emplace_back(static_cast<unsigned long>(c.class_of(gr.monoid().id_of(g))));
  }
  return GradedRing(gr.ring(), std::move(q), std::move(degrees));
}

GradedRing elementary_grading(const Ring& r, std::size_t n) {
  Ring m = matrix_ring(r, n);
  std::vector<MonoidElement> degrees;
  degrees.reserve(m.rank());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < r.rank(); ++t) {
        degrees.emplace_back(static_cast<unsigned long>((j + n - i) % n));
      }
    }
  }
  return GradedRing(std::move(m), Monoid::cyclic(static_cast<std::uint32_t>(n)), std::move(degrees));
}

}  // namespace gradnil
