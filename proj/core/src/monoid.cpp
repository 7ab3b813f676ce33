#include "gradnil/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gradnil {

namespace {

std::string triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

Monoid Monoid::from_table(Table table) {
  const std::size_t n = table.size();
  if (n == 0) {
    throw ValidationError("monoid is nonempty", "size 0");
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) {
      throw ValidationError("square multiplication table", "row " + std::to_string(g));
    }
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] >= n) {
        throw ValidationError("closure", "entry (" + std::to_string(g) + ", " +
                                             std::to_string(h) + ")");
      }
    }
  }
  for (std::uint32_t g = 0; g < n; ++g) {
    if (table[0][g] != g || table[g][0] != g) {
      throw ValidationError("identity at id 0", "element " + std::to_string(g));
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t ab = table[a][b];
      for (std::uint32_t c = 0; c < n; ++c) {
        if (table[ab][c] != table[a][table[b][c]]) {
          throw ValidationError("associativity", triple(a, b, c));
        }
      }
    }
  }
  Monoid m;
  m.kind_ = MonoidKind::Table;
  m.table_ = std::move(table);
  return m;
}

Monoid Monoid::cyclic(std::uint32_t n) {
  if (n == 0) {
    throw Error("cyclic monoid needs n >= 1");
  }
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t g = 0; g < n; ++g) {
    for (std::uint32_t h = 0; h < n; ++h) {
      t[g][h] = (g + h) % n;
    }
  }
  Monoid m;
  m.kind_ = MonoidKind::Table;
  m.table_ = std::move(t);
  return m;
}

Monoid Monoid::integers() { return Monoid{}; }

std::size_t Monoid::size() const {
  if (!is_table()) {
    throw Error("the integer monoid has no finite size");
  }
  return table_.size();
}

bool Monoid::contains(const MonoidElement& g) const {
  if (!is_table()) {
    return true;
  }
  return g >= 0 && g < static_cast<unsigned long>(table_.size());
}

std::uint32_t Monoid::id_of(const MonoidElement& g) const {
  if (!is_table() || !contains(g)) {
    throw Error("unknown monoid element " + g.get_str());
  }
  return static_cast<std::uint32_t>(g.get_ui());
}

MonoidElement Monoid::mul(const MonoidElement& g, const MonoidElement& h) const {
  if (!is_table()) {
    return g + h;
  }
  return MonoidElement(table_[id_of(g)][id_of(h)]);
}

MonoidElement Monoid::pow(const MonoidElement& g, std::uint64_t n) const {
  if (!is_table()) {
    return g * mpz_class(std::to_string(n));
  }
  std::uint32_t acc = 0;
  const std::uint32_t x = id_of(g);
  for (std::uint64_t i = 0; i < n; ++i) {
    acc = table_[acc][x];
  }
  return acc;
}

std::vector<MonoidElement> Monoid::elements() const {
  std::vector<MonoidElement> out;
  out.reserve(size());
  for (std::size_t g = 0; g < size(); ++g) {
    out.emplace_back(static_cast<unsigned long>(g));
  }
  return out;
}

std::string Monoid::describe() const {
  if (!is_table()) {
    return "int-add";
  }
  return "table(" + std::to_string(table_.size()) + ")";
}

Cancellativity check_cancellative(const Monoid& m) {
  if (!m.is_table()) {
    return {true, true};
  }
  const std::size_t n = m.size();
  Cancellativity c{true, true};
  std::vector<char> seen(n);
  for (std::size_t g = 0; g < n && c.left; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t h = 0; h < n; ++h) {
      auto& s = seen[m.table()[g][h]];
      if (s) {
        c.left = false;
        break;
      }
      s = 1;
    }
  }
  for (std::size_t g = 0; g < n && c.right; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t h = 0; h < n; ++h) {
      auto& s = seen[m.table()[h][g]];
      if (s) {
        c.right = false;
        break;
      }
      s = 1;
    }
  }
  return c;
}

ElementOrder element_order(const Monoid& m, const MonoidElement& g) {
  if (!m.is_table()) {
    if (g == 0) {
      return 1;
    }
    return std::nullopt;
  }
  const std::uint32_t x = m.id_of(g);
  std::vector<char> seen(m.size());
  std::uint32_t p = x;
  // The power sequence is eventually periodic; stop at the first repeat.
  for (std::uint64_t k = 1;; ++k) {
    if (p == 0) {
      return k;
    }
    if (seen[p]) {
      return std::nullopt;
    }
    seen[p] = 1;
    p = m.mul_id(p, x);
  }
}

std::uint64_t order_capped(const ElementOrder& order, std::uint64_t d) {
  return order ? std::min(*order, d) : d;
}

Congruence::Congruence(const Monoid& m, std::vector<std::vector<std::uint32_t>> classes)
    : monoid_(m) {
  if (!m.is_table()) {
    throw Error("congruences are only supported on table monoids");
  }
  const std::size_t n = m.size();
  class_of_.assign(n, UINT32_MAX);
  for (auto& cls : classes) {
    std::sort(cls.begin(), cls.end());
  }
  classes.erase(std::remove_if(classes.begin(), classes.end(),
                               [](const auto& c) { return c.empty(); }),
                classes.end());
  std::sort(classes.begin(), classes.end());
  for (std::uint32_t i = 0; i < classes.size(); ++i) {
    for (std::uint32_t g : classes[i]) {
      if (g >= n) {
        throw ValidationError("partition of the element set", "unknown element " + std::to_string(g));
      }
      if (class_of_[g] != UINT32_MAX) {
        throw ValidationError("partition of the element set",
                              "element " + std::to_string(g) + " in two classes");
      }
      class_of_[g] = i;
    }
  }
  for (std::uint32_t g = 0; g < n; ++g) {
    if (class_of_[g] == UINT32_MAX) {
      throw ValidationError("partition of the element set",
                            "element " + std::to_string(g) + " in no class");
    }
  }
  classes_ = std::move(classes);
  // g ~ rep(g) and k ~ rep(k) must give gk ~ rep(g) rep(k); this is
  // equivalent to full compatibility.
  for (std::uint32_t g = 0; g < n; ++g) {
    const std::uint32_t h = classes_[class_of_[g]].front();
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t t = classes_[class_of_[k]].front();
      if (class_of_[m.mul_id(g, k)] != class_of_[m.mul_id(h, t)]) {
        std::ostringstream os;
        os << "(g, h, k, t) = (" << g << ", " << h << ", " << k << ", " << t << ")";
        throw ValidationError("congruence compatibility", os.str());
      }
    }
  }
}

Congruence Congruence::from_labels(const Monoid& m, const std::vector<std::uint32_t>& labels) {
  if (!m.is_table() || labels.size() != m.size()) {
    throw Error("congruence labels must cover every element of a table monoid");
  }
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::uint32_t> label_slot;
  std::vector<std::uint32_t> seen_labels;
  for (std::uint32_t g = 0; g < labels.size(); ++g) {
    auto it = std::find(seen_labels.begin(), seen_labels.end(), labels[g]);
    if (it == seen_labels.end()) {
      seen_labels.push_back(labels[g]);
      classes.push_back({g});
    } else {
      classes[static_cast<std::size_t>(it - seen_labels.begin())].push_back(g);
    }
  }
  return Congruence(m, std::move(classes));
}

Congruence Congruence::universal(const Monoid& m) {
  std::vector<std::uint32_t> all(m.size());
  std::iota(all.begin(), all.end(), 0u);
  return Congruence(m, {all});
}

Congruence Congruence::discrete(const Monoid& m) {
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t g = 0; g < m.size(); ++g) {
    classes.push_back({g});
  }
  return Congruence(m, std::move(classes));
}

Monoid quotient(const Monoid& m, const Congruence& c) {
  if (!(c.monoid() == m)) {
    throw Error("congruence belongs to a different monoid");
  }
  const std::size_t k = c.class_count();
  Monoid::Table t(k, std::vector<std::uint32_t>(k));
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = 0; b < k; ++b) {
      t[a][b] = c.class_of(m.mul_id(c.classes()[a].front(), c.classes()[b].front()));
    }
  }
  return Monoid::from_table(std::move(t));
}

}  // namespace gradnil
