#include "gradnil/words.hpp"

#include <algorithm>
#include <set>

namespace gradnil {

namespace {

struct TableOps {
  using Elem = std::uint32_t;
  const Monoid& m;

  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return m.mul_id(a, b); }
  Elem from(const MonoidElement& g) const { return m.id_of(g); }
  MonoidElement to(Elem e) const { return MonoidElement(static_cast<unsigned long>(e)); }
};

struct IntAddOps {
  using Elem = mpz_class;

  Elem identity() const { return 0; }
  Elem mul(const Elem& a, const Elem& b) const { return a + b; }
  Elem from(const MonoidElement& g) const { return g; }
  MonoidElement to(const Elem& e) const { return e; }
};

template <class Ops>
std::vector<typename Ops::Elem> letters(const Ops& ops, const DegreeWord& w) {
  std::vector<typename Ops::Elem> out;
  out.reserve(w.size());
  for (const auto& g : w.degrees) {
    out.push_back(ops.from(g));
  }
  return out;
}

template <class Ops>
std::vector<typename Ops::Elem> support_of(const Ops& ops, const DegreeSet& supp) {
  std::vector<typename Ops::Elem> out;
  for (const auto& g : supp) {
    out.push_back(ops.from(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Ops>
bool lambda_inside(const Ops& ops, const std::vector<typename Ops::Elem>& word,
                   const std::vector<typename Ops::Elem>& supp) {
  for (std::size_t l = 0; l < word.size(); ++l) {
    typename Ops::Elem p = word[l];
    if (!std::binary_search(supp.begin(), supp.end(), p)) {
      return false;
    }
    for (std::size_t k = l + 1; k < word.size(); ++k) {
      p = ops.mul(p, word[k]);
      if (!std::binary_search(supp.begin(), supp.end(), p)) {
        return false;
      }
    }
  }
  return true;
}

template <class Ops>
DegreeSet lambda_impl(const Ops& ops, const DegreeWord& w) {
  const auto word = letters(ops, w);
  std::set<typename Ops::Elem> seen;
  for (std::size_t l = 0; l < word.size(); ++l) {
    typename Ops::Elem p = word[l];
    seen.insert(p);
    for (std::size_t k = l + 1; k < word.size(); ++k) {
      p = ops.mul(p, word[k]);
      seen.insert(p);
    }
  }
  DegreeSet out;
  for (const auto& e : seen) {
    out.push_back(ops.to(e));
  }
  return out;
}

template <class Ops>
DecompositionResult decompose_impl(const Ops& ops, const DegreeWord& w, std::size_t r, const DegreeSet& supp_set) {
  DecompositionResult res;
  const auto word = letters(ops, w);
  const auto supp = support_of(ops, supp_set);
  if (!lambda_inside(ops, word, supp)) {
    res.kind = DecompositionResult::Kind::ForcedZero;
    return res;
  }
  // Prefix degrees b_1..b_n bucketed by value; positions ascend within a bucket.
  std::vector<std::pair<typename Ops::Elem, std::vector<std::size_t>>> buckets;
  typename Ops::Elem prefix = ops.identity();
  for (std::size_t i = 0; i < word.size(); ++i) {
    prefix = i == 0 ? word[0] : ops.mul(prefix, word[i]);
    auto it = std::find_if(buckets.begin(), buckets.end(), [&](const auto& b) { return b.first == prefix; });
    if (it == buckets.end()) {
      buckets.push_back({prefix, {i + 1}});
    } else {
      it->second.push_back(i + 1);
    }
  }
  const typename Ops::Elem e = ops.identity();
  std::vector<std::size_t> cuts;
  auto neutral = std::find_if(buckets.begin(), buckets.end(), [&](const auto& b) { return b.first == e; });
  if (neutral != buckets.end() && neutral->second.size() >= r) {
    cuts.push_back(0);
    cuts.insert(cuts.end(), neutral->second.begin(), neutral->second.begin() + static_cast<std::ptrdiff_t>(r));
  } else {
    const std::pair<typename Ops::Elem, std::vector<std::size_t>>* best = nullptr;
    for (const auto& b : buckets) {
      if (b.first == e) {
        continue;
      }
      if (best == nullptr || b.second.size() > best->second.size() ||
          (b.second.size() == best->second.size() && b.first < best->first)) {
        best = &b;
      }
    }
    if (best == nullptr || best->second.size() < r + 1) {
      throw InternalError("no prefix bucket reaches the pigeonhole bound although every subproduct is in the support");
    }
    cuts.assign(best->second.begin(), best->second.begin() + static_cast<std::ptrdiff_t>(r + 1));
  }
  for (std::size_t j = 1; j < cuts.size(); ++j) {
    typename Ops::Elem p = word[cuts[j - 1]];
    for (std::size_t k = cuts[j - 1] + 1; k < cuts[j]; ++k) {
      p = ops.mul(p, word[k]);
    }
    if (!(p == e)) {
      throw InternalError("decomposition block " + std::to_string(j) + " is not neutral");
    }
  }
  res.kind = DecompositionResult::Kind::Found;
  res.decomposition.cuts = std::move(cuts);
  return res;
}

template <class Ops>
typename Ops::Elem fold(const Ops& ops, const std::vector<typename Ops::Elem>& word, std::size_t from,
                        std::size_t to) {
  typename Ops::Elem p = word[from];
  for (std::size_t k = from + 1; k < to; ++k) {
    p = ops.mul(p, word[k]);
  }
  return p;
}

template <class Ops>
bool search_cuts(const Ops& ops, const std::vector<typename Ops::Elem>& word, std::size_t r,
                 std::vector<std::size_t>& cuts) {
  if (cuts.size() == r + 1) {
    return true;
  }
  const std::size_t last = cuts.back();
  const std::size_t remaining = r + 1 - cuts.size();
  for (std::size_t next = last + 1; next + (remaining - 1) <= word.size(); ++next) {
    if (fold(ops, word, last, next) == ops.identity()) {
      cuts.push_back(next);
      if (search_cuts(ops, word, r, cuts)) {
        return true;
      }
      cuts.pop_back();
    }
  }
  return false;
}

template <class Ops>
DecompositionResult oracle_impl(const Ops& ops, const DegreeWord& w, std::size_t r, const DegreeSet& supp_set) {
  DecompositionResult res;
  const auto word = letters(ops, w);
  const auto supp = support_of(ops, supp_set);
  // Direct check of every contiguous subproduct, each folded from scratch.
  for (std::size_t l = 0; l < word.size(); ++l) {
    for (std::size_t k = l + 1; k <= word.size(); ++k) {
      if (!std::binary_search(supp.begin(), supp.end(), fold(ops, word, l, k))) {
        res.kind = DecompositionResult::Kind::ForcedZero;
        return res;
      }
    }
  }
  for (std::size_t s0 = 0; s0 + r <= word.size(); ++s0) {
    std::vector<std::size_t> cuts{s0};
    if (search_cuts(ops, word, r, cuts)) {
      res.kind = DecompositionResult::Kind::Found;
      res.decomposition.cuts = std::move(cuts);
      return res;
    }
  }
  res.kind = DecompositionResult::Kind::None;
  return res;
}

void check_shape(const DegreeWord& w, std::size_t r, const DegreeSet& supp) {
  if (r < 2) {
    throw Error("r must be at least 2");
  }
  if (supp.empty() || w.size() != r * supp.size()) {
    throw Error("word length " + std::to_string(w.size()) + " is not r*d = " + std::to_string(r) + "*" +
                std::to_string(supp.size()));
  }
  if (!check_cancellative(w.monoid).left) {
    throw Error("monoid is not left cancellative");
  }
  for (const auto& g : supp) {
    if (!w.monoid.contains(g)) {
      throw Error("support element " + g.get_str() + " is not in the monoid");
    }
  }
}

}  // namespace

DegreeWord::DegreeWord(Monoid m, std::vector<MonoidElement> degs) : monoid(std::move(m)), degrees(std::move(degs)) {
  for (const auto& g : degrees) {
    if (!monoid.contains(g)) {
      throw Error("degree " + g.get_str() + " is not a monoid element");
    }
  }
}

DegreeSet make_degree_set(std::vector<MonoidElement> elems) {
  std::sort(elems.begin(), elems.end(), MpzLess{});
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

DegreeSet lambda_set(const DegreeWord& w) {
  if (w.monoid.is_table()) {
    return lambda_impl(TableOps{w.monoid}, w);
  }
  return lambda_impl(IntAddOps{}, w);
}

ZeroPrediction zero_product_predictor(const DegreeWord& w, const DegreeSet& supp) {
  const DegreeSet lam = lambda_set(w);
  const bool inside = std::includes(supp.begin(), supp.end(), lam.begin(), lam.end(), MpzLess{});
  return inside ? ZeroPrediction::PossiblyNonzero : ZeroPrediction::ForcedZero;
}

std::map<MonoidElement, std::vector<std::size_t>, MpzLess> prefix_buckets(const DegreeWord& w) {
  std::map<MonoidElement, std::vector<std::size_t>, MpzLess> out;
  MonoidElement prefix = w.monoid.identity();
  for (std::size_t i = 0; i < w.size(); ++i) {
    prefix = i == 0 ? w.degrees[0] : w.monoid.mul(prefix, w.degrees[i]);
    out[prefix].push_back(i + 1);
  }
  return out;
}

DecompositionResult neutral_decomposition(const DegreeWord& w, std::size_t r, const DegreeSet& supp) {
  check_shape(w, r, supp);
  if (w.monoid.is_table()) {
    return decompose_impl(TableOps{w.monoid}, w, r, supp);
  }
  return decompose_impl(IntAddOps{}, w, r, supp);
}

DecompositionResult oracle_decomposition(const DegreeWord& w, std::size_t r, const DegreeSet& supp) {
  if (r < 1) {
    throw Error("r must be positive");
  }
  if (w.monoid.is_table()) {
    return oracle_impl(TableOps{w.monoid}, w, r, supp);
  }
  return oracle_impl(IntAddOps{}, w, r, supp);
}

std::vector<std::size_t> gap_selection(const Decomposition& dec, std::size_t d) {
  const std::size_t r = dec.blocks();
  if (r < 2) {
    throw Error("gap selection needs at least two blocks");
  }
  if (dec.cuts.back() - dec.cuts.front() > r * d) {
    throw Error("cuts span more than r*d letters");
  }
  std::vector<std::size_t> selected;
  for (std::size_t i = 1; i <= r; ++i) {
    if (dec.cuts[i] - dec.cuts[i - 1] <= 2 * d) {
      selected.push_back(i);
    }
  }
  if (selected.size() < r / 2 + 1) {
    throw InternalError("only " + std::to_string(selected.size()) + " short blocks out of " + std::to_string(r));
  }
  return selected;
}

MonoidElement block_degree(const DegreeWord& w, std::size_t from, std::size_t to) {
  if (from >= to || to > w.size()) {
    throw Error("empty or out-of-range block");
  }
  MonoidElement p = w.degrees[from];
  for (std::size_t k = from + 1; k < to; ++k) {
    p = w.monoid.mul(p, w.degrees[k]);
  }
  return p;
}

}  // namespace gradnil
