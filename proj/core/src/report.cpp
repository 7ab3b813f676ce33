#include "gradnil/report.hpp"

#include <sstream>

#include <json.hpp>

namespace gradnil {

namespace {

using nlohmann::ordered_json;

ordered_json caps_json(const Caps& c) {
  return ordered_json{{"elements", c.elements}, {"tuples", c.tuples},   {"powers", c.powers},
                      {"samples", c.samples},   {"seed", c.seed},       {"symbolic_terms", c.symbolic_terms}};
}

ordered_json verdict_json(const NilVerdict& v) {
  ordered_json j{{"status", to_string(v.status)}, {"method", v.method}};
  j["index"] = v.index ? ordered_json(*v.index) : ordered_json(nullptr);
  j["witness"] = v.witness ? ordered_json(v.witness->to_string()) : ordered_json(nullptr);
  if (!v.monomial.empty()) {
    j["monomial"] = v.monomial;
  }
  j["checked"] = v.checked;
  j["seed"] = v.seed ? ordered_json(*v.seed) : ordered_json(nullptr);
  return j;
}

std::string verdict_text(const NilVerdict& v) {
  std::ostringstream os;
  os << to_string(v.status);
  if (v.index) {
    os << " index=" << *v.index;
  }
  os << " method=" << v.method;
  if (v.checked) {
    os << " checked=" << v.checked;
  }
  if (v.seed) {
    os << " seed=" << *v.seed;
  }
  if (v.witness) {
    os << " witness=" << v.witness->to_string();
  }
  if (!v.monomial.empty()) {
    os << " monomial=" << v.monomial;
  }
  return os.str();
}

std::string caps_text(const Caps& c) {
  std::ostringstream os;
  os << "caps: elements=" << c.elements << " tuples=" << c.tuples << " powers=" << c.powers
     << " samples=" << c.samples << " seed=" << c.seed;
  return os.str();
}

ordered_json named_json(const std::vector<NamedValue>& vs) {
  ordered_json j = ordered_json::object();
  for (const auto& v : vs) {
    // Integers beyond 64 bits are written as strings.
    if (v.value.fits_slong_p()) {
      j[v.name] = v.value.get_si();
    } else {
      j[v.name] = v.value.get_str();
    }
  }
  return j;
}

ordered_json check_json(const TheoremCheck& c) {
  ordered_json j{{"id", code(c.id)},
                 {"anchor", c.anchor},
                 {"applicable", c.applicable},
                 {"reason", c.reason},
                 {"bound", named_json(c.bounds)},
                 {"observed", named_json(c.observed)},
                 {"status", to_string(c.status)},
                 {"witnesses", c.witnesses},
                 {"notes", c.notes}};
  j["seed"] = c.seed ? ordered_json(*c.seed) : ordered_json(nullptr);
  if (c.millis) {
    j["millis"] = *c.millis;
  }
  if (c.bundle) {
    j["bundle"] = *c.bundle;
  }
  return j;
}

void check_text(std::ostringstream& os, const TheoremCheck& c) {
  os << code(c.id) << ": " << to_string(c.status);
  if (!c.reason.empty()) {
    os << " (" << c.reason << ")";
  }
  if (c.millis) {
    os << " [" << *c.millis << " ms]";
  }
  os << "\n  statement: " << c.anchor << "\n";
  for (const auto& b : c.bounds) {
    os << "  bound " << b.name << " = " << b.value.get_str() << "\n";
  }
  for (const auto& o : c.observed) {
    os << "  observed " << o.name << " = " << o.value.get_str() << "\n";
  }
  for (const auto& w : c.witnesses) {
    os << "  witness: " << w << "\n";
  }
  for (const auto& n : c.notes) {
    os << "  note: " << n << "\n";
  }
  if (c.seed) {
    os << "  seed: " << *c.seed << "\n";
  }
  if (c.bundle) {
    os << "  counterexample bundle:\n";
    std::istringstream is(*c.bundle);
    for (std::string line; std::getline(is, line);) {
      os << "    " << line << "\n";
    }
  }
}

std::string support_text(const std::vector<MonoidElement>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? ", " : "") + s[i].get_str();
  }
  return out + "}";
}

std::vector<std::string> support_strings(const std::vector<MonoidElement>& s) {
  std::vector<std::string> out;
  for (const auto& g : s) {
    out.push_back(g.get_str());
  }
  return out;
}

}  // namespace

RingAnalysis analyze(const GradedRing& gr, const Caps& caps) {
  RingAnalysis a;
  a.domain = gr.ring().domain().name();
  a.rank = gr.ring().rank();
  a.monoid = gr.monoid().describe();
  a.support = gr.support();
  for (const auto& g : a.support) {
    a.component_ranks.push_back(gr.basis_of_degree(g).size());
  }
  a.components = s_nil_check(gr, caps);
  a.neutral_nil = ring_is_nil(gr.neutral_ring(), caps);
  a.nilpotency = nilpotency_index(gr.ring(), caps);
  a.nil = ring_is_nil(gr.ring(), caps);
  a.caps = caps;
  return a;
}

std::string render_text(const RingAnalysis& a) {
  std::ostringstream os;
  os << "ring: rank " << a.rank << " over " << a.domain << ", graded by " << a.monoid << "\n";
  os << "support: " << support_text(a.support) << " (d = " << a.support.size() << ")\n";
  for (std::size_t i = 0; i < a.support.size(); ++i) {
    const auto it = a.components.find(a.support[i]);
    os << "  R_" << a.support[i].get_str() << ": rank " << a.component_ranks[i];
    if (it != a.components.end()) {
      os << ", nil " << verdict_text(it->second);
    }
    os << "\n";
  }
  os << "R_e nil: " << verdict_text(a.neutral_nil) << "\n";
  os << "nilpotency: " << verdict_text(a.nilpotency) << "\n";
  os << "nil: " << verdict_text(a.nil) << "\n";
  os << caps_text(a.caps) << "\n";
  return os.str();
}

std::string render_json(const RingAnalysis& a) {
  ordered_json comps = ordered_json::array();
  for (std::size_t i = 0; i < a.support.size(); ++i) {
    ordered_json c{{"degree", a.support[i].get_str()}, {"rank", a.component_ranks[i]}};
    const auto it = a.components.find(a.support[i]);
    if (it != a.components.end()) {
      c["nil"] = verdict_json(it->second);
    }
    comps.push_back(std::move(c));
  }
  ordered_json j{{"domain", a.domain},
                 {"rank", a.rank},
                 {"monoid", a.monoid},
                 {"support", support_strings(a.support)},
                 {"d", a.support.size()},
                 {"components", std::move(comps)},
                 {"neutral_nil", verdict_json(a.neutral_nil)},
                 {"nilpotency", verdict_json(a.nilpotency)},
                 {"nil", verdict_json(a.nil)},
                 {"caps", caps_json(a.caps)}};
  return j.dump(2) + "\n";
}

std::string render_text(const TheoremCheck& c, const Caps& caps) {
  std::ostringstream os;
  check_text(os, c);
  os << caps_text(caps) << "\n";
  return os.str();
}

std::string render_json(const TheoremCheck& c, const Caps& caps) {
  ordered_json j = check_json(c);
  j["caps"] = caps_json(caps);
  return j.dump(2) + "\n";
}

std::string render_text(const VerifierReport& r) {
  std::ostringstream os;
  os << "ring: rank " << r.rank << " over " << r.domain << ", support " << support_text(r.support) << " (d = "
     << r.support.size() << ")\n";
  os << "nilpotency: " << verdict_text(r.nilpotency) << "\n";
  os << "nil: " << verdict_text(r.nil) << "\n\n";
  for (const auto& c : r.checks) {
    check_text(os, c);
  }
  os << "\n" << caps_text(r.caps) << "\n";
  return os.str();
}

std::string render_json(const VerifierReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back(check_json(c));
  }
  ordered_json j{{"domain", r.domain},
                 {"rank", r.rank},
                 {"support", support_strings(r.support)},
                 {"d", r.support.size()},
                 {"nilpotency", verdict_json(r.nilpotency)},
                 {"nil", verdict_json(r.nil)},
                 {"checks", std::move(checks)},
                 {"caps", caps_json(r.caps)}};
  return j.dump(2) + "\n";
}

}  // namespace gradnil
