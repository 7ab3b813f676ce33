#include "gradnil/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace gradnil {

namespace {

struct Line {
  std::size_t no;
  std::string key;
  std::string value;
};

struct Section {
  std::size_t header = 0;
  std::vector<Line> lines;

  std::vector<const Line*> all(std::string_view key) const {
    std::vector<const Line*> out;
    for (const auto& l : lines) {
      if (l.key == key) {
        out.push_back(&l);
      }
    }
    return out;
  }
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> tokens(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; is >> t;) {
    out.push_back(t);
  }
  return out;
}

const std::map<std::string, std::vector<std::string>, std::less<>> kKeys = {
    {"monoid", {"kind", "size", "row"}},
    {"ring", {"domain", "rank", "names", "sc"}},
    {"grading", {"deg"}},
    {"action", {"kind", "size", "row", "matrix"}},
    {"fmap", {"constant", "pair", "default", "rule", "candidates", "variant"}},
    {"congruence", {"class"}},
};

class Parser {
 public:
  explicit Parser(std::string_view text) { split(text); }

  SpecDocument build() {
    check();
    std::optional<Monoid> monoid = build_monoid();
    Ring ring = build_ring();
    std::optional<GradedRing> graded;
    if (has("grading")) {
      if (!monoid) {
        fail(sections_["grading"].header, "[grading] needs a [monoid] section");
      }
      check();
      graded = GradedRing(ring, *monoid, build_degrees(ring, *monoid));
    } else if (monoid) {
      fail(sections_["monoid"].header, "[monoid] given without [grading]");
    }
    check();
    std::optional<FContext> f = build_fmap(ring);
    std::optional<Congruence> cong;
    if (has("congruence")) {
      if (!monoid || !monoid->is_table()) {
        fail(sections_["congruence"].header, "[congruence] needs a table monoid");
      }
      check();
      cong = build_congruence(*monoid);
    }
    check();
    return SpecDocument{std::move(ring), std::move(monoid), std::move(graded), std::move(f), std::move(cong)};
  }

 private:
  std::map<std::string, Section, std::less<>> sections_;
  std::vector<Diagnostic> diags_;

  void fail(std::size_t line, std::string msg) { diags_.push_back({line, std::move(msg)}); }
  void check() {
    if (!diags_.empty()) {
      throw SpecError(diags_);
    }
  }
  bool has(std::string_view s) const { return sections_.count(s) != 0; }

  void split(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string raw;
    std::size_t no = 0;
    Section* cur = nullptr;
    while (std::getline(is, raw)) {
      ++no;
      const auto hash = raw.find('#');
      // '#' starts a comment unless it is a table-actor prefix "#k".
      std::string line = raw;
      if (hash != std::string::npos && (hash == 0 || raw[hash - 1] == ' ' || raw[hash - 1] == '\t') &&
          (hash + 1 >= raw.size() || !std::isdigit(static_cast<unsigned char>(raw[hash + 1])))) {
        line = raw.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      if (line.front() == '[') {
        if (line.back() != ']') {
          fail(no, "unterminated section header");
          continue;
        }
        const std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
        if (!kKeys.count(name)) {
          fail(no, "unknown section [" + name + "]");
          cur = nullptr;
          continue;
        }
        if (sections_.count(name)) {
          fail(no, "duplicate section [" + name + "]");
        }
        cur = &sections_[name];
        cur->header = no;
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        fail(no, "expected 'key = value'");
        continue;
      }
      if (!cur) {
        fail(no, "entry outside a known section");
        continue;
      }
      Line l{no, trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1))};
      std::string section_name;
      for (const auto& [n, s] : sections_) {
        if (&s == cur) {
          section_name = n;
        }
      }
      const auto& keys = kKeys.at(section_name);
      if (std::find(keys.begin(), keys.end(), l.key) == keys.end()) {
        fail(no, "unknown key '" + l.key + "' in [" + section_name + "]");
        continue;
      }
      cur->lines.push_back(std::move(l));
    }
    if (!has("ring")) {
      fail(no, "missing [ring] section");
    }
  }

  const Line* single(const Section& s, std::string_view key, bool required, std::string_view section) {
    auto v = s.all(key);
    if (v.size() > 1) {
      fail(v[1]->no, "duplicate key '" + std::string(key) + "'");
    }
    if (v.empty()) {
      if (required) {
        fail(s.header, "[" + std::string(section) + "] needs '" + std::string(key) + "'");
      }
      return nullptr;
    }
    return v.front();
  }

  std::optional<std::uint64_t> uint(const std::string& t, std::size_t line) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 18) {
      fail(line, "expected a nonnegative integer, got '" + t + "'");
      return std::nullopt;
    }
    return std::stoull(t);
  }

  std::optional<MonoidElement> integer(const std::string& t, std::size_t line) {
    mpz_class z;
    if (t.empty() || z.set_str(t, 10) != 0) {
      fail(line, "expected an integer, got '" + t + "'");
      return std::nullopt;
    }
    return z;
  }

  std::optional<Scalar> scalar(const CoeffDomain& dom, const std::string& t, std::size_t line) {
    try {
      return dom.parse_scalar(t);
    } catch (const Error& e) {
      fail(line, e.what());
      return std::nullopt;
    }
  }

  std::vector<std::vector<std::uint32_t>> rows(const Section& s, std::size_t n) {
    std::vector<std::vector<std::uint32_t>> t;
    for (const Line* l : s.all("row")) {
      std::vector<std::uint32_t> row;
      for (const auto& tok : tokens(l->value)) {
        if (auto v = uint(tok, l->no)) {
          row.push_back(static_cast<std::uint32_t>(*v));
        }
      }
      if (row.size() != n) {
        fail(l->no, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
      }
      t.push_back(std::move(row));
    }
    if (t.size() != n) {
      fail(s.header, "expected " + std::to_string(n) + " rows, got " + std::to_string(t.size()));
    }
    return t;
  }

  std::optional<Monoid> build_monoid() {
    if (!has("monoid")) {
      return std::nullopt;
    }
    const Section& s = sections_["monoid"];
    const Line* kind = single(s, "kind", true, "monoid");
    if (!kind) {
      check();
    }
    if (kind->value == "int-add") {
      if (!s.all("row").empty() || !s.all("size").empty()) {
        fail(kind->no, "int-add monoid takes no table");
      }
      check();
      return Monoid::integers();
    }
    if (kind->value != "table") {
      fail(kind->no, "monoid kind must be 'table' or 'int-add'");
      check();
    }
    const Line* size = single(s, "size", true, "monoid");
    check();
    auto n = uint(size->value, size->no);
    check();
    auto t = rows(s, *n);
    check();
    return Monoid::from_table(std::move(t));
  }

  Ring build_ring() {
    const Section& s = sections_["ring"];
    const Line* dom_line = single(s, "domain", true, "ring");
    const Line* rank_line = single(s, "rank", true, "ring");
    check();
    std::optional<CoeffDomain> dom;
    try {
      dom = CoeffDomain::parse(dom_line->value);
    } catch (const Error& e) {
      fail(dom_line->no, e.what());
    }
    auto rank = uint(rank_line->value, rank_line->no);
    check();
    std::vector<std::string> names;
    if (const Line* l = single(s, "names", false, "ring")) {
      names = tokens(l->value);
      if (names.size() != *rank) {
        fail(l->no, "expected " + std::to_string(*rank) + " names, got " + std::to_string(names.size()));
      }
    }
    std::vector<StructureConstant> sc;
    for (const Line* l : s.all("sc")) {
      const auto t = tokens(l->value);
      if (t.size() != 4) {
        fail(l->no, "structure constant needs 'i j k coeff'");
        continue;
      }
      auto i = uint(t[0], l->no);
      auto j = uint(t[1], l->no);
      auto k = uint(t[2], l->no);
      auto c = scalar(*dom, t[3], l->no);
      if (!i || !j || !k || !c) {
        continue;
      }
      if (*i >= *rank || *j >= *rank || *k >= *rank) {
        fail(l->no, "basis index out of range");
        continue;
      }
      sc.push_back({*i, *j, *k, *c});
    }
    check();
    try {
      return Ring(*dom, *rank, std::move(names), std::move(sc));
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& e) {
      fail(s.header, e.what());
      check();
      throw;
    }
  }

  std::vector<MonoidElement> build_degrees(const Ring& r, const Monoid& m) {
    const Section& s = sections_["grading"];
    std::vector<std::optional<MonoidElement>> deg(r.rank());
    for (const Line* l : s.all("deg")) {
      const auto t = tokens(l->value);
      if (t.size() != 2) {
        fail(l->no, "degree needs 'i g'");
        continue;
      }
      auto i = uint(t[0], l->no);
      auto g = integer(t[1], l->no);
      if (!i || !g) {
        continue;
      }
      if (*i >= r.rank()) {
        fail(l->no, "basis index out of range");
        continue;
      }
      if (deg[*i]) {
        fail(l->no, "basis vector " + std::to_string(*i) + " given two degrees");
        continue;
      }
      if (!m.contains(*g)) {
        fail(l->no, "degree " + g->get_str() + " is not a monoid element");
        continue;
      }
      deg[*i] = *g;
    }
    std::vector<MonoidElement> out;
    for (std::size_t i = 0; i < deg.size(); ++i) {
      if (!deg[i]) {
        fail(s.header, "basis vector " + std::to_string(i) + " has no degree");
        continue;
      }
      out.push_back(*deg[i]);
    }
    check();
    return out;
  }

  std::optional<Actor> actor(const CoeffDomain& dom, bool linear, const std::string& t, std::size_t line,
                             std::size_t size) {
    if (linear) {
      if (t.size() < 2 || t[0] != '#') {
        fail(line, "linear actions take actors '#k'");
        return std::nullopt;
      }
      auto k = uint(t.substr(1), line);
      if (!k) {
        return std::nullopt;
      }
      if (*k >= size) {
        fail(line, "actor " + t + " outside the semigroup");
        return std::nullopt;
      }
      return Actor::id(static_cast<std::uint32_t>(*k));
    }
    auto s = scalar(dom, t, line);
    if (!s) {
      return std::nullopt;
    }
    return Actor::scalar(*s);
  }

  std::optional<Vector> coords(const Ring& r, const std::string& text, std::size_t line) {
    const auto t = tokens(text);
    if (t.size() != r.rank()) {
      fail(line, "expected " + std::to_string(r.rank()) + " coordinates");
      return std::nullopt;
    }
    Vector v;
    for (const auto& x : t) {
      auto s = scalar(r.domain(), x, line);
      if (!s) {
        return std::nullopt;
      }
      v.push_back(*s);
    }
    return v;
  }

  std::optional<Action> build_action(const Ring& r) {
    if (!has("action")) {
      return Action::scalar(r);
    }
    const Section& s = sections_["action"];
    const Line* kind = single(s, "kind", true, "action");
    check();
    if (kind->value == "scalar") {
      return Action::scalar(r);
    }
    if (kind->value != "linear") {
      fail(kind->no, "action kind must be 'scalar' or 'linear'");
      return std::nullopt;
    }
    const Line* size = single(s, "size", true, "action");
    check();
    auto n = uint(size->value, size->no);
    check();
    auto t = rows(s, *n);
    std::vector<std::vector<Vector>> mats(*n, std::vector<Vector>(r.rank(), Vector(r.rank(), Scalar(0))));
    for (const Line* l : s.all("matrix")) {
      const auto tok = tokens(l->value);
      if (tok.size() != 4) {
        fail(l->no, "matrix entry needs 'l k i coeff'");
        continue;
      }
      auto a = uint(tok[0], l->no);
      auto k = uint(tok[1], l->no);
      auto i = uint(tok[2], l->no);
      auto c = scalar(r.domain(), tok[3], l->no);
      if (!a || !k || !i || !c) {
        continue;
      }
      if (*a >= *n || *k >= r.rank() || *i >= r.rank()) {
        fail(l->no, "matrix index out of range");
        continue;
      }
      mats[*a][*k][*i] = *c;
    }
    check();
    return Action::linear(r, SemigroupTable::from_table(std::move(t)), std::move(mats));
  }

  std::optional<FContext> build_fmap(const Ring& r) {
    if (!has("fmap")) {
      if (has("action")) {
        fail(sections_["action"].header, "[action] given without [fmap]");
      }
      return std::nullopt;
    }
    std::optional<Action> act = build_action(r);
    check();
    const bool linear = act->kind() == Action::Kind::Linear;
    const std::size_t size = linear ? act->semigroup()->size() : 0;
    const Section& s = sections_["fmap"];
    const CoeffDomain& dom = r.domain();

    CommutatorVariant variant = CommutatorVariant::Standard;
    if (const Line* l = single(s, "variant", false, "fmap")) {
      if (l->value == "weak") {
        variant = CommutatorVariant::Weak;
      } else if (l->value != "standard") {
        fail(l->no, "variant must be 'standard' or 'weak'");
      }
    }
    const Line* constant = single(s, "constant", false, "fmap");
    const Line* rule = single(s, "rule", false, "fmap");
    const auto pairs = s.all("pair");
    const Line* fallback = single(s, "default", false, "fmap");
    const int forms = (constant ? 1 : 0) + (rule ? 1 : 0) + (!pairs.empty() || fallback ? 1 : 0);
    if (forms != 1) {
      fail(s.header, "[fmap] needs exactly one of 'constant', 'rule', or 'pair'/'default' entries");
      check();
    }

    std::optional<FMap> f;
    if (constant) {
      if (auto a = actor(dom, linear, constant->value, constant->no, size)) {
        f = FMap::constant(*a);
      }
    } else if (rule) {
      if (rule->value != "pointwise") {
        fail(rule->no, "only 'rule = pointwise' is supported");
      } else if (linear) {
        fail(rule->no, "pointwise rules need a scalar action");
      }
      std::vector<Scalar> cands;
      if (const Line* c = single(s, "candidates", false, "fmap")) {
        for (const auto& t : tokens(c->value)) {
          if (auto x = scalar(dom, t, c->no)) {
            cands.push_back(*x);
          }
        }
      } else {
        cands = default_scalar_candidates(dom);
      }
      f = FMap::pointwise(std::move(cands));
    } else {
      std::vector<std::pair<std::pair<Vector, Vector>, Actor>> entries;
      for (const Line* l : pairs) {
        const auto semi = l->value.find(';');
        const auto arrow = l->value.find("->");
        if (semi == std::string::npos || arrow == std::string::npos || arrow < semi) {
          fail(l->no, "pair needs 'a-coords ; b-coords -> actor'");
          continue;
        }
        auto a = coords(r, l->value.substr(0, semi), l->no);
        auto b = coords(r, l->value.substr(semi + 1, arrow - semi - 1), l->no);
        auto v = actor(dom, linear, trim(l->value.substr(arrow + 2)), l->no, size);
        if (a && b && v) {
          entries.push_back({{std::move(*a), std::move(*b)}, std::move(*v)});
        }
      }
      std::optional<Actor> fb;
      if (fallback) {
        fb = actor(dom, linear, fallback->value, fallback->no, size);
      }
      f = FMap::table(std::move(entries), fb);
    }
    check();
    return FContext{f->with_variant(variant), *act};
  }

  Congruence build_congruence(const Monoid& m) {
    const Section& s = sections_["congruence"];
    std::vector<std::vector<std::uint32_t>> classes;
    for (const Line* l : s.all("class")) {
      std::vector<std::uint32_t> cls;
      for (const auto& t : tokens(l->value)) {
        if (auto v = uint(t, l->no)) {
          cls.push_back(static_cast<std::uint32_t>(*v));
        }
      }
      classes.push_back(std::move(cls));
    }
    check();
    return Congruence(m, std::move(classes));
  }
};

void write_rows(const std::vector<std::vector<std::uint32_t>>& t, std::ostringstream& os) {
  for (const auto& row : t) {
    os << "row =";
    for (auto x : row) {
      os << ' ' << x;
    }
    os << '\n';
  }
}

std::string actor_text(const CoeffDomain& dom, const Actor& a) {
  if (a.parts.size() != 1) {
    throw Error("multi-part actors cannot be written to a spec file");
  }
  if (const auto* id = std::get_if<std::uint32_t>(&a.parts[0])) {
    return "#" + std::to_string(*id);
  }
  return dom.format(std::get<Scalar>(a.parts[0]));
}

std::string coords_text(const CoeffDomain& dom, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? " " : "") + dom.format(v[i]);
  }
  return out;
}

}  // namespace

SpecError::SpecError(std::vector<Diagnostic> diagnostics)
    : Error([&] {
        std::string msg;
        for (const auto& d : diagnostics) {
          msg += (msg.empty() ? "" : "\n") + std::string("line ") + std::to_string(d.line) + ": " + d.message;
        }
        return msg;
      }()),
      diagnostics_(std::move(diagnostics)) {}

SpecDocument parse_spec(std::string_view text) { return Parser(text).build(); }

SpecDocument load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string emit_spec(const SpecDocument& doc) {
  std::ostringstream os;
  const Ring& r = doc.ring;
  const CoeffDomain& dom = r.domain();
  const Monoid* m = doc.graded ? &doc.graded->monoid() : doc.monoid ? &*doc.monoid : nullptr;
  if (m && doc.graded) {
    os << "[monoid]\n";
    if (m->is_table()) {
      os << "kind = table\nsize = " << m->size() << '\n';
      write_rows(m->table(), os);
    } else {
      os << "kind = int-add\n";
    }
    os << '\n';
  }
  os << "[ring]\ndomain = " << dom.name() << "\nrank = " << r.rank() << '\n';
  if (r.rank() > 0) {
    os << "names =";
    for (const auto& n : r.names()) {
      os << ' ' << n;
    }
    os << '\n';
  }
  for (const auto& c : r.structure_constants()) {
    os << "sc = " << c.left << ' ' << c.right << ' ' << c.target << ' ' << dom.format(c.coeff) << '\n';
  }
  if (doc.graded) {
    os << "\n[grading]\n";
    for (std::size_t i = 0; i < r.rank(); ++i) {
      os << "deg = " << i << ' ' << doc.graded->degree(i).get_str() << '\n';
    }
  }
  if (doc.f) {
    const Action& act = doc.f->act;
    if (act.kind() == Action::Kind::Linear) {
      os << "\n[action]\nkind = linear\nsize = " << act.semigroup()->size() << '\n';
      write_rows(act.semigroup()->table(), os);
      for (std::size_t l = 0; l < act.matrices().size(); ++l) {
        const auto& mat = act.matrices()[l];
        for (std::size_t k = 0; k < mat.size(); ++k) {
          for (std::size_t i = 0; i < mat[k].size(); ++i) {
            if (sgn(mat[k][i]) != 0) {
              os << "matrix = " << l << ' ' << k << ' ' << i << ' ' << dom.format(mat[k][i]) << '\n';
            }
          }
        }
      }
    } else if (act.kind() == Action::Kind::Diagonal) {
      throw Error("diagonal actions cannot be written to a spec file");
    }
    const FMap& f = doc.f->f;
    os << "\n[fmap]\n";
    switch (f.kind()) {
      case FMap::Kind::Constant:
        os << "constant = " << actor_text(dom, *f.constant_value()) << '\n';
        break;
      case FMap::Kind::Pointwise:
        os << "rule = pointwise\ncandidates =";
        for (const auto& c : f.candidates()) {
          os << ' ' << dom.format(c);
        }
        os << '\n';
        break;
      case FMap::Kind::Table:
        for (const auto& [key, value] : f.entries()) {
          os << "pair = " << coords_text(dom, key.first) << " ; " << coords_text(dom, key.second) << " -> "
             << actor_text(dom, value) << '\n';
        }
        if (f.constant_value()) {
          os << "default = " << actor_text(dom, *f.constant_value()) << '\n';
        }
        break;
      case FMap::Kind::DiagonalLift:
        throw Error("lifted maps cannot be written to a spec file");
    }
    if (f.variant() == CommutatorVariant::Weak) {
      os << "variant = weak\n";
    }
  }
  if (doc.congruence) {
    os << "\n[congruence]\n";
    for (const auto& cls : doc.congruence->classes()) {
      os << "class =";
      for (auto g : cls) {
        os << ' ' << g;
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string emit_spec(const GradedRing& gr) {
  return emit_spec(SpecDocument{gr.ring(), gr.monoid(), gr, std::nullopt, std::nullopt});
}

}  // namespace gradnil
