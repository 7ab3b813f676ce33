// Command-line front end for the gradnil library.
//
// Exit codes: 0 all PASS/PROVED, 1 REFUTED/FAIL, 2 CAPPED/UNKNOWN/NOT_APPLICABLE,
// 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gradnil/report.hpp"
#include "gradnil/specfile.hpp"
#include "gradnil/words.hpp"
#include "gradnil/zoo.hpp"

namespace {

using namespace gradnil;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUndecided = 2;
constexpr int kInputError = 3;

struct Global {
  bool json = false;
  bool timings = false;
  Caps caps;
};

int verdict_code(std::initializer_list<VerdictStatus> vs) {
  int code = kOk;
  for (auto v : vs) {
    if (v == VerdictStatus::Refuted) {
      return kRefuted;
    }
    if (v != VerdictStatus::Proved) {
      code = kUndecided;
    }
  }
  return code;
}

int check_code(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return kOk;
    case CheckStatus::Fail:
      return kRefuted;
    default:
      return kUndecided;
  }
}

VerifyOptions verify_options(const Global& g, const SpecDocument& doc) {
  VerifyOptions o;
  o.caps = g.caps;
  o.f = doc.f;
  o.congruence = doc.congruence;
  o.timings = g.timings;
  return o;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write " + path);
  }
  out << text;
}

std::vector<std::string> split_list(std::string s) {
  for (auto& c : s) {
    if (c == ',') {
      c = ' ';
    }
  }
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) {
    out.push_back(t);
  }
  return out;
}

std::vector<MonoidElement> parse_elements(const std::string& text) {
  std::vector<MonoidElement> out;
  for (const auto& t : split_list(text)) {
    mpz_class z;
    if (z.set_str(t, 10) != 0) {
      throw Error("expected an integer, got '" + t + "'");
    }
    out.push_back(z);
  }
  return out;
}

Monoid parse_monoid(const std::string& text) {
  if (text == "int" || text == "int-add") {
    return Monoid::integers();
  }
  const std::string prefix = "cyclic:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string n = text.substr(prefix.size());
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || n.size() > 6) {
      throw Error("bad cyclic order '" + n + "'");
    }
    return Monoid::cyclic(static_cast<std::uint32_t>(std::stoul(n)));
  }
  throw Error("monoid must be 'cyclic:N' or 'int'");
}

std::string decomposition_text(const DecompositionResult& r) {
  switch (r.kind) {
    case DecompositionResult::Kind::ForcedZero:
      return "FORCED_ZERO";
    case DecompositionResult::Kind::None:
      return "NONE";
    case DecompositionResult::Kind::Found: {
      std::string s = "FOUND cuts";
      for (auto c : r.decomposition.cuts) {
        s += " " + std::to_string(c);
      }
      return s;
    }
  }
  return "?";
}

int run_oracle_word(const Global& g, const Monoid& m, const DegreeSet& supp, std::size_t r,
                    const std::vector<MonoidElement>& letters) {
  const DegreeWord w(m, letters);
  const auto fast = neutral_decomposition(w, r, supp);
  const auto slow = oracle_decomposition(w, r, supp);
  const bool agree = (fast.kind == DecompositionResult::Kind::Found) == (slow.kind == DecompositionResult::Kind::Found);
  std::vector<std::size_t> gaps;
  if (fast.kind == DecompositionResult::Kind::Found) {
    gaps = gap_selection(fast.decomposition, supp.size());
  }
  if (g.json) {
    nlohmann::ordered_json j{{"constructive", decomposition_text(fast)},
                             {"oracle", decomposition_text(slow)},
                             {"agree", agree},
                             {"short_blocks", gaps}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "constructive: " << decomposition_text(fast) << "\n";
    std::cout << "oracle: " << decomposition_text(slow) << "\n";
    if (!gaps.empty()) {
      std::cout << "blocks with gap <= 2d:";
      for (auto b : gaps) {
        std::cout << " " << b;
      }
      std::cout << "\n";
    }
    std::cout << (agree ? "agree" : "DISAGREE") << "\n";
  }
  return agree ? kOk : kRefuted;
}

int run_oracle_exhaustive(const Global& g, const Monoid& m, const DegreeSet& supp, std::size_t r) {
  if (!m.is_table()) {
    throw Error("exhaustive mode needs a finite monoid");
  }
  const std::size_t len = r * supp.size();
  const std::size_t n = m.size();
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), n, len);
  if (total > g.caps.tuples) {
    throw Error("word count " + total.get_str() + " exceeds the tuple cap");
  }
  std::uint64_t found = 0, forced = 0, none = 0, disagree = 0;
  std::vector<std::uint32_t> digits(len, 0);
  for (std::uint64_t idx = 0; idx < total.get_ui(); ++idx) {
    std::vector<MonoidElement> letters;
    for (auto dgt : digits) {
      letters.emplace_back(dgt);
    }
    const DegreeWord w(m, letters);
    const auto fast = neutral_decomposition(w, r, supp);
    const auto slow = oracle_decomposition(w, r, supp);
    switch (fast.kind) {
      case DecompositionResult::Kind::Found:
        ++found;
        gap_selection(fast.decomposition, supp.size());
        break;
      case DecompositionResult::Kind::ForcedZero:
        ++forced;
        break;
      case DecompositionResult::Kind::None:
        ++none;
        break;
    }
    if ((fast.kind == DecompositionResult::Kind::Found) != (slow.kind == DecompositionResult::Kind::Found)) {
      ++disagree;
    }
    for (std::size_t i = 0; i < len && ++digits[i] == n; ++i) {
      digits[i] = 0;
    }
  }
  if (g.json) {
    nlohmann::ordered_json j{{"words", total.get_ui()}, {"found", found},       {"forced_zero", forced},
                             {"none", none},            {"disagreements", disagree}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "words " << total.get_str() << ": found " << found << ", forced zero " << forced << ", none "
              << none << ", disagreements " << disagree << "\n";
  }
  return disagree == 0 ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded-ring nil and nilpotency verifier"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_flag("--timings", g.timings, "Record per-check wall time");
  app.add_option("--elem-cap", g.caps.elements, "Largest element count enumerated exhaustively")
      ->envname("GRADNIL_ELEM_CAP");
  app.add_option("--tuple-cap", g.caps.tuples, "Largest tuple count enumerated exhaustively")
      ->envname("GRADNIL_TUPLE_CAP");
  app.add_option("--power-cap", g.caps.powers, "Longest power sequence followed")->envname("GRADNIL_POWER_CAP");
  app.add_option("--samples", g.caps.samples, "Samples drawn when enumeration is capped")
      ->envname("GRADNIL_SAMPLES");
  app.add_option("--seed", g.caps.seed, "Random seed for sampling")->envname("GRADNIL_SEED");

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "Support, components, nil and nilpotency verdicts");
  analyze->add_option("file", file, "Ring spec file")->required();

  std::string theorem;
  auto* verify = app.add_subcommand("verify", "Run one check");
  verify->add_option("id", theorem, "Check id, e.g. P3.03")->required();
  verify->add_option("file", file, "Ring spec file")->required();

  auto* report = app.add_subcommand("report", "Run every check");
  report->add_option("file", file, "Ring spec file")->required();

  auto* oracle = app.add_subcommand("oracle", "Cross-check word decompositions");
  auto* lemma = oracle->add_subcommand("lemma-3-5", "Neutral-block decomposition against brute force");
  oracle->require_subcommand(1);
  std::string monoid_text = "cyclic:2";
  std::string support_text;
  std::string word_text;
  std::size_t r = 2;
  bool exhaustive = false;
  lemma->add_option("--monoid", monoid_text, "cyclic:N or int");
  lemma->add_option("--support", support_text, "Support elements, comma or space separated")->required();
  lemma->add_option("--r", r, "Number of neutral blocks");
  lemma->add_option("--word", word_text, "Degree word");
  lemma->add_flag("--exhaustive", exhaustive, "Every word of length r*|support|");

  auto* construct = app.add_subcommand("construct", "Build derived rings");
  auto* elementary = construct->add_subcommand("elementary", "M_n(R) with the elementary Z_n-grading");
  construct->require_subcommand(1);
  std::size_t n = 2;
  std::string out_path;
  elementary->add_option("--n", n, "Matrix size");
  elementary->add_option("file", file, "Ring spec file")->required();
  elementary->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* zoo_cmd = app.add_subcommand("zoo", "Emit a spec file for an example ring");
  std::string name;
  std::size_t zn = 3, zk = 2;
  unsigned long zp = 2;
  std::string domain = "F2";
  zoo_cmd->add_option("name", name, "sut, nagata, grassmann, two-z, poly, or list")->required();
  zoo_cmd->add_option("--n", zn, "Matrix size (sut) or truncation degree (poly)");
  zoo_cmd->add_option("--k", zk, "Generator count (nagata, grassmann) or exponent (two-z)");
  zoo_cmd->add_option("--p", zp, "Prime (nagata)");
  zoo_cmd->add_option("--domain", domain, "Coefficient domain: Zm, Fp or Q");
  zoo_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) {
      const SpecDocument doc = load_spec(file);
      const RingAnalysis a = gradnil::analyze(doc.grading(), g.caps);
      std::cout << (g.json ? render_json(a) : render_text(a));
      return verdict_code({a.nil.status, a.nilpotency.status});
    }
    if (*verify) {
      const auto id = parse_theorem_id(theorem);
      if (!id) {
        std::cerr << "unknown check id '" << theorem << "'\n";
        return kInputError;
      }
      const SpecDocument doc = load_spec(file);
      const TheoremCheck c = gradnil::verify(*id, doc.grading(), verify_options(g, doc));
      std::cout << (g.json ? render_json(c, g.caps) : render_text(c, g.caps));
      return check_code(c.status);
    }
    if (*report) {
      const SpecDocument doc = load_spec(file);
      const VerifierReport rep = full_report(doc.grading(), verify_options(g, doc));
      std::cout << (g.json ? render_json(rep) : render_text(rep));
      int code = kOk;
      for (const auto& c : rep.checks) {
        if (c.status == CheckStatus::Fail) {
          return kRefuted;
        }
        if (c.status == CheckStatus::Capped) {
          code = kUndecided;
        }
      }
      return code;
    }
    if (*lemma) {
      const Monoid m = parse_monoid(monoid_text);
      const DegreeSet supp = make_degree_set(parse_elements(support_text));
      if (exhaustive) {
        return run_oracle_exhaustive(g, m, supp, r);
      }
      if (word_text.empty()) {
        std::cerr << "give --word or --exhaustive\n";
        return kInputError;
      }
      return run_oracle_word(g, m, supp, r, parse_elements(word_text));
    }
    if (*elementary) {
      const SpecDocument doc = load_spec(file);
      write_output(emit_spec(elementary_grading(doc.ring, n)), out_path);
      return kOk;
    }
    if (*zoo_cmd) {
      if (name == "list") {
        for (const auto& e : zoo::catalog()) {
          std::cout << e.name << (e.constructible ? "" : " (not constructible)") << ": " << e.note << "\n";
        }
        return kOk;
      }
      const auto entry = zoo::lookup(name);
      if (!entry) {
        std::cerr << "unknown example '" << name << "'\n";
        return kInputError;
      }
      if (!entry->constructible) {
        std::cerr << name << ": " << entry->note << "\n";
        return kUndecided;
      }
      const CoeffDomain dom = CoeffDomain::parse(domain);
      std::string text;
      if (name == "sut") {
        text = emit_spec(zoo::sut(zn, dom));
      } else if (name == "nagata") {
        text = emit_spec(SpecDocument{zoo::truncated_nagata(zk, zp), std::nullopt, std::nullopt, std::nullopt,
                                      std::nullopt});
      } else if (name == "grassmann") {
        text = emit_spec(zoo::grassmann_star(zk, dom));
      } else if (name == "two-z") {
        text = emit_spec(SpecDocument{zoo::two_z_2k(static_cast<unsigned>(zk)), std::nullopt, std::nullopt,
                                      std::nullopt, std::nullopt});
      } else if (name == "poly") {
        text = emit_spec(zoo::truncated_poly_positive(zn, dom));
      }
      write_output(text, out_path);
      return kOk;
    }
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kRefuted;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
