#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradnil/fcomm.hpp"
#include "gradnil/grading.hpp"

namespace gradnil {

/// Contents of a ring spec file. Sections: [monoid], [ring], [grading],
/// [action], [fmap], [congruence]; only [ring] is required.
struct SpecDocument {
  Ring ring;
  std::optional<Monoid> monoid;
  std::optional<GradedRing> graded;
  std::optional<FContext> f;
  std::optional<Congruence> congruence;

  /// The stated grading, or the trivial one.
  GradedRing grading() const { return graded ? *graded : trivial_grading(ring); }
};

struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

/// Syntax errors, each with its line number.
class SpecError : public Error {
 public:
  explicit SpecError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Throws SpecError on malformed input and ValidationError when the
/// objects described violate an axiom.
SpecDocument parse_spec(std::string_view text);
SpecDocument load_spec(const std::filesystem::path& path);

std::string emit_spec(const SpecDocument& doc);
std::string emit_spec(const GradedRing& gr);

}  // namespace gradnil
