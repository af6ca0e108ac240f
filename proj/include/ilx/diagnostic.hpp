#ifndef ILX_DIAGNOSTIC_HPP
#define ILX_DIAGNOSTIC_HPP

#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ilx {

struct SourceSpan {
  std::string file;
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { Error, Warning };

// Closed catalog of diagnostic codes.
namespace codes {
inline constexpr std::string_view kSyntax = "E001";
inline constexpr std::string_view kUnknownClass = "E010";
inline constexpr std::string_view kUnknownRelation = "E011";
inline constexpr std::string_view kSubclassCycle = "E020";
inline constexpr std::string_view kSubrelationCycle = "E021";
inline constexpr std::string_view kRangeWidening = "E030";
inline constexpr std::string_view kCardinalityRelaxed = "E031";
inline constexpr std::string_view kInheritanceConflict = "E032";
inline constexpr std::string_view kDomainRangeClash = "E033";
inline constexpr std::string_view kRightSideChain = "E040";
inline constexpr std::string_view kShortChain = "E041";
inline constexpr std::string_view kDuplicate = "E050";
inline constexpr std::string_view kVoidClass = "W060";
inline constexpr std::string_view kUnusedRelation = "W061";
inline constexpr std::string_view kRedundantRestatement = "W062";
inline constexpr std::string_view kGraphUnknownClass = "E100";
inline constexpr std::string_view kGraphUnknownRelation = "E101";
inline constexpr std::string_view kMissingFiller = "E110";
inline constexpr std::string_view kFillerType = "E111";
inline constexpr std::string_view kInternal = "E199";
}  // namespace codes

std::span<const std::string_view> diagnostic_catalog();
bool is_catalogued(std::string_view code);

struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  std::string message;
  std::optional<SourceSpan> span;
  std::string subject;

  static Diagnostic error(std::string_view code, std::string subject, std::string message,
                          std::optional<SourceSpan> span = std::nullopt);
  static Diagnostic warning(std::string_view code, std::string subject, std::string message,
                            std::optional<SourceSpan> span = std::nullopt);

  bool is_error() const { return severity == Severity::Error; }

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

bool has_errors(std::span<const Diagnostic> diagnostics);

// Orders by file, line, column, code; subject and message break ties so the
// order is total.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

// One line per finding: level, code, location, subject, then an em dash and the message.
std::string render(const Diagnostic& d);
void render_all(std::ostream& out, std::span<const Diagnostic> diagnostics);

// Thrown on API contract violations (caller bugs such as querying an
// undeclared name). Carries the diagnostic that describes the violation.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(Diagnostic d);
  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

}  // namespace ilx

#endif  // ILX_DIAGNOSTIC_HPP
