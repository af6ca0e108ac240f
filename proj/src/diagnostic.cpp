#include "ilx/diagnostic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <tuple>

#include "ilx/qid.hpp"

namespace ilx {

namespace {

constexpr std::array kCatalog = {
    codes::kSyntax,           codes::kUnknownClass,         codes::kUnknownRelation,
    codes::kSubclassCycle,    codes::kSubrelationCycle,     codes::kRangeWidening,
    codes::kCardinalityRelaxed, codes::kInheritanceConflict, codes::kDomainRangeClash,
    codes::kRightSideChain,   codes::kShortChain,           codes::kDuplicate,
    codes::kVoidClass,        codes::kUnusedRelation,       codes::kRedundantRestatement,
    codes::kGraphUnknownClass, codes::kGraphUnknownRelation, codes::kMissingFiller,
    codes::kFillerType,       codes::kInternal,
};

}  // namespace

bool is_valid_local_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  });
}

std::span<const std::string_view> diagnostic_catalog() { return kCatalog; }

bool is_catalogued(std::string_view code) {
  return std::find(kCatalog.begin(), kCatalog.end(), code) != kCatalog.end();
}

Diagnostic Diagnostic::error(std::string_view code, std::string subject, std::string message,
                             std::optional<SourceSpan> span) {
  return {std::string(code), Severity::Error, std::move(message), std::move(span), std::move(subject)};
}

Diagnostic Diagnostic::warning(std::string_view code, std::string subject, std::string message,
                               std::optional<SourceSpan> span) {
  return {std::string(code), Severity::Warning, std::move(message), std::move(span),
          std::move(subject)};
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  auto key = [](const Diagnostic& d) {
    // Spanless findings sort after located ones.
    const bool located = d.span.has_value();
    return std::make_tuple(!located, located ? d.span->file : std::string(),
                           located ? d.span->line : 0, located ? d.span->column : 0, d.code,
                           d.subject, d.message);
  };
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [&](const Diagnostic& a, const Diagnostic& b) { return key(a) < key(b); });
}

std::string render(const Diagnostic& d) {
  std::ostringstream os;
  os << (d.is_error() ? "ERROR" : "WARNING") << ' ' << d.code << ' ';
  if (d.span) {
    os << d.span->file << ':' << d.span->line << ':' << d.span->column;
  } else {
    os << "-:0:0";
  }
  os << ' ' << (d.subject.empty() ? "-" : d.subject) << " — " << d.message;
  return os.str();
}

void render_all(std::ostream& out, std::span<const Diagnostic> diagnostics) {
  for (const auto& d : diagnostics) out << render(d) << '\n';
}

ContractError::ContractError(Diagnostic d)
    : std::runtime_error(render(d)), diagnostic_(std::move(d)) {}

}  // namespace ilx
