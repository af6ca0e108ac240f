#ifndef ILX_PARSER_HPP
#define ILX_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ilx/ast.hpp"
#include "ilx/diagnostic.hpp"

namespace ilx {

class LexiconModel;

struct ParseResult {
  std::vector<Statement> statements;
  std::vector<Diagnostic> diagnostics;
};

// Parses `.ilx` text. Malformed statements are reported (E001, E040, E041)
// and skipped; parsing continues with the next statement.
ParseResult parse(std::string_view text, std::string file = "<input>");

// Canonical `.ilx` rendering of a model: prefixes, relations in declaration
// order, chain axioms, then classes in declaration order with slots sorted
// by relation name. Inherited slots that are not restated are omitted.
std::string pretty_print(const LexiconModel& model);

}  // namespace ilx

#endif  // ILX_PARSER_HPP
