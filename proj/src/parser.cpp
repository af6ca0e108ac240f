#include "ilx/parser.hpp"

#include <optional>
#include <sstream>

#include "lexer.hpp"

namespace ilx {

namespace {

using detail::Tok;
using detail::Token;

struct SyntaxFailure {
  Diagnostic diagnostic;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file)
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  ParseResult run() {
    ParseResult result;
    for (;;) {
      skip_newlines();
      if (peek().kind == Tok::End) break;
      const std::size_t start = pos_;
      try {
        result.statements.push_back(statement());
      } catch (const SyntaxFailure& f) {
        result.diagnostics.push_back(f.diagnostic);
        recover(start);
      }
    }
    return result;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw) const { return at(Tok::Name) && peek().text == kw; }

  void skip_newlines() {
    while (at(Tok::Newline)) take();
  }

  SourceSpan span_of(const Token& t) const {
    if (t.kind == Tok::End) {
      // Point at the last real character.
      for (std::size_t i = tokens_.size() - 1; i-- > 0;) return span_of(tokens_[i]);
    }
    return {file_, t.line, t.column, t.length};
  }

  SourceSpan span_between(const Token& first, const Token& last) const {
    SourceSpan s = span_of(first);
    if (last.line == first.line && last.kind != Tok::End)
      s.length = std::max(1, last.column + last.length - first.column);
    return s;
  }

  [[noreturn]] void fail(std::string_view code, const Token& at_token, std::string message) const {
    throw SyntaxFailure{Diagnostic::error(code, at_token.text, std::move(message), span_of(at_token))};
  }

  [[noreturn]] void unexpected(const Token& t, std::string_view wanted) const {
    std::ostringstream os;
    os << "expected " << wanted << ", found " << detail::describe(t.kind);
    if (t.kind == Tok::Name || t.kind == Tok::Number || t.kind == Tok::Invalid)
      os << " '" << t.text << "'";
    fail(codes::kSyntax, t, os.str());
  }

  const Token& expect(Tok k, std::string_view wanted) {
    if (!at(k)) unexpected(peek(), wanted);
    return take();
  }

  Name name(std::string_view wanted) {
    const Token& t = expect(Tok::Name, wanted);
    return {t.text, span_of(t)};
  }

  void end_of_statement() {
    if (!at(Tok::Newline) && !at(Tok::End)) unexpected(peek(), "end of line");
  }

  // Skips the rest of a malformed statement: to the end of its line, or past
  // the closing brace of a block it opened.
  void recover(std::size_t start) {
    int depth = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      if (tokens_[i].kind == Tok::LBrace) ++depth;
      if (tokens_[i].kind == Tok::RBrace) --depth;
    }
    while (!at(Tok::End)) {
      const Tok k = peek().kind;
      if (k == Tok::Newline && depth <= 0) break;
      if (k == Tok::LBrace) ++depth;
      if (k == Tok::RBrace) --depth;
      take();
    }
  }

  Statement statement() {
    const Token& first = peek();
    if (at(Tok::AtPrefix)) return prefix_statement();
    if (at_keyword("rel")) return relation_statement();
    if (at_keyword("class")) return class_statement();
    if (at_keyword("graph")) return graph_statement();
    unexpected(first, "'@prefix', 'rel', 'class' or 'graph'");
  }

  Statement prefix_statement() {
    const Token& kw = take();
    PrefixDecl decl;
    decl.label = name("prefix label");
    expect(Tok::Colon, "':'");
    const Token& iri = expect(Tok::Iri, "'<IRI>'");
    if (iri.text.empty() || (iri.text.back() != '#' && iri.text.back() != '/'))
      fail(codes::kSyntax, iri, "namespace IRI must end in '#' or '/'");
    decl.iri = iri.text;
    end_of_statement();
    return {std::move(decl), span_between(kw, iri)};
  }

  Statement relation_statement() {
    const Token& kw = take();
    RelationDecl decl;
    decl.head.push_back(name("relation name"));
    while (at(Tok::Slash)) {
      const Token& slash = take();
      if (!at(Tok::Name)) fail(codes::kShortChain, slash, "property chain needs a relation after '/'");
      decl.head.push_back(name("relation name"));
    }
    const Token* last = &tokens_[pos_ - 1];
    while (at(Tok::Less)) {
      take();
      decl.supers.push_back(name("relation name"));
      last = &tokens_[pos_ - 1];
      if (at(Tok::Slash))
        fail(codes::kRightSideChain, tokens_[pos_ - 1],
             "property chain may only appear left of the first '<'");
    }
    if (decl.head.size() >= 2 && decl.supers.empty())
      fail(codes::kSyntax, peek(), "property chain needs a super-relation ('<')");
    end_of_statement();
    return {std::move(decl), span_between(kw, *last)};
  }

  Statement class_statement() {
    const Token& kw = take();
    ClassDecl decl;
    decl.name = name("class name");
    if (at(Tok::Less)) {
      take();
      decl.parents.push_back(name("parent class"));
      while (at(Tok::Amp)) {
        take();
        decl.parents.push_back(name("parent class"));
      }
    }
    if (at(Tok::Equals)) {
      const Token& eq = take();
      if (!decl.parents.empty())
        fail(codes::kSyntax, eq, "a class is either a subclass or a union, not both");
      decl.union_members.push_back(name("union member"));
      if (!at(Tok::Pipe)) unexpected(peek(), "'|' (a union needs at least two members)");
      while (at(Tok::Pipe)) {
        take();
        decl.union_members.push_back(name("union member"));
      }
    }
    const Token& header_end = tokens_[pos_ - 1];
    if (at(Tok::LBrace)) {
      take();
      body(decl);
    }
    end_of_statement();
    return {std::move(decl), span_between(kw, header_end)};
  }

  void body(ClassDecl& decl) {
    for (;;) {
      skip_newlines();
      if (at(Tok::RBrace)) {
        take();
        return;
      }
      if (!at(Tok::Bang) && !at(Tok::LParen)) unexpected(peek(), "slot or '}'");
      const Token& first = peek();
      SlotDecl slot;
      if (at(Tok::Bang)) {
        take();
        slot.sets_domain_range = true;
      }
      expect(Tok::LParen, "'('");
      slot.relation = name("relation name");
      expect(Tok::RParen, "')'");
      expect(Tok::Arrow, "'->'");
      if (at(Tok::Number) && peek().text == "1") {
        take();
        slot.cardinality = Cardinality::ExactlyOne;
      } else if (at(Tok::Question)) {
        take();
        slot.cardinality = Cardinality::AtMostOne;
      } else {
        unexpected(peek(), "cardinality '1' or '?'");
      }
      slot.range = name("range class");
      slot.span = span_between(first, tokens_[pos_ - 1]);
      decl.slots.push_back(std::move(slot));
    }
  }

  Statement graph_statement() {
    const Token& kw = take();
    GraphDecl decl;
    decl.name = name("graph name");
    const Token& header_end = tokens_[pos_ - 1];
    expect(Tok::LBrace, "'{'");
    for (;;) {
      skip_newlines();
      if (at(Tok::RBrace)) {
        take();
        break;
      }
      Name first = name("node or '}'");
      if (at(Tok::Colon)) {
        take();
        decl.nodes.push_back({std::move(first), name("class name")});
      } else {
        Name relation = name("':' or relation name");
        decl.edges.push_back({std::move(first), std::move(relation), name("object node")});
      }
      if (!at(Tok::Newline) && !at(Tok::RBrace)) unexpected(peek(), "end of line");
    }
    end_of_statement();
    return {std::move(decl), span_between(kw, header_end)};
  }

  std::vector<Token> tokens_;
  std::string file_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse(std::string_view text, std::string file) {
  return Parser(detail::tokenize(text), std::move(file)).run();
}

}  // namespace ilx
