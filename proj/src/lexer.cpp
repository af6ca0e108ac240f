#include "lexer.hpp"

#include <algorithm>
#include <cctype>

namespace ilx::detail {

namespace {

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

int code_points(std::string_view s) {
  int n = 0;
  for (unsigned char c : s)
    if (!is_continuation(c)) ++n;
  return n;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        emit(Tok::Newline, 1);
        ++line_;
        column_ = 1;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance(1);
        continue;
      }
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                                      text_[end] == '_' || text_[end] == '.'))
          ++end;
        emit(Tok::Name, end - pos_);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        emit(Tok::Number, end - pos_);
        continue;
      }
      if (c == '<' && after_prefix_label()) {
        lex_iri();
        continue;
      }
      if (text_.substr(pos_, 7) == "@prefix") {
        emit(Tok::AtPrefix, 7);
        continue;
      }
      if (text_.substr(pos_, 2) == "->") {
        emit(Tok::Arrow, 2);
        continue;
      }
      switch (c) {
        case '!': emit(Tok::Bang, 1); continue;
        case '?': emit(Tok::Question, 1); continue;
        case '(': emit(Tok::LParen, 1); continue;
        case ')': emit(Tok::RParen, 1); continue;
        case '<': emit(Tok::Less, 1); continue;
        case '&': emit(Tok::Amp, 1); continue;
        case '|': emit(Tok::Pipe, 1); continue;
        case '=': emit(Tok::Equals, 1); continue;
        case '{': emit(Tok::LBrace, 1); continue;
        case '}': emit(Tok::RBrace, 1); continue;
        case ':': emit(Tok::Colon, 1); continue;
        case '/': emit(Tok::Slash, 1); continue;
        default: break;
      }
      // One whole UTF-8 sequence per invalid token.
      std::size_t n = 1;
      while (pos_ + n < text_.size() && is_continuation(static_cast<unsigned char>(text_[pos_ + n])))
        ++n;
      emit(Tok::Invalid, n);
    }
    tokens_.push_back({Tok::End, "", line_, column_, 1});
    return std::move(tokens_);
  }

 private:
  void advance(std::size_t bytes) {
    column_ += code_points(text_.substr(pos_, bytes));
    pos_ += bytes;
  }

  void emit(Tok kind, std::size_t bytes) {
    std::string_view lexeme = text_.substr(pos_, bytes);
    tokens_.push_back({kind, std::string(lexeme), line_, column_, std::max(1, code_points(lexeme))});
    advance(bytes);
  }

  // `@prefix label :` immediately precedes.
  bool after_prefix_label() const {
    const std::size_t n = tokens_.size();
    return n >= 3 && tokens_[n - 1].kind == Tok::Colon && tokens_[n - 2].kind == Tok::Name &&
           tokens_[n - 3].kind == Tok::AtPrefix;
  }

  void lex_iri() {
    std::size_t end = pos_ + 1;
    while (end < text_.size() && text_[end] != '>' && text_[end] != '\n' &&
           !std::isspace(static_cast<unsigned char>(text_[end])))
      ++end;
    if (end < text_.size() && text_[end] == '>') {
      Token t{Tok::Iri, std::string(text_.substr(pos_ + 1, end - pos_ - 1)), line_, column_,
              code_points(text_.substr(pos_, end + 1 - pos_))};
      tokens_.push_back(std::move(t));
      advance(end + 1 - pos_);
    } else {
      emit(Tok::Invalid, end - pos_);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::vector<Token> tokens_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

const char* describe(Tok t) {
  switch (t) {
    case Tok::Name: return "name";
    case Tok::Number: return "number";
    case Tok::Iri: return "IRI";
    case Tok::AtPrefix: return "'@prefix'";
    case Tok::Bang: return "'!'";
    case Tok::Question: return "'?'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Arrow: return "'->'";
    case Tok::Less: return "'<'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Equals: return "'='";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Colon: return "':'";
    case Tok::Slash: return "'/'";
    case Tok::Newline: return "end of line";
    case Tok::Invalid: return "invalid character";
    case Tok::End: return "end of input";
  }
  return "token";
}

}  // namespace ilx::detail
