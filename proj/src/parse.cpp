#include "afnorm/parse.hpp"

#include <cctype>
#include <map>

namespace afnorm {
namespace {

enum class Tok { LAngle, RAngle, Pipe, Comma, Caret, Star, Equals, Ident, Int, End };

struct Token {
  Tok kind;
  std::string text;   // identifier spelling
  long long value = 0;  // integer payload
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) step();
    current_ = Token{Tok::End, "", 0, line_, col_};
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    switch (c) {
      case '<': current_.kind = Tok::LAngle; step(); return;
      case '>': current_.kind = Tok::RAngle; step(); return;
      case '|': current_.kind = Tok::Pipe; step(); return;
      case ',': current_.kind = Tok::Comma; step(); return;
      case '^': current_.kind = Tok::Caret; step(); return;
      case '*': current_.kind = Tok::Star; step(); return;
      case '=': current_.kind = Tok::Equals; step(); return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      current_.kind = Tok::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        current_.text += text_[pos_];
        step();
      }
      return;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Tok::Int;
      std::string digits;
      bool negative = (c == '-');
      if (negative) step();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected digits after '-'", line_, col_);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        step();
      }
      try {
        current_.value = std::stoll(digits);
      } catch (const std::out_of_range&) {
        throw ParseError("integer literal out of range", current_.line, current_.column);
      }
      if (negative) current_.value = -current_.value;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Presentation run() {
    expect(Tok::LAngle, "'<'");
    parseGenerators();
    expect(Tok::Pipe, "'|'");
    if (lex_.peek().kind != Tok::RAngle) {
      result_.relators.push_back(parseRelator());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        result_.relators.push_back(parseRelator());
      }
    }
    expect(Tok::RAngle, "'>'");
    if (lex_.peek().kind != Tok::End) {
      const Token& t = lex_.peek();
      throw ParseError("trailing input after '>'", t.line, t.column);
    }
    return std::move(result_);
  }

 private:
  void parseGenerators() {
    addGenerator(expect(Tok::Ident, "generator name"));
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      addGenerator(expect(Tok::Ident, "generator name"));
    }
  }

  void addGenerator(const Token& t) {
    if (names_.count(t.text))
      throw ParseError("duplicate generator name '" + t.text + "'", t.line, t.column);
    int index = result_.generator_count();
    names_[t.text] = index;
    result_.generators.push_back({index, t.text});
  }

  FreeWord parseRelator() {
    FreeWord u = parseWord();
    if (lex_.peek().kind == Tok::Equals) {
      lex_.take();
      FreeWord v = parseWord();
      return u * v.inverse();
    }
    return u;
  }

  FreeWord parseWord() {
    const Token& first = lex_.peek();
    if (first.kind == Tok::Int) {
      if (first.value != 1)
        throw ParseError("a word is a product of syllables or the literal '1'", first.line,
                         first.column);
      lex_.take();
      return FreeWord{};
    }
    if (first.kind != Tok::Ident)
      throw ParseError("expected a word", first.line, first.column);
    std::vector<FreeWord::Syllable> syllables;
    syllables.push_back(parseSyllable());
    for (;;) {
      if (lex_.peek().kind == Tok::Star) {
        lex_.take();
        syllables.push_back(parseSyllable());
        continue;
      }
      if (lex_.peek().kind == Tok::Ident) {
        syllables.push_back(parseSyllable());
        continue;
      }
      break;
    }
    return FreeWord::from_syllables(syllables);
  }

  FreeWord::Syllable parseSyllable() {
    Token name = expect(Tok::Ident, "generator name");
    auto it = names_.find(name.text);
    if (it == names_.end())
      throw ParseError("unknown generator '" + name.text + "'", name.line, name.column);
    long long exponent = 1;
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      Token e = expect(Tok::Int, "integer exponent");
      if (e.value == 0) throw ParseError("zero exponent", e.line, e.column);
      exponent = e.value;
    }
    return {it->second, exponent};
  }

  Token expect(Tok kind, const char* what) {
    const Token& t = lex_.peek();
    if (t.kind != kind)
      throw ParseError(std::string("expected ") + what, t.line, t.column);
    return lex_.take();
  }

  Lexer lex_;
  Presentation result_;
  std::map<std::string, int> names_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).run(); }

}  // namespace afnorm
