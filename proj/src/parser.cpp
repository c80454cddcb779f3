#include "epdl/parser.hpp"

#include <cctype>
#include <string>

#include "epdl/errors.hpp"

namespace epdl {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  ident, kw_top, kw_bottom, kw_know, kw_know_hat,
  tilde, amp, bar, arrow,
  lbrack, rbrack, dlbrack, drbrack, langle, rangle,
  question, semi, plus, asterisk, lparen, rparen, end,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::kw_top: return "'T'";
    case Tok::kw_bottom: return "'F'";
    case Tok::kw_know: return "'K'";
    case Tok::kw_know_hat: return "'Kh'";
    case Tok::tilde: return "'~'";
    case Tok::amp: return "'&'";
    case Tok::bar: return "'|'";
    case Tok::arrow: return "'->'";
    case Tok::lbrack: return "'['";
    case Tok::rbrack: return "']'";
    case Tok::dlbrack: return "'[['";
    case Tok::drbrack: return "']]'";
    case Tok::langle: return "'<'";
    case Tok::rangle: return "'>'";
    case Tok::question: return "'?'";
    case Tok::semi: return "';'";
    case Tok::plus: return "'+'";
    case Tok::asterisk: return "'*'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::end: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula formula_to_end() {
    Formula f = implication();
    expect_end();
    return f;
  }

  Program program_to_end() {
    Program p = program();
    expect_end();
    return p;
  }

 private:
  // ---- lexing ---------------------------------------------------------------

  void advance() {
    skip_space();
    cur_ = Token{};
    cur_.line = line_;
    cur_.column = column_;
    if (pos_ >= text_.size()) {
      cur_.kind = Tok::end;
      return;
    }
    const char c = text_[pos_];
    if (ident_start(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      cur_.text = std::string(text_.substr(pos_, end - pos_));
      if (cur_.text == "T") cur_.kind = Tok::kw_top;
      else if (cur_.text == "F") cur_.kind = Tok::kw_bottom;
      else if (cur_.text == "K") cur_.kind = Tok::kw_know;
      else if (cur_.text == "Kh") cur_.kind = Tok::kw_know_hat;
      else cur_.kind = Tok::ident;
      bump(end - pos_);
      return;
    }
    auto two = [&](char next) { return pos_ + 1 < text_.size() && text_[pos_ + 1] == next; };
    switch (c) {
      case '~': single(Tok::tilde); return;
      case '&': single(Tok::amp); return;
      case '|': single(Tok::bar); return;
      case '-':
        if (two('>')) {
          cur_.kind = Tok::arrow;
          cur_.text = "->";
          bump(2);
          return;
        }
        break;
      case '[':
        if (two('[')) {
          cur_.kind = Tok::dlbrack;
          cur_.text = "[[";
          bump(2);
          return;
        }
        single(Tok::lbrack);
        return;
      case ']':
        if (two(']')) {
          cur_.kind = Tok::drbrack;
          cur_.text = "]]";
          bump(2);
          return;
        }
        single(Tok::rbrack);
        return;
      case '<': single(Tok::langle); return;
      case '>': single(Tok::rangle); return;
      case '?': single(Tok::question); return;
      case ';': single(Tok::semi); return;
      case '+': single(Tok::plus); return;
      case '*': single(Tok::asterisk); return;
      case '(': single(Tok::lparen); return;
      case ')': single(Tok::rparen); return;
      default: break;
    }
    throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
  }

  void single(Tok kind) {
    cur_.kind = kind;
    cur_.text = std::string(1, text_[pos_]);
    bump(1);
  }

  void bump(std::size_t n) {
    pos_ += n;
    column_ += n;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = cur_.kind == Tok::end ? "end of input" : "'" + cur_.text + "'";
    throw ParseError(cur_.line, cur_.column, "expected " + expected + ", found " + found);
  }

  bool accept(Tok kind) {
    if (cur_.kind != kind) return false;
    advance();
    return true;
  }

  void expect(Tok kind) {
    if (!accept(kind)) fail(describe(kind));
  }

  // "]]" may close two nested single brackets; split it when one is wanted.
  void expect_rbrack() {
    if (cur_.kind == Tok::drbrack) {
      cur_.kind = Tok::rbrack;
      cur_.text = "]";
      ++cur_.column;
      return;
    }
    expect(Tok::rbrack);
  }

  void expect_drbrack() {
    if (accept(Tok::drbrack)) return;
    if (cur_.kind == Tok::rbrack) {
      advance();
      if (accept(Tok::rbrack)) return;
    }
    fail("']]'");
  }

  void expect_end() {
    if (cur_.kind != Tok::end) fail("end of input");
  }

  // ---- formulas -------------------------------------------------------------

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::arrow)) return implies(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (accept(Tok::bar)) lhs = disj(lhs, conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (accept(Tok::amp)) lhs = conj(lhs, unary());
    return lhs;
  }

  Formula unary() {
    switch (cur_.kind) {
      case Tok::kw_top:
        advance();
        return top();
      case Tok::kw_bottom:
        advance();
        return bottom();
      case Tok::ident: {
        std::string name = cur_.text;
        advance();
        return prop(std::move(name));
      }
      case Tok::tilde:
        advance();
        return neg(unary());
      case Tok::kw_know:
        advance();
        return know(unary());
      case Tok::kw_know_hat:
        advance();
        return know_hat(unary());
      case Tok::lbrack: {
        advance();
        Program p = program();
        expect_rbrack();
        return box(std::move(p), unary());
      }
      case Tok::dlbrack: {
        advance();
        Program p = program();
        expect_drbrack();
        return strong(std::move(p), unary());
      }
      case Tok::langle: {
        advance();
        Program p = program();
        expect(Tok::rangle);
        return diamond(std::move(p), unary());
      }
      case Tok::lparen: {
        advance();
        Formula f = implication();
        expect(Tok::rparen);
        return f;
      }
      default:
        fail("formula");
    }
  }

  // ---- programs -------------------------------------------------------------

  Program program() {
    Program lhs = sequence();
    while (accept(Tok::plus)) lhs = choice(lhs, sequence());
    return lhs;
  }

  Program sequence() {
    Program lhs = postfix();
    while (accept(Tok::semi)) lhs = seq(lhs, postfix());
    return lhs;
  }

  Program postfix() {
    Program p = primary();
    while (accept(Tok::asterisk)) p = star(p);
    return p;
  }

  Program primary() {
    switch (cur_.kind) {
      case Tok::ident: {
        std::string name = cur_.text;
        advance();
        return act(std::move(name));
      }
      case Tok::question:
        advance();
        return test(unary());
      case Tok::lparen: {
        advance();
        Program p = program();
        expect(Tok::rparen);
        return p;
      }
      default:
        fail("program");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token cur_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).formula_to_end(); }

Program parse_program(std::string_view text) { return Parser(text).program_to_end(); }

}  // namespace epdl
