#include "meadowlab/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace meadowlab {

namespace {

enum class Tok : uint8_t {
  Nat, Ident, I, Inv, Plus, Minus, Star, Caret, LParen, RParen, Equals, End
};

struct Token {
  Tok kind;
  size_t pos;
  uint64_t nat;
  std::string text;

  Token(Tok kind, size_t pos, uint64_t nat = 0, std::string text = {})
      : kind(kind), pos(pos), nat(nat), text(std::move(text)) {}
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const size_t pos = i_;
      if (i_ == src_.size()) {
        out.push_back({Tok::End, pos});
        break;
      }
      const char c = src_[i_];
      if (c >= '0' && c <= '9') {
        uint64_t value = 0;
        while (i_ < src_.size() && src_[i_] >= '0' && src_[i_] <= '9') {
          const uint64_t digit = static_cast<uint64_t>(src_[i_] - '0');
          if (value > (UINT64_MAX - digit) / 10)
            throw ParseError("numeric literal too large", pos);
          value = value * 10 + digit;
          ++i_;
        }
        out.push_back({Tok::Nat, pos, value});
        continue;
      }
      if (c >= 'a' && c <= 'z') {
        size_t j = i_;
        while (j < src_.size() &&
               ((src_[j] >= 'a' && src_[j] <= 'z') ||
                (src_[j] >= '0' && src_[j] <= '9') || src_[j] == '_'))
          ++j;
        std::string word(src_.substr(i_, j - i_));
        i_ = j;
        if (word == "i")
          out.push_back({Tok::I, pos});
        else if (word == "inv")
          out.push_back({Tok::Inv, pos});
        else
          out.push_back({Tok::Ident, pos, 0, std::move(word)});
        continue;
      }
      switch (c) {
        case '+': out.push_back({Tok::Plus, pos}); break;
        case '-': out.push_back({Tok::Minus, pos}); break;
        case '*': out.push_back({Tok::Star, pos}); break;
        case '^': out.push_back({Tok::Caret, pos}); break;
        case '(': out.push_back({Tok::LParen, pos}); break;
        case ')': out.push_back({Tok::RParen, pos}); break;
        case '=': out.push_back({Tok::Equals, pos}); break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", pos);
      }
      ++i_;
    }
    return out;
  }

 private:
  void skip_space() {
    while (i_ < src_.size() && (src_[i_] == ' ' || src_[i_] == '\t' ||
                                src_[i_] == '\n' || src_[i_] == '\r'))
      ++i_;
  }

  std::string_view src_;
  size_t i_ = 0;
};

// Terms are processed recursively throughout the library, so structural
// depth from untrusted text is bounded here. Nesting allows a little more
// than the numeral cap so printed boundary-size terms still reparse.
constexpr uint64_t kMaxNumeralLiteral = 5000;
constexpr int kMaxNestingDepth = 6000;

class Parser {
 public:
  Parser(std::vector<Token> tokens, Signature allowed)
      : toks_(std::move(tokens)), allowed_(allowed) {}

  Term parse_whole_term() {
    Term t = parse_add();
    expect(Tok::End, "end of input");
    return t;
  }

  Equation parse_whole_equation() {
    Term lhs = parse_add();
    expect(Tok::Equals, "'='");
    Term rhs = parse_add();
    expect(Tok::End, "end of input");
    return make_equation(std::move(lhs), std::move(rhs));
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& next() { return toks_[k_++]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind)
      throw ParseError(std::string("expected ") + what, peek().pos);
    ++k_;
  }

  Term parse_add() {
    if (++depth_ > kMaxNestingDepth)
      throw ParseError("term nesting deeper than " +
                           std::to_string(kMaxNestingDepth),
                       peek().pos);
    Term t = parse_mul();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      Term r = parse_mul();
      t = minus ? sub(std::move(t), std::move(r)) : add(std::move(t), std::move(r));
    }
    --depth_;
    return t;
  }

  Term parse_mul() {
    Term t = parse_unary();
    while (peek().kind == Tok::Star) {
      next();
      t = mul(std::move(t), parse_unary());
    }
    return t;
  }

  Term parse_unary() {
    if (peek().kind == Tok::Minus) {
      if (++depth_ > kMaxNestingDepth)
        throw ParseError("term nesting deeper than " +
                             std::to_string(kMaxNestingDepth),
                         peek().pos);
      next();
      Term t = neg(parse_unary());
      --depth_;
      return t;
    }
    Term t = parse_atom();
    if (peek().kind == Tok::Caret) {
      const size_t pos = next().pos;
      if (peek().kind == Tok::Nat && peek().nat == 2) {
        next();
        return square(std::move(t));
      }
      if (peek().kind == Tok::Minus) {
        next();
        if (peek().kind == Tok::Nat && peek().nat == 1) {
          next();
          return inv(std::move(t));
        }
      }
      throw ParseError("only ^2 and ^-1 are supported", pos);
    }
    return t;
  }

  Term parse_atom() {
    const Token& tok = next();
    switch (tok.kind) {
      case Tok::Nat:
        if (tok.nat == 0) return zero();
        if (tok.nat == 1) return one();
        // A literal n becomes a tree with n additions; keep that sane.
        if (tok.nat > kMaxNumeralLiteral)
          throw ParseError("numeral literal larger than " +
                               std::to_string(kMaxNumeralLiteral),
                           tok.pos);
        return numeral(tok.nat);
      case Tok::I:
        if (allowed_ != Signature::Extended)
          throw ParseError("imaginary unit 'i' is not allowed under the plain signature",
                           tok.pos);
        return imaginary_unit();
      case Tok::Ident:
        return var(tok.text);
      case Tok::Inv: {
        expect(Tok::LParen, "'(' after inv");
        Term t = parse_add();
        expect(Tok::RParen, "')'");
        return inv(std::move(t));
      }
      case Tok::LParen: {
        Term t = parse_add();
        expect(Tok::RParen, "')'");
        return t;
      }
      default:
        throw ParseError("expected a term", tok.pos);
    }
  }

  std::vector<Token> toks_;
  Signature allowed_;
  size_t k_ = 0;
  int depth_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, Signature allowed) {
  Parser p(Lexer(text).run(), allowed);
  return p.parse_whole_term();
}

Equation parse_equation(std::string_view text, Signature allowed) {
  Parser p(Lexer(text).run(), allowed);
  return p.parse_whole_equation();
}

}  // namespace meadowlab
