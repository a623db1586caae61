#include "minviol/parser.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace minviol {

namespace {

enum class Tok { End, Ident, True, False, Not, And, Or, Implies, Next, Until, Finally, Globally, LParen, RParen };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    current_.line = line_;
    current_.column = col_;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      current_.text = text_.substr(start, pos_ - start);
      if (current_.text == "true")
        current_.kind = Tok::True;
      else if (current_.text == "false")
        current_.kind = Tok::False;
      else if (current_.text == "X")
        current_.kind = Tok::Next;
      else if (current_.text == "U")
        current_.kind = Tok::Until;
      else if (current_.text == "F")
        current_.kind = Tok::Finally;
      else if (current_.text == "G")
        current_.kind = Tok::Globally;
      else
        current_.kind = Tok::Ident;
      return;
    }
    ++pos_;
    ++col_;
    switch (c) {
      case '!':
        current_.kind = Tok::Not;
        return;
      case '&':
        current_.kind = Tok::And;
        return;
      case '|':
        current_.kind = Tok::Or;
        return;
      case '(':
        current_.kind = Tok::LParen;
        return;
      case ')':
        current_.kind = Tok::RParen;
        return;
      case '-':
        if (pos_ < text_.size() && text_[pos_] == '>') {
          ++pos_;
          ++col_;
          current_.kind = Tok::Implies;
          return;
        }
        throw ParseError("unknown token '-'", line_, col_ - 1);
      default:
        throw ParseError(std::string("unknown token '") + c + "'", line_, col_ - 1);
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

// Raw syntax tree; lowered to canonical Formula after parsing so that
// negation can be pushed down with position information still at hand.
struct Ast {
  enum class Op { True, False, Atom, Not, And, Or, Implies, Next, Until, Finally, Globally };
  Op op;
  std::string name;
  std::vector<std::unique_ptr<Ast>> kids;
  int line = 0;
  int column = 0;
};

using AstPtr = std::unique_ptr<Ast>;

AstPtr mk(Ast::Op op, int line, int col) {
  auto a = std::make_unique<Ast>();
  a->op = op;
  a->line = line;
  a->column = col;
  return a;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  AstPtr parse() {
    AstPtr e = parse_implies();
    if (lex_.peek().kind != Tok::End) {
      throw ParseError("unexpected trailing input", lex_.peek().line, lex_.peek().column);
    }
    return e;
  }

 private:
  AstPtr parse_implies() {
    AstPtr lhs = parse_or();
    if (lex_.peek().kind == Tok::Implies) {
      Token t = lex_.take();
      AstPtr node = mk(Ast::Op::Implies, t.line, t.column);
      node->kids.push_back(std::move(lhs));
      node->kids.push_back(parse_implies());
      return node;
    }
    return lhs;
  }

  AstPtr parse_or() {
    AstPtr lhs = parse_and();
    while (lex_.peek().kind == Tok::Or) {
      Token t = lex_.take();
      AstPtr node = mk(Ast::Op::Or, t.line, t.column);
      node->kids.push_back(std::move(lhs));
      node->kids.push_back(parse_and());
      lhs = std::move(node);
    }
    return lhs;
  }

  AstPtr parse_and() {
    AstPtr lhs = parse_until();
    while (lex_.peek().kind == Tok::And) {
      Token t = lex_.take();
      AstPtr node = mk(Ast::Op::And, t.line, t.column);
      node->kids.push_back(std::move(lhs));
      node->kids.push_back(parse_until());
      lhs = std::move(node);
    }
    return lhs;
  }

  AstPtr parse_until() {
    AstPtr lhs = parse_unary();
    if (lex_.peek().kind == Tok::Until) {
      Token t = lex_.take();
      AstPtr node = mk(Ast::Op::Until, t.line, t.column);
      node->kids.push_back(std::move(lhs));
      node->kids.push_back(parse_until());  // right-associative
      return node;
    }
    return lhs;
  }

  AstPtr parse_unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Not: {
        Token tok = lex_.take();
        AstPtr node = mk(Ast::Op::Not, tok.line, tok.column);
        node->kids.push_back(parse_unary());
        return node;
      }
      case Tok::Next:
      case Tok::Finally:
      case Tok::Globally: {
        Token tok = lex_.take();
        Ast::Op op = tok.kind == Tok::Next ? Ast::Op::Next
                     : tok.kind == Tok::Finally ? Ast::Op::Finally
                                                : Ast::Op::Globally;
        AstPtr node = mk(op, tok.line, tok.column);
        node->kids.push_back(parse_unary());
        return node;
      }
      default:
        return parse_primary();
    }
  }

  AstPtr parse_primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::True:
        return mk(Ast::Op::True, t.line, t.column);
      case Tok::False:
        return mk(Ast::Op::False, t.line, t.column);
      case Tok::Ident: {
        AstPtr node = mk(Ast::Op::Atom, t.line, t.column);
        node->name = t.text;
        return node;
      }
      case Tok::LParen: {
        AstPtr e = parse_implies();
        if (lex_.peek().kind != Tok::RParen) {
          throw ParseError("expected ')'", lex_.peek().line, lex_.peek().column);
        }
        lex_.take();
        return e;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.line, t.column);
      default:
        throw ParseError("unexpected token", t.line, t.column);
    }
  }

  Lexer lex_;
};

Formula lower(const Ast& ast, bool negated) {
  switch (ast.op) {
    case Ast::Op::True:
      return negated ? Formula::f() : Formula::t();
    case Ast::Op::False:
      return negated ? Formula::t() : Formula::f();
    case Ast::Op::Atom:
      return negated ? Formula::not_atom(ast.name) : Formula::atom(ast.name);
    case Ast::Op::Not:
      return lower(*ast.kids[0], !negated);
    case Ast::Op::And: {
      std::vector<Formula> kids;
      for (const auto& k : ast.kids) kids.push_back(lower(*k, negated));
      return negated ? Formula::disj(std::move(kids)) : Formula::conj(std::move(kids));
    }
    case Ast::Op::Or: {
      std::vector<Formula> kids;
      for (const auto& k : ast.kids) kids.push_back(lower(*k, negated));
      return negated ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    }
    case Ast::Op::Implies: {
      // a -> b  ==  !a | b ; negated: a & !b
      Formula na = lower(*ast.kids[0], !negated);
      Formula b = lower(*ast.kids[1], negated);
      return negated ? Formula::conj({na, b}) : Formula::disj({na, b});
    }
    case Ast::Op::Next:
    case Ast::Op::Until:
    case Ast::Op::Finally:
    case Ast::Op::Globally: {
      if (negated) {
        throw ParseError("negation over a temporal operator is not co-safe", ast.line, ast.column);
      }
      switch (ast.op) {
        case Ast::Op::Next:
          return Formula::next(lower(*ast.kids[0], false));
        case Ast::Op::Until:
          return Formula::until(lower(*ast.kids[0], false), lower(*ast.kids[1], false));
        case Ast::Op::Finally:
          return Formula::eventually(lower(*ast.kids[0], false));
        default:
          return Formula::always(lower(*ast.kids[0], false));
      }
    }
  }
  throw ParseError("unreachable", ast.line, ast.column);
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser parser(text);
  AstPtr ast = parser.parse();
  return lower(*ast, false);
}

}  // namespace minviol
