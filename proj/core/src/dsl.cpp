#include "ldlat/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace ldlat::dsl {

namespace {

enum class Tok { Ident, Zero, LBrace, RBrace, LParen, RParen, Comma, Colon, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    SourcePos pos{line_, col_};
    if (i_ >= text_.size()) return {Tok::End, "", pos};
    char c = text_[i_];
    auto single = [&](Tok k) {
      advance(1);
      return Token{k, std::string(1, c), pos};
    };
    switch (c) {
      case '{': return single(Tok::LBrace);
      case '}': return single(Tok::RBrace);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case ':': return single(Tok::Colon);
      case ';': return single(Tok::Semi);
      default: break;
    }
    if (text_.substr(i_, kSyntheticTop.size()) == kSyntheticTop) {
      advance(kSyntheticTop.size());
      return {Tok::Ident, std::string(kSyntheticTop), pos};
    }
    if (ident_start(c)) {
      std::size_t j = i_;
      while (j < text_.size() && ident_char(text_[j])) ++j;
      Token t{Tok::Ident, std::string(text_.substr(i_, j - i_)), pos};
      advance(j - i_);
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && ident_char(text_[j])) ++j;
      std::string word(text_.substr(i_, j - i_));
      if (word != kBottom) {
        throw DiagnosticError(ErrorCode::SyntaxError, pos, word, "identifiers must start with a letter or '_'");
      }
      advance(j - i_);
      return {Tok::Zero, word, pos};
    }
    // Report the whole UTF-8 sequence for non-ASCII input.
    std::size_t len = 1;
    while (i_ + len < text_.size() && (static_cast<unsigned char>(text_[i_ + len]) & 0xC0) == 0x80) ++len;
    throw DiagnosticError(ErrorCode::SyntaxError, pos, std::string(text_.substr(i_, len)), "unexpected character");
  }

 private:
  void advance(std::size_t k) {
    for (std::size_t s = 0; s < k; ++s) {
      if (text_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) {
        ++col_;
      }
      ++i_;
    }
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string_view describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Zero: return "'0'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Semi: return "';'";
    case Tok::End: return "end of input";
  }
  return "token";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { cur_ = lex_.next(); }

  AdjunctExpr document() {
    AdjunctExpr expr;
    keyword("lattice");
    expr.name = expect(Tok::Ident, "lattice name").text;
    expect(Tok::LBrace, "'{'");

    keyword("chain");
    if (cur_.kind == Tok::Zero) {
      define(cur_);
      expr.base.push_back(cur_.text);
      shift();
    }
    element_list(expr.base, "chain element", !expr.base.empty());
    expect(Tok::Semi, "';'");

    while (cur_.kind == Tok::Ident && cur_.text == "adjoin") {
      Adjunction adj;
      adj.pos = cur_.pos;
      shift();
      expect(Tok::LParen, "'('");
      if (cur_.kind == Tok::Zero) {
        adj.lower = reference(cur_);
        shift();
      } else {
        adj.lower = reference(expect(Tok::Ident, "element"));
      }
      expect(Tok::Comma, "','");
      adj.upper = reference(expect(Tok::Ident, "element"));
      expect(Tok::RParen, "')'");
      expect(Tok::Colon, "':'");
      element_list(adj.chain, "chain element", false);
      expect(Tok::Semi, "';'");
      expr.adjunctions.push_back(std::move(adj));
    }
    if (cur_.kind == Tok::Ident) {
      throw DiagnosticError(ErrorCode::SyntaxError, cur_.pos, cur_.text, "expected 'adjoin' or '}'");
    }
    expect(Tok::RBrace, "'}'");
    if (cur_.kind != Tok::End) {
      throw DiagnosticError(ErrorCode::SyntaxError, cur_.pos, cur_.text, "trailing input after '}'");
    }
    return expr;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  Token expect(Tok kind, std::string_view what) {
    if (cur_.kind != kind) {
      if (cur_.kind == Tok::Zero) {
        throw DiagnosticError(ErrorCode::SyntaxError, cur_.pos, cur_.text,
                              "'0' is only allowed first in 'chain' or first in a pair");
      }
      throw DiagnosticError(ErrorCode::SyntaxError, cur_.pos, cur_.text,
                            "expected " + std::string(what) + ", found " + std::string(describe(cur_.kind)));
    }
    Token t = cur_;
    shift();
    return t;
  }

  void keyword(std::string_view word) {
    if (cur_.kind != Tok::Ident || cur_.text != word) {
      throw DiagnosticError(ErrorCode::SyntaxError, cur_.pos, cur_.text, "expected '" + std::string(word) + "'");
    }
    shift();
  }

  void element_list(std::vector<std::string>& out, std::string_view what, bool allow_empty) {
    const auto before = out.size();
    while (cur_.kind == Tok::Ident) {
      define(cur_);
      out.push_back(cur_.text);
      shift();
    }
    if (cur_.kind == Tok::Zero) {
      throw DiagnosticError(ErrorCode::SyntaxError, cur_.pos, cur_.text,
                            "'0' is only allowed first in 'chain' or first in a pair");
    }
    if (out.size() == before && !allow_empty) expect(Tok::Ident, what);
  }

  void define(const Token& t) {
    if (!defined_.insert(t.text).second) {
      throw DiagnosticError(ErrorCode::DuplicateElement, t.pos, t.text, "element defined twice");
    }
  }

  std::string reference(const Token& t) {
    if (!defined_.count(t.text)) {
      throw DiagnosticError(ErrorCode::UnknownElement, t.pos, t.text, "element used before definition");
    }
    return t.text;
  }

  Lexer lex_;
  Token cur_;
  std::unordered_set<std::string> defined_;
};

}  // namespace

bool is_identifier(std::string_view name) {
  if (name == kSyntheticTop) return true;
  if (name.empty() || !ident_start(name.front())) return false;
  return std::all_of(name.begin(), name.end(), ident_char);
}

AdjunctExpr parse(std::string_view text) { return Parser(text).document(); }

std::string serialize(const AdjunctExpr& expr) {
  std::string out = "lattice " + expr.name + " {\n  chain";
  for (const auto& e : expr.base) out += " " + e;
  out += ";\n";
  for (const auto& adj : expr.adjunctions) {
    out += "  adjoin (" + adj.lower + ", " + adj.upper + "):";
    for (const auto& e : adj.chain) out += " " + e;
    out += ";\n";
  }
  out += "}\n";
  return out;
}

Lattice elaborate(const AdjunctExpr& expr) {
  if (expr.base.empty()) {
    throw DiagnosticError(ErrorCode::SyntaxError, {}, "", "the base chain is empty");
  }
  std::vector<std::string> labels;
  std::unordered_map<std::string, Element> index;
  std::vector<std::vector<Element>> upper;
  std::vector<CoverPair> covers;

  auto add = [&](const std::string& label, SourcePos pos) {
    auto id = static_cast<Element>(labels.size());
    if (!index.emplace(label, id).second) {
      throw DiagnosticError(ErrorCode::DuplicateElement, pos, label, "element defined twice");
    }
    labels.push_back(label);
    upper.emplace_back();
    return id;
  };
  auto link = [&](Element u, Element v) {
    covers.emplace_back(u, v);
    upper[u].push_back(v);
  };
  auto lookup = [&](const std::string& label, SourcePos pos) {
    auto it = index.find(label);
    if (it == index.end()) throw DiagnosticError(ErrorCode::UnknownElement, pos, label, "unknown element");
    return it->second;
  };
  // a < b in the current partial order (search upwards from a).
  auto reaches = [&](Element a, Element b) {
    std::vector<char> seen(labels.size(), 0);
    std::vector<Element> stack{a};
    seen[a] = 1;
    while (!stack.empty()) {
      Element v = stack.back();
      stack.pop_back();
      for (Element w : upper[v]) {
        if (w == b) return true;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return false;
  };

  Element prev = add(expr.base.front(), {});
  for (std::size_t i = 1; i < expr.base.size(); ++i) {
    Element cur = add(expr.base[i], {});
    link(prev, cur);
    prev = cur;
  }
  for (const auto& adj : expr.adjunctions) {
    Element a = lookup(adj.lower, adj.pos);
    Element b = lookup(adj.upper, adj.pos);
    const std::string pair = "(" + adj.lower + ", " + adj.upper + ")";
    if (adj.chain.empty()) {
      throw DiagnosticError(ErrorCode::SyntaxError, adj.pos, pair, "adjoined chain is empty");
    }
    if (a == b || !reaches(a, b)) {
      throw DiagnosticError(ErrorCode::PairNotAdjunctable, adj.pos, pair, "'" + adj.lower + "' is not below '" + adj.upper + "'");
    }
    const auto& ua = upper[a];
    if (std::find(ua.begin(), ua.end(), b) != ua.end()) {
      throw DiagnosticError(ErrorCode::PairNotAdjunctable, adj.pos, pair, "'" + adj.lower + "' is covered by '" + adj.upper + "'");
    }
    Element last = a;
    for (const auto& e : adj.chain) {
      Element cur = add(e, adj.pos);
      link(last, cur);
      last = cur;
    }
    link(last, b);
  }
  return Lattice(std::move(labels), std::move(covers));
}

}  // namespace ldlat::dsl
