#include "tkb.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace testtdo::tkb {
namespace {

enum class Tok { Ident, String, Colon, LBrace, RBrace, Equals, LParen, RParen, Comma, End, Error };

struct Token {
  Tok kind = Tok::End;
  std::string text;  // identifier name, decoded string, or error message
  std::size_t line = 1;
  std::size_t column = 1;
};

bool ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) advance();
      t.kind = Tok::Ident;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (c == '"') return string_literal(t);
    advance();
    switch (c) {
      case ':': t.kind = Tok::Colon; return t;
      case '{': t.kind = Tok::LBrace; return t;
      case '}': t.kind = Tok::RBrace; return t;
      case '=': t.kind = Tok::Equals; return t;
      case '(': t.kind = Tok::LParen; return t;
      case ')': t.kind = Tok::RParen; return t;
      case ',': t.kind = Tok::Comma; return t;
      default: break;
    }
    t.kind = Tok::Error;
    if (static_cast<unsigned char>(c) >= 0x80) {
      // Consume the rest of a multi-byte sequence so it yields one error.
      while (pos_ < text_.size() && (static_cast<unsigned char>(text_[pos_]) & 0xC0) == 0x80) advance();
      t.text = "unexpected non-ASCII character outside a string";
    } else {
      t.text = std::string("unexpected character '") + c + "'";
    }
    return t;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token string_literal(Token t) {
    advance();  // opening quote
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        t.kind = Tok::Error;
        t.text = "unterminated string literal";
        return t;
      }
      const char c = text_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') {
        t.kind = Tok::Error;
        t.text = "unterminated string literal";
        return t;
      }
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size()) continue;  // reported as unterminated
        const char e = text_[pos_];
        if (e == '"' || e == '\\') {
          value += e;
        } else if (e == 'n') {
          value += '\n';
        } else {
          t.kind = Tok::Error;
          t.text = std::string("invalid escape sequence '\\") + e + "'";
          // Skip to the closing quote so the statement can still be resynchronised.
          while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') advance();
          if (pos_ < text_.size() && text_[pos_] == '"') advance();
          return t;
        }
        advance();
        continue;
      }
      value += c;
      advance();
    }
    t.kind = Tok::String;
    t.text = std::move(value);
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct PendingLink {
  Link link;
  Token source_tok;
  Token target_tok;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { bump(); }

  ParseResult run() {
    while (cur_.kind != Tok::End) {
      if (cur_.kind == Tok::Ident && cur_.text == "individual") {
        individual_decl();
      } else if (cur_.kind == Tok::Ident && cur_.text == "link") {
        link_decl();
      } else if (cur_.kind == Tok::Error) {
        error(cur_, cur_.text);
        recover();
      } else {
        error(cur_, cur_.kind == Tok::Ident ? "unknown statement keyword '" + cur_.text + "'"
                                            : "expected 'individual' or 'link'");
        recover();
      }
    }
    for (const auto& p : links_) {
      if (!kb_.contains(p.link.source)) error(p.source_tok, "unresolved identifier '" + p.link.source + "'");
      if (!kb_.contains(p.link.target)) error(p.target_tok, "unresolved identifier '" + p.link.target + "'");
    }
    ParseResult result;
    if (diags_.empty()) {
      for (auto& p : links_) kb_.add_link(p.link.rel_name, p.link.source, p.link.target);
      kb_.finalize();
      result.kb = std::move(kb_);
    }
    std::stable_sort(diags_.begin(), diags_.end(), [](const auto& a, const auto& b) {
      return std::tie(a.line, a.column) < std::tie(b.line, b.column);
    });
    result.diagnostics = std::move(diags_);
    return result;
  }

 private:
  struct Abort {};

  void bump() { cur_ = lexer_.next(); }

  void error(const Token& at, std::string message) { diags_.push_back({at.line, at.column, std::move(message)}); }

  [[noreturn]] void fail(const Token& at, std::string message) {
    error(at, at.kind == Tok::Error ? at.text : std::move(message));
    throw Abort{};
  }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail(cur_, std::string("expected ") + what);
    Token t = cur_;
    bump();
    return t;
  }

  bool at_statement_start() const {
    return cur_.kind == Tok::End || (cur_.kind == Tok::Ident && (cur_.text == "individual" || cur_.text == "link"));
  }

  void recover() {
    bump();
    while (!at_statement_start()) bump();
  }

  void individual_decl() {
    try {
      bump();
      Token id = expect(Tok::Ident, "individual identifier");
      expect(Tok::Colon, "':' after individual identifier");
      Token type = expect(Tok::Ident, "type name");
      AttrMap attrs;
      if (cur_.kind == Tok::LBrace) {
        bump();
        while (cur_.kind != Tok::RBrace) {
          Token name = expect(Tok::Ident, "attribute name or '}'");
          expect(Tok::Equals, "'=' after attribute name");
          Token value = expect(Tok::String, "string value");
          if (!attrs.emplace(name.text, value.text).second) {
            error(name, "duplicate attribute '" + name.text + "'");
          }
        }
        bump();
      }
      if (kb_.contains(id.text)) {
        error(id, "duplicate individual id '" + id.text + "'");
      } else {
        kb_.add_individual(id.text, type.text, std::move(attrs));
      }
    } catch (const Abort&) {
      if (!at_statement_start()) recover();
    }
  }

  void link_decl() {
    try {
      bump();
      Token rel = expect(Tok::Ident, "relationship name");
      expect(Tok::LParen, "'(' after relationship name");
      Token source = expect(Tok::Ident, "source identifier");
      expect(Tok::Comma, "','");
      Token target = expect(Tok::Ident, "target identifier");
      expect(Tok::RParen, "')'");
      links_.push_back({Link{rel.text, source.text, target.text}, source, target});
    } catch (const Abort&) {
      if (!at_statement_start()) recover();
    }
  }

  Lexer lexer_;
  Token cur_;
  KnowledgeBase kb_;
  std::vector<PendingLink> links_;
  std::vector<ParseDiagnostic> diags_;
};

std::string quote(std::string_view value) {
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace

ParseResult parse(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") {
    return {std::nullopt, {{1, 1, "byte order mark is not allowed"}}};
  }
  return Parser(text).run();
}

std::string serialize(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& [id, ind] : kb.individuals()) {
    out += "individual " + id + " : " + ind.type_name;
    if (!ind.attrs.empty()) {
      out += " {\n";
      for (const auto& [name, value] : ind.attrs) out += "  " + name + " = " + quote(value) + "\n";
      out += "}";
    }
    out += "\n";
  }
  for (const auto& l : kb.links()) {
    out += "link " + l.rel_name + "(" + l.source + ", " + l.target + ")\n";
  }
  return out;
}

std::string format_diagnostic(const ParseDiagnostic& d, std::string_view file) {
  std::string out;
  if (!file.empty()) out += std::string(file) + ":";
  out += std::to_string(d.line) + ":" + std::to_string(d.column) + ": error: " + d.message;
  return out;
}

}  // namespace testtdo::tkb
