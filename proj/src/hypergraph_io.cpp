#include <fstream>
#include <sstream>

#include "ghdinc/error.hpp"
#include "ghdinc/hypergraph.hpp"

namespace ghdinc {

namespace {

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == ':' || c == '.' || c == '-';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // Skips whitespace and `%` comments.
  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void expect(char c, const char* what) {
    skip_blank();
    if (at_end() || peek() != c) fail(std::string("expected ") + what);
    advance();
  }

  // Identifiers may contain '.', so a lone '.' directly after an edge is the
  // terminator and is handled by the caller before reading the next name.
  std::string identifier(const char* what) {
    skip_blank();
    std::size_t start = pos_;
    while (!at_end() && is_ident_char(peek())) {
      if (peek() == '.' && pos_ == start && !next_is_ident_after_dot()) break;
      advance();
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

 private:
  bool next_is_ident_after_dot() const {
    return pos_ + 1 < text_.size() && is_ident_char(text_[pos_ + 1]) && text_[pos_ + 1] != '.';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  Lexer lex(text);
  std::vector<EdgeSpec> specs;
  std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> seen_names;
  bool terminated = false;

  lex.skip_blank();
  while (!lex.at_end()) {
    if (lex.peek() == '.') {
      lex.advance();
      terminated = true;
      break;
    }
    const std::size_t line = lex.line(), column = lex.column();
    EdgeSpec spec;
    spec.name = lex.identifier("edge name");
    if (auto [it, fresh] = seen_names.emplace(spec.name, std::make_pair(line, column)); !fresh)
      throw ParseError("duplicate edge name '" + spec.name + "'", line, column);
    lex.expect('(', "'(' after edge name");
    lex.skip_blank();
    if (!lex.at_end() && lex.peek() == ')') throw ParseError("empty edge '" + spec.name + "'", line, column);
    while (true) {
      const std::size_t vline = lex.line(), vcolumn = lex.column();
      std::string v = lex.identifier("vertex name");
      for (const auto& existing : spec.vertices)
        if (existing == v)
          throw ParseError("duplicate vertex '" + v + "' in edge '" + spec.name + "'", vline, vcolumn);
      spec.vertices.push_back(std::move(v));
      lex.skip_blank();
      if (lex.at_end()) lex.fail("unterminated edge '" + spec.name + "'");
      if (lex.peek() == ',') {
        lex.advance();
        continue;
      }
      if (lex.peek() == ')') {
        lex.advance();
        break;
      }
      lex.fail("expected ',' or ')' in edge '" + spec.name + "'");
    }
    specs.push_back(std::move(spec));
    lex.skip_blank();
    if (!lex.at_end() && lex.peek() == ',') {
      lex.advance();
      lex.skip_blank();
    }
  }
  if (terminated) {
    lex.skip_blank();
    if (!lex.at_end()) lex.fail("unexpected content after terminating '.'");
  }
  return Hypergraph::from_edges(specs);
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hypergraph(std::string_view(buffer.str()));
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open hypergraph file '" + path + "'");
  return parse_hypergraph(in);
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    out += h.edge_name(e);
    out += '(';
    const auto& vs = h.edge_vertices(e);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out += ',';
      out += h.vertex_name(vs[i]);
    }
    out += ')';
    out += (e + 1 == h.num_edges()) ? ".\n" : ",\n";
  }
  return out;
}

}  // namespace ghdinc
