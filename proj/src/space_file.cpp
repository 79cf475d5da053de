#include "mvs/space_file.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>

namespace mvs {

namespace {

struct Token {
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&]() {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance();
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    Token tok{"", line, column};
    if (ch == '{' || ch == '}') {
      tok.text = ch;
      advance();
    } else if (ch == '(') {
      // Vectors may contain spaces after commas; keep them as one token.
      while (i < text.size() && text[i] != ')') {
        if (text[i] == '\n' || text[i] == '#') throw ParseError(tok.line, tok.column, "unterminated vector");
        tok.text += text[i];
        advance();
      }
      if (i == text.size()) throw ParseError(tok.line, tok.column, "unterminated vector");
      tok.text += ')';
      advance();
    } else {
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '{' &&
             text[i] != '}' && text[i] != '(' && text[i] != '#') {
        tok.text += text[i];
        advance();
      }
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  SpaceFile parse() {
    SpaceFile file;
    std::optional<Field> field;
    std::optional<std::size_t> ambient;
    std::optional<unsigned> omega;
    std::set<std::string> names;
    while (!at_end()) {
      const Token& kw = next();
      if (kw.text == "field") {
        if (field) fail(kw, "duplicate field declaration");
        const Token& f = expect_word("field name");
        if (f.text == "Q") {
          field = Field::rational();
        } else if (f.text == "GF") {
          const Token& p = expect_word("prime");
          try {
            field = Field::prime(number(p));
          } catch (const PreconditionError& e) {
            fail(p, e.what());
          }
        } else {
          fail(f, "expected Q or GF");
        }
      } else if (kw.text == "ambient") {
        if (ambient) fail(kw, "duplicate ambient declaration");
        ambient = number(expect_word("dimension"));
      } else if (kw.text == "omega") {
        if (omega) fail(kw, "duplicate omega declaration");
        omega = static_cast<unsigned>(number(expect_word("omega")));
      } else if (kw.text == "space") {
        if (!field || !ambient || !omega) fail(kw, "field, ambient and omega must precede the first space");
        const Token& name = expect_word("space name");
        if (!names.insert(name.text).second) fail(name, "duplicate space name '" + name.text + "'");
        file.spaces.push_back({name.text, parse_block(name.text, *field, *ambient, *omega)});
      } else {
        fail(kw, "unexpected '" + kw.text + "'");
      }
    }
    if (file.spaces.empty()) {
      const std::size_t line = tokens_.empty() ? 1 : tokens_.back().line;
      const std::size_t col = tokens_.empty() ? 1 : tokens_.back().column;
      throw ParseError(line, col, "no spaces");
    }
    file.field = *field;
    file.ambient = *ambient;
    file.omega = *omega;
    return file;
  }

 private:
  MVSpace parse_block(const std::string& name, Field field, std::size_t ambient, unsigned omega) {
    std::vector<Level> levels;
    while (true) {
      const Token& kw = next();
      if (kw.text == "end") break;
      if (kw.text != "level") fail(kw, "expected 'level' or 'end'");
      const auto count = static_cast<unsigned>(number(expect_word("level count")));
      const Token& span = expect_word("'span'");
      if (span.text != "span") fail(span, "expected 'span'");
      expect("{");
      std::vector<Vector> gens;
      while (peek().text != "}") {
        const Token& v = next();
        if (v.text.empty() || v.text.front() != '(') fail(v, "expected a vector or '}'");
        try {
          gens.push_back(Vector::parse(field, v.text));
        } catch (const Error& e) {
          fail(v, e.what());
        }
        if (gens.back().size() != ambient) {
          fail(v, "vector has " + std::to_string(gens.back().size()) + " coordinates, ambient is " +
                      std::to_string(ambient));
        }
      }
      expect("}");
      levels.push_back(Level{count, subspace_from_generators(field, ambient, gens)});
    }
    MVSpace v(field, ambient, omega, std::move(levels));
    if (const auto report = v.validate(); !report) {
      throw InvariantViolation("space " + name + ": " + report.violation);
    }
    return v;
  }

  bool at_end() const { return pos_ >= tokens_.size(); }

  const Token& peek() {
    if (at_end()) eof("unexpected end of file");
    return tokens_[pos_];
  }

  const Token& next() {
    const Token& t = peek();
    ++pos_;
    return t;
  }

  const Token& expect_word(const std::string& what) {
    const Token& t = next();
    if (t.text == "{" || t.text == "}" || t.text.front() == '(') fail(t, "expected " + what);
    return t;
  }

  void expect(const std::string& text) {
    const Token& t = next();
    if (t.text != text) fail(t, "expected '" + text + "'");
  }

  std::uint64_t number(const Token& t) {
    std::uint64_t value = 0;
    const auto* end = t.text.data() + t.text.size();
    const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc() || ptr != end) fail(t, "expected a non-negative integer, got '" + t.text + "'");
    return value;
  }

  [[noreturn]] static void fail(const Token& t, const std::string& what) { throw ParseError(t.line, t.column, what); }

  [[noreturn]] void eof(const std::string& what) const {
    const std::size_t line = tokens_.empty() ? 1 : tokens_.back().line;
    const std::size_t col = tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
    throw ParseError(line, col, what);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

const MVSpace& SpaceFile::get(std::string_view name) const {
  for (const auto& s : spaces) {
    if (s.name == name) return s.space;
  }
  throw PreconditionError("no space named '" + std::string(name) + "'");
}

SpaceFile parse_space_file(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string serialize_space(const std::string& name, const MVSpace& v) {
  std::string out = "space " + name + "\n";
  for (const Level& l : v.chain()) {
    out += "  level " + std::to_string(l.count) + " span {";
    for (const auto& row : l.subspace.rows()) out += " " + row.to_string();
    out += " }\n";
  }
  out += "end\n";
  return out;
}

std::string serialize(const SpaceFile& file) {
  std::string out = "field " + file.field.to_string() + "\n";
  out += "ambient " + std::to_string(file.ambient) + "\n";
  out += "omega " + std::to_string(file.omega) + "\n";
  for (const auto& s : file.spaces) out += "\n" + serialize_space(s.name, s.space);
  return out;
}

}  // namespace mvs
