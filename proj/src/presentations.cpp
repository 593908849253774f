#include "presentations.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "error.hpp"

namespace concalc {

namespace {

constexpr std::size_t kMaxExponent = 100000;

enum class Tok { Ident, Int, Plus, Minus, Star, Caret, Slash, Equals, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

[[noreturn]] void syntax_error(std::size_t line, std::size_t column, const std::string& msg) {
  std::string where = line == 0 ? "" : "line " + std::to_string(line) + ", ";
  fail(ErrorKind::Input, where + "column " + std::to_string(column) + ": " + msg);
}

std::vector<Token> tokenize(std::string_view s, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t col = i + 1;
    if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '/': kind = Tok::Slash; break;
      case '=': kind = Tok::Equals; break;
      case ',': kind = Tok::Comma; break;
      default:
        syntax_error(line, col, std::string("unexpected character '") + s[i] + "'");
    }
    out.push_back({kind, std::string(1, s[i]), col});
    ++i;
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

// Generator lookup; when open, unknown identifiers are appended in order of
// first appearance.
struct Alphabet {
  std::vector<std::string> names;
  bool open = false;

  Letter lookup(const Token& t, std::size_t line) {
    auto it = std::find(names.begin(), names.end(), t.text);
    if (it != names.end()) return static_cast<Letter>(it - names.begin());
    if (!open) syntax_error(line, t.column, "unknown generator '" + t.text + "'");
    names.push_back(t.text);
    return static_cast<Letter>(names.size() - 1);
  }
};

class ExprParser {
 public:
  ExprParser(std::vector<Token> toks, std::size_t line, Alphabet& alphabet)
      : toks_(std::move(toks)), line_(line), alphabet_(alphabet) {}

  NCPoly relation() {
    NCPoly lhs = expr();
    if (accept(Tok::Equals)) {
      NCPoly rhs = expr();
      lhs = lhs - rhs;
    }
    expect_end();
    return lhs;
  }

  NCPoly polynomial() {
    NCPoly f = expr();
    expect_end();
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect_end() {
    if (peek().kind != Tok::End)
      syntax_error(line_, peek().column, "unexpected '" + peek().text + "'");
  }

  NCPoly expr() {
    NCPoly out = term();
    for (;;) {
      if (accept(Tok::Plus)) {
        out = out + term();
      } else if (accept(Tok::Minus)) {
        out = out - term();
      } else {
        return out;
      }
    }
  }

  NCPoly term() {
    bool negative = accept(Tok::Minus);
    if (!negative) accept(Tok::Plus);
    Rational coeff = 1;
    bool have_coeff = false;
    bool need_factor = false;
    if (peek().kind == Tok::Int) {
      std::string num = toks_[pos_++].text;
      std::string den = "1";
      if (accept(Tok::Slash)) {
        if (peek().kind != Tok::Int) syntax_error(line_, peek().column, "expected denominator");
        den = toks_[pos_++].text;
        if (mpz_class(den) == 0) syntax_error(line_, toks_[pos_ - 1].column, "zero denominator");
      }
      coeff = Rational(mpz_class(num), mpz_class(den));
      have_coeff = true;
      need_factor = accept(Tok::Star);
    }
    std::vector<Letter> letters;
    if (peek().kind == Tok::Ident) {
      factor(letters);
      while (accept(Tok::Star)) {
        if (peek().kind != Tok::Ident)
          syntax_error(line_, peek().column, "expected generator after '*'");
        factor(letters);
      }
    } else if (!have_coeff || need_factor) {
      syntax_error(line_, peek().column,
                   peek().kind == Tok::End ? "unexpected end of line"
                                           : "expected term, found '" + peek().text + "'");
    }
    if (negative) coeff = -coeff;
    return NCPoly::monomial(Word(std::move(letters)), coeff);
  }

  void factor(std::vector<Letter>& letters) {
    Letter l = alphabet_.lookup(toks_[pos_++], line_);
    std::size_t exponent = 1;
    if (accept(Tok::Caret)) {
      if (peek().kind != Tok::Int) syntax_error(line_, peek().column, "expected exponent");
      const Token& t = toks_[pos_++];
      if (t.text.size() > 6 || std::stoul(t.text) > kMaxExponent)
        syntax_error(line_, t.column, "exponent too large");
      exponent = std::stoul(t.text);
    }
    letters.insert(letters.end(), exponent, l);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  Alphabet& alphabet_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string print_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  std::size_t i = 0;
  while (i < w.degree()) {
    std::size_t j = i;
    while (j < w.degree() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += names.at(w[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
  });
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  p.name = "unnamed";
  Alphabet alphabet;
  alphabet.open = true;
  bool seen_name = false;
  bool seen_generators = false;
  bool in_relations = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;

    std::vector<Token> toks = tokenize(raw, line_no);
    const Token& head = toks.front();
    if (!in_relations && head.kind == Tok::Ident) {
      if (head.text == "algebra") {
        if (seen_name || seen_generators)
          syntax_error(line_no, head.column, "'algebra' must be the first line");
        if (toks[1].kind != Tok::Ident || toks[2].kind != Tok::End)
          syntax_error(line_no, toks[1].column, "expected 'algebra NAME'");
        p.name = toks[1].text;
        seen_name = true;
        continue;
      }
      if (head.text == "generators") {
        if (seen_generators) syntax_error(line_no, head.column, "duplicate 'generators' line");
        seen_generators = true;
        alphabet.open = false;
        std::size_t i = 1;
        while (toks[i].kind != Tok::End) {
          if (toks[i].kind != Tok::Ident)
            syntax_error(line_no, toks[i].column, "expected generator name");
          if (std::find(alphabet.names.begin(), alphabet.names.end(), toks[i].text) !=
              alphabet.names.end())
            syntax_error(line_no, toks[i].column, "duplicate generator '" + toks[i].text + "'");
          alphabet.names.push_back(toks[i].text);
          ++i;
          if (toks[i].kind == Tok::Comma) {
            ++i;
            if (toks[i].kind != Tok::Ident)
              syntax_error(line_no, toks[i].column, "expected generator name after ','");
          } else if (toks[i].kind != Tok::End) {
            syntax_error(line_no, toks[i].column, "expected ',' between generators");
          }
        }
        continue;
      }
      if (head.text == "relations") {
        if (toks[1].kind != Tok::End)
          syntax_error(line_no, toks[1].column, "relations start on the next line");
        in_relations = true;
        continue;
      }
    }
    if (!in_relations)
      syntax_error(line_no, head.column, "expected 'algebra', 'generators' or 'relations'");

    NCPoly rel = ExprParser(std::move(toks), line_no, alphabet).relation();
    if (rel.is_zero()) syntax_error(line_no, 1, "relation simplifies to zero");
    p.relations.push_back(std::move(rel));
  }
  p.generators = std::move(alphabet.names);
  p.validate();
  return p;
}

NCPoly parse_polynomial(std::string_view text, const std::vector<std::string>& generators) {
  Alphabet alphabet{generators, false};
  if (trim(text).empty()) fail(ErrorKind::Input, "empty polynomial");
  return ExprParser(tokenize(text, 0), 0, alphabet).polynomial();
}

std::string print_polynomial(const NCPoly& f, const std::vector<std::string>& generators) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.sorted_terms(MonomialOrder::identity(generators.size()))) {
    Rational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += print_word(w, generators);
    } else {
      out += magnitude.to_string() + "*" + print_word(w, generators);
    }
  }
  return out;
}

std::string print_presentation(const Presentation& p) {
  p.validate();
  std::ostringstream os;
  os << "algebra " << p.name << "\n";
  os << "generators";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    os << (i == 0 ? " " : ", ") << p.generators[i];
  os << "\nrelations\n";
  for (const NCPoly& r : p.relations) os << "  " << print_polynomial(r, p.generators) << "\n";
  return os.str();
}

Presentation abelianize(const Presentation& p) {
  Presentation out = p;
  out.name = p.name + "_ab";
  for (Letter i = 0; i < p.alphabet_size(); ++i) {
    for (Letter j = i + 1; j < p.alphabet_size(); ++j) {
      NCPoly c = NCPoly::monomial(Word{i, j}) - NCPoly::monomial(Word{j, i});
      if (std::find(out.relations.begin(), out.relations.end(), c) == out.relations.end())
        out.relations.push_back(std::move(c));
    }
  }
  return out;
}

Presentation reorder_generators(const Presentation& p, const std::vector<Letter>& precedence) {
  MonomialOrder check(precedence);
  if (check.alphabet_size() != p.alphabet_size())
    fail(ErrorKind::Input, "reordering must be a permutation of the generators");
  std::vector<Letter> new_index(precedence.size());
  Presentation out;
  out.name = p.name;
  for (std::size_t k = 0; k < precedence.size(); ++k) {
    new_index[precedence[k]] = static_cast<Letter>(k);
    out.generators.push_back(p.generators.at(precedence[k]));
  }
  for (const NCPoly& r : p.relations) {
    NCPoly q;
    for (const auto& [w, c] : r.terms()) {
      std::vector<Letter> letters;
      for (Letter l : w) letters.push_back(new_index.at(l));
      q.add_term(Word(std::move(letters)), c);
    }
    out.relations.push_back(std::move(q));
  }
  return out;
}

bool is_commutative_quotient(const Presentation& p, const CompletionConfig& cfg) {
  GroebnerBasis basis = complete(p, cfg);
  if (basis.truncated())
    fail(ErrorKind::Indeterminate, "commutativity is undecided: the basis of '" + p.name +
                                       "' is truncated at degree " +
                                       std::to_string(basis.truncation_degree()));
  for (Letter i = 0; i < p.alphabet_size(); ++i)
    for (Letter j = i + 1; j < p.alphabet_size(); ++j) {
      NCPoly c = NCPoly::monomial(Word{i, j}) - NCPoly::monomial(Word{j, i});
      if (!normal_form(c, basis).is_zero()) return false;
    }
  return true;
}

}  // namespace concalc
