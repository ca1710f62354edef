#include "cohring/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cohring {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, const std::vector<std::string>& vars)
      : text_(text), ring_(ring), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    bool negate = accept('-');
    MultiPoly acc = term();
    if (negate) acc = dsum_neg(acc);
    for (;;) {
      if (accept('+')) {
        acc = dsum_add(acc, term());
      } else if (accept('-')) {
        acc = dsum_sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc = mul(acc, factor());
    return acc;
  }

  MultiPoly factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    MultiPoly base_value = multi_zero(ring_, vars_.size());
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      base_value = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (digit(c)) {
      base_value = multi_constant(ring_, vars_.size(), ring_.canonical(integer()));
    } else if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + name + "'");
      base_value = multi_var(ring_, vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (accept('^')) {
      skip_space();
      std::size_t at = pos_;
      Integer e = integer();
      if (!e.fits_int64() || e.to_int64() > 0xFFFFFFFFLL || (base_value.size() > 1 && e.to_int64() > 4096)) {
        pos_ = at;
        fail("exponent too large");
      }
      base_value = pow(base_value, static_cast<std::uint64_t>(e.to_int64()));
    }
    return base_value;
  }

  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a number");
    return *Integer::parse(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const Ring& ring_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Ring& ring, const std::vector<std::string>& vars) {
  return Parser(text, ring, vars).parse();
}

std::vector<MultiPoly> parse_ideal(std::string_view text, const Ring& ring, const std::vector<std::string>& vars) {
  std::size_t first = text.find_first_not_of(" \t\n");
  std::size_t last = text.find_last_not_of(" \t\n");
  if (first == std::string_view::npos) throw SyntaxError(0, "empty ideal");
  std::size_t offset = first;
  std::string_view body = text.substr(first, last - first + 1);
  if (body.front() == '(' && body.back() == ')') {
    // only strip when the outer parentheses enclose everything
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (depth == 0 && i + 1 < body.size()) encloses = false;
    }
    if (encloses) {
      body = body.substr(1, body.size() - 2);
      ++offset;
    }
  }
  std::vector<MultiPoly> gens;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '(') ++depth;
    if (i < body.size() && body[i] == ')') --depth;
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      try {
        gens.push_back(parse_poly(body.substr(start, i - start), ring, vars));
      } catch (const SyntaxError& e) {
        throw SyntaxError(offset + start + e.position(), e.detail());
      }
      start = i + 1;
    }
  }
  return gens;
}

std::vector<std::string> parse_var_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',') continue;
    std::string_view name = text.substr(start, i - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (name.empty() || !ident_start(name.front()) || !std::all_of(name.begin(), name.end(), ident_char)) {
      throw SyntaxError(start, "bad variable name '" + std::string(name) + "'");
    }
    if (std::find(out.begin(), out.end(), name) != out.end()) {
      throw Error(ErrorKind::ConfigError, "variable '" + std::string(name) + "' declared twice");
    }
    out.emplace_back(name);
    start = i + 1;
  }
  return out;
}

std::vector<std::string> infer_vars(const std::vector<std::string>& texts) {
  std::set<std::string> seen;
  for (const auto& t : texts) {
    for (std::size_t i = 0; i < t.size();) {
      if (ident_start(t[i])) {
        std::size_t j = i;
        while (j < t.size() && ident_char(t[j])) ++j;
        seen.insert(t.substr(i, j - i));
        i = j;
      } else {
        ++i;
      }
    }
  }
  auto rank = [](const std::string& v) -> std::pair<int, std::uint64_t> {
    if (v == "X") return {0, 0};
    if (v == "Y") return {1, 0};
    if (v.size() > 1 && v.size() < 12 && v[0] == 'X' && v[1] != '0' &&
        std::all_of(v.begin() + 1, v.end(), digit)) {
      return {2, std::stoull(v.substr(1))};
    }
    return {3, 0};
  };
  std::vector<std::string> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [&](const std::string& a, const std::string& b) { return rank(a) < rank(b); });
  return out;
}

}  // namespace cohring
