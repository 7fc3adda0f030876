#include "lefmon/text.hpp"

#include <cctype>
#include <stdexcept>

namespace lefmon {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

[[noreturn]] void fail(const std::string& what, const std::string& token) {
  throw std::invalid_argument(what + " at '" + token + "'");
}

// var ::= 'x' digits | 'x' | 'y' | 'z' | 'w'   (aliases for x1..x4)
int parse_var(const std::string& tok, size_t& pos, int n) {
  const size_t start = pos;
  const char head = tok[pos];
  int var = 0;
  if (head == 'x' && pos + 1 < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos + 1]))) {
    ++pos;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
      var = var * 10 + (tok[pos] - '0');
      ++pos;
    }
  } else if (head == 'x' || head == 'y' || head == 'z' || head == 'w') {
    var = head - 'x' + 1;
    ++pos;
  } else {
    fail("expected a variable", tok.substr(start));
  }
  if (var < 1 || var > n) fail("variable index out of range", tok.substr(start, pos - start));
  return var;
}

long parse_int(const std::string& tok, size_t& pos) {
  const size_t start = pos;
  long v = 0;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
    v = v * 10 + (tok[pos] - '0');
    ++pos;
    if (v > 1000000000) fail("number out of range", tok.substr(start, pos - start));
  }
  if (pos == start) fail("expected a number", tok.substr(start));
  return v;
}

}  // namespace

std::vector<Monomial> parse_generators(const std::string& s, int n) {
  if (n < 1) throw std::invalid_argument("parse_generators: n must be positive");
  std::vector<Monomial> out;
  for (const std::string& raw : split(strip(s), ',')) {
    if (raw.empty()) fail("empty monomial", raw);
    std::vector<int> exps(n, 0);
    for (const std::string& factor : split(raw, '*')) {
      if (factor.empty()) fail("empty factor", raw);
      size_t pos = 0;
      const int var = parse_var(factor, pos, n);
      long exp = 1;
      if (pos < factor.size()) {
        if (factor[pos] != '^') fail("expected '^'", factor.substr(pos));
        ++pos;
        exp = parse_int(factor, pos);
      }
      if (pos != factor.size()) fail("trailing characters", factor.substr(pos));
      if (exp > 10000) fail("exponent out of range", factor);
      exps[var - 1] += static_cast<int>(exp);
    }
    out.push_back(Monomial(std::move(exps)));
  }
  return out;
}

LinearForm parse_linear_form(const std::string& s, int n) {
  const std::string t = strip(s);
  if (t.empty()) throw std::invalid_argument("parse_linear_form: empty input");
  LinearForm f;
  f.c.assign(n, 0);
  size_t pos = 0;
  while (pos < t.size()) {
    long sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      sign = t[pos] == '-' ? -1 : 1;
      ++pos;
    }
    if (pos >= t.size()) fail("dangling sign", t.substr(pos > 0 ? pos - 1 : 0));
    long coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(t[pos]))) {
      coeff = parse_int(t, pos);
      if (pos < t.size() && t[pos] == '*') ++pos;
    }
    if (pos >= t.size()) fail("constant terms are not allowed", t);
    const int var = parse_var(t, pos, n);
    if (pos < t.size() && t[pos] == '^') fail("forms must be linear", t.substr(pos));
    f.c[var - 1] += sign * coeff;
  }
  if (f.is_zero()) throw std::invalid_argument("parse_linear_form: form is zero");
  return f;
}

std::vector<LinearForm> parse_linear_forms(const std::string& s, int n) {
  std::vector<LinearForm> out;
  for (const std::string& part : split(strip(s), ','))
    out.push_back(parse_linear_form(part, n));
  return out;
}

std::string to_string(const LinearForm& f) {
  std::string s;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] == 0) continue;
    if (f.c[i] > 0 && !s.empty()) s += '+';
    if (f.c[i] == -1)
      s += '-';
    else if (f.c[i] != 1)
      s += std::to_string(f.c[i]) + '*';
    s += 'x' + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace lefmon
