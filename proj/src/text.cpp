#include "nccov/text.hpp"

#include <cctype>
#include <vector>

namespace nccov {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) advance();
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

int unit_axis(char c) {
  switch (c) {
    case 'i': return 1;
    case 'j': return 2;
    case 'k': return 3;
    default: return 0;
  }
}

mpz_class parse_digits(Cursor& c, const char* what) {
  if (c.done() || !is_digit(c.peek())) {
    throw ParseError(std::string("expected ") + what, c.pos());
  }
  std::string digits;
  while (!c.done() && is_digit(c.peek())) {
    digits += c.peek();
    c.advance();
  }
  return mpz_class(digits);
}

Rational parse_number(Cursor& c) {
  mpz_class num = parse_digits(c, "a number");
  mpz_class den = 1;
  if (!c.done() && c.peek() == '/') {
    c.advance();
    const std::size_t den_pos = c.pos();
    den = parse_digits(c, "a denominator");
    if (den == 0) {
      throw ParseError("zero denominator", den_pos);
    }
  }
  return Rational(mpq_class(num, den));
}

// One signed term: a number, a number followed by a unit, or a bare unit.
// The sign has already been consumed.
void parse_term(Cursor& c, int sign, Rational coef[4]) {
  if (c.done()) {
    throw ParseError("expected a term", c.pos());
  }
  Rational mag(1);
  bool have_number = false;
  if (is_digit(c.peek())) {
    mag = parse_number(c);
    have_number = true;
  }
  int axis = 0;
  if (!c.done() && unit_axis(c.peek()) != 0) {
    axis = unit_axis(c.peek());
    c.advance();
  } else if (!have_number) {
    throw ParseError("expected a term", c.pos());
  }
  if (sign < 0) mag = -mag;
  coef[axis] = coef[axis] + mag;
}

// Parses a quaternion up to the first character that cannot continue it
// (anything other than a sign introducing the next term).
Quaternion parse_quaternion_at(Cursor& c) {
  Rational coef[4];
  c.skip_ws();
  int sign = 1;
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
    sign = c.peek() == '-' ? -1 : 1;
    c.advance();
    c.skip_ws();
  }
  parse_term(c, sign, coef);
  for (;;) {
    c.skip_ws();
    if (c.done() || (c.peek() != '+' && c.peek() != '-')) break;
    sign = c.peek() == '-' ? -1 : 1;
    c.advance();
    c.skip_ws();
    parse_term(c, sign, coef);
  }
  return Quaternion(coef[0], coef[1], coef[2], coef[3]);
}

}  // namespace

std::string to_text(const Rational& r) { return r.to_string(); }

std::string to_text(const Quaternion& q) {
  const Rational* comps[4] = {&q.w(), &q.x(), &q.y(), &q.z()};
  static const char units[4] = {'\0', 'i', 'j', 'k'};
  std::string out;
  for (int t = 0; t < 4; ++t) {
    const Rational& r = *comps[t];
    if (r.is_zero()) continue;
    const bool neg = r.sign() < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    const Rational mag = neg ? -r : r;
    const std::string digits = mag.to_string();
    if (t == 0) {
      out += digits;
    } else {
      if (digits != "1") out += digits;
      out += units[t];
    }
  }
  if (out.empty()) out = "0";
  return out;
}

std::string to_text(const NcMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += to_text(m(i, j));
    }
  }
  return out;
}

Quaternion parse_quaternion(const std::string& s) {
  Cursor c(s);
  Quaternion q = parse_quaternion_at(c);
  if (!c.done()) {
    throw ParseError("unexpected character", c.pos());
  }
  return q;
}

NcMatrix parse_matrix(const std::string& s) {
  Cursor c(s);
  std::vector<std::vector<Quaternion>> rows(1);
  for (;;) {
    rows.back().push_back(parse_quaternion_at(c));
    if (c.done()) break;
    const char ch = c.peek();
    if (ch == ',') {
      c.advance();
      continue;
    }
    if (ch == ';') {
      if (rows.back().size() != rows.front().size()) {
        throw ParseError("row " + std::to_string(rows.size()) + " has " +
                             std::to_string(rows.back().size()) +
                             " entries, expected " +
                             std::to_string(rows.front().size()),
                         c.pos());
      }
      c.advance();
      rows.emplace_back();
      continue;
    }
    throw ParseError("expected ',' or ';'", c.pos());
  }
  if (rows.back().size() != rows.front().size()) {
    throw ParseError("row " + std::to_string(rows.size()) + " has " +
                         std::to_string(rows.back().size()) +
                         " entries, expected " +
                         std::to_string(rows.front().size()),
                     s.size());
  }
  NcMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::string to_text(const TensorPolyMap& a) {
  std::string out = "arity=" + std::to_string(a.arity()) +
                    " dim=" + std::to_string(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::vector<std::size_t> js(a.arity(), 0);
    for (;;) {
      const auto& terms = a.terms_at(i, js);
      if (!terms.empty()) {
        out += " [" + std::to_string(i) + "|";
        for (std::size_t t = 0; t < js.size(); ++t) {
          if (t > 0) out += ",";
          out += std::to_string(js[t]);
        }
        out += ":";
        for (std::size_t s = 0; s < terms.size(); ++s) {
          if (s > 0) out += ",";
          out += "(";
          for (std::size_t f = 0; f < terms[s].size(); ++f) {
            if (f > 0) out += "|";
            out += to_text(terms[s][f]);
          }
          out += ")";
        }
        out += "]";
      }
      std::size_t pos = js.size();
      while (pos > 0 && ++js[pos - 1] == a.dim()) js[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return out;
}

}  // namespace nccov
