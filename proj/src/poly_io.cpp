// Reader for the canonical polynomial strings produced by render().

#include <cctype>

#include "maip/algebra.hpp"
#include "maip/errors.hpp"

namespace maip {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::int64_t small_int() {
    std::string d = digits();
    if (d.size() > 18) fail("integer too large");
    return std::stoll(d);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, static_cast<int>(pos_) + 1, what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// aterm := int ["*" "c" int] | "c" int
AffineInt parse_affine_term(Cursor& cur) {
  if (cur.accept('c')) return AffineInt::symbol(static_cast<SymbolId>(cur.small_int()));
  std::int64_t k = cur.small_int();
  if (cur.accept('*')) {
    cur.expect('c');
    return AffineInt::symbol(static_cast<SymbolId>(cur.small_int()), k);
  }
  return AffineInt(k);
}

AffineInt parse_affine_expr(Cursor& cur) {
  bool negative = cur.accept('-');
  AffineInt e = parse_affine_term(cur);
  if (negative) e = -e;
  for (;;) {
    if (cur.accept('+')) {
      e += parse_affine_term(cur);
    } else if (cur.accept('-')) {
      e -= parse_affine_term(cur);
    } else {
      return e;
    }
  }
}

// term := int ["*" mono] | mono ; mono := "t" int ["^" ("(" affine ")" | int)]
void parse_term(Cursor& cur, bool negative, LaurentPoly& out) {
  Integer coeff = 1;
  if (cur.peek() != 't') {
    coeff = Integer(cur.digits());
    if (!cur.accept('*')) {
      out.add_term(std::nullopt, AffineInt{}, negative ? Integer(-coeff) : coeff);
      return;
    }
  }
  cur.expect('t');
  int var = static_cast<int>(cur.small_int());
  AffineInt exponent(1);
  if (cur.accept('^')) {
    if (cur.accept('(')) {
      exponent = parse_affine_expr(cur);
      cur.expect(')');
    } else {
      exponent = AffineInt(cur.small_int());
    }
  }
  out.add_term(var, exponent, negative ? Integer(-coeff) : coeff);
}

}  // namespace

LaurentPoly parse_polynomial(std::string_view text) {
  Cursor cur(text);
  LaurentPoly p;
  if (cur.done()) cur.fail("empty polynomial");
  bool negative = cur.accept('-');
  parse_term(cur, negative, p);
  while (!cur.done()) {
    if (cur.accept('+')) {
      negative = false;
    } else if (cur.accept('-')) {
      negative = true;
    } else {
      cur.fail("expected '+' or '-'");
    }
    parse_term(cur, negative, p);
  }
  return p;
}

AffineInt parse_affine(std::string_view text) {
  Cursor cur(text);
  AffineInt e = parse_affine_expr(cur);
  if (!cur.done()) cur.fail("trailing input");
  return e;
}

}  // namespace maip
