#pragma once

// Exact arithmetic for the invariant: affine integer expressions over the
// starting-label symbols c_i, and multivariate Laurent polynomials in t_i
// whose exponents are such expressions.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace maip {

using Integer = boost::multiprecision::cpp_int;

// Index i >= 1 of the starting label c_i.
using SymbolId = int;

// constant + sum_k coeff_k * c_k. Zero coefficients are never stored.
class AffineInt {
 public:
  AffineInt() = default;
  AffineInt(std::int64_t constant) : constant_(constant) {}  // NOLINT: implicit by intent

  static AffineInt symbol(SymbolId id, std::int64_t coeff = 1);

  std::int64_t constant() const { return constant_; }
  const std::map<SymbolId, std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(SymbolId id) const;

  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }

  AffineInt& operator+=(const AffineInt& other);
  AffineInt& operator-=(const AffineInt& other);
  AffineInt operator-() const;
  friend AffineInt operator+(AffineInt a, const AffineInt& b) { return a += b; }
  friend AffineInt operator-(AffineInt a, const AffineInt& b) { return a -= b; }
  friend AffineInt operator*(std::int64_t k, const AffineInt& a);

  friend bool operator==(const AffineInt&, const AffineInt&) = default;

  // Lexicographic on the dense symbol-coefficient vector (symbols by index),
  // then by constant.
  friend std::strong_ordering operator<=>(const AffineInt& a, const AffineInt& b);

  // "c1-c3-1", "-1", "2*c2+3", "0".
  std::string to_string() const;

 private:
  std::int64_t constant_ = 0;
  std::map<SymbolId, std::int64_t> coeffs_;
};

AffineInt affine_add(const AffineInt& a, const AffineInt& b);

// Replace every symbol by an affine expression; symbols absent from the map
// are kept.
AffineInt rewrite_symbols(const AffineInt& a, const std::map<SymbolId, AffineInt>& images);

// A monomial t_var^exponent, or the constant monomial (var empty). The
// constant monomial is the only key with a zero exponent.
struct Monomial {
  std::optional<int> var;
  AffineInt exponent;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  LaurentPoly() = default;

  static LaurentPoly constant(const Integer& value);
  // coeff * t_var^exponent; a zero exponent yields a constant.
  static LaurentPoly monomial(int var, const AffineInt& exponent, const Integer& coeff = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of t_var^exponent (or of the constant when var is empty).
  Integer coefficient(std::optional<int> var, const AffineInt& exponent) const;

  void add_term(std::optional<int> var, const AffineInt& exponent, const Integer& coeff);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const Integer& k, const LaurentPoly& p);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  TermMap terms_;
};

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);

// Multiplies p by t_var^shift. Every term of p must be in t_var or constant;
// otherwise throws Error(MixedVariable).
LaurentPoly shift_monomial(const LaurentPoly& p, int var, const AffineInt& shift);

// Evaluates every symbol to an integer. Throws Error(MissingSymbol) if a
// symbol occurring in p has no value.
LaurentPoly substitute_symbols(const LaurentPoly& p, const std::map<SymbolId, std::int64_t>& values);

// Affine-to-affine symbol substitution inside every exponent.
LaurentPoly rewrite_symbols(const LaurentPoly& p, const std::map<SymbolId, AffineInt>& images);

// Renames variables with `var_map` and symbols with `symbol_map`.
LaurentPoly relabel(const LaurentPoly& p, const std::function<int(int)>& var_map,
                    const std::function<SymbolId(SymbolId)>& symbol_map);

// Shifts every variable and symbol index by `offset` (tensor reindexing).
LaurentPoly shift_indices(const LaurentPoly& p, int offset);

// Merges all variables into t_1. Throws Error(SymbolicExponent) if any
// exponent still carries a symbol.
LaurentPoly collapse_variables(const LaurentPoly& p);

// Canonical string: "0", "1 - t1^(-1)", "t1^(c1-c3-1) - t2^(c2-c3)".
std::string render(const LaurentPoly& p);

// Inverse of render. Throws ParseError on malformed input.
LaurentPoly parse_polynomial(std::string_view text);
AffineInt parse_affine(std::string_view text);

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace maip
