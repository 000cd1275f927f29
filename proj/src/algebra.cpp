#include "maip/algebra.hpp"

#include <limits>
#include <utility>

#include "maip/errors.hpp"

namespace maip {

namespace {

void accumulate(std::map<SymbolId, std::int64_t>& into, SymbolId id, std::int64_t delta) {
  if (delta == 0) return;
  auto [it, inserted] = into.try_emplace(id, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) into.erase(it);
  }
}

Monomial make_key(std::optional<int> var, const AffineInt& exponent) {
  if (exponent.is_zero()) return Monomial{std::nullopt, AffineInt{}};
  return Monomial{var, exponent};
}

}  // namespace

// --- AffineInt -------------------------------------------------------------

AffineInt AffineInt::symbol(SymbolId id, std::int64_t coeff) {
  AffineInt a;
  accumulate(a.coeffs_, id, coeff);
  return a;
}

std::int64_t AffineInt::coeff(SymbolId id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? 0 : it->second;
}

AffineInt& AffineInt::operator+=(const AffineInt& other) {
  constant_ += other.constant_;
  for (const auto& [id, c] : other.coeffs_) accumulate(coeffs_, id, c);
  return *this;
}

AffineInt& AffineInt::operator-=(const AffineInt& other) {
  constant_ -= other.constant_;
  for (const auto& [id, c] : other.coeffs_) accumulate(coeffs_, id, -c);
  return *this;
}

AffineInt AffineInt::operator-() const {
  AffineInt r;
  r.constant_ = -constant_;
  for (const auto& [id, c] : coeffs_) r.coeffs_.emplace(id, -c);
  return r;
}

AffineInt operator*(std::int64_t k, const AffineInt& a) {
  if (k == 0) return AffineInt{};
  AffineInt r;
  r.constant_ = k * a.constant_;
  for (const auto& [id, c] : a.coeffs_) r.coeffs_.emplace(id, k * c);
  return r;
}

std::strong_ordering operator<=>(const AffineInt& a, const AffineInt& b) {
  auto ia = a.coeffs_.begin();
  auto ib = b.coeffs_.begin();
  while (ia != a.coeffs_.end() || ib != b.coeffs_.end()) {
    SymbolId next;
    if (ia == a.coeffs_.end()) {
      next = ib->first;
    } else if (ib == b.coeffs_.end()) {
      next = ia->first;
    } else {
      next = std::min(ia->first, ib->first);
    }
    std::int64_t ca = (ia != a.coeffs_.end() && ia->first == next) ? (ia++)->second : 0;
    std::int64_t cb = (ib != b.coeffs_.end() && ib->first == next) ? (ib++)->second : 0;
    if (ca != cb) return ca <=> cb;
  }
  return a.constant_ <=> b.constant_;
}

std::string AffineInt::to_string() const {
  std::string out;
  for (const auto& [id, c] : coeffs_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "c" + std::to_string(id);
  }
  if (out.empty()) return std::to_string(constant_);
  if (constant_ > 0) out += "+" + std::to_string(constant_);
  if (constant_ < 0) out += std::to_string(constant_);
  return out;
}

AffineInt affine_add(const AffineInt& a, const AffineInt& b) { return a + b; }

AffineInt rewrite_symbols(const AffineInt& a, const std::map<SymbolId, AffineInt>& images) {
  AffineInt r(a.constant());
  for (const auto& [id, c] : a.coeffs()) {
    auto it = images.find(id);
    r += it == images.end() ? AffineInt::symbol(id, c) : c * it->second;
  }
  return r;
}

// --- Monomial / LaurentPoly -------------------------------------------------

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.var != b.var) {
    if (!a.var) return std::strong_ordering::less;
    if (!b.var) return std::strong_ordering::greater;
    return *a.var <=> *b.var;
  }
  return a.exponent <=> b.exponent;
}

LaurentPoly LaurentPoly::constant(const Integer& value) {
  LaurentPoly p;
  p.add_term(std::nullopt, AffineInt{}, value);
  return p;
}

LaurentPoly LaurentPoly::monomial(int var, const AffineInt& exponent, const Integer& coeff) {
  LaurentPoly p;
  p.add_term(var, exponent, coeff);
  return p;
}

Integer LaurentPoly::coefficient(std::optional<int> var, const AffineInt& exponent) const {
  auto it = terms_.find(make_key(var, exponent));
  return it == terms_.end() ? Integer{0} : it->second;
}

void LaurentPoly::add_term(std::optional<int> var, const AffineInt& exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(make_key(var, exponent), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m.var, m.exponent, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m.var, m.exponent, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly operator*(const Integer& k, const LaurentPoly& p) {
  LaurentPoly r;
  if (k == 0) return r;
  for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, k * c);
  return r;
}

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly shift_monomial(const LaurentPoly& p, int var, const AffineInt& shift) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.var && *m.var != var) {
      throw Error(ErrorCode::MixedVariable, "shift_monomial: term in t" + std::to_string(*m.var) +
                                                " while shifting t" + std::to_string(var));
    }
    r.add_term(var, m.exponent + shift, c);
  }
  return r;
}

LaurentPoly substitute_symbols(const LaurentPoly& p,
                               const std::map<SymbolId, std::int64_t>& values) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    std::int64_t e = m.exponent.constant();
    for (const auto& [id, k] : m.exponent.coeffs()) {
      auto it = values.find(id);
      if (it == values.end()) {
        throw Error(ErrorCode::MissingSymbol, "no value for symbol c" + std::to_string(id));
      }
      e += k * it->second;
    }
    r.add_term(m.var, AffineInt(e), c);
  }
  return r;
}

LaurentPoly rewrite_symbols(const LaurentPoly& p, const std::map<SymbolId, AffineInt>& images) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) r.add_term(m.var, rewrite_symbols(m.exponent, images), c);
  return r;
}

LaurentPoly relabel(const LaurentPoly& p, const std::function<int(int)>& var_map,
                    const std::function<SymbolId(SymbolId)>& symbol_map) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    AffineInt e(m.exponent.constant());
    for (const auto& [id, k] : m.exponent.coeffs()) e += AffineInt::symbol(symbol_map(id), k);
    std::optional<int> v = m.var ? std::optional<int>(var_map(*m.var)) : std::nullopt;
    r.add_term(v, e, c);
  }
  return r;
}

LaurentPoly shift_indices(const LaurentPoly& p, int offset) {
  if (offset == 0) return p;
  auto shift = [offset](int i) { return i + offset; };
  return relabel(p, shift, shift);
}

LaurentPoly collapse_variables(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (!m.exponent.is_constant()) {
      throw Error(ErrorCode::SymbolicExponent,
                  "collapse_variables: exponent " + m.exponent.to_string() + " is symbolic");
    }
    r.add_term(1, m.exponent, c);
  }
  return r;
}

std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Integer mag = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!m.var) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "t" + std::to_string(*m.var);
    if (m.exponent != AffineInt(1)) out += "^(" + m.exponent.to_string() + ")";
  }
  return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json syms = nlohmann::json::object();
    for (const auto& [id, k] : m.exponent.coeffs()) syms["c" + std::to_string(id)] = k;
    nlohmann::json coeff;
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      coeff = c.convert_to<std::int64_t>();
    } else {
      coeff = c.str();
    }
    terms.push_back({{"var", m.var ? nlohmann::json(*m.var) : nlohmann::json(nullptr)},
                     {"coeff", coeff},
                     {"exp", {{"const", m.exponent.constant()}, {"syms", syms}}}});
  }
  return terms;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Syntax, "polynomial JSON must be an array of terms");
  LaurentPoly p;
  for (const auto& term : j) {
    std::optional<int> var;
    if (!term.at("var").is_null()) var = term.at("var").get<int>();
    const auto& jc = term.at("coeff");
    Integer coeff = jc.is_string() ? Integer(jc.get<std::string>()) : Integer(jc.get<std::int64_t>());
    const auto& je = term.at("exp");
    AffineInt e(je.value("const", std::int64_t{0}));
    if (je.contains("syms")) {
      for (const auto& [name, k] : je.at("syms").items()) {
        if (name.size() < 2 || name[0] != 'c') {
          throw Error(ErrorCode::Syntax, "bad symbol name in polynomial JSON: " + name);
        }
        e += AffineInt::symbol(std::stoi(name.substr(1)), k.get<std::int64_t>());
      }
    }
    if (!var && !e.is_zero()) {
      throw Error(ErrorCode::Syntax, "polynomial JSON: constant term with nonzero exponent");
    }
    p.add_term(var, e, coeff);
  }
  return p;
}

}  // namespace maip
