#pragma once

// Shared test helpers: fixture loading and an independent numeric oracle
// for the polynomial, evaluated exactly over the rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <random>
#include <string>

#include "maip/algebra.hpp"
#include "maip/diagram.hpp"

namespace maip::test {

using Rational = boost::multiprecision::cpp_rational;

inline TangleDiagram fixture(const std::string& name) {
  return load_diagram(std::string(MAIP_FIXTURE_DIR) + "/" + name + ".tangle");
}

inline Rational power(const Rational& base, std::int64_t e) {
  Rational r = 1;
  Rational b = e < 0 ? Rational(1) / base : base;
  for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) r *= b;
  return r;
}

struct Point {
  std::map<SymbolId, std::int64_t> c;  // starting labels
  std::map<int, Rational> t;           // variable values, nonzero
};

inline std::int64_t eval_affine(const AffineInt& a, const Point& at) {
  std::int64_t v = a.constant();
  for (const auto& [s, k] : a.coeffs()) v += k * at.c.at(s);
  return v;
}

inline Rational eval_poly(const LaurentPoly& p, const Point& at) {
  Rational sum = 0;
  for (const auto& [mono, coeff] : p.terms()) {
    Rational term(coeff);
    if (mono.var) term *= power(at.t.at(*mono.var), eval_affine(mono.exponent, at));
    sum += term;
  }
  return sum;
}

// The defining sum, from scratch: walk each component with integer labels,
// then add sign * t_i^{delta_j} * (t_i^{W} - 1) per classical crossing.
// Shares nothing with the library beyond the diagram struct.
inline Rational oracle_value(const TangleDiagram& d, const Point& at) {
  const std::size_t n = d.components.size();
  std::vector<std::int64_t> delta(n, 0);
  std::map<CrossingId, std::int64_t> over_in, under_in;
  std::map<CrossingId, std::size_t> over_comp, under_comp;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t label = at.c.at(static_cast<SymbolId>(i + 1));
    const std::int64_t start = label;
    for (const Passage& p : d.components[i].events) {
      const int s = d.crossings.at(p.crossing).sign;
      if (p.role == Role::Over) {
        over_in[p.crossing] = label;
        over_comp[p.crossing] = i;
        label -= s;
      } else if (p.role == Role::Under) {
        under_in[p.crossing] = label;
        under_comp[p.crossing] = i;
        label += s;
      }
    }
    delta[i] = label - start;
  }
  Rational sum = 0;
  for (const auto& [id, rec] : d.crossings) {
    if (rec.kind != CrossingKind::Classical) continue;
    const std::int64_t w = over_in[id] - under_in[id] - rec.sign;
    const Rational& t = at.t.at(static_cast<int>(over_comp[id] + 1));
    sum += Rational(rec.sign) * power(t, delta[under_comp[id]]) * (power(t, w) - 1);
  }
  return sum;
}

inline Point random_point(std::mt19937_64& rng, std::size_t components) {
  Point p;
  std::uniform_int_distribution<int> label(-4, 4);
  std::uniform_int_distribution<int> num(1, 7);
  for (std::size_t i = 1; i <= components; ++i) {
    p.c[static_cast<SymbolId>(i)] = label(rng);
    Rational v(num(rng), num(rng));
    p.t[static_cast<int>(i)] = (rng() & 1) ? v : -v;
  }
  return p;
}

}  // namespace maip::test
