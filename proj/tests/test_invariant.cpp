#include <doctest.h>

#include <random>

#include "maip/errors.hpp"
#include "maip/invariant.hpp"
#include "support.hpp"

using namespace maip;
using maip::test::fixture;

namespace {

AffineInt c(int i) { return AffineInt::symbol(i); }
LaurentPoly P(std::string_view s) { return parse_polynomial(s); }

const CrossingContribution& contribution_of(const std::vector<CrossingContribution>& all, CrossingId id) {
  for (const auto& x : all) {
    if (x.id == id) return x;
  }
  throw std::out_of_range("no contribution");
}

}  // namespace

TEST_CASE("labels on fixture ex3") {
  TangleDiagram d = fixture("ex3");
  Labeling l = propagate_labels(d);
  CHECK(l.delta == std::vector<std::int64_t>{-1, 1, 0});
  CHECK(l.arcs[2] == std::vector<AffineInt>{c(3), c(3) + 1, c(3)});
}

TEST_CASE("labels on fixture ex2") {
  Labeling l = propagate_labels(fixture("ex2"));
  CHECK(l.delta == std::vector<std::int64_t>{-1, 1, 0});
}

TEST_CASE("labels on a positive kink") {
  Labeling l = propagate_labels(fixture("kink"));
  CHECK(l.delta == std::vector<std::int64_t>{0});
  CHECK(l.arcs[0] == std::vector<AffineInt>{c(1), c(1) - 1, c(1)});
}

TEST_CASE("supplied start labels") {
  std::vector<AffineInt> starts{5, 0, -2};
  Labeling l = propagate_labels(fixture("ex3"), starts);
  CHECK(l.final_label(0) == AffineInt(4));
  CHECK_THROWS_AS(propagate_labels(fixture("ex3"), std::vector<AffineInt>{1}), Error);
}

TEST_CASE("crossing weights") {
  TangleDiagram d = fixture("ex3");
  Labeling l = propagate_labels(d);
  CHECK(crossing_weight(d, l, 1) == c(1) - c(3) - 1);
  CHECK(crossing_weight(d, l, 2) == c(2) - c(3));
  // Equivalently incoming over minus outgoing under.
  for (const auto& x : contributions(d, l)) CHECK(x.weight == x.over_incoming - x.under_outgoing);

  TangleDiagram k = fixture("kink");
  CHECK(crossing_weight(k, propagate_labels(k), 1).is_zero());

  TangleDiagram s = fixture("sing");
  try {
    crossing_weight(s, propagate_labels(s), 1);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClassical);
  }
}

TEST_CASE("weight table") {
  TangleDiagram d = fixture("ex3");
  WeightTable t = weight_table(d, propagate_labels(d));
  REQUIRE(t.size() == 2);
  CHECK(t.at(1).over_component == 0);
  CHECK(t.at(1).under_component == 2);
  CHECK(t.at(2).sign == -1);
}

TEST_CASE("maip of the small fixtures") {
  CHECK(maip::maip(fixture("ex3")) == P("t1^(c1-c3-1) - t2^(c2-c3)"));
  // Oracle: t1^(-1)(t1 - 1) + t1(t1^(c1-c2-2) - 1), expanded by hand.
  CHECK(maip::maip(fixture("ex2")) == P("1 - t1^(-1) + t1^(c1-c2-1) - t1"));
  CHECK(maip::maip(parse_diagram("tangle m=1 n=1\ncomponent 1 long from B1 to T1 :\n")).is_zero());
  CHECK(maip::maip(fixture("kink")).is_zero());
  try {
    maip::maip(fixture("sing"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HasSingular);
    CHECK(std::string(e.what()) == "diagram has singular crossings; use resolve");
  }
}

TEST_CASE("ex2 unsimplified contributions") {
  TangleDiagram d = fixture("ex2");
  auto all = contributions(d, propagate_labels(d));
  const auto& first = contribution_of(all, 1);
  CHECK(first.over_incoming == c(1));
  CHECK(first.under_outgoing == c(1) - 1);
  CHECK(first.delta_exponent == -1);
  const auto& second = contribution_of(all, 2);
  CHECK(second.over_incoming == c(1) - 1);
  CHECK(second.under_incoming == c(2));
  CHECK(second.under_outgoing == c(2) + 1);
  CHECK(second.weight == c(1) - c(2) - 2);
  CHECK(second.delta_exponent == 1);
  CHECK(second.term() == P("t1^(c1-c2-1) - t1"));
}

TEST_CASE("structured form evaluates to the polynomial") {
  for (const char* name : {"ex1", "ex2", "ex3", "ex4", "kink"}) {
    TangleDiagram d = fixture(name);
    CHECK(structured_maip(d).evaluate() == maip::maip(d));
  }
}

TEST_CASE("resolving one double point") {
  auto terms = resolve_singular(fixture("sing"));
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].coefficient == 1);
  CHECK(serialize(terms[0].diagram) ==
        "tangle m=2 n=2\ncomponent 1 long from B1 to T2 : O1+\ncomponent 2 long from B2 to T1 : U1+\n");
  CHECK(terms[1].coefficient == -1);
  CHECK(serialize(terms[1].diagram) ==
        "tangle m=2 n=2\ncomponent 1 long from B1 to T2 : U1-\ncomponent 2 long from B2 to T1 : O1-\n");
  // Oracle: maip::maip(D+) - maip::maip(D-) from the two hand-computed resolutions.
  LaurentPoly plus = P("t1^(c1-c2) - t1");
  LaurentPoly minus = P("-t2^(c2-c1) + t2^(-1)");
  CHECK(maip::maip(terms[0].diagram) == plus);
  CHECK(maip::maip(terms[1].diagram) == minus);
  CHECK(vassiliev_eval(fixture("sing")) == plus - minus);
  CHECK(!vassiliev_eval(fixture("sing")).is_zero());
}

TEST_CASE("resolution bookkeeping") {
  auto terms = resolve_singular(fixture("two_sing"));
  REQUIRE(terms.size() == 4);
  std::vector<int> coeffs;
  for (const auto& t : terms) {
    coeffs.push_back(t.coefficient);
    CHECK(is_valid(t.diagram));
    CHECK(!t.diagram.has_singular());
  }
  CHECK(coeffs == std::vector<int>{1, -1, -1, 1});
  CHECK(vassiliev_eval(fixture("two_sing")).is_zero());
  CHECK(vassiliev_eval(fixture("ex3")) == maip::maip(fixture("ex3")));
  try {
    resolve_singular(fixture("ex3"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSingular);
  }
}

TEST_CASE("all resolutions share one labeling") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    TangleDiagram d = random_trial_diagram(seed, 3, 6, 2);
    Labeling base = propagate_labels(d);
    for (const auto& t : resolve_singular(d)) CHECK(propagate_labels(t.diagram).arcs == base.arcs);
  }
}

TEST_CASE("numeric oracle agrees with the symbolic polynomial") {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    TangleDiagram d = random_trial_diagram(seed);
    LaurentPoly p = maip::maip(d);
    for (int k = 0; k < 3; ++k) {
      auto at = test::random_point(rng, d.num_components());
      CAPTURE(seed);
      CHECK(test::eval_poly(p, at) == test::oracle_value(d, at));
    }
  }
}

TEST_CASE("substitution commutes with the polynomial") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    TangleDiagram d = random_trial_diagram(seed);
    std::vector<AffineInt> starts;
    std::map<SymbolId, std::int64_t> values;
    for (std::size_t i = 0; i < d.num_components(); ++i) {
      std::int64_t v = static_cast<std::int64_t>((seed * 7 + i * 3) % 9) - 4;
      starts.emplace_back(v);
      values[component_symbol(i)] = v;
    }
    Labeling numeric = propagate_labels(d, starts);
    LaurentPoly direct;
    for (const auto& x : contributions(d, numeric)) direct += x.term();
    CHECK(direct == substitute_symbols(maip::maip(d), values));
  }
}

TEST_CASE("knots and self-crossing-only diagrams have zero deltas") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    TangleDiagram d = random_diagram(seed, 1, 0, static_cast<int>(seed % 12));
    for (auto delta : propagate_labels(d).delta) CHECK(delta == 0);
  }
}
