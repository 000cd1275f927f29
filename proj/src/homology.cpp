#include "maip/homology.hpp"

#include <algorithm>
#include <set>

#include "maip/errors.hpp"
#include "maip/invariant.hpp"

namespace maip {

std::int64_t pairing(const TangleDiagram& d, std::span<const PassageRef> rest, const CycleSlice& slice) {
  std::set<PassageRef> in_slice(slice.passages.begin(), slice.passages.end());
  std::set<PassageRef> in_rest(rest.begin(), rest.end());
  std::int64_t total = 0;
  for (const auto& [id, loc] : locate_crossings(d)) {
    if (!d.crossing(id).is_classical()) continue;
    const int s = d.sign(id);
    // loc.first is the Over passage, loc.second the Under one.
    if (in_slice.count(loc.second) && in_rest.count(loc.first)) total += s;
    if (in_slice.count(loc.first) && in_rest.count(loc.second)) total -= s;
  }
  return total;
}

namespace {

// A traversal: passages, plus a marker where each component's events begin.
struct Element {
  bool marker = false;
  std::size_t component = 0;  // for markers
  PassageRef ref;             // for passages
};

using Curve = std::vector<Element>;

Curve run_of(const TangleDiagram& d, std::size_t c) {
  Curve out;
  out.push_back({true, c, {}});
  for (std::size_t k = 0; k < d.components[c].events.size(); ++k) out.push_back({false, c, {c, k}});
  return out;
}

Curve concat(Curve a, const Curve& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::size_t index_of(const Curve& c, PassageRef ref) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].marker && c[k].ref == ref) return k;
  }
  throw Error(ErrorCode::Validation, "passage missing from curve");
}

// Splits one curve at two of its positions; cyclic curves give two loops,
// open ones an open piece and a loop, but the element sets agree.
std::pair<Curve, Curve> smooth_curve(const Curve& c, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  Curve inner(c.begin() + static_cast<std::ptrdiff_t>(a + 1), c.begin() + static_cast<std::ptrdiff_t>(b));
  Curve outer(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(a));
  outer.insert(outer.end(), c.begin() + static_cast<std::ptrdiff_t>(b + 1), c.end());
  return {inner, outer};
}

bool holds_start_of(const Curve& c, std::size_t component) {
  return std::any_of(c.begin(), c.end(), [&](const Element& e) { return e.marker && e.component == component; });
}

// Orientation-preserving splice of two components right after their
// basepoints. Only virtual crossings are created, so no passages appear.
Curve bridge(const TangleDiagram& d, std::size_t i, std::size_t j) {
  const bool i_closed = d.components[i].is_closed();
  const bool j_closed = d.components[j].is_closed();
  // Arriving at the splice point of one component, the traversal continues
  // along the other; an open component's start stays the start.
  if (!i_closed && j_closed) return concat(run_of(d, j), run_of(d, i));
  if (i_closed && !j_closed) return concat(run_of(d, i), run_of(d, j));
  return concat(run_of(d, j), run_of(d, i));
}

}  // namespace

SmoothedCrossing smooth_at(const TangleDiagram& d, CrossingId id) {
  auto rec = d.crossings.find(id);
  if (rec == d.crossings.end() || !rec->second.is_classical()) {
    throw Error(ErrorCode::NotClassical, "crossing " + std::to_string(id) + " is not a classical crossing");
  }
  const CrossingLocation loc = locate_crossings(d).at(id);
  const std::size_t i = loc.first.component;   // overstrand
  const std::size_t j = loc.second.component;  // understrand

  Curve kept;
  if (i == j) {
    Curve c = run_of(d, i);
    auto [inner, outer] = smooth_curve(c, index_of(c, loc.first), index_of(c, loc.second));
    kept = holds_start_of(inner, i) ? inner : outer;
  } else if (!d.components[i].is_closed() && !d.components[j].is_closed()) {
    // start_i -> crossing -> end_j and start_j -> crossing -> end_i.
    Curve ci = run_of(d, i);
    Curve cj = run_of(d, j);
    std::size_t a = index_of(ci, loc.first);
    std::size_t b = index_of(cj, loc.second);
    Curve h1(ci.begin(), ci.begin() + static_cast<std::ptrdiff_t>(a));
    h1.insert(h1.end(), cj.begin() + static_cast<std::ptrdiff_t>(b + 1), cj.end());
    Curve h2(cj.begin(), cj.begin() + static_cast<std::ptrdiff_t>(b));
    h2.insert(h2.end(), ci.begin() + static_cast<std::ptrdiff_t>(a + 1), ci.end());
    kept = holds_start_of(h1, i) ? h1 : h2;
  } else {
    Curve m = bridge(d, i, j);
    auto [inner, outer] = smooth_curve(m, index_of(m, loc.first), index_of(m, loc.second));
    kept = holds_start_of(inner, i) ? inner : outer;
  }

  SmoothedCrossing out;
  std::set<PassageRef> taken;
  for (const Element& e : kept) {
    if (e.marker) continue;
    out.selected.passages.push_back(e.ref);
    taken.insert(e.ref);
  }
  taken.insert(loc.first);
  taken.insert(loc.second);
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    for (std::size_t k = 0; k < d.components[c].events.size(); ++k) {
      if (!taken.count({c, k})) out.rest.push_back({c, k});
    }
  }
  return out;
}

AffineInt homological_weight(const TangleDiagram& d, CrossingId id) {
  SmoothedCrossing s = smooth_at(d, id);
  const CrossingLocation loc = locate_crossings(d).at(id);
  AffineInt w(pairing(d, s.rest, s.selected));
  if (loc.first.component != loc.second.component) {
    w += AffineInt::symbol(component_symbol(loc.first.component)) -
         AffineInt::symbol(component_symbol(loc.second.component));
  }
  return w;
}

bool is_early_undercrossing(const TangleDiagram& d, CrossingId id) {
  const CrossingLocation loc = locate_crossings(d).at(id);
  return loc.first.component == loc.second.component && loc.second.position < loc.first.position;
}

bool Prop2Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Prop2Check& c) { return c.ok; });
}

std::vector<Prop2Check> Prop2Report::failures() const {
  std::vector<Prop2Check> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const Prop2Check& c) { return !c.ok; });
  return out;
}

Prop2Report check_prop2(const TangleDiagram& d) {
  if (d.has_singular()) throw Error(ErrorCode::HasSingular, "diagram has singular crossings; use resolve");
  Labeling l = propagate_labels(d);
  Prop2Report report;
  for (const auto& c : contributions(d, l)) {
    Prop2Check check;
    check.id = c.id;
    check.weight = c.weight;
    check.homological = homological_weight(d, c.id);
    check.delta = l.delta[c.under_component];
    check.early_under = is_early_undercrossing(d, c.id);
    AffineInt expected = check.homological - AffineInt(check.delta);
    if (check.early_under) expected = -expected;
    check.ok = expected == check.weight;
    report.checks.push_back(std::move(check));
  }
  return report;
}

LaurentPoly maip_via_homology(const TangleDiagram& d) {
  if (d.has_singular()) throw Error(ErrorCode::HasSingular, "diagram has singular crossings; use resolve");
  Labeling l = propagate_labels(d);
  const auto where = locate_crossings(d);
  LaurentPoly p;
  for (const auto& [id, rec] : d.crossings) {
    const CrossingLocation& loc = where.at(id);
    const std::size_t i = loc.first.component;
    const std::size_t j = loc.second.component;
    const int var = component_symbol(i);
    const Integer s(rec.sign);
    AffineInt wh = homological_weight(d, id);
    AffineInt exponent = is_early_undercrossing(d, id) ? -wh + AffineInt(2 * l.delta[i]) : wh;
    p += s * LaurentPoly::monomial(var, exponent);
    p -= s * LaurentPoly::monomial(var, AffineInt(l.delta[j]));
  }
  return p;
}

}  // namespace maip
