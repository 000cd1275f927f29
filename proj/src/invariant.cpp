#include "maip/invariant.hpp"

#include "maip/errors.hpp"

namespace maip {

int label_increment(const TangleDiagram& d, const Passage& p) {
  switch (p.role) {
    case Role::Over: return -d.sign(p.crossing);
    case Role::Under: return d.sign(p.crossing);
    case Role::SingPrimary: return -1;
    case Role::SingSecondary: return 1;
  }
  return 0;
}

Labeling propagate_labels(const TangleDiagram& d) {
  std::vector<AffineInt> starts;
  starts.reserve(d.num_components());
  for (std::size_t i = 0; i < d.num_components(); ++i) starts.push_back(AffineInt::symbol(component_symbol(i)));
  return propagate_labels(d, starts);
}

Labeling propagate_labels(const TangleDiagram& d, std::span<const AffineInt> start_labels) {
  if (start_labels.size() != d.num_components()) {
    throw Error(ErrorCode::Validation, "propagate_labels: need one start label per component");
  }
  Labeling l;
  l.arcs.resize(d.num_components());
  l.delta.resize(d.num_components(), 0);
  for (std::size_t i = 0; i < d.num_components(); ++i) {
    const auto& events = d.components[i].events;
    auto& arcs = l.arcs[i];
    arcs.reserve(events.size() + 1);
    arcs.push_back(start_labels[i]);
    for (const Passage& p : events) {
      int inc = label_increment(d, p);
      l.delta[i] += inc;
      arcs.push_back(arcs.back() + AffineInt(inc));
    }
  }
  return l;
}

namespace {

const CrossingLocation& classical_location(const TangleDiagram& d,
                                           const std::map<CrossingId, CrossingLocation>& where, CrossingId id) {
  auto rec = d.crossings.find(id);
  if (rec == d.crossings.end() || !rec->second.is_classical()) {
    throw Error(ErrorCode::NotClassical, "crossing " + std::to_string(id) + " is not a classical crossing");
  }
  return where.at(id);
}

CrossingContribution make_contribution(const TangleDiagram& d, const Labeling& l, CrossingId id,
                                       const CrossingLocation& loc) {
  CrossingContribution c;
  c.id = id;
  c.sign = d.sign(id);
  c.over_component = loc.first.component;
  c.under_component = loc.second.component;
  c.over_incoming = l.incoming(loc.first);
  c.under_incoming = l.incoming(loc.second);
  c.under_outgoing = l.outgoing(loc.second);
  c.weight = c.over_incoming - c.under_incoming - AffineInt(c.sign);
  c.delta_exponent = l.delta.at(c.under_component);
  return c;
}

}  // namespace

AffineInt crossing_weight(const TangleDiagram& d, const Labeling& labeling, CrossingId id) {
  auto where = locate_crossings(d);
  const auto& loc = classical_location(d, where, id);
  return labeling.incoming(loc.first) - labeling.incoming(loc.second) - AffineInt(d.sign(id));
}

WeightTable weight_table(const TangleDiagram& d, const Labeling& labeling) {
  WeightTable table;
  for (const auto& c : contributions(d, labeling)) {
    table[c.id] = CrossingWeight{c.weight, c.over_component, c.under_component, c.sign};
  }
  return table;
}

LaurentPoly CrossingContribution::term() const {
  int var = component_symbol(over_component);
  LaurentPoly bracket = LaurentPoly::monomial(var, weight) - LaurentPoly::constant(1);
  return Integer(sign) * shift_monomial(bracket, var, AffineInt(delta_exponent));
}

std::vector<CrossingContribution> contributions(const TangleDiagram& d, const Labeling& labeling) {
  std::vector<CrossingContribution> out;
  auto where = locate_crossings(d);
  for (const auto& [id, rec] : d.crossings) {
    if (!rec.is_classical()) continue;
    out.push_back(make_contribution(d, labeling, id, where.at(id)));
  }
  return out;
}

LaurentPoly maip(const TangleDiagram& d) {
  if (d.has_singular()) {
    throw Error(ErrorCode::HasSingular, "diagram has singular crossings; use resolve");
  }
  Labeling l = propagate_labels(d);
  LaurentPoly p;
  for (const auto& c : contributions(d, l)) p += c.term();
  return p;
}

LaurentPoly StructuredMaip::evaluate() const {
  LaurentPoly p;
  for (const auto& r : records) {
    int var = component_symbol(r.over_component);
    LaurentPoly bracket = LaurentPoly::monomial(var, r.weight) - LaurentPoly::constant(1);
    p += Integer(r.sign) * shift_monomial(bracket, var, AffineInt(delta.at(r.delta_component)));
  }
  return p;
}

StructuredMaip structured_maip(const TangleDiagram& d) {
  if (d.has_singular()) {
    throw Error(ErrorCode::HasSingular, "diagram has singular crossings; use resolve");
  }
  Labeling l = propagate_labels(d);
  StructuredMaip s;
  s.components = d.num_components();
  s.delta = l.delta;
  for (const auto& c : contributions(d, l)) {
    s.records.push_back(ContributionRecord{c.sign, c.over_component, c.under_component, c.weight});
  }
  return s;
}

std::vector<SingularResolutionTerm> resolve_singular(const TangleDiagram& d) {
  std::vector<CrossingId> singular;
  for (const auto& [id, rec] : d.crossings) {
    if (!rec.is_classical()) singular.push_back(id);
  }
  if (singular.empty()) throw Error(ErrorCode::NoSingular, "diagram has no singular crossings");
  if (singular.size() > 20) throw Error(ErrorCode::Validation, "too many singular crossings to resolve");

  std::vector<SingularResolutionTerm> terms;
  const std::size_t n_terms = std::size_t{1} << singular.size();
  for (std::size_t mask = 0; mask < n_terms; ++mask) {
    // Bit k set: crossing singular[k] takes its negative resolution.
    SingularResolutionTerm term;
    term.diagram = d;
    std::map<CrossingId, bool> negative;
    for (std::size_t k = 0; k < singular.size(); ++k) {
      bool neg = (mask >> k) & 1U;
      negative[singular[k]] = neg;
      term.diagram.crossings[singular[k]] = CrossingRecord::classical(neg ? -1 : 1);
      if (neg) term.coefficient = -term.coefficient;
    }
    for (auto& comp : term.diagram.components) {
      for (auto& p : comp.events) {
        auto it = negative.find(p.crossing);
        if (it == negative.end()) continue;
        bool primary = p.role == Role::SingPrimary;
        p.role = primary != it->second ? Role::Over : Role::Under;
      }
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

LaurentPoly vassiliev_eval(const TangleDiagram& d) {
  if (!d.has_singular()) return maip(d);
  LaurentPoly sum;
  for (const auto& term : resolve_singular(d)) sum += Integer(term.coefficient) * maip(term.diagram);
  return sum;
}

}  // namespace maip
