#pragma once

// Affine labeling, crossing weights, the multi-variable affine index
// polynomial (MAIP) and its extension to singular diagrams.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "maip/algebra.hpp"
#include "maip/diagram.hpp"

namespace maip {

// Label change contributed by one passage: Over -sign, Under +sign,
// SingPrimary -1, SingSecondary +1.
int label_increment(const TangleDiagram& d, const Passage& p);

struct Labeling {
  // arcs[i][k] is the label of component i just before event k;
  // arcs[i].back() is the final label.
  std::vector<std::vector<AffineInt>> arcs;
  // Index difference of each component: final label minus start label.
  std::vector<std::int64_t> delta;

  const AffineInt& start(std::size_t component) const { return arcs.at(component).front(); }
  const AffineInt& final_label(std::size_t component) const { return arcs.at(component).back(); }
  const AffineInt& incoming(PassageRef ref) const { return arcs.at(ref.component).at(ref.position); }
  const AffineInt& outgoing(PassageRef ref) const { return arcs.at(ref.component).at(ref.position + 1); }
};

// Start labels default to the symbols c_1, ..., c_n. Requires a valid diagram.
Labeling propagate_labels(const TangleDiagram& d);
Labeling propagate_labels(const TangleDiagram& d, std::span<const AffineInt> start_labels);

// W = (incoming over label) - (incoming under label) - sign.
// Throws Error(NotClassical) for singular or unknown crossings.
AffineInt crossing_weight(const TangleDiagram& d, const Labeling& labeling, CrossingId id);

struct CrossingWeight {
  AffineInt weight;
  std::size_t over_component = 0;
  std::size_t under_component = 0;
  int sign = 1;
};

using WeightTable = std::map<CrossingId, CrossingWeight>;

WeightTable weight_table(const TangleDiagram& d, const Labeling& labeling);

// Everything that goes into one crossing's term
// sign * t_over^{delta_under} * (t_over^{weight} - 1).
struct CrossingContribution {
  CrossingId id = 0;
  int sign = 1;
  std::size_t over_component = 0;
  std::size_t under_component = 0;
  AffineInt over_incoming;
  AffineInt under_incoming;
  AffineInt under_outgoing;
  AffineInt weight;
  std::int64_t delta_exponent = 0;

  LaurentPoly term() const;
};

// One record per classical crossing, in crossing-id order.
std::vector<CrossingContribution> contributions(const TangleDiagram& d, const Labeling& labeling);

// Throws Error(HasSingular) when singular crossings are present.
LaurentPoly maip(const TangleDiagram& d);

// The MAIP before simplification: the delta exponent is kept as a reference
// to the understrand's component so it can be rewritten under gluing.
struct ContributionRecord {
  int sign = 1;
  std::size_t over_component = 0;
  std::size_t delta_component = 0;
  AffineInt weight;
};

struct StructuredMaip {
  std::size_t components = 0;
  std::vector<std::int64_t> delta;
  std::vector<ContributionRecord> records;

  LaurentPoly evaluate() const;
};

StructuredMaip structured_maip(const TangleDiagram& d);

struct SingularResolutionTerm {
  int coefficient = 1;
  TangleDiagram diagram;
};

// 2^k terms for k singular crossings. The positive resolution turns
// (SingPrimary, SingSecondary) into (Over, Under) with sign +1, the negative
// one into (Under, Over) with sign -1; the coefficient is the product of the
// chosen signs. Throws Error(NoSingular) if there is nothing to resolve.
std::vector<SingularResolutionTerm> resolve_singular(const TangleDiagram& d);

// sum of coefficient * maip(term); plain maip when there are no singular crossings.
LaurentPoly vassiliev_eval(const TangleDiagram& d);

}  // namespace maip
