#pragma once

// Homological crossing weights computed combinatorially: smooth a crossing
// (bridging first when a closed component is involved), keep one half, and
// pair it against the rest of the diagram. Serves as an independent check
// on the labeling-based weights.

#include <cstdint>
#include <span>
#include <vector>

#include "maip/algebra.hpp"
#include "maip/diagram.hpp"

namespace maip {

struct CycleSlice {
  std::vector<PassageRef> passages;
};

// Sum over classical crossings with one passage in `slice` and the other in
// `rest`: +sign when the slice passage is Under, -sign when it is Over.
std::int64_t pairing(const TangleDiagram& d, std::span<const PassageRef> rest, const CycleSlice& slice);

struct SmoothedCrossing {
  CycleSlice selected;            // the half kept for the pairing
  std::vector<PassageRef> rest;   // every other passage except the crossing's own two
};

// Smooths classical crossing `id` and keeps the half holding the start of
// the overstrand's component. Throws Error(NotClassical).
SmoothedCrossing smooth_at(const TangleDiagram& d, CrossingId id);

// Self-crossing: pairing of the kept half against the rest.
// Mixed crossing: (c_over - c_under) plus that pairing.
AffineInt homological_weight(const TangleDiagram& d, CrossingId id);

// A self-crossing whose Under passage comes before its Over passage.
bool is_early_undercrossing(const TangleDiagram& d, CrossingId id);

struct Prop2Check {
  CrossingId id = 0;
  AffineInt weight;
  AffineInt homological;
  std::int64_t delta = 0;  // delta of the understrand's component
  bool early_under = false;
  bool ok = false;
};

struct Prop2Report {
  std::vector<Prop2Check> checks;

  bool passed() const;
  std::vector<Prop2Check> failures() const;
};

// W = W^h - delta_j, negated for early undercrossings. Throws Error(HasSingular).
Prop2Report check_prop2(const TangleDiagram& d);

// The polynomial rebuilt from homological weights:
//   sum_{early under} s t_i^{-W^h + 2 delta_i} + sum_{other} s t_i^{W^h} - sum_all s t_i^{delta_j}.
// Throws Error(HasSingular).
LaurentPoly maip_via_homology(const TangleDiagram& d);

}  // namespace maip
