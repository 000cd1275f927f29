#pragma once

// Tensor product and composition of tangles, and the prediction of a
// composite's polynomial from its factors' structured polynomials.

#include <cstdint>
#include <utility>
#include <vector>

#include "maip/algebra.hpp"
#include "maip/diagram.hpp"
#include "maip/invariant.hpp"

namespace maip {

// T' goes to the right of T: its components, crossing ids and slots are
// shifted past T's.
TangleDiagram tensor(const TangleDiagram& left, const TangleDiagram& right);

enum class Factor { Upper, Lower };

struct GlueMember {
  Factor factor = Factor::Upper;
  std::size_t component = 0;

  friend bool operator==(const GlueMember&, const GlueMember&) = default;
};

// Components of the factors that become one component of the composite,
// in traversal order. A closed chain is either a closed component of a
// factor or a cycle of gluings; a cycle starts at its lowest member.
struct GlueChain {
  std::vector<GlueMember> members;
  bool closed = false;
};

// Chains are ordered by their first member, upper components before lower
// ones; chain k becomes component k of the composite. Unglued components
// appear as singleton chains, so the chains partition both factors.
struct GluePlan {
  std::size_t upper_components = 0;
  std::size_t lower_components = 0;
  std::vector<GlueChain> chains;
};

// Bottom slot B_k of `upper` is glued to top slot T_k of `lower`.
// Throws Error(ArityMismatch) when the counts differ and
// Error(OrientationMismatch) when a glued pair is not one end and one start.
GluePlan plan_composition(const TangleDiagram& upper, const TangleDiagram& lower);

// Stacks `upper` above `lower`. Lower crossing ids are shifted past upper's.
TangleDiagram compose(const TangleDiagram& upper, const TangleDiagram& lower);

// The composite's polynomial from the factors' structured data alone:
// variables follow the chains, each member's start symbol becomes the chain
// symbol plus the deltas of the members before it, and every delta exponent
// becomes its chain's total. Throws Error(InconsistentPlan) when the plan
// does not partition the factors' components.
LaurentPoly predict_composed(const StructuredMaip& upper, const StructuredMaip& lower, const GluePlan& plan);

// Identity tangle built from an identity generator word whose top boundary
// has the given pattern; stacking it above a tangle with that top pattern
// leaves the tangle unchanged up to numbering.
TangleDiagram identity_tangle(const std::vector<SlotEnd>& top);

struct ComposablePairParams {
  int upper_closed = 1;
  int upper_long = 3;
  int upper_crossings = 6;
  int lower_closed = 1;
  int lower_extra_long = 1;
  int lower_crossings = 6;
};

// Random (upper, lower) with matching interface and at least one glued slot.
std::pair<TangleDiagram, TangleDiagram> random_composable_pair(std::uint64_t seed,
                                                               const ComposablePairParams& params = {});

}  // namespace maip
