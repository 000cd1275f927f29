#pragma once

// Classical Reidemeister moves on Gauss codes and a seeded random walk over
// them. Virtual and mixed moves are identities on this representation.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "maip/diagram.hpp"

namespace maip {

// The gap before events[offset] of a component; offset == events.size() is
// the gap at the end.
struct ArcPosition {
  std::size_t component = 0;
  std::size_t offset = 0;

  friend bool operator==(const ArcPosition&, const ArcPosition&) = default;
};

enum class KinkOrder { OverFirst, UnderFirst };

struct R1Insert {
  ArcPosition at;
  int sign = 1;
  KinkOrder order = KinkOrder::OverFirst;
  friend bool operator==(const R1Insert&, const R1Insert&) = default;
};

struct R1Delete {
  CrossingId crossing = 0;
  friend bool operator==(const R1Delete&, const R1Delete&) = default;
};

// Strand a receives (O_x, O_y); strand b receives (U_x, U_y) when
// same_direction, else (U_y, U_x). x has `sign`, y the opposite.
struct R2Insert {
  ArcPosition a;
  ArcPosition b;
  int sign = 1;
  bool same_direction = true;
  friend bool operator==(const R2Insert&, const R2Insert&) = default;
};

struct R2Delete {
  CrossingId x = 0;
  CrossingId y = 0;
  friend bool operator==(const R2Delete&, const R2Delete&) = default;
};

// x: top over middle, y: top over bottom, z: middle over bottom. The pairs
// {O_x, O_y}, {U_x, O_z}, {U_y, U_z} are adjacent, each in either order,
// and the signs satisfy the weight-preserving condition
//   s_y * tau_top = s_z * tau_mid,  s_x * tau_top = s_z * tau_bot,
// where tau is +1 when the pair appears in the order listed and -1 otherwise.
struct R3Site {
  CrossingId x = 0;
  CrossingId y = 0;
  CrossingId z = 0;
  friend bool operator==(const R3Site&, const R3Site&) = default;
};

using MoveSite = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Site>;

// New crossings take the ids max + 1 (and max + 2). All moves throw
// Error(NotApplicable) when the site does not fit the diagram.
TangleDiagram r1_insert(const TangleDiagram& d, ArcPosition at, int sign, KinkOrder order);
TangleDiagram r1_delete(const TangleDiagram& d, CrossingId crossing);
TangleDiagram r2_insert(const TangleDiagram& d, ArcPosition a, ArcPosition b, int sign, bool same_direction);
TangleDiagram r2_delete(const TangleDiagram& d, CrossingId x, CrossingId y);
TangleDiagram r3_apply(const TangleDiagram& d, const R3Site& site);

// Deletion and R3 sites use adjacency within a component's event list; the
// wrap-around of a closed component is not considered.
std::vector<R1Delete> find_r1_sites(const TangleDiagram& d);
std::vector<R2Delete> find_r2_sites(const TangleDiagram& d);
std::vector<R3Site> find_r3_sites(const TangleDiagram& d);

TangleDiagram apply_move(const TangleDiagram& d, const MoveSite& site);

// "<kind> <params>", e.g. "R1+ at=1:3 sign=+ order=over-first",
// "R2+ a=1:0 b=2:1 sign=- antiparallel", "R3 x=1 y=2 z=3". Components are
// written 1-based.
std::string format_move(const MoveSite& site);
// Throws Error(Syntax).
MoveSite parse_move(std::string_view line);

struct WalkOptions {
  // Insertions are skipped when they would exceed this many crossings.
  std::optional<std::size_t> max_crossings;
};

struct WalkResult {
  TangleDiagram diagram;
  std::vector<MoveSite> moves;

  std::vector<std::string> log() const;
};

// Each step picks a move kind uniformly among those applicable, then a site
// uniformly (insertion arcs, signs and variants uniform).
WalkResult random_walk(const TangleDiagram& d, std::size_t n_moves, std::uint64_t seed,
                       const WalkOptions& options = {});

// Applies logged moves in order.
TangleDiagram replay(const TangleDiagram& d, const std::vector<std::string>& log);

}  // namespace maip
