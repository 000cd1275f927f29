#pragma once

// Combinatorial model of an oriented virtual tangle: an extended Gauss code.
// Virtual crossings are not represented; they carry no passages.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace maip {

using CrossingId = int;

enum class Role { Over, Under, SingPrimary, SingSecondary };

struct Passage {
  CrossingId crossing = 0;
  Role role = Role::Over;

  friend bool operator==(const Passage&, const Passage&) = default;
};

enum class CrossingKind { Classical, Singular };

struct CrossingRecord {
  CrossingKind kind = CrossingKind::Classical;
  int sign = 1;  // +1 / -1 for classical, 0 for singular

  static CrossingRecord classical(int sign) { return {CrossingKind::Classical, sign}; }
  static CrossingRecord singular() { return {CrossingKind::Singular, 0}; }
  bool is_classical() const { return kind == CrossingKind::Classical; }

  friend bool operator==(const CrossingRecord&, const CrossingRecord&) = default;
};

enum class Side { Top, Bottom };

// Boundary slot T<k> or B<k>, k >= 1, ordered left to right.
struct Slot {
  Side side = Side::Top;
  int index = 1;

  static Slot top(int k) { return {Side::Top, k}; }
  static Slot bottom(int k) { return {Side::Bottom, k}; }
  std::string to_string() const;

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

enum class ComponentKind { Closed, Long };

// Events are listed in traversal order from the basepoint (closed) or from
// the start endpoint (long).
struct Component {
  ComponentKind kind = ComponentKind::Closed;
  std::vector<Passage> events;
  std::optional<Slot> from;
  std::optional<Slot> to;

  static Component closed(std::vector<Passage> events = {});
  static Component open(Slot from, Slot to, std::vector<Passage> events = {});
  bool is_closed() const { return kind == ComponentKind::Closed; }

  friend bool operator==(const Component&, const Component&) = default;
};

// Position of one passage: component index (0-based) and event offset.
struct PassageRef {
  std::size_t component = 0;
  std::size_t position = 0;

  friend bool operator==(const PassageRef&, const PassageRef&) = default;
  friend auto operator<=>(const PassageRef&, const PassageRef&) = default;
};

// Where the two passages of a crossing sit. For classical crossings `first`
// is the Over passage and `second` the Under one; for singular crossings
// SingPrimary and SingSecondary.
struct CrossingLocation {
  PassageRef first;
  PassageRef second;
};

// An (m, n)-tangle: m top slots, n bottom slots.
//
// Components are 0-based in this API; component i carries the variable
// t_{i+1} and the starting label c_{i+1}.
struct TangleDiagram {
  int top = 0;
  int bottom = 0;
  std::vector<Component> components;
  std::map<CrossingId, CrossingRecord> crossings;

  std::size_t num_components() const { return components.size(); }
  const CrossingRecord& crossing(CrossingId id) const;
  int sign(CrossingId id) const { return crossing(id).sign; }
  const Passage& at(PassageRef ref) const { return components.at(ref.component).events.at(ref.position); }
  CrossingId max_crossing_id() const;
  std::size_t num_singular() const;
  bool has_singular() const { return num_singular() > 0; }

  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;
};

// Symbol / variable index attached to a 0-based component index.
inline int component_symbol(std::size_t component) { return static_cast<int>(component) + 1; }

struct Violation {
  std::string message;
};

// Every violated structural invariant; empty when the diagram is valid.
std::vector<Violation> validate(const TangleDiagram& d);
bool is_valid(const TangleDiagram& d);
// Throws Error(Validation) listing all violations.
void require_valid(const TangleDiagram& d);

// Requires a valid diagram.
std::map<CrossingId, CrossingLocation> locate_crossings(const TangleDiagram& d);

// --- text format ------------------------------------------------------------
//
//   tangle m=<int> n=<int>
//   component <idx> closed : <tokens>
//   component <idx> long from <slot> to <slot> : <tokens>
//
// tokens: O<id><sign>, U<id><sign>, X<id>, Y<id>. '#' starts a comment.

// Parses and validates. Throws ParseError for syntax problems and
// Error(Validation) for structural ones.
TangleDiagram parse_diagram(std::string_view text);
std::string serialize(const TangleDiagram& d);

std::string passage_token(const TangleDiagram& d, const Passage& p);

nlohmann::json diagram_to_json(const TangleDiagram& d);
TangleDiagram diagram_from_json(const nlohmann::json& j);

// Accepts either the text format or its JSON mirror (leading '{').
TangleDiagram parse_diagram_any(std::string_view text);

// Reads a file through parse_diagram_any.
TangleDiagram load_diagram(const std::string& path);

// --- numbering helpers ------------------------------------------------------

// Reorders components: the result's component k is d's component order[k].
TangleDiagram permute_components(const TangleDiagram& d, const std::vector<std::size_t>& order);

// Renumbers crossings 1, 2, ... in order of first appearance.
TangleDiagram renumber_crossings(const TangleDiagram& d);

// Long components sorted by start slot (closed ones after, in their original
// order) and crossings renumbered by first appearance. Two diagrams that differ
// only in numbering of long components and crossings normalize equal.
TangleDiagram normalize_numbering(const TangleDiagram& d);

// --- random diagrams ----------------------------------------------------------

struct RandomDiagramParams {
  int closed = 1;
  int open = 0;
  int crossings = 0;
  int singular = 0;
};

// Valid diagram, deterministic per seed. Each crossing's two passages are
// inserted at independently uniform positions among all component gaps.
TangleDiagram random_diagram(std::uint64_t seed, const RandomDiagramParams& params);
TangleDiagram random_diagram(std::uint64_t seed, int n_closed, int n_long, int n_crossings);

// Seed for trial `index` of a run seeded with `seed` (splitmix64 mixing).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

// Property-test fuel: 1..max_components components (closed or long at
// random), 0..max_crossings classical crossings and exactly `singular`
// singular ones.
TangleDiagram random_trial_diagram(std::uint64_t seed, int max_components = 4, int max_crossings = 12,
                                   int singular = 0);

// What a boundary slot is for the strand touching it.
enum class SlotEnd { Start, End };

struct BoundaryPattern {
  std::vector<SlotEnd> top;
  std::vector<SlotEnd> bottom;
};

BoundaryPattern boundary_pattern(const TangleDiagram& d);

// Random diagram with a prescribed top boundary pattern. Bottom slots are
// added as needed to balance starts and ends, plus `extra_long` long
// components running between fresh bottom slots.
TangleDiagram random_diagram_with_top(std::uint64_t seed, const std::vector<SlotEnd>& top, int n_closed,
                                      int extra_long, int n_crossings);

}  // namespace maip
