#pragma once

// Oriented tangle generators and the word builder: a tangle written as
// rows of atoms, each row tensored left to right, rows stacked top to bottom.

#include <vector>

#include "maip/diagram.hpp"

namespace maip {

enum class Direction { Up, Down };

struct Atom {
  enum class Kind { Identity, Cup, Cap, Positive, Negative, Virtual };

  Kind kind = Kind::Identity;
  // Identity: the strand direction. Crossings: direction of the strand
  // through the bottom-left corner (it leaves at top-right).
  Direction first = Direction::Up;
  // Crossings: direction of the strand through the bottom-right corner.
  Direction second = Direction::Up;
  // Cup/Cap: traversal runs from the left end to the right end.
  bool left_to_right = true;

  static Atom identity(Direction d = Direction::Up) { return {Kind::Identity, d, d, true}; }
  // U shape, both ends on its top edge.
  static Atom cup(bool left_to_right = true) { return {Kind::Cup, Direction::Up, Direction::Up, left_to_right}; }
  // n shape, both ends on its bottom edge.
  static Atom cap(bool left_to_right = true) { return {Kind::Cap, Direction::Up, Direction::Up, left_to_right}; }
  static Atom positive(Direction bl = Direction::Up, Direction br = Direction::Up) {
    return {Kind::Positive, bl, br, true};
  }
  static Atom negative(Direction bl = Direction::Up, Direction br = Direction::Up) {
    return {Kind::Negative, bl, br, true};
  }
  static Atom virtual_crossing(Direction bl = Direction::Up, Direction br = Direction::Up) {
    return {Kind::Virtual, bl, br, true};
  }

  int top_arity() const;
  int bottom_arity() const;
};

using GeneratorRow = std::vector<Atom>;

struct GeneratorWord {
  std::vector<GeneratorRow> rows;  // rows[0] is the top row
};

// Traces strands through the rows. Classical crossing atoms become
// crossings numbered in reading order; the overstrand of a positive atom is
// the bottom-left strand when both strands point the same way. Virtual atoms
// only route strands.
//
// Long components are ordered by start slot (top slots, then bottom, each
// left to right); closed components follow in order of their first atom.
//
// Throws Error(ArityMismatch) when adjacent rows disagree on strand count and
// Error(DirectionMismatch) when orientations clash at a glued point.
TangleDiagram from_generator_word(const GeneratorWord& w);

// Places b to the right of a, padding the shorter word with identity rows.
GeneratorWord tensor_words(const GeneratorWord& a, const GeneratorWord& b);

// Identity tangle whose strands have the given directions.
GeneratorWord identity_word(const std::vector<Direction>& strands);

}  // namespace maip
