#include "maip/generator.hpp"

#include <map>
#include <optional>

#include "maip/errors.hpp"

namespace maip {

int Atom::top_arity() const {
  switch (kind) {
    case Kind::Identity: return 1;
    case Kind::Cup: return 2;
    case Kind::Cap: return 0;
    default: return 2;
  }
}

int Atom::bottom_arity() const {
  switch (kind) {
    case Kind::Identity: return 1;
    case Kind::Cup: return 0;
    case Kind::Cap: return 2;
    default: return 2;
  }
}

namespace {

// Interface line k lies above row k; line rows.size() is the bottom boundary.
struct Point {
  std::size_t line;
  int pos;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Piece {
  Point start;
  Point end;
  std::optional<Passage> passage;
};

struct Traced {
  std::vector<Piece> pieces;
  std::map<CrossingId, int> signs;
  std::vector<int> widths;  // number of points on each line
};

Traced trace_pieces(const GeneratorWord& w) {
  Traced t;
  const std::size_t n_rows = w.rows.size();
  t.widths.assign(n_rows + 1, 0);
  for (std::size_t r = 0; r < n_rows; ++r) {
    int top = 0;
    int bottom = 0;
    for (const Atom& a : w.rows[r]) {
      top += a.top_arity();
      bottom += a.bottom_arity();
    }
    if (r > 0 && top != t.widths[r]) {
      throw Error(ErrorCode::ArityMismatch, "row " + std::to_string(r + 1) + " has " + std::to_string(top) +
                                                " strands on top but the row above ends with " +
                                                std::to_string(t.widths[r]));
    }
    t.widths[r] = top;
    t.widths[r + 1] = bottom;
  }

  CrossingId next_id = 1;
  for (std::size_t r = 0; r < n_rows; ++r) {
    int tp = 0;  // next free position on line r
    int bp = 0;  // next free position on line r + 1
    auto up = [&](Point bottom, Point top, bool upward, std::optional<Passage> p) {
      t.pieces.push_back(upward ? Piece{bottom, top, p} : Piece{top, bottom, p});
    };
    for (const Atom& a : w.rows[r]) {
      switch (a.kind) {
        case Atom::Kind::Identity:
          up({r + 1, bp}, {r, tp}, a.first == Direction::Up, std::nullopt);
          break;
        case Atom::Kind::Cup: {
          Point l{r, tp};
          Point rt{r, tp + 1};
          t.pieces.push_back(a.left_to_right ? Piece{l, rt, std::nullopt} : Piece{rt, l, std::nullopt});
          break;
        }
        case Atom::Kind::Cap: {
          Point l{r + 1, bp};
          Point rt{r + 1, bp + 1};
          t.pieces.push_back(a.left_to_right ? Piece{l, rt, std::nullopt} : Piece{rt, l, std::nullopt});
          break;
        }
        case Atom::Kind::Positive:
        case Atom::Kind::Negative:
        case Atom::Kind::Virtual: {
          std::optional<Passage> first_pass;
          std::optional<Passage> second_pass;
          if (a.kind != Atom::Kind::Virtual) {
            int sign = a.kind == Atom::Kind::Positive ? 1 : -1;
            // With equal directions the bottom-left strand is over exactly
            // when the crossing is positive; opposite directions flip it.
            bool first_over = (a.first == a.second) == (sign > 0);
            CrossingId id = next_id++;
            t.signs[id] = sign;
            first_pass = Passage{id, first_over ? Role::Over : Role::Under};
            second_pass = Passage{id, first_over ? Role::Under : Role::Over};
          }
          up({r + 1, bp}, {r, tp + 1}, a.first == Direction::Up, first_pass);
          up({r + 1, bp + 1}, {r, tp}, a.second == Direction::Up, second_pass);
          break;
        }
      }
      tp += a.top_arity();
      bp += a.bottom_arity();
    }
  }
  return t;
}

}  // namespace

TangleDiagram from_generator_word(const GeneratorWord& w) {
  Traced t = trace_pieces(w);
  const std::size_t last_line = w.rows.size();

  std::map<Point, std::size_t> starts;
  std::map<Point, std::size_t> ends;
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    const Piece& p = t.pieces[i];
    if (!starts.emplace(p.start, i).second || !ends.emplace(p.end, i).second) {
      const Point& where = starts.count(p.start) && starts.at(p.start) != i ? p.start : p.end;
      throw Error(ErrorCode::DirectionMismatch, "strand orientations clash at line " +
                                                    std::to_string(where.line) + ", position " +
                                                    std::to_string(where.pos + 1));
    }
  }
  auto on_boundary = [last_line](const Point& p) { return p.line == 0 || p.line == last_line; };
  for (const auto& [pt, piece] : starts) {
    if (!on_boundary(pt) && !ends.count(pt)) {
      throw Error(ErrorCode::DirectionMismatch, "two strands leave the point at line " + std::to_string(pt.line) +
                                                    ", position " + std::to_string(pt.pos + 1));
    }
  }
  auto slot_of = [last_line](const Point& p) {
    return p.line == 0 ? Slot::top(p.pos + 1) : Slot::bottom(p.pos + 1);
  };

  TangleDiagram d;
  d.top = t.widths.front();
  d.bottom = t.widths.back();
  for (const auto& [id, sign] : t.signs) d.crossings[id] = CrossingRecord::classical(sign);

  std::vector<bool> used(t.pieces.size(), false);
  auto follow = [&](std::size_t first, Component& comp) {
    std::size_t cur = first;
    for (;;) {
      used[cur] = true;
      if (t.pieces[cur].passage) comp.events.push_back(*t.pieces[cur].passage);
      const Point& e = t.pieces[cur].end;
      if (on_boundary(e)) {
        comp.to = slot_of(e);
        return;
      }
      std::size_t next = starts.at(e);
      if (next == first) return;
      cur = next;
    }
  };

  // Boundary starts in slot order: the map orders line 0 before the bottom line.
  for (const auto& [pt, piece] : starts) {
    if (!on_boundary(pt)) continue;
    Component comp;
    comp.kind = ComponentKind::Long;
    comp.from = slot_of(pt);
    follow(piece, comp);
    d.components.push_back(std::move(comp));
  }
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    if (used[i]) continue;
    Component comp = Component::closed();
    follow(i, comp);
    d.components.push_back(std::move(comp));
  }
  return d;
}

GeneratorWord identity_word(const std::vector<Direction>& strands) {
  GeneratorWord w;
  GeneratorRow row;
  for (Direction d : strands) row.push_back(Atom::identity(d));
  w.rows.push_back(std::move(row));
  return w;
}

namespace {

std::vector<Direction> bottom_directions(const GeneratorWord& w) {
  Traced t = trace_pieces(w);
  const std::size_t last = w.rows.size();
  std::vector<Direction> dirs(static_cast<std::size_t>(t.widths.back()), Direction::Up);
  for (const Piece& p : t.pieces) {
    if (p.start.line == last) dirs[static_cast<std::size_t>(p.start.pos)] = Direction::Up;
    if (p.end.line == last) dirs[static_cast<std::size_t>(p.end.pos)] = Direction::Down;
  }
  return dirs;
}

GeneratorWord padded(const GeneratorWord& w, std::size_t rows) {
  GeneratorWord out = w;
  if (out.rows.size() >= rows) return out;
  GeneratorRow pad = identity_word(bottom_directions(w)).rows.front();
  while (out.rows.size() < rows) out.rows.push_back(pad);
  return out;
}

}  // namespace

GeneratorWord tensor_words(const GeneratorWord& a, const GeneratorWord& b) {
  std::size_t rows = std::max(a.rows.size(), b.rows.size());
  GeneratorWord pa = padded(a, rows);
  GeneratorWord pb = padded(b, rows);
  GeneratorWord out;
  for (std::size_t r = 0; r < rows; ++r) {
    GeneratorRow row = pa.rows[r];
    row.insert(row.end(), pb.rows[r].begin(), pb.rows[r].end());
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace maip
