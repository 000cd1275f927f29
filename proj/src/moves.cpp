#include "maip/moves.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "maip/errors.hpp"

namespace maip {

namespace {

[[noreturn]] void not_applicable(const std::string& what) { throw Error(ErrorCode::NotApplicable, what); }

void check_arc(const TangleDiagram& d, ArcPosition p) {
  if (p.component >= d.components.size() || p.offset > d.components[p.component].events.size()) {
    not_applicable("arc position " + std::to_string(p.component + 1) + ":" + std::to_string(p.offset) +
                   " is outside the diagram");
  }
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) not_applicable("crossing sign must be +1 or -1");
}

void insert_at(TangleDiagram& d, ArcPosition p, std::initializer_list<Passage> passages) {
  auto& ev = d.components[p.component].events;
  ev.insert(ev.begin() + static_cast<std::ptrdiff_t>(p.offset), passages.begin(), passages.end());
}

const CrossingRecord& classical(const TangleDiagram& d, CrossingId id) {
  auto it = d.crossings.find(id);
  if (it == d.crossings.end() || !it->second.is_classical()) {
    not_applicable("crossing " + std::to_string(id) + " is not a classical crossing");
  }
  return it->second;
}

bool adjacent(PassageRef a, PassageRef b) {
  return a.component == b.component && (a.position + 1 == b.position || b.position + 1 == a.position);
}

// +1 when a comes right before b, -1 when right after. Requires adjacency.
int order_of(PassageRef a, PassageRef b) { return a.position < b.position ? 1 : -1; }

void erase_passages(TangleDiagram& d, std::vector<PassageRef> refs) {
  std::sort(refs.begin(), refs.end(), [](const PassageRef& a, const PassageRef& b) { return b < a; });
  for (const PassageRef& r : refs) {
    auto& ev = d.components[r.component].events;
    ev.erase(ev.begin() + static_cast<std::ptrdiff_t>(r.position));
  }
}

void swap_pair(TangleDiagram& d, PassageRef a, PassageRef b) {
  std::swap(d.components[a.component].events[a.position], d.components[b.component].events[b.position]);
}

struct R3Geometry {
  PassageRef ox, oy, ux, oz, uy, uz;
};

std::optional<R3Geometry> r3_geometry(const TangleDiagram& d, const std::map<CrossingId, CrossingLocation>& where,
                                      const R3Site& s) {
  if (s.x == s.y || s.y == s.z || s.x == s.z) return std::nullopt;
  for (CrossingId id : {s.x, s.y, s.z}) {
    auto it = d.crossings.find(id);
    if (it == d.crossings.end() || !it->second.is_classical()) return std::nullopt;
  }
  const auto& lx = where.at(s.x);
  const auto& ly = where.at(s.y);
  const auto& lz = where.at(s.z);
  R3Geometry g{lx.first, ly.first, lx.second, lz.first, ly.second, lz.second};
  if (!adjacent(g.ox, g.oy) || !adjacent(g.ux, g.oz) || !adjacent(g.uy, g.uz)) return std::nullopt;
  const int tau_top = order_of(g.ox, g.oy);
  const int tau_mid = order_of(g.ux, g.oz);
  const int tau_bot = order_of(g.uy, g.uz);
  const int sx = d.sign(s.x);
  const int sy = d.sign(s.y);
  const int sz = d.sign(s.z);
  if (sy * tau_top != sz * tau_mid || sx * tau_top != sz * tau_bot) return std::nullopt;
  return g;
}

}  // namespace

TangleDiagram r1_insert(const TangleDiagram& d, ArcPosition at, int sign, KinkOrder order) {
  check_arc(d, at);
  check_sign(sign);
  TangleDiagram out = d;
  const CrossingId id = d.max_crossing_id() + 1;
  out.crossings[id] = CrossingRecord::classical(sign);
  Passage over{id, Role::Over};
  Passage under{id, Role::Under};
  if (order == KinkOrder::OverFirst) {
    insert_at(out, at, {over, under});
  } else {
    insert_at(out, at, {under, over});
  }
  return out;
}

TangleDiagram r1_delete(const TangleDiagram& d, CrossingId crossing) {
  classical(d, crossing);
  const CrossingLocation loc = locate_crossings(d).at(crossing);
  if (!adjacent(loc.first, loc.second)) not_applicable("crossing " + std::to_string(crossing) + " is not a kink");
  TangleDiagram out = d;
  erase_passages(out, {loc.first, loc.second});
  out.crossings.erase(crossing);
  return out;
}

TangleDiagram r2_insert(const TangleDiagram& d, ArcPosition a, ArcPosition b, int sign, bool same_direction) {
  check_arc(d, a);
  check_arc(d, b);
  check_sign(sign);
  TangleDiagram out = d;
  const CrossingId x = d.max_crossing_id() + 1;
  const CrossingId y = x + 1;
  out.crossings[x] = CrossingRecord::classical(sign);
  out.crossings[y] = CrossingRecord::classical(-sign);
  Passage ox{x, Role::Over}, oy{y, Role::Over}, ux{x, Role::Under}, uy{y, Role::Under};
  auto insert_a = [&] { insert_at(out, a, {ox, oy}); };
  auto insert_b = [&] {
    if (same_direction) {
      insert_at(out, b, {ux, uy});
    } else {
      insert_at(out, b, {uy, ux});
    }
  };
  // Offsets refer to the original diagram: fill the later gap first; on a
  // shared gap strand a's pair goes first.
  if (a.component == b.component && a.offset < b.offset) {
    insert_b();
    insert_a();
  } else {
    insert_a();
    insert_b();
  }
  return out;
}

TangleDiagram r2_delete(const TangleDiagram& d, CrossingId x, CrossingId y) {
  const int sx = classical(d, x).sign;
  const int sy = classical(d, y).sign;
  if (x == y || sx != -sy) not_applicable("R2 needs two distinct crossings of opposite sign");
  const auto where = locate_crossings(d);
  const auto& lx = where.at(x);
  const auto& ly = where.at(y);
  if (!adjacent(lx.first, ly.first) || !adjacent(lx.second, ly.second)) {
    not_applicable("crossings " + std::to_string(x) + " and " + std::to_string(y) + " do not form a bigon");
  }
  TangleDiagram out = d;
  erase_passages(out, {lx.first, ly.first, lx.second, ly.second});
  out.crossings.erase(x);
  out.crossings.erase(y);
  return out;
}

TangleDiagram r3_apply(const TangleDiagram& d, const R3Site& site) {
  const auto where = locate_crossings(d);
  auto g = r3_geometry(d, where, site);
  if (!g) {
    not_applicable("no R3 triangle at crossings " + std::to_string(site.x) + ", " + std::to_string(site.y) +
                   ", " + std::to_string(site.z));
  }
  TangleDiagram out = d;
  swap_pair(out, g->ox, g->oy);
  swap_pair(out, g->ux, g->oz);
  swap_pair(out, g->uy, g->uz);
  return out;
}

std::vector<R1Delete> find_r1_sites(const TangleDiagram& d) {
  std::vector<R1Delete> out;
  for (const auto& [id, loc] : locate_crossings(d)) {
    if (d.crossing(id).is_classical() && adjacent(loc.first, loc.second)) out.push_back({id});
  }
  return out;
}

std::vector<R2Delete> find_r2_sites(const TangleDiagram& d) {
  const auto where = locate_crossings(d);
  std::vector<R2Delete> out;
  for (const Component& c : d.components) {
    for (std::size_t k = 0; k + 1 < c.events.size(); ++k) {
      const Passage& p = c.events[k];
      const Passage& q = c.events[k + 1];
      if (p.role != Role::Over || q.role != Role::Over || p.crossing == q.crossing) continue;
      if (d.sign(p.crossing) != -d.sign(q.crossing)) continue;
      if (adjacent(where.at(p.crossing).second, where.at(q.crossing).second)) out.push_back({p.crossing, q.crossing});
    }
  }
  return out;
}

std::vector<R3Site> find_r3_sites(const TangleDiagram& d) {
  const auto where = locate_crossings(d);
  std::vector<R3Site> out;
  std::set<std::tuple<CrossingId, CrossingId, CrossingId>> seen;
  for (const Component& c : d.components) {
    for (std::size_t k = 0; k + 1 < c.events.size(); ++k) {
      const Passage& p = c.events[k];
      const Passage& q = c.events[k + 1];
      if (p.role != Role::Over || q.role != Role::Over) continue;
      for (auto [x, y] : {std::pair{p.crossing, q.crossing}, std::pair{q.crossing, p.crossing}}) {
        // z is the Over passage next to U_x.
        const PassageRef ux = where.at(x).second;
        const auto& ev = d.components[ux.component].events;
        for (std::size_t n : {ux.position + 1, ux.position - 1}) {
          if (n >= ev.size() || ev[n].role != Role::Over) continue;
          R3Site site{x, y, ev[n].crossing};
          if (!r3_geometry(d, where, site)) continue;
          if (seen.insert({site.x, site.y, site.z}).second) out.push_back(site);
        }
      }
    }
  }
  return out;
}

TangleDiagram apply_move(const TangleDiagram& d, const MoveSite& site) {
  return std::visit(
      [&](const auto& s) -> TangleDiagram {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, R1Insert>) return r1_insert(d, s.at, s.sign, s.order);
        if constexpr (std::is_same_v<T, R1Delete>) return r1_delete(d, s.crossing);
        if constexpr (std::is_same_v<T, R2Insert>) return r2_insert(d, s.a, s.b, s.sign, s.same_direction);
        if constexpr (std::is_same_v<T, R2Delete>) return r2_delete(d, s.x, s.y);
        if constexpr (std::is_same_v<T, R3Site>) return r3_apply(d, s);
      },
      site);
}

// --- move log ---------------------------------------------------------------

namespace {

std::string arc_text(ArcPosition p) { return std::to_string(p.component + 1) + ":" + std::to_string(p.offset); }
std::string sign_text(int s) { return s > 0 ? "+" : "-"; }

[[noreturn]] void bad_move(std::string_view line, const std::string& why) {
  throw Error(ErrorCode::Syntax, "bad move \"" + std::string(line) + "\": " + why);
}

std::int64_t to_int(std::string_view line, const std::string& text) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) bad_move(line, "expected an integer, got '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    bad_move(line, "expected an integer, got '" + text + "'");
  }
}

ArcPosition to_arc(std::string_view line, const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) bad_move(line, "arc position must look like <component>:<offset>");
  std::int64_t c = to_int(line, text.substr(0, colon));
  std::int64_t o = to_int(line, text.substr(colon + 1));
  if (c < 1 || o < 0) bad_move(line, "arc position out of range");
  return {static_cast<std::size_t>(c - 1), static_cast<std::size_t>(o)};
}

int to_sign(std::string_view line, const std::string& text) {
  if (text == "+") return 1;
  if (text == "-") return -1;
  bad_move(line, "sign must be + or -");
}

}  // namespace

std::string format_move(const MoveSite& site) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, R1Insert>) {
          return "R1+ at=" + arc_text(s.at) + " sign=" + sign_text(s.sign) +
                 " order=" + (s.order == KinkOrder::OverFirst ? "over-first" : "under-first");
        }
        if constexpr (std::is_same_v<T, R1Delete>) return "R1- crossing=" + std::to_string(s.crossing);
        if constexpr (std::is_same_v<T, R2Insert>) {
          return "R2+ a=" + arc_text(s.a) + " b=" + arc_text(s.b) + " sign=" + sign_text(s.sign) + " " +
                 (s.same_direction ? "parallel" : "antiparallel");
        }
        if constexpr (std::is_same_v<T, R2Delete>) {
          return "R2- x=" + std::to_string(s.x) + " y=" + std::to_string(s.y);
        }
        if constexpr (std::is_same_v<T, R3Site>) {
          return "R3 x=" + std::to_string(s.x) + " y=" + std::to_string(s.y) + " z=" + std::to_string(s.z);
        }
      },
      site);
}

MoveSite parse_move(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string kind;
  in >> kind;
  std::map<std::string, std::string> kv;
  std::vector<std::string> flags;
  for (std::string tok; in >> tok;) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      flags.push_back(tok);
    } else {
      kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }
  auto need = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) bad_move(line, "missing " + key + "=");
    return it->second;
  };
  auto id = [&](const std::string& key) { return static_cast<CrossingId>(to_int(line, need(key))); };

  if (kind == "R1+") {
    const std::string& order = need("order");
    if (order != "over-first" && order != "under-first") bad_move(line, "order must be over-first or under-first");
    return R1Insert{to_arc(line, need("at")), to_sign(line, need("sign")),
                    order == "over-first" ? KinkOrder::OverFirst : KinkOrder::UnderFirst};
  }
  if (kind == "R1-") return R1Delete{id("crossing")};
  if (kind == "R2+") {
    if (flags.size() != 1 || (flags[0] != "parallel" && flags[0] != "antiparallel")) {
      bad_move(line, "expected parallel or antiparallel");
    }
    return R2Insert{to_arc(line, need("a")), to_arc(line, need("b")), to_sign(line, need("sign")),
                    flags[0] == "parallel"};
  }
  if (kind == "R2-") return R2Delete{id("x"), id("y")};
  if (kind == "R3") return R3Site{id("x"), id("y"), id("z")};
  bad_move(line, "unknown move kind '" + kind + "'");
}

std::vector<std::string> WalkResult::log() const {
  std::vector<std::string> out;
  for (const auto& m : moves) out.push_back(format_move(m));
  return out;
}

// --- random walk --------------------------------------------------------------

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

ArcPosition random_arc(Rng& rng, const TangleDiagram& d) {
  std::size_t total = 0;
  for (const auto& c : d.components) total += c.events.size() + 1;
  std::size_t g = pick(rng, total);
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    std::size_t gaps = d.components[i].events.size() + 1;
    if (g < gaps) return {i, g};
    g -= gaps;
  }
  return {0, 0};
}

int random_sign(Rng& rng) { return pick(rng, 2) == 0 ? 1 : -1; }

}  // namespace

WalkResult random_walk(const TangleDiagram& d, std::size_t n_moves, std::uint64_t seed, const WalkOptions& options) {
  Rng rng(seed);
  WalkResult result{d, {}};
  enum Kind { R1I, R1D, R2I, R2D, R3 };
  for (std::size_t step = 0; step < n_moves; ++step) {
    TangleDiagram& cur = result.diagram;
    const std::size_t crossings = cur.crossings.size();
    auto room = [&](std::size_t added) { return !options.max_crossings || crossings + added <= *options.max_crossings; };

    auto r1 = find_r1_sites(cur);
    auto r2 = find_r2_sites(cur);
    auto r3 = find_r3_sites(cur);
    std::vector<Kind> kinds;
    if (!cur.components.empty() && room(1)) kinds.push_back(R1I);
    if (!r1.empty()) kinds.push_back(R1D);
    if (!cur.components.empty() && room(2)) kinds.push_back(R2I);
    if (!r2.empty()) kinds.push_back(R2D);
    if (!r3.empty()) kinds.push_back(R3);
    if (kinds.empty()) break;

    MoveSite site;
    switch (kinds[pick(rng, kinds.size())]) {
      case R1I: {
        ArcPosition at = random_arc(rng, cur);
        int sign = random_sign(rng);
        site = R1Insert{at, sign, pick(rng, 2) == 0 ? KinkOrder::OverFirst : KinkOrder::UnderFirst};
        break;
      }
      case R1D: site = r1[pick(rng, r1.size())]; break;
      case R2I: {
        ArcPosition a = random_arc(rng, cur);
        ArcPosition b = random_arc(rng, cur);
        int sign = random_sign(rng);
        site = R2Insert{a, b, sign, pick(rng, 2) == 0};
        break;
      }
      case R2D: site = r2[pick(rng, r2.size())]; break;
      case R3: site = r3[pick(rng, r3.size())]; break;
    }
    cur = apply_move(cur, site);
    result.moves.push_back(site);
  }
  return result;
}

TangleDiagram replay(const TangleDiagram& d, const std::vector<std::string>& log) {
  TangleDiagram cur = d;
  for (const auto& line : log) cur = apply_move(cur, parse_move(line));
  return cur;
}

}  // namespace maip
