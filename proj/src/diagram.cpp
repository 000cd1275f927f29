#include "maip/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "maip/errors.hpp"

namespace maip {

namespace {

std::string role_name(Role r) {
  switch (r) {
    case Role::Over: return "Over";
    case Role::Under: return "Under";
    case Role::SingPrimary: return "SingPrimary";
    case Role::SingSecondary: return "SingSecondary";
  }
  return "?";
}

bool role_is_classical(Role r) { return r == Role::Over || r == Role::Under; }

}  // namespace

std::string Slot::to_string() const {
  return (side == Side::Top ? "T" : "B") + std::to_string(index);
}

Component Component::closed(std::vector<Passage> events) {
  return Component{ComponentKind::Closed, std::move(events), std::nullopt, std::nullopt};
}

Component Component::open(Slot from, Slot to, std::vector<Passage> events) {
  return Component{ComponentKind::Long, std::move(events), from, to};
}

const CrossingRecord& TangleDiagram::crossing(CrossingId id) const {
  auto it = crossings.find(id);
  if (it == crossings.end()) {
    throw Error(ErrorCode::Validation, "unknown crossing " + std::to_string(id));
  }
  return it->second;
}

CrossingId TangleDiagram::max_crossing_id() const {
  return crossings.empty() ? 0 : crossings.rbegin()->first;
}

std::size_t TangleDiagram::num_singular() const {
  return static_cast<std::size_t>(std::count_if(crossings.begin(), crossings.end(),
                                                [](const auto& kv) { return !kv.second.is_classical(); }));
}

std::vector<Violation> validate(const TangleDiagram& d) {
  std::vector<Violation> out;
  auto report = [&out](std::string msg) { out.push_back({std::move(msg)}); };

  if (d.top < 0 || d.bottom < 0) report("negative boundary arity");

  std::map<Slot, int> slot_use;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const Component& c = d.components[i];
    std::string name = "component " + std::to_string(i + 1);
    if (c.kind == ComponentKind::Long) {
      if (!c.from || !c.to) report(name + ": endpoint arity: long component needs exactly two slots");
    } else if (c.from || c.to) {
      report(name + ": endpoint arity: closed component cannot have slots");
    }
    for (const auto& s : {c.from, c.to}) {
      if (!s) continue;
      int limit = s->side == Side::Top ? d.top : d.bottom;
      if (s->index < 1 || s->index > limit) report(name + ": slot " + s->to_string() + " out of range");
      ++slot_use[*s];
    }
  }
  for (const auto& [slot, n] : slot_use) {
    if (n > 1) report("slot " + slot.to_string() + " used " + std::to_string(n) + " times");
  }
  for (int k = 1; k <= d.top; ++k) {
    if (!slot_use.count(Slot::top(k))) report("slot T" + std::to_string(k) + " unused");
  }
  for (int k = 1; k <= d.bottom; ++k) {
    if (!slot_use.count(Slot::bottom(k))) report("slot B" + std::to_string(k) + " unused");
  }

  for (const auto& [id, rec] : d.crossings) {
    if (id <= 0) report("crossing " + std::to_string(id) + ": id must be positive");
    if (rec.is_classical() && rec.sign != 1 && rec.sign != -1) {
      report("crossing " + std::to_string(id) + ": classical sign must be +1 or -1");
    }
    if (!rec.is_classical() && rec.sign != 0) {
      report("crossing " + std::to_string(id) + ": singular crossing carries a sign");
    }
  }

  std::map<CrossingId, std::map<Role, int>> seen;
  for (const Component& c : d.components) {
    for (const Passage& p : c.events) {
      auto it = d.crossings.find(p.crossing);
      if (it == d.crossings.end()) {
        report("crossing " + std::to_string(p.crossing) + ": not in crossing table");
        continue;
      }
      if (role_is_classical(p.role) != it->second.is_classical()) {
        report("crossing " + std::to_string(p.crossing) + ": role " + role_name(p.role) +
               " does not match crossing kind");
      }
      ++seen[p.crossing][p.role];
    }
  }
  for (const auto& [id, rec] : d.crossings) {
    const auto& roles = seen[id];
    std::vector<Role> wanted = rec.is_classical() ? std::vector<Role>{Role::Over, Role::Under}
                                                  : std::vector<Role>{Role::SingPrimary, Role::SingSecondary};
    for (Role r : wanted) {
      auto it = roles.find(r);
      int n = it == roles.end() ? 0 : it->second;
      if (n == 0) report("crossing " + std::to_string(id) + ": missing " + role_name(r) + " passage");
      if (n > 1) report("crossing " + std::to_string(id) + ": duplicate role " + role_name(r));
    }
  }
  return out;
}

bool is_valid(const TangleDiagram& d) { return validate(d).empty(); }

void require_valid(const TangleDiagram& d) {
  auto v = validate(d);
  if (v.empty()) return;
  std::string msg = "invalid diagram:";
  for (const auto& x : v) msg += "\n  " + x.message;
  throw Error(ErrorCode::Validation, msg);
}

std::map<CrossingId, CrossingLocation> locate_crossings(const TangleDiagram& d) {
  std::map<CrossingId, CrossingLocation> out;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& ev = d.components[i].events;
    for (std::size_t k = 0; k < ev.size(); ++k) {
      auto& loc = out[ev[k].crossing];
      if (ev[k].role == Role::Over || ev[k].role == Role::SingPrimary) {
        loc.first = {i, k};
      } else {
        loc.second = {i, k};
      }
    }
  }
  return out;
}

TangleDiagram permute_components(const TangleDiagram& d, const std::vector<std::size_t>& order) {
  if (order.size() != d.components.size()) {
    throw Error(ErrorCode::Validation, "permute_components: order has wrong length");
  }
  std::vector<bool> used(order.size(), false);
  TangleDiagram out;
  out.top = d.top;
  out.bottom = d.bottom;
  out.crossings = d.crossings;
  for (std::size_t k : order) {
    if (k >= order.size() || used[k]) throw Error(ErrorCode::Validation, "permute_components: not a permutation");
    used[k] = true;
    out.components.push_back(d.components[k]);
  }
  return out;
}

TangleDiagram renumber_crossings(const TangleDiagram& d) {
  std::map<CrossingId, CrossingId> fresh;
  for (const auto& c : d.components) {
    for (const auto& p : c.events) fresh.try_emplace(p.crossing, static_cast<CrossingId>(fresh.size()) + 1);
  }
  TangleDiagram out = d;
  out.crossings.clear();
  for (auto& c : out.components) {
    for (auto& p : c.events) p.crossing = fresh.at(p.crossing);
  }
  for (const auto& [old_id, new_id] : fresh) out.crossings[new_id] = d.crossing(old_id);
  return out;
}

TangleDiagram normalize_numbering(const TangleDiagram& d) {
  std::vector<std::size_t> order(d.components.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&d](std::size_t a, std::size_t b) {
    const auto& ca = d.components[a];
    const auto& cb = d.components[b];
    if (ca.is_closed() != cb.is_closed()) return !ca.is_closed();
    if (ca.is_closed()) return false;
    return *ca.from < *cb.from;
  });
  return renumber_crossings(permute_components(d, order));
}

BoundaryPattern boundary_pattern(const TangleDiagram& d) {
  BoundaryPattern p;
  p.top.assign(static_cast<std::size_t>(d.top), SlotEnd::Start);
  p.bottom.assign(static_cast<std::size_t>(d.bottom), SlotEnd::Start);
  for (const auto& c : d.components) {
    if (c.is_closed()) continue;
    auto mark = [&p](Slot s, SlotEnd e) {
      auto& v = s.side == Side::Top ? p.top : p.bottom;
      v.at(static_cast<std::size_t>(s.index - 1)) = e;
    };
    mark(*c.from, SlotEnd::Start);
    mark(*c.to, SlotEnd::End);
  }
  return p;
}

}  // namespace maip
