#include "maip/tangle_ops.hpp"

#include <algorithm>
#include <random>

#include "maip/errors.hpp"
#include "maip/generator.hpp"

namespace maip {

namespace {

Slot shifted(Slot s, int top_offset, int bottom_offset) {
  s.index += s.side == Side::Top ? top_offset : bottom_offset;
  return s;
}

void append_shifted(TangleDiagram& out, const TangleDiagram& d, CrossingId id_offset) {
  for (const auto& [id, rec] : d.crossings) out.crossings[id + id_offset] = rec;
}

std::vector<Passage> shifted_events(const std::vector<Passage>& events, CrossingId id_offset) {
  std::vector<Passage> out = events;
  for (auto& p : out) p.crossing += id_offset;
  return out;
}

}  // namespace

TangleDiagram tensor(const TangleDiagram& left, const TangleDiagram& right) {
  TangleDiagram out = left;
  const CrossingId offset = left.max_crossing_id();
  out.top = left.top + right.top;
  out.bottom = left.bottom + right.bottom;
  append_shifted(out, right, offset);
  for (const Component& c : right.components) {
    Component moved = c;
    moved.events = shifted_events(c.events, offset);
    if (!c.is_closed()) {
      moved.from = shifted(*c.from, left.top, left.bottom);
      moved.to = shifted(*c.to, left.top, left.bottom);
    }
    out.components.push_back(std::move(moved));
  }
  return out;
}

namespace {

struct Endpoint {
  std::size_t component = 0;
  bool is_start = false;
};

// Endpoint of `d` sitting at each slot of the given side, indexed k - 1.
std::vector<Endpoint> endpoints_on(const TangleDiagram& d, Side side, int count) {
  std::vector<Endpoint> out(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const Component& c = d.components[i];
    if (c.is_closed()) continue;
    if (c.from->side == side) out.at(static_cast<std::size_t>(c.from->index - 1)) = {i, true};
    if (c.to->side == side) out.at(static_cast<std::size_t>(c.to->index - 1)) = {i, false};
  }
  return out;
}

}  // namespace

GluePlan plan_composition(const TangleDiagram& upper, const TangleDiagram& lower) {
  if (upper.bottom != lower.top) {
    throw Error(ErrorCode::ArityMismatch, "cannot compose: upper tangle has " + std::to_string(upper.bottom) +
                                              " bottom slots but lower tangle has " + std::to_string(lower.top) +
                                              " top slots");
  }
  const auto up_ends = endpoints_on(upper, Side::Bottom, upper.bottom);
  const auto low_ends = endpoints_on(lower, Side::Top, lower.top);

  const std::size_t nu = upper.components.size();
  const std::size_t nl = lower.components.size();
  auto global = [nu](GlueMember m) { return m.factor == Factor::Upper ? m.component : nu + m.component; };
  std::vector<std::optional<GlueMember>> next(nu + nl);
  std::vector<bool> glued_start(nu + nl, false);

  for (std::size_t k = 0; k < up_ends.size(); ++k) {
    const Endpoint& u = up_ends[k];
    const Endpoint& l = low_ends[k];
    if (u.is_start == l.is_start) {
      throw Error(ErrorCode::OrientationMismatch,
                  "cannot compose: slot " + std::to_string(k + 1) + " joins two strand " +
                      (u.is_start ? "starts" : "ends"));
    }
    GlueMember um{Factor::Upper, u.component};
    GlueMember lm{Factor::Lower, l.component};
    if (u.is_start) {
      next[global(lm)] = um;
      glued_start[global(um)] = true;
    } else {
      next[global(um)] = lm;
      glued_start[global(lm)] = true;
    }
  }

  GluePlan plan;
  plan.upper_components = nu;
  plan.lower_components = nl;
  std::vector<bool> used(nu + nl, false);
  auto member_of = [nu](std::size_t g) {
    return g < nu ? GlueMember{Factor::Upper, g} : GlueMember{Factor::Lower, g - nu};
  };
  auto is_closed = [&](std::size_t g) {
    return g < nu ? upper.components[g].is_closed() : lower.components[g - nu].is_closed();
  };

  // Every component is visited from the lowest unvisited index: open chains
  // begin at an unglued start, and what remains after them are cycles.
  std::vector<std::pair<std::size_t, GlueChain>> keyed;
  for (std::size_t g = 0; g < nu + nl; ++g) {
    if (is_closed(g) || glued_start[g]) continue;
    GlueChain chain;
    for (std::optional<GlueMember> cur = member_of(g); cur; cur = next[global(*cur)]) {
      used[global(*cur)] = true;
      chain.members.push_back(*cur);
    }
    keyed.emplace_back(g, std::move(chain));
  }
  for (std::size_t g = 0; g < nu + nl; ++g) {
    if (used[g]) continue;
    GlueChain chain;
    chain.closed = true;
    if (is_closed(g)) {
      chain.members.push_back(member_of(g));
      used[g] = true;
    } else {
      std::optional<GlueMember> cur = member_of(g);
      while (cur && !used[global(*cur)]) {
        used[global(*cur)] = true;
        chain.members.push_back(*cur);
        cur = next[global(*cur)];
      }
    }
    keyed.emplace_back(g, std::move(chain));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, chain] : keyed) plan.chains.push_back(std::move(chain));
  return plan;
}

TangleDiagram compose(const TangleDiagram& upper, const TangleDiagram& lower) {
  GluePlan plan = plan_composition(upper, lower);
  const CrossingId offset = upper.max_crossing_id();

  TangleDiagram out;
  out.top = upper.top;
  out.bottom = lower.bottom;
  out.crossings = upper.crossings;
  append_shifted(out, lower, offset);

  for (const GlueChain& chain : plan.chains) {
    Component comp;
    comp.kind = chain.closed ? ComponentKind::Closed : ComponentKind::Long;
    for (const GlueMember& m : chain.members) {
      const bool up = m.factor == Factor::Upper;
      const Component& src = up ? upper.components[m.component] : lower.components[m.component];
      auto events = shifted_events(src.events, up ? 0 : offset);
      comp.events.insert(comp.events.end(), events.begin(), events.end());
    }
    if (!chain.closed) {
      const GlueMember& first = chain.members.front();
      const GlueMember& last = chain.members.back();
      comp.from = first.factor == Factor::Upper ? upper.components[first.component].from
                                                : lower.components[first.component].from;
      comp.to = last.factor == Factor::Upper ? upper.components[last.component].to
                                             : lower.components[last.component].to;
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

LaurentPoly predict_composed(const StructuredMaip& upper, const StructuredMaip& lower, const GluePlan& plan) {
  if (plan.upper_components != upper.components || plan.lower_components != lower.components ||
      upper.delta.size() != upper.components || lower.delta.size() != lower.components) {
    throw Error(ErrorCode::InconsistentPlan, "glue plan does not match the factors' component counts");
  }
  const std::size_t nu = upper.components;
  const std::size_t nl = lower.components;
  std::vector<std::optional<std::size_t>> chain_of(nu + nl);
  std::map<SymbolId, AffineInt> upper_images;
  std::map<SymbolId, AffineInt> lower_images;
  std::vector<std::int64_t> chain_delta(plan.chains.size(), 0);

  for (std::size_t k = 0; k < plan.chains.size(); ++k) {
    const auto& members = plan.chains[k].members;
    if (members.empty()) throw Error(ErrorCode::InconsistentPlan, "glue plan has an empty chain");
    std::int64_t offset = 0;
    for (const GlueMember& m : members) {
      const bool up = m.factor == Factor::Upper;
      if (m.component >= (up ? nu : nl)) {
        throw Error(ErrorCode::InconsistentPlan, "glue plan names a component outside its factor");
      }
      std::size_t g = up ? m.component : nu + m.component;
      if (chain_of[g]) throw Error(ErrorCode::InconsistentPlan, "glue plan uses a component twice");
      chain_of[g] = k;
      AffineInt image = AffineInt::symbol(component_symbol(k)) + AffineInt(offset);
      (up ? upper_images : lower_images)[component_symbol(m.component)] = image;
      offset += (up ? upper.delta : lower.delta)[m.component];
    }
    chain_delta[k] = offset;
  }
  for (const auto& c : chain_of) {
    if (!c) throw Error(ErrorCode::InconsistentPlan, "glue plan leaves a component out");
  }

  LaurentPoly out;
  auto add = [&](const StructuredMaip& s, const std::map<SymbolId, AffineInt>& images, std::size_t base) {
    for (const auto& r : s.records) {
      std::size_t over_chain = *chain_of.at(base + r.over_component);
      std::size_t delta_chain = *chain_of.at(base + r.delta_component);
      int var = component_symbol(over_chain);
      AffineInt weight = rewrite_symbols(r.weight, images);
      LaurentPoly bracket = LaurentPoly::monomial(var, weight) - LaurentPoly::constant(1);
      out += Integer(r.sign) * shift_monomial(bracket, var, AffineInt(chain_delta[delta_chain]));
    }
  };
  add(upper, upper_images, 0);
  add(lower, lower_images, nu);
  return out;
}

TangleDiagram identity_tangle(const std::vector<SlotEnd>& top) {
  std::vector<Direction> dirs;
  dirs.reserve(top.size());
  // A strand starting at the top runs downward.
  for (SlotEnd e : top) dirs.push_back(e == SlotEnd::Start ? Direction::Down : Direction::Up);
  if (dirs.empty()) return TangleDiagram{};
  return from_generator_word(identity_word(dirs));
}

std::pair<TangleDiagram, TangleDiagram> random_composable_pair(std::uint64_t seed,
                                                               const ComposablePairParams& params) {
  std::mt19937_64 rng(seed);
  TangleDiagram upper;
  do {
    upper = random_diagram(rng(), RandomDiagramParams{params.upper_closed, std::max(params.upper_long, 1),
                                                      params.upper_crossings, 0});
  } while (upper.bottom == 0);
  std::vector<SlotEnd> lower_top;
  for (SlotEnd e : boundary_pattern(upper).bottom) {
    lower_top.push_back(e == SlotEnd::Start ? SlotEnd::End : SlotEnd::Start);
  }
  TangleDiagram lower = random_diagram_with_top(rng(), lower_top, params.lower_closed, params.lower_extra_long,
                                                params.lower_crossings);
  return {std::move(upper), std::move(lower)};
}

}  // namespace maip
