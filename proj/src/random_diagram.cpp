#include <algorithm>
#include <random>

#include "maip/diagram.hpp"
#include "maip/errors.hpp"

namespace maip {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Inserts the passage at a uniformly chosen gap over all components.
void place(Rng& rng, TangleDiagram& d, Passage p) {
  std::size_t gaps = 0;
  for (const auto& c : d.components) gaps += c.events.size() + 1;
  std::size_t g = pick(rng, gaps);
  for (auto& c : d.components) {
    if (g <= c.events.size()) {
      c.events.insert(c.events.begin() + static_cast<std::ptrdiff_t>(g), p);
      return;
    }
    g -= c.events.size() + 1;
  }
}

void place_crossings(Rng& rng, TangleDiagram& d, int n_crossings, int n_singular) {
  if ((n_crossings > 0 || n_singular > 0) && d.components.empty()) {
    throw Error(ErrorCode::Validation, "random diagram: crossings need at least one component");
  }
  CrossingId id = d.max_crossing_id();
  for (int k = 0; k < n_crossings; ++k) {
    ++id;
    d.crossings[id] = CrossingRecord::classical(pick(rng, 2) == 0 ? 1 : -1);
    place(rng, d, {id, Role::Over});
    place(rng, d, {id, Role::Under});
  }
  for (int k = 0; k < n_singular; ++k) {
    ++id;
    d.crossings[id] = CrossingRecord::singular();
    place(rng, d, {id, Role::SingPrimary});
    place(rng, d, {id, Role::SingSecondary});
  }
}

// Assigns slot indices to endpoints sitting on one side, in shuffled order.
void number_slots(Rng& rng, std::vector<std::optional<Slot>*>& ends) {
  std::shuffle(ends.begin(), ends.end(), rng);
  for (std::size_t k = 0; k < ends.size(); ++k) (*ends[k])->index = static_cast<int>(k) + 1;
}

}  // namespace

TangleDiagram random_diagram(std::uint64_t seed, const RandomDiagramParams& params) {
  if (params.closed < 0 || params.open < 0 || params.crossings < 0 || params.singular < 0) {
    throw Error(ErrorCode::Validation, "random diagram: counts must be non-negative");
  }
  Rng rng(seed);
  TangleDiagram d;
  for (int k = 0; k < params.open; ++k) {
    Side from = pick(rng, 2) == 0 ? Side::Top : Side::Bottom;
    Side to = pick(rng, 2) == 0 ? Side::Top : Side::Bottom;
    d.components.push_back(Component::open({from, 0}, {to, 0}));
  }
  for (int k = 0; k < params.closed; ++k) d.components.push_back(Component::closed());
  // Closed and long components are interleaved at random.
  std::shuffle(d.components.begin(), d.components.end(), rng);

  std::vector<std::optional<Slot>*> top;
  std::vector<std::optional<Slot>*> bottom;
  for (auto& c : d.components) {
    if (c.is_closed()) continue;
    for (auto* s : {&c.from, &c.to}) ((*s)->side == Side::Top ? top : bottom).push_back(s);
  }
  number_slots(rng, top);
  number_slots(rng, bottom);
  d.top = static_cast<int>(top.size());
  d.bottom = static_cast<int>(bottom.size());

  place_crossings(rng, d, params.crossings, params.singular);
  return d;
}

TangleDiagram random_diagram(std::uint64_t seed, int n_closed, int n_long, int n_crossings) {
  return random_diagram(seed, RandomDiagramParams{n_closed, n_long, n_crossings, 0});
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

TangleDiagram random_trial_diagram(std::uint64_t seed, int max_components, int max_crossings, int singular) {
  Rng rng(seed);
  int n = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(std::max(max_components, 1))));
  int closed = static_cast<int>(pick(rng, static_cast<std::size_t>(n) + 1));
  int crossings = static_cast<int>(pick(rng, static_cast<std::size_t>(std::max(max_crossings, 0)) + 1));
  return random_diagram(rng(), RandomDiagramParams{closed, n - closed, crossings, singular});
}

TangleDiagram random_diagram_with_top(std::uint64_t seed, const std::vector<SlotEnd>& top, int n_closed,
                                      int extra_long, int n_crossings) {
  Rng rng(seed);
  TangleDiagram d;
  d.top = static_cast<int>(top.size());

  std::vector<Slot> starts;
  std::vector<Slot> ends;
  for (std::size_t k = 0; k < top.size(); ++k) {
    (top[k] == SlotEnd::Start ? starts : ends).push_back(Slot::top(static_cast<int>(k) + 1));
  }
  // Fresh bottom slots balance the counts; they are numbered below.
  while (starts.size() < ends.size()) starts.push_back(Slot::bottom(0));
  while (ends.size() < starts.size()) ends.push_back(Slot::bottom(0));
  for (int k = 0; k < extra_long; ++k) {
    starts.push_back(Slot::bottom(0));
    ends.push_back(Slot::bottom(0));
  }
  std::shuffle(ends.begin(), ends.end(), rng);
  for (std::size_t k = 0; k < starts.size(); ++k) d.components.push_back(Component::open(starts[k], ends[k]));
  for (int k = 0; k < n_closed; ++k) d.components.push_back(Component::closed());
  std::shuffle(d.components.begin(), d.components.end(), rng);

  std::vector<std::optional<Slot>*> bottom;
  for (auto& c : d.components) {
    if (c.is_closed()) continue;
    for (auto* s : {&c.from, &c.to}) {
      if ((*s)->side == Side::Bottom) bottom.push_back(s);
    }
  }
  number_slots(rng, bottom);
  d.bottom = static_cast<int>(bottom.size());

  place_crossings(rng, d, n_crossings, 0);
  return d;
}

}  // namespace maip
