#include "zzpers/filtration.hpp"

#include <algorithm>

#include "zzpers/error.hpp"
#include "zzpers/random.hpp"

namespace zzp {

ZigzagFiltration::ZigzagFiltration() : table_(std::make_shared<SimplexTable>()) {}

ZigzagFiltration::ZigzagFiltration(std::vector<FiltrationEvent> events, std::vector<Simplex> initial) {
  auto table = std::make_shared<SimplexTable>();
  initial_.reserve(initial.size());
  for (const Simplex& s : initial) initial_.push_back(table->intern(s));
  events_.reserve(events.size());
  for (const FiltrationEvent& e : events) events_.push_back({e.direction, table->intern(e.simplex)});
  table_ = std::move(table);
}

ZigzagFiltration::ZigzagFiltration(std::shared_ptr<const SimplexTable> table, std::vector<IdEvent> events,
                                   std::vector<SimplexId> initial)
    : table_(std::move(table)), events_(std::move(events)), initial_(std::move(initial)) {}

std::vector<FiltrationEvent> ZigzagFiltration::events() const {
  std::vector<FiltrationEvent> out;
  out.reserve(events_.size());
  for (const IdEvent& e : events_) out.push_back({e.direction, (*table_)[e.simplex]});
  return out;
}

std::vector<Simplex> ZigzagFiltration::initial_simplices() const {
  std::vector<Simplex> out;
  out.reserve(initial_.size());
  for (SimplexId id : initial_) out.push_back((*table_)[id]);
  return out;
}

std::vector<Arrow> ZigzagFiltration::arrows() const {
  std::vector<Arrow> out;
  out.reserve(events_.size());
  for (const IdEvent& e : events_) out.push_back(to_arrow(e.direction));
  return out;
}

bool ZigzagFiltration::operator==(const ZigzagFiltration& other) const {
  if (size() != other.size() || initial_.size() != other.initial_.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (direction(i) != other.direction(i) || simplex(i) != other.simplex(i)) return false;
  }
  auto a = initial_simplices();
  auto b = other.initial_simplices();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// ---------------------------------------------------------------------------

std::string Violation::to_string() const {
  std::string where = event ? "event " + std::to_string(*event) : std::string("initial complex");
  switch (kind) {
    case ViolationKind::MissingFacet:
      return where + ": adding " + simplex.to_string() + " but facet " + related.to_string() + " is absent";
    case ViolationKind::DuplicateAdd:
      return where + ": adding " + simplex.to_string() + " which is already present";
    case ViolationKind::DanglingCoface:
      return where + ": deleting " + simplex.to_string() + " while coface " + related.to_string() + " is present";
    case ViolationKind::DeleteAbsent:
      return where + ": deleting " + simplex.to_string() + " which is absent";
    case ViolationKind::InitialNotClosed:
      return where + ": " + simplex.to_string() + " present without facet " + related.to_string();
  }
  return where;
}

std::vector<Violation> validate(const ZigzagFiltration& f) {
  const SimplexTable& table = f.table();
  std::vector<Violation> out;
  std::vector<char> present(table.size(), 0);
  std::vector<std::uint32_t> cofaces(table.size(), 0);  // present cofaces

  for (SimplexId s : f.initial()) present[s] = 1;
  for (SimplexId s : f.initial()) {
    for (SimplexId t : table.facets(s)) {
      if (!present[t]) out.push_back({std::nullopt, ViolationKind::InitialNotClosed, table[s], table[t]});
      ++cofaces[t];
    }
  }

  auto some_present_coface = [&](SimplexId s) {
    for (SimplexId c = 0; c < table.size(); ++c) {
      if (!present[c]) continue;
      auto fs = table.facets(c);
      if (std::find(fs.begin(), fs.end(), s) != fs.end()) return table[c];
    }
    return Simplex{};
  };

  for (std::size_t i = 0; i < f.size(); ++i) {
    const SimplexId s = f.simplex_id(i);
    if (f.direction(i) == Direction::Add) {
      if (present[s]) {
        out.push_back({i, ViolationKind::DuplicateAdd, table[s], {}});
        continue;
      }
      for (SimplexId t : table.facets(s)) {
        if (!present[t]) out.push_back({i, ViolationKind::MissingFacet, table[s], table[t]});
        ++cofaces[t];
      }
      present[s] = 1;
    } else {
      if (!present[s]) {
        out.push_back({i, ViolationKind::DeleteAbsent, table[s], {}});
        continue;
      }
      if (cofaces[s] > 0) out.push_back({i, ViolationKind::DanglingCoface, table[s], some_present_coface(s)});
      for (SimplexId t : table.facets(s)) --cofaces[t];
      present[s] = 0;
    }
  }
  return out;
}

void require_valid(const ZigzagFiltration& f) {
  const auto violations = validate(f);
  if (!violations.empty()) {
    throw Error(ErrorCode::InvalidInput, "invalid filtration: " + violations.front().to_string());
  }
}

std::optional<Repetition> find_repetition(const ZigzagFiltration& f) {
  constexpr auto none = EventIndexMap::npos;
  std::vector<std::size_t> deleted_at(f.table().size(), none);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const SimplexId s = f.simplex_id(i);
    if (f.direction(i) == Direction::Del) {
      if (deleted_at[s] == none) deleted_at[s] = i;
    } else if (deleted_at[s] != none) {
      return Repetition{f.simplex(i), deleted_at[s], i};
    }
  }
  return std::nullopt;
}

bool is_non_repetitive(const ZigzagFiltration& f) { return !find_repetition(f).has_value(); }

namespace {

std::vector<char> presence_after(const ZigzagFiltration& f, std::size_t steps) {
  std::vector<char> present(f.table().size(), 0);
  for (SimplexId s : f.initial()) present[s] = 1;
  for (std::size_t i = 0; i < steps; ++i) present[f.simplex_id(i)] = f.direction(i) == Direction::Add;
  return present;
}

std::vector<SimplexId> present_ids(const std::vector<char>& present) {
  std::vector<SimplexId> out;
  for (SimplexId s = 0; s < present.size(); ++s) {
    if (present[s]) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<SimplexId> final_complex(const ZigzagFiltration& f) { return complex_at(f, f.size()); }

std::vector<SimplexId> complex_at(const ZigzagFiltration& f, std::size_t i) {
  if (i > f.size()) throw Error(ErrorCode::OutOfRange, "complex index past the end of the filtration");
  return present_ids(presence_after(f, i));
}

SimplicialComplex total_complex(const ZigzagFiltration& f) {
  std::vector<char> used(f.table().size(), 0);
  for (SimplexId s : f.initial()) used[s] = 1;
  for (const IdEvent& e : f.id_events()) used[e.simplex] = 1;
  std::vector<Simplex> simplices;
  for (SimplexId s = 0; s < used.size(); ++s) {
    if (used[s]) simplices.push_back(f.table()[s]);
  }
  return SimplicialComplex(simplices);
}

bool is_standardized(const ZigzagFiltration& f) {
  if (!f.initial().empty()) return false;
  const auto present = presence_after(f, f.size());
  return std::none_of(present.begin(), present.end(), [](char c) { return c != 0; });
}

bool is_updown(const ZigzagFiltration& f) {
  bool seen_del = false;
  for (const IdEvent& e : f.id_events()) {
    if (e.direction == Direction::Del) {
      seen_del = true;
    } else if (seen_del) {
      return false;
    }
  }
  return true;
}

Standardized standardize(const ZigzagFiltration& f) {
  const SimplexTable& table = f.table();
  auto by_dim_lex = [&](SimplexId a, SimplexId b) { return dimension_then_lex_less(table[a], table[b]); };

  std::vector<SimplexId> head(f.initial().begin(), f.initial().end());
  std::sort(head.begin(), head.end(), by_dim_lex);
  std::vector<SimplexId> tail = final_complex(f);
  std::sort(tail.begin(), tail.end(), by_dim_lex);
  std::reverse(tail.begin(), tail.end());

  std::vector<IdEvent> events;
  events.reserve(head.size() + f.size() + tail.size());
  for (SimplexId s : head) events.push_back({Direction::Add, s});
  events.insert(events.end(), f.id_events().begin(), f.id_events().end());
  for (SimplexId s : tail) events.push_back({Direction::Del, s});

  Standardized out;
  out.prefix = head.size();
  out.suffix = tail.size();
  out.original_length = f.size();
  out.filtration = ZigzagFiltration(f.shared_table(), std::move(events));
  return out;
}

EventIndexMap build_event_index(const ZigzagFiltration& f) {
  EventIndexMap map;
  map.add_index.assign(f.table().size(), EventIndexMap::npos);
  map.del_index.assign(f.table().size(), EventIndexMap::npos);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const SimplexId s = f.simplex_id(i);
    auto& slot = f.direction(i) == Direction::Add ? map.add_index[s] : map.del_index[s];
    if (slot != EventIndexMap::npos) {
      throw Error(ErrorCode::NotNonRepetitive, "simplex " + f.simplex(i).to_string() + " has events at " +
                                                   std::to_string(slot) + " and " + std::to_string(i));
    }
    slot = i;
  }
  return map;
}

UpDown to_updown(const ZigzagFiltration& f) {
  if (auto rep = find_repetition(f)) {
    throw Error(ErrorCode::NotNonRepetitive, "simplex " + rep->simplex.to_string() + " deleted at " +
                                                 std::to_string(rep->deleted_at) + " and added again at " +
                                                 std::to_string(rep->added_again_at));
  }
  if (!f.initial().empty()) throw Error(ErrorCode::ContractViolation, "up-down conversion needs K_0 empty");

  UpDown out;
  out.index = build_event_index(f);
  std::vector<IdEvent> events;
  events.reserve(f.size());
  for (const IdEvent& e : f.id_events()) {
    if (e.direction == Direction::Add) events.push_back(e);
  }
  const std::size_t adds = events.size();
  for (const IdEvent& e : f.id_events()) {
    if (e.direction == Direction::Del) events.push_back(e);
  }
  if (2 * adds != f.size()) throw Error(ErrorCode::ContractViolation, "up-down conversion needs K_m empty");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (out.index.del_index[f.simplex_id(i)] == EventIndexMap::npos) {
      throw Error(ErrorCode::ContractViolation, "simplex " + f.simplex(i).to_string() + " is never deleted");
    }
  }
  out.filtration = ZigzagFiltration(f.shared_table(), std::move(events));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool is_facet_of(const SimplexTable& table, SimplexId facet, SimplexId s) {
  auto fs = table.facets(s);
  return std::find(fs.begin(), fs.end(), facet) != fs.end();
}

// Events (j-1, j) must be (first, second); returns (sigma, tau) where sigma
// is the added and tau the deleted simplex.
std::pair<SimplexId, SimplexId> check_switch(const ZigzagFiltration& f, std::size_t j, Direction first) {
  if (j == 0 || j >= f.size()) {
    throw Error(ErrorCode::InvalidSwitch, "switch position " + std::to_string(j) + " out of range");
  }
  const Direction second = first == Direction::Add ? Direction::Del : Direction::Add;
  if (f.direction(j - 1) != first || f.direction(j) != second) {
    throw Error(ErrorCode::InvalidSwitch, "events at " + std::to_string(j - 1) + "," + std::to_string(j) +
                                              " do not form the required add/delete pair");
  }
  const SimplexId sigma = first == Direction::Add ? f.simplex_id(j - 1) : f.simplex_id(j);
  const SimplexId tau = first == Direction::Add ? f.simplex_id(j) : f.simplex_id(j - 1);
  if (sigma == tau) {
    throw Error(ErrorCode::InvalidDiamond, "diamond at " + std::to_string(j) + " adds and deletes the same simplex " +
                                               f.table()[sigma].to_string());
  }
  if (is_facet_of(f.table(), tau, sigma)) {
    throw Error(ErrorCode::InvalidSwitch, "switch at " + std::to_string(j) + " would add " +
                                              f.table()[sigma].to_string() + " without its facet " +
                                              f.table()[tau].to_string());
  }
  return {sigma, tau};
}

ZigzagFiltration swap_events(const ZigzagFiltration& f, std::size_t j) {
  std::vector<IdEvent> events(f.id_events().begin(), f.id_events().end());
  std::swap(events[j - 1], events[j]);
  return ZigzagFiltration(f.shared_table(), std::move(events),
                          std::vector<SimplexId>(f.initial().begin(), f.initial().end()));
}

bool outward_legal(std::span<const IdEvent> ev, const SimplexTable& table, std::size_t j) {
  if (j == 0 || j >= ev.size()) return false;
  const IdEvent& a = ev[j - 1];
  const IdEvent& b = ev[j];
  return a.direction == Direction::Add && b.direction == Direction::Del && a.simplex != b.simplex &&
         !is_facet_of(table, b.simplex, a.simplex);
}

}  // namespace

ZigzagFiltration outward_switch(const ZigzagFiltration& f, std::size_t j) {
  check_switch(f, j, Direction::Add);
  return swap_events(f, j);
}

ZigzagFiltration inward_switch(const ZigzagFiltration& f, std::size_t j) {
  check_switch(f, j, Direction::Del);
  return swap_events(f, j);
}

std::vector<std::size_t> legal_outward_positions(const ZigzagFiltration& f) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < f.size(); ++j) {
    if (outward_legal(f.id_events(), f.table(), j)) out.push_back(j);
  }
  return out;
}

WalkResult random_outward_walk(const ZigzagFiltration& f, std::size_t steps, std::uint64_t seed) {
  constexpr auto absent = std::numeric_limits<std::size_t>::max();
  std::vector<IdEvent> events(f.id_events().begin(), f.id_events().end());
  const SimplexTable& table = f.table();

  // Legal positions as a dense array plus back-pointers, for O(1) uniform
  // sampling, insertion and removal.
  std::vector<std::size_t> legal;
  std::vector<std::size_t> slot(events.size() + 1, absent);
  auto refresh = [&](std::size_t j) {
    if (j == 0 || j >= events.size()) return;
    const bool ok = outward_legal(events, table, j);
    if (ok && slot[j] == absent) {
      slot[j] = legal.size();
      legal.push_back(j);
    } else if (!ok && slot[j] != absent) {
      const std::size_t last = legal.back();
      legal[slot[j]] = last;
      slot[last] = slot[j];
      legal.pop_back();
      slot[j] = absent;
    }
  };
  for (std::size_t j = 1; j < events.size(); ++j) refresh(j);

  SplitMix64 rng(seed);
  std::size_t taken = 0;
  for (; taken < steps && !legal.empty(); ++taken) {
    const std::size_t j = legal[rng.below(legal.size())];
    std::swap(events[j - 1], events[j]);
    refresh(j - 1);
    refresh(j);
    refresh(j + 1);
  }

  WalkResult out;
  out.steps_taken = taken;
  out.filtration = ZigzagFiltration(f.shared_table(), std::move(events),
                                    std::vector<SimplexId>(f.initial().begin(), f.initial().end()));
  return out;
}

}  // namespace zzp
