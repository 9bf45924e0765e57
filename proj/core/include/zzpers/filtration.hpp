#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zzpers/barcode.hpp"
#include "zzpers/complex.hpp"
#include "zzpers/simplex.hpp"

namespace zzp {

enum class Direction { Add, Del };

constexpr Arrow to_arrow(Direction d) noexcept { return d == Direction::Add ? Arrow::Forward : Arrow::Backward; }

struct FiltrationEvent {
  Direction direction = Direction::Add;
  Simplex simplex;

  bool operator==(const FiltrationEvent&) const = default;
};

inline FiltrationEvent add(Simplex s) { return {Direction::Add, std::move(s)}; }
inline FiltrationEvent del(Simplex s) { return {Direction::Del, std::move(s)}; }

struct IdEvent {
  Direction direction = Direction::Add;
  SimplexId simplex = 0;

  bool operator==(const IdEvent&) const = default;
};

/// Simplex-wise zigzag filtration K_0 <-> K_1 <-> ... <-> K_m. Event i sits
/// between K_i and K_{i+1}. Simplices are interned into a table shared (read
/// only) by every filtration derived from this one.
class ZigzagFiltration {
 public:
  ZigzagFiltration();
  explicit ZigzagFiltration(std::vector<FiltrationEvent> events, std::vector<Simplex> initial = {});
  ZigzagFiltration(std::shared_ptr<const SimplexTable> table, std::vector<IdEvent> events,
                   std::vector<SimplexId> initial = {});

  /// Number of events m.
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }

  Direction direction(std::size_t i) const { return events_[i].direction; }
  SimplexId simplex_id(std::size_t i) const { return events_[i].simplex; }
  const Simplex& simplex(std::size_t i) const { return (*table_)[events_[i].simplex]; }
  std::span<const IdEvent> id_events() const noexcept { return events_; }
  /// K_0 as simplex ids.
  std::span<const SimplexId> initial() const noexcept { return initial_; }

  const SimplexTable& table() const noexcept { return *table_; }
  const std::shared_ptr<const SimplexTable>& shared_table() const noexcept { return table_; }

  std::vector<FiltrationEvent> events() const;
  std::vector<Simplex> initial_simplices() const;
  std::vector<Arrow> arrows() const;

  /// Value equality on events and initial complex (independent of tables).
  bool operator==(const ZigzagFiltration& other) const;

 private:
  std::shared_ptr<const SimplexTable> table_;
  std::vector<IdEvent> events_;
  std::vector<SimplexId> initial_;
};

// ---------------------------------------------------------------------------
// Well-formedness

enum class ViolationKind { MissingFacet, DuplicateAdd, DanglingCoface, DeleteAbsent, InitialNotClosed };

struct Violation {
  std::optional<std::size_t> event;  // nullopt for the initial complex
  ViolationKind kind = ViolationKind::MissingFacet;
  Simplex simplex;
  Simplex related;  // the missing facet / present coface, when there is one

  std::string to_string() const;
};

/// Empty iff every Add inserts an absent simplex whose facets are present
/// and every Del removes a present simplex with no present coface.
std::vector<Violation> validate(const ZigzagFiltration& f);

/// Throws InvalidInput describing the first violation, if any.
void require_valid(const ZigzagFiltration& f);

struct Repetition {
  Simplex simplex;
  std::size_t deleted_at = 0;
  std::size_t added_again_at = 0;
};

/// First simplex that is added again after being deleted.
std::optional<Repetition> find_repetition(const ZigzagFiltration& f);
bool is_non_repetitive(const ZigzagFiltration& f);

/// Simplex ids present in K_m.
std::vector<SimplexId> final_complex(const ZigzagFiltration& f);
/// Simplex ids present in K_i, for 0 <= i <= m.
std::vector<SimplexId> complex_at(const ZigzagFiltration& f, std::size_t i);
/// The union of all K_i.
SimplicialComplex total_complex(const ZigzagFiltration& f);

bool is_standardized(const ZigzagFiltration& f);
/// All additions precede all deletions (ignores K_0).
bool is_updown(const ZigzagFiltration& f);

// ---------------------------------------------------------------------------
// Standardization and up-down form

struct Standardized {
  ZigzagFiltration filtration;
  std::size_t prefix = 0;           // events prepended to build K_0
  std::size_t suffix = 0;           // events appended to dismantle K_m
  std::size_t original_length = 0;  // m of the input

  /// Index of the standardized complex holding the input's K_i.
  std::size_t to_standardized(std::size_t i) const noexcept { return i + prefix; }
};

/// Prepends additions of K_0 ordered by (dimension, lexicographic) and
/// appends deletions of K_m in the reverse of that order.
Standardized standardize(const ZigzagFiltration& f);

/// id_F: the positions of each simplex's addition and deletion.
struct EventIndexMap {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> add_index;  // by simplex id
  std::vector<std::size_t> del_index;

  std::size_t of(const IdEvent& e) const {
    return e.direction == Direction::Add ? add_index[e.simplex] : del_index[e.simplex];
  }
};

/// Builds id_F. Throws NotNonRepetitive if a simplex has two additions or
/// two deletions.
EventIndexMap build_event_index(const ZigzagFiltration& f);

struct UpDown {
  ZigzagFiltration filtration;  // all additions, then all deletions
  EventIndexMap index;          // id_F of the source filtration
};

/// Additions first, then deletions, each in source order. Requires f valid,
/// standardized and non-repetitive; throws NotNonRepetitive or
/// ContractViolation otherwise.
UpDown to_updown(const ZigzagFiltration& f);

// ---------------------------------------------------------------------------
// Mayer-Vietoris diamond switches. Position j names the complex K_j between
// events j-1 and j.

/// (+sigma, -tau) at events (j-1, j) becomes (-tau, +sigma). Throws
/// InvalidDiamond when sigma == tau and InvalidSwitch when the events do not
/// have that shape or the result would be invalid.
ZigzagFiltration outward_switch(const ZigzagFiltration& f, std::size_t j);

/// (-tau, +sigma) at events (j-1, j) becomes (+sigma, -tau).
ZigzagFiltration inward_switch(const ZigzagFiltration& f, std::size_t j);

/// Positions j at which outward_switch is legal.
std::vector<std::size_t> legal_outward_positions(const ZigzagFiltration& f);

struct WalkResult {
  ZigzagFiltration filtration;
  std::size_t steps_taken = 0;
};

/// Applies up to `steps` outward switches, each chosen uniformly among the
/// currently legal positions with a SplitMix64 stream seeded by `seed`.
/// Stops early when no switch is legal.
WalkResult random_outward_walk(const ZigzagFiltration& f, std::size_t steps, std::uint64_t seed);

}  // namespace zzp
