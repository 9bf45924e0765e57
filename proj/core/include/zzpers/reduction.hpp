#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "zzpers/filtration.hpp"
#include "zzpers/simplex.hpp"

namespace zzp {

using Column = std::vector<std::uint32_t>;  // sorted row indices of the nonzero Z2 entries

/// Boundary matrix of an add-only filtration: column i is the boundary of
/// the i-th added simplex, rows indexed by addition order.
struct BoundaryMatrix {
  std::vector<Column> columns;
  std::vector<std::size_t> dims;

  std::size_t size() const noexcept { return columns.size(); }
  void push(Column column, std::size_t dim) {
    columns.push_back(std::move(column));
    dims.push_back(dim);
  }
};

enum class ReductionStrategy {
  Standard,  // left to right over all columns
  Twist,     // by decreasing dimension, clearing columns that become pivots
};

struct PersistencePair {
  std::size_t birth = 0;  // column whose simplex creates the class
  std::size_t death = 0;  // column whose simplex kills it

  auto operator<=>(const PersistencePair&) const = default;
};

struct ReductionState {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<Column> columns;           // reduced columns
  std::vector<std::size_t> low;          // lowest one per column, npos for zero columns
  std::vector<std::size_t> dims;
  std::vector<PersistencePair> pairs;    // sorted by death column
  std::vector<std::size_t> essentials;   // unpaired zero columns, ascending
};

ReductionState reduce_matrix(BoundaryMatrix matrix, ReductionStrategy strategy = ReductionStrategy::Twist);

/// Throws InvalidInput if a simplex repeats or is added before a facet.
BoundaryMatrix boundary_matrix(std::span<const Simplex> additions);

/// Standard persistence of an add-only filtration (K_0 must be empty).
ReductionState reduce(const ZigzagFiltration& f, ReductionStrategy strategy = ReductionStrategy::Twist);

}  // namespace zzp
