#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zzpers/barcode.hpp"
#include "zzpers/filtration.hpp"
#include "zzpers/reduction.hpp"

namespace zzp {

/// The coned, add-only form of the extended filtration of an up-down
/// filtration U of length 2n:
///
///   [+w, +tau_0, ..., +tau_{n-1}, +w.tau_{2n-1}, ..., +w.tau_n]
///
/// where tau_n..tau_{2n-1} are U's deletions in order. Column c of the
/// coned filtration produces the complex of E-index c, so (K, L_{2n-1}) has
/// index n+1 and (K, L_n) has index 2n.
struct ExtendedFiltration {
  std::size_t n = 0;
  Vertex apex = 0;
  std::vector<Simplex> additions;         // 2n + 1 simplices
  std::vector<std::size_t> source_event;  // U position per column; npos for the apex

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Throws ContractViolation unless U is valid, standardized and up-down.
ExtendedFiltration build_extended(const ZigzagFiltration& U);

/// The same coned filtration assembled directly as a boundary matrix from
/// simplex ids, without materializing the cones.
BoundaryMatrix extended_boundary_matrix(const ZigzagFiltration& U);

enum class ExtendedLabel { Ord, Rel, Ext };

std::string to_string(ExtendedLabel label);

struct ExtendedInterval {
  Interval interval;  // E-indices; dimension of the creating column
  ExtendedLabel label = ExtendedLabel::Ord;
};

struct ExtendedBarcode {
  std::size_t n = 0;
  std::vector<ExtendedInterval> intervals;
  std::size_t apex_column = 0;  // the dropped infinite interval

  /// Plain barcode over E-indices 0..2n (all arrows forward).
  Barcode barcode() const;
};

/// Reads off Pers(E) from a reduction of the coned filtration: drops the
/// apex's infinite interval, maps pair (i, j) to [i, j-1] and labels it.
/// Throws Inconsistency if any other column is essential.
ExtendedBarcode extended_from_reduction(const ReductionState& state, std::size_t n);

ExtendedBarcode extended_barcode(const ZigzagFiltration& U,
                                 ReductionStrategy strategy = ReductionStrategy::Twist);

}  // namespace zzp
