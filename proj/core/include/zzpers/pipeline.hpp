#pragma once

#include <cstddef>
#include <vector>

#include "zzpers/barcode.hpp"
#include "zzpers/extended.hpp"
#include "zzpers/filtration.hpp"
#include "zzpers/reduction.hpp"

namespace zzp {

/// Pers(E) -> Pers(U) for an up-down filtration of length 2n. Throws
/// LabelMismatch if the label disagrees with the endpoints.
Interval ext_to_updown(const ExtendedInterval& iv, std::size_t n);

/// Pers(U) -> Pers(F) given the positions in F of the interval's creator and
/// destroyer. `creator` is id_F of the event at U position b-1 and
/// `destroyer` that of the event at position d.
Interval remap_by_events(const Interval& iv, std::size_t creator, std::size_t destroyer);

/// Pers(U) -> Pers(F) through id_F. Throws ContractViolation on an open-open
/// interval or one that touches the ends of U.
Interval updown_to_f(const Interval& iv, const EventIndexMap& id_f, const ZigzagFiltration& U);

struct PhaseTimings {
  double validate = 0;  // seconds
  double convert = 0;   // standardize and up-down form
  double reduce = 0;    // coned boundary matrix and its reduction
  double remap = 0;     // Pers(E) -> Pers(U) -> Pers(F) -> input window

  double total() const noexcept { return validate + convert + reduce + remap; }
};

struct PipelineResult {
  /// Pers of the standardized filtration, in its own coordinates.
  Barcode standardized;
  std::size_t prefix = 0;
  std::size_t suffix = 0;
  /// Pers of the input: standardized intervals restricted to the input's
  /// window and shifted back, end types from the input arrows.
  Barcode barcode;
  /// Standardized intervals that lie entirely in the prefix or suffix.
  std::vector<Interval> synthetic;
};

/// Throws InvalidInput for an invalid filtration and NotNonRepetitive for a
/// repetitive one.
PipelineResult zigzag_pipeline(const ZigzagFiltration& f, PhaseTimings* timings = nullptr,
                               ReductionStrategy strategy = ReductionStrategy::Twist);

/// Pers_*(F) in input coordinates.
Barcode zigzag_barcode(const ZigzagFiltration& f);

/// Image of an interval of the upper filtration of a diamond at position j
/// (add at j-1, delete at j) in the lower one.
Interval diamond_image(const Interval& iv, std::size_t j);

/// Whether two barcodes correspond under the diamond at j. Compares
/// (dim, b, d) only; end types follow from each side's own arrows.
bool check_diamond(const Barcode& upper, const Barcode& lower, std::size_t j);

}  // namespace zzp
