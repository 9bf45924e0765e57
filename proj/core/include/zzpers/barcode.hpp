#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zzp {

/// Direction of the map V_i <-> V_{i+1} of a zigzag module.
enum class Arrow { Forward, Backward };

enum class EndType { Closed, Open };

/// Integer interval [b, d] of a barcode, with its homology dimension and
/// the open/closed type of both ends.
struct Interval {
  std::size_t b = 0;
  std::size_t d = 0;
  std::size_t dim = 0;
  EndType birth = EndType::Closed;
  EndType death = EndType::Closed;

  auto operator<=>(const Interval&) const = default;
  bool operator==(const Interval&) const = default;

  std::size_t length() const noexcept { return d - b + 1; }
  bool contains(std::size_t i) const noexcept { return b <= i && i <= d; }
  /// "cc", "co", "oc" or "oo".
  std::string type_code() const;
  std::string to_string() const;
};

Interval make_interval(std::size_t b, std::size_t d, std::size_t dim, EndType birth, EndType death);

enum class BarcodeKind { Absolute, Relative };

/// Multiset of intervals of a module of length m (indices 0..m).
struct Barcode {
  std::vector<Interval> intervals;
  std::size_t m = 0;
  BarcodeKind kind = BarcodeKind::Absolute;

  std::size_t size() const noexcept { return intervals.size(); }
  /// Sorts by (dim, b, d, birth, death).
  void sort();
  Barcode sorted() const;
  /// Intervals of one homology dimension.
  Barcode of_dimension(std::size_t dim) const;
  /// Number of intervals containing index i in dimension dim.
  std::size_t rank_at(std::size_t i, std::size_t dim) const;
};

/// Birth is closed iff b == 0 or arrow b-1 is forward; death is closed iff
/// d == m or arrow d is backward. m is arrows.size(). Throws OutOfRange
/// unless 0 <= b <= d <= m.
std::pair<EndType, EndType> classify_ends(std::size_t b, std::size_t d, std::span<const Arrow> arrows);

/// Re-derives the end types of every interval from the arrows.
void assign_end_types(Barcode& barcode, std::span<const Arrow> arrows);

/// Recovers the arrow directions of a simplex-wise module from the end types
/// of its barcode: each arrow is the birth arrow or the death arrow of
/// exactly one interval. Arrows not determined by any interval throw
/// Inconsistency.
std::vector<Arrow> arrows_from_barcode(const Barcode& barcode);

struct BarcodeComparison {
  bool equal = true;
  std::vector<Interval> only_in_first;   // with multiplicity
  std::vector<Interval> only_in_second;

  explicit operator bool() const noexcept { return equal; }
  std::string to_string() const;
};

/// Multiset equality over (dim, b, d, birth, death). Throws ContextMismatch
/// if m or kind differ.
BarcodeComparison multiset_equal(const Barcode& a, const Barcode& b);

}  // namespace zzp
