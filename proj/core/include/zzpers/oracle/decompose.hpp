#pragma once

#include <cstddef>
#include <vector>

#include "zzpers/barcode.hpp"
#include "zzpers/oracle/z2_matrix.hpp"

namespace zzp::oracle {

/// A zigzag module V_0 <-> ... <-> V_m with explicit matrices. maps[k] goes
/// V_k -> V_{k+1} for a forward arrow and V_{k+1} -> V_k for a backward one.
struct LinearSpaceChain {
  std::vector<std::size_t> dims;
  std::vector<Arrow> arrows;
  std::vector<Z2Matrix> maps;

  std::size_t length() const noexcept { return arrows.size(); }
  /// Throws Inconsistency if a matrix shape disagrees with the dimensions.
  void check() const;
};

/// gr[i][j] for i <= j: rank of the canonical map from the limit to the
/// colimit of the restriction to [i, j].
std::vector<std::vector<std::size_t>> generalized_ranks(const LinearSpaceChain& chain);

/// Interval decomposition by Moebius inversion of the generalized rank.
/// Intervals get dimension `dim` and end types from the arrows. Throws
/// Inconsistency on a negative multiplicity.
Barcode zigzag_decompose(const LinearSpaceChain& chain, std::size_t dim = 0);

}  // namespace zzp::oracle
