#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zzpers/complex.hpp"
#include "zzpers/oracle/z2_matrix.hpp"

namespace zzp::oracle {

/// Chain coordinates of a fixed universe complex: q-chains are bit vectors
/// over the q-simplices in lexicographic order.
class ChainSpace {
 public:
  explicit ChainSpace(const SimplicialComplex& universe);

  const SimplicialComplex& universe() const noexcept { return universe_; }
  std::size_t count(std::size_t q) const noexcept { return q < ids_.size() ? ids_[q].size() : 0; }
  SimplexId id_at(std::size_t q, std::size_t pos) const { return ids_[q][pos]; }
  std::size_t position(SimplexId id) const { return position_[id]; }
  /// Membership mask (by universe id) of a subcomplex given by its simplices.
  /// Throws ContractViolation if a simplex is not in the universe.
  std::vector<char> mask(std::span<const Simplex> simplices) const;

 private:
  SimplicialComplex universe_;
  std::vector<std::vector<SimplexId>> ids_;
  std::vector<std::size_t> position_;
};

/// H_q(A, L) for subcomplexes L of A of the universe, with explicit cycle
/// representatives. L empty gives absolute homology.
class PairHomology {
 public:
  PairHomology(const ChainSpace& space, std::span<const char> a_mask, std::span<const char> l_mask, std::size_t q);

  std::size_t q() const noexcept { return q_; }
  std::size_t rank() const noexcept { return representatives_.size(); }
  /// Relative q-cycles, one per basis class.
  const std::vector<BitVector>& representatives() const noexcept { return representatives_; }
  const std::vector<char>& a_mask() const noexcept { return a_; }
  const std::vector<char>& l_mask() const noexcept { return l_; }

  /// Coordinates of the class of a q-chain after dropping its part outside
  /// A \ L; nullopt if it is not a relative cycle.
  std::optional<BitVector> coordinates(const BitVector& chain) const;

 private:
  std::size_t q_;
  std::vector<char> a_;
  std::vector<char> l_;
  std::vector<char> support_;  // q-positions in A \ L
  std::vector<BitVector> representatives_;
  EchelonBasis solver_;
  std::size_t boundary_rank_ = 0;
};

PairHomology homology_basis(const ChainSpace& space, std::size_t q);
/// Throws ContractViolation if L is not a subcomplex of the universe.
PairHomology relative_homology_basis(const ChainSpace& space, std::span<const Simplex> L, std::size_t q);

/// Matrix of the map induced by the inclusion (A, L) -> (A', L'). Throws
/// ContractViolation unless A is in A' and L is in L'.
Z2Matrix induced_map(const PairHomology& from, const PairHomology& to);

/// Whether (A, L) is contained in (A', L') as pairs.
bool pair_included(const PairHomology& from, const PairHomology& to);

}  // namespace zzp::oracle
