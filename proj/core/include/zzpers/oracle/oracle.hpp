#pragma once

#include <cstddef>
#include <vector>

#include "zzpers/barcode.hpp"
#include "zzpers/complex.hpp"
#include "zzpers/filtration.hpp"
#include "zzpers/oracle/decompose.hpp"
#include "zzpers/oracle/homology.hpp"

namespace zzp::oracle {

/// A sequence of pairs (A_k, L_k) of subcomplexes of a universe, given as
/// membership masks by universe id. Consecutive pairs must be nested one
/// way or the other; the arrow direction is inferred (equal pairs count as
/// forward).
struct PairSequence {
  SimplicialComplex universe;
  std::vector<std::vector<char>> a;
  std::vector<std::vector<char>> l;

  std::size_t length() const noexcept { return a.empty() ? 0 : a.size() - 1; }
};

/// Homology chain of degree q over the sequence. Throws ContractViolation
/// when neighbouring pairs are not nested.
LinearSpaceChain homology_chain(const PairSequence& seq, std::size_t q);

/// Union over q = 0..max_q of the decompositions, with end types.
Barcode sequence_barcode(const PairSequence& seq, std::size_t max_q);

/// H_*(F): the complexes K_0..K_m of f. Repetitive filtrations are fine.
Barcode oracle_absolute(const ZigzagFiltration& f);

/// H_*(K/F): the pairs (K, K_i) with K the total complex of f.
Barcode oracle_relative(const ZigzagFiltration& f);

/// Pers of the extended sequence of an up-down filtration U of length 2n:
/// L_0 .. L_n = K, then (K, L_{2n-1}) .. (K, L_n), over E-indices 0..2n.
Barcode oracle_extended(const ZigzagFiltration& U);

/// Pers of an arbitrary sequence of subcomplexes, each given by (not
/// necessarily closed) simplex lists whose closures are taken.
Barcode oracle_complex_sequence(const std::vector<std::vector<Simplex>>& complexes);

}  // namespace zzp::oracle
