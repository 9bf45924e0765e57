#pragma once

#include <cstddef>
#include <span>

#include "zzpers/barcode.hpp"
#include "zzpers/complex.hpp"
#include "zzpers/filtration.hpp"

namespace zzp {

/// Pers_*(F) -> Pers_*(K/F) for a standardized non-repetitive F of length m:
///
///   co [b,d]_p -> co [b,d]_{p+1}
///   oc [b,d]_p -> oc [b,d]_{p+1}
///   cc [b,d]_p -> [0,b-1]_p and [d+1,m]_p
///   oo [b,d]_p -> [0,d]_{p+1} and [b,m]_{p+1}
///
/// End types of the output come from F's arrows, which this overload
/// reconstructs from the input's end types. Throws ContractViolation if an
/// interval reaches index 0 or m (F not standardized).
Barcode absolute_to_relative(const Barcode& absolute);
Barcode absolute_to_relative(const Barcode& absolute, std::span<const Arrow> arrows);

/// Rebuilds Pers(H_p(F)) and the co/oc/oo part of Pers(H_{p-1}(F)) from
/// Pers(H_p(K/F)), for a standardized filtration f of a closed p-manifold K.
/// Ends at 0 and m are paired per connected component of K. Throws
/// Inconsistency when the relative barcode cannot have come from such an f.
Barcode recover_absolute_from_relative(const Barcode& relative_p, const ZigzagFiltration& f,
                                       const SimplicialComplex& K, std::size_t p);

}  // namespace zzp
