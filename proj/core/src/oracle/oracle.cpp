#include "zzpers/oracle/oracle.hpp"

#include <algorithm>

#include "zzpers/error.hpp"

namespace zzp::oracle {

namespace {

bool nested(const std::vector<char>& a_small, const std::vector<char>& l_small, const std::vector<char>& a_big,
            const std::vector<char>& l_big) {
  for (std::size_t id = 0; id < a_small.size(); ++id) {
    if ((a_small[id] && !a_big[id]) || (l_small[id] && !l_big[id])) return false;
  }
  return true;
}

// Masks of K_0..K_m by id of the total complex.
std::vector<std::vector<char>> snapshot_masks(const ZigzagFiltration& f, const SimplicialComplex& total) {
  std::vector<SimplexId> to_total(f.table().size(), 0);
  std::vector<char> used(f.table().size(), 0);
  for (SimplexId s : f.initial()) used[s] = 1;
  for (const IdEvent& e : f.id_events()) used[e.simplex] = 1;
  for (SimplexId s = 0; s < used.size(); ++s) {
    if (used[s]) to_total[s] = *total.id(f.table()[s]);
  }
  std::vector<std::vector<char>> out;
  out.reserve(f.size() + 1);
  std::vector<char> present(total.size(), 0);
  for (SimplexId s : f.initial()) present[to_total[s]] = 1;
  out.push_back(present);
  for (const IdEvent& e : f.id_events()) {
    present[to_total[e.simplex]] = e.direction == Direction::Add;
    out.push_back(present);
  }
  return out;
}

}  // namespace

LinearSpaceChain homology_chain(const PairSequence& seq, std::size_t q) {
  const ChainSpace space(seq.universe);
  if (seq.a.size() != seq.l.size() || seq.a.empty()) {
    throw Error(ErrorCode::ContractViolation, "pair sequence needs matching, non-empty A and L lists");
  }
  std::vector<PairHomology> spaces;
  spaces.reserve(seq.a.size());
  for (std::size_t k = 0; k < seq.a.size(); ++k) spaces.emplace_back(space, seq.a[k], seq.l[k], q);

  LinearSpaceChain chain;
  for (const PairHomology& h : spaces) chain.dims.push_back(h.rank());
  for (std::size_t k = 0; k + 1 < spaces.size(); ++k) {
    if (nested(seq.a[k], seq.l[k], seq.a[k + 1], seq.l[k + 1])) {
      chain.arrows.push_back(Arrow::Forward);
      chain.maps.push_back(induced_map(spaces[k], spaces[k + 1]));
    } else if (nested(seq.a[k + 1], seq.l[k + 1], seq.a[k], seq.l[k])) {
      chain.arrows.push_back(Arrow::Backward);
      chain.maps.push_back(induced_map(spaces[k + 1], spaces[k]));
    } else {
      throw Error(ErrorCode::ContractViolation, "pairs " + std::to_string(k) + " and " + std::to_string(k + 1) +
                                                    " are not nested");
    }
  }
  return chain;
}

Barcode sequence_barcode(const PairSequence& seq, std::size_t max_q) {
  Barcode out{{}, seq.length(), BarcodeKind::Absolute};
  for (std::size_t q = 0; q <= max_q; ++q) {
    const Barcode part = zigzag_decompose(homology_chain(seq, q), q);
    out.intervals.insert(out.intervals.end(), part.intervals.begin(), part.intervals.end());
  }
  out.sort();
  return out;
}

Barcode oracle_absolute(const ZigzagFiltration& f) {
  PairSequence seq;
  seq.universe = total_complex(f);
  seq.a = snapshot_masks(f, seq.universe);
  seq.l.assign(seq.a.size(), std::vector<char>(seq.universe.size(), 0));
  return sequence_barcode(seq, seq.universe.dimension());
}

Barcode oracle_relative(const ZigzagFiltration& f) {
  PairSequence seq;
  seq.universe = total_complex(f);
  seq.l = snapshot_masks(f, seq.universe);
  seq.a.assign(seq.l.size(), std::vector<char>(seq.universe.size(), 1));
  Barcode out = sequence_barcode(seq, seq.universe.dimension() + 1);
  out.kind = BarcodeKind::Relative;
  return out;
}

Barcode oracle_extended(const ZigzagFiltration& U) {
  if (!is_updown(U) || U.size() % 2 != 0 || !U.initial().empty()) {
    throw Error(ErrorCode::ContractViolation, "extended sequence needs a standardized up-down filtration");
  }
  const std::size_t n = U.size() / 2;
  PairSequence seq;
  seq.universe = total_complex(U);
  const auto masks = snapshot_masks(U, seq.universe);
  const std::vector<char> all(seq.universe.size(), 1);
  const std::vector<char> empty(seq.universe.size(), 0);
  for (std::size_t i = 0; i <= n; ++i) {
    seq.a.push_back(masks[i]);
    seq.l.push_back(empty);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    seq.a.push_back(all);
    seq.l.push_back(masks[2 * n - k]);
  }
  return sequence_barcode(seq, seq.universe.dimension() + 1);
}

Barcode oracle_complex_sequence(const std::vector<std::vector<Simplex>>& complexes) {
  std::vector<Simplex> all;
  for (const auto& c : complexes) all.insert(all.end(), c.begin(), c.end());
  PairSequence seq;
  seq.universe = SimplicialComplex(all);
  for (const auto& c : complexes) {
    const SimplicialComplex closed(c);
    std::vector<char> mask(seq.universe.size(), 0);
    for (SimplexId id = 0; id < closed.size(); ++id) mask[*seq.universe.id(closed.simplex(id))] = 1;
    seq.a.push_back(std::move(mask));
    seq.l.emplace_back(seq.universe.size(), 0);
  }
  return sequence_barcode(seq, seq.universe.dimension());
}

}  // namespace zzp::oracle
