#include "zzpers/oracle/homology.hpp"

#include "zzpers/error.hpp"

namespace zzp::oracle {

ChainSpace::ChainSpace(const SimplicialComplex& universe) : universe_(universe), position_(universe.size()) {
  const std::size_t top = universe.empty() ? 0 : universe.dimension() + 1;
  ids_.resize(top);
  for (std::size_t q = 0; q < top; ++q) {
    const auto ids = universe.simplices(q);
    ids_[q].assign(ids.begin(), ids.end());
    for (std::size_t pos = 0; pos < ids_[q].size(); ++pos) position_[ids_[q][pos]] = pos;
  }
}

std::vector<char> ChainSpace::mask(std::span<const Simplex> simplices) const {
  std::vector<char> out(universe_.size(), 0);
  for (const Simplex& s : simplices) {
    const auto id = universe_.id(s);
    if (!id) throw Error(ErrorCode::ContractViolation, s.to_string() + " is not in the universe complex");
    out[*id] = 1;
  }
  return out;
}

PairHomology::PairHomology(const ChainSpace& space, std::span<const char> a_mask, std::span<const char> l_mask,
                           std::size_t q)
    : q_(q), a_(a_mask.begin(), a_mask.end()), l_(l_mask.begin(), l_mask.end()), solver_(space.count(q)) {
  const SimplicialComplex& U = space.universe();
  if (a_.size() != U.size() || l_.size() != U.size()) {
    throw Error(ErrorCode::ContractViolation, "subcomplex masks do not match the universe");
  }
  for (SimplexId id = 0; id < U.size(); ++id) {
    if (l_[id] && !a_[id]) {
      throw Error(ErrorCode::ContractViolation, "L is not contained in A at " + U.simplex(id).to_string());
    }
    if (!a_[id]) continue;
    for (SimplexId f : U.facets(id)) {
      if (!a_[f] || (l_[id] && !l_[f])) {
        throw Error(ErrorCode::ContractViolation, "mask is not a subcomplex at " + U.simplex(id).to_string());
      }
    }
  }

  const std::size_t nq = space.count(q);
  auto in_pair = [&](SimplexId id) { return a_[id] && !l_[id]; };
  auto relative_boundary = [&](SimplexId id, std::size_t rows) {
    BitVector v(rows);
    for (SimplexId f : U.facets(id)) {
      if (!l_[f]) v.set(space.position(f));
    }
    return v;
  };

  support_.assign(nq, 0);
  std::vector<std::size_t> chain_positions;
  std::vector<BitVector> columns;
  const std::size_t rows = q == 0 ? 0 : space.count(q - 1);
  for (std::size_t pos = 0; pos < nq; ++pos) {
    const SimplexId id = space.id_at(q, pos);
    if (!in_pair(id)) continue;
    support_[pos] = 1;
    chain_positions.push_back(pos);
    columns.push_back(q == 0 ? BitVector(0) : relative_boundary(id, rows));
  }

  for (std::size_t pos = 0; pos < space.count(q + 1); ++pos) {
    const SimplexId id = space.id_at(q + 1, pos);
    if (in_pair(id)) solver_.insert(relative_boundary(id, nq));
  }
  boundary_rank_ = solver_.rank();

  for (const BitVector& k : kernel_basis(columns, rows)) {
    BitVector chain(nq);
    for (std::size_t c = k.find_first(); c != BitVector::npos; c = k.find_next(c)) chain.set(chain_positions[c]);
    if (solver_.insert(chain)) representatives_.push_back(std::move(chain));
  }
}

std::optional<BitVector> PairHomology::coordinates(const BitVector& chain) const {
  if (chain.size() != support_.size()) throw Error(ErrorCode::Inconsistency, "chain has the wrong size");
  BitVector c = chain;
  for (std::size_t pos = c.find_first(); pos != BitVector::npos; pos = c.find_next(pos)) {
    if (!support_[pos]) c.reset(pos);
  }
  auto comb = solver_.solve(c);
  if (!comb) return std::nullopt;
  BitVector out(rank());
  for (std::size_t k = 0; k < rank(); ++k) out[k] = (*comb)[boundary_rank_ + k];
  return out;
}

PairHomology homology_basis(const ChainSpace& space, std::size_t q) {
  const std::vector<char> all(space.universe().size(), 1);
  const std::vector<char> none(space.universe().size(), 0);
  return PairHomology(space, all, none, q);
}

PairHomology relative_homology_basis(const ChainSpace& space, std::span<const Simplex> L, std::size_t q) {
  const std::vector<char> all(space.universe().size(), 1);
  return PairHomology(space, all, space.mask(L), q);
}

bool pair_included(const PairHomology& from, const PairHomology& to) {
  if (from.a_mask().size() != to.a_mask().size() || from.q() != to.q()) return false;
  for (std::size_t id = 0; id < from.a_mask().size(); ++id) {
    if (from.a_mask()[id] && !to.a_mask()[id]) return false;
    if (from.l_mask()[id] && !to.l_mask()[id]) return false;
  }
  return true;
}

Z2Matrix induced_map(const PairHomology& from, const PairHomology& to) {
  if (!pair_included(from, to)) throw Error(ErrorCode::ContractViolation, "induced map needs an inclusion of pairs");
  Z2Matrix out(to.rank(), from.rank());
  for (std::size_t k = 0; k < from.rank(); ++k) {
    auto coords = to.coordinates(from.representatives()[k]);
    if (!coords) throw Error(ErrorCode::Inconsistency, "image of a relative cycle is not a relative cycle");
    out.columns[k] = std::move(*coords);
  }
  return out;
}

}  // namespace zzp::oracle
