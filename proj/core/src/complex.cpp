#include "zzpers/complex.hpp"

#include <algorithm>
#include <limits>

#include "zzpers/union_find.hpp"

namespace zzp {

SimplexId SimplexTable::intern(const Simplex& s) {
  if (auto it = index_.find(s); it != index_.end()) return it->second;

  std::vector<SimplexId> facets;
  if (s.size() > 1) {
    facets.reserve(s.size());
    for (Vertex v : s.vertices()) facets.push_back(intern(s.without(v)));
  }

  const auto id = static_cast<SimplexId>(simplices_.size());
  simplices_.push_back(s);
  facet_ids_.insert(facet_ids_.end(), facets.begin(), facets.end());
  facet_offset_.push_back(static_cast<std::uint32_t>(facet_ids_.size()));
  index_.emplace(s, id);
  if (!s.empty() && (!max_vertex_ || s.back() > *max_vertex_)) max_vertex_ = s.back();
  return id;
}

std::optional<SimplexId> SimplexTable::find(const Simplex& s) const {
  if (auto it = index_.find(s); it != index_.end()) return it->second;
  return std::nullopt;
}

SimplicialComplex::SimplicialComplex(std::span<const Simplex> simplices) {
  for (const Simplex& s : simplices) {
    if (!s.empty()) table_.intern(s);
  }
  for (SimplexId id = 0; id < table_.size(); ++id) {
    const std::size_t d = table_.dimension(id);
    if (by_dimension_.size() <= d) by_dimension_.resize(d + 1);
    by_dimension_[d].push_back(id);
  }
  for (auto& ids : by_dimension_) {
    std::sort(ids.begin(), ids.end(), [&](SimplexId a, SimplexId b) { return table_[a] < table_[b]; });
  }
}

std::span<const SimplexId> SimplicialComplex::simplices(std::size_t dim) const {
  if (dim >= by_dimension_.size()) return {};
  return by_dimension_[dim];
}

ComponentLabeling connected_components(const SimplicialComplex& complex) {
  ComponentLabeling out;
  out.simplex_label.assign(complex.size(), 0);
  if (complex.empty()) return out;

  // Every simplex is joined to its vertices; edges join vertices.
  UnionFind uf(complex.size());
  for (SimplexId id = 0; id < complex.size(); ++id) {
    for (Vertex v : complex.simplex(id).vertices()) {
      uf.unite(id, *complex.id(Simplex::from_sorted({v})));
    }
  }

  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> root_label(complex.size(), unset);
  // Vertices are sorted by id, so the first vertex seen in a component is
  // its smallest.
  for (SimplexId v : complex.simplices(0)) {
    const std::size_t r = uf.find(v);
    if (root_label[r] == unset) root_label[r] = out.count++;
  }
  for (SimplexId id = 0; id < complex.size(); ++id) {
    out.simplex_label[id] = root_label[uf.find(id)];
  }
  return out;
}

}  // namespace zzp
