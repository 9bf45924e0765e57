#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "zzpers/simplex.hpp"

namespace zzp {

using SimplexId = std::uint32_t;

/// Interns simplices to dense ids. Interning a simplex interns all of its
/// faces first, so the facets of an id always have smaller ids and the set
/// of interned simplices is face-closed.
class SimplexTable {
 public:
  SimplexId intern(const Simplex& s);
  std::optional<SimplexId> find(const Simplex& s) const;

  const Simplex& operator[](SimplexId id) const { return simplices_[id]; }
  std::span<const SimplexId> facets(SimplexId id) const {
    return {facet_ids_.data() + facet_offset_[id], facet_ids_.data() + facet_offset_[id + 1]};
  }
  std::size_t dimension(SimplexId id) const { return simplices_[id].dimension(); }
  std::size_t size() const noexcept { return simplices_.size(); }

  /// Largest vertex id seen, or nullopt when empty.
  std::optional<Vertex> max_vertex() const { return max_vertex_; }

 private:
  std::vector<Simplex> simplices_;
  std::vector<std::uint32_t> facet_offset_{0};
  std::vector<SimplexId> facet_ids_;
  std::unordered_map<Simplex, SimplexId, SimplexHash> index_;
  std::optional<Vertex> max_vertex_;
};

/// A face-closed set of simplices. Built as the closure of the given
/// simplices; immutable afterwards.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::span<const Simplex> simplices);
  SimplicialComplex(std::initializer_list<Simplex> simplices)
      : SimplicialComplex(std::span<const Simplex>(simplices.begin(), simplices.size())) {}

  std::size_t size() const noexcept { return table_.size(); }
  bool empty() const noexcept { return table_.size() == 0; }
  /// Highest simplex dimension; 0 for an empty complex.
  std::size_t dimension() const noexcept { return by_dimension_.empty() ? 0 : by_dimension_.size() - 1; }
  std::size_t vertex_count() const noexcept { return count(0); }
  std::size_t count(std::size_t dim) const noexcept {
    return dim < by_dimension_.size() ? by_dimension_[dim].size() : 0;
  }

  bool contains(const Simplex& s) const { return table_.find(s).has_value(); }
  std::optional<SimplexId> id(const Simplex& s) const { return table_.find(s); }
  const Simplex& simplex(SimplexId id) const { return table_[id]; }
  std::span<const SimplexId> facets(SimplexId id) const { return table_.facets(id); }
  /// Ids of all simplices of the given dimension, sorted lexicographically.
  std::span<const SimplexId> simplices(std::size_t dim) const;
  const SimplexTable& table() const noexcept { return table_; }

 private:
  SimplexTable table_;
  std::vector<std::vector<SimplexId>> by_dimension_;
};

struct ComponentLabeling {
  std::size_t count = 0;
  /// Label per simplex id of the labelled complex.
  std::vector<std::size_t> simplex_label;

  std::size_t operator[](SimplexId id) const { return simplex_label[id]; }
};

/// Labels simplices by connected component. Labels are dense, starting at
/// 0, in order of the smallest vertex id of each component.
ComponentLabeling connected_components(const SimplicialComplex& complex);

}  // namespace zzp
