#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "zzpers/complex.hpp"

namespace zzp {

/// Dual graph of a closed simplicial p-manifold: one vertex per p-simplex,
/// one edge per (p-1)-simplex joining the duals of its two p-cofaces.
struct DualGraph {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::size_t p = 0;
  std::vector<SimplexId> vertex_primal;                 // dual vertex -> p-simplex
  std::vector<SimplexId> edge_primal;                   // dual edge -> (p-1)-simplex
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> primal_vertex;               // simplex id -> dual vertex or npos
  std::vector<std::size_t> primal_edge;                 // simplex id -> dual edge or npos

  std::size_t vertex_count() const noexcept { return vertex_primal.size(); }
  std::size_t edge_count() const noexcept { return edge_primal.size(); }

  std::optional<std::size_t> dual_vertex(SimplexId s) const {
    return s < primal_vertex.size() && primal_vertex[s] != npos ? std::optional(primal_vertex[s]) : std::nullopt;
  }
  std::optional<std::size_t> dual_edge(SimplexId s) const {
    return s < primal_edge.size() && primal_edge[s] != npos ? std::optional(primal_edge[s]) : std::nullopt;
  }
};

/// Throws NotAManifold naming the offending simplex when K has a simplex of
/// dimension above p, a (p-1)-simplex without exactly two p-cofaces, or a
/// simplex that is not a face of any p-simplex. Requires p >= 1.
DualGraph dual_graph(const SimplicialComplex& K, std::size_t p);

}  // namespace zzp
