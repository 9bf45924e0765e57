#pragma once

#include <cstddef>
#include <vector>

#include "zzpers/barcode.hpp"
#include "zzpers/complex.hpp"
#include "zzpers/dual_graph.hpp"
#include "zzpers/filtration.hpp"

namespace zzp {

enum class GraphCell { None, Vertex, Edge };

/// One step of a graph zigzag. Cell None is an identity step.
struct GraphEvent {
  Direction direction = Direction::Add;
  GraphCell cell = GraphCell::None;
  std::size_t index = 0;  // dual vertex or dual edge
};

/// A zigzag of subgraphs G_0 <-> ... <-> G_m of a fixed graph, not
/// necessarily one cell per step.
struct GraphZigzag {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<char> initial_vertices;  // membership in G_0
  std::vector<char> initial_edges;
  std::vector<GraphEvent> events;

  std::size_t size() const noexcept { return events.size(); }
  /// Identity steps count as forward.
  std::vector<Arrow> arrows() const;
};

/// D_i is the subgraph of the dual graph of K dual to the simplices not in
/// K_i. Events on simplices below dimension p-1 become identity steps, so D
/// has exactly as many steps as f. Throws NotAManifold via dual_graph, and
/// ContractViolation if f touches a simplex outside K.
GraphZigzag dual_filtration(const ZigzagFiltration& f, const SimplicialComplex& K, std::size_t p);

/// Barcode of H_0 of a graph zigzag (all intervals of dimension 0, kind
/// Absolute, end types from g's arrows).
Barcode zero_dim_zigzag(const GraphZigzag& g);

/// Pers(H_p(K/F)) for a filtration f of a closed p-manifold K, via H_0 of
/// the dual filtration.
Barcode relative_top_barcode(const ZigzagFiltration& f, const SimplicialComplex& K, std::size_t p);

/// Pers(H_p(F)) and the co/oc/oo part of Pers(H_{p-1}(F)); f must be
/// standardized.
Barcode manifold_absolute_barcode(const ZigzagFiltration& f, const SimplicialComplex& K, std::size_t p);

}  // namespace zzp
