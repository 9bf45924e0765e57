#include "zzpers/dual_graph.hpp"

#include <string>

#include "zzpers/error.hpp"

namespace zzp {

namespace {

[[noreturn]] void not_a_manifold(const SimplicialComplex& K, SimplexId s, const std::string& why) {
  throw Error(ErrorCode::NotAManifold, "not a closed manifold: simplex " + K.simplex(s).to_string() + " " + why);
}

}  // namespace

DualGraph dual_graph(const SimplicialComplex& K, std::size_t p) {
  if (p == 0) throw Error(ErrorCode::InvalidInput, "dual graph needs p >= 1");

  DualGraph g;
  g.p = p;
  g.primal_vertex.assign(K.size(), DualGraph::npos);
  g.primal_edge.assign(K.size(), DualGraph::npos);
  if (K.empty()) return g;

  if (K.dimension() > p) not_a_manifold(K, K.simplices(K.dimension()).front(), "has dimension above p");

  for (SimplexId t : K.simplices(p)) {
    g.primal_vertex[t] = g.vertex_primal.size();
    g.vertex_primal.push_back(t);
  }

  // Two p-cofaces per (p-1)-simplex; collected as dual vertex ids.
  std::vector<std::vector<std::size_t>> cofaces(K.size());
  for (SimplexId t : K.simplices(p)) {
    for (SimplexId f : K.facets(t)) cofaces[f].push_back(g.primal_vertex[t]);
  }
  for (SimplexId f : K.simplices(p - 1)) {
    if (cofaces[f].size() != 2) {
      not_a_manifold(K, f, "has " + std::to_string(cofaces[f].size()) + " cofaces of dimension p, expected 2");
    }
    g.primal_edge[f] = g.edge_primal.size();
    g.edge_primal.push_back(f);
    g.edges.emplace_back(cofaces[f][0], cofaces[f][1]);
  }

  // Purity: every simplex must be a face of some p-simplex. Facets have
  // smaller ids, so one descending sweep propagates the marks.
  std::vector<char> covered(K.size(), 0);
  for (SimplexId t : K.simplices(p)) covered[t] = 1;
  for (SimplexId id = static_cast<SimplexId>(K.size()); id-- > 0;) {
    if (!covered[id]) continue;
    for (SimplexId f : K.facets(id)) covered[f] = 1;
  }
  for (SimplexId id = 0; id < K.size(); ++id) {
    if (!covered[id]) not_a_manifold(K, id, "is not a face of any p-simplex");
  }
  return g;
}

}  // namespace zzp
