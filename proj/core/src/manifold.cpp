#include "zzpers/manifold.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "zzpers/duality.hpp"
#include "zzpers/error.hpp"
#include "zzpers/union_find.hpp"

namespace zzp {

std::vector<Arrow> GraphZigzag::arrows() const {
  std::vector<Arrow> out;
  out.reserve(events.size());
  for (const GraphEvent& e : events) {
    out.push_back(e.cell != GraphCell::None && e.direction == Direction::Del ? Arrow::Backward : Arrow::Forward);
  }
  return out;
}

GraphZigzag dual_filtration(const ZigzagFiltration& f, const SimplicialComplex& K, std::size_t p) {
  const DualGraph dual = dual_graph(K, p);
  GraphZigzag g;
  g.vertex_count = dual.vertex_count();
  g.edges = dual.edges;
  g.initial_vertices.assign(dual.vertex_count(), 1);
  g.initial_edges.assign(dual.edge_count(), 1);

  // Translates f's table ids to K's ids once.
  constexpr SimplexId missing = static_cast<SimplexId>(-1);
  std::vector<SimplexId> to_k(f.table().size(), missing);
  auto lookup = [&](SimplexId s) {
    if (to_k[s] == missing) {
      const auto id = K.id(f.table()[s]);
      if (!id) {
        throw Error(ErrorCode::ContractViolation,
                    "filtration simplex " + f.table()[s].to_string() + " is not in the manifold");
      }
      to_k[s] = *id;
    }
    return to_k[s];
  };

  for (SimplexId s : f.initial()) {
    const SimplexId k = lookup(s);
    if (auto v = dual.dual_vertex(k)) g.initial_vertices[*v] = 0;
    if (auto e = dual.dual_edge(k)) g.initial_edges[*e] = 0;
  }
  g.events.reserve(f.size());
  for (const IdEvent& ev : f.id_events()) {
    const SimplexId k = lookup(ev.simplex);
    GraphEvent out;
    out.direction = ev.direction == Direction::Add ? Direction::Del : Direction::Add;
    if (auto v = dual.dual_vertex(k)) {
      out.cell = GraphCell::Vertex;
      out.index = *v;
    } else if (auto e = dual.dual_edge(k)) {
      out.cell = GraphCell::Edge;
      out.index = *e;
    }
    g.events.push_back(out);
  }
  return g;
}

namespace {

using Bits = boost::dynamic_bitset<>;
constexpr std::size_t absent = static_cast<std::size_t>(-1);

// Components of one snapshot: label per graph vertex (absent if the vertex
// is not in the snapshot) and one representative vertex per component.
struct Snapshot {
  std::vector<std::size_t> label;
  std::vector<std::size_t> representative;

  std::size_t count() const noexcept { return representative.size(); }
};

std::vector<Snapshot> snapshots(const GraphZigzag& g) {
  std::vector<char> vertex_in = g.initial_vertices;
  std::vector<char> edge_in = g.initial_edges;
  std::vector<Snapshot> out;
  out.reserve(g.size() + 1);
  for (std::size_t i = 0;; ++i) {
    UnionFind uf(g.vertex_count);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (edge_in[e]) uf.unite(g.edges[e].first, g.edges[e].second);
    }
    Snapshot snap;
    snap.label.assign(g.vertex_count, absent);
    std::vector<std::size_t> root_label(g.vertex_count, absent);
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
      if (!vertex_in[v]) continue;
      std::size_t& lbl = root_label[uf.find(v)];
      if (lbl == absent) {
        lbl = snap.representative.size();
        snap.representative.push_back(v);
      }
      snap.label[v] = lbl;
    }
    out.push_back(std::move(snap));
    if (i == g.size()) break;

    const GraphEvent& ev = g.events[i];
    const char present = ev.direction == Direction::Add;
    if (ev.cell == GraphCell::Vertex) {
      vertex_in[ev.index] = present;
    } else if (ev.cell == GraphCell::Edge) {
      edge_in[ev.index] = present;
    }
  }
  return out;
}

// Component map between adjacent snapshots along the arrow: from the
// smaller graph to the larger one.
std::vector<std::size_t> component_map(const Snapshot& from, const Snapshot& to) {
  std::vector<std::size_t> map(from.count());
  for (std::size_t a = 0; a < from.count(); ++a) {
    map[a] = to.label[from.representative[a]];
    if (map[a] == absent) throw Error(ErrorCode::Inconsistency, "graph zigzag step is not an inclusion");
  }
  return map;
}

// Reduces vectors to an echelon basis (pivot: lowest set bit).
std::vector<Bits> echelon(std::vector<Bits> vectors) {
  std::vector<Bits> basis;
  if (vectors.empty()) return basis;
  std::vector<std::size_t> pivot(vectors.front().size(), absent);
  for (Bits& v : vectors) {
    for (std::size_t p = v.find_first(); p != Bits::npos; p = v.find_first()) {
      if (pivot[p] == absent) {
        pivot[p] = basis.size();
        basis.push_back(std::move(v));
        break;
      }
      v ^= basis[pivot[p]];
    }
  }
  return basis;
}

std::size_t rank_of(std::vector<Bits> vectors) { return echelon(std::move(vectors)).size(); }

// Generalized rank gr(i, j) for all i <= j; gr[i][j].
std::vector<std::vector<std::size_t>> generalized_ranks(const std::vector<Snapshot>& snaps,
                                                        const std::vector<Arrow>& arrows) {
  const std::size_t m = arrows.size();
  std::vector<std::vector<std::size_t>> maps(m);  // smaller snapshot -> larger one
  for (std::size_t k = 0; k < m; ++k) {
    maps[k] = arrows[k] == Arrow::Forward ? component_map(snaps[k], snaps[k + 1])
                                          : component_map(snaps[k + 1], snaps[k]);
  }
  std::vector<std::size_t> offset(m + 2, 0);
  for (std::size_t k = 0; k <= m; ++k) offset[k + 1] = offset[k] + snaps[k].count();

  std::vector<std::vector<std::size_t>> gr(m + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = 0; i <= m; ++i) {
    const std::size_t ci = snaps[i].count();
    if (ci == 0) continue;

    // Limit: basis of the image of lim in V_i + V_j, as [left | right] bits.
    std::vector<Bits> lim;
    for (std::size_t a = 0; a < ci; ++a) {
      Bits v(2 * ci);
      v.set(a);
      v.set(ci + a);
      lim.push_back(std::move(v));
    }
    // Colimit: components of the graph whose nodes are the basis elements
    // of V_i..V_j and whose edges are the component maps.
    UnionFind colim(offset[m + 1]);

    auto record = [&](std::size_t j) {
      std::vector<std::size_t> dense(offset[m + 1], absent);
      std::size_t classes = 0;
      std::vector<std::size_t> cls(ci);
      for (std::size_t a = 0; a < ci; ++a) {
        std::size_t& d = dense[colim.find(offset[i] + a)];
        if (d == absent) d = classes++;
        cls[a] = d;
      }
      std::vector<Bits> images;
      for (const Bits& v : lim) {
        Bits img(classes);
        for (std::size_t a = v.find_first(); a != Bits::npos && a < ci; a = v.find_next(a)) img.flip(cls[a]);
        images.push_back(std::move(img));
      }
      gr[i][j] = rank_of(std::move(images));
    };

    record(i);
    for (std::size_t j = i; j < m; ++j) {
      const std::size_t cj = snaps[j].count();
      const std::size_t cn = snaps[j + 1].count();
      std::vector<Bits> next;
      if (arrows[j] == Arrow::Forward) {
        for (std::size_t a = 0; a < cj; ++a) colim.unite(offset[j] + a, offset[j + 1] + maps[j][a]);
        for (const Bits& v : lim) {
          Bits w(ci + cn);
          for (std::size_t a = v.find_first(); a != Bits::npos; a = v.find_next(a)) {
            if (a < ci) {
              w.flip(a);
            } else {
              w.flip(ci + maps[j][a - ci]);
            }
          }
          next.push_back(std::move(w));
        }
      } else {
        for (std::size_t a = 0; a < cn; ++a) colim.unite(offset[j + 1] + a, offset[j] + maps[j][a]);
        // Pullback: (l, y) with right(l) = g(y). Bits are [V_j | V_i | V_{j+1}]
        // and elimination only pivots inside the V_j block.
        std::vector<Bits> items;
        for (const Bits& v : lim) {
          Bits w(cj + ci + cn);
          for (std::size_t a = v.find_first(); a != Bits::npos; a = v.find_next(a)) {
            w.flip(a < ci ? cj + a : a - ci);
          }
          items.push_back(std::move(w));
        }
        for (std::size_t y = 0; y < cn; ++y) {
          Bits w(cj + ci + cn);
          w.flip(maps[j][y]);
          w.flip(cj + ci + y);
          items.push_back(std::move(w));
        }
        std::vector<std::size_t> pivot(cj, absent);
        std::vector<Bits> reduced;
        for (Bits& w : items) {
          std::size_t p = w.find_first();
          while (p < cj && pivot[p] != absent) {
            w ^= reduced[pivot[p]];
            p = w.find_first();
          }
          if (p < cj) {
            pivot[p] = reduced.size();
            reduced.push_back(std::move(w));
          } else if (p != Bits::npos) {
            Bits kernel(ci + cn);
            for (std::size_t a = p; a != Bits::npos; a = w.find_next(a)) kernel.set(a - cj);
            next.push_back(std::move(kernel));
          }
        }
      }
      lim = echelon(std::move(next));
      record(j + 1);
    }
  }
  return gr;
}

}  // namespace

Barcode zero_dim_zigzag(const GraphZigzag& g) {
  const std::size_t m = g.size();
  const std::vector<Arrow> arrows = g.arrows();
  const auto gr = generalized_ranks(snapshots(g), arrows);
  auto at = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> std::ptrdiff_t {
    if (i < 0 || j > static_cast<std::ptrdiff_t>(m)) return 0;
    return static_cast<std::ptrdiff_t>(gr[i][j]);
  };

  Barcode out{{}, m, BarcodeKind::Absolute};
  for (std::ptrdiff_t b = 0; b <= static_cast<std::ptrdiff_t>(m); ++b) {
    for (std::ptrdiff_t d = b; d <= static_cast<std::ptrdiff_t>(m); ++d) {
      const std::ptrdiff_t mult = at(b, d) - at(b - 1, d) - at(b, d + 1) + at(b - 1, d + 1);
      if (mult < 0) {
        throw Error(ErrorCode::Inconsistency, "negative multiplicity for [" + std::to_string(b) + "," +
                                                  std::to_string(d) + "] in the H_0 zigzag");
      }
      const auto [birth, death] = classify_ends(b, d, arrows);
      for (std::ptrdiff_t k = 0; k < mult; ++k) out.intervals.push_back(make_interval(b, d, 0, birth, death));
    }
  }
  return out;
}

Barcode relative_top_barcode(const ZigzagFiltration& f, const SimplicialComplex& K, std::size_t p) {
  Barcode bar = zero_dim_zigzag(dual_filtration(f, K, p));
  bar.kind = BarcodeKind::Relative;
  for (Interval& iv : bar.intervals) iv.dim = p;
  assign_end_types(bar, f.arrows());
  bar.sort();
  return bar;
}

Barcode manifold_absolute_barcode(const ZigzagFiltration& f, const SimplicialComplex& K, std::size_t p) {
  return recover_absolute_from_relative(relative_top_barcode(f, K, p), f, K, p);
}

}  // namespace zzp
