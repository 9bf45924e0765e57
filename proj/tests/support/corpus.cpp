#include "corpus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "zzpers/generate.hpp"

namespace zzp::testing {

Interval iv(const std::string& type, std::size_t b, std::size_t d, std::size_t dim) {
  if (type.size() != 2) throw std::invalid_argument("type code must have two letters");
  auto end = [](char c) { return c == 'c' ? EndType::Closed : EndType::Open; };
  return make_interval(b, d, dim, end(type[0]), end(type[1]));
}

Barcode bar(std::vector<Interval> intervals, std::size_t m, BarcodeKind kind) {
  Barcode out{std::move(intervals), m, kind};
  out.sort();
  return out;
}

ZigzagFiltration filt(const std::string& events) {
  std::istringstream ss(events);
  std::vector<FiltrationEvent> out;
  for (std::string tok; ss >> tok;) {
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) throw std::invalid_argument("bad event " + tok);
    std::vector<Vertex> vs;
    std::istringstream vss(tok.substr(1));
    for (std::string v; std::getline(vss, v, ',');) vs.push_back(static_cast<Vertex>(std::stoul(v)));
    out.push_back({tok[0] == '+' ? Direction::Add : Direction::Del, Simplex(vs)});
  }
  return ZigzagFiltration(std::move(out));
}

SimplicialComplex random_complex(SplitMix64& rng, std::size_t max_size, std::size_t max_dim) {
  const std::size_t nv = 3 + rng.below(6);
  std::vector<Simplex> chosen;
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::size_t k = 1 + rng.below(std::min(max_dim + 1, nv));
    // Top-dimensional simplices swallow small complexes; keep them rarer.
    if (k == max_dim + 1 && rng.below(3) != 0) k = 1 + rng.below(max_dim);
    std::vector<Vertex> pool(nv);
    std::iota(pool.begin(), pool.end(), Vertex{0});
    std::vector<Vertex> pick;
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t at = rng.below(pool.size());
      pick.push_back(pool[at]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
    }
    chosen.push_back(Simplex(pick));
    if (SimplicialComplex(chosen).size() > max_size) chosen.pop_back();
  }
  return SimplicialComplex(chosen);
}

namespace {

std::vector<std::vector<SimplexId>> cofacets(const SimplicialComplex& K) {
  std::vector<std::vector<SimplexId>> out(K.size());
  for (SimplexId s = 0; s < K.size(); ++s) {
    for (SimplexId f : K.facets(s)) out[f].push_back(s);
  }
  return out;
}

}  // namespace

ZigzagFiltration random_updown(const SimplicialComplex& K, SplitMix64& rng) {
  const auto cof = cofacets(K);
  std::vector<char> present(K.size(), 0);
  std::vector<FiltrationEvent> events;
  for (std::size_t step = 0; step < K.size(); ++step) {
    std::vector<SimplexId> ready;
    for (SimplexId s = 0; s < K.size(); ++s) {
      if (present[s]) continue;
      const auto fs = K.facets(s);
      if (std::all_of(fs.begin(), fs.end(), [&](SimplexId f) { return present[f] != 0; })) ready.push_back(s);
    }
    const SimplexId s = ready[rng.below(ready.size())];
    present[s] = 1;
    events.push_back(add(K.simplex(s)));
  }
  for (std::size_t step = 0; step < K.size(); ++step) {
    std::vector<SimplexId> ready;
    for (SimplexId s = 0; s < K.size(); ++s) {
      if (!present[s]) continue;
      if (std::none_of(cof[s].begin(), cof[s].end(), [&](SimplexId c) { return present[c] != 0; })) ready.push_back(s);
    }
    const SimplexId s = ready[rng.below(ready.size())];
    present[s] = 0;
    events.push_back(del(K.simplex(s)));
  }
  return ZigzagFiltration(std::move(events));
}

ZigzagFiltration random_height_updown(const SimplicialComplex& K, SplitMix64& rng) {
  std::size_t nv = 0;
  for (SimplexId s = 0; s < K.size(); ++s) nv = std::max<std::size_t>(nv, K.simplex(s).back() + 1);
  std::vector<double> values(nv);
  for (double& v : values) v = rng.uniform();
  return lower_upper_star_updown(K, height_ranks(values));
}

ZigzagFiltration random_standard_filtration(SplitMix64& rng, std::size_t max_size, std::size_t max_dim) {
  const SimplicialComplex K = random_complex(rng, max_size, max_dim);
  const ZigzagFiltration U = rng.below(2) ? random_updown(K, rng) : random_height_updown(K, rng);
  const std::size_t steps = rng.below(2 * U.size() + 1);
  return random_outward_walk(U, steps, rng.next()).filtration;
}

ZigzagFiltration window(const ZigzagFiltration& f, std::size_t begin, std::size_t end) {
  std::vector<Simplex> initial;
  for (SimplexId s : complex_at(f, begin)) initial.push_back(f.table()[s]);
  const auto all = f.events();
  std::vector<FiltrationEvent> events(all.begin() + static_cast<std::ptrdiff_t>(begin),
                                      all.begin() + static_cast<std::ptrdiff_t>(end));
  return ZigzagFiltration(std::move(events), std::move(initial));
}

std::vector<ZigzagFiltration> random_corpus(std::size_t count, std::uint64_t seed, bool with_windows) {
  SplitMix64 rng(seed);
  std::vector<ZigzagFiltration> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    ZigzagFiltration f = random_standard_filtration(rng);
    if (with_windows && k % 4 == 3 && f.size() >= 2) {
      const std::size_t begin = rng.below(f.size());
      const std::size_t end = begin + 1 + rng.below(f.size() - begin);
      f = window(f, begin, end);
    }
    out.push_back(std::move(f));
  }
  return out;
}

SimplicialComplex octahedron() {
  std::vector<Simplex> tris;
  for (Vertex a : {0u, 1u}) {
    for (Vertex b : {2u, 3u}) {
      for (Vertex c : {4u, 5u}) tris.push_back(Simplex({a, b, c}));
    }
  }
  return SimplicialComplex(tris);
}

SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex({Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{0, 2, 3}, Simplex{1, 2, 3}});
}

SimplicialComplex small_torus() { return mesh_complex(torus_mesh(3, 3)); }

ZigzagFiltration random_manifold_filtration(const SimplicialComplex& K, SplitMix64& rng, std::size_t switches) {
  const ZigzagFiltration U = random_height_updown(K, rng);
  return random_outward_walk(U, rng.below(switches + 1), rng.next()).filtration;
}

Barcode restrict_dim(const Barcode& b, std::size_t dim) { return b.of_dimension(dim); }

namespace {

// Number of connected components of the part of v's link on one side of
// its height.
std::size_t link_components(const Mesh& mesh, const std::vector<double>& h, std::size_t v, bool lower) {
  std::vector<std::size_t> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  auto side = [&](std::size_t w) { return lower ? h[w] < h[v] : h[w] > h[v]; };
  for (const auto& t : mesh.triangles) {
    const auto at = std::find(t.begin(), t.end(), v);
    if (at == t.end()) continue;
    std::vector<std::size_t> others;
    for (std::size_t w : t) {
      if (w != v) others.push_back(w);
    }
    for (std::size_t w : others) {
      if (side(w)) nodes.push_back(w);
    }
    if (side(others[0]) && side(others[1])) arcs.emplace_back(others[0], others[1]);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto index = [&](std::size_t w) {
    return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), w) - nodes.begin());
  };
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = nodes.size();
  for (const auto& [a, b] : arcs) {
    const std::size_t ra = find(index(a));
    const std::size_t rb = find(index(b));
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

}  // namespace

LevelsetZigzag torus_levelset(std::size_t rows, std::size_t cols) {
  const Mesh mesh = torus_mesh(rows, cols);
  std::vector<double> h(mesh.vertices.size());
  for (std::size_t v = 0; v < h.size(); ++v) {
    h[v] = mesh.vertices[v][0] + 1e-3 * mesh.vertices[v][1] + 1e-6 * mesh.vertices[v][2];
  }

  LevelsetZigzag out;
  out.torus = mesh_complex(mesh);
  for (std::size_t v = 0; v < h.size(); ++v) {
    const std::size_t lo = link_components(mesh, h, v, true);
    const std::size_t hi = link_components(mesh, h, v, false);
    if (lo != 1 || hi != 1) out.critical_values.push_back(h[v]);
  }
  std::sort(out.critical_values.begin(), out.critical_values.end());
  if (out.critical_values.size() != 4) {
    throw std::runtime_error("torus height has " + std::to_string(out.critical_values.size()) + " critical vertices");
  }

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> alpha{-inf};
  alpha.insert(alpha.end(), out.critical_values.begin(), out.critical_values.end());
  alpha.push_back(inf);
  for (std::size_t j = 0; j <= 8; ++j) {
    const double lo = alpha[j / 2];
    const double hi = alpha[j / 2 + 1 + (j % 2)];
    std::vector<Simplex> cx;
    for (SimplexId id = 0; id < out.torus.size(); ++id) {
      const Simplex& s = out.torus.simplex(id);
      if (std::all_of(s.vertices().begin(), s.vertices().end(), [&](Vertex v) { return lo < h[v] && h[v] < hi; })) {
        cx.push_back(s);
      }
    }
    std::sort(cx.begin(), cx.end(), dimension_then_lex_less);
    out.complexes.push_back(std::move(cx));
  }

  std::vector<FiltrationEvent> events;
  out.coarse_index.push_back(0);
  for (std::size_t j = 0; j < 8; ++j) {
    const auto& a = out.complexes[j];
    const auto& b = out.complexes[j + 1];
    if (j % 2 == 0) {
      for (const Simplex& s : b) {
        if (!std::binary_search(a.begin(), a.end(), s, dimension_then_lex_less)) events.push_back(add(s));
      }
      out.coarse_arrows.push_back(Arrow::Forward);
    } else {
      for (auto it = a.rbegin(); it != a.rend(); ++it) {
        if (!std::binary_search(b.begin(), b.end(), *it, dimension_then_lex_less)) events.push_back(del(*it));
      }
      out.coarse_arrows.push_back(Arrow::Backward);
    }
    out.coarse_index.push_back(events.size());
  }
  out.fine = ZigzagFiltration(std::move(events));
  return out;
}

}  // namespace zzp::testing
