#include "zzpers/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zzpers/error.hpp"

namespace zzp {

namespace {

double distance(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

}  // namespace

SimplicialComplex mesh_complex(const Mesh& mesh, std::optional<double> rips_radius) {
  const std::size_t n = mesh.vertices.size();
  std::vector<Simplex> simplices;
  simplices.reserve(n + mesh.triangles.size());
  for (std::size_t v = 0; v < n; ++v) simplices.push_back(Simplex::from_sorted({static_cast<Vertex>(v)}));
  for (const auto& t : mesh.triangles) {
    simplices.push_back(Simplex({static_cast<Vertex>(t[0]), static_cast<Vertex>(t[1]), static_cast<Vertex>(t[2])}));
  }
  if (rips_radius) {
    const double r = *rips_radius;
    std::vector<std::vector<Vertex>> near(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (distance(mesh.vertices[a], mesh.vertices[b]) <= r) {
          near[a].push_back(static_cast<Vertex>(b));
          simplices.push_back(Simplex::from_sorted({static_cast<Vertex>(a), static_cast<Vertex>(b)}));
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t i = 0; i < near[a].size(); ++i) {
        for (std::size_t j = i + 1; j < near[a].size(); ++j) {
          const Vertex b = near[a][i];
          const Vertex c = near[a][j];
          if (std::binary_search(near[b].begin(), near[b].end(), c)) {
            simplices.push_back(Simplex::from_sorted({static_cast<Vertex>(a), b, c}));
          }
        }
      }
    }
  }
  return SimplicialComplex(simplices);
}

std::vector<std::size_t> height_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<std::size_t> rank(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

ZigzagFiltration lower_upper_star_updown(const SimplicialComplex& K, std::span<const std::size_t> heights) {
  struct Keyed {
    std::size_t hi;
    std::size_t lo;
    SimplexId id;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(K.size());
  for (SimplexId id = 0; id < K.size(); ++id) {
    const Simplex& s = K.simplex(id);
    std::size_t hi = 0;
    std::size_t lo = static_cast<std::size_t>(-1);
    for (Vertex v : s.vertices()) {
      if (v >= heights.size()) throw Error(ErrorCode::InvalidInput, "no height for vertex " + std::to_string(v));
      hi = std::max(hi, heights[v]);
      lo = std::min(lo, heights[v]);
    }
    keyed.push_back({hi, lo, id});
  }
  auto dim_lex = [&](SimplexId a, SimplexId b) { return dimension_then_lex_less(K.simplex(a), K.simplex(b)); };

  std::vector<FiltrationEvent> events;
  events.reserve(2 * K.size());
  std::sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
    if (a.hi != b.hi) return a.hi < b.hi;
    return dim_lex(a.id, b.id);
  });
  for (const Keyed& k : keyed) events.push_back(add(K.simplex(k.id)));
  std::sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return dim_lex(b.id, a.id);
  });
  for (const Keyed& k : keyed) events.push_back(del(K.simplex(k.id)));
  return ZigzagFiltration(std::move(events));
}

GeneratedFiltration generate(const Mesh& mesh, const GenerateOptions& options) {
  if (options.axis < 0 || options.axis > 2) throw Error(ErrorCode::InvalidInput, "axis must be x, y or z");
  const SimplicialComplex K = mesh_complex(mesh, options.rips_radius);
  std::vector<double> coord(mesh.vertices.size());
  for (std::size_t v = 0; v < coord.size(); ++v) coord[v] = mesh.vertices[v][options.axis];
  const ZigzagFiltration updown = lower_upper_star_updown(K, height_ranks(coord));
  if (options.switches == 0) return {updown, 0};
  WalkResult walk = random_outward_walk(updown, options.switches, options.seed);
  return {std::move(walk.filtration), walk.steps_taken};
}

Mesh torus_mesh(std::size_t rows, std::size_t cols, double major_radius, double minor_radius) {
  if (rows < 3 || cols < 3) throw Error(ErrorCode::InvalidInput, "torus grid needs at least 3 x 3 vertices");
  Mesh mesh;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const double u = two_pi * static_cast<double>(r) / static_cast<double>(rows);
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = two_pi * static_cast<double>(c) / static_cast<double>(cols);
      const double ring = major_radius + minor_radius * std::cos(v);
      mesh.vertices.push_back({ring * std::cos(u), ring * std::sin(u), minor_radius * std::sin(v)});
    }
  }
  auto at = [&](std::size_t r, std::size_t c) { return (r % rows) * cols + (c % cols); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      mesh.triangles.push_back({at(r, c), at(r + 1, c), at(r + 1, c + 1)});
      mesh.triangles.push_back({at(r, c), at(r + 1, c + 1), at(r, c + 1)});
    }
  }
  return mesh;
}

}  // namespace zzp
