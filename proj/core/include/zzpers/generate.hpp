#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zzpers/complex.hpp"
#include "zzpers/filtration.hpp"
#include "zzpers/io.hpp"

namespace zzp {

/// Vertex i of the mesh is vertex id i. With a radius, the Rips 2-skeleton
/// of the vertex positions at that radius is added to the triangles.
SimplicialComplex mesh_complex(const Mesh& mesh, std::optional<double> rips_radius = std::nullopt);

/// Ranks of the values, ties broken by index, so every vertex gets a
/// distinct height.
std::vector<std::size_t> height_ranks(std::span<const double> values);

/// Up-down filtration of K: additions in lower-star order of the heights
/// (key: highest vertex, dimension, lexicographic), then deletions in
/// increasing order of the lowest vertex (cofaces first). `heights` is
/// indexed by vertex id and must be distinct.
ZigzagFiltration lower_upper_star_updown(const SimplicialComplex& K, std::span<const std::size_t> heights);

struct GenerateOptions {
  int axis = 2;  // 0, 1, 2 for x, y, z
  std::size_t switches = 0;
  std::uint64_t seed = 0;
  std::optional<double> rips_radius;
};

struct GeneratedFiltration {
  ZigzagFiltration filtration;
  std::size_t switches_applied = 0;
};

/// Height along the axis, up-down filtration of the mesh, then a random
/// outward walk. Deterministic in the options.
GeneratedFiltration generate(const Mesh& mesh, const GenerateOptions& options);

/// A triangulated torus in R^3: a rows x cols grid with wrap-around, each
/// square split along its diagonal. Needs rows, cols >= 3.
Mesh torus_mesh(std::size_t rows, std::size_t cols, double major_radius = 2.0, double minor_radius = 1.0);

}  // namespace zzp
