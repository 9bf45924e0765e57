#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace zzp {

using Vertex = std::uint32_t;

/// A simplex as a strictly increasing list of vertex ids.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts and checks the vertices; duplicates throw InvalidInput.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  /// Trusted constructor: the caller guarantees strictly increasing input.
  static Simplex from_sorted(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  /// |vertices| - 1. Undefined for the empty simplex.
  std::size_t dimension() const noexcept { return vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  bool contains(Vertex v) const noexcept;

  /// The simplex with `v` removed. Precondition: contains(v).
  Simplex without(Vertex v) const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

  std::string to_string() const;

 private:
  std::vector<Vertex> vertices_;
};

/// All codimension-one faces, in order of the removed vertex. Empty for a
/// vertex.
std::vector<Simplex> boundary(const Simplex& s);

/// s ∪ {apex}. Throws InvalidCone if apex already belongs to s.
Simplex cone(const Simplex& s, Vertex apex);

/// Orders by dimension first, then lexicographically; any filtration that
/// adds simplices in this order respects faces.
bool dimension_then_lex_less(const Simplex& a, const Simplex& b);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace zzp
