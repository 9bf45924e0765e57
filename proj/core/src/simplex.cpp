#include "zzpers/simplex.hpp"

#include <algorithm>

#include "zzpers/error.hpp"

namespace zzp {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorCode::InvalidInput, "simplex has a repeated vertex");
  }
}

Simplex Simplex::from_sorted(std::vector<Vertex> vertices) {
  Simplex s;
  s.vertices_ = std::move(vertices);
  return s;
}

bool Simplex::contains(Vertex v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Simplex Simplex::without(Vertex v) const {
  std::vector<Vertex> rest;
  rest.reserve(vertices_.size() - 1);
  for (Vertex u : vertices_) {
    if (u != v) rest.push_back(u);
  }
  return from_sorted(std::move(rest));
}

std::string Simplex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vertices_[i]);
  }
  out += "}";
  return out;
}

std::vector<Simplex> boundary(const Simplex& s) {
  std::vector<Simplex> facets;
  if (s.size() <= 1) return facets;
  facets.reserve(s.size());
  for (Vertex v : s.vertices()) facets.push_back(s.without(v));
  return facets;
}

Simplex cone(const Simplex& s, Vertex apex) {
  if (s.contains(apex)) {
    throw Error(ErrorCode::InvalidCone,
                "cone apex " + std::to_string(apex) + " already in simplex " + s.to_string());
  }
  std::vector<Vertex> v(s.vertices().begin(), s.vertices().end());
  v.insert(std::upper_bound(v.begin(), v.end(), apex), apex);
  return Simplex::from_sorted(std::move(v));
}

bool dimension_then_lex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  // 64-bit FNV-style mix over the vertex ids.
  std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
  for (Vertex v : s.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace zzp
