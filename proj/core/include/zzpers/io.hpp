#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "zzpers/barcode.hpp"
#include "zzpers/complex.hpp"
#include "zzpers/filtration.hpp"

namespace zzp {

/// Vertex names in files are arbitrary tokens, interned to ids in order of
/// first appearance. Unnamed ids print as decimal numbers.
class VertexNames {
 public:
  Vertex intern(const std::string& name);
  /// Binds `name` to a specific id (used for the cone apex).
  void assign(Vertex v, const std::string& name);
  std::string name(Vertex v) const;
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
};

inline constexpr const char* kApexName = "_omega";

/// Parsed filtration file. A plain `a`/`d` line is one coarse step; a
/// begin-a/end-a (or begin-d/end-d) block is one coarse step made of several
/// events, ordered by (dimension, lexicographic), reversed for deletions.
struct FiltrationFile {
  ZigzagFiltration filtration;
  VertexNames names;
  /// coarse_index[c] is the fine complex index of coarse complex c.
  std::vector<std::size_t> coarse_index;
  std::vector<Arrow> coarse_arrows;

  bool is_coarse() const noexcept { return coarse_index.size() != filtration.size() + 1; }
};

/// Format:
///   zzfilt v1
///   i v1 ... vk      simplex of K_0 (closure is not taken)
///   a v1 ... vk      addition
///   d v1 ... vk      deletion
///   begin-a | begin-d ... end-a | end-d   blocks of bare simplex lines
/// `#` starts a comment. Throws InvalidInput with the line number.
FiltrationFile parse_filtration(std::istream& in, VertexNames names = {});
FiltrationFile read_filtration_file(const std::string& path, VertexNames names = {});
FiltrationFile parse_filtration_string(const std::string& text);

void write_filtration(std::ostream& out, const ZigzagFiltration& f, const VertexNames& names = {});
std::string filtration_to_string(const ZigzagFiltration& f, const VertexNames& names = {});

/// Restriction of a fine barcode to the coarse complexes of a file, with end
/// types from the coarse arrows.
Barcode coarsen(const Barcode& fine, const FiltrationFile& file);
Barcode coarsen(const Barcode& fine, std::span<const std::size_t> coarse_index, std::span<const Arrow> coarse_arrows);

/// zzbar v1 m=<m> kind=<abs|rel>, then `dim b d <c|o><c|o>` lines, sorted.
Barcode parse_barcode(std::istream& in);
Barcode read_barcode_file(const std::string& path);
void write_barcode(std::ostream& out, const Barcode& barcode);
std::string barcode_to_string(const Barcode& barcode);

/// Complex files: `zzcplx v1` followed by one simplex per line (closure is
/// taken), or an OFF mesh whose vertices are named by their index.
SimplicialComplex parse_complex(std::istream& in, VertexNames& names);
SimplicialComplex read_complex_file(const std::string& path, VertexNames& names);

struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;  // polygons are fan-triangulated
};

Mesh parse_off(std::istream& in);
Mesh read_off_file(const std::string& path);
void write_off(std::ostream& out, const Mesh& mesh);

}  // namespace zzp
