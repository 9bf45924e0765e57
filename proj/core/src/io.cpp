#include "zzpers/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "zzpers/error.hpp"

namespace zzp {

Vertex VertexNames::intern(const std::string& name) {
  auto [it, inserted] = index_.try_emplace(name, static_cast<Vertex>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

void VertexNames::assign(Vertex v, const std::string& name) {
  if (index_.count(name)) throw Error(ErrorCode::InvalidInput, "vertex name '" + name + "' is already used");
  if (v >= names_.size()) names_.resize(v + 1);
  if (!names_[v].empty()) index_.erase(names_[v]);
  names_[v] = name;
  index_.emplace(name, v);
}

std::string VertexNames::name(Vertex v) const {
  if (v < names_.size() && !names_[v].empty()) return names_[v];
  return std::to_string(v);
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::InvalidInput, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line.substr(0, line.find('#')));
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

Simplex simplex_of(std::span<const std::string> toks, VertexNames& names, std::size_t line) {
  if (toks.empty()) fail(line, "empty simplex");
  std::vector<Vertex> vs;
  vs.reserve(toks.size());
  for (const std::string& t : toks) vs.push_back(names.intern(t));
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) fail(line, "repeated vertex in simplex");
  return Simplex::from_sorted(std::move(vs));
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  return in;
}

std::string simplex_line(const Simplex& s, const VertexNames& names) {
  std::string out;
  for (Vertex v : s.vertices()) {
    out += ' ';
    out += names.name(v);
  }
  return out;
}

}  // namespace

FiltrationFile parse_filtration(std::istream& in, VertexNames names) {
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::vector<Simplex> initial;
  std::vector<FiltrationEvent> events;
  std::vector<std::size_t> coarse_index{0};
  std::vector<Arrow> coarse_arrows;

  bool in_block = false;
  Direction block_dir = Direction::Add;
  std::size_t block_line = 0;
  std::vector<Simplex> block;

  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 2 || toks[0] != "zzfilt" || toks[1] != "v1") fail(lineno, "expected header 'zzfilt v1'");
      header = true;
      continue;
    }
    const std::string& op = toks[0];
    const std::span<const std::string> rest(toks.data() + 1, toks.size() - 1);
    if (in_block) {
      const std::string closing = block_dir == Direction::Add ? "end-a" : "end-d";
      if (op == closing) {
        if (toks.size() != 1) fail(lineno, "unexpected tokens after " + closing);
        if (block.empty()) fail(lineno, "empty block");
        std::sort(block.begin(), block.end(), dimension_then_lex_less);
        if (block_dir == Direction::Del) std::reverse(block.begin(), block.end());
        for (Simplex& s : block) events.push_back({block_dir, std::move(s)});
        block.clear();
        coarse_index.push_back(events.size());
        coarse_arrows.push_back(to_arrow(block_dir));
        in_block = false;
      } else if (op == "begin-a" || op == "begin-d" || op == "end-a" || op == "end-d") {
        fail(lineno, "unexpected '" + op + "' inside the block opened on line " + std::to_string(block_line));
      } else {
        block.push_back(simplex_of(toks, names, lineno));
      }
      continue;
    }
    if (op == "a" || op == "d") {
      const Direction dir = op == "a" ? Direction::Add : Direction::Del;
      events.push_back({dir, simplex_of(rest, names, lineno)});
      coarse_index.push_back(events.size());
      coarse_arrows.push_back(to_arrow(dir));
    } else if (op == "i") {
      if (!events.empty()) fail(lineno, "initial simplices must precede all events");
      initial.push_back(simplex_of(rest, names, lineno));
    } else if (op == "begin-a" || op == "begin-d") {
      if (toks.size() != 1) fail(lineno, "unexpected tokens after " + op);
      in_block = true;
      block_dir = op == "begin-a" ? Direction::Add : Direction::Del;
      block_line = lineno;
    } else {
      fail(lineno, "unknown directive '" + op + "'");
    }
  }
  if (!header) fail(lineno, "missing header 'zzfilt v1'");
  if (in_block) fail(block_line, "block is never closed");

  FiltrationFile out{ZigzagFiltration(std::move(events), std::move(initial)), std::move(names),
                     std::move(coarse_index), std::move(coarse_arrows)};
  return out;
}

FiltrationFile read_filtration_file(const std::string& path, VertexNames names) {
  auto in = open_file(path);
  return parse_filtration(in, std::move(names));
}

FiltrationFile parse_filtration_string(const std::string& text) {
  std::istringstream in(text);
  return parse_filtration(in);
}

void write_filtration(std::ostream& out, const ZigzagFiltration& f, const VertexNames& names) {
  out << "zzfilt v1\n";
  std::vector<Simplex> initial = f.initial_simplices();
  std::sort(initial.begin(), initial.end(), dimension_then_lex_less);
  for (const Simplex& s : initial) out << 'i' << simplex_line(s, names) << '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << (f.direction(i) == Direction::Add ? 'a' : 'd') << simplex_line(f.simplex(i), names) << '\n';
  }
}

std::string filtration_to_string(const ZigzagFiltration& f, const VertexNames& names) {
  std::ostringstream out;
  write_filtration(out, f, names);
  return out.str();
}

Barcode coarsen(const Barcode& fine, const FiltrationFile& file) {
  return coarsen(fine, file.coarse_index, file.coarse_arrows);
}

Barcode coarsen(const Barcode& fine, std::span<const std::size_t> idx, std::span<const Arrow> coarse_arrows) {
  if (idx.size() != coarse_arrows.size() + 1) {
    throw Error(ErrorCode::ContextMismatch, "coarse index and arrows disagree in length");
  }
  Barcode out{{}, coarse_arrows.size(), fine.kind};
  for (const Interval& iv : fine.intervals) {
    auto lo = std::lower_bound(idx.begin(), idx.end(), iv.b);
    auto hi = std::upper_bound(idx.begin(), idx.end(), iv.d);
    if (lo >= hi) continue;
    const std::size_t b = static_cast<std::size_t>(lo - idx.begin());
    const std::size_t d = static_cast<std::size_t>(hi - idx.begin()) - 1;
    const auto [birth, death] = classify_ends(b, d, coarse_arrows);
    out.intervals.push_back(make_interval(b, d, iv.dim, birth, death));
  }
  out.sort();
  return out;
}

Barcode parse_barcode(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  Barcode out;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 4 || toks[0] != "zzbar" || toks[1] != "v1" || toks[2].rfind("m=", 0) != 0 ||
          toks[3].rfind("kind=", 0) != 0) {
        fail(lineno, "expected header 'zzbar v1 m=<m> kind=<abs|rel>'");
      }
      try {
        std::size_t used = 0;
        out.m = std::stoull(toks[2].substr(2), &used);
        if (used != toks[2].size() - 2) throw std::invalid_argument("m");
      } catch (const std::exception&) {
        fail(lineno, "bad m in header");
      }
      const std::string kind = toks[3].substr(5);
      if (kind == "abs") {
        out.kind = BarcodeKind::Absolute;
      } else if (kind == "rel") {
        out.kind = BarcodeKind::Relative;
      } else {
        fail(lineno, "kind must be abs or rel");
      }
      header = true;
      continue;
    }
    if (toks.size() != 4 || toks[3].size() != 2) fail(lineno, "expected 'dim b d <c|o><c|o>'");
    std::size_t vals[3];
    for (int k = 0; k < 3; ++k) {
      try {
        std::size_t used = 0;
        vals[k] = std::stoull(toks[k], &used);
        if (used != toks[k].size() || toks[k][0] == '-') throw std::invalid_argument("n");
      } catch (const std::exception&) {
        fail(lineno, "bad number '" + toks[k] + "'");
      }
    }
    auto end = [&](char c) {
      if (c == 'c') return EndType::Closed;
      if (c != 'o') fail(lineno, "end type must be c or o");
      return EndType::Open;
    };
    if (vals[1] > vals[2] || vals[2] > out.m) fail(lineno, "interval outside 0..m");
    out.intervals.push_back(make_interval(vals[1], vals[2], vals[0], end(toks[3][0]), end(toks[3][1])));
  }
  if (!header) fail(lineno, "missing header 'zzbar v1 m=<m> kind=<abs|rel>'");
  out.sort();
  return out;
}

Barcode read_barcode_file(const std::string& path) {
  auto in = open_file(path);
  return parse_barcode(in);
}

void write_barcode(std::ostream& out, const Barcode& barcode) {
  out << "zzbar v1 m=" << barcode.m << " kind=" << (barcode.kind == BarcodeKind::Absolute ? "abs" : "rel") << '\n';
  for (const Interval& iv : barcode.sorted().intervals) {
    out << iv.dim << ' ' << iv.b << ' ' << iv.d << ' ' << iv.type_code() << '\n';
  }
}

std::string barcode_to_string(const Barcode& barcode) {
  std::ostringstream out;
  write_barcode(out, barcode);
  return out.str();
}

SimplicialComplex parse_complex(std::istream& in, VertexNames& names) {
  std::string first;
  std::size_t lineno = 0;
  while (std::getline(in, first)) {
    ++lineno;
    if (!tokens_of(first).empty()) break;
  }
  const auto head = tokens_of(first);
  if (!head.empty() && head[0].rfind("OFF", 0) == 0) {
    std::stringstream rest;
    rest << first << '\n' << in.rdbuf();
    const Mesh mesh = parse_off(rest);
    std::vector<Simplex> simplices;
    std::vector<Vertex> ids(mesh.vertices.size());
    for (std::size_t v = 0; v < ids.size(); ++v) ids[v] = names.intern(std::to_string(v));
    for (std::size_t v = 0; v < ids.size(); ++v) simplices.push_back(Simplex{ids[v]});
    for (const auto& t : mesh.triangles) simplices.push_back(Simplex({ids[t[0]], ids[t[1]], ids[t[2]]}));
    return SimplicialComplex(simplices);
  }
  if (head.size() != 2 || head[0] != "zzcplx" || head[1] != "v1") fail(lineno, "expected 'zzcplx v1' or an OFF mesh");
  std::vector<Simplex> simplices;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto toks = tokens_of(line);
    if (!toks.empty()) simplices.push_back(simplex_of(toks, names, lineno));
  }
  return SimplicialComplex(simplices);
}

SimplicialComplex read_complex_file(const std::string& path, VertexNames& names) {
  auto in = open_file(path);
  return parse_complex(in, names);
}

Mesh parse_off(std::istream& in) {
  // Read as a token stream: OFF allows comments and arbitrary line breaks.
  // Per-face colours are not supported.
  std::vector<std::string> toks;
  for (std::string line; std::getline(in, line);) {
    for (auto& t : tokens_of(line)) toks.push_back(std::move(t));
  }
  std::size_t pos = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (pos >= toks.size()) throw Error(ErrorCode::InvalidInput, std::string("OFF: missing ") + what);
    return toks[pos++];
  };
  auto integer = [&](const char* what) {
    const std::string& t = next(what);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(t, &used);
      if (used != t.size() || v < 0) throw std::invalid_argument(t);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, std::string("OFF: bad ") + what + " '" + t + "'");
    }
  };
  auto real = [&]() {
    const std::string& t = next("coordinate");
    try {
      std::size_t used = 0;
      const double v = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "OFF: bad coordinate '" + t + "'");
    }
  };

  const std::string& magic = next("header");
  if (magic != "OFF") {
    throw Error(ErrorCode::InvalidInput, "OFF: expected 'OFF' header, got '" + magic + "'");
  }
  Mesh mesh;
  const std::size_t nv = integer("vertex count");
  const std::size_t nf = integer("face count");
  integer("edge count");
  mesh.vertices.resize(nv);
  for (auto& p : mesh.vertices) {
    for (double& c : p) c = real();
  }
  for (std::size_t f = 0; f < nf; ++f) {
    const std::size_t k = integer("face size");
    if (k < 3) throw Error(ErrorCode::InvalidInput, "OFF: face " + std::to_string(f) + " has fewer than 3 vertices");
    std::vector<std::size_t> poly(k);
    for (auto& v : poly) {
      v = integer("face vertex");
      if (v >= nv) throw Error(ErrorCode::InvalidInput, "OFF: face " + std::to_string(f) + " uses vertex " +
                                                            std::to_string(v) + " of " + std::to_string(nv));
    }
    for (std::size_t i = 1; i + 1 < k; ++i) mesh.triangles.push_back({poly[0], poly[i], poly[i + 1]});
  }
  for (const auto& t : mesh.triangles) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(ErrorCode::InvalidInput, "OFF: degenerate face with a repeated vertex");
    }
  }
  return mesh;
}

Mesh read_off_file(const std::string& path) {
  auto in = open_file(path);
  return parse_off(in);
}

void write_off(std::ostream& out, const Mesh& mesh) {
  out.precision(17);
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.triangles.size() << " 0\n";
  for (const auto& p : mesh.vertices) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

}  // namespace zzp
