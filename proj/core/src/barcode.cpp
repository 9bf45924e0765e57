#include "zzpers/barcode.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "zzpers/error.hpp"

namespace zzp {

std::string Interval::type_code() const {
  std::string s;
  s += birth == EndType::Closed ? 'c' : 'o';
  s += death == EndType::Closed ? 'c' : 'o';
  return s;
}

std::string Interval::to_string() const {
  return type_code() + "[" + std::to_string(b) + "," + std::to_string(d) + "]_" + std::to_string(dim);
}

Interval make_interval(std::size_t b, std::size_t d, std::size_t dim, EndType birth, EndType death) {
  return Interval{b, d, dim, birth, death};
}

void Barcode::sort() {
  std::sort(intervals.begin(), intervals.end(), [](const Interval& x, const Interval& y) {
    return std::tie(x.dim, x.b, x.d, x.birth, x.death) < std::tie(y.dim, y.b, y.d, y.birth, y.death);
  });
}

Barcode Barcode::sorted() const {
  Barcode out = *this;
  out.sort();
  return out;
}

Barcode Barcode::of_dimension(std::size_t dim) const {
  Barcode out{{}, m, kind};
  for (const Interval& iv : intervals) {
    if (iv.dim == dim) out.intervals.push_back(iv);
  }
  return out;
}

std::size_t Barcode::rank_at(std::size_t i, std::size_t dim) const {
  return static_cast<std::size_t>(std::count_if(intervals.begin(), intervals.end(), [&](const Interval& iv) {
    return iv.dim == dim && iv.contains(i);
  }));
}

std::pair<EndType, EndType> classify_ends(std::size_t b, std::size_t d, std::span<const Arrow> arrows) {
  const std::size_t m = arrows.size();
  if (b > d || d > m) {
    throw Error(ErrorCode::OutOfRange, "interval [" + std::to_string(b) + "," + std::to_string(d) +
                                           "] outside 0.." + std::to_string(m));
  }
  const EndType birth = (b == 0 || arrows[b - 1] == Arrow::Forward) ? EndType::Closed : EndType::Open;
  const EndType death = (d == m || arrows[d] == Arrow::Backward) ? EndType::Closed : EndType::Open;
  return {birth, death};
}

void assign_end_types(Barcode& barcode, std::span<const Arrow> arrows) {
  for (Interval& iv : barcode.intervals) {
    std::tie(iv.birth, iv.death) = classify_ends(iv.b, iv.d, arrows);
  }
}

std::vector<Arrow> arrows_from_barcode(const Barcode& barcode) {
  std::vector<std::optional<Arrow>> known(barcode.m);
  auto record = [&](std::size_t k, Arrow a) {
    if (known[k] && *known[k] != a) {
      throw Error(ErrorCode::Inconsistency, "barcode end types disagree on arrow " + std::to_string(k));
    }
    known[k] = a;
  };
  for (const Interval& iv : barcode.intervals) {
    if (iv.b > iv.d || iv.d > barcode.m) {
      throw Error(ErrorCode::OutOfRange, "interval " + iv.to_string() + " outside 0.." + std::to_string(barcode.m));
    }
    if (iv.b > 0) record(iv.b - 1, iv.birth == EndType::Closed ? Arrow::Forward : Arrow::Backward);
    if (iv.d < barcode.m) record(iv.d, iv.death == EndType::Closed ? Arrow::Backward : Arrow::Forward);
  }
  std::vector<Arrow> arrows;
  arrows.reserve(barcode.m);
  for (std::size_t k = 0; k < barcode.m; ++k) {
    if (!known[k]) {
      throw Error(ErrorCode::Inconsistency,
                  "arrow " + std::to_string(k) + " is neither a birth nor a death arrow of the barcode");
    }
    arrows.push_back(*known[k]);
  }
  return arrows;
}

std::string BarcodeComparison::to_string() const {
  if (equal) return "equal";
  std::string out;
  for (const Interval& iv : only_in_first) out += " -" + iv.to_string();
  for (const Interval& iv : only_in_second) out += " +" + iv.to_string();
  return out.substr(1);
}

BarcodeComparison multiset_equal(const Barcode& a, const Barcode& b) {
  if (a.m != b.m || a.kind != b.kind) {
    throw Error(ErrorCode::ContextMismatch, "barcodes have different module length or kind");
  }
  std::vector<Interval> x = a.intervals;
  std::vector<Interval> y = b.intervals;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());

  BarcodeComparison out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out.only_in_first));
  std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(out.only_in_second));
  out.equal = out.only_in_first.empty() && out.only_in_second.empty();
  return out;
}

}  // namespace zzp
