#include "zzpers/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "zzpers/error.hpp"

namespace zzp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const Interval& iv) { return iv.to_string(); }

}  // namespace

Interval ext_to_updown(const ExtendedInterval& iv, std::size_t n) {
  const Interval& e = iv.interval;
  const bool ok = (iv.label == ExtendedLabel::Ord && e.d < n) ||
                  (iv.label == ExtendedLabel::Rel && e.b > n && e.dim > 0) ||
                  (iv.label == ExtendedLabel::Ext && e.b <= n && n <= e.d);
  if (!ok || e.b > e.d || e.d > 2 * n) {
    throw Error(ErrorCode::LabelMismatch, to_string(iv.label) + " label on " + describe(e) + " with n=" +
                                              std::to_string(n));
  }
  switch (iv.label) {
    case ExtendedLabel::Ord:
      return make_interval(e.b, e.d, e.dim, EndType::Closed, EndType::Open);
    case ExtendedLabel::Rel:
      return make_interval(3 * n - e.d, 3 * n - e.b, e.dim - 1, EndType::Open, EndType::Closed);
    case ExtendedLabel::Ext:
      break;
  }
  return make_interval(e.b, 3 * n - e.d - 1, e.dim, EndType::Closed, EndType::Closed);
}

Interval remap_by_events(const Interval& iv, std::size_t creator, std::size_t destroyer) {
  const bool closed_birth = iv.birth == EndType::Closed;
  const bool closed_death = iv.death == EndType::Closed;
  if (!closed_birth && !closed_death) {
    throw Error(ErrorCode::ContractViolation, "up-down barcode cannot contain " + describe(iv));
  }
  if (closed_birth != closed_death) {
    return make_interval(creator + 1, destroyer, iv.dim, iv.birth, iv.death);
  }
  if (creator < destroyer) return make_interval(creator + 1, destroyer, iv.dim, EndType::Closed, EndType::Closed);
  if (creator == destroyer || iv.dim == 0) {
    // Impossible for a non-repetitive filtration: an addition and a deletion
    // never share a position, and a dimension-0 class cannot shift down.
    throw Error(ErrorCode::Inconsistency, "closed-closed " + describe(iv) + " with creator " +
                                              std::to_string(creator) + " and destroyer " + std::to_string(destroyer));
  }
  return make_interval(destroyer + 1, creator, iv.dim - 1, EndType::Open, EndType::Open);
}

Interval updown_to_f(const Interval& iv, const EventIndexMap& id_f, const ZigzagFiltration& U) {
  if (iv.b == 0 || iv.d >= U.size()) {
    throw Error(ErrorCode::ContractViolation, describe(iv) + " touches an end of the up-down filtration");
  }
  const IdEvent creator = U.id_events()[iv.b - 1];
  const IdEvent destroyer = U.id_events()[iv.d];
  const std::size_t c = id_f.of(creator);
  const std::size_t d = id_f.of(destroyer);
  if (c == EventIndexMap::npos || d == EventIndexMap::npos) {
    throw Error(ErrorCode::ContractViolation, "event index map does not cover " + describe(iv));
  }
  return remap_by_events(iv, c, d);
}

PipelineResult zigzag_pipeline(const ZigzagFiltration& f, PhaseTimings* timings, ReductionStrategy strategy) {
  PhaseTimings local;
  PhaseTimings& t = timings ? *timings : local;
  t = {};

  auto start = Clock::now();
  require_valid(f);
  if (auto rep = find_repetition(f)) {
    throw Error(ErrorCode::NotNonRepetitive, "simplex " + rep->simplex.to_string() + " deleted at event " +
                                                 std::to_string(rep->deleted_at) + " and added again at event " +
                                                 std::to_string(rep->added_again_at));
  }
  t.validate = seconds_since(start);

  start = Clock::now();
  Standardized std_form = standardize(f);
  const ZigzagFiltration& fs = std_form.filtration;
  UpDown ud = to_updown(fs);
  t.convert = seconds_since(start);

  start = Clock::now();
  const std::size_t n = ud.filtration.size() / 2;
  ReductionState state = reduce_matrix(extended_boundary_matrix(ud.filtration), strategy);
  t.reduce = seconds_since(start);

  start = Clock::now();
  PipelineResult out;
  out.prefix = std_form.prefix;
  out.suffix = std_form.suffix;
  out.standardized = Barcode{{}, fs.size(), BarcodeKind::Absolute};
  out.barcode = Barcode{{}, f.size(), BarcodeKind::Absolute};

  const ExtendedBarcode ext = extended_from_reduction(state, n);
  out.standardized.intervals.reserve(ext.intervals.size());
  for (const ExtendedInterval& e : ext.intervals) {
    out.standardized.intervals.push_back(updown_to_f(ext_to_updown(e, n), ud.index, ud.filtration));
  }

  // The input's K_i is the standardized K_{i+prefix}; its module is the
  // restriction to that window.
  const std::size_t lo = out.prefix;
  const std::size_t hi = out.prefix + f.size();
  const std::vector<Arrow> arrows = f.arrows();
  for (const Interval& iv : out.standardized.intervals) {
    if (iv.d < lo || iv.b > hi) {
      out.synthetic.push_back(iv);
      continue;
    }
    const std::size_t b = std::max(iv.b, lo) - lo;
    const std::size_t d = std::min(iv.d, hi) - lo;
    const auto [birth, death] = classify_ends(b, d, arrows);
    out.barcode.intervals.push_back(make_interval(b, d, iv.dim, birth, death));
  }
  out.standardized.sort();
  out.barcode.sort();
  std::sort(out.synthetic.begin(), out.synthetic.end());
  t.remap = seconds_since(start);
  return out;
}

Barcode zigzag_barcode(const ZigzagFiltration& f) { return zigzag_pipeline(f).barcode; }

Interval diamond_image(const Interval& iv, std::size_t j) {
  Interval out = iv;
  if (j >= 1 && iv.b <= j - 1 && iv.d == j - 1) {
    out.d = j;
  } else if (j >= 1 && iv.b <= j - 1 && iv.d == j) {
    out.d = j - 1;
  } else if (iv.b == j && iv.d >= j + 1) {
    out.b = j + 1;
  } else if (iv.b == j + 1 && iv.d >= j + 1) {
    out.b = j;
  } else if (iv.b == j && iv.d == j) {
    if (iv.dim == 0) throw Error(ErrorCode::InvalidDiamond, "[j,j] interval of dimension 0 at j=" + std::to_string(j));
    out.dim = iv.dim - 1;
  }
  return out;
}

bool check_diamond(const Barcode& upper, const Barcode& lower, std::size_t j) {
  if (upper.m != lower.m || j == 0 || j >= upper.m) return false;
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::vector<Key> mapped;
  std::vector<Key> target;
  mapped.reserve(upper.size());
  target.reserve(lower.size());
  for (const Interval& iv : upper.intervals) {
    if (iv.b == j && iv.d == j && iv.dim == 0) return false;
    const Interval img = diamond_image(iv, j);
    mapped.emplace_back(img.dim, img.b, img.d);
  }
  for (const Interval& iv : lower.intervals) target.emplace_back(iv.dim, iv.b, iv.d);
  std::sort(mapped.begin(), mapped.end());
  std::sort(target.begin(), target.end());
  return mapped == target;
}

}  // namespace zzp
