#include "zzpers/extended.hpp"

#include <algorithm>

#include "zzpers/error.hpp"

namespace zzp {

namespace {

struct UpDownPositions {
  std::size_t n = 0;
  std::vector<std::size_t> add_pos;  // by simplex id
  std::vector<std::size_t> del_pos;
};

UpDownPositions check_updown(const ZigzagFiltration& U) {
  if (U.size() % 2 != 0 || !U.initial().empty()) {
    throw Error(ErrorCode::ContractViolation, "extended filtration needs a standardized up-down filtration");
  }
  UpDownPositions pos;
  pos.n = U.size() / 2;
  pos.add_pos.assign(U.table().size(), ExtendedFiltration::npos);
  pos.del_pos.assign(U.table().size(), ExtendedFiltration::npos);
  for (std::size_t i = 0; i < U.size(); ++i) {
    const bool first_half = i < pos.n;
    if ((U.direction(i) == Direction::Add) != first_half) {
      throw Error(ErrorCode::ContractViolation, "event " + std::to_string(i) + " breaks the up-down shape");
    }
    auto& slot = first_half ? pos.add_pos[U.simplex_id(i)] : pos.del_pos[U.simplex_id(i)];
    if (slot != ExtendedFiltration::npos) {
      throw Error(ErrorCode::ContractViolation, "simplex " + U.simplex(i).to_string() + " occurs twice");
    }
    slot = i;
  }
  for (std::size_t i = 0; i < pos.n; ++i) {
    const SimplexId s = U.simplex_id(i);
    if (pos.del_pos[s] == ExtendedFiltration::npos) {
      throw Error(ErrorCode::ContractViolation, "simplex " + U.simplex(i).to_string() + " is never deleted");
    }
    for (SimplexId t : U.table().facets(s)) {
      if (pos.add_pos[t] == ExtendedFiltration::npos || pos.add_pos[t] > i || pos.del_pos[t] < pos.del_pos[s]) {
        throw Error(ErrorCode::ContractViolation, "up-down filtration is not valid at " + U.simplex(i).to_string());
      }
    }
  }
  return pos;
}

}  // namespace

ExtendedFiltration build_extended(const ZigzagFiltration& U) {
  const UpDownPositions pos = check_updown(U);
  ExtendedFiltration out;
  out.n = pos.n;
  out.apex = U.table().max_vertex() ? *U.table().max_vertex() + 1 : 0;
  out.additions.reserve(2 * pos.n + 1);
  out.source_event.reserve(2 * pos.n + 1);

  out.additions.push_back(Simplex::from_sorted({out.apex}));
  out.source_event.push_back(ExtendedFiltration::npos);
  for (std::size_t i = 0; i < pos.n; ++i) {
    out.additions.push_back(U.simplex(i));
    out.source_event.push_back(i);
  }
  for (std::size_t i = 2 * pos.n; i-- > pos.n;) {
    out.additions.push_back(cone(U.simplex(i), out.apex));
    out.source_event.push_back(i);
  }
  return out;
}

BoundaryMatrix extended_boundary_matrix(const ZigzagFiltration& U) {
  const UpDownPositions pos = check_updown(U);
  const std::size_t n = pos.n;
  const SimplexTable& table = U.table();
  auto add_column = [&](SimplexId s) { return static_cast<std::uint32_t>(pos.add_pos[s] + 1); };
  auto cone_column = [&](SimplexId s) { return static_cast<std::uint32_t>(3 * n - pos.del_pos[s]); };

  BoundaryMatrix matrix;
  matrix.columns.reserve(2 * n + 1);
  matrix.dims.reserve(2 * n + 1);
  matrix.push({}, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const SimplexId s = U.simplex_id(i);
    Column col;
    for (SimplexId t : table.facets(s)) col.push_back(add_column(t));
    std::sort(col.begin(), col.end());
    matrix.push(std::move(col), table.dimension(s));
  }
  for (std::size_t i = 2 * n; i-- > n;) {
    const SimplexId s = U.simplex_id(i);
    Column col{add_column(s)};
    if (table.dimension(s) == 0) {
      col.push_back(0);
    } else {
      for (SimplexId t : table.facets(s)) col.push_back(cone_column(t));
    }
    std::sort(col.begin(), col.end());
    matrix.push(std::move(col), table.dimension(s) + 1);
  }
  return matrix;
}

std::string to_string(ExtendedLabel label) {
  switch (label) {
    case ExtendedLabel::Ord:
      return "Ord";
    case ExtendedLabel::Rel:
      return "Rel";
    case ExtendedLabel::Ext:
      return "Ext";
  }
  return "?";
}

Barcode ExtendedBarcode::barcode() const {
  Barcode out{{}, 2 * n, BarcodeKind::Absolute};
  const std::vector<Arrow> arrows(2 * n, Arrow::Forward);
  for (const ExtendedInterval& e : intervals) out.intervals.push_back(e.interval);
  assign_end_types(out, arrows);
  return out;
}

ExtendedBarcode extended_from_reduction(const ReductionState& state, std::size_t n) {
  if (state.low.size() != 2 * n + 1) {
    throw Error(ErrorCode::Inconsistency, "reduction has the wrong number of columns for n=" + std::to_string(n));
  }
  ExtendedBarcode out;
  out.n = n;
  out.apex_column = 0;
  if (state.essentials.size() != 1 || state.essentials.front() != 0) {
    throw Error(ErrorCode::Inconsistency, "coned filtration must have exactly one infinite interval (the apex); found " +
                                              std::to_string(state.essentials.size()));
  }
  out.intervals.reserve(state.pairs.size());
  for (const PersistencePair& p : state.pairs) {
    ExtendedInterval e;
    e.interval.b = p.birth;
    e.interval.d = p.death - 1;
    e.interval.dim = state.dims[p.birth];
    e.interval.birth = EndType::Closed;
    e.interval.death = EndType::Open;
    if (e.interval.d < n) {
      e.label = ExtendedLabel::Ord;
    } else if (e.interval.b > n) {
      e.label = ExtendedLabel::Rel;
    } else {
      e.label = ExtendedLabel::Ext;
    }
    out.intervals.push_back(e);
  }
  return out;
}

ExtendedBarcode extended_barcode(const ZigzagFiltration& U, ReductionStrategy strategy) {
  return extended_from_reduction(reduce_matrix(extended_boundary_matrix(U), strategy), U.size() / 2);
}

}  // namespace zzp
