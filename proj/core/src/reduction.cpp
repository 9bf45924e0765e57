#include "zzpers/reduction.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>

#include "zzpers/error.hpp"

namespace zzp {

namespace {

// dst <- dst xor src; both sorted.
void add_column(Column& dst, const Column& src, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(), std::back_inserter(scratch));
  dst.swap(scratch);
}

}  // namespace

ReductionState reduce_matrix(BoundaryMatrix matrix, ReductionStrategy strategy) {
  constexpr auto npos = ReductionState::npos;
  const std::size_t n = matrix.size();

  ReductionState state;
  state.columns = std::move(matrix.columns);
  state.dims = std::move(matrix.dims);
  state.low.assign(n, npos);

  std::vector<std::size_t> pivot_column(n, npos);  // row -> column having it as lowest one
  std::vector<char> cleared(n, 0);
  Column scratch;

  auto reduce_one = [&](std::size_t j) {
    Column& col = state.columns[j];
    while (!col.empty()) {
      const std::size_t piv = pivot_column[col.back()];
      if (piv == npos) break;
      add_column(col, state.columns[piv], scratch);
    }
    if (!col.empty()) {
      state.low[j] = col.back();
      pivot_column[col.back()] = j;
    }
  };

  if (strategy == ReductionStrategy::Standard) {
    for (std::size_t j = 0; j < n; ++j) reduce_one(j);
  } else {
    const std::size_t top = n ? *std::max_element(state.dims.begin(), state.dims.end()) : 0;
    std::vector<std::vector<std::size_t>> by_dim(top + 1);
    for (std::size_t j = 0; j < n; ++j) by_dim[state.dims[j]].push_back(j);
    for (std::size_t d = top + 1; d-- > 0;) {
      for (std::size_t j : by_dim[d]) {
        if (cleared[j]) continue;
        reduce_one(j);
        // The pivot row is a creator column; its reduced form is zero.
        if (state.low[j] != npos) {
          cleared[state.low[j]] = 1;
          state.columns[state.low[j]].clear();
        }
      }
    }
  }

  std::vector<char> paired(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (state.low[j] == npos) continue;
    state.pairs.push_back({state.low[j], j});
    paired[state.low[j]] = 1;
    paired[j] = 1;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!paired[j]) state.essentials.push_back(j);
  }
  return state;
}

BoundaryMatrix boundary_matrix(std::span<const Simplex> additions) {
  std::unordered_map<Simplex, std::uint32_t, SimplexHash> column_of;
  column_of.reserve(additions.size());
  BoundaryMatrix matrix;
  matrix.columns.reserve(additions.size());
  for (std::size_t j = 0; j < additions.size(); ++j) {
    const Simplex& s = additions[j];
    Column col;
    for (const Simplex& facet : boundary(s)) {
      auto it = column_of.find(facet);
      if (it == column_of.end()) {
        throw Error(ErrorCode::InvalidInput, "simplex " + s.to_string() + " added before its facet " + facet.to_string());
      }
      col.push_back(it->second);
    }
    if (!column_of.emplace(s, static_cast<std::uint32_t>(j)).second) {
      throw Error(ErrorCode::InvalidInput, "simplex " + s.to_string() + " added twice");
    }
    std::sort(col.begin(), col.end());
    matrix.push(std::move(col), s.dimension());
  }
  return matrix;
}

ReductionState reduce(const ZigzagFiltration& f, ReductionStrategy strategy) {
  if (!f.initial().empty()) throw Error(ErrorCode::InvalidInput, "standard persistence needs K_0 empty");
  std::vector<Simplex> additions;
  additions.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.direction(i) != Direction::Add) {
      throw Error(ErrorCode::InvalidInput, "standard persistence needs an add-only filtration (event " +
                                               std::to_string(i) + " is a deletion)");
    }
    additions.push_back(f.simplex(i));
  }
  return reduce_matrix(boundary_matrix(additions), strategy);
}

}  // namespace zzp
