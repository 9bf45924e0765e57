#include "zzpers/duality.hpp"

#include <vector>

#include "zzpers/error.hpp"

namespace zzp {

namespace {

Interval typed(std::size_t b, std::size_t d, std::size_t dim, std::span<const Arrow> arrows) {
  const auto [birth, death] = classify_ends(b, d, arrows);
  return make_interval(b, d, dim, birth, death);
}

}  // namespace

Barcode absolute_to_relative(const Barcode& absolute) {
  const std::vector<Arrow> arrows = arrows_from_barcode(absolute);
  return absolute_to_relative(absolute, arrows);
}

Barcode absolute_to_relative(const Barcode& absolute, std::span<const Arrow> arrows) {
  const std::size_t m = absolute.m;
  if (arrows.size() != m) {
    throw Error(ErrorCode::ContextMismatch, "barcode has m=" + std::to_string(m) + " but " +
                                                std::to_string(arrows.size()) + " arrows were given");
  }
  Barcode out{{}, m, BarcodeKind::Relative};
  for (const Interval& iv : absolute.intervals) {
    if (iv.b == 0 || iv.d >= m) {
      throw Error(ErrorCode::ContractViolation, iv.to_string() + " reaches an end; the filtration is not standardized");
    }
    const bool cb = iv.birth == EndType::Closed;
    const bool cd = iv.death == EndType::Closed;
    if (cb != cd) {
      out.intervals.push_back(typed(iv.b, iv.d, iv.dim + 1, arrows));
    } else if (cb) {
      out.intervals.push_back(typed(0, iv.b - 1, iv.dim, arrows));
      out.intervals.push_back(typed(iv.d + 1, m, iv.dim, arrows));
    } else {
      out.intervals.push_back(typed(0, iv.d, iv.dim + 1, arrows));
      out.intervals.push_back(typed(iv.b, m, iv.dim + 1, arrows));
    }
  }
  out.sort();
  return out;
}

Barcode recover_absolute_from_relative(const Barcode& relative_p, const ZigzagFiltration& f,
                                       const SimplicialComplex& K, std::size_t p) {
  const std::size_t m = f.size();
  if (relative_p.m != m) {
    throw Error(ErrorCode::ContextMismatch, "relative barcode has m=" + std::to_string(relative_p.m) +
                                                " but the filtration has " + std::to_string(m) + " events");
  }
  if (!is_standardized(f)) throw Error(ErrorCode::ContractViolation, "recovery needs a standardized filtration");
  if (p == 0) throw Error(ErrorCode::ContractViolation, "recovery needs p >= 1");

  const std::vector<Arrow> arrows = f.arrows();
  const ComponentLabeling components = connected_components(K);

  auto component_of = [&](std::size_t event, Direction expected) {
    const Simplex& s = f.simplex(event);
    if (f.direction(event) != expected || s.dimension() != p) {
      throw Error(ErrorCode::Inconsistency, "event " + std::to_string(event) + " on " + s.to_string() +
                                                " is not the expected " + (expected == Direction::Add ? "addition" : "deletion") +
                                                " of a " + std::to_string(p) + "-simplex");
    }
    const auto id = K.id(s);
    if (!id) throw Error(ErrorCode::Inconsistency, s.to_string() + " is not in the complex");
    return components[*id];
  };

  Barcode out{{}, m, BarcodeKind::Absolute};
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> head(components.count, none);  // i of [0,i] per component
  std::vector<std::size_t> tail(components.count, none);  // j of [j,m] per component

  for (const Interval& iv : relative_p.intervals) {
    if (iv.dim != p) {
      throw Error(ErrorCode::ContextMismatch, iv.to_string() + " is not of dimension " + std::to_string(p));
    }
    if (iv.b == 0 && iv.d == m) throw Error(ErrorCode::Inconsistency, iv.to_string() + " spans the whole filtration");
    if (iv.b == 0) {
      std::size_t& slot = head[component_of(iv.d, Direction::Add)];
      if (slot != none) throw Error(ErrorCode::Inconsistency, "two intervals start at 0 in one component");
      slot = iv.d;
    } else if (iv.d == m) {
      std::size_t& slot = tail[component_of(iv.b - 1, Direction::Del)];
      if (slot != none) throw Error(ErrorCode::Inconsistency, "two intervals end at m in one component");
      slot = iv.b;
    } else {
      Interval r = typed(iv.b, iv.d, p - 1, arrows);
      if (r.birth == r.death) {
        throw Error(ErrorCode::Inconsistency, "interior relative interval " + r.to_string() + " is not co or oc");
      }
      out.intervals.push_back(r);
    }
  }

  for (std::size_t c = 0; c < components.count; ++c) {
    // Components without p-simplices cannot occur in a closed p-manifold.
    if (head[c] == none || tail[c] == none) {
      throw Error(ErrorCode::Inconsistency, "component " + std::to_string(c) + " lacks its [0,i] or [j,m] interval");
    }
    const std::size_t i = head[c];
    const std::size_t j = tail[c];
    if (j == i + 1) throw Error(ErrorCode::Inconsistency, "intervals [0," + std::to_string(i) + "] and [" +
                                                              std::to_string(j) + ",m] leave nothing between them");
    out.intervals.push_back(i < j ? typed(i + 1, j - 1, p, arrows) : typed(j, i, p - 1, arrows));
  }
  out.sort();
  return out;
}

}  // namespace zzp
