#include "zzpers/oracle/decompose.hpp"

#include "zzpers/error.hpp"

namespace zzp::oracle {

namespace {

constexpr std::size_t none = static_cast<std::size_t>(-1);

BitVector slice(const BitVector& v, std::size_t from, std::size_t count) {
  BitVector out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = v[from + k];
  return out;
}

BitVector concat(const BitVector& a, const BitVector& b) {
  BitVector out(a.size() + b.size());
  for (std::size_t k = a.find_first(); k != BitVector::npos; k = a.find_next(k)) out.set(k);
  for (std::size_t k = b.find_first(); k != BitVector::npos; k = b.find_next(k)) out.set(a.size() + k);
  return out;
}

std::vector<BitVector> echelon_vectors(const std::vector<BitVector>& vectors, std::size_t dim) {
  EchelonBasis basis(dim);
  std::vector<BitVector> out;
  for (const BitVector& v : vectors) {
    if (basis.insert(v)) out.push_back(v);
  }
  return out;
}

// Quotient of a space by a subspace, as a projection onto the coordinates
// that are not pivots of the subspace's echelon form.
class Quotient {
 public:
  Quotient(std::size_t dim, const std::vector<BitVector>& relations) : pivot_(dim, none), index_(dim, none) {
    for (BitVector v : relations) {
      for (std::size_t p = v.find_first(); p != BitVector::npos; p = v.find_next(p)) {
        if (pivot_[p] != none) v ^= reduced_[pivot_[p]];
      }
      const std::size_t p = v.find_first();
      if (p == BitVector::npos) continue;
      pivot_[p] = reduced_.size();
      reduced_.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < dim; ++k) {
      if (pivot_[k] == none) index_[k] = size_++;
    }
  }

  std::size_t size() const noexcept { return size_; }

  BitVector project(BitVector v) const {
    BitVector out(size_);
    for (std::size_t p = v.find_first(); p != BitVector::npos; p = v.find_next(p)) {
      if (pivot_[p] != none) {
        v ^= reduced_[pivot_[p]];
      } else {
        out.set(index_[p]);
      }
    }
    return out;
  }

 private:
  std::vector<BitVector> reduced_;
  std::vector<std::size_t> pivot_;
  std::vector<std::size_t> index_;
  std::size_t size_ = 0;
};

}  // namespace

void LinearSpaceChain::check() const {
  if (dims.size() != arrows.size() + 1 || maps.size() != arrows.size()) {
    throw Error(ErrorCode::Inconsistency, "chain has mismatched lengths");
  }
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::size_t src = arrows[k] == Arrow::Forward ? dims[k] : dims[k + 1];
    const std::size_t dst = arrows[k] == Arrow::Forward ? dims[k + 1] : dims[k];
    if (maps[k].cols() != src || maps[k].rows != dst) {
      throw Error(ErrorCode::Inconsistency, "map " + std::to_string(k) + " has the wrong shape");
    }
    for (const BitVector& c : maps[k].columns) {
      if (c.size() != dst) throw Error(ErrorCode::Inconsistency, "map " + std::to_string(k) + " has a bad column");
    }
  }
}

std::vector<std::vector<std::size_t>> generalized_ranks(const LinearSpaceChain& chain) {
  chain.check();
  const std::size_t m = chain.length();
  std::vector<std::vector<std::size_t>> gr(m + 1, std::vector<std::size_t>(m + 1, 0));

  for (std::size_t i = 0; i <= m; ++i) {
    const std::size_t di = chain.dims[i];
    if (di == 0) continue;

    // Image of the limit in V_i + V_j, as [left | right].
    std::vector<BitVector> lim;
    for (std::size_t a = 0; a < di; ++a) {
      BitVector v(2 * di);
      v.set(a);
      v.set(di + a);
      lim.push_back(std::move(v));
    }
    // Colimit Q with the canonical maps from V_i and V_j.
    Z2Matrix ci = Z2Matrix::identity(di);
    Z2Matrix cj = Z2Matrix::identity(di);

    auto record = [&](std::size_t j) {
      std::vector<BitVector> images;
      images.reserve(lim.size());
      for (const BitVector& v : lim) images.push_back(ci.apply(slice(v, 0, di)));
      gr[i][j] = rank(images, ci.rows);
    };
    record(i);

    for (std::size_t j = i; j < m; ++j) {
      const std::size_t dj = chain.dims[j];
      const std::size_t dn = chain.dims[j + 1];
      const Z2Matrix& map = chain.maps[j];
      std::vector<BitVector> next;

      if (chain.arrows[j] == Arrow::Forward) {
        for (const BitVector& v : lim) next.push_back(concat(slice(v, 0, di), map.apply(slice(v, di, dj))));

        const std::size_t q = ci.rows;
        std::vector<BitVector> relations;
        for (std::size_t x = 0; x < dj; ++x) relations.push_back(concat(cj.columns[x], map.columns[x]));
        const Quotient quotient(q + dn, relations);
        Z2Matrix ci_next(quotient.size(), di);
        for (std::size_t a = 0; a < di; ++a) ci_next.columns[a] = quotient.project(concat(ci.columns[a], BitVector(dn)));
        Z2Matrix cj_next(quotient.size(), dn);
        for (std::size_t y = 0; y < dn; ++y) {
          BitVector e(dn);
          e.set(y);
          cj_next.columns[y] = quotient.project(concat(BitVector(q), e));
        }
        ci = std::move(ci_next);
        cj = std::move(cj_next);
      } else {
        // Pullback along map: V_{j+1} -> V_j. Items are [V_j | V_i | V_{j+1}]
        // and only V_j positions are used as pivots.
        std::vector<BitVector> items;
        for (const BitVector& v : lim) items.push_back(concat(slice(v, di, dj), concat(slice(v, 0, di), BitVector(dn))));
        for (std::size_t y = 0; y < dn; ++y) {
          BitVector e(dn);
          e.set(y);
          items.push_back(concat(map.columns[y], concat(BitVector(di), e)));
        }
        std::vector<std::size_t> pivot(dj, none);
        std::vector<BitVector> reduced;
        for (BitVector& w : items) {
          std::size_t p = w.find_first();
          while (p != BitVector::npos && p < dj && pivot[p] != none) {
            w ^= reduced[pivot[p]];
            p = w.find_first();
          }
          if (p != BitVector::npos && p < dj) {
            pivot[p] = reduced.size();
            reduced.push_back(std::move(w));
          } else if (p != BitVector::npos) {
            next.push_back(slice(w, dj, di + dn));
          }
        }
        cj = cj.compose(map);
      }
      lim = echelon_vectors(next, di + dn);
      record(j + 1);
    }
  }
  return gr;
}

Barcode zigzag_decompose(const LinearSpaceChain& chain, std::size_t dim) {
  const auto gr = generalized_ranks(chain);
  const std::size_t m = chain.length();
  auto at = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> std::ptrdiff_t {
    if (i < 0 || j > static_cast<std::ptrdiff_t>(m)) return 0;
    return static_cast<std::ptrdiff_t>(gr[i][j]);
  };
  Barcode out{{}, m, BarcodeKind::Absolute};
  for (std::ptrdiff_t b = 0; b <= static_cast<std::ptrdiff_t>(m); ++b) {
    for (std::ptrdiff_t d = b; d <= static_cast<std::ptrdiff_t>(m); ++d) {
      const std::ptrdiff_t mult = at(b, d) - at(b - 1, d) - at(b, d + 1) + at(b - 1, d + 1);
      if (mult < 0) {
        throw Error(ErrorCode::Inconsistency, "negative multiplicity " + std::to_string(mult) + " for [" +
                                                  std::to_string(b) + "," + std::to_string(d) + "]");
      }
      const auto [birth, death] = classify_ends(b, d, chain.arrows);
      for (std::ptrdiff_t k = 0; k < mult; ++k) out.intervals.push_back(make_interval(b, d, dim, birth, death));
    }
  }
  return out;
}

}  // namespace zzp::oracle
