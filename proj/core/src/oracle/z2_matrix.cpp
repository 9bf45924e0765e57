#include "zzpers/oracle/z2_matrix.hpp"

#include "zzpers/error.hpp"

namespace zzp::oracle {

namespace {
constexpr std::size_t none = static_cast<std::size_t>(-1);
}

Z2Matrix Z2Matrix::identity(std::size_t n) {
  Z2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVector Z2Matrix::apply(const BitVector& x) const {
  if (x.size() != cols()) throw Error(ErrorCode::Inconsistency, "matrix/vector size mismatch");
  BitVector out(rows);
  for (std::size_t c = x.find_first(); c != BitVector::npos; c = x.find_next(c)) out ^= columns[c];
  return out;
}

Z2Matrix Z2Matrix::compose(const Z2Matrix& other) const {
  if (other.rows != cols()) throw Error(ErrorCode::Inconsistency, "matrix product size mismatch");
  Z2Matrix out(rows, other.cols());
  for (std::size_t c = 0; c < other.cols(); ++c) out.columns[c] = apply(other.columns[c]);
  return out;
}

EchelonBasis::EchelonBasis(std::size_t dim) : dim_(dim), pivot_(dim, none) {}

void EchelonBasis::reduce(BitVector& v, BitVector& combination) const {
  for (std::size_t p = v.find_first(); p != BitVector::npos; p = v.find_next(p)) {
    if (pivot_[p] == none) continue;
    // Stored vectors have p as their lowest bit, so this only touches bits
    // above p and the ascending scan stays valid.
    v ^= reduced_[pivot_[p]];
    combination ^= combination_[pivot_[p]];
  }
}

bool EchelonBasis::insert(const BitVector& v) {
  if (v.size() != dim_) throw Error(ErrorCode::Inconsistency, "echelon basis dimension mismatch");
  BitVector r = v;
  BitVector comb(dim_);
  reduce(r, comb);
  const std::size_t p = r.find_first();
  if (p == BitVector::npos) return false;
  comb.set(reduced_.size());
  pivot_[p] = reduced_.size();
  reduced_.push_back(std::move(r));
  combination_.push_back(std::move(comb));
  return true;
}

std::optional<BitVector> EchelonBasis::solve(const BitVector& v) const {
  if (v.size() != dim_) throw Error(ErrorCode::Inconsistency, "echelon basis dimension mismatch");
  BitVector r = v;
  BitVector comb(dim_);
  reduce(r, comb);
  if (r.any()) return std::nullopt;
  return comb;
}

std::size_t rank(const std::vector<BitVector>& vectors, std::size_t dim) {
  EchelonBasis basis(dim);
  for (const BitVector& v : vectors) basis.insert(v);
  return basis.rank();
}

std::vector<BitVector> kernel_basis(const std::vector<BitVector>& columns, std::size_t rows) {
  const std::size_t n = columns.size();
  std::vector<BitVector> reduced;
  std::vector<BitVector> tracking;
  std::vector<std::size_t> pivot(rows, none);
  std::vector<BitVector> kernel;
  for (std::size_t k = 0; k < n; ++k) {
    BitVector v = columns[k];
    BitVector t(n);
    t.set(k);
    for (std::size_t p = v.find_first(); p != BitVector::npos; p = v.find_next(p)) {
      if (pivot[p] == none) continue;
      v ^= reduced[pivot[p]];
      t ^= tracking[pivot[p]];
    }
    const std::size_t p = v.find_first();
    if (p == BitVector::npos) {
      kernel.push_back(std::move(t));
    } else {
      pivot[p] = reduced.size();
      reduced.push_back(std::move(v));
      tracking.push_back(std::move(t));
    }
  }
  return kernel;
}

}  // namespace zzp::oracle
