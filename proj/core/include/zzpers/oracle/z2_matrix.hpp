#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace zzp::oracle {

using BitVector = boost::dynamic_bitset<>;

/// Dense Z2 matrix stored by columns.
struct Z2Matrix {
  std::size_t rows = 0;
  std::vector<BitVector> columns;

  Z2Matrix() = default;
  Z2Matrix(std::size_t rows, std::size_t cols) : rows(rows), columns(cols, BitVector(rows)) {}
  static Z2Matrix identity(std::size_t n);

  std::size_t cols() const noexcept { return columns.size(); }
  bool get(std::size_t r, std::size_t c) const { return columns[c][r]; }
  void set(std::size_t r, std::size_t c, bool v = true) { columns[c][r] = v; }

  BitVector apply(const BitVector& x) const;
  /// this * other
  Z2Matrix compose(const Z2Matrix& other) const;
  bool operator==(const Z2Matrix&) const = default;
};

/// Echelon basis built by insertion, remembering how each stored vector was
/// combined from the independent vectors inserted so far. Pivots are lowest
/// set bits, so results depend only on insertion order.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return reduced_.size(); }

  /// Returns true and stores v if it is independent of the basis.
  bool insert(const BitVector& v);
  /// Coefficients c (size dim) over the independent inserted vectors, in
  /// insertion order, with sum c_k v_k = v; nullopt if v is not in the span.
  std::optional<BitVector> solve(const BitVector& v) const;

 private:
  void reduce(BitVector& v, BitVector& combination) const;

  std::size_t dim_;
  std::vector<BitVector> reduced_;
  std::vector<BitVector> combination_;
  std::vector<std::size_t> pivot_;  // bit -> index in reduced_, or npos
};

std::size_t rank(const std::vector<BitVector>& vectors, std::size_t dim);

/// Basis of {a : sum a_k columns[k] = 0}, as vectors of size columns.size().
std::vector<BitVector> kernel_basis(const std::vector<BitVector>& columns, std::size_t rows);

}  // namespace zzp::oracle
