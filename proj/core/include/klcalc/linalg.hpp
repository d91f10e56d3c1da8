#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "klcalc/rational.hpp"

namespace klcalc {

/// Sparse rational vector: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  static SparseVector unit(std::size_t i, Rational c = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Rational at(std::size_t i) const;

  /// this += scale * other
  void axpy(const Rational& scale, const SparseVector& other);
  /// Adds a single term; keeps entries sorted.
  void add(std::size_t i, const Rational& c);
  SparseVector scaled(const Rational& s) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Reduced row echelon form accumulated one row at a time.
///
/// Every stored row has a leading 1 in its pivot column and zeros in all other pivot
/// columns, so the kernel can be read off directly.
class RowReducer {
 public:
  explicit RowReducer(std::size_t ncols) : ncols_(ncols) {}

  /// Returns true when the row increased the rank.
  bool add_row(SparseVector row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t ncols() const { return ncols_; }
  /// Basis of {v : row . v = 0 for all added rows}, one vector per free column, ascending.
  std::vector<SparseVector> kernel() const;

 private:
  std::size_t ncols_;
  std::map<std::size_t, SparseVector> pivots_;
};

/// Kernel of a dense matrix given by rows.
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows,
                                             std::size_t ncols);

}  // namespace klcalc
