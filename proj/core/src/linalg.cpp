#include "klcalc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace klcalc {

SparseVector SparseVector::unit(std::size_t i, Rational c) {
  SparseVector v;
  if (!c.is_zero()) v.entries_.emplace_back(i, std::move(c));
  return v;
}

Rational SparseVector::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  return (it != entries_.end() && it->first == i) ? it->second : Rational();
}

void SparseVector::axpy(const Rational& scale, const SparseVector& other) {
  if (scale.is_zero() || other.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, scale * b->second);
      ++b;
    } else {
      Rational s = a->second + scale * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVector::add(std::size_t i, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  } else {
    entries_.insert(it, Entry{i, c});
  }
}

SparseVector SparseVector::scaled(const Rational& s) const {
  SparseVector v;
  if (s.is_zero()) return v;
  v.entries_.reserve(entries_.size());
  for (const auto& [i, c] : entries_) v.entries_.emplace_back(i, c * s);
  return v;
}

bool RowReducer::add_row(SparseVector row) {
  std::vector<std::pair<std::size_t, Rational>> hits;
  for (const auto& [col, c] : row.entries()) {
    if (pivots_.count(col)) hits.emplace_back(col, c);
  }
  for (const auto& [col, c] : hits) row.axpy(-c, pivots_.at(col));
  if (row.empty()) return false;

  const std::size_t pcol = row.entries().front().first;
  if (pcol >= ncols_) throw std::out_of_range("row entry beyond column count");
  row = row.scaled(Rational(1) / row.entries().front().second);
  for (auto& [col, prow] : pivots_) {
    const Rational c = prow.at(pcol);
    if (!c.is_zero()) prow.axpy(-c, row);
  }
  pivots_.emplace(pcol, std::move(row));
  return true;
}

std::vector<SparseVector> RowReducer::kernel() const {
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < ncols_; ++f) {
    if (pivots_.count(f)) continue;
    SparseVector v = SparseVector::unit(f);
    for (const auto& [pcol, prow] : pivots_) {
      const Rational c = prow.at(f);
      if (!c.is_zero()) v.add(pcol, -c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows,
                                             std::size_t ncols) {
  RowReducer red(ncols);
  for (const auto& r : rows) {
    SparseVector v;
    for (std::size_t j = 0; j < r.size(); ++j) v.add(j, r[j]);
    red.add_row(std::move(v));
  }
  std::vector<std::vector<Rational>> out;
  for (const auto& k : red.kernel()) {
    std::vector<Rational> dense(ncols);
    for (const auto& [i, c] : k.entries()) dense[i] = c;
    out.push_back(std::move(dense));
  }
  return out;
}

}  // namespace klcalc
