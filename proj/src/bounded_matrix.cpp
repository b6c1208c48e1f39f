#include "ambig/bounded_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ambig {

namespace {

using Entry = BoundedMatrix::Entry;

// min(acc + x * y, bound) for acc, x, y already at most bound.
Entry saturating_fma(Entry acc, Entry x, Entry y, Entry bound) {
  const std::uint64_t sum =
      static_cast<std::uint64_t>(acc) + static_cast<std::uint64_t>(x) * y;
  return static_cast<Entry>(std::min<std::uint64_t>(sum, bound));
}

}  // namespace

BoundedMatrix::BoundedMatrix(std::size_t dimension, Entry bound)
    : dimension_(dimension), bound_(bound), entries_(dimension * dimension, 0) {}

BoundedMatrix BoundedMatrix::identity(std::size_t dimension, Entry bound) {
  BoundedMatrix m(dimension, bound);
  for (std::size_t i = 0; i < dimension; ++i) m.set(i, i, 1);
  return m;
}

void BoundedMatrix::set(std::size_t i, std::size_t j, std::uint64_t value) {
  entries_.at(i * dimension_ + j) =
      static_cast<Entry>(std::min<std::uint64_t>(value, bound_));
}

BoundedMatrix BoundedMatrix::product(const BoundedMatrix& rhs,
                                     Entry bound) const {
  if (rhs.dimension_ != dimension_) {
    throw std::invalid_argument("matrix dimensions differ");
  }
  BoundedMatrix out(dimension_, bound);
  const std::size_t n = dimension_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Entry x = std::min(at(i, k), bound);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Entry y = std::min(rhs.at(k, j), bound);
        if (y == 0) continue;
        Entry& cell = out.entries_[i * n + j];
        cell = saturating_fma(cell, x, y, bound);
      }
    }
  }
  return out;
}

std::vector<Entry> BoundedMatrix::left_multiply(const std::vector<Entry>& row,
                                                Entry bound) const {
  if (row.size() != dimension_) {
    throw std::invalid_argument("row length differs from matrix dimension");
  }
  std::vector<Entry> out(dimension_, 0);
  for (std::size_t k = 0; k < dimension_; ++k) {
    const Entry x = std::min(row[k], bound);
    if (x == 0) continue;
    for (std::size_t j = 0; j < dimension_; ++j) {
      const Entry y = std::min(at(k, j), bound);
      if (y != 0) out[j] = saturating_fma(out[j], x, y, bound);
    }
  }
  return out;
}

}  // namespace ambig
