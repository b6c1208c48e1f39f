#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace ambig {

/// Square matrix over {0, ..., bound} where every value above the bound is
/// identified with the bound.
class BoundedMatrix {
 public:
  using Entry = std::uint32_t;

  BoundedMatrix() = default;
  /// Zero matrix.
  BoundedMatrix(std::size_t dimension, Entry bound);
  static BoundedMatrix identity(std::size_t dimension, Entry bound);

  std::size_t dimension() const noexcept { return dimension_; }
  Entry bound() const noexcept { return bound_; }
  Entry at(std::size_t i, std::size_t j) const {
    return entries_[i * dimension_ + j];
  }
  /// Stores min(value, bound).
  void set(std::size_t i, std::size_t j, std::uint64_t value);

  /// X (x)_b Y = min(XY, b) entrywise, computed with saturating arithmetic so
  /// no intermediate overflows. Throws std::invalid_argument on a dimension
  /// mismatch.
  BoundedMatrix product(const BoundedMatrix& rhs, Entry bound) const;
  /// Product saturated at this matrix's own bound.
  BoundedMatrix operator*(const BoundedMatrix& rhs) const {
    return product(rhs, bound_);
  }

  /// Row vector `row` times this matrix, saturated at `bound`.
  std::vector<Entry> left_multiply(const std::vector<Entry>& row,
                                   Entry bound) const;

  friend auto operator<=>(const BoundedMatrix&, const BoundedMatrix&) = default;

 private:
  std::size_t dimension_ = 0;
  Entry bound_ = 0;
  std::vector<Entry> entries_;
};

}  // namespace ambig
