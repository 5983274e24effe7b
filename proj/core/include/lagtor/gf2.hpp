#pragma once

#include <cstdint>
#include <vector>

namespace lagtor {

/// Dense matrix over Z/2. Sizes here are tiny (critical-point counts), so a
/// byte per entry and schoolbook elimination are plenty.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint8_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::uint8_t& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Gf2Matrix operator*(const Gf2Matrix& rhs) const;
  bool operator==(const Gf2Matrix& rhs) const = default;

  bool is_zero() const;

  /// Rank over Z/2 by Gaussian elimination.
  int rank() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> a_;
};

}  // namespace lagtor
