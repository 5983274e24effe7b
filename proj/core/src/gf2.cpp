#include "lagtor/gf2.hpp"

#include <stdexcept>

namespace lagtor {

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("Gf2Matrix: shape mismatch");
  Gf2Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      if (!(*this)(i, k)) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        out(i, j) ^= rhs(k, j);
      }
    }
  }
  return out;
}

bool Gf2Matrix::is_zero() const {
  for (const auto b : a_) {
    if (b) return false;
  }
  return true;
}

int Gf2Matrix::rank() const {
  Gf2Matrix m = *this;
  int rank = 0;
  for (int col = 0; col < m.cols_ && rank < m.rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows_; ++r) {
      if (m(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < m.cols_; ++c) std::swap(m(pivot, c), m(rank, c));
    }
    for (int r = 0; r < m.rows_; ++r) {
      if (r != rank && m(r, col)) {
        for (int c = 0; c < m.cols_; ++c) m(r, c) ^= m(rank, c);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace lagtor
