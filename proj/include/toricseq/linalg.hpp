#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "toricseq/checked.hpp"

namespace toricseq {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0) {}
  IntMatrix(std::size_t dim, std::vector<Int> data);

  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  const std::vector<Int>& data() const noexcept { return data_; }

  std::vector<Int> column(std::size_t c) const;
  std::vector<Int> apply(std::span<const Int> v) const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

Int dot(std::span<const Int> a, std::span<const Int> b);

inline std::size_t hash_values(std::span<const Int> values, std::size_t seed = 0) {
  for (Int v : values) seed ^= std::hash<Int>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

}  // namespace toricseq

template <>
struct std::hash<toricseq::IntMatrix> {
  std::size_t operator()(const toricseq::IntMatrix& m) const noexcept {
    return toricseq::hash_values(m.data(), m.dim());
  }
};
