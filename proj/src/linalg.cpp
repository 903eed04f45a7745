#include "toricseq/linalg.hpp"

#include <utility>

namespace toricseq {

IntMatrix::IntMatrix(std::size_t dim, std::vector<Int> data) : dim_(dim), data_(std::move(data)) {
  if (data_.size() != dim_ * dim_) fail(ErrorCode::InvalidInput, "matrix data has wrong size");
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
  std::vector<Int> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Int> IntMatrix::apply(std::span<const Int> v) const {
  if (v.size() != dim_) fail(ErrorCode::InvalidInput, "vector size does not match matrix");
  std::vector<Int> out(dim_, 0);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out[r] = checked::fma(out[r], (*this)(r, c), v[c]);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) fail(ErrorCode::InvalidInput, "matrix dimensions differ");
  const std::size_t n = a.dim_;
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) = checked::fma(out(i, j), aik, b(k, j));
    }
  return out;
}

Int determinant(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = checked::sub(checked::mul(a(i, j), a(k, k)), checked::mul(a(i, k), a(k, j))) / prev;
    prev = a(k, k);
  }
  return checked::mul(sign, a(n - 1, n - 1));
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) fail(ErrorCode::InvalidInput, "vector sizes differ");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::fma(s, a[i], b[i]);
  return s;
}

}  // namespace toricseq
