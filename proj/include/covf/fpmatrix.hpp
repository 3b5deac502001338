#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "covf/fp.hpp"

namespace covf {

// Dense row-major matrix over F_p; just enough exact linear algebra for the
// graded rank computations (Gaussian elimination with unit pivots).
class FpMatrix {
public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(PrimeField field, std::size_t n) {
    FpMatrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
  }

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fp& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Fp at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Fp> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  void append_row(const std::vector<Fp>& r) {
    if (r.size() != cols_) throw std::invalid_argument("FpMatrix: row width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  FpMatrix times(const FpMatrix& o) const {
    if (cols_ != o.rows_ || !(field_ == o.field_)) {
      throw std::invalid_argument("FpMatrix: shape mismatch in product");
    }
    const std::uint64_t p = field_.p();
    FpMatrix out(field_, rows_, o.cols_);
    // residues < 2^16 cannot overflow a 64-bit accumulator at these sizes
    const bool small = p < (1u << 16) && cols_ < (std::size_t{1} << 31);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        Fp a = at(i, k);
        if (a == 0) continue;
        const Fp* src = &o.data_[k * o.cols_];
        Fp* dst = &out.data_[i * o.cols_];
        if (small) {
          for (std::size_t j = 0; j < o.cols_; ++j) dst[j] += a * src[j];
        } else {
          for (std::size_t j = 0; j < o.cols_; ++j) dst[j] = (dst[j] + a * src[j]) % p;
        }
      }
      if (small) {
        Fp* dst = &out.data_[i * o.cols_];
        for (std::size_t j = 0; j < o.cols_; ++j) dst[j] %= p;
      }
    }
    return out;
  }

  std::size_t rank() const {
    FpMatrix cp(*this);
    return cp.eliminate_limited(cp.cols_);
  }

  // Basis of {c : c * M = 0} as rows (left null space).
  std::vector<std::vector<Fp>> left_nullspace() const {
    const std::uint64_t p = field_.p();
    FpMatrix aug(field_, rows_, cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = 1;
    }
    aug.eliminate_limited(cols_);
    std::vector<std::vector<Fp>> out;
    for (std::size_t i = 0; i < rows_; ++i) {
      bool zero = true;
      for (std::size_t j = 0; j < cols_ && zero; ++j) zero = aug.at(i, j) % p == 0;
      if (zero) {
        std::vector<Fp> combo(rows_);
        for (std::size_t j = 0; j < rows_; ++j) combo[j] = aug.at(i, cols_ + j);
        out.push_back(std::move(combo));
      }
    }
    return out;
  }

private:
  // Row-reduce in place over the first `limit` columns; returns rank.
  std::size_t eliminate_limited(std::size_t limit) {
    const std::uint64_t p = field_.p();
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && at(piv, c) % p == 0) ++piv;
      if (piv == rows_) continue;
      if (piv != r) swap_rows(piv, r);
      Fp inv = field_.inv(at(r, c));
      if (inv != 1) {
        for (std::size_t j = c; j < cols_; ++j) at(r, j) = field_.mul(at(r, j), inv);
      }
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        Fp f = at(i, c) % p;
        if (f == 0) continue;
        Fp fneg = p - f;
        for (std::size_t j = c; j < cols_; ++j) {
          at(i, j) = (at(i, j) + fneg * at(r, j)) % p;
        }
      }
      ++r;
    }
    return r;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fp> data_;
};

}  // namespace covf
