#pragma once

// Dense exact arithmetic over a prime field F_p, p < 2^31.
//
// Convention used throughout the library: vectors are ROW vectors and a
// linear map V -> W with dim V = n, dim W = m is an n x m matrix F acting by
// v |-> v * F.  Consequently the matrix of a composite g . f (apply f first)
// is mat(f) * mat(g).  Tensor products are flattened row-major:
// (e_i (x) e_j) |-> index i * dimN + j, which makes kron associative and
// compatible with the flattening of triple products.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "errors.hpp"

namespace coring {

using Vec = std::vector<std::uint32_t>;

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint32_t fp_add(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t fp_sub(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t fp_neg(std::uint32_t p, std::uint32_t a) {
  return a == 0 ? 0 : p - a;
}

inline std::uint32_t fp_mul(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t fp_pow(std::uint32_t p, std::uint32_t a, std::uint64_t e) {
  std::uint32_t r = 1 % p;
  std::uint32_t base = a % p;
  while (e) {
    if (e & 1) r = fp_mul(p, r, base);
    base = fp_mul(p, base, base);
    e >>= 1;
  }
  return r;
}

inline std::uint32_t fp_inv(std::uint32_t p, std::uint32_t a) {
  if (a % p == 0) throw not_a_unit("0 has no inverse mod " + std::to_string(p));
  return fp_pow(p, a, p - 2);
}

inline Vec vec_add(std::uint32_t p, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw dimension_mismatch("vec_add: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_add(p, a[i], b[i]);
  return r;
}

inline Vec vec_sub(std::uint32_t p, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw dimension_mismatch("vec_sub: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_sub(p, a[i], b[i]);
  return r;
}

inline Vec vec_scale(std::uint32_t p, std::uint32_t c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_mul(p, c, a[i]);
  return r;
}

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec r(n, 0);
  r[i] = 1;
  return r;
}

inline bool vec_is_zero(const Vec& a) {
  for (auto x : a)
    if (x) return false;
  return true;
}

// Row-major flattening of a (x) b.
inline Vec kron_vec(std::uint32_t p, const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size());
  std::size_t k = 0;
  for (auto x : a)
    for (auto y : b) r[k++] = fp_mul(p, x, y);
  return r;
}

class FpMatrix {
public:
  FpMatrix() = default;

  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!is_prime(p)) throw coring_error("modulus " + std::to_string(p) + " is not prime");
  }

  static FpMatrix identity(std::uint32_t p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static FpMatrix from_rows(std::uint32_t p, std::size_t cols, const std::vector<Vec>& rows) {
    FpMatrix m(p, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
  }

  static FpMatrix from_init(std::uint32_t p, std::initializer_list<std::initializer_list<std::uint32_t>> init) {
    std::vector<Vec> rows;
    std::size_t cols = 0;
    for (const auto& r : init) {
      rows.emplace_back(r.begin(), r.end());
      cols = rows.back().size();
    }
    return from_rows(p, cols, rows);
  }

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  const std::vector<std::uint32_t>& data() const { return data_; }

  Vec row(std::size_t i) const {
    return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw dimension_mismatch("set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j] >= p_) throw coring_error("matrix entry not reduced mod p");
      data_[i * cols_ + j] = v[j];
    }
  }

  bool operator==(const FpMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }

  FpMatrix operator*(const FpMatrix& o) const {
    if (p_ != o.p_ || cols_ != o.rows_)
      throw dimension_mismatch("matrix product: " + shape() + " * " + o.shape());
    FpMatrix r(p_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = at(i, k);
        if (!a) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.data_[i * o.cols_ + j] =
              static_cast<std::uint32_t>((r.data_[i * o.cols_ + j] + a * o.at(k, j)) % p_);
      }
    return r;
  }

  FpMatrix operator+(const FpMatrix& o) const {
    require_same_shape(o, "matrix sum");
    FpMatrix r(p_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fp_add(p_, data_[i], o.data_[i]);
    return r;
  }

  FpMatrix operator-(const FpMatrix& o) const {
    require_same_shape(o, "matrix difference");
    FpMatrix r(p_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fp_sub(p_, data_[i], o.data_[i]);
    return r;
  }

  FpMatrix scaled(std::uint32_t c) const {
    FpMatrix r(p_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fp_mul(p_, c, data_[i]);
    return r;
  }

  FpMatrix transpose() const {
    FpMatrix r(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (auto x : data_)
      if (x) return false;
    return true;
  }

  // v * M for a row vector v of length rows().
  Vec apply(const Vec& v) const {
    if (v.size() != rows_) throw dimension_mismatch("apply: vector length " +
                                                    std::to_string(v.size()) + " vs " + shape());
    Vec r(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t a = v[i];
      if (!a) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        r[j] = static_cast<std::uint32_t>((r[j] + a * at(i, j)) % p_);
    }
    return r;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

private:
  void require_same_shape(const FpMatrix& o, const char* what) const {
    if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_)
      throw dimension_mismatch(std::string(what) + ": " + shape() + " vs " + o.shape());
  }

  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

inline FpMatrix kron(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p()) throw dimension_mismatch("kron: modulus mismatch");
  FpMatrix r(a.p(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        std::uint32_t av = a.at(i, k);
        if (!av) continue;
        for (std::size_t l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + j, k * b.cols() + l) = fp_mul(a.p(), av, b.at(j, l));
      }
  return r;
}

// Rebuild a matrix from its row-major vectorization.
inline FpMatrix unvec(std::uint32_t p, std::size_t rows, std::size_t cols, const Vec& v) {
  if (v.size() != rows * cols) throw dimension_mismatch("unvec: wrong length");
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = v[r * cols + c];
  return m;
}

inline FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p() || a.cols() != b.cols()) throw dimension_mismatch("vstack: shape mismatch");
  FpMatrix r(a.p(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) r.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) r.set_row(a.rows() + i, b.row(i));
  return r;
}

// Lexicographic order on (rows, cols, flattened entries); the tie-break on
// shape only matters for heterogeneous collections.
inline bool lex_less(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  return a.data() < b.data();
}

} // namespace coring
