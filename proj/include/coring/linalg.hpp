#pragma once

// Exact elimination over F_p and deterministic enumeration of solution sets.
//
// solve_affine and kernel_basis use the textbook column convention
// (a * x = b with x a column vector, returned as a Vec of its entries).
// The row-vector callers elsewhere in the library go through the
// solve_row_affine / left_kernel_basis wrappers, which just transpose.

#include <cstdint>
#include <optional>
#include <vector>

#include "fp.hpp"

namespace coring {

struct RrefResult {
  FpMatrix matrix;
  std::vector<std::size_t> pivots; // pivot column of row r, strictly increasing
  std::size_t rank = 0;
};

inline RrefResult rref(FpMatrix m) {
  const std::uint32_t p = m.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    std::uint32_t inv = fp_inv(p, m.at(r, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) = fp_mul(p, inv, m.at(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      std::uint32_t f = m.at(i, col);
      if (!f) continue;
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = fp_sub(p, m.at(i, j), fp_mul(p, f, m.at(r, j)));
    }
    pivots.push_back(col);
    ++r;
  }
  return RrefResult{std::move(m), std::move(pivots), r};
}

inline std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

// Basis of {x : a * x^T = 0}, one row per free column of rref(a), in
// ascending free-column order.  Row j has a 1 in its own free column and 0
// in every other free column, so coordinates w.r.t. this basis can be read
// off directly; free_cols records those positions.
struct KernelBasis {
  FpMatrix basis;                    // each row k satisfies a * k^T = 0
  std::vector<std::size_t> free_cols;
};

inline KernelBasis kernel_with_cols(const FpMatrix& a) {
  RrefResult r = rref(a);
  const std::uint32_t p = a.p();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMatrix basis(p, free_cols.size(), a.cols());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    basis.at(j, free_cols[j]) = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      basis.at(j, r.pivots[i]) = fp_neg(p, r.matrix.at(i, free_cols[j]));
  }
  return KernelBasis{std::move(basis), std::move(free_cols)};
}

inline FpMatrix kernel_basis(const FpMatrix& a) { return kernel_with_cols(a).basis; }

// Rows x with x * m = 0.
inline KernelBasis left_kernel_with_cols(const FpMatrix& m) {
  return kernel_with_cols(m.transpose());
}

inline FpMatrix left_kernel_basis(const FpMatrix& m) { return left_kernel_with_cols(m).basis; }

inline std::optional<FpMatrix> invert(const FpMatrix& a) {
  if (a.rows() != a.cols()) throw not_square("invert: " + a.shape());
  const std::size_t n = a.rows();
  const std::uint32_t p = a.p();
  FpMatrix aug(p, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(std::move(aug));
  // [a | I] always has row rank n; a is invertible iff all pivots land in
  // the first n columns.
  for (auto c : r.pivots)
    if (c >= n) return std::nullopt;
  if (r.rank < n) return std::nullopt;
  FpMatrix inv(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.matrix.at(i, n + j);
  return inv;
}

inline bool is_invertible(const FpMatrix& a) { return invert(a).has_value(); }

// p^e, saturating at UINT64_MAX on overflow.
inline std::uint64_t pow_saturating(std::uint32_t p, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / p) return UINT64_MAX;
    r *= p;
  }
  return r;
}

// A coset point + span(basis rows) inside F_p^ambient.  Enumeration order is
// pinned: solution t (0-based) adds digit_i(t, base p) * basis_row_i to the
// point, least significant digit on row 0, so row 0's coefficient varies
// fastest.
class AffineSubspace {
public:
  AffineSubspace(std::uint32_t p, Vec point, FpMatrix basis)
      : p_(p), point_(std::move(point)), basis_(std::move(basis)) {
    if (basis_.rows() > 0 && basis_.cols() != point_.size())
      throw dimension_mismatch("AffineSubspace: basis vs point length");
    if (rank(basis_) != basis_.rows())
      throw coring_error("AffineSubspace: basis rows are dependent");
  }

  std::uint32_t p() const { return p_; }
  std::size_t ambient() const { return point_.size(); }
  std::size_t dim() const { return basis_.rows(); }
  const Vec& point() const { return point_; }
  const FpMatrix& basis() const { return basis_; }

  std::uint64_t count() const { return pow_saturating(p_, dim()); }

  Vec at_index(std::uint64_t t) const {
    Vec x = point_;
    for (std::size_t i = 0; i < dim(); ++i) {
      std::uint32_t c = static_cast<std::uint32_t>(t % p_);
      t /= p_;
      if (c)
        for (std::size_t j = 0; j < x.size(); ++j)
          x[j] = fp_add(p_, x[j], fp_mul(p_, c, basis_.at(i, j)));
    }
    return x;
  }

  std::vector<Vec> enumerate(std::uint64_t cap) const {
    std::uint64_t n = count();
    if (n > cap) throw enumeration_too_large(n, cap);
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t t = 0; t < n; ++t) out.push_back(at_index(t));
    return out;
  }

private:
  std::uint32_t p_;
  Vec point_;
  FpMatrix basis_;
};

inline std::vector<Vec> enumerate_affine(const AffineSubspace& s, std::uint64_t cap) {
  return s.enumerate(cap);
}

// All of F_p^n in the same digit order.
inline AffineSubspace full_space(std::uint32_t p, std::size_t n) {
  return AffineSubspace(p, Vec(n, 0), FpMatrix::identity(p, n));
}

// Solutions x of a * x = b (column sense); nullopt when inconsistent.
inline std::optional<AffineSubspace> solve_affine(const FpMatrix& a, const Vec& b) {
  if (b.size() != a.rows())
    throw dimension_mismatch("solve_affine: rhs length " + std::to_string(b.size()) +
                             " vs matrix " + a.shape());
  const std::uint32_t p = a.p();
  FpMatrix aug(p, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i] % p;
  }
  RrefResult r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.matrix.at(i, a.cols());
  return AffineSubspace(p, std::move(x), kernel_basis(a));
}

// Solutions x of x * m = c (row sense).
inline std::optional<AffineSubspace> solve_row_affine(const FpMatrix& m, const Vec& c) {
  return solve_affine(m.transpose(), c);
}

} // namespace coring
