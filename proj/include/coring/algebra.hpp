#pragma once

// Finite-dimensional associative unital F_p-algebras given by structure
// constants: a_i * a_j = sum_k c[i][j][k] a_k.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "group.hpp"
#include "linalg.hpp"

namespace coring {

class Algebra {
public:
  Algebra(std::uint32_t p, std::size_t dim, std::vector<std::uint32_t> c, Vec one)
      : p_(p), dim_(dim), c_(std::move(c)), one_(std::move(one)) {
    if (!is_prime(p_)) throw coring_error("modulus " + std::to_string(p_) + " is not prime");
    if (c_.size() != dim_ * dim_ * dim_)
      throw dimension_mismatch("structure constants: expected dim^3 entries");
    if (one_.size() != dim_) throw dimension_mismatch("unit vector length");
    for (auto x : c_)
      if (x >= p_) throw coring_error("structure constant not reduced mod p");
    for (auto x : one_)
      if (x >= p_) throw coring_error("unit coordinate not reduced mod p");
  }

  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return dim_; }
  const Vec& one() const { return one_; }
  std::uint32_t c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  Vec mul(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw dimension_mismatch("algebra mul");
    Vec r(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!y[j]) continue;
        std::uint64_t f = static_cast<std::uint64_t>(x[i]) * y[j] % p_;
        if (!f) continue;
        for (std::size_t k = 0; k < dim_; ++k)
          r[k] = static_cast<std::uint32_t>((r[k] + f * c(i, j, k)) % p_);
      }
    }
    return r;
  }

  // Matrix of y |-> x * y on row vectors.
  FpMatrix left_mult(const Vec& x) const {
    FpMatrix m(p_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < dim_; ++i) s += static_cast<std::uint64_t>(x[i]) * c(i, j, k) % p_;
        m.at(j, k) = static_cast<std::uint32_t>(s % p_);
      }
    return m;
  }

  // Matrix of x |-> x * y on row vectors.
  FpMatrix right_mult(const Vec& y) const {
    FpMatrix m(p_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < dim_; ++j) s += static_cast<std::uint64_t>(y[j]) * c(i, j, k) % p_;
        m.at(i, k) = static_cast<std::uint32_t>(s % p_);
      }
    return m;
  }

  FpMatrix basis_left_mult(std::size_t i) const { return left_mult(unit_vec(dim_, i)); }
  FpMatrix basis_right_mult(std::size_t j) const { return right_mult(unit_vec(dim_, j)); }

  // Two-sided inverse, if any.
  std::optional<Vec> inverse(const Vec& x) const {
    auto li = invert(left_mult(x));
    if (!li) return std::nullopt;
    // x * y = 1 means y = row of the inverse picked out by 1's coordinates
    Vec y = li->apply(one_);
    if (mul(y, x) != one_ || mul(x, y) != one_) return std::nullopt;
    return y;
  }

  bool is_unit(const Vec& x) const { return inverse(x).has_value(); }

  std::vector<std::string> check() const {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < dim_; ++i) {
      Vec ai = unit_vec(dim_, i);
      if (mul(one_, ai) != ai) bad.push_back("unit law fails: 1*a_" + std::to_string(i));
      if (mul(ai, one_) != ai) bad.push_back("unit law fails: a_" + std::to_string(i) + "*1");
    }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          Vec lhs = mul(mul(unit_vec(dim_, i), unit_vec(dim_, j)), unit_vec(dim_, k));
          Vec rhs = mul(unit_vec(dim_, i), mul(unit_vec(dim_, j), unit_vec(dim_, k)));
          if (lhs != rhs)
            bad.push_back("associativity fails at basis triple (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");
        }
    return bad;
  }

private:
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<std::uint32_t> c_;
  Vec one_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// The unit group, elements in the canonical sweep order of F_p^dim.
struct UnitGroup {
  std::vector<Vec> elements;
  GroupTable group;
};

inline UnitGroup unit_group(const Algebra& a, std::uint64_t cap) {
  UnitGroup u;
  for (const auto& x : full_space(a.p(), a.dim()).enumerate(cap))
    if (a.is_unit(x)) u.elements.push_back(x);
  std::map<Vec, std::size_t> index;
  for (std::size_t i = 0; i < u.elements.size(); ++i) index[u.elements[i]] = i;
  u.group = table_from_product(u.elements.size(), [&](std::size_t i, std::size_t j) {
    auto it = index.find(a.mul(u.elements[i], u.elements[j]));
    if (it == index.end()) throw internal_check_failure("unit product left the unit list");
    return it->second;
  });
  return u;
}

// Handy fixed algebras.
inline AlgebraPtr field_algebra(std::uint32_t p) {
  return std::make_shared<Algebra>(p, 1, std::vector<std::uint32_t>{1}, Vec{1});
}

} // namespace coring
