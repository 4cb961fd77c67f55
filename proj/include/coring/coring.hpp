#pragma once

// Corings over an algebra A: an (A,A)-bimodule C with a coproduct
// Delta: C -> C (x)_A C and counit eps: C -> A, both A-bimodule maps,
// subject to coassociativity and counitality.  Delta is stored in the
// quotient coordinates of the stored C (x)_A C presentation; coassociativity
// is checked inside a single presentation of C (x)_A C (x)_A C obtained by
// quotienting the k-triple tensor by both balancing families at once.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "module.hpp"

namespace coring {

class Coring {
public:
  Coring(BimoduleRep c, FpMatrix delta, FpMatrix counit)
      : c_(std::move(c)), delta_(std::move(delta)), counit_(std::move(counit)) {
    if (c_.left_alg != c_.right_alg)
      throw dimension_mismatch("coring: needs an (A,A)-bimodule over one algebra");
    cc_ = tensor_bimodules(c_, c_);
    ccc_ = triple_presentation(c_.right_module(), c_);
    if (delta_.rows() != c_.dim || delta_.cols() != cc_.pres.dim())
      throw dimension_mismatch("coring: coproduct shape " + delta_.shape());
    if (counit_.rows() != c_.dim || counit_.cols() != alg().dim())
      throw dimension_mismatch("coring: counit shape " + counit_.shape());
  }

  const Algebra& alg() const { return *c_.left_alg; }
  AlgebraPtr alg_ptr() const { return c_.left_alg; }
  std::size_t dim() const { return c_.dim; }
  std::uint32_t p() const { return alg().p(); }
  const BimoduleRep& bimod() const { return c_; }
  const QuotientPresentation& cc_pres() const { return cc_.pres; }
  const BimoduleRep& cc_bimod() const { return cc_.bimodule; }
  const QuotientPresentation& ccc_pres() const { return ccc_; }
  const FpMatrix& delta() const { return delta_; }
  const FpMatrix& counit() const { return counit_; }

  // Delta followed by a lift to the ambient k-tensor C (x)_k C.
  FpMatrix delta_big() const { return delta_ * cc_.pres.sect; }

  std::vector<std::string> check() const {
    std::vector<std::string> bad;
    for (auto& s : c_.check()) bad.push_back("underlying bimodule: " + s);
    const std::size_t na = alg().dim();
    for (std::size_t i = 0; i < na; ++i) {
      if (c_.lact[i] * delta_ != delta_ * cc_.bimodule.lact[i])
        bad.push_back("coproduct is not left A-linear at basis element " + std::to_string(i));
      if (c_.ract[i] * delta_ != delta_ * cc_.bimodule.ract[i])
        bad.push_back("coproduct is not right A-linear at basis element " + std::to_string(i));
      if (c_.lact[i] * counit_ != counit_ * alg().basis_left_mult(i))
        bad.push_back("counit is not left A-linear at basis element " + std::to_string(i));
      if (c_.ract[i] * counit_ != counit_ * alg().basis_right_mult(i))
        bad.push_back("counit is not right A-linear at basis element " + std::to_string(i));
    }
    FpMatrix idc = FpMatrix::identity(p(), c_.dim);
    FpMatrix big = delta_big();
    FpMatrix left = delta_ * cc_.pres.sect * kron(big, idc) * ccc_.proj;
    FpMatrix right = delta_ * cc_.pres.sect * kron(idc, big) * ccc_.proj;
    if (left != right) bad.push_back("coassociativity fails");
    if (delta_ * cc_.pres.sect * counit_eval_left() != idc)
      bad.push_back("left counit law fails");
    if (delta_ * cc_.pres.sect * counit_eval_right() != idc)
      bad.push_back("right counit law fails");
    return bad;
  }

  bool is_grouplike(const Vec& g) const {
    if (g.size() != c_.dim) return false;
    if (counit_.apply(g) != alg().one()) return false;
    return cc_.pres.proj.apply(kron_vec(p(), g, g)) == delta_.apply(g);
  }

private:
  // eps (x) C and C (x) eps as maps from the ambient k-tensor to C.
  FpMatrix counit_eval_left() const {
    FpMatrix m(p(), c_.dim * c_.dim, c_.dim);
    for (std::size_t i = 0; i < c_.dim; ++i) {
      FpMatrix l = c_.lact_of(counit_.row(i));
      for (std::size_t j = 0; j < c_.dim; ++j) m.set_row(i * c_.dim + j, l.row(j));
    }
    return m;
  }
  FpMatrix counit_eval_right() const {
    FpMatrix m(p(), c_.dim * c_.dim, c_.dim);
    for (std::size_t j = 0; j < c_.dim; ++j) {
      FpMatrix r = c_.ract_of(counit_.row(j));
      for (std::size_t i = 0; i < c_.dim; ++i) m.set_row(i * c_.dim + j, r.row(i));
    }
    return m;
  }

  BimoduleRep c_;
  TensorBimodule cc_;
  QuotientPresentation ccc_;
  FpMatrix delta_;
  FpMatrix counit_;
};

using CoringPtr = std::shared_ptr<const Coring>;

inline CoringPtr trivial_coring(AlgebraPtr a) {
  BimoduleRep c = regular_bimodule(a);
  TensorBimodule cc = tensor_bimodules(c, c);
  FpMatrix delta(a->p(), a->dim(), cc.pres.dim());
  for (std::size_t i = 0; i < a->dim(); ++i)
    delta.set_row(i, cc.pres.proj.apply(kron_vec(a->p(), unit_vec(a->dim(), i), a->one())));
  return std::make_shared<Coring>(std::move(c), std::move(delta),
                                  FpMatrix::identity(a->p(), a->dim()));
}

// An algebra map B -> A, rows of `matrix` giving the images of B's basis.
struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  FpMatrix matrix;

  Vec apply(const Vec& x) const { return matrix.apply(x); }

  std::vector<std::string> check() const {
    std::vector<std::string> bad;
    if (source->p() != target->p()) {
      bad.push_back("algebra map: different characteristics");
      return bad;
    }
    if (matrix.rows() != source->dim() || matrix.cols() != target->dim()) {
      bad.push_back("algebra map: matrix shape " + matrix.shape());
      return bad;
    }
    if (apply(source->one()) != target->one()) bad.push_back("algebra map: 1 is not preserved");
    for (std::size_t i = 0; i < source->dim(); ++i)
      for (std::size_t j = 0; j < source->dim(); ++j) {
        Vec lhs = apply(source->mul(unit_vec(source->dim(), i), unit_vec(source->dim(), j)));
        Vec rhs = target->mul(matrix.row(i), matrix.row(j));
        if (lhs != rhs)
          bad.push_back("algebra map: multiplicativity fails at basis pair (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
      }
    return bad;
  }
};

struct SweedlerCoring {
  CoringPtr coring;
  QuotientPresentation ab_pres; // A (x)_B A as a quotient of A (x)_k A
  Vec canonical_grouplike;      // class of 1 (x) 1
};

inline SweedlerCoring sweedler_coring(const AlgebraMap& ext) {
  if (auto bad = ext.check(); !bad.empty()) throw not_an_algebra_map(bad.front());
  const Algebra& a = *ext.target;
  const Algebra& b = *ext.source;
  const std::uint32_t p = a.p();
  const std::size_t da = a.dim();

  // A as an (A,B)-bimodule and as a (B,A)-bimodule through ext
  std::vector<FpMatrix> ract_b, lact_b;
  for (std::size_t l = 0; l < b.dim(); ++l) {
    ract_b.push_back(a.right_mult(ext.matrix.row(l)));
    lact_b.push_back(a.left_mult(ext.matrix.row(l)));
  }
  BimoduleRep left_factor{ext.target, ext.source, da, regular_left_module(ext.target).act, ract_b};
  BimoduleRep right_factor{ext.source, ext.target, da, lact_b, regular_right_module(ext.target).act};

  TensorBimodule c = tensor_bimodules(left_factor, right_factor);
  TensorBimodule cc = tensor_bimodules(c.bimodule, c.bimodule);
  const std::size_t dc = c.pres.dim();

  // classes of a_i (x) 1 and 1 (x) a_j
  std::vector<Vec> left_unit(da), right_unit(da);
  for (std::size_t i = 0; i < da; ++i) {
    left_unit[i] = c.pres.proj.apply(kron_vec(p, unit_vec(da, i), a.one()));
    right_unit[i] = c.pres.proj.apply(kron_vec(p, a.one(), unit_vec(da, i)));
  }
  FpMatrix big_delta(p, da * da, dc * dc);
  FpMatrix big_eps(p, da * da, da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      big_delta.set_row(i * da + j, kron_vec(p, left_unit[i], right_unit[j]));
      big_eps.set_row(i * da + j, a.mul(unit_vec(da, i), unit_vec(da, j)));
    }
  FpMatrix delta = c.pres.sect * big_delta * cc.pres.proj;
  FpMatrix counit = c.pres.sect * big_eps;

  SweedlerCoring out;
  out.coring = std::make_shared<Coring>(c.bimodule, std::move(delta), std::move(counit));
  out.canonical_grouplike = c.pres.proj.apply(kron_vec(p, a.one(), a.one()));
  out.ab_pres = std::move(c.pres);
  return out;
}

// All grouplike elements: solve the affine counit constraint, then filter
// the quadratic coproduct condition over its points.
inline std::vector<Vec> grouplikes(const Coring& c, std::uint64_t cap) {
  auto sol = solve_row_affine(c.counit(), c.alg().one());
  if (!sol) return {};
  std::vector<Vec> out;
  for (const auto& g : sol->enumerate(cap))
    if (c.is_grouplike(g)) out.push_back(g);
  return out;
}

inline Vec grouplike_conjugation(const Coring& c, const Vec& g, const Vec& u) {
  auto inv = c.alg().inverse(u);
  if (!inv) throw not_a_unit("grouplike_conjugation: u is not a unit");
  if (!c.is_grouplike(g)) throw not_grouplike("grouplike_conjugation: g is not grouplike");
  Vec w = c.bimod().ract_of(u).apply(c.bimod().lact_of(*inv).apply(g));
  if (!c.is_grouplike(w))
    throw internal_check_failure("conjugate of a grouplike failed the grouplike test");
  return w;
}

} // namespace coring
