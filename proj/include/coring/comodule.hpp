#pragma once

// Right comodules over a coring: a right A-module M with a coaction
// rho: M -> M (x)_A C satisfying counitality and coassociativity.  The
// shared presentation data for a fixed underlying module is cached in a
// ComoduleSpace so that many coactions on the same module (the situation
// throughout cocycle enumeration) reuse it.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "coring.hpp"

namespace coring {

struct ComoduleSpace {
  CoringPtr coring;
  ModuleRep module;        // right A-module M
  TensorModule mc;         // M (x)_A C
  QuotientPresentation mcc;
  FpMatrix counit_eval;    // ambient M (x) C -> M, m (x) c -> m * eps(c)
  FpMatrix comult_right;   // ambient M (x) C -> quotient M (x) C (x) C

  std::size_t dim() const { return module.dim; }
  std::size_t rho_cols() const { return mc.pres.dim(); }
  std::uint32_t p() const { return coring->p(); }

  // lift of a coaction to the ambient k-tensor M (x) C
  FpMatrix lift(const FpMatrix& rho) const { return rho * mc.pres.sect; }
};

using ComoduleSpacePtr = std::shared_ptr<const ComoduleSpace>;

inline ComoduleSpacePtr make_comodule_space(CoringPtr c, ModuleRep module) {
  if (module.side != Side::Right || module.alg != c->alg_ptr())
    throw dimension_mismatch("comodule space: need a right module over the coring's algebra");
  auto s = std::make_shared<ComoduleSpace>();
  s->coring = c;
  s->module = std::move(module);
  s->mc = tensor_right_module(s->module, c->bimod());
  s->mcc = triple_presentation(s->module, c->bimod());
  const std::uint32_t p = c->p();
  const std::size_t dm = s->module.dim, dc = c->dim();
  s->counit_eval = FpMatrix(p, dm * dc, dm);
  for (std::size_t j = 0; j < dc; ++j) {
    FpMatrix a = s->module.act_of(c->counit().row(j));
    for (std::size_t r = 0; r < dm; ++r) s->counit_eval.set_row(r * dc + j, a.row(r));
  }
  FpMatrix dbig = c->delta_big();
  FpMatrix big(p, dm * dc, dm * dc * dc);
  for (std::size_t r = 0; r < dm; ++r)
    for (std::size_t j = 0; j < dc; ++j) {
      Vec d = dbig.row(j);
      Vec out(dm * dc * dc, 0);
      for (std::size_t t = 0; t < dc * dc; ++t) out[r * dc * dc + t] = d[t];
      big.set_row(r * dc + j, out);
    }
  s->comult_right = big * s->mcc.proj;
  return s;
}

inline bool is_coassociative(const ComoduleSpace& s, const FpMatrix& rho) {
  FpMatrix lifted = s.lift(rho);
  FpMatrix idc = FpMatrix::identity(s.p(), s.coring->dim());
  return lifted * kron(lifted, idc) * s.mcc.proj == lifted * s.comult_right;
}

inline std::vector<std::string> coaction_violations(const ComoduleSpace& s, const FpMatrix& rho) {
  std::vector<std::string> bad;
  if (rho.rows() != s.dim() || rho.cols() != s.rho_cols()) {
    bad.push_back("coaction: matrix shape " + rho.shape());
    return bad;
  }
  for (std::size_t i = 0; i < s.module.alg->dim(); ++i)
    if (s.module.act[i] * rho != rho * s.mc.module.act[i]) {
      bad.push_back("coaction is not A-linear at basis element " + std::to_string(i));
      break;
    }
  if (s.lift(rho) * s.counit_eval != FpMatrix::identity(s.p(), s.dim()))
    bad.push_back("counit law fails");
  if (!is_coassociative(s, rho)) bad.push_back("coassociativity fails");
  return bad;
}

struct Comodule {
  ComoduleSpacePtr space;
  FpMatrix rho;

  std::vector<std::string> check() const { return coaction_violations(*space, rho); }
};

// Coaction on M (x)_A A = M itself coming from the canonical grouplike of
// the trivial coring; more generally the coaction attached below to any
// grouplike of any coring specializes to this one.
inline FpMatrix trivial_coaction(const ComoduleSpace& s) {
  const std::size_t dm = s.dim();
  FpMatrix rho(s.p(), dm, s.rho_cols());
  for (std::size_t r = 0; r < dm; ++r)
    rho.set_row(r, s.mc.pres.proj.apply(
                       kron_vec(s.p(), unit_vec(dm, r), s.coring->alg().one())));
  return rho;
}

// The regular module A as a comodule via a grouplike g: a -> class of
// 1 (x) g a inside A (x)_A C.
inline Comodule coaction_from_grouplike(CoringPtr c, const Vec& g) {
  if (!c->is_grouplike(g)) throw not_grouplike("coaction_from_grouplike: not a grouplike");
  auto s = make_comodule_space(c, regular_right_module(c->alg_ptr()));
  const std::size_t da = c->alg().dim();
  FpMatrix rho(c->p(), da, s->rho_cols());
  for (std::size_t i = 0; i < da; ++i) {
    Vec ga = c->bimod().ract[i].apply(g);
    rho.set_row(i, s->mc.pres.proj.apply(kron_vec(c->p(), c->alg().one(), ga)));
  }
  Comodule m{std::move(s), std::move(rho)};
  if (auto bad = m.check(); !bad.empty())
    throw internal_check_failure("grouplike coaction failed the axiom check: " + bad.front());
  return m;
}

// Linear constraints on vec(f) for colinearity of f: X -> Y, to be stacked
// with the A-linearity constraints: f * rho_Y = (f (x) C) after rho_X.
inline FpMatrix colinearity_constraints(const Comodule& x, const Comodule& y) {
  const ComoduleSpace& sx = *x.space;
  const ComoduleSpace& sy = *y.space;
  if (sx.coring != sy.coring)
    throw dimension_mismatch("comodule hom: different corings");
  const std::uint32_t p = sx.p();
  const std::size_t dm = sx.dim(), dn = sy.dim(), dc = sx.coring->dim();
  const std::size_t q = sy.rho_cols();
  FpMatrix lifted = sx.lift(x.rho); // dm x (dm * dc)
  const FpMatrix& proj = sy.mc.pres.proj;
  FpMatrix con(p, dm * q, dm * dn);
  for (std::size_t r = 0; r < dm; ++r) {
    for (std::size_t qq = 0; qq < q; ++qq) {
      std::size_t eq = r * q + qq;
      for (std::size_t t = 0; t < dn; ++t)
        con.at(eq, r * dn + t) = fp_add(p, con.at(eq, r * dn + t), y.rho.at(t, qq));
    }
    for (std::size_t s = 0; s < dm; ++s)
      for (std::size_t j = 0; j < dc; ++j) {
        std::uint32_t coeff = lifted.at(r, s * dc + j);
        if (!coeff) continue;
        for (std::size_t t = 0; t < dn; ++t)
          for (std::size_t qq = 0; qq < q; ++qq) {
            std::uint32_t w = fp_mul(p, coeff, proj.at(t * dc + j, qq));
            if (!w) continue;
            std::size_t eq = r * q + qq;
            con.at(eq, s * dn + t) = fp_sub(p, con.at(eq, s * dn + t), w);
          }
      }
  }
  return con;
}

inline HomSpace comodule_hom(const Comodule& x, const Comodule& y) {
  FpMatrix con = vstack(intertwine_constraints(x.space->module, y.space->module),
                        colinearity_constraints(x, y));
  return hom_space_from_constraints(con, x.space->dim(), y.space->dim());
}

inline bool is_colinear(const Comodule& x, const Comodule& y, const FpMatrix& f) {
  if (f.rows() != x.space->dim() || f.cols() != y.space->dim()) return false;
  Vec v(f.data().begin(), f.data().end());
  return vec_is_zero(colinearity_constraints(x, y).transpose().apply(v));
}

// The endomorphism algebra B = End of a comodule, with multiplication
// b_i b_j := h_i after h_j, together with the hom basis realizing it.
struct EndAlgebra {
  AlgebraPtr alg;
  HomSpace maps;

  FpMatrix realize(const Vec& b) const {
    FpMatrix f(alg->p(), maps.basis[0].rows(), maps.basis[0].cols());
    for (std::size_t l = 0; l < maps.basis.size(); ++l)
      if (b[l]) f = f + maps.basis[l].scaled(b[l]);
    return f;
  }
  Vec coords(const FpMatrix& f) const {
    Vec c = read_coords(maps.unit_cols, Vec(f.data().begin(), f.data().end()));
    if (realize(c) != f) throw internal_check_failure("map is not in the endomorphism algebra");
    return c;
  }
};

inline EndAlgebra end_comodule_algebra(const Comodule& sigma) {
  HomSpace h = comodule_hom(sigma, sigma);
  const std::uint32_t p = sigma.space->p();
  const std::size_t d = h.basis.size();
  if (d == 0) throw internal_check_failure("endomorphism algebra without identity");
  EndAlgebra out;
  out.maps = std::move(h);
  std::vector<std::uint32_t> c(d * d * d, 0);
  auto coords_of = [&](const FpMatrix& f) {
    Vec v = read_coords(out.maps.unit_cols, Vec(f.data().begin(), f.data().end()));
    FpMatrix back(p, f.rows(), f.cols());
    for (std::size_t l = 0; l < d; ++l)
      if (v[l]) back = back + out.maps.basis[l].scaled(v[l]);
    if (back != f) throw internal_check_failure("composition left the endomorphism algebra");
    return v;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec v = coords_of(out.maps.basis[j] * out.maps.basis[i]);
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = v[k];
    }
  Vec one = coords_of(FpMatrix::identity(p, sigma.space->dim()));
  out.alg = std::make_shared<Algebra>(p, d, std::move(c), std::move(one));
  return out;
}

// D^0: the group of comodule automorphisms.
inline MapGroup d0_group(const Comodule& m, std::uint64_t cap) {
  HomSpace h = comodule_hom(m, m);
  return make_map_group(invertible_span(h.basis, m.space->p(), m.space->dim(), cap),
                        m.space->p(), m.space->dim());
}

// Transport of an automorphism along an isomorphism f: X -> Y, i.e. the
// composite "f inverse, then alpha, then f" read left to right.
inline FpMatrix d0_pushforward(const FpMatrix& f, const FpMatrix& alpha) {
  auto inv = invert(f);
  if (!inv) throw not_an_automorphism("d0_pushforward: transporting along a non-isomorphism");
  return *inv * alpha * f;
}

inline std::optional<FpMatrix> comodule_iso(const Comodule& x, const Comodule& y,
                                            std::uint64_t cap) {
  if (x.space->coring != y.space->coring)
    throw dimension_mismatch("comodule_iso: different corings");
  if (x.space->dim() != y.space->dim()) return std::nullopt;
  if (x.space->module.act == y.space->module.act && x.rho == y.rho)
    return FpMatrix::identity(x.space->p(), x.space->dim());
  HomSpace h = comodule_hom(x, y);
  const std::uint32_t p = x.space->p();
  for (const auto& coeff : full_space(p, h.basis.size()).enumerate(cap)) {
    FpMatrix f(p, x.space->dim(), y.space->dim());
    for (std::size_t l = 0; l < h.basis.size(); ++l)
      if (coeff[l]) f = f + h.basis[l].scaled(coeff[l]);
    if (is_invertible(f)) return f;
  }
  return std::nullopt;
}

} // namespace coring
