#pragma once

// Idempotent partial actions of a finite group on an algebra: each group
// element carries a central idempotent e and an isomorphism between the
// ideals cut out by e at the element and at its inverse.  The attached
// coring has one block per group element, built on a chosen basis of each
// ideal; its grouplikes, the invariant subalgebra, and the induced descent
// data connect the partial picture with the comodule one.
//
// An action map alpha_sigma is stored as a full matrix on A sending x to
// alpha_sigma(x e_{sigma^{-1}}), so restriction is built in.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "descent.hpp"
#include "group.hpp"

namespace coring {

struct PartialAction {
  AlgebraPtr alg;
  GroupTable group;
  std::vector<Vec> idempotents;  // e_sigma per group element
  std::vector<FpMatrix> alphas;  // x -> alpha_sigma(x e_{sigma^{-1}})

  std::vector<std::string> check() const {
    std::vector<std::string> bad;
    for (auto& s : group.check()) bad.push_back("group: " + s);
    const std::size_t n = group.order;
    const std::size_t da = alg->dim();
    if (idempotents.size() != n || alphas.size() != n) {
      bad.push_back("partial action: one idempotent and one map per group element required");
      return bad;
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (idempotents[s].size() != da || alphas[s].rows() != da || alphas[s].cols() != da) {
        bad.push_back("partial action: entry shapes at group element " + std::to_string(s));
        return bad;
      }
    }
    if (!bad.empty()) return bad;
    for (std::size_t s = 0; s < n; ++s) {
      const Vec& e = idempotents[s];
      if (alg->mul(e, e) != e)
        bad.push_back("idempotent at group element " + std::to_string(s) + " does not square to itself");
      if (alg->left_mult(e) != alg->right_mult(e))
        bad.push_back("idempotent at group element " + std::to_string(s) + " is not central");
    }
    if (idempotents[group.identity] != alg->one())
      bad.push_back("the idempotent at the identity is not 1");
    if (alphas[group.identity] != FpMatrix::identity(alg->p(), da))
      bad.push_back("the map at the identity is not the identity");
    if (!bad.empty()) return bad;
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t sinv = group.inverse[s];
      FpMatrix restrict_in = alg->right_mult(idempotents[sinv]);
      FpMatrix restrict_out = alg->right_mult(idempotents[s]);
      if (restrict_in * alphas[s] != alphas[s])
        bad.push_back("map at group element " + std::to_string(s) +
                      " does not factor through its source ideal");
      if (alphas[s] * restrict_out != alphas[s])
        bad.push_back("map at group element " + std::to_string(s) +
                      " does not land in its target ideal");
      std::size_t din = rank(restrict_in), dout = rank(restrict_out);
      if (din != dout || rank(alphas[s]) != dout)
        bad.push_back("map at group element " + std::to_string(s) +
                      " is not bijective between its ideals");
      if (alphas[s].apply(alg->one()) != idempotents[s])
        bad.push_back("map at group element " + std::to_string(s) +
                      " does not send the source unit to the target unit");
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
          Vec x = restrict_in.row(i), y = restrict_in.row(j);
          Vec lhs = alphas[s].apply(alg->mul(x, y));
          Vec rhs = alg->mul(alphas[s].apply(unit_vec(da, i)), alphas[s].apply(unit_vec(da, j)));
          if (lhs != rhs) {
            bad.push_back("map at group element " + std::to_string(s) +
                          " is not multiplicative on its ideal");
            i = j = da;
          }
        }
      for (std::size_t t = 0; t < n; ++t) {
        Vec lhs = alphas[s].apply(alg->mul(idempotents[sinv], idempotents[t]));
        Vec rhs = alg->mul(idempotents[s], idempotents[group.mul(s, t)]);
        if (lhs != rhs)
          bad.push_back("ideal compatibility fails at group elements (" + std::to_string(s) +
                        "," + std::to_string(t) + ")");
      }
    }
    if (!bad.empty()) return bad;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (alphas[t] * alphas[s] !=
            alphas[group.mul(s, t)] * alg->right_mult(idempotents[s]))
          bad.push_back("composition law fails at group elements (" + std::to_string(s) + "," +
                        std::to_string(t) + ")");
    return bad;
  }
};

// A chosen basis of the ideal A e_sigma: the reduced row echelon rows of
// right multiplication by the idempotent, with the matrix reading
// coordinates off the pivot columns.
struct IdealBlock {
  FpMatrix basis;   // dim x da, rows span the ideal
  FpMatrix extract; // da x dim, unit at each pivot
  std::size_t offset = 0;

  std::size_t dim() const { return basis.rows(); }
  Vec coords(const Vec& v) const { return extract.transpose().apply(v); }
};

inline IdealBlock ideal_block(const Algebra& a, const Vec& idem) {
  RrefResult r = rref(a.right_mult(idem));
  IdealBlock b;
  b.basis = FpMatrix(a.p(), r.rank, a.dim());
  b.extract = FpMatrix(a.p(), a.dim(), r.rank);
  for (std::size_t l = 0; l < r.rank; ++l) {
    b.basis.set_row(l, r.matrix.row(l));
    b.extract.at(r.pivots[l], l) = 1;
  }
  return b;
}

// The invariant subalgebra: elements with alpha_sigma(a e_{sigma^{-1}})
// equal to a e_sigma for every group element.
struct InvariantAlgebra {
  AlgebraPtr alg;                     // abstract algebra on the invariant basis
  FpMatrix incl;                      // rows embed the basis into A
  std::vector<std::size_t> unit_cols; // coordinate columns in A

  Vec coords(const Vec& a) const {
    Vec c = read_coords(unit_cols, a);
    if (incl.transpose().apply(c) != a)
      throw internal_check_failure("element is not invariant");
    return c;
  }
};

inline InvariantAlgebra invariant_algebra(const PartialAction& pa) {
  const Algebra& a = *pa.alg;
  const std::size_t da = a.dim(), n = pa.group.order;
  FpMatrix stacked(a.p(), da * n, da);
  for (std::size_t s = 0; s < n; ++s) {
    FpMatrix diff = pa.alphas[s] - a.right_mult(pa.idempotents[s]);
    for (std::size_t r = 0; r < da; ++r) stacked.set_row(s * da + r, diff.transpose().row(r));
  }
  // wrong orientation guard: rows of `stacked` must be indexed by equations
  KernelBasis k = kernel_with_cols(stacked.transpose());
  InvariantAlgebra inv;
  inv.incl = k.basis;
  inv.unit_cols = k.free_cols;
  const std::size_t d = k.basis.rows();
  std::vector<std::uint32_t> c(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = a.mul(inv.incl.row(i), inv.incl.row(j));
      Vec coords = read_coords(inv.unit_cols, prod);
      if (inv.incl.transpose().apply(coords) != prod)
        throw internal_check_failure("invariants are not closed under multiplication");
      for (std::size_t l = 0; l < d; ++l) c[(i * d + j) * d + l] = coords[l];
    }
  Vec one = read_coords(inv.unit_cols, a.one());
  if (inv.incl.transpose().apply(one) != a.one())
    throw internal_check_failure("1 is not invariant");
  inv.alg = std::make_shared<Algebra>(a.p(), d, std::move(c), std::move(one));
  return inv;
}

struct PartialContext {
  PartialAction pa;
  std::vector<IdealBlock> blocks;
  std::size_t coring_dim = 0;
  CoringPtr coring;
  Vec grouplike; // the sum of e_sigma v_sigma
  InvariantAlgebra inv;
};

inline PartialContext partial_context(const PartialAction& pa) {
  if (auto bad = pa.check(); !bad.empty()) throw axiom_error("partial action", bad.front());
  const Algebra& a = *pa.alg;
  const std::uint32_t p = a.p();
  const std::size_t da = a.dim(), n = pa.group.order;

  PartialContext ctx;
  ctx.pa = pa;
  std::size_t off = 0;
  for (std::size_t s = 0; s < n; ++s) {
    IdealBlock b = ideal_block(a, pa.idempotents[s]);
    b.offset = off;
    off += b.dim();
    ctx.blocks.push_back(std::move(b));
  }
  ctx.coring_dim = off;
  const std::size_t dc = off;

  std::vector<FpMatrix> lact, ract;
  for (std::size_t i = 0; i < da; ++i) {
    FpMatrix l(p, dc, dc), r(p, dc, dc);
    for (std::size_t s = 0; s < n; ++s) {
      const IdealBlock& b = ctx.blocks[s];
      FpMatrix lb = b.basis * a.left_mult(unit_vec(da, i)) * b.extract;
      FpMatrix rb = b.basis * a.right_mult(pa.alphas[s].row(i)) * b.extract;
      for (std::size_t x = 0; x < b.dim(); ++x)
        for (std::size_t y = 0; y < b.dim(); ++y) {
          l.at(b.offset + x, b.offset + y) = lb.at(x, y);
          r.at(b.offset + x, b.offset + y) = rb.at(x, y);
        }
    }
    lact.push_back(std::move(l));
    ract.push_back(std::move(r));
  }
  BimoduleRep cbim{pa.alg, pa.alg, dc, std::move(lact), std::move(ract)};

  TensorBimodule cc = tensor_bimodules(cbim, cbim);
  FpMatrix delta(p, dc, cc.pres.dim());
  for (std::size_t s = 0; s < n; ++s) {
    const IdealBlock& bs = ctx.blocks[s];
    for (std::size_t l = 0; l < bs.dim(); ++l) {
      Vec x = bs.basis.row(l);
      Vec big(dc * dc, 0);
      for (std::size_t t = 0; t < n; ++t) {
        const IdealBlock& bt = ctx.blocks[t];
        std::size_t rr = pa.group.mul(pa.group.inverse[t], s);
        const IdealBlock& br = ctx.blocks[rr];
        Vec c1 = bt.coords(a.mul(x, pa.idempotents[t]));
        Vec c2 = br.coords(a.mul(pa.idempotents[rr], pa.idempotents[rr]));
        for (std::size_t u = 0; u < bt.dim(); ++u) {
          if (!c1[u]) continue;
          for (std::size_t v = 0; v < br.dim(); ++v)
            if (c2[v])
              big[(bt.offset + u) * dc + br.offset + v] =
                  fp_add(p, big[(bt.offset + u) * dc + br.offset + v],
                         fp_mul(p, c1[u], c2[v]));
        }
      }
      delta.set_row(bs.offset + l, cc.pres.proj.apply(big));
    }
  }
  FpMatrix counit(p, dc, da);
  const IdealBlock& b1 = ctx.blocks[pa.group.identity];
  for (std::size_t l = 0; l < b1.dim(); ++l) counit.set_row(b1.offset + l, b1.basis.row(l));

  ctx.coring = std::make_shared<Coring>(std::move(cbim), std::move(delta), std::move(counit));
  if (auto bad = ctx.coring->check(); !bad.empty())
    throw internal_check_failure("partial action coring failed the axioms: " + bad.front());

  ctx.grouplike = Vec(dc, 0);
  for (std::size_t s = 0; s < n; ++s) {
    Vec c = ctx.blocks[s].coords(pa.idempotents[s]);
    for (std::size_t l = 0; l < ctx.blocks[s].dim(); ++l)
      ctx.grouplike[ctx.blocks[s].offset + l] = c[l];
  }
  if (!ctx.coring->is_grouplike(ctx.grouplike))
    throw internal_check_failure("the canonical element is not grouplike");

  ctx.inv = invariant_algebra(pa);
  return ctx;
}

struct GaloisMapCheck {
  std::size_t domain_dim = 0; // dim of A (x)_{A^G} A
  std::size_t target_dim = 0; // dim of the coring
  std::size_t rank = 0;
  bool bijective = false;
};

// a (x) b -> (a alpha_sigma(b e_{sigma^{-1}}))_sigma, out of the tensor
// square over the invariants.
inline GaloisMapCheck galois_map_check(const PartialContext& ctx) {
  const Algebra& a = *ctx.pa.alg;
  const std::uint32_t p = a.p();
  const std::size_t da = a.dim(), n = ctx.pa.group.order;
  const std::size_t di = ctx.inv.alg->dim();
  std::vector<FpMatrix> ract, lact;
  for (std::size_t i = 0; i < di; ++i) {
    ract.push_back(a.right_mult(ctx.inv.incl.row(i)));
    lact.push_back(a.left_mult(ctx.inv.incl.row(i)));
  }
  QuotientPresentation pres =
      balanced_tensor_presentation(*ctx.inv.alg, ract, da, lact, da);
  FpMatrix big(p, da * da, ctx.coring_dim);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Vec row(ctx.coring_dim, 0);
      for (std::size_t s = 0; s < n; ++s) {
        Vec comp = a.mul(unit_vec(da, i), ctx.pa.alphas[s].row(j));
        Vec c = ctx.blocks[s].coords(comp);
        for (std::size_t l = 0; l < ctx.blocks[s].dim(); ++l)
          row[ctx.blocks[s].offset + l] = c[l];
      }
      big.set_row(i * da + j, row);
    }
  FpMatrix eval = pres.sect * big;
  if (pres.proj * eval != big)
    throw internal_check_failure("the comparison map is not balanced over the invariants");
  GaloisMapCheck out;
  out.domain_dim = pres.dim();
  out.target_dim = ctx.coring_dim;
  out.rank = rank(eval);
  out.bijective = out.domain_dim == out.target_dim && out.rank == out.target_dim;
  return out;
}

// ---- partial descent data -------------------------------------------------------

// A family of maps rho_sigma: M -> M e_sigma, the component form of a
// coaction over the partial action coring.
struct PartialDescentDatum {
  ModuleRep module;
  std::vector<FpMatrix> rho;
};

inline std::vector<std::string> datum_violations(const PartialContext& ctx,
                                                 const PartialDescentDatum& d) {
  std::vector<std::string> bad;
  const std::size_t n = ctx.pa.group.order;
  const std::size_t dm = d.module.dim;
  if (d.module.alg != ctx.pa.alg || d.module.side != Side::Right) {
    bad.push_back("datum: module is not a right module over the acted-on algebra");
    return bad;
  }
  if (d.rho.size() != n) {
    bad.push_back("datum: one map per group element required");
    return bad;
  }
  for (const auto& m : d.rho)
    if (m.rows() != dm || m.cols() != dm) {
      bad.push_back("datum: map shape " + m.shape());
      return bad;
    }
  if (d.rho[ctx.pa.group.identity] != FpMatrix::identity(d.module.alg->p(), dm))
    bad.push_back("datum: the map at the identity is not the identity");
  for (std::size_t s = 0; s < n; ++s) {
    FpMatrix em = d.module.act_of(ctx.pa.idempotents[s]);
    FpMatrix em_inv = d.module.act_of(ctx.pa.idempotents[ctx.pa.group.inverse[s]]);
    if (d.rho[s] * em != d.rho[s])
      bad.push_back("datum: the map at group element " + std::to_string(s) +
                    " does not land in the idempotent's part");
    if (em_inv * d.rho[s] != d.rho[s])
      bad.push_back("datum: the map at group element " + std::to_string(s) +
                    " does not factor through the inverse idempotent's part");
    if (rank(d.rho[s]) != rank(em) || rank(em) != rank(em_inv))
      bad.push_back("datum: the restriction at group element " + std::to_string(s) +
                    " is not bijective");
    for (std::size_t i = 0; i < d.module.alg->dim(); ++i)
      if (d.module.act[i] * d.rho[s] !=
          d.rho[s] * d.module.act_of(ctx.pa.alphas[s].row(i))) {
        bad.push_back("datum: twisted linearity fails at group element " + std::to_string(s));
        break;
      }
  }
  return bad;
}

inline Comodule comodule_from_datum(const PartialContext& ctx, const PartialDescentDatum& d) {
  if (auto bad = datum_violations(ctx, d); !bad.empty())
    throw invalid_datum("descent datum: " + bad.front());
  auto space = make_comodule_space(ctx.coring, d.module);
  const std::uint32_t p = ctx.pa.alg->p();
  const std::size_t dm = d.module.dim, dc = ctx.coring_dim, n = ctx.pa.group.order;
  FpMatrix rho(p, dm, space->rho_cols());
  for (std::size_t r = 0; r < dm; ++r) {
    Vec big(dm * dc, 0);
    for (std::size_t s = 0; s < n; ++s) {
      Vec u = d.rho[s].row(r);
      Vec c = ctx.blocks[s].coords(ctx.pa.idempotents[s]);
      for (std::size_t t = 0; t < dm; ++t) {
        if (!u[t]) continue;
        for (std::size_t l = 0; l < ctx.blocks[s].dim(); ++l)
          if (c[l])
            big[t * dc + ctx.blocks[s].offset + l] =
                fp_add(p, big[t * dc + ctx.blocks[s].offset + l], fp_mul(p, u[t], c[l]));
      }
    }
    rho.set_row(r, space->mc.pres.proj.apply(big));
  }
  Comodule m{std::move(space), std::move(rho)};
  if (auto bad = m.check(); !bad.empty())
    throw invalid_datum("descent datum: induced coaction fails: " + bad.front());
  return m;
}

inline PartialDescentDatum datum_from_comodule(const PartialContext& ctx, const Comodule& m) {
  if (m.space->coring != ctx.coring)
    throw dimension_mismatch("datum: comodule lives over a different coring");
  if (auto bad = m.check(); !bad.empty()) throw axiom_error("comodule", bad.front());
  const std::uint32_t p = ctx.pa.alg->p();
  const std::size_t dm = m.space->dim(), dc = ctx.coring_dim, n = ctx.pa.group.order;
  FpMatrix big = m.space->lift(m.rho);
  PartialDescentDatum d;
  d.module = m.space->module;
  for (std::size_t s = 0; s < n; ++s) {
    FpMatrix rs(p, dm, dm);
    for (std::size_t r = 0; r < dm; ++r) {
      Vec row(dm, 0);
      for (std::size_t t = 0; t < dm; ++t)
        for (std::size_t l = 0; l < ctx.blocks[s].dim(); ++l) {
          std::uint32_t w = big.at(r, t * dc + ctx.blocks[s].offset + l);
          if (!w) continue;
          Vec moved = m.space->module.act_of(ctx.blocks[s].basis.row(l)).row(t);
          row = vec_add(p, row, vec_scale(p, w, moved));
        }
      rs.set_row(r, row);
    }
    d.rho[s] = std::move(rs); // placeholder; resized below
  }
  return d;
}

// The canonical datum on N (x)_{A^G} A: act on the right tensor factor.
struct InducedDatum {
  PartialDescentDatum datum;
  QuotientPresentation pres; // from the ambient N (x) A
};

inline InducedDatum induced_datum(const PartialContext& ctx, const ModuleRep& n) {
  if (n.alg != ctx.inv.alg || n.side != Side::Right)
    throw dimension_mismatch("induced datum: need a right module over the invariants");
  const Algebra& a = *ctx.pa.alg;
  const std::uint32_t p = a.p();
  std::vector<FpMatrix> alact;
  for (std::size_t i = 0; i < ctx.inv.alg->dim(); ++i)
    alact.push_back(a.left_mult(ctx.inv.incl.row(i)));
  QuotientPresentation pres =
      balanced_tensor_presentation(*ctx.inv.alg, n.act, n.dim, alact, a.dim());
  std::vector<FpMatrix> act;
  FpMatrix idn = FpMatrix::identity(p, n.dim);
  for (std::size_t i = 0; i < a.dim(); ++i)
    act.push_back(pres.induced_endo(kron(idn, a.basis_right_mult(i))));
  InducedDatum out;
  out.datum.module = ModuleRep{ctx.pa.alg, Side::Right, pres.dim(), std::move(act)};
  for (std::size_t s = 0; s < ctx.pa.group.order; ++s) {
    FpMatrix big = kron(idn, ctx.pa.alphas[s]);
    FpMatrix rho = pres.induced_endo(big);
    if (pres.proj * rho != big * pres.proj)
      throw internal_check_failure("induced datum is not balanced over the invariants");
    out.datum.rho.push_back(std::move(rho));
  }
  out.pres = std::move(pres);
  return out;
}

// ---- cohomology -----------------------------------------------------------------

struct PartialCohomology {
  Comodule m;       // the induced comodule the groups are computed on
  MapGroup h0;      // comodule automorphisms
  D1Result h1;
};

inline PartialCohomology partial_cohomology(const PartialContext& ctx, const ModuleRep& n,
                                            std::uint64_t cap) {
  InducedDatum ind = induced_datum(ctx, n);
  PartialCohomology out{comodule_from_datum(ctx, ind.datum), {}, {}};
  out.h0 = d0_group(out.m, cap);
  out.h1 = d1(out.m, cap);
  return out;
}

struct UnitsCohomology {
  UnitGroup h0;                      // units of the invariant subalgebra
  std::vector<Vec> grouplikes;       // of the attached coring
  PointedClassSet<FpMatrix> h1;      // grouplikes modulo unit conjugation
};

inline UnitsCohomology units_cohomology(const PartialContext& ctx, std::uint64_t cap) {
  UnitsCohomology out;
  out.h0 = unit_group(*ctx.inv.alg, cap);
  out.grouplikes = grouplikes(*ctx.coring, cap);
  UnitGroup au = unit_group(*ctx.pa.alg, cap);
  const std::size_t n = out.grouplikes.size();
  std::vector<FpMatrix> rows;
  std::size_t base = n;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(FpMatrix::from_rows(ctx.pa.alg->p(), ctx.coring_dim, {out.grouplikes[i]}));
    if (out.grouplikes[i] == ctx.grouplike) base = i;
  }
  if (base == n) throw internal_check_failure("the canonical grouplike is missing");
  DisjointSets ds(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& u : au.elements) {
      Vec moved = grouplike_conjugation(*ctx.coring, out.grouplikes[i], u);
      std::size_t j = n;
      for (std::size_t k = 0; k < n; ++k)
        if (out.grouplikes[k] == moved) j = k;
      if (j == n) throw internal_check_failure("conjugation left the grouplike set");
      ds.unite(i, j);
    }
  out.h1 = assemble_classes(rows, ds, base);
  return out;
}

// The multiplication isomorphism A^G (x)_{A^G} A -> A.
inline FpMatrix multiplication_iso(const PartialContext& ctx, const InducedDatum& ind) {
  const Algebra& a = *ctx.pa.alg;
  const std::size_t di = ctx.inv.alg->dim(), da = a.dim();
  FpMatrix big(a.p(), di * da, da);
  for (std::size_t r = 0; r < di; ++r)
    for (std::size_t j = 0; j < da; ++j)
      big.set_row(r * da + j, a.mul(ctx.inv.incl.row(r), unit_vec(da, j)));
  FpMatrix psi = ind.pres.sect * big;
  if (!is_invertible(psi))
    throw internal_check_failure("multiplication from the invariant tensor is not bijective");
  return psi;
}

struct CohomologyAgreement {
  PartialCohomology descent;   // on A^G (x)_{A^G} A
  UnitsCohomology units;
  bool h0_match = false;
  bool h1_match = false;
};

// The two descriptions of the cohomology of a partial action: unit groups
// and grouplike classes on one side, comodule automorphisms and descent
// classes of the regular induced module on the other.
inline CohomologyAgreement check_units_vs_descent(const PartialContext& ctx, std::uint64_t cap) {
  CohomologyAgreement out;
  ModuleRep n = free_module(ctx.inv.alg, Side::Right, 1);
  InducedDatum ind = induced_datum(ctx, n);
  out.descent.m = comodule_from_datum(ctx, ind.datum);
  out.descent.h0 = d0_group(out.descent.m, cap);
  out.descent.h1 = d1(out.descent.m, cap);
  out.units = units_cohomology(ctx, cap);

  FpMatrix psi = multiplication_iso(ctx, ind);
  auto psi_inv = invert(psi);
  if (!psi_inv) throw internal_check_failure("multiplication map lost invertibility");

  // invariant units -> comodule automorphisms, by transported left multiplication
  const Algebra& a = *ctx.pa.alg;
  out.h0_match = out.units.h0.elements.size() == out.descent.h0.elements.size();
  std::vector<std::size_t> image;
  for (const auto& u : out.units.h0.elements) {
    FpMatrix moved = psi * a.left_mult(ctx.inv.incl.transpose().apply(u)) * *psi_inv;
    std::size_t idx = out.descent.h0.elements.size();
    for (std::size_t k = 0; k < out.descent.h0.elements.size(); ++k)
      if (out.descent.h0.elements[k] == moved) idx = k;
    if (idx == out.descent.h0.elements.size()) {
      out.h0_match = false;
      break;
    }
    image.push_back(idx);
  }
  if (out.h0_match) {
    // the transport must be a group isomorphism
    const GroupTable& gu = out.units.h0.group;
    const GroupTable& gd = out.descent.h0.group;
    for (std::size_t i = 0; i < gu.order && out.h0_match; ++i)
      for (std::size_t j = 0; j < gu.order; ++j)
        if (image[gu.mul(i, j)] != gd.mul(image[i], image[j])) {
          out.h0_match = false;
          break;
        }
  }

  // grouplike classes -> descent classes, by transporting the attached coactions
  std::vector<std::size_t> class_image(out.units.h1.size(), 0);
  out.h1_match = out.units.h1.size() == out.descent.h1.classes.size();
  if (out.h1_match) {
    std::vector<bool> hit(out.descent.h1.classes.size(), false);
    for (std::size_t k = 0; k < out.units.h1.size() && out.h1_match; ++k) {
      std::optional<std::size_t> target;
      for (std::size_t i : out.units.h1.classes[k]) {
        Comodule through = coaction_from_grouplike(ctx.coring, out.units.grouplikes[i]);
        FpMatrix rho = cocycle_from_torsor(out.descent.m, Torsor{through, psi});
        std::size_t cls = out.descent.h1.classes.class_of[out.descent.h1.z.index_of(rho)];
        if (!target) target = cls;
        if (*target != cls) out.h1_match = false; // not constant on a class
      }
      class_image[k] = *target;
      if (hit[*target]) out.h1_match = false; // not injective
      hit[*target] = true;
    }
    if (out.h1_match &&
        class_image[out.units.h1.distinguished] != out.descent.h1.classes.distinguished)
      out.h1_match = false;
  }
  return out;
}

} // namespace coring
