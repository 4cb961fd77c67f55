#pragma once

// Descent cohomology of a comodule: the set Z1 of all coactions on the
// underlying module pointed by the given one, the module automorphism group
// acting on it, the quotient D1, and its two independent descriptions via
// torsors and via twisted forms of a Galois comodule.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "comodule.hpp"
#include "pointed.hpp"

namespace coring {

struct Z1Set {
  ComoduleSpacePtr space;
  FpMatrix base;
  std::vector<FpMatrix> elements; // every coaction, in enumeration order
  std::size_t base_index = 0;

  std::size_t index_of(const FpMatrix& f) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == f) return i;
    throw internal_check_failure("coaction expected in Z1 is missing");
  }
};

// All coactions on the underlying module of m.  Linearity and the counit law
// cut out an affine subspace; coassociativity is a quadratic filter over it.
inline Z1Set z1(const Comodule& m, std::uint64_t cap) {
  const ComoduleSpace& s = *m.space;
  if (auto bad = m.check(); !bad.empty())
    throw axiom_error("base coaction", bad.front());
  const std::uint32_t p = s.p();
  const std::size_t dm = s.dim(), q = s.rho_cols();

  FpMatrix lin = intertwine_constraints(s.module, s.mc.module);
  FpMatrix k = s.mc.pres.sect * s.counit_eval; // q x dm
  FpMatrix counit_rows(p, dm * dm, dm * q);
  for (std::size_t r = 0; r < dm; ++r)
    for (std::size_t c = 0; c < dm; ++c)
      for (std::size_t qq = 0; qq < q; ++qq)
        counit_rows.at(r * dm + c, r * q + qq) = k.at(qq, c);
  Vec rhs(lin.rows() + dm * dm, 0);
  for (std::size_t r = 0; r < dm; ++r) rhs[lin.rows() + r * dm + r] = 1;

  auto sol = solve_affine(vstack(lin, counit_rows), rhs);
  if (!sol) throw internal_check_failure("Z1 solution space misses the base coaction");
  Z1Set out;
  out.space = m.space;
  out.base = m.rho;
  for (const Vec& v : sol->enumerate(cap)) {
    FpMatrix f = unvec(p, dm, q, v);
    if (is_coassociative(s, f)) out.elements.push_back(std::move(f));
  }
  out.base_index = out.index_of(m.rho);
  return out;
}

// The right action of a module automorphism f on a coaction:
// f n F = (f^{-1} (x) C) after F after f.
inline FpMatrix star_action(const ComoduleSpace& s, const FpMatrix& f, const FpMatrix& rho) {
  auto finv = invert(f);
  if (!finv) throw not_an_automorphism("star action: the acting map is not invertible");
  FpMatrix idc = FpMatrix::identity(s.p(), s.coring->dim());
  return f * rho * s.mc.pres.sect * kron(*finv, idc) * s.mc.pres.proj;
}

struct D1Result {
  Z1Set z;
  std::vector<FpMatrix> auts; // the acting module automorphisms
  PointedClassSet<FpMatrix> classes;
};

inline D1Result d1(const Comodule& m, std::uint64_t cap) {
  D1Result out;
  out.z = z1(m, cap);
  out.auts = aut_elements(m.space->module, cap);
  const ComoduleSpace& s = *m.space;
  const FpMatrix& sect = s.mc.pres.sect;
  const FpMatrix& proj = s.mc.pres.proj;
  FpMatrix idc = FpMatrix::identity(s.p(), s.coring->dim());

  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < out.z.elements.size(); ++i) index[out.z.elements[i].data()] = i;
  DisjointSets ds(out.z.elements.size());
  for (const FpMatrix& f : out.auts) {
    auto finv = invert(f);
    if (!finv) throw internal_check_failure("non-invertible automorphism");
    FpMatrix transfer = sect * kron(*finv, idc) * proj; // fixed right factor of the action
    for (std::size_t i = 0; i < out.z.elements.size(); ++i) {
      FpMatrix moved = f * out.z.elements[i] * transfer;
      auto it = index.find(moved.data());
      if (it == index.end())
        throw internal_check_failure("the star action left the cocycle set");
      ds.unite(i, it->second);
    }
  }
  out.classes = assemble_classes(out.z.elements, ds, out.z.base_index);
  return out;
}

// ---- torsors -----------------------------------------------------------------

// A torsor over the base comodule M: a comodule X together with a module
// isomorphism beta: M -> X.
struct Torsor {
  Comodule x;
  FpMatrix beta;
};

inline std::vector<std::string> torsor_violations(const Comodule& base, const Torsor& t) {
  std::vector<std::string> bad = t.x.check();
  const ModuleRep& m = base.space->module;
  const ModuleRep& xm = t.x.space->module;
  if (base.space->coring != t.x.space->coring) bad.push_back("torsor: different corings");
  if (t.beta.rows() != m.dim || t.beta.cols() != xm.dim) {
    bad.push_back("torsor: trivializing map has shape " + t.beta.shape());
    return bad;
  }
  if (!is_invertible(t.beta)) bad.push_back("torsor: trivializing map is not invertible");
  for (std::size_t i = 0; i < m.alg->dim(); ++i)
    if (m.act[i] * t.beta != t.beta * xm.act[i]) {
      bad.push_back("torsor: trivializing map is not A-linear");
      break;
    }
  return bad;
}

inline Torsor torsor_from_cocycle(const Comodule& base, const FpMatrix& rho) {
  if (auto bad = coaction_violations(*base.space, rho); !bad.empty())
    throw axiom_error("cocycle", bad.front());
  return Torsor{Comodule{base.space, rho},
                FpMatrix::identity(base.space->p(), base.space->dim())};
}

// Transport of the torsor's coaction back onto the base module along beta.
inline FpMatrix cocycle_from_torsor(const Comodule& base, const Torsor& t) {
  if (auto bad = torsor_violations(base, t); !bad.empty())
    throw axiom_error("torsor", bad.front());
  auto binv = invert(t.beta);
  if (!binv) throw not_an_automorphism("torsor: trivializing map is not invertible");
  FpMatrix idc = FpMatrix::identity(base.space->p(), base.space->coring->dim());
  FpMatrix rho = t.beta * t.x.rho * t.x.space->mc.pres.sect * kron(*binv, idc) *
                 base.space->mc.pres.proj;
  if (auto bad = coaction_violations(*base.space, rho); !bad.empty())
    throw internal_check_failure("transported coaction failed the axioms: " + bad.front());
  return rho;
}

// Independent classification: group the cocycles by comodule isomorphism of
// the pairs (M, F) rather than by the star action orbits.
inline PointedClassSet<FpMatrix> classify_torsors(const Comodule& m, std::uint64_t cap) {
  Z1Set z = z1(m, cap);
  const std::size_t n = z.elements.size();
  DisjointSets ds(n);
  std::vector<std::size_t> rep_indices;
  for (std::size_t i = 0; i < n; ++i) {
    Comodule xi{z.space, z.elements[i]};
    bool placed = false;
    for (std::size_t r : rep_indices) {
      if (comodule_iso(Comodule{z.space, z.elements[r]}, xi, cap)) {
        ds.unite(i, r);
        placed = true;
        break;
      }
    }
    if (!placed) rep_indices.push_back(i);
  }
  return assemble_classes(z.elements, ds, z.base_index);
}

// ---- Galois comodules and twisted forms ---------------------------------------

// C as a right comodule over itself via the coproduct.
inline Comodule regular_comodule(CoringPtr c) {
  auto s = make_comodule_space(c, c->bimod().right_module());
  return Comodule{std::move(s), c->delta()};
}

// Hom^C(Sigma, X) as a right module over B = End(Sigma), acting by
// precomposition.
inline ModuleRep hom_as_right_module(const EndAlgebra& b, const HomSpace& h) {
  const std::uint32_t p = b.alg->p();
  const std::size_t d = h.basis.size();
  std::vector<FpMatrix> act;
  for (std::size_t i = 0; i < b.alg->dim(); ++i) {
    FpMatrix m(p, d, d);
    for (std::size_t l = 0; l < d; ++l) {
      FpMatrix comp = b.maps.basis[i] * h.basis[l];
      Vec coords = read_coords(h.unit_cols, Vec(comp.data().begin(), comp.data().end()));
      FpMatrix back(p, comp.rows(), comp.cols());
      for (std::size_t t = 0; t < d; ++t)
        if (coords[t]) back = back + h.basis[t].scaled(coords[t]);
      if (back != comp)
        throw internal_check_failure("precomposition left the hom space");
      m.set_row(l, coords);
    }
    act.push_back(std::move(m));
  }
  return ModuleRep{b.alg, Side::Right, d, std::move(act)};
}

struct GaloisContext {
  CoringPtr coring;
  Comodule sigma;
  EndAlgebra end;          // B with its realization as comodule endomorphisms
  BimoduleRep sigma_bimod; // Sigma as a (B, A)-bimodule
  Comodule regular;        // C over itself
  HomSpace hom_to_coring;  // Hom^C(Sigma, C)
  ModuleRep hom_module;    // the same as a right B-module
};

inline GaloisContext galois_context(const Comodule& sigma) {
  if (auto bad = sigma.check(); !bad.empty()) throw axiom_error("comodule", bad.front());
  GaloisContext g;
  g.coring = sigma.space->coring;
  g.sigma = sigma;
  g.end = end_comodule_algebra(sigma);
  g.sigma_bimod = BimoduleRep{g.end.alg, sigma.space->module.alg, sigma.space->dim(),
                              g.end.maps.basis, sigma.space->module.act};
  g.regular = regular_comodule(g.coring);
  g.hom_to_coring = comodule_hom(sigma, g.regular);
  g.hom_module = hom_as_right_module(g.end, g.hom_to_coring);
  return g;
}

struct GaloisCheck {
  bool fgp = false;
  std::size_t domain_dim = 0; // dim of Hom^C(Sigma, C) (x)_B Sigma
  std::size_t coring_dim = 0;
  std::size_t rank = 0;       // rank of the evaluation map
  bool eval_bijective = false;

  bool verdict() const { return fgp && eval_bijective; }
};

// The Galois condition: Sigma finitely generated projective over A and the
// evaluation map Hom^C(Sigma, C) (x)_B Sigma -> C bijective.
inline GaloisCheck is_galois_comodule(const GaloisContext& g) {
  GaloisCheck out;
  out.fgp = dual_basis_witness(g.sigma.space->module).exists;
  out.coring_dim = g.coring->dim();
  const std::uint32_t p = g.coring->p();
  const std::size_t dm = g.sigma.space->dim();
  const std::size_t dq = g.hom_module.dim;

  QuotientPresentation pres = balanced_tensor_presentation(
      *g.end.alg, g.hom_module.act, dq, g.end.maps.basis, dm);
  FpMatrix big(p, dq * dm, out.coring_dim);
  for (std::size_t l = 0; l < dq; ++l)
    for (std::size_t s = 0; s < dm; ++s)
      big.set_row(l * dm + s, g.hom_to_coring.basis[l].row(s));
  FpMatrix eval = pres.sect * big;
  if (pres.proj * eval != big)
    throw internal_check_failure("evaluation is not balanced over B");
  out.domain_dim = pres.dim();
  out.rank = rank(eval);
  out.eval_bijective = out.domain_dim == out.coring_dim && out.rank == out.coring_dim;
  return out;
}

struct InducedComodule {
  Comodule m;                // N (x)_B Sigma with the canonical coaction
  QuotientPresentation pres; // from the ambient N (x) Sigma
};

inline InducedComodule induced_comodule(const GaloisContext& g, const ModuleRep& n) {
  if (n.alg != g.end.alg || n.side != Side::Right)
    throw dimension_mismatch("induced comodule: need a right module over End(Sigma)");
  TensorModule t = tensor_right_module(n, g.sigma_bimod);
  auto space = make_comodule_space(g.coring, t.module);
  const std::uint32_t p = g.coring->p();
  FpMatrix idn = FpMatrix::identity(p, n.dim);
  FpMatrix idc = FpMatrix::identity(p, g.coring->dim());
  FpMatrix big = kron(idn, g.sigma.space->lift(g.sigma.rho)) * kron(t.pres.proj, idc) *
                 space->mc.pres.proj;
  FpMatrix rho = t.pres.sect * big;
  if (t.pres.proj * rho != big)
    throw internal_check_failure("induced coaction is not balanced over B");
  Comodule m{std::move(space), std::move(rho)};
  if (auto bad = m.check(); !bad.empty())
    throw internal_check_failure("induced coaction failed the axioms: " + bad.front());
  return InducedComodule{std::move(m), std::move(t.pres)};
}

// ---- twisted forms -------------------------------------------------------------

// Every right B-module structure on k-vector spaces of dimension <= dim_cap,
// in a canonical order: dimensions ascending, then the affine enumeration of
// the unit-law solutions filtered by multiplicativity.
inline std::vector<ModuleRep> enumerate_right_modules(AlgebraPtr b, std::size_t dim_cap,
                                                      std::uint64_t cap) {
  const std::uint32_t p = b->p();
  const std::size_t db = b->dim();
  std::vector<ModuleRep> out;
  for (std::size_t d = 0; d <= dim_cap; ++d) {
    if (d == 0) {
      out.push_back(zero_module(b, Side::Right));
      continue;
    }
    // unknowns: db matrices of size d x d, row-major; unit law is affine
    FpMatrix con(p, d * d, db * d * d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t i = 0; i < db; ++i)
          if (b->one()[i]) con.at(r * d + c, (i * d + r) * d + c) = b->one()[i];
    Vec rhs(d * d, 0);
    for (std::size_t r = 0; r < d; ++r) rhs[r * d + r] = 1;
    auto sol = solve_affine(con, rhs);
    if (!sol) continue;
    for (const Vec& v : sol->enumerate(cap)) {
      std::vector<FpMatrix> act;
      for (std::size_t i = 0; i < db; ++i)
        act.push_back(unvec(p, d, d, Vec(v.begin() + i * d * d, v.begin() + (i + 1) * d * d)));
      ModuleRep m{b, Side::Right, d, std::move(act)};
      if (m.check().empty()) out.push_back(std::move(m));
    }
  }
  return out;
}

inline FpMatrix module_key(const ModuleRep& m) {
  FpMatrix key(m.alg->p(), m.alg->dim() * m.dim, m.dim);
  for (std::size_t i = 0; i < m.alg->dim(); ++i)
    for (std::size_t r = 0; r < m.dim; ++r) key.set_row(i * m.dim + r, m.act[i].row(r));
  return key;
}

struct TwistClasses {
  std::vector<ModuleRep> elements; // structures with P (x)_B Sigma iso to N (x)_B Sigma
  PointedClassSet<FpMatrix> classes;
  std::vector<ModuleRep> module_reps; // module realizing each class representative
  std::size_t dim_cap = 0;
};

// Isomorphism classes of right B-modules P with P (x)_B Sigma isomorphic to
// N (x)_B Sigma over A, pointed by the class of N.
inline TwistClasses twist_classes(const GaloisContext& g, const ModuleRep& n, std::uint64_t cap,
                                  std::optional<std::size_t> dim_cap = std::nullopt) {
  TwistClasses out;
  out.dim_cap = dim_cap.value_or(n.dim + g.sigma.space->dim());
  ModuleRep base_tensor = tensor_right_module(n, g.sigma_bimod).module;

  std::optional<std::size_t> base_index;
  for (auto& cand : enumerate_right_modules(g.end.alg, out.dim_cap, cap)) {
    ModuleRep tensored = tensor_right_module(cand, g.sigma_bimod).module;
    if (!module_iso(tensored, base_tensor, cap)) continue;
    if (!base_index && cand.dim == n.dim && cand.act == n.act)
      base_index = out.elements.size();
    out.elements.push_back(std::move(cand));
  }
  if (!base_index) throw internal_check_failure("N itself is missing from its twist classes");

  const std::size_t m = out.elements.size();
  DisjointSets ds(m);
  std::vector<std::size_t> rep_indices;
  for (std::size_t i = 0; i < m; ++i) {
    bool placed = false;
    for (std::size_t r : rep_indices)
      if (module_iso(out.elements[i], out.elements[r], cap)) {
        ds.unite(i, r);
        placed = true;
        break;
      }
    if (!placed) rep_indices.push_back(i);
  }
  std::vector<FpMatrix> keys;
  for (const auto& e : out.elements) keys.push_back(module_key(e));
  out.classes = assemble_classes(keys, ds, *base_index);
  for (std::size_t k = 0; k < out.classes.size(); ++k) {
    std::size_t best = out.classes.classes[k].front();
    for (std::size_t i : out.classes.classes[k])
      if (lex_less(keys[i], keys[best])) best = i;
    out.module_reps.push_back(out.elements[best]);
  }
  return out;
}

// ---- the descent / twist comparison --------------------------------------------

struct UnitMapCheck {
  std::string label;
  std::size_t module_dim = 0;
  std::size_t hom_dim = 0;
  bool bijective = false;
};

// The unit of the Hom/tensor adjunction at P: p -> (x -> p (x) x), a map
// P -> Hom^C(Sigma, P (x)_B Sigma).  Its bijectivity for every module in
// sight is the finiteness hypothesis under which the comparison is exact.
inline UnitMapCheck unit_map_check(const GaloisContext& g, const ModuleRep& p_mod,
                                   const std::string& label) {
  InducedComodule ind = induced_comodule(g, p_mod);
  HomSpace w = comodule_hom(g.sigma, ind.m);
  const std::uint32_t p = g.coring->p();
  const std::size_t dm = g.sigma.space->dim();
  UnitMapCheck out;
  out.label = label;
  out.module_dim = p_mod.dim;
  out.hom_dim = w.basis.size();
  FpMatrix u(p, p_mod.dim, w.basis.size());
  for (std::size_t i = 0; i < p_mod.dim; ++i) {
    FpMatrix f(p, dm, ind.m.rho.rows());
    for (std::size_t s = 0; s < dm; ++s) f.set_row(s, ind.pres.proj.row(i * dm + s));
    Vec coords = read_coords(w.unit_cols, Vec(f.data().begin(), f.data().end()));
    FpMatrix back(p, f.rows(), f.cols());
    for (std::size_t t = 0; t < w.basis.size(); ++t)
      if (coords[t]) back = back + w.basis[t].scaled(coords[t]);
    if (back != f) throw internal_check_failure("unit map left the hom space at " + label);
    u.set_row(i, coords);
  }
  out.bijective = out.module_dim == out.hom_dim && is_invertible(u);
  return out;
}

struct DescentTwistReport {
  GaloisCheck galois;
  std::size_t d1_size = 0;
  std::size_t twist_size = 0;
  std::size_t dim_cap = 0;
  std::vector<std::size_t> forward;  // cohomology class -> twist class
  std::vector<std::size_t> backward; // twist class -> cohomology class
  std::vector<UnitMapCheck> unit_maps;
  D1Result cohomology;
  TwistClasses twists;
};

// Verify that taking Hom^C(Sigma, -) and inducing along Sigma are mutually
// inverse pointed bijections between D1 of the induced comodule and the
// twisted forms of N.  Throws not_galois / bijection_failure when a
// hypothesis or the conclusion fails; a returned report is a verified one.
inline DescentTwistReport verify_descent_twist(const GaloisContext& g, const ModuleRep& n,
                                               std::uint64_t cap,
                                               std::optional<std::size_t> dim_cap = std::nullopt) {
  DescentTwistReport rep;
  rep.galois = is_galois_comodule(g);
  if (!rep.galois.verdict())
    throw not_galois("the comodule is not Galois: evaluation is " +
                     std::to_string(rep.galois.rank) + " of " +
                     std::to_string(rep.galois.coring_dim) +
                     (rep.galois.fgp ? "" : ", and the module is not projective"));

  InducedComodule ind = induced_comodule(g, n);
  rep.cohomology = d1(ind.m, cap);
  rep.twists = twist_classes(g, n, cap, dim_cap);
  rep.d1_size = rep.cohomology.classes.size();
  rep.twist_size = rep.twists.classes.size();
  rep.dim_cap = rep.twists.dim_cap;

  rep.unit_maps.push_back(unit_map_check(g, n, "N"));
  if (!rep.unit_maps.back().bijective)
    throw bijection_failure("unit map of N is not bijective");
  for (std::size_t j = 0; j < rep.twists.module_reps.size(); ++j) {
    rep.unit_maps.push_back(
        unit_map_check(g, rep.twists.module_reps[j], "twist class " + std::to_string(j)));
    if (!rep.unit_maps.back().bijective)
      throw bijection_failure("unit map of twist class " + std::to_string(j) +
                              " is not bijective");
  }

  // forward: each cohomology class goes to the twisted form Hom^C(Sigma, (M, F))
  for (std::size_t k = 0; k < rep.d1_size; ++k) {
    Comodule twisted{ind.m.space, rep.cohomology.classes.reps[k]};
    HomSpace h = comodule_hom(g.sigma, twisted);
    ModuleRep p_f = hom_as_right_module(g.end, h);
    rep.unit_maps.push_back(
        unit_map_check(g, p_f, "sections of cohomology class " + std::to_string(k)));
    if (!rep.unit_maps.back().bijective)
      throw bijection_failure("unit map of the sections of cohomology class " +
                              std::to_string(k) + " is not bijective");
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < rep.twist_size; ++j)
      if (module_iso(p_f, rep.twists.module_reps[j], cap)) {
        hit = j;
        break;
      }
    if (!hit)
      throw bijection_failure("sections of cohomology class " + std::to_string(k) +
                              " match no twisted form (dimension cap " +
                              std::to_string(rep.dim_cap) + ")");
    rep.forward.push_back(*hit);
  }

  // backward: induce each twisted form and transport its coaction onto M
  for (std::size_t j = 0; j < rep.twist_size; ++j) {
    InducedComodule indp = induced_comodule(g, rep.twists.module_reps[j]);
    auto beta = module_iso(ind.m.space->module, indp.m.space->module, cap);
    if (!beta)
      throw bijection_failure("twist class " + std::to_string(j) +
                              " does not induce a module isomorphic to the base");
    FpMatrix rho = cocycle_from_torsor(ind.m, Torsor{indp.m, *beta});
    rep.backward.push_back(rep.cohomology.classes.class_of[rep.cohomology.z.index_of(rho)]);
  }

  if (rep.d1_size != rep.twist_size)
    throw bijection_failure("cohomology found " + std::to_string(rep.d1_size) +
                            " classes but there are " + std::to_string(rep.twist_size) +
                            " twisted forms");
  for (std::size_t k = 0; k < rep.d1_size; ++k)
    if (rep.backward[rep.forward[k]] != k)
      throw bijection_failure("the two directions are not mutually inverse");
  for (std::size_t j = 0; j < rep.twist_size; ++j)
    if (rep.forward[rep.backward[j]] != j)
      throw bijection_failure("the two directions are not mutually inverse");
  if (rep.forward[rep.cohomology.classes.distinguished] != rep.twists.classes.distinguished)
    throw bijection_failure("the distinguished classes do not correspond");
  return rep;
}

} // namespace coring
