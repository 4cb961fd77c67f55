#pragma once

// Modules and bimodules as explicit action matrices, hom spaces by solving
// intertwining equations, and the tensor product over an algebra realized as
// a quotient of the k-tensor with stored projection and section.
//
// Action matrices follow the row-vector convention: for a right module,
// m * a_i is m (a row vector) times act[i]; for a left module, a_i * m is
// m times act[i].  Hence the matrix identities checked below are
//   right: act(a_i a_j) = act[i] * act[j]
//   left:  act(a_i a_j) = act[j] * act[i]

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"

namespace coring {

enum class Side { Left, Right };

struct ModuleRep {
  AlgebraPtr alg;
  Side side = Side::Right;
  std::size_t dim = 0;
  std::vector<FpMatrix> act; // one dim x dim matrix per algebra basis element

  FpMatrix act_of(const Vec& x) const {
    FpMatrix m(alg->p(), dim, dim);
    for (std::size_t i = 0; i < alg->dim(); ++i)
      if (x[i]) m = m + act[i].scaled(x[i]);
    return m;
  }

  std::vector<std::string> check() const {
    std::vector<std::string> bad;
    if (act.size() != alg->dim()) {
      bad.push_back("module: one action matrix per algebra basis element required");
      return bad;
    }
    for (const auto& a : act)
      if (a.rows() != dim || a.cols() != dim || a.p() != alg->p()) {
        bad.push_back("module: action matrix shape mismatch");
        return bad;
      }
    if (act_of(alg->one()) != FpMatrix::identity(alg->p(), dim))
      bad.push_back("module: act(1) is not the identity");
    for (std::size_t i = 0; i < alg->dim(); ++i)
      for (std::size_t j = 0; j < alg->dim(); ++j) {
        FpMatrix expect = act_of(alg->mul(unit_vec(alg->dim(), i), unit_vec(alg->dim(), j)));
        FpMatrix got = side == Side::Right ? act[i] * act[j] : act[j] * act[i];
        if (expect != got)
          bad.push_back("module: action law fails at basis pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      }
    return bad;
  }
};

struct BimoduleRep {
  AlgebraPtr left_alg;
  AlgebraPtr right_alg;
  std::size_t dim = 0;
  std::vector<FpMatrix> lact;
  std::vector<FpMatrix> ract;

  ModuleRep left_module() const { return ModuleRep{left_alg, Side::Left, dim, lact}; }
  ModuleRep right_module() const { return ModuleRep{right_alg, Side::Right, dim, ract}; }

  FpMatrix lact_of(const Vec& x) const { return left_module().act_of(x); }
  FpMatrix ract_of(const Vec& x) const { return right_module().act_of(x); }

  std::vector<std::string> check() const {
    std::vector<std::string> bad;
    for (auto& s : left_module().check()) bad.push_back("left " + s);
    for (auto& s : right_module().check()) bad.push_back("right " + s);
    if (!bad.empty()) return bad;
    for (std::size_t i = 0; i < left_alg->dim(); ++i)
      for (std::size_t j = 0; j < right_alg->dim(); ++j)
        if (lact[i] * ract[j] != ract[j] * lact[i])
          bad.push_back("bimodule: actions do not commute at basis pair (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
    return bad;
  }
};

inline ModuleRep regular_right_module(AlgebraPtr a) {
  std::vector<FpMatrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->basis_right_mult(i));
  return ModuleRep{a, Side::Right, a->dim(), std::move(act)};
}

inline ModuleRep regular_left_module(AlgebraPtr a) {
  std::vector<FpMatrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->basis_left_mult(i));
  return ModuleRep{a, Side::Left, a->dim(), std::move(act)};
}

inline BimoduleRep regular_bimodule(AlgebraPtr a) {
  return BimoduleRep{a, a, a->dim(), regular_left_module(a).act, regular_right_module(a).act};
}

inline ModuleRep zero_module(AlgebraPtr a, Side side) {
  std::vector<FpMatrix> act(a->dim(), FpMatrix(a->p(), 0, 0));
  return ModuleRep{a, side, 0, std::move(act)};
}

inline ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
  if (m.alg != n.alg || m.side != n.side) throw dimension_mismatch("direct_sum: incompatible modules");
  std::vector<FpMatrix> act;
  for (std::size_t i = 0; i < m.alg->dim(); ++i) {
    FpMatrix blk(m.alg->p(), m.dim + n.dim, m.dim + n.dim);
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) blk.at(r, c) = m.act[i].at(r, c);
    for (std::size_t r = 0; r < n.dim; ++r)
      for (std::size_t c = 0; c < n.dim; ++c) blk.at(m.dim + r, m.dim + c) = n.act[i].at(r, c);
    act.push_back(std::move(blk));
  }
  return ModuleRep{m.alg, m.side, m.dim + n.dim, std::move(act)};
}

inline ModuleRep free_module(AlgebraPtr a, Side side, std::size_t rank) {
  ModuleRep m = zero_module(a, side);
  ModuleRep reg = side == Side::Right ? regular_right_module(a) : regular_left_module(a);
  for (std::size_t i = 0; i < rank; ++i) m = direct_sum(m, reg);
  return m;
}

// ---- quotient presentations ------------------------------------------------

struct QuotientPresentation {
  std::size_t ambient = 0;
  FpMatrix proj; // ambient x q, surjective
  FpMatrix sect; // q x ambient, with sect * proj = identity on the quotient

  std::size_t dim() const { return proj.cols(); }

  // Map induced on quotients by a map `big` between the ambients.
  FpMatrix induced(const FpMatrix& big, const QuotientPresentation& target) const {
    return sect * big * target.proj;
  }
  FpMatrix induced_endo(const FpMatrix& big) const { return sect * big * proj; }
};

inline QuotientPresentation quotient_by_rowspan(std::uint32_t p, std::size_t ambient,
                                                const FpMatrix& relations) {
  RrefResult r = rref(relations);
  std::vector<bool> is_pivot(ambient, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t q = free_cols.size();
  QuotientPresentation out;
  out.ambient = ambient;
  out.proj = FpMatrix(p, ambient, q);
  out.sect = FpMatrix(p, q, ambient);
  for (std::size_t j = 0; j < q; ++j) {
    out.proj.at(free_cols[j], j) = 1;
    out.sect.at(j, free_cols[j]) = 1;
  }
  for (std::size_t l = 0; l < r.rank; ++l)
    for (std::size_t j = 0; j < q; ++j)
      out.proj.at(r.pivots[l], j) = fp_neg(p, r.matrix.at(l, free_cols[j]));
  return out;
}

// Presentation of M (x)_R N where the right R-action on M is given by
// m_ract and the left R-action on N by n_lact (matrices per R basis element).
inline QuotientPresentation balanced_tensor_presentation(const Algebra& r,
                                                         const std::vector<FpMatrix>& m_ract,
                                                         std::size_t dim_m,
                                                         const std::vector<FpMatrix>& n_lact,
                                                         std::size_t dim_n) {
  const std::uint32_t p = r.p();
  const std::size_t ambient = dim_m * dim_n;
  FpMatrix rel(p, dim_m * r.dim() * dim_n, ambient);
  std::size_t row = 0;
  for (std::size_t i = 0; i < dim_m; ++i)
    for (std::size_t l = 0; l < r.dim(); ++l) {
      Vec ma = m_ract[l].row(i); // m_i * r_l in M coordinates
      for (std::size_t j = 0; j < dim_n; ++j) {
        Vec an = n_lact[l].row(j); // r_l * n_j in N coordinates
        // (m_i * r_l) (x) n_j  -  m_i (x) (r_l * n_j)
        for (std::size_t s = 0; s < dim_m; ++s)
          if (ma[s]) rel.at(row, s * dim_n + j) = fp_add(p, rel.at(row, s * dim_n + j), ma[s]);
        for (std::size_t t = 0; t < dim_n; ++t)
          if (an[t])
            rel.at(row, i * dim_n + t) = fp_sub(p, rel.at(row, i * dim_n + t), an[t]);
        ++row;
      }
    }
  return quotient_by_rowspan(p, ambient, rel);
}

struct TensorModule {
  ModuleRep module; // residual structure from the unused side of n
  QuotientPresentation pres;
};

// (right A-module M) (x)_A (A,B)-bimodule N  ->  right B-module.
inline TensorModule tensor_right_module(const ModuleRep& m, const BimoduleRep& n) {
  if (m.side != Side::Right || m.alg != n.left_alg)
    throw dimension_mismatch("tensor_right_module: need right A-module and (A,-)-bimodule");
  QuotientPresentation pres =
      balanced_tensor_presentation(*m.alg, m.act, m.dim, n.lact, n.dim);
  std::vector<FpMatrix> act;
  FpMatrix idm = FpMatrix::identity(m.alg->p(), m.dim);
  for (std::size_t i = 0; i < n.right_alg->dim(); ++i)
    act.push_back(pres.induced_endo(kron(idm, n.ract[i])));
  return TensorModule{ModuleRep{n.right_alg, Side::Right, pres.dim(), std::move(act)}, std::move(pres)};
}

struct TensorBimodule {
  BimoduleRep bimodule;
  QuotientPresentation pres;
};

// (L,A)-bimodule M (x)_A (A,R)-bimodule N  ->  (L,R)-bimodule.
inline TensorBimodule tensor_bimodules(const BimoduleRep& m, const BimoduleRep& n) {
  if (m.right_alg != n.left_alg)
    throw dimension_mismatch("tensor_bimodules: middle algebras differ");
  QuotientPresentation pres =
      balanced_tensor_presentation(*m.right_alg, m.ract, m.dim, n.lact, n.dim);
  const std::uint32_t p = m.right_alg->p();
  FpMatrix idm = FpMatrix::identity(p, m.dim);
  FpMatrix idn = FpMatrix::identity(p, n.dim);
  std::vector<FpMatrix> lact, ract;
  for (std::size_t i = 0; i < m.left_alg->dim(); ++i)
    lact.push_back(pres.induced_endo(kron(m.lact[i], idn)));
  for (std::size_t i = 0; i < n.right_alg->dim(); ++i)
    ract.push_back(pres.induced_endo(kron(idm, n.ract[i])));
  return TensorBimodule{
      BimoduleRep{m.left_alg, n.right_alg, pres.dim(), std::move(lact), std::move(ract)},
      std::move(pres)};
}

// Presentation of M (x)_A C (x)_A C as a single quotient of the k-triple
// tensor by both balancing relation families.
inline QuotientPresentation triple_presentation(const ModuleRep& m, const BimoduleRep& c) {
  if (m.side != Side::Right || m.alg != c.left_alg || c.left_alg != c.right_alg)
    throw dimension_mismatch("triple_presentation: need right A-module and (A,A)-bimodule");
  const Algebra& a = *m.alg;
  const std::uint32_t p = a.p();
  const std::size_t dm = m.dim, dc = c.dim;
  const std::size_t ambient = dm * dc * dc;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t l = 0; l < a.dim(); ++l) {
      Vec ma = m.act[l].row(i);
      for (std::size_t j = 0; j < dc; ++j) {
        Vec ac = c.lact[l].row(j);
        for (std::size_t k = 0; k < dc; ++k) {
          Vec rel(ambient, 0);
          for (std::size_t s = 0; s < dm; ++s)
            if (ma[s]) rel[(s * dc + j) * dc + k] = ma[s];
          for (std::size_t t = 0; t < dc; ++t)
            if (ac[t]) rel[(i * dc + t) * dc + k] = fp_sub(p, rel[(i * dc + t) * dc + k], ac[t]);
          rows.push_back(std::move(rel));
        }
      }
    }
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dc; ++j)
      for (std::size_t l = 0; l < a.dim(); ++l) {
        Vec ca = c.ract[l].row(j);
        for (std::size_t k = 0; k < dc; ++k) {
          Vec ac = c.lact[l].row(k);
          Vec rel(ambient, 0);
          for (std::size_t t = 0; t < dc; ++t)
            if (ca[t]) rel[(i * dc + t) * dc + k] = ca[t];
          for (std::size_t u = 0; u < dc; ++u)
            if (ac[u]) rel[(i * dc + j) * dc + u] = fp_sub(p, rel[(i * dc + j) * dc + u], ac[u]);
          rows.push_back(std::move(rel));
        }
      }
  return quotient_by_rowspan(p, ambient, FpMatrix::from_rows(p, ambient, rows));
}

// ---- hom spaces ------------------------------------------------------------

struct HomSpace {
  std::vector<FpMatrix> basis;        // each dim_m x dim_n
  std::vector<std::size_t> unit_cols; // positions in vec(F) reading off coordinates
};

// Linear constraints on vec(F) expressing act_M[i] * F = F * act_N[i] for
// every algebra basis element, F an m.dim x n.dim matrix read row-major.
inline FpMatrix intertwine_constraints(const ModuleRep& m, const ModuleRep& n) {
  if (m.alg != n.alg || m.side != n.side)
    throw dimension_mismatch("hom constraints: modules over different algebras or sides");
  const std::uint32_t p = m.alg->p();
  const std::size_t dm = m.dim, dn = n.dim, nd = m.alg->dim();
  FpMatrix con(p, nd * dm * dn, dm * dn);
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t r = 0; r < dm; ++r)
      for (std::size_t c = 0; c < dn; ++c) {
        std::size_t eq = (i * dm + r) * dn + c;
        for (std::size_t s = 0; s < dm; ++s)
          con.at(eq, s * dn + c) = fp_add(p, con.at(eq, s * dn + c), m.act[i].at(r, s));
        for (std::size_t t = 0; t < dn; ++t)
          con.at(eq, r * dn + t) = fp_sub(p, con.at(eq, r * dn + t), n.act[i].at(t, c));
      }
  return con;
}

inline HomSpace hom_space_from_constraints(const FpMatrix& con, std::size_t dm, std::size_t dn) {
  KernelBasis k = kernel_with_cols(con);
  const std::uint32_t p = con.p();
  HomSpace h;
  h.unit_cols = std::move(k.free_cols);
  for (std::size_t l = 0; l < k.basis.rows(); ++l) {
    FpMatrix f(p, dm, dn);
    for (std::size_t r = 0; r < dm; ++r)
      for (std::size_t c = 0; c < dn; ++c) f.at(r, c) = k.basis.at(l, r * dn + c);
    h.basis.push_back(std::move(f));
  }
  return h;
}

// Basis of A-linear maps M -> N (same side, same algebra), as the kernel of
// the intertwining system.
inline HomSpace hom_space(const ModuleRep& m, const ModuleRep& n) {
  return hom_space_from_constraints(intertwine_constraints(m, n), m.dim, n.dim);
}

inline std::vector<FpMatrix> hom_basis(const ModuleRep& m, const ModuleRep& n) {
  return hom_space(m, n).basis;
}

// All invertible elements of the span of `basis`, in coefficient sweep order.
inline std::vector<FpMatrix> invertible_span(const std::vector<FpMatrix>& basis, std::uint32_t p,
                                             std::size_t dim, std::uint64_t cap) {
  std::vector<FpMatrix> out;
  for (const auto& coeff : full_space(p, basis.size()).enumerate(cap)) {
    FpMatrix f(p, dim, dim);
    for (std::size_t l = 0; l < basis.size(); ++l)
      if (coeff[l]) f = f + basis[l].scaled(coeff[l]);
    if (is_invertible(f)) out.push_back(std::move(f));
  }
  return out;
}

struct MapGroup {
  std::vector<FpMatrix> elements;
  GroupTable group;
};

// Group structure on a closed list of invertible maps under composition
// x * y := x after y, whose matrix is mat(y) * mat(x) in the row convention.
inline MapGroup make_map_group(std::vector<FpMatrix> elements, std::uint32_t p, std::size_t dim) {
  FpMatrix id = FpMatrix::identity(p, dim);
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == id) {
      if (i != 0) {
        FpMatrix tmp = elements[i];
        elements.erase(elements.begin() + i);
        elements.insert(elements.begin(), std::move(tmp));
      }
      break;
    }
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i].data()] = i;
  MapGroup g;
  g.group = table_from_product(elements.size(), [&](std::size_t i, std::size_t j) {
    auto it = index.find((elements[j] * elements[i]).data());
    if (it == index.end()) throw internal_check_failure("composition left the element list");
    return it->second;
  });
  g.elements = std::move(elements);
  return g;
}

inline std::vector<FpMatrix> aut_elements(const ModuleRep& m, std::uint64_t cap) {
  return invertible_span(hom_basis(m, m), m.alg->p(), m.dim, cap);
}

inline MapGroup aut_group(const ModuleRep& m, std::uint64_t cap) {
  return make_map_group(aut_elements(m, cap), m.alg->p(), m.dim);
}

// ---- projectivity and isomorphism -------------------------------------------

struct DualBasisWitness {
  bool exists = false;
  // functionals[i] is the matrix of an A-linear map M -> A with
  // sum_i e_i * functionals[i](m) = m for all m; empty when !exists.
  std::vector<FpMatrix> functionals;
};

// Finite dual basis for a right module, solved as a linear system over the
// hom space Hom_A(M, A).
inline DualBasisWitness dual_basis_witness(const ModuleRep& m) {
  if (m.side != Side::Right) throw dimension_mismatch("dual_basis_witness: right modules only");
  const std::uint32_t p = m.alg->p();
  const std::size_t dm = m.dim;
  std::vector<FpMatrix> h = hom_basis(m, regular_right_module(m.alg));
  FpMatrix con(p, dm * dm, dm * h.size());
  for (std::size_t j = 0; j < dm; ++j)
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t l = 0; l < h.size(); ++l) {
        FpMatrix action = m.act_of(h[l].row(j)); // right action of xi_l(m_j)
        for (std::size_t c = 0; c < dm; ++c)
          con.at(j * dm + c, i * h.size() + l) =
              fp_add(p, con.at(j * dm + c, i * h.size() + l), action.at(i, c));
      }
  Vec rhs(dm * dm, 0);
  for (std::size_t j = 0; j < dm; ++j) rhs[j * dm + j] = 1;
  auto sol = solve_affine(con, rhs);
  DualBasisWitness w;
  if (!sol) return w;
  w.exists = true;
  Vec t = sol->point();
  for (std::size_t i = 0; i < dm; ++i) {
    FpMatrix f(p, dm, m.alg->dim());
    for (std::size_t l = 0; l < h.size(); ++l)
      if (t[i * h.size() + l]) f = f + h[l].scaled(t[i * h.size() + l]);
    w.functionals.push_back(std::move(f));
  }
  return w;
}

inline std::optional<FpMatrix> module_iso(const ModuleRep& m, const ModuleRep& n,
                                          std::uint64_t cap) {
  if (m.alg != n.alg || m.side != n.side)
    throw dimension_mismatch("module_iso: modules over different algebras or sides");
  if (m.dim != n.dim) return std::nullopt;
  // identical presentations: the identity is the canonical witness
  if (m.act == n.act) return FpMatrix::identity(m.alg->p(), m.dim);
  std::vector<FpMatrix> h = hom_basis(m, n);
  const std::uint32_t p = m.alg->p();
  for (const auto& coeff : full_space(p, h.size()).enumerate(cap)) {
    FpMatrix f(p, m.dim, n.dim);
    for (std::size_t l = 0; l < h.size(); ++l)
      if (coeff[l]) f = f + h[l].scaled(coeff[l]);
    if (is_invertible(f)) return f;
  }
  return std::nullopt;
}

// Coordinates of v with respect to a kernel-style basis whose row j is 1 at
// unit_cols[j] and 0 at the other unit columns.
inline Vec read_coords(const std::vector<std::size_t>& unit_cols, const Vec& v) {
  Vec c(unit_cols.size());
  for (std::size_t j = 0; j < unit_cols.size(); ++j) c[j] = v[unit_cols[j]];
  return c;
}

} // namespace coring
