#include <catch2/catch_amalgamated.hpp>

#include "coring/module.hpp"

using namespace coring;

namespace {

AlgebraPtr product_field(std::uint32_t p) {
  std::vector<std::uint32_t> c(8, 0);
  c[0] = 1;         // a_0 a_0 = a_0
  c[(1 * 2 + 1) * 2 + 1] = 1;
  return std::make_shared<Algebra>(p, 2, c, Vec{1, 1});
}

AlgebraPtr f4() {
  std::vector<std::uint32_t> c(8, 0);
  auto set = [&](std::size_t i, std::size_t j, Vec v) {
    c[(i * 2 + j) * 2 + 0] = v[0];
    c[(i * 2 + j) * 2 + 1] = v[1];
  };
  set(0, 0, {1, 0});
  set(0, 1, {0, 1});
  set(1, 0, {0, 1});
  set(1, 1, {1, 1});
  return std::make_shared<Algebra>(2, 2, c, Vec{1, 0});
}

// F_2[x]/(x^2), basis {1, x}.
AlgebraPtr dual_numbers() {
  std::vector<std::uint32_t> c(8, 0);
  c[(0 * 2 + 0) * 2 + 0] = 1;
  c[(0 * 2 + 1) * 2 + 1] = 1;
  c[(1 * 2 + 0) * 2 + 1] = 1;
  return std::make_shared<Algebra>(2, 2, c, Vec{1, 0});
}

// The simple right module where the idempotent a_i acts as 1 and the other
// as 0.
ModuleRep simple_summand(AlgebraPtr a, std::size_t which) {
  std::vector<FpMatrix> act{FpMatrix(a->p(), 1, 1), FpMatrix(a->p(), 1, 1)};
  act[which].at(0, 0) = 1;
  return ModuleRep{a, Side::Right, 1, act};
}

bool dual_basis_identity_holds(const ModuleRep& m, const DualBasisWitness& w) {
  // sum_i e_i * xi_i(m_j) = m_j for every basis vector of M
  for (std::size_t j = 0; j < m.dim; ++j) {
    Vec total(m.dim, 0);
    for (std::size_t i = 0; i < m.dim; ++i) {
      Vec xi = w.functionals[i].row(j);
      Vec term = m.act_of(xi).row(i);
      total = vec_add(m.alg->p(), total, term);
    }
    if (total != unit_vec(m.dim, j)) return false;
  }
  return true;
}

} // namespace

TEST_CASE("module axiom checker") {
  CHECK(regular_right_module(f4()).check().empty());
  CHECK(regular_left_module(f4()).check().empty());
  CHECK(regular_bimodule(product_field(2)).check().empty());
  CHECK(simple_summand(product_field(2), 0).check().empty());

  SECTION("act(1) != identity is reported") {
    auto m = regular_right_module(product_field(2));
    m.act[0] = FpMatrix(2, 2, 2);
    auto bad = m.check();
    REQUIRE_FALSE(bad.empty());
    CHECK(bad.front().find("act(1)") != std::string::npos);
  }
}

TEST_CASE("tensor over A collapses to the expected dimension") {
  SECTION("A (x)_A A has dim A, and multiplication is the isomorphism") {
    for (auto a : {product_field(2), f4(), dual_numbers()}) {
      auto t = tensor_bimodules(regular_bimodule(a), regular_bimodule(a));
      CHECK(t.pres.dim() == a->dim());
      CHECK(t.bimodule.check().empty());
      // big matrix of (x,y) |-> xy on the ambient k-tensor
      FpMatrix big(a->p(), a->dim() * a->dim(), a->dim());
      for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < a->dim(); ++j)
          big.set_row(i * a->dim() + j, a->mul(unit_vec(a->dim(), i), unit_vec(a->dim(), j)));
      // constant on cosets, and induces an isomorphism on the quotient
      CHECK(t.pres.proj * (t.pres.sect * big) == big);
      CHECK(is_invertible(t.pres.sect * big));
    }
  }
  SECTION("M (x)_A A = M for modules and the k-tensor dimension drops") {
    auto a = product_field(2);
    auto m = simple_summand(a, 0);
    auto t = tensor_right_module(m, regular_bimodule(a));
    CHECK(t.pres.ambient == 2); // 1 x 2 ambient k-tensor
    CHECK(t.pres.dim() == 1);
    CHECK(t.module.check().empty());
    auto t2 = tensor_bimodules(regular_bimodule(a), regular_bimodule(a));
    CHECK(t2.pres.ambient == 4);
    CHECK(t2.pres.dim() == 2);
  }
  SECTION("balancing relations die in the quotient") {
    auto a = f4();
    auto m = regular_right_module(a);
    auto n = regular_bimodule(a);
    auto t = tensor_right_module(m, n);
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t l = 0; l < a->dim(); ++l)
        for (std::size_t j = 0; j < n.dim; ++j) {
          Vec lhs = kron_vec(a->p(), m.act[l].row(i), unit_vec(n.dim, j));
          Vec rhs = kron_vec(a->p(), unit_vec(m.dim, i), n.lact[l].row(j));
          CHECK(t.pres.proj.apply(lhs) == t.pres.proj.apply(rhs));
        }
  }
  SECTION("section splits the projection") {
    auto a = f4();
    auto t = tensor_bimodules(regular_bimodule(a), regular_bimodule(a));
    CHECK(t.pres.sect * t.pres.proj == FpMatrix::identity(2, t.pres.dim()));
  }
}

TEST_CASE("hom spaces solve the intertwining equations") {
  SECTION("End_A(A) for A = F_4 is 2-dimensional and spanned by left multiplications") {
    auto a = f4();
    auto h = hom_basis(regular_right_module(a), regular_right_module(a));
    CHECK(h.size() == 2);
    // every basis map is a left multiplication, and both left mults appear
    std::vector<Vec> flat;
    for (const auto& f : h) flat.push_back(f.data());
    FpMatrix span_h = FpMatrix::from_rows(2, 4, flat);
    std::vector<Vec> lm;
    for (std::size_t i = 0; i < 2; ++i) lm.push_back(a->basis_left_mult(i).data());
    FpMatrix span_l = FpMatrix::from_rows(2, 4, lm);
    CHECK(rank(span_h) == 2);
    CHECK(rank(span_l) == 2);
    CHECK(rank(vstack(span_h, span_l)) == 2);
  }
  SECTION("maps into the zero module") {
    auto a = f4();
    CHECK(hom_basis(regular_right_module(a), zero_module(a, Side::Right)).empty());
  }
  SECTION("the two simple summands admit no nonzero maps") {
    auto a = product_field(2);
    CHECK(hom_basis(simple_summand(a, 0), simple_summand(a, 1)).empty());
  }
  SECTION("hom basis elements intertwine exactly") {
    auto a = dual_numbers();
    auto m = free_module(a, Side::Right, 2);
    for (const auto& f : hom_basis(m, regular_right_module(a)))
      for (std::size_t i = 0; i < a->dim(); ++i)
        CHECK(m.act[i] * f == f * regular_right_module(a).act[i]);
  }
}

TEST_CASE("automorphism groups") {
  SECTION("M = A = F_2 gives the trivial group") {
    auto g = aut_group(regular_right_module(field_algebra(2)), 1 << 10);
    CHECK(g.elements.size() == 1);
  }
  SECTION("M = A = F_4 gives a group of order 3 with identity first") {
    auto g = aut_group(regular_right_module(f4()), 1 << 10);
    CHECK(g.elements.size() == 3);
    CHECK(g.elements[0] == FpMatrix::identity(2, 2));
    CHECK(g.group.identity == 0);
    CHECK(g.group.check().empty());
  }
  SECTION("M = A = F_2 x F_2 gives order 1") {
    CHECK(aut_group(regular_right_module(product_field(2)), 1 << 10).elements.size() == 1);
  }
  SECTION("GL_2(F_2) appears as aut of the free rank-2 module over F_2") {
    auto g = aut_group(free_module(field_algebra(2), Side::Right, 2), 1 << 10);
    CHECK(g.elements.size() == 6);
    CHECK(g.group.check().empty());
  }
}

TEST_CASE("dual basis witnesses") {
  SECTION("free modules are projective") {
    auto a = f4();
    for (std::size_t n = 0; n <= 3; ++n) {
      auto m = free_module(a, Side::Right, n);
      auto w = dual_basis_witness(m);
      REQUIRE(w.exists);
      CHECK(dual_basis_identity_holds(m, w));
    }
  }
  SECTION("a ring direct factor is projective") {
    auto a = product_field(2);
    auto m = simple_summand(a, 0);
    auto w = dual_basis_witness(m);
    REQUIRE(w.exists);
    CHECK(dual_basis_identity_holds(m, w));
  }
  SECTION("k over the dual numbers with x acting as 0 is not projective") {
    auto a = dual_numbers();
    std::vector<FpMatrix> act{FpMatrix::identity(2, 1), FpMatrix(2, 1, 1)};
    ModuleRep m{a, Side::Right, 1, act};
    REQUIRE(m.check().empty());
    CHECK_FALSE(dual_basis_witness(m).exists);
  }
}

TEST_CASE("module isomorphism search") {
  auto a = product_field(2);
  SECTION("a module is isomorphic to itself via the identity") {
    auto m = regular_right_module(a);
    auto iso = module_iso(m, m, 1 << 10);
    REQUIRE(iso.has_value());
    CHECK(*iso == FpMatrix::identity(2, 2));
  }
  SECTION("dimension mismatch yields none") {
    CHECK_FALSE(module_iso(regular_right_module(a), simple_summand(a, 0), 1 << 10).has_value());
  }
  SECTION("the two simple summands are not isomorphic") {
    CHECK_FALSE(module_iso(simple_summand(a, 0), simple_summand(a, 1), 1 << 10).has_value());
  }
  SECTION("a permuted copy of a free module is isomorphic to it") {
    auto m = free_module(a, Side::Right, 2);
    // conjugate every action by a basis swap of the 4-dim space
    FpMatrix perm(2, 4, 4);
    perm.at(0, 2) = perm.at(1, 3) = perm.at(2, 0) = perm.at(3, 1) = 1;
    auto permuted = m;
    auto perm_inv = *invert(perm);
    for (auto& act : permuted.act) act = perm * act * perm_inv;
    REQUIRE(permuted.check().empty());
    auto iso = module_iso(m, permuted, 1 << 10);
    REQUIRE(iso.has_value());
    for (std::size_t i = 0; i < 2; ++i) CHECK(m.act[i] * *iso == *iso * permuted.act[i]);
    CHECK(is_invertible(*iso));
  }
}
