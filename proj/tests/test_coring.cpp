#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <coring/coring.hpp>

using namespace coring;

namespace {

AlgebraPtr f2() { return field_algebra(2); }

AlgebraPtr f4() {
  // basis {1, x}, x^2 = x + 1
  std::vector<std::uint32_t> c = {
      1, 0, 0, 1,
      0, 1, 1, 1};
  return std::make_shared<Algebra>(2, 2, c, Vec{1, 0});
}

AlgebraPtr product_field(std::uint32_t p) {
  std::vector<std::uint32_t> c(8, 0);
  c[(0 * 2 + 0) * 2 + 0] = 1;
  c[(1 * 2 + 1) * 2 + 1] = 1;
  return std::make_shared<Algebra>(p, 2, c, Vec{1, 1});
}

AlgebraMap f2_into_f4() {
  FpMatrix m(2, 1, 2);
  m.set_row(0, {1, 0});
  return AlgebraMap{f2(), f4(), m};
}

// brute force: sweep every vector of C and keep those satisfying both
// grouplike conditions directly
std::vector<Vec> grouplikes_by_sweep(const Coring& c) {
  std::vector<Vec> out;
  for (const auto& g : enumerate_affine(full_space(c.p(), c.dim()), 1u << 20))
    if (c.is_grouplike(g)) out.push_back(g);
  return out;
}

} // namespace

TEST_CASE("trivial coring passes the axiom checker") {
  for (auto a : {f2(), f4(), product_field(2), product_field(3)}) {
    auto c = trivial_coring(a);
    CHECK(c->check().empty());
    CHECK(c->dim() == a->dim());
  }
}

TEST_CASE("trivial coring coproduct sends a to the class of a tensor 1") {
  auto a = product_field(3);
  auto c = trivial_coring(a);
  // C (x)_A C for C = A is one-dimensional iff A is; here it has dim 2
  CHECK(c->cc_pres().dim() == 2);
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Vec lhs = c->delta().row(i);
    Vec rhs = c->cc_pres().proj.apply(kron_vec(3, a->one(), unit_vec(a->dim(), i)));
    CHECK(lhs == rhs); // a (x) 1 and 1 (x) a agree over A
  }
}

TEST_CASE("canonical extension coring for F_2 in F_4 is valid of dimension 4") {
  auto sw = sweedler_coring(f2_into_f4());
  CHECK(sw.coring->check().empty());
  // the base field tensor does not collapse anything: dim = 2*2
  CHECK(sw.coring->dim() == 4);
  CHECK(sw.coring->is_grouplike(sw.canonical_grouplike));
}

TEST_CASE("extension coring over the ground field keeps full dimension") {
  FpMatrix m(2, 1, 2);
  m.set_row(0, {1, 1});
  auto sw = sweedler_coring(AlgebraMap{f2(), product_field(2), m});
  CHECK(sw.coring->check().empty());
  CHECK(sw.coring->dim() == 4);
  CHECK(sw.coring->is_grouplike(sw.canonical_grouplike));
}

TEST_CASE("extension coring of the identity map collapses to the trivial coring") {
  auto a = product_field(2);
  auto sw = sweedler_coring(AlgebraMap{a, a, FpMatrix::identity(2, 2)});
  CHECK(sw.coring->check().empty());
  CHECK(sw.coring->dim() == 2);
  auto triv = trivial_coring(a);
  // same grouplike count as the trivial coring it is isomorphic to
  CHECK(grouplikes(*sw.coring, 1u << 20).size() == grouplikes(*triv, 1u << 20).size());
}

TEST_CASE("non-multiplicative map is rejected") {
  // send 1 to an idempotent that is not the unit
  FpMatrix m(2, 1, 2);
  m.set_row(0, {1, 0});
  CHECK_THROWS_AS(sweedler_coring(AlgebraMap{f2(), product_field(2), m}), not_an_algebra_map);
}

TEST_CASE("corrupted coproduct is reported as a coassociativity violation") {
  auto a = product_field(2);
  auto good = trivial_coring(a);
  FpMatrix delta = good->delta();
  // swap the two rows: still A-linear in neither sense, and not coassociative;
  // the checker must say something, and naming the failed law is enough
  Vec r0 = delta.row(0), r1 = delta.row(1);
  delta.set_row(0, r1);
  delta.set_row(1, r0);
  Coring bad(regular_bimodule(a), delta, FpMatrix::identity(2, 2));
  auto msgs = bad.check();
  REQUIRE_FALSE(msgs.empty());
}

TEST_CASE("a genuinely coassociativity-only corruption is caught") {
  // dim-2 coring over F_2 (trivial algebra base): C = F_2^2 with
  // delta(e0) = e0 (x) e0, delta(e1) = e1 (x) e1, eps = sum of coords fails
  // counit; instead take eps(e0)=1, eps(e1)=1 and delta(e1) = e1 (x) e0:
  // coassociative, right counit law holds, left fails
  auto a = f2();
  BimoduleRep c{a, a, 2, {FpMatrix::identity(2, 2)}, {FpMatrix::identity(2, 2)}};
  FpMatrix delta(2, 2, 4);
  delta.set_row(0, {1, 0, 0, 0}); // e0 (x) e0
  delta.set_row(1, {0, 0, 1, 0}); // e1 (x) e0
  FpMatrix eps(2, 2, 1);
  eps.set_row(0, {1});
  eps.set_row(1, {1});
  Coring bad(c, delta, eps);
  auto msgs = bad.check();
  REQUIRE_FALSE(msgs.empty());
  bool mentions_counit = false;
  for (auto& s : msgs) mentions_counit |= s.find("counit law") != std::string::npos;
  CHECK(mentions_counit);
}

TEST_CASE("grouplikes of the trivial coring are exactly 1") {
  for (auto a : {f2(), f4(), product_field(2), product_field(3)}) {
    auto c = trivial_coring(a);
    auto gs = grouplikes(*c, 1u << 20);
    REQUIRE(gs.size() == 1);
    CHECK(gs[0] == a->one());
    CHECK(gs == grouplikes_by_sweep(*c));
  }
}

TEST_CASE("grouplikes of the F_2 in F_4 extension coring") {
  auto sw = sweedler_coring(f2_into_f4());
  auto gs = grouplikes(*sw.coring, 1u << 20);
  auto sweep = grouplikes_by_sweep(*sw.coring);
  CHECK(gs == sweep);
  // 1 (x) 1 must be among them
  CHECK(std::find(gs.begin(), gs.end(), sw.canonical_grouplike) != gs.end());
  // oracle: u (x) u^{-1} for u in F_4^* gives grouplikes; those are distinct
  // here and there are no others, so the count is 3
  CHECK(gs.size() == 3);
  for (const auto& u : std::vector<Vec>{{1, 0}, {0, 1}, {1, 1}}) {
    auto inv = sw.coring->alg().inverse(u);
    REQUIRE(inv);
    Vec g = sw.ab_pres.proj.apply(kron_vec(2, u, *inv));
    CHECK(sw.coring->is_grouplike(g));
  }
}

TEST_CASE("conjugation is a right action of the unit group on grouplikes") {
  auto sw = sweedler_coring(f2_into_f4());
  const auto& c = *sw.coring;
  auto gs = grouplikes(c, 1u << 20);
  auto units = unit_group(c.alg(), 1u << 20);
  for (const auto& g : gs) {
    CHECK(grouplike_conjugation(c, g, c.alg().one()) == g);
    for (const auto& u : units.elements)
      for (const auto& v : units.elements) {
        Vec one_step = grouplike_conjugation(c, g, c.alg().mul(u, v));
        Vec two_step = grouplike_conjugation(c, grouplike_conjugation(c, g, u), v);
        CHECK(one_step == two_step);
      }
  }
}

TEST_CASE("conjugating by a non-unit throws") {
  auto a = product_field(2);
  auto c = trivial_coring(a);
  CHECK_THROWS_AS(grouplike_conjugation(*c, a->one(), Vec{1, 0}), not_a_unit);
}

TEST_CASE("conjugation formula matches u^{-1} g u") {
  auto sw = sweedler_coring(f2_into_f4());
  const auto& c = *sw.coring;
  const auto& a = c.alg();
  // u = x in F_4, g = class of 1 (x) 1; expect class of x^{-1} (x) x
  Vec u{0, 1};
  auto inv = a.inverse(u);
  REQUIRE(inv);
  Vec expect = sw.ab_pres.proj.apply(kron_vec(2, *inv, u));
  CHECK(grouplike_conjugation(c, sw.canonical_grouplike, u) == expect);
}

TEST_CASE("grouplike sweep agrees with solver on a p=3 example") {
  auto a = product_field(3);
  auto c = trivial_coring(a);
  CHECK(grouplikes(*c, 1u << 20) == grouplikes_by_sweep(*c));
}

TEST_CASE("enumeration cap propagates out of the grouplike search") {
  auto sw = sweedler_coring(f2_into_f4());
  // counit solution space of the dim-4 coring has 4 points; cap below that
  CHECK_THROWS_AS(grouplikes(*sw.coring, 3), enumeration_too_large);
}
