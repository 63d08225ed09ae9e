#include "algebroid/gallery.hpp"

#include "algebroid/cochain.hpp"
#include "algebroid/cohomology.hpp"
#include "algebroid/combinatorics.hpp"
#include "algebroid/random_gen.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace algebroid;
using algebroid::testing::pp;

TEST_CASE("cartan calculus basics") {
  // i_{d1}(dx1 ^ dx2) = dx2.
  FormField dx12(2, 2);
  dx12.add_term({0, 1}, Polynomial::one(2));
  FormField contracted = cartan_contract(Derivation::coordinate(2, 0), dx12);
  CHECK(contracted == FormField::coordinate_differential(2, 1));
  // L_X f = X[f] on functions.
  Rng rng(9);
  Derivation x({random_polynomial(2, 2, 2, rng), random_polynomial(2, 2, 2, rng)});
  FormField f(2, 0);
  Polynomial fp = pp("x1^2 x2 - x2", 2);
  f.add_term({}, fp);
  FormField lie = cartan_lie(x, f);
  CHECK(lie.component({}) == x.apply(fp));
}

TEST_CASE("exterior differential squares to zero on random forms") {
  Rng rng(33);
  for (int round = 0; round < 10; ++round) {
    int m = rng.range(2, 4);
    int degree = rng.range(0, m - 1);
    FormField omega(m, degree);
    for (const auto &key : detail::increasing_tuples(m, degree))
      omega.add_term(key, random_polynomial(m, 3, 2, rng));
    CHECK(cartan_d(cartan_d(omega)).is_zero());
  }
}

TEST_CASE("lie derivative of coordinate differentials") {
  // L_X dx^j = d(X^j), the closed form of the homotopy formula on 1-forms.
  Rng rng(14);
  for (int round = 0; round < 5; ++round) {
    int m = 3;
    Derivation x({random_polynomial(m, 2, 2, rng), random_polynomial(m, 2, 2, rng),
                  random_polynomial(m, 2, 2, rng)});
    for (int j = 0; j < m; ++j) {
      FormField dxj = FormField::coordinate_differential(m, j);
      FormField xj(m, 0);
      xj.add_term({}, x.component(j));
      CHECK(cartan_lie(x, dxj) == cartan_d(xj));
    }
  }
}

TEST_CASE("tangent model") {
  for (int m = 1; m <= 3; ++m) {
    AlgebroidSpec spec = build_tangent_model(m);
    CHECK(check_axioms(spec).all_passed());
    CHECK(jacobiator_tensor(spec).is_zero());
    CHECK(CochainComplex(spec).check_dj_zero().passed);
  }
  CHECK_THROWS(build_tangent_model(0));
}

TEST_CASE("product model") {
  AlgebroidSpec spec = build_product_model(2, builtin_lie_table("so3"));
  CHECK(check_axioms(spec).all_passed());
  CHECK(jacobiator_tensor(spec).is_zero());
  // Over a zero-dimensional base the product model is the algebra itself.
  AlgebroidSpec alg = build_product_model(0, builtin_lie_table("so3"));
  CHECK(alg == build_almost_lie_algebra(builtin_lie_table("so3")));
  // Non-Jacobi tables are rejected.
  CHECK_THROWS_WITH_AS(build_product_model(1, builtin_lie_table("triple")),
                       doctest::Contains("not a Lie algebra"), std::runtime_error);
  // The bracket connection differentiates kernel coefficients along the base.
  Section phi = frame_section_a(spec, 0);
  Section v = frame_section_f(spec, 1);
  Polynomial f = pp("x1 x2", 2);
  Section lhs = connection(spec, phi, section_scale(f, v));
  CHECK(lhs.coeffs[1] == anchor_of(spec, phi).apply(f));
}

TEST_CASE("b-twist") {
  AlgebroidSpec base = build_product_model(1, builtin_lie_table("abelian:1"));
  // Zero twist is the identity.
  std::vector<Polynomial> zero(8, Polynomial(1));
  CHECK(build_b_twist(base, zero) == base);
  // The x1-twist passes the axioms and has a nonzero Jacobiator over the base.
  AlgebroidSpec twisted = algebroid::testing::twisted_product_model();
  CHECK(check_axioms(twisted).all_passed());
  CHECK(CochainComplex(twisted).check_dj_zero().passed);
  // A twist with values outside the kernel frame is rejected.
  std::vector<Polynomial> bad(8, Polynomial(1));
  bad[(0 * 2 + 0) * 2 + 1] = pp("x1", 1); // B^1_12 hits the anchor direction e1
  bad[(0 * 2 + 1) * 2 + 0] = pp("-x1", 1);
  CHECK_THROWS_WITH_AS(build_b_twist(base, bad), "B not kernel-valued", std::runtime_error);
}

TEST_CASE("b-twisted product model has nonzero jacobiator") {
  AlgebroidSpec twisted = algebroid::testing::twisted_product_model();
  JacobiatorTensor j = jacobiator_tensor(twisted);
  CHECK_FALSE(j.is_zero());
  // J(e1,e2,e3) = [e2, -x2 e3] + [e3, x1 e3] = -e3 by direct expansion.
  CHECK(j.component(0, 0, 1, 2) == pp("-1", 2));
}

TEST_CASE("twisted poisson with constant symplectic structure") {
  BivectorField pi(2);
  pi.set_component(0, 1, Polynomial::one(2));
  AlgebroidSpec spec = build_twisted_poisson(pi, FormField(2, 3));
  CHECK(check_axioms(spec).all_passed());
  CHECK(jacobiator_tensor(spec).is_zero());
  // Anchor of the first frame covector is Pi^{1k} d/dx_k.
  Derivation rho1 = anchor_of(spec, frame_section_a(spec, 0));
  CHECK(rho1 == Derivation::coordinate(2, 1));
  CHECK(CochainComplex(spec).q_coordinate_check(3).passed);
}

TEST_CASE("nondegenerate twisted poisson reference family") {
  // omega = dx1 dx2 + dx3 dx4 + x4 dx1 dx3 has Pfaffian 1 and is not closed.
  const int m = 4;
  std::vector<std::vector<Polynomial>> om(m, std::vector<Polynomial>(m, Polynomial(m)));
  auto set = [&](int i, int j, const Polynomial &p) {
    om[i][j] = p;
    om[j][i] = -p;
  };
  set(0, 1, Polynomial::one(m));
  set(2, 3, Polynomial::one(m));
  set(0, 2, pp("x4", m));
  auto inverse = invert_constant_det(om);
  BivectorField pi(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      pi.set_component(i, j, inverse[i][j]);

  FormField omega(m, 2);
  omega.add_term({0, 1}, Polynomial::one(m));
  omega.add_term({2, 3}, Polynomial::one(m));
  omega.add_term({0, 2}, pp("x4", m));
  FormField domega = cartan_d(omega);
  REQUIRE_FALSE(domega.is_zero());

  // H = -d(omega) is the compatible twist under our orientation conventions.
  AlgebroidSpec spec = build_twisted_poisson(pi, -domega);
  CHECK(check_axioms(spec).all_passed());
  // An invertible anchor is a bracket isomorphism onto the vector fields, so
  // the Jacobiator vanishes identically even though the twist is nonzero.
  CHECK(jacobiator_tensor(spec).is_zero());
  CochainComplex complex(spec);
  CHECK(complex.check_dj_zero().passed);
  CHECK(complex.q_coordinate_check(2).passed);

  // The opposite sign violates the compatibility condition, and the failure
  // surfaces exactly as a broken anchor morphism.
  CHECK_THROWS_WITH_AS(build_twisted_poisson(pi, domega),
                       doctest::Contains("not twisted Poisson"), std::runtime_error);
}

TEST_CASE("degenerate twisted poisson with kernel frame") {
  AlgebroidSpec spec = algebroid::testing::degenerate_twisted_poisson();
  CHECK(spec.rank == 5);
  CHECK(spec.kernel_rank == 1);
  CHECK(check_axioms(spec).all_passed());
  // The non-closed twist leaves a genuine Jacobi defect in the kernel line.
  JacobiatorTensor j = jacobiator_tensor(spec);
  CHECK_FALSE(j.is_zero());
  CHECK(j.component(0, 0, 1, 2) == pp("-1", 5));
  CHECK(CochainComplex(spec).check_dj_zero().passed);

  // Breaking the twist with a component along the image of the anchor breaks
  // the morphism axiom.
  BivectorField pi(5);
  pi.set_component(0, 1, Polynomial::one(5));
  pi.set_component(2, 3, Polynomial::one(5));
  FormField bad_h(5, 3);
  bad_h.add_term({0, 1, 2}, pp("x2", 5));
  KernelData kernel;
  kernel.frame.assign(5, std::vector<Polynomial>(1, Polynomial(5)));
  kernel.frame[4][0] = Polynomial::one(5);
  kernel.projection.assign(1, std::vector<Polynomial>(5, Polynomial(5)));
  kernel.projection[0][4] = Polynomial::one(5);
  CHECK_THROWS_WITH_AS(build_twisted_poisson(pi, bad_h, kernel),
                       doctest::Contains("not twisted Poisson"), std::runtime_error);
}

TEST_CASE("twisted action") {
  // Untwisted genuine action: an action algebroid with vanishing Jacobiator.
  LieTable g = builtin_lie_table("abelian:2");
  std::vector<std::vector<Polynomial>> rho(2, std::vector<Polynomial>(1, Polynomial(1)));
  rho[0][0] = Polynomial::one(1);
  std::vector<Polynomial> zero_k(8, Polynomial(1));
  AlgebroidSpec action = build_twisted_action(g, rho, zero_k);
  CHECK(check_axioms(action).all_passed());
  CHECK(jacobiator_tensor(action).is_zero());

  // The twisted model with kernel frame passes and keeps the morphism axiom.
  AlgebroidSpec twisted = algebroid::testing::twisted_action_model();
  CHECK(check_axioms(twisted).all_passed());
  CHECK(CochainComplex(twisted).q_coordinate_check(2).passed);

  // A twist whose anchor contribution is unbalanced is rejected.
  std::vector<Polynomial> bad_k(8, Polynomial(1));
  bad_k[(0 * 2 + 0) * 2 + 1] = pp("x1", 1); // k(e1,e2) = x1 e1, rho(e1) nonzero
  bad_k[(0 * 2 + 1) * 2 + 0] = pp("-x1", 1);
  CHECK_THROWS_WITH_AS(build_twisted_action(g, rho, bad_k),
                       doctest::Contains("anchor compatibility"), std::runtime_error);

  // A twist that moves the declared kernel frame is rejected.
  std::vector<Polynomial> k2(8, Polynomial(1));
  k2[(1 * 2 + 0) * 2 + 1] = pp("x1", 1); // k(e1,e2) = x1 e2 with e2 spanning ker rho
  k2[(1 * 2 + 1) * 2 + 0] = pp("-x1", 1);
  KernelData kernel;
  kernel.frame.assign(2, std::vector<Polynomial>(1, Polynomial(1)));
  kernel.frame[1][0] = Polynomial::one(1);
  kernel.projection.assign(1, std::vector<Polynomial>(2, Polynomial(1)));
  kernel.projection[0][1] = Polynomial::one(1);
  CHECK_THROWS_WITH_AS(build_twisted_action(g, rho, k2, kernel),
                       doctest::Contains("annihilate"), std::runtime_error);
  // Without a declared kernel frame the same data is a legal bracket (rank
  // two leaves no room for a Jacobi defect).
  AlgebroidSpec loose = build_twisted_action(g, rho, k2);
  CHECK(check_axioms(loose).all_passed());
  CHECK(jacobiator_tensor(loose).is_zero());
}

TEST_CASE("polynomial matrix inverse") {
  std::vector<std::vector<Polynomial>> m(2, std::vector<Polynomial>(2, Polynomial(1)));
  m[0][0] = Polynomial::one(1);
  m[0][1] = pp("x1", 1);
  m[1][1] = Polynomial::one(1);
  auto inv = invert_constant_det(m);
  CHECK(inv[0][1] == pp("-x1", 1));
  // Non-constant determinant is rejected.
  std::vector<std::vector<Polynomial>> bad(1, std::vector<Polynomial>(1, pp("x1", 1)));
  CHECK_THROWS(invert_constant_det(bad));
}

TEST_CASE("builtin tables") {
  CHECK(builtin_lie_table("abelian:4").dim == 4);
  CHECK(builtin_lie_table("so3").jacobi_defects().empty());
  CHECK(builtin_lie_table("heisenberg").jacobi_defects().empty());
  CHECK_FALSE(builtin_lie_table("triple").jacobi_defects().empty());
  CHECK_THROWS(builtin_lie_table("nope"));
}
