#include "algebroid/spec.hpp"

#include "algebroid/gallery.hpp"
#include "algebroid/random_gen.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace algebroid;
using algebroid::testing::pp;
using algebroid::testing::random_section;

namespace {

AlgebroidSpec so3_spec() { return build_almost_lie_algebra(builtin_lie_table("so3")); }
AlgebroidSpec triple_spec() { return build_almost_lie_algebra(builtin_lie_table("triple")); }

} // namespace

TEST_CASE("bracket on a table over a point") {
  AlgebroidSpec spec = so3_spec();
  Section e1 = frame_section_a(spec, 0), e2 = frame_section_a(spec, 1);
  CHECK(bracket(spec, e1, e2) == frame_section_a(spec, 2));
  CHECK(bracket(spec, e1, e1).is_zero());
}

TEST_CASE("bracket of vector fields in the tangent model") {
  AlgebroidSpec spec = build_tangent_model(2);
  // [x2 d1, x1 d2] = x2 d2 - x1 d1, the hand commutator.
  Section phi = frame_section_a(spec, 0);
  phi.coeffs[0] = pp("x2", 2);
  Section psi = frame_section_a(spec, 1);
  psi.coeffs[1] = pp("x1", 2);
  Section expected = phi;
  expected.coeffs[0] = pp("-x1", 2);
  expected.coeffs[1] = pp("x2", 2);
  CHECK(bracket(spec, phi, psi) == expected);
}

TEST_CASE("bracket skew on random sections") {
  for (auto &[name, spec] : algebroid::testing::spec_corpus()) {
    CAPTURE(name);
    Rng rng(91);
    Section phi = random_section(spec, Section::Ambient::A, rng);
    CHECK(bracket(spec, phi, phi).is_zero());
    Section psi = random_section(spec, Section::Ambient::A, rng);
    CHECK(bracket(spec, phi, psi) ==
          section_scale(Polynomial::constant(spec.base_dim, Rational(-1)),
                        bracket(spec, psi, phi)));
  }
}

TEST_CASE("anchor of sections") {
  AlgebroidSpec point = so3_spec();
  Rng rng(5);
  CHECK(anchor_of(point, random_section(point, Section::Ambient::A, rng)).is_zero());
  AlgebroidSpec tm = build_tangent_model(2);
  CHECK(anchor_of(tm, frame_section_a(tm, 0)) == Derivation::coordinate(2, 0));
}

TEST_CASE("leibniz rule holds by construction") {
  for (auto &[name, spec] : algebroid::testing::spec_corpus()) {
    CAPTURE(name);
    Rng rng(13);
    Section phi = random_section(spec, Section::Ambient::A, rng);
    Section psi = random_section(spec, Section::Ambient::A, rng);
    Polynomial f = random_polynomial(spec.base_dim, 3, 3, rng);
    Section lhs = bracket(spec, phi, section_scale(f, psi));
    Section rhs = section_add(section_scale(anchor_of(spec, phi).apply(f), psi),
                              section_scale(f, bracket(spec, phi, psi)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("anchor morphism extends from the frame to sections") {
  for (auto &[name, spec] : algebroid::testing::spec_corpus()) {
    CAPTURE(name);
    REQUIRE(check_axioms(spec).all_passed());
    Rng rng(29);
    Section phi = random_section(spec, Section::Ambient::A, rng);
    Section psi = random_section(spec, Section::Ambient::A, rng);
    CHECK(anchor_of(spec, bracket(spec, phi, psi)) ==
          derivation_commutator(anchor_of(spec, phi), anchor_of(spec, psi)));
  }
}

TEST_CASE("axiom checker flags a broken morphism") {
  // rank 2 over one variable, anchor rho(e1) = d/dx, rho(e2) = 0, bracket
  // [e1,e2] = e1: the anchor is not a bracket morphism.
  AlgebroidSpec spec = AlgebroidSpec::with_shape(1, 2, 1);
  spec.anchor[0][0] = Polynomial::one(1);
  spec.set_structure(0, 0, 1, Polynomial::one(1));
  spec.kernel_frame[1][0] = Polynomial::one(1);
  spec.kernel_projection[0][1] = Polynomial::one(1);
  AxiomReport report = check_axioms(spec);
  CHECK_FALSE(report.all_passed());
  bool morphism_failed = false;
  for (const auto &check : report.checks)
    if (check.name == "anchor-morphism")
      morphism_failed = !check.passed;
  CHECK(morphism_failed);
}

TEST_CASE("axiom checker passes the whole corpus") {
  for (auto &[name, spec] : algebroid::testing::spec_corpus()) {
    CAPTURE(name);
    CHECK(check_axioms(spec).all_passed());
  }
}

TEST_CASE("jacobiator on tables") {
  AlgebroidSpec lie = so3_spec();
  Section j = jacobiator(lie, frame_section_a(lie, 0), frame_section_a(lie, 1),
                         frame_section_a(lie, 2));
  CHECK(j.is_zero());

  AlgebroidSpec almost = triple_spec();
  Section e1 = frame_section_a(almost, 0), e2 = frame_section_a(almost, 1),
          e3 = frame_section_a(almost, 2);
  Section expected = section_add(section_add(e1, e2), e3);
  CHECK(jacobiator(almost, e1, e2, e3) == expected);
  CHECK(jacobiator(almost, e1, e1, e3).is_zero());
}

TEST_CASE("jacobiator is tensorial and anchor-less") {
  for (auto &[name, spec] : algebroid::testing::spec_corpus()) {
    CAPTURE(name);
    Rng rng(41);
    Section phi = random_section(spec, Section::Ambient::A, rng);
    Section psi = random_section(spec, Section::Ambient::A, rng);
    Section chi = random_section(spec, Section::Ambient::A, rng);
    Polynomial f = random_polynomial(spec.base_dim, 2, 2, rng);
    CHECK(jacobiator(spec, phi, section_scale(f, psi), chi) ==
          section_scale(f, jacobiator(spec, phi, psi, chi)));
    CHECK(anchor_of(spec, jacobiator(spec, phi, psi, chi)).is_zero());
    // Alternating.
    CHECK(jacobiator(spec, phi, phi, chi).is_zero());
  }
}

TEST_CASE("jacobiator tensor components") {
  CHECK(jacobiator_tensor(so3_spec()).is_zero());
  JacobiatorTensor j = jacobiator_tensor(triple_spec());
  CHECK_FALSE(j.is_zero());
  for (int B = 0; B < 3; ++B)
    CHECK(j.component(B, 0, 1, 2) == Polynomial::one(0));
  // Antisymmetry in the frame indices.
  CHECK(j.component(0, 1, 0, 2) == pp("-1", 0));
  CHECK(j.component(0, 0, 0, 2).is_zero());
}

TEST_CASE("jacobiator escaping the kernel frame is reported") {
  // The triple table has J = e1 + e2 + e3; shrink the kernel frame to the
  // span of e1 so that the projection cannot reproduce J.
  AlgebroidSpec spec = triple_spec();
  spec.kernel_rank = 1;
  spec.kernel_frame.assign(3, std::vector<Polynomial>(1, Polynomial(0)));
  spec.kernel_frame[0][0] = Polynomial::one(0);
  spec.kernel_projection.assign(1, std::vector<Polynomial>(3, Polynomial(0)));
  spec.kernel_projection[0][0] = Polynomial::one(0);
  REQUIRE(check_axioms(spec).all_passed());
  CHECK_THROWS_WITH_AS(jacobiator_tensor(spec), "jacobiator escapes kernel frame",
                       std::runtime_error);
}

TEST_CASE("connection over a point reduces to the bracket") {
  AlgebroidSpec abelian = build_almost_lie_algebra(builtin_lie_table("abelian:2"));
  Rng rng(3);
  Section v = random_section(abelian, Section::Ambient::F, rng);
  CHECK(connection(abelian, frame_section_a(abelian, 0), v).is_zero());

  AlgebroidSpec almost = triple_spec();
  Section phi = frame_section_a(almost, 0);
  Section w = frame_section_f(almost, 1);
  Section conn = connection(almost, phi, w);
  Section br = bracket(almost, phi, kernel_embed(almost, w));
  CHECK(kernel_embed(almost, conn) == br);
}

TEST_CASE("connection in the product model differentiates along the base") {
  AlgebroidSpec spec = build_product_model(1, builtin_lie_table("abelian:1"));
  Section phi = frame_section_a(spec, 0); // the coordinate field
  Section v = frame_section_f(spec, 0);
  v.coeffs[0] = pp("x1", 1);
  Section result = connection(spec, phi, v);
  CHECK(result.coeffs[0] == Polynomial::one(1));
  CHECK(connection(spec, phi, frame_section_f(spec, 0)).is_zero());
}

TEST_CASE("connection axioms hold on the corpus") {
  for (auto &[name, spec] : algebroid::testing::spec_corpus()) {
    CAPTURE(name);
    Rng rng(59);
    Section phi = random_section(spec, Section::Ambient::A, rng, 1);
    Section v = random_section(spec, Section::Ambient::F, rng, 1);
    Polynomial f = random_polynomial(spec.base_dim, 2, 2, rng);
    // Function-linearity in the direction argument.
    CHECK(connection(spec, section_scale(f, phi), v) ==
          section_scale(f, connection(spec, phi, v)));
    // Leibniz rule in the module argument.
    Section lhs = connection(spec, phi, section_scale(f, v));
    Section rhs = section_add(section_scale(anchor_of(spec, phi).apply(f), v),
                              section_scale(f, connection(spec, phi, v)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("bracket leaving the kernel is reported") {
  // [e1, e2] = e1 with kernel frame {e2}: the bracket image lies outside.
  AlgebroidSpec spec = AlgebroidSpec::with_shape(0, 2, 1);
  spec.set_structure(0, 0, 1, Polynomial::one(0));
  spec.kernel_frame[1][0] = Polynomial::one(0);
  spec.kernel_projection[0][1] = Polynomial::one(0);
  REQUIRE(check_axioms(spec).all_passed());
  CHECK_THROWS_WITH_AS(connection(spec, frame_section_a(spec, 0), frame_section_f(spec, 0)),
                       "bracket leaves kernel", std::runtime_error);
}

TEST_CASE("frame connection") {
  AlgebroidSpec tm = build_tangent_model(1);
  Section phi = frame_section_a(tm, 0);
  CHECK(frame_connection(tm, phi, {pp("x1", 1)}) == std::vector<Polynomial>{Polynomial::one(1)});
  CHECK(frame_connection(tm, phi, {Polynomial::one(1)}) ==
        std::vector<Polynomial>{Polynomial(1)});
  AlgebroidSpec point = so3_spec();
  CHECK(frame_connection(point, frame_section_a(point, 0),
                         {Polynomial::constant(0, Rational(5))}) ==
        std::vector<Polynomial>{Polynomial(0)});
}

TEST_CASE("spec files round-trip") {
  for (auto &[name, spec] : algebroid::testing::spec_corpus()) {
    CAPTURE(name);
    std::string text = write_spec(spec);
    AlgebroidSpec back = parse_spec(text);
    CHECK(back == spec);
    CHECK(write_spec(back) == text);
  }
}

TEST_CASE("spec parser reports line numbers") {
  std::string bad = "algebroid-spec v1\nbase_dim 1\nrank 1\nkernel_rank 0\nANCHOR\n1 1 : x7\n";
  try {
    parse_spec(bad);
    FAIL("expected parse error");
  } catch (const std::runtime_error &e) {
    std::string msg = e.what();
    CHECK(msg.find("line 6") != std::string::npos);
  }
}
