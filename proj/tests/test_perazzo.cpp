#include <doctest.h>

#include "vhess/examples.hpp"
#include "vhess/parse.hpp"
#include "vhess/perazzo.hpp"

using namespace vhess;

namespace {

MultiPoly P(const char* text, std::size_t nvars) { return parse_poly(PolySource{text, nvars}).poly; }

MultiPoly family(const char* name) {
  FamilySpec s;
  s.family = name;
  return generate(s);
}

Rational at(const MultiPoly& f, const RVector& p) { return f.evaluate(RationalField{}, std::span<const Rational>(p)); }

}  // namespace

TEST_SUITE("perazzo") {
  TEST_CASE("images and fibers of the quartic threefold example") {
    auto bs = family("bs");
    auto p = generic_point(bs, 4, 1);
    auto img = perazzo_image(bs, p);
    CHECK(img.dim() == 0);
    auto fiber = perazzo_fiber(bs, p);
    CHECK(fiber.dim() == 3);
    CHECK(fiber.contains(p));
  }

  TEST_CASE("concatenation images are lines") {
    auto f = family("concat");
    CHECK(perazzo_image(f, generic_point(f, 6, 3)).dim() == 1);
  }

  TEST_CASE("fiber dimensions of the worked examples") {
    auto ex = family("exdet");
    CHECK(perazzo_fiber(ex, generic_point(ex, 6, 5)).dim() == 4);
    auto det = family("det3_section");
    CHECK(perazzo_fiber(det, generic_point(det, 7, 5)).dim() == 5);
  }

  TEST_CASE("Perazzo ranks") {
    CHECK(perazzo_rank(family("bs")).mu == 1);
    CHECK(perazzo_rank(family("exdet")).mu == 2);
    auto det = perazzo_rank(family("det3_section"));
    CHECK(det.mu == 2);
    CHECK(det.fiber_dim == 5);
    CHECK(det.fiber_dims.size() == 6);
  }

  TEST_CASE("Special verdicts") {
    auto bs = is_special_perazzo(family("bs"), 1);
    CHECK(bs.special);
    REQUIRE(bs.L.has_value());
    CHECK(*bs.L == LinearSubspace::coordinate(5, {3, 4}));
    CHECK(bs.zstar_in_L);
    CHECK(bs.consistent);

    auto ex = is_special_perazzo(family("exdet"), 2);
    CHECK(ex.special);
    CHECK(*ex.L == LinearSubspace::coordinate(7, {4, 5, 6}));

    auto det = is_special_perazzo(family("det3_section"), 2);
    CHECK_FALSE(det.special);
    CHECK_FALSE(det.L.has_value());
    for (int d : det.pairwise_dims) CHECK(d == 3);
  }

  TEST_CASE("Z* analysis") {
    auto bs = zstar_analyze(family("bs"));
    CHECK(bs.span == LinearSubspace::coordinate(5, {3, 4}));
    REQUIRE(bs.fit.has_value());
    CHECK(print_poly(*bs.fit) == "4*x0*x2 - x1^2");
    CHECK(bs.dim == 1);
    for (const auto& z : bs.samples) CHECK(4 * z[0] * z[2] - z[1] * z[1] == 0);

    auto ex = zstar_analyze(family("exdet"));
    CHECK(ex.span == LinearSubspace::coordinate(7, {4, 5, 6}));
    CHECK(print_poly(*ex.fit) == "x0*x2 - x1*x3");
    CHECK(ex.fit_degree == 2);
    CHECK(ex.dim == 2);

    auto det = zstar_analyze(family("det3_section"));
    CHECK(det.span == LinearSubspace::coordinate(8, {2, 5, 6, 7}));
    CHECK(print_poly(*det.fit) == "x0*x4 - x1*x3");
    CHECK(det.dim == 2);
  }

  TEST_CASE("the determinantal matrix of canonical special forms") {
    auto bs = perazzo_matrix_A(P("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5), 2);
    CHECK(bs.A == parse_matrix("[[2*x0, x1], [x1, 2*x2]]", 5));
    CHECK(bs.det == P("4*x0*x2 - x1^2", 5));

    auto ex = perazzo_matrix_A(family("exdet"), 3);
    CHECK(ex.A == parse_matrix("[[2*x1, x0, x2], [x0, 0, x3], [x2, x3, 0]]", 7));
    CHECK(ex.det == P("2*x0*x2*x3 - 2*x1*x3^2", 7));

    CHECK(is_canonical_special_form(family("exdet"), 3));
    CHECK_FALSE(is_canonical_special_form(family("det3_section"), 2));
    CHECK_THROWS_AS(perazzo_matrix_A(family("det3_section"), 2), NotCanonicalFormError);
  }

  TEST_CASE("det A vanishes on Z* of random canonical special forms") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      FamilySpec s;
      s.family = "canSPCH";
      s.N = 6 + seed % 2;
      s.tau = 2 + seed % 2;
      s.seed = seed;
      auto f = generate(s);
      auto A = perazzo_matrix_A(f, s.tau);
      auto z = zstar_analyze(f, 12);
      for (const auto& sample : z.samples) CHECK(at(A.det, sample) == 0);
      if (z.fit) CHECK(z.fit_degree <= static_cast<int>(s.tau));
    }
  }

  TEST_CASE("profiles satisfy the dimension estimates") {
    for (const char* name : {"bs", "exdet", "concat", "det3_section"}) {
      auto f = family(name);
      auto r = generic_rank(hessian_matrix(f)).claimed_rank;
      auto prof = perazzo_profile(f, r);
      CHECK(prof.fiber_dim == prof.N - prof.mu);
      CHECK(prof.zstar.dim <= prof.codimZ - 1 + prof.mu);
      if (prof.codimZ == 1) CHECK(2 * prof.zstar.dim <= prof.N - 1);
    }
  }
}
