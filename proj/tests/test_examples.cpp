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

}  // namespace

TEST_SUITE("examplesgen") {
  TEST_CASE("fixed families reproduce the displayed forms") {
    CHECK(family("bs") == P("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5));
    CHECK(family("singp2") == P("x0*x3^2 + x1*x4^2 + x2*x5^2", 6));
    CHECK(family("exdet") == P("x0*x4*x5 + x1*x4^2 + x2*x4*x6 + x3*x5*x6", 7));
    CHECK(family("concat") == P("x0*x3^2 + x1*x3*x4 + x2*x4^2 + x5*x4*x7 + x6*x7^2", 8));
    CHECK(family("det3_section") == P("-x0*x5*x7 + x1*x5*x6 + x2*x3*x7 - x2*x4*x6", 8));
  }

  TEST_CASE("every generated form is a homogeneous cubic") {
    for (const auto& name : family_names()) {
      FamilySpec s;
      s.family = name;
      s.N = 6;
      s.tau = 3;
      auto f = generate(s);
      CHECK_MESSAGE(f.is_homogeneous(), name);
      CHECK_MESSAGE(f.degree() == 3, name);
    }
  }

  TEST_CASE("parameter validation") {
    FamilySpec s;
    s.family = "classe1";
    s.N = 5;
    s.tau = 5;
    CHECK_THROWS_AS(generate(s), UsageError);
    s.family = "canSPCH";
    s.tau = 3;
    CHECK_THROWS_AS(generate(s), UsageError);
    s.family = "mu1";
    s.N = 3;
    CHECK_THROWS_AS(generate(s), UsageError);
    s.family = "nonsense";
    CHECK_THROWS_AS(generate(s), UsageError);
  }

  TEST_CASE("explicit coefficients replace the random stream") {
    FamilySpec s;
    s.family = "mu1";
    s.N = 4;
    s.coefficients = std::vector<std::int64_t>{1};
    auto f = generate(s);
    CHECK(f.coefficient(Exponents{0, 1, 0, 1, 1}) == 2);
    FamilySpec r = s;
    r.coefficients.reset();
    r.seed = 3;
    CHECK(generate(r) == generate(r));
  }

  TEST_CASE("juxtaposition") {
    auto bs = family("bs");
    CHECK(juxtapose(bs, bs) == P("x0*x3^2 + x1*x3*x4 + x2*x4^2 + x5*x8^2 + x6*x8*x9 + x7*x9^2", 10));
    CHECK(juxtapose(P("x0^3", 1), P("x0^3", 1)) == P("x0^3 + x1^3", 2));
    FamilySpec s;
    s.family = "juxtapose";
    s.copies = 3;
    auto triple = generate(s);
    CHECK(triple.nvars() == 15);
    CHECK(triple.coefficient(Exponents{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 0}) == 1);
    CHECK_THROWS_AS(juxtapose(bs, P("x0^2", 1)), UsageError);
  }

  TEST_CASE("concatenation") {
    auto bs = family("bs");
    CHECK(concatenate(bs, {2, 5, 6, 4, 7}, 8) == family("concat"));
    // No shared monomials: same as juxtaposing.
    CHECK(concatenate(bs, 5) == juxtapose(bs, bs));
    auto lopsided = P("x0^3 + 2*x1^3", 2);  // x1^3 is shared with coefficients 2 and 1
    CHECK_THROWS_AS(concatenate(lopsided, {1, 2}, 3), ConstructionError);
  }

  TEST_CASE("tangent sections") {
    RVector diag(9, Rational(0));
    diag[0] = 1;
    diag[4] = 1;
    CHECK(tangent_section(family("det3"), diag) == family("det3_section"));
    CHECK(tangent_section(family("pf6"), pf6_rank4_point()) == family("pf6_section"));
    CHECK(tangent_section(family("pf6"), pf6_rank4_point()).nvars() == 14);

    auto quadric = P("x0*x1 + x2^2", 3);
    auto cut = tangent_section(quadric, RVector{1, 0, 0});
    CHECK(hess_vanishes(cut, HessMode::Symbolic).vanishes);

    RVector zero_rank(9, Rational(0));
    zero_rank[0] = 1;
    CHECK_THROWS_AS(tangent_section(family("det3"), zero_rank), UsageError);
    RVector identity(9, Rational(0));
    identity[0] = identity[4] = identity[8] = 1;
    CHECK_THROWS_AS(tangent_section(family("det3"), identity), UsageError);
  }

  TEST_CASE("the generic 6x6 skew matrix") {
    auto m = generic_skew6();
    CHECK(m.is_skew_symmetric());
    auto pf = pfaffian(m);
    CHECK(pf.num_terms() == 15);
    CHECK(pf == family("pf6"));
    CHECK(pf.pow(2) == det_symbolic(m));
  }

  TEST_CASE("large tau in classe1") {
    FamilySpec s;
    s.family = "classe1";
    s.N = 7;
    s.tau = 4;  // 4 > (7 - 1) / 2
    CHECK(hess_vanishes(generate(s), HessMode::Symbolic).vanishes);
    s.tau = 5;  // 5 > 2 * 3 / 2 - 1
    CHECK_FALSE(vertex_space(generate(s)).empty());
  }

  TEST_CASE("tangency of polar quadrics along the generator") {
    // For canonical special forms, L = V(x_{N-s+1}, ..., x_N) lies in T_m Q_p for m in M = V(x_{s+1}, ..., x_N):
    // l^T Hess(p) m = 0 for every l in L.
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      FamilySpec s;
      s.family = "canSPCH";
      s.N = 6 + seed % 3;
      s.tau = 2 + seed % 2;
      s.seed = seed;
      auto f = generate(s);
      const std::size_t n = s.N + 1;
      auto h = hessian_matrix(f);
      auto p = generic_point(f, s.N, seed);
      auto hp = h.evaluate(RationalField{}, std::span<const Rational>(p));
      for (std::size_t li = 0; li + s.tau < n; ++li) {
        for (std::size_t mi = 0; mi <= s.tau; ++mi) CHECK(hp(li, mi) == 0);
      }
    }
  }

  TEST_CASE("mu1 in six variables: a cone exactly when D is singular along the line") {
    FamilySpec s;
    s.family = "mu1";
    s.N = 6;
    s.zero_D = true;
    CHECK_FALSE(vertex_space(generate(s)).empty());
    s.zero_D = false;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      s.seed = seed;
      CHECK(vertex_space(generate(s)).empty());
    }
    // D = x3*x5^2 + x4*x5*x6 is singular along V(x0, x1, x2, x5, x6); e0 - e3 is then a vertex.
    auto cone = P("x0*x5^2 + 2*x1*x5*x6 + x2*x6^2 + x3*x5^2 + x4*x5*x6", 7);
    CHECK(vertex_space(cone).contains(RVector{1, 0, 0, -1, 0, 0, 0}));
    CHECK_FALSE(vertex_space(cone).empty());
  }

  TEST_CASE("mu1 stays flat in twenty variables") {
    FamilySpec s;
    s.family = "mu1";
    s.N = 20;
    auto f = generate(s);
    CHECK(f.nvars() == 21);
    CHECK(hess_vanishes(f, HessMode::Symbolic).vanishes);
  }
}
