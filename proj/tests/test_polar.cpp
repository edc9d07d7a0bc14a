#include <doctest.h>

#include "vhess/examples.hpp"
#include "vhess/parse.hpp"
#include "vhess/polar.hpp"

using namespace vhess;

namespace {

MultiPoly P(const char* text, std::size_t nvars) { return parse_poly(PolySource{text, nvars}).poly; }

MultiPoly family(const char* name) {
  FamilySpec s;
  s.family = name;
  return generate(s);
}

RVector R(std::initializer_list<long> xs) {
  RVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool proportional(const MultiPoly& a, const MultiPoly& b) { return a.primitive() == b.primitive(); }

}  // namespace

TEST_SUITE("polar") {
  TEST_CASE("polar map values") {
    auto bs = family("bs");
    CHECK(polar_map_eval(bs, R({0, 0, 0, 1, 0})) == ProjPoint(R({1, 0, 0, 0, 0})));
    CHECK(polar_map_eval(bs, R({1, 1, 1, 1, 1})) == ProjPoint(R({1, 1, 1, 3, 3})));
    CHECK_THROWS_AS(polar_map_eval(bs, R({1, 0, 0, 0, 0})), DegenerateError);
  }

  TEST_CASE("polars of each degree") {
    auto conic = polar_hypersurface(P("x0*x2 - x1^2", 3), R({1, 0, 0}), 1);
    CHECK(proportional(conic.form, P("x2", 3)));
    auto q = polar_hypersurface(family("bs"), R({0, 0, 0, 1, 0}), 2);
    CHECK(proportional(q.form, P("2*x0*x3 + x1*x4", 5)));
    // The vertex of a cone has full multiplicity: its (d-1)-polar vanishes.
    auto cone = polar_hypersurface(P("x0^3", 2), R({0, 1}), 2);
    CHECK(cone.everything);
    CHECK(cone.form.is_zero());
    CHECK_THROWS_AS(polar_hypersurface(family("bs"), R({1, 1, 1, 1, 1}), 3), UsageError);
  }

  TEST_CASE("singular locus of polar quadrics") {
    auto bs = family("bs");
    CHECK(polar_quadric_sing(bs, R({0, 0, 0, 1, 0})) == LinearSubspace::span(5, {R({0, 0, 1, 0, 0})}));
    auto k = polar_quadric_sing(bs, R({3, -2, 5, 7, 11}));
    REQUIRE(k.size() == 1);
    const auto& z = k.basis()[0];
    CHECK(z[3] == 0);
    CHECK(z[4] == 0);
    CHECK(4 * z[0] * z[2] - z[1] * z[1] == 0);
    CHECK(polar_quadric_sing(P("x0*x1^2", 3), R({2, 3, 5})).contains(R({0, 0, 1})));
  }

  TEST_CASE("relations among the partials") {
    auto bs = find_relations(family("bs"), 2);
    CHECK(bs.degree == 2);
    REQUIRE(bs.basis.size() == 1);
    CHECK(proportional(bs.basis[0], P("x0*x2 - x1^2", 5)));
    CHECK(bs.minimal);

    auto det = find_relations(family("det3_section"), 2);
    REQUIRE(det.basis.size() == 1);
    CHECK(proportional(det.basis[0], P("x0*x4 - x1*x3", 8)));

    auto concat = find_relations(family("concat"), 2);
    CHECK(concat.basis.size() == 2);

    auto fermat = find_relations(P("x0^3 + x1^3 + x2^3", 3), 3);
    CHECK(fermat.basis.empty());
    CHECK(fermat.degree == 0);
    CHECK(fermat.searched_up_to == 3);
  }

  TEST_CASE("Gordan-Noether maps") {
    auto bs = family("bs");
    auto gn = gn_map_build(bs, P("x0*x2 - x1^2", 5));
    REQUIRE(gn.components.size() == 5);
    // (dg/dy)(grad f) = (f2, -2 f1, f0, 0, 0) = (x4^2, -2 x3 x4, x3^2, 0, 0).
    CHECK(gn.components[0] == P("x4^2", 5));
    CHECK(gn.components[1] == P("-2*x3*x4", 5));
    CHECK(gn.components[2] == P("x3^2", 5));
    CHECK(gn.components[3].is_zero());
    CHECK(gn.components[4].is_zero());
    CHECK_FALSE(gn.degenerate);

    // psi(p) is a singular point of X.
    RVector p = R({2, -3, 5, 7, 1});
    RVector psi;
    for (const auto& c : gn.components) psi.push_back(c.evaluate(RationalField{}, std::span<const Rational>(p)));
    for (std::size_t i = 0; i < 5; ++i)
      CHECK(bs.differentiate(i).evaluate(RationalField{}, std::span<const Rational>(psi)) == 0);

    CHECK_THROWS_AS(gn_map_build(bs, P("x0*x1", 5)), NotARelationError);
    CHECK(gn_identity_check(bs, gn).all_passed());
  }

  TEST_CASE("identities hold for every relation of the worked examples") {
    for (const char* name : {"bs", "exdet", "concat", "det3_section", "juxtapose"}) {
      auto f = family(name);
      for (const auto& g : find_relations(f, 3).basis) {
        auto gn = gn_map_build(f, g);
        CHECK_MESSAGE(gn_identity_check(f, gn).all_passed(), name);
      }
    }
  }

  TEST_CASE("restriction to hyperplanes") {
    auto fermat = restrict_to_hyperplane(P("x0^3 + x1^3 + x2^3", 3), R({0, 0, 1}));
    CHECK(fermat.form == P("x0^3 + x1^3", 2));
    CHECK(fermat.eliminated == 2);

    auto det3 = family("det3");
    auto section = restrict_to_hyperplane(det3, R({0, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(section.form == family("det3_section"));

    CHECK_THROWS_AS(restrict_to_hyperplane(P("x0*x1^2 + x0*x2^2", 3), R({1, 0, 0})), UsageError);
  }
}
