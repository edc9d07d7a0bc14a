#include <doctest.h>

#include <cmath>

#include "vhess/examples.hpp"
#include "vhess/hessian.hpp"
#include "vhess/parse.hpp"

using namespace vhess;

namespace {

MultiPoly P(const char* text, std::size_t nvars) { return parse_poly(PolySource{text, nvars}).poly; }

MultiPoly family(const char* name) {
  FamilySpec s;
  s.family = name;
  return generate(s);
}

}  // namespace

TEST_SUITE("hessian") {
  TEST_CASE("Hessian matrices") {
    CHECK(hessian_matrix(P("x0^3 + x1^3 + x2^3", 3)) == parse_matrix("[[6*x0, 0, 0], [0, 6*x1, 0], [0, 0, 6*x2]]", 3));
    auto h = hessian_matrix(family("bs"));
    CHECK(h == parse_matrix(
                   "[[0,0,0,2*x3,0],[0,0,0,x4,x3],[0,0,0,0,2*x4],[2*x3,x4,0,2*x0,x1],[0,x3,2*x4,x1,2*x2]]", 5));
    CHECK(hessian_matrix(family("det3_section")).is_symmetric());
  }

  TEST_CASE("vanishing decisions") {
    auto bs = hess_vanishes(family("bs"), HessMode::Symbolic);
    CHECK(bs.vanishes);
    CHECK(bs.certainty == Certainty::ExactSymbolic);
    CHECK(bs.determinant.is_zero());

    auto sing = hess_vanishes(family("singp2"), HessMode::Symbolic);
    CHECK_FALSE(sing.vanishes);

    auto fermat = hess_vanishes(P("x0^3 + x1^3 + x2^3", 3), HessMode::Symbolic);
    CHECK_FALSE(fermat.vanishes);
    CHECK(fermat.determinant == P("216*x0*x1*x2", 3));
  }

  TEST_CASE("Monte-Carlo mode agrees and reports a bound") {
    auto bs = hess_vanishes(family("bs"), HessMode::MonteCarlo);
    CHECK(bs.vanishes);
    CHECK(bs.certainty == Certainty::MonteCarlo);
    CHECK(bs.log2_failure_bound < -40);
    auto fermat = hess_vanishes(P("x0^3 + x1^3 + x2^3", 3), HessMode::MonteCarlo);
    CHECK_FALSE(fermat.vanishes);
    // A nonzero evaluation proves nonvanishing outright.
    CHECK(std::isinf(fermat.log2_failure_bound));
  }

  TEST_CASE("generic ranks") {
    auto bs = generic_rank(hessian_matrix(family("bs")));
    CHECK(bs.claimed_rank == 4);
    CHECK(bs.log2_failure_bound < -40);
    CHECK(bs.primes_used.size() == 2);
    CHECK(generic_rank(hessian_matrix(family("det3_section"))).claimed_rank == 7);
    auto fermat = generic_rank(hessian_matrix(P("x0^3 + x1^3 + x2^3", 3)));
    CHECK(fermat.claimed_rank == 3);
    CHECK(fermat.certainty == Certainty::ExactSymbolic);
  }

  TEST_CASE("the witness reproduces the claimed rank") {
    auto h = hessian_matrix(family("concat"));
    auto c = generic_rank(h);
    PrimeField F(c.witness_prime);
    auto m = h.evaluate(F, std::span<const PrimeField::Elem>(c.witness_point));
    CHECK(rank(F, m) == c.claimed_rank);
  }

  TEST_CASE("same seed, same certificate") {
    SamplingOptions o;
    o.seed = 42;
    auto a = generic_rank(hessian_matrix(family("exdet")), o);
    auto b = generic_rank(hessian_matrix(family("exdet")), o);
    CHECK(a.witness_point == b.witness_point);
    CHECK(a.log2_failure_bound == b.log2_failure_bound);
  }

  TEST_CASE("vertex spaces") {
    CHECK(vertex_space(family("bs")).empty());
    CHECK(vertex_space(P("x0*x2^2 + x1*x2^2", 3)).contains(RVector{1, -1, 0}));
    CHECK(vertex_space(P("x0*x1^2", 3)).contains(RVector{0, 0, 1}));
  }

  TEST_CASE("sampled points lie on the hypersurface") {
    PrimeField F;
    auto bs = family("bs");
    CompiledPoly c(bs, F);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto p = sample_point_on(bs, F, seed);
      CHECK(c(p) == 0);
      CHECK(p == sample_point_on(bs, F, seed));
    }
    auto hyper = sample_point_on(P("x0", 3), F, 3);
    CHECK(hyper[0] == 0);
    auto mono = sample_point_on(P("x0*x1*x2", 3), F, 5);
    CHECK((mono[0] == 0 || mono[1] == 0 || mono[2] == 0));
  }

  TEST_CASE("rank modulo f") {
    CHECK(rank_mod_f(family("bs")).claimed_rank == 4);
    CHECK(rank_mod_f(family("det3_section")).claimed_rank == 6);
    CHECK(rank_mod_f(P("x0^3 + x1^3 + x2^3", 3)).claimed_rank == 3);
  }
}
