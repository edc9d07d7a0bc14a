#include <doctest.h>

#include "vhess/parse.hpp"
#include "vhess/polymatrix.hpp"
#include "vhess/random.hpp"
#include "vhess/subspace.hpp"

using namespace vhess;

namespace {

MultiPoly P(const char* text, std::size_t nvars) { return parse_poly(PolySource{text, nvars}).poly; }

Rational at(const MultiPoly& f, const RVector& p) { return f.evaluate(RationalField{}, std::span<const Rational>(p)); }

RVector R(std::initializer_list<long> xs) {
  RVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("arithmetic") {
    CHECK(P("x0 + x1", 2) * P("x0 - x1", 2) == P("x0^2 - x1^2", 2));
    CHECK(P("x0*x3^2", 5) * P("x1*x4", 5) == P("x0*x1*x3^2*x4", 5));
    auto f = P("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5);
    CHECK(f + MultiPoly(5) == f);
    CHECK((f - f).is_zero());
    CHECK(f.scaled(Rational(3, 2)) == P("3/2*x0*x3^2 + 3/2*x1*x3*x4 + 3/2*x2*x4^2", 5));
    CHECK(P("x0 + x1", 2).pow(3) == P("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3", 2));
  }

  TEST_CASE("mixing rings is a usage error") {
    CHECK_THROWS_AS(P("x0", 2) + P("x0", 3), UsageError);
  }

  TEST_CASE("differentiation") {
    auto bs = P("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5);
    CHECK(bs.differentiate(3) == P("2*x0*x3 + x1*x4", 5));
    CHECK(P("x0*x3^2", 5).differentiate(2).is_zero());
    CHECK(P("x0^3", 1).differentiate(0) == P("3*x0^2", 1));
  }

  TEST_CASE("evaluation") {
    auto bs = P("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5);
    CHECK(at(bs, R({1, 1, 1, 1, 1})) == 3);
    CHECK(at(bs, R({0, 0, 0, 0, 0})) == 0);
    CHECK(at(P("x0*x2 - x1^2", 3), R({1, 2, 4})) == 0);
    PrimeField F(kMersenne31);
    std::vector<PrimeField::Elem> p{1, 1, 1, 1, 1};
    CHECK(bs.evaluate(F, std::span<const PrimeField::Elem>(p)) == 3);
    CompiledPoly c(bs, F);
    CHECK(c(p) == 3);
  }

  TEST_CASE("grlex order and leading term") {
    auto f = P("x1^2 + x0*x2", 3);
    CHECK(f.leading_term().first == Exponents{1, 0, 1});
    CHECK(f.degree() == 2);
    CHECK(f.is_homogeneous());
    CHECK_FALSE(P("x0^2 + x1", 2).is_homogeneous());
  }

  TEST_CASE("linear substitution") {
    auto f = P("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5);
    std::vector<RVector> id(5, RVector(5, 0));
    for (int i = 0; i < 5; ++i) id[i][i] = 1;
    CHECK(f.substitute_linear(id) == f);

    std::vector<RVector> swap{R({0, 1}), R({1, 0})};
    CHECK(P("x0^2", 2).substitute_linear(swap) == P("x1^2", 2));

    // x0 -> x0 - a x3 - b x4, x2 -> x2 - c x3 - d x4 absorbs the cubic D = (a x3 + b x4) x3^2 + (c x3 + d x4) x4^2.
    const long a = 2, b = -3, c = 5, d = 7;
    auto with_d = P("x0*x3^2 + 2*x1*x3*x4 + x2*x4^2", 5) +
                  P("2*x3^3 - 3*x3^2*x4 + 5*x3*x4^2 + 7*x4^3", 5);
    std::vector<RVector> t(5, RVector(5, 0));
    for (int i = 0; i < 5; ++i) t[i][i] = 1;
    t[0][3] = -a;
    t[0][4] = -b;
    t[2][3] = -c;
    t[2][4] = -d;
    CHECK(with_d.substitute_linear(t) == P("x0*x3^2 + 2*x1*x3*x4 + x2*x4^2", 5));

    std::vector<RVector> singular{R({1, 1}), R({1, 1})};
    CHECK_THROWS_AS(P("x0^2", 2).substitute_linear(singular), UsageError);
  }

  TEST_CASE("monomial content and primitive part") {
    auto f = P("6*x0^2*x1 + 4*x0*x1^2", 2);
    CHECK(f.monomial_content() == Exponents{1, 1});
    CHECK(f.divide_by_monomial(f.monomial_content()) == P("6*x0 + 4*x1", 2));
    CHECK(f.primitive() == P("3*x0^2*x1 + 2*x0*x1^2", 2));
    CHECK((-f).primitive() == f.primitive());
    CHECK(P("x0^2 - x1^2", 2).exact_divide(P("x0 - x1", 2)) == P("x0 + x1", 2));
    CHECK_FALSE(P("x0^2 + x1^2", 2).exact_divide(P("x0 - x1", 2)).has_value());
  }

  TEST_CASE("rank and kernel") {
    Matrix<Rational> id(5, 5, Rational(0));
    for (int i = 0; i < 5; ++i) id(i, i) = 1;
    auto rk = rank_kernel(id);
    CHECK(rk.rank == 5);
    CHECK(rk.kernel.empty());

    auto zero = rank_kernel(Matrix<Rational>(4, 4, Rational(0)));
    CHECK(zero.rank == 0);
    CHECK(zero.kernel == LinearSubspace::whole(4));

    auto h = parse_matrix(
        "[[0,0,0,2*x3,0],[0,0,0,x4,x3],[0,0,0,0,2*x4],[2*x3,x4,0,2*x0,x1],[0,x3,2*x4,x1,2*x2]]", 5);
    RVector e3 = R({0, 0, 0, 1, 0});
    auto at_e3 = rank_kernel(h.evaluate(RationalField{}, std::span<const Rational>(e3)));
    CHECK(at_e3.rank == 4);
    CHECK(at_e3.kernel == LinearSubspace::span(5, {R({0, 0, 1, 0, 0})}));
  }

  TEST_CASE("row reduction agrees over Q and F_p") {
    Rng rng(17);
    PrimeField F;
    for (int trial = 0; trial < 20; ++trial) {
      Matrix<Rational> q(4, 6, Rational(0));
      Matrix<PrimeField::Elem> m(4, 6, 0);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
          auto v = rng.integer(-5, 5);
          q(i, j) = Rational(static_cast<long>(v));
          m(i, j) = F.from_int(v);
        }
      for (std::size_t j = 0; j < 6; ++j) {  // last row = first + second
        q(3, j) = q(0, j) + q(1, j);
        m(3, j) = F.add(m(0, j), m(1, j));
      }
      CHECK(rank_kernel(q).rank == rank(F, m));
      CHECK(rank(RationalField{}, q) <= 3);
    }
  }

  TEST_CASE("linear subspaces are canonical") {
    auto a = LinearSubspace::span(3, {R({1, 1, 0}), R({1, -1, 0})});
    auto b = LinearSubspace::span(3, {R({2, 0, 0}), R({0, 5, 0})});
    CHECK(a == b);
    CHECK(a == LinearSubspace::coordinate(3, {2}));
    CHECK(a.dim() == 1);
    CHECK(a.to_string() == "V(x2)");
    CHECK(a.contains(R({3, 4, 0})));
    CHECK_FALSE(a.contains(R({0, 0, 1})));
    auto line = LinearSubspace::coordinate(3, {0});
    CHECK(a.intersect(line) == LinearSubspace::span(3, {R({0, 1, 0})}));
    CHECK(a.join(line) == LinearSubspace::whole(3));
    CHECK(ProjPoint(R({2, 4, -6})) == ProjPoint(R({-1, -2, 3})));
  }

  TEST_CASE("symbolic determinants") {
    CHECK(det_symbolic(parse_matrix("[[x0, x1], [x1, x2]]", 3)) == P("x0*x2 - x1^2", 3));
    auto A = parse_matrix("[[2*x1, x0, x2], [x0, 0, x3], [x2, x3, 0]]", 7);
    CHECK(det_symbolic(A) == P("2*x0*x2*x3 - 2*x1*x3^2", 7));
    CHECK(det_bareiss(A) == det_cofactor(A));
    auto dense = parse_matrix("[[x0, x1, x2], [x1, x0 + x2, x1], [x2, x1, x0 - x1]]", 3);
    CHECK(det_bareiss(dense) == det_cofactor(dense));
    CHECK(det_symbolic(dense) == det_cofactor(dense));
  }

  TEST_CASE("structural rank") {
    auto m = parse_matrix("[[x0, x1, 0], [x2, 0, 0], [x1, 0, 0]]", 3);
    CHECK(structural_rank(m) == 2);
    CHECK(det_symbolic(m).is_zero());
  }

  TEST_CASE("Pfaffians") {
    CHECK(pfaffian(parse_matrix("[[0, x0], [-x0, 0]]", 1)) == P("x0", 1));
    auto m4 = parse_matrix(
        "[[0, x0, x1, x2], [-x0, 0, x3, x4], [-x1, -x3, 0, x5], [-x2, -x4, -x5, 0]]", 6);
    // m01 m23 - m02 m13 + m03 m12 with m01=x0, m02=x1, m03=x2, m12=x3, m13=x4, m23=x5.
    CHECK(pfaffian(m4) == P("x0*x5 - x1*x4 + x2*x3", 6));
    CHECK(pfaffian(m4).pow(2) == det_symbolic(m4));
  }
}
