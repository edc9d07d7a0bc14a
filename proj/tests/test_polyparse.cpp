#include <doctest.h>

#include "vhess/examples.hpp"
#include "vhess/parse.hpp"
#include "vhess/random.hpp"

using namespace vhess;

TEST_SUITE("polyparse") {
  TEST_CASE("reads the displayed cubics") {
    auto bs = parse_poly("x0*x3^2 + x1*x3*x4 + x2*x4^2");
    CHECK(bs.poly.nvars() == 5);
    CHECK(bs.poly.num_terms() == 3);
    CHECK(bs.homogeneous);
    CHECK(bs.degree == 3);

    auto ex = parse_poly("x0*x4*x5 + x1*x4^2 + x2*x4*x6 + x3*x5*x6");
    CHECK(ex.poly.nvars() == 7);
    CHECK(ex.poly.num_terms() == 4);
  }

  TEST_CASE("declared variable count and header") {
    CHECK(parse_poly(PolySource{"x0*x2^2", 6}).poly.nvars() == 6);
    CHECK(parse_poly("nvars: 6\nx0*x2^2\n").poly.nvars() == 6);
    CHECK_THROWS_AS(parse_poly(PolySource{"x7", 3}), ParseError);
  }

  TEST_CASE("coefficients, parentheses, comments") {
    auto f = parse_poly("3/2*x0^2 - (x0 - x1)*(x0 + x1) # trailing comment\n").poly;
    CHECK(f == parse_poly(PolySource{"1/2*x0^2 + x1^2", 2}).poly);
    CHECK(parse_poly("-x0^2 + x1^2").poly == parse_poly("x1^2 - x0^2").poly);
    CHECK(parse_poly("x0^2 + x1").homogeneous == false);
  }

  TEST_CASE("syntax errors carry positions") {
    try {
      parse_poly("x0 + ");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() >= 5);
    }
    CHECK_THROWS_AS(parse_poly("x0x1"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0^1.5"), ParseError);
    CHECK_THROWS_AS(parse_poly("y0 + x1"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0 + \xc3\xa9"), ParseError);
    CHECK_THROWS_AS(parse_poly("(x0 + x1"), ParseError);
    CHECK_THROWS_AS(parse_poly("3/0*x0"), ParseError);
    try {
      parse_poly("x0 +\n  * x1");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
  }

  TEST_CASE("printing") {
    CHECK(print_poly(parse_poly("x0^2 - x1^2").poly) == "x0^2 - x1^2");
    CHECK(print_poly(MultiPoly(3)) == "0");
    CHECK(print_poly(parse_poly("-1/3*x1 + 2*x0").poly) == "2*x0 - 1/3*x1");
  }

  TEST_CASE("round trip of the concatenation cubic") {
    FamilySpec s;
    s.family = "concat";
    auto f = generate(s);
    CHECK(parse_poly(PolySource{print_poly(f), f.nvars()}).poly == f);
  }

  TEST_CASE("round trip fuzz") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Rng rng(derive_seed(99, 1, seed));
      const std::size_t n = 1 + static_cast<std::size_t>(rng.integer(0, 6));
      MultiPoly f(n);
      const int terms = static_cast<int>(rng.integer(0, 8));
      for (int t = 0; t < terms; ++t) {
        Exponents e(n);
        for (auto& x : e) x = static_cast<std::uint16_t>(rng.integer(0, 3));
        f.add_term(e, Rational(static_cast<long>(rng.integer(-20, 20)), static_cast<unsigned long>(rng.integer(1, 6))));
      }
      auto back = parse_poly(PolySource{print_poly(f), n}).poly;
      CHECK_MESSAGE(back == f, print_poly(f));
    }
  }

  TEST_CASE("matrices") {
    auto m = parse_matrix("[[x0, 2*x1], [2*x1, x2]]");
    CHECK(m.rows() == 2);
    CHECK(m.is_symmetric());
    CHECK(parse_matrix(print_matrix(m), m.nvars()) == m);
    CHECK_THROWS_AS(parse_matrix("[[x0, x1], [x2]]"), ParseError);
  }
}
