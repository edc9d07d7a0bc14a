#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vhess/poly.hpp"
#include "vhess/polymatrix.hpp"

namespace vhess {

/// Text of a polynomial in x0, x1, ... and an optional declared variable count.
struct PolySource {
  std::string text;
  std::optional<std::size_t> declared_nvars;
};

struct ParsedPoly {
  MultiPoly poly;
  bool homogeneous = true;
  int degree = -1;
};

/// Parses
///   expr   := term (('+'|'-') term)*
///   term   := ['-'] factor ('*' factor)*
///   factor := coeff | var ('^' nat)? | '(' expr ')'
///   coeff  := '-'? nat ('/' nat)?     var := 'x' nat
/// ASCII only; '#' starts a comment running to the end of the line; the text may begin with a
/// header "nvars: <k>". Implicit multiplication is rejected.
ParsedPoly parse_poly(const PolySource& src);
ParsedPoly parse_poly(std::string_view text);

/// Deterministic graded-lex rendering accepted back by parse_poly.
std::string print_poly(const MultiPoly& f);

/// Rows as "[[e00, e01], [e10, e11]]".
std::string print_matrix(const PolyMatrix& m);
PolyMatrix parse_matrix(std::string_view text, std::optional<std::size_t> declared_nvars = std::nullopt);

/// Reads a polynomial file from disk (throws UsageError when the file cannot be read).
ParsedPoly read_poly_file(const std::string& path);

}  // namespace vhess
