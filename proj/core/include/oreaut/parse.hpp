#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "oreaut/gf.hpp"
#include "oreaut/poly.hpp"

namespace oreaut {

/// "GF(p)", "GF(p^m)", "GF(q)" for a prime power q, each optionally followed by
/// ", mod=c0,c1,...,cm" (monic modulus, coefficients low to high) inside or after the parentheses.
FieldPtr parse_field(std::string_view text);

/// An integer (reduced mod p) or a coordinate vector "[c0,c1,...]" (low to high, may be short).
Elem parse_element(const Field& F, std::string_view text);

/// Syntax tree of a ring expression in the variables x and y.
struct Expr {
  enum class Kind { Int, Literal, Var, Add, Sub, Neg, Mul, Pow };
  Kind kind = Kind::Int;
  long long value = 0;              // Int
  std::vector<unsigned> coords;     // Literal
  char var = 'x';                   // Var
  std::uint64_t exponent = 0;       // Pow
  std::size_t pos = 0;
  std::vector<std::unique_ptr<Expr>> kids;
};

/// Parses "+ - * ^ ( )", integers, element literals "[..]" and the given variables.
/// Juxtaposition ("2x", "x(x+1)") means multiplication.
std::unique_ptr<Expr> parse_expr(std::string_view text, std::string_view variables);

/// Polynomial text: an expression in x, or a whole-input coefficient vector "[a0,a1,...]"
/// whose entries are integers or element literals.
Poly parse_poly(const FieldPtr& F, std::string_view text);

/// "x^3 + 2*x + 1"; "0" for the zero polynomial.
std::string format_poly(const Poly& f);
/// Same terms without spaces, for nesting inside larger expressions.
std::string format_poly_compact(const Poly& f);

}  // namespace oreaut
