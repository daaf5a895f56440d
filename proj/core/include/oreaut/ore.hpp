#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oreaut/gf.hpp"
#include "oreaut/poly.hpp"

namespace oreaut {

/// Element Σ a_i(x) y^i of Λ(f) in normal form (x-part to the left of y-powers).
/// terms[i] = a_i; the last entry is nonzero unless the element is zero.
struct OreElement {
  FieldPtr F;
  std::vector<Poly> terms;

  bool is_zero() const { return terms.empty(); }
  /// y-degree, -1 for zero.
  int degree() const { return static_cast<int>(terms.size()) - 1; }
  Poly coeff(std::size_t i) const { return i < terms.size() ? terms[i] : Poly(F); }
  bool operator==(const OreElement& o) const { return terms == o.terms; }
  bool operator!=(const OreElement& o) const { return !(*this == o); }
  void normalize();
};

/// δ^k(g) for δ = f·d/dx.
Poly delta_power(const Poly& f, const Poly& g, unsigned k);
/// Binomial coefficient C(n, k) reduced mod p (Lucas).
unsigned binom_mod(std::uint64_t n, std::uint64_t k, unsigned p);

/// Λ(f) = K[x][y; f·d/dx], i.e. K<x, y> with yx - xy = f.
class OreAlgebra {
 public:
  /// f must be monic or zero.
  explicit OreAlgebra(Poly f);

  const Poly& f() const { return f_; }
  const FieldPtr& field() const { return f_.field(); }
  int d() const { return f_.degree(); }

  OreElement zero() const { return OreElement{field(), {}}; }
  OreElement one() const { return constant(1); }
  OreElement constant(Elem c) const;
  OreElement x() const;
  OreElement y() const;
  OreElement from_poly(const Poly& a) const;
  /// a(x)·y^i.
  OreElement term(const Poly& a, std::size_t i) const;

  OreElement add(const OreElement& a, const OreElement& b) const;
  OreElement sub(const OreElement& a, const OreElement& b) const;
  OreElement neg(const OreElement& a) const;
  OreElement scale(const OreElement& a, Elem c) const;
  OreElement mul(const OreElement& a, const OreElement& b) const;
  OreElement pow(const OreElement& a, std::uint64_t e) const;
  /// ab - ba.
  OreElement commutator(const OreElement& a, const OreElement& b) const;
  /// Σ a_i(X) Y^i evaluated in this algebra for images X, Y of x and y.
  OreElement substitute(const OreElement& a, const OreElement& X, const OreElement& Y) const;
  /// a(X) for a polynomial a.
  OreElement eval_poly(const Poly& a, const OreElement& X) const;

  bool is_central(const OreElement& a) const;
  /// The automorphism x ↦ x, y ↦ y - f'; verifies f·a = ω_f(a)·f.
  OreElement omega_f(const OreElement& a) const;

  OreElement parse(std::string_view text) const;
  /// "(x^2+1)*y^2 + x*y + 3", y-powers descending.
  std::string format(const OreElement& a) const;

 private:
  void check(const OreElement& a) const;
  Poly f_;
};

struct CentreGens {
  OreElement z1;  // x^p
  OreElement z2;  // y^p - c(x) y
  Poly c;         // (δ^{p-2}(f))'
};

CentreGens centre_generators(const OreAlgebra& A);

/// One term coeff · z1^alpha z2^beta x^i y^j of a decomposition over the centre.
struct CentralTerm {
  unsigned alpha = 0, beta = 0, i = 0, j = 0;
  Elem coeff = 0;
  bool operator==(const CentralTerm&) const = default;
};

/// Writes a as Σ c·z1^α z2^β x^i y^j with 0 <= i, j < p by leading-term reduction.
std::vector<CentralTerm> central_decomposition(const OreAlgebra& A, const OreElement& a);
OreElement central_recompose(const OreAlgebra& A, const std::vector<CentralTerm>& terms);

}  // namespace oreaut
