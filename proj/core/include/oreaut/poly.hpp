#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oreaut/gf.hpp"

namespace oreaut {

/// Dense univariate polynomial over a finite field, lowest degree first.
/// The coefficient vector never ends in a zero (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr F) : F_(std::move(F)) {}
  Poly(FieldPtr F, std::vector<Elem> coeffs);

  static Poly constant(const FieldPtr& F, Elem a);
  static Poly monomial(const FieldPtr& F, Elem a, std::size_t k);
  static Poly x(const FieldPtr& F) { return monomial(F, 1, 1); }
  /// ∏ (x - r) over the given roots.
  static Poly from_roots(const FieldPtr& F, const std::vector<Elem>& roots);

  const FieldPtr& field() const { return F_; }
  const Field& F() const { return *F_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem a) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return c_ == o.c_ && (c_.empty() || same_field(F_, o.F_)); }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Total order: by degree, then coefficients from the top.
  bool operator<(const Poly& o) const;

  Poly monic() const;
  Poly derivative() const;
  Poly pow(std::uint64_t e) const;
  Elem eval(Elem a) const;
  /// Smallest i with coefficient i nonzero (the x-adic valuation); 0 for zero.
  std::size_t valuation() const;
  /// x^{-k} * this; requires valuation() >= k.
  Poly shift_down(std::size_t k) const;
  Poly shift_up(std::size_t k) const;

 private:
  void trim();
  FieldPtr F_;
  std::vector<Elem> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& mod);
/// g(h(x)).
Poly compose(const Poly& g, const Poly& h);
/// f(λx + μ).
Poly affine_subst(const Poly& f, Elem lambda, Elem mu);
/// f(x + ν).
Poly translate(const Poly& f, Elem nu);

/// The same polynomial with coefficients mapped into the extension level of a tower.
Poly embed(const Poly& f, const Tower& T);
/// The polynomial over the base level, if every coefficient lies there.
std::optional<Poly> restrict(const Poly& f, const Tower& T);

/// gcd{i >= 1 : a_i != 0}; 0 for constants.
std::uint64_t exponent_gcd(const Poly& f);
/// The p'-part of exponent_gcd (1 for constants).
std::uint64_t gcd_p(const Poly& f);
/// The polynomial g with f(x) = g(x^n); requires n | exponent_gcd(f).
Poly index_divide(const Poly& f, std::uint64_t n);

struct ExponentDecomp {
  unsigned s = 0;
  std::uint64_t gcd_p = 1;
  Poly f1;
};
/// f = f1^(p^s) with gcd(f) = p^s * gcd_p and f1' != 0.
ExponentDecomp exponent_decomp(const Poly& f);

/// Degree over the coefficient field of the smallest extension splitting f
/// (lcm of the irreducible-factor degrees, from distinct-degree splitting).
unsigned splitting_degree(const Poly& f);

struct Root {
  Elem value;
  unsigned mult;
  bool operator==(const Root&) const = default;
};

struct RootMultiset {
  FieldPtr field;  // L, the field the roots live in
  TowerPtr tower;  // coefficient field of f ⊆ L
  unsigned M = 0;  // degree of L over F_p
  std::vector<Root> roots;  // ascending by code
  std::size_t total() const;
  std::vector<Elem> distinct() const;
  unsigned multiplicity(Elem r) const;
};

/// found by splitting gcd(f, x^q - x) into linear factors, with multiplicities.
/// found by exhaustive evaluation, with multiplicities.
std::vector<Root> roots_in(const Poly& f);
/// All roots of f in its minimal splitting field L over the coefficient field.
RootMultiset roots_with_multiplicity(const Poly& f);
/// Roots of f in a given extension L of f's coefficient field.
RootMultiset roots_over(const Poly& f, const FieldPtr& L);

/// ∏_{v ∈ V} (x - ν - v); V is the full element list of an F_p-space.
Poly f_V(const FieldPtr& F, const std::vector<Elem>& V, Elem nu = 0);
/// f_V for the F_p-span of basis.
Poly f_V_basis(const FieldPtr& F, const std::vector<Elem>& basis, Elem nu = 0);
/// Largest e with F_{p^e} V ⊆ V (e | [F : F_p]); V given by an F_p-basis.
unsigned multiplier_field(const Field& F, const std::vector<Elem>& basis);
/// The unique monic g with f = g(h), if it exists.
std::optional<Poly> decompose_through(const Poly& f, const Poly& h);

}  // namespace oreaut
