#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oreaut/gf.hpp"
#include "oreaut/linalg.hpp"
#include "oreaut/poly.hpp"

namespace oreaut {

/// A finite-dimensional simple left Λ(f)-module given by the matrices of x and y.
/// Column i of X (resp. Y) is the image of the i-th basis vector.
struct SimpleModule {
  enum class Kind { OnF, OffF };
  Kind kind = Kind::OffF;
  FieldPtr field;
  std::size_t dim = 0;
  Matrix X, Y;
  // OffF: x^p acts as ξ, z2 = y^p - c(x) y acts as ρ.
  Elem xi = 0, rho = 0;
  // OnF: x acts through the root θ of p_i; the module is F_i[y]/(q).
  Elem theta = 0;
  Poly p_i, q;
  /// Which central element ρ is the value of.
  std::string rho_convention = "z2";
};

/// Λ/Λ(m, x - ξ^{1/p}) on the basis {y^i·1̄ : i < p}. f must live over the field of ξ, ρ.
SimpleModule simple_module_off_f(const Poly& f, Elem xi, Elem rho);
/// Λ/(p_i, q) ≅ F_i[y]/(q) with F_i = K[x]/(p_i) realised as GF(p^{k·deg p_i}).
/// q must be monic irreducible over that field.
SimpleModule simple_module_on_f(const Poly& f, const Poly& p_i, const Poly& q);
/// The field F_i = K[x]/(p_i) used by simple_module_on_f.
FieldPtr residue_field(const Poly& p_i);

/// a(M) for a square matrix M.
Matrix eval_matrix(const Field& F, const Poly& a, const Matrix& M);
/// Companion matrix of a monic polynomial (multiplication by y on F[y]/(q)).
Matrix companion(const Poly& q);

/// Y X - X Y == f(X), with f embedded into the module field when needed.
bool relation_holds(const SimpleModule& M, const Poly& f);
/// X^p == ξ I and Y^p - c(X) Y == ρ I (off-f modules).
bool central_character_holds(const SimpleModule& M, const Poly& f);
/// Dimension of the algebra generated by X and Y (words up to length 2·dim²).
std::size_t word_span_dim(const SimpleModule& M);
/// The word span is all of M_dim(F).
bool burnside_span_full(const SimpleModule& M);

/// (X, Y) recomputed from scratch by reducing x·y^i and y^p modulo the left ideal
/// Λ(x - ξ^{1/p}) + Λ(z2 - ρ) with bounded Gaussian elimination.
std::pair<Matrix, Matrix> rederive_off_f(const Poly& f, Elem xi, Elem rho);

struct MinimalPrime {
  Poly poly;
  unsigned mult = 0;
};

/// A maximal ideal (x^p - ξ, z2 - ρ) of the centre, represented by the smallest
/// point of its Frobenius orbit over the field of residue degree `degree`.
struct CentralPoint {
  FieldPtr field;
  Elem xi = 0, rho = 0;
  unsigned degree = 1;
};

struct SpectrumDesc {
  std::vector<MinimalPrime> min_primes;
  std::vector<Poly> ht1;
  std::vector<std::string> spec_c;
  std::vector<CentralPoint> max_off_f;
  unsigned krull_dim = 2;
  unsigned global_dim = 2;
};

/// Irreducible factorisation over the coefficient field via Frobenius orbits of roots.
std::vector<MinimalPrime> factor(const Poly& f);
SpectrumDesc spectrum(const Poly& f, unsigned degree_bound = 1, std::uint64_t cap = std::uint64_t{1} << 20);

}  // namespace oreaut
