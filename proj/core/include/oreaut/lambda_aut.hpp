#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oreaut/eigengroup.hpp"
#include "oreaut/ore.hpp"

namespace oreaut {

/// σ_{λ,μ,p}: x ↦ λx + μ, y ↦ λ^{d-1} y + p(x), d = deg f.
struct LambdaAut {
  Elem lambda = 1;
  Elem mu = 0;
  Poly p;
};

/// Images of x and y in Λ(f).
std::pair<OreElement, OreElement> generator_images(const OreAlgebra& A, const LambdaAut& s);
OreElement apply(const OreAlgebra& A, const LambdaAut& s, const OreElement& a);
/// σ(y)σ(x) - σ(x)σ(y) == f(λx + μ).
bool is_homomorphism(const OreAlgebra& A, const LambdaAut& s);

/// s1∘s2 (s2 applied first when substituting), derived from the generator images:
/// (λ1λ2, λ2μ1 + μ2, λ2^{d-1} p1 + p2(λ1 x + μ1)).
LambdaAut compose(const OreAlgebra& A, const LambdaAut& s1, const LambdaAut& s2);
/// The shorter law (λ1λ2, λ2μ1 + μ2, λ2^{d-1} p1 + p2); it agrees with compose only
/// when p2 is invariant under x ↦ λ1 x + μ1, e.g. for constant p2.
LambdaAut compose_literal(const OreAlgebra& A, const LambdaAut& s1, const LambdaAut& s2);
/// σ^{-1} = (λ^{-1}, -λ^{-1}μ, -λ^{1-d} p(λ^{-1}(x - μ))).
LambdaAut inverse(const OreAlgebra& A, const LambdaAut& s);
bool same_map(const LambdaAut& a, const LambdaAut& b);

/// Aut_K(Λ(f)) = S(K) ⋊ G_f(K); S(K) ≅ (K[x], +) is infinite and kept symbolic.
struct AutGroupDesc {
  EigengroupDesc eigen;
  std::string shift_part = "K[x]";
};

AutGroupDesc aut_group(const Poly& f);
/// Every (λ, μ) ∈ G_f with p = 0, followed by the shifts s_{c x^j} for c in an
/// F_p-basis of K and j <= degree_bound.
std::vector<LambdaAut> aut_generators(const AutGroupDesc& G, unsigned degree_bound);

/// Λ(f) ≅ Λ(g) witness: g = λ f(αx + β), realised by x ↦ αx + β, y ↦ y_scale·y
/// from Λ(f) into Λ(g).
struct IsoWitness {
  Elem lambda = 1;
  Elem alpha = 1;
  Elem beta = 0;
  Elem y_scale = 1;
  /// Exponent e with y_scale = α^e; fixed by the transport check (d - 1 or 1 - d).
  int y_exponent = 0;
};

std::optional<IsoWitness> are_isomorphic(const Poly& f, const Poly& g);
/// The images of x, y satisfy the relation of Λ(f) inside Λ(g).
bool transport_check(const Poly& f, const Poly& g, Elem alpha, Elem beta, Elem y_scale);

}  // namespace oreaut
