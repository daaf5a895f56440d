#include "oreaut/lambda_aut.hpp"

#include "oreaut/errors.hpp"

namespace oreaut {

namespace {

Elem lambda_pow_dm1(const OreAlgebra& A, Elem lam) {
  const Field& F = *A.field();
  if (A.d() >= 1) return F.pow(lam, static_cast<std::uint64_t>(A.d() - 1));
  return F.inv(lam);
}

Poly zero_if_empty(const OreAlgebra& A, const Poly& p) { return p.field() ? p : Poly(A.field()); }

}  // namespace

std::pair<OreElement, OreElement> generator_images(const OreAlgebra& A, const LambdaAut& s) {
  require(s.lambda != 0, "λ must be nonzero");
  OreElement X = A.from_poly(Poly(A.field(), {s.mu, s.lambda}));
  OreElement Y = A.add(A.scale(A.y(), lambda_pow_dm1(A, s.lambda)), A.from_poly(zero_if_empty(A, s.p)));
  return {X, Y};
}

OreElement apply(const OreAlgebra& A, const LambdaAut& s, const OreElement& a) {
  auto [X, Y] = generator_images(A, s);
  return A.substitute(a, X, Y);
}

bool is_homomorphism(const OreAlgebra& A, const LambdaAut& s) {
  auto [X, Y] = generator_images(A, s);
  return A.commutator(Y, X) == A.from_poly(affine_subst(A.f(), s.lambda, s.mu));
}

LambdaAut compose(const OreAlgebra& A, const LambdaAut& s1, const LambdaAut& s2) {
  const Field& F = *A.field();
  LambdaAut r;
  r.lambda = F.mul(s1.lambda, s2.lambda);
  r.mu = F.add(F.mul(s2.lambda, s1.mu), s2.mu);
  r.p = zero_if_empty(A, s1.p).scaled(lambda_pow_dm1(A, s2.lambda)) +
        affine_subst(zero_if_empty(A, s2.p), s1.lambda, s1.mu);
  return r;
}

LambdaAut compose_literal(const OreAlgebra& A, const LambdaAut& s1, const LambdaAut& s2) {
  const Field& F = *A.field();
  LambdaAut r;
  r.lambda = F.mul(s1.lambda, s2.lambda);
  r.mu = F.add(F.mul(s2.lambda, s1.mu), s2.mu);
  r.p = zero_if_empty(A, s1.p).scaled(lambda_pow_dm1(A, s2.lambda)) + zero_if_empty(A, s2.p);
  return r;
}

LambdaAut inverse(const OreAlgebra& A, const LambdaAut& s) {
  const Field& F = *A.field();
  LambdaAut r;
  r.lambda = F.inv(s.lambda);
  r.mu = F.neg(F.mul(r.lambda, s.mu));
  // p'(x) = -λ^{1-d} p(λ^{-1} x - λ^{-1} μ)
  Elem c = F.neg(F.inv(lambda_pow_dm1(A, s.lambda)));
  r.p = affine_subst(zero_if_empty(A, s.p), r.lambda, r.mu).scaled(c);
  return r;
}

bool same_map(const LambdaAut& a, const LambdaAut& b) {
  return a.lambda == b.lambda && a.mu == b.mu && a.p.coeffs() == b.p.coeffs();
}

AutGroupDesc aut_group(const Poly& f) {
  require(!f.is_constant(), "f must be nonscalar (the Weyl algebra and K[x,y] are out of scope)");
  require(f.is_monic(), "f must be monic");
  AutGroupDesc G;
  G.eigen = eigengroup(f);
  return G;
}

std::vector<LambdaAut> aut_generators(const AutGroupDesc& G, unsigned degree_bound) {
  const FieldPtr& K = G.eigen.field;
  const Field& F = *K;
  std::vector<LambdaAut> out;
  for (const AffineAut& a : group_elements(G.eigen)) out.push_back({a.lambda, a.mu, Poly(K)});
  for (unsigned j = 0; j <= degree_bound; ++j)
    for (unsigned b = 0, c = 1; b < F.m(); ++b, c *= F.p()) out.push_back({1, 0, Poly::monomial(K, c, j)});
  return out;
}

bool transport_check(const Poly& f, const Poly& g, Elem alpha, Elem beta, Elem y_scale) {
  OreAlgebra B(g);
  OreElement X = B.from_poly(Poly(g.field(), {beta, alpha}));
  OreElement Y = B.scale(B.y(), y_scale);
  return B.commutator(Y, X) == B.eval_poly(f, X);
}

std::optional<IsoWitness> are_isomorphic(const Poly& f, const Poly& g) {
  require(!f.is_zero() && !g.is_zero(), "zero polynomials are out of scope");
  require(f.is_monic() && g.is_monic(), "f and g must be monic");
  require(same_field(f.field(), g.field()), "f and g must share a coefficient field");
  if (f.degree() != g.degree()) return std::nullopt;
  const Field& F = f.F();
  const int d = f.degree();
  for (Elem alpha = 1; alpha < F.size(); ++alpha) {
    // g monic and f(αx+β) has leading coefficient α^d, so λ = α^{-d}.
    Elem lam = F.inv(F.pow(alpha, static_cast<std::uint64_t>(d)));
    for (Elem beta = 0; beta < F.size(); ++beta) {
      if (affine_subst(f, alpha, beta).scaled(lam) != g) continue;
      IsoWitness w{lam, alpha, beta, 0, 0};
      const int exps[2] = {d - 1, 1 - d};
      for (int e : exps) {
        std::uint64_t q1 = F.size() - 1;
        std::uint64_t k = static_cast<std::uint64_t>(((e % static_cast<long long>(q1)) + static_cast<long long>(q1)) % static_cast<long long>(q1));
        Elem c = F.pow(alpha, k);
        if (transport_check(f, g, alpha, beta, c)) {
          w.y_scale = c;
          w.y_exponent = e;
          return w;
        }
      }
      ensure(false, "no y-scaling convention transports the relation");
    }
  }
  return std::nullopt;
}

}  // namespace oreaut
