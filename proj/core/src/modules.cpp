#include "oreaut/modules.hpp"

#include <algorithm>
#include <map>

#include "oreaut/errors.hpp"
#include "oreaut/ore.hpp"
#include "oreaut/parse.hpp"

namespace oreaut {

namespace {

Elem signed_binom(const Field& F, unsigned i, unsigned j) {
  Elem c = F.from_int(binom_mod(i, j, F.p()));
  return (i - j) % 2 ? F.neg(c) : c;
}

/// c(x) = (δ^{p-2}(f))', the coefficient in z2 = y^p - c(x) y.
Poly centre_coefficient(const Poly& f) { return delta_power(f, f, f.F().p() - 2).derivative(); }

Poly over(const Poly& f, const FieldPtr& F) {
  if (same_field(f.field(), F)) return f;
  return embed(f, *Tower::make(f.field(), F));
}

/// Incremental row echelon basis used by the word-span computation.
class EchelonSpan {
 public:
  explicit EchelonSpan(const Field& F) : F_(F) {}
  std::size_t size() const { return rows_.size(); }
  /// Adds v if it is independent of the current span.
  bool insert(std::vector<Elem> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Elem c = v[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (rows_[r][k]) v[k] = F_.sub(v[k], F_.mul(c, rows_[r][k]));
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return false;
    Elem inv = F_.inv(v[piv]);
    for (Elem& e : v) e = F_.mul(e, inv);
    // keep earlier rows reduced at the new pivot
    for (auto& row : rows_) {
      Elem c = row[piv];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k]) row[k] = F_.sub(row[k], F_.mul(c, v[k]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  const Field& F_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_irreducible(const Poly& f) {
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].mult == 1;
}

}  // namespace

Matrix eval_matrix(const Field& F, const Poly& a, const Matrix& M) {
  require(M.rows == M.cols, "matrix must be square");
  Matrix r(M.rows, M.cols);
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    r = mat_add(F, mat_mul(F, r, M), scalar_matrix(F, M.rows, a[i]));
  return r;
}

Matrix companion(const Poly& q) {
  require(q.is_monic() && q.degree() >= 1, "companion matrix needs a monic nonscalar polynomial");
  const Field& F = q.F();
  const std::size_t n = static_cast<std::size_t>(q.degree());
  Matrix C(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) C(i + 1, i) = 1;
  for (std::size_t j = 0; j < n; ++j) C(j, n - 1) = F.neg(q[j]);
  return C;
}

SimpleModule simple_module_off_f(const Poly& f, Elem xi, Elem rho) {
  require(!f.is_constant() && f.is_monic(), "f must be monic and nonscalar");
  const FieldPtr& L = f.field();
  const Field& F = *L;
  require(xi < F.size() && rho < F.size(), "ξ and ρ must be elements of " + F.name());
  const unsigned p = F.p();
  const Elem a = pth_root(F, xi);
  require(f.eval(a) != 0, "f(ξ^{1/p}) = 0: the ideal lies on V(f^p), use the on-f construction");

  SimpleModule M;
  M.kind = SimpleModule::Kind::OffF;
  M.field = L;
  M.dim = p;
  M.xi = xi;
  M.rho = rho;
  M.X = Matrix(p, p);
  M.Y = Matrix(p, p);
  for (unsigned i = 0; i < p; ++i) {
    M.X(i, i) = a;
    for (unsigned j = 0; j < i; ++j) {
      Elem phi = delta_power(f, f, i - j - 1).eval(a);
      M.X(j, i) = F.mul(signed_binom(F, i, j), phi);
    }
  }
  for (unsigned i = 0; i + 1 < p; ++i) M.Y(i + 1, i) = 1;
  // y·y^{p-1}1̄ = (z2 + c(x) y)1̄ = ρ·1̄ + c(X)·(y 1̄)
  Matrix cX = eval_matrix(F, centre_coefficient(f), M.X);
  for (unsigned j = 0; j < p; ++j) M.Y(j, p - 1) = cX(j, 1);
  M.Y(0, p - 1) = F.add(M.Y(0, p - 1), rho);
  ensure(relation_holds(M, f), "off-f module violates YX - XY = f(X)");
  ensure(central_character_holds(M, f), "off-f module has the wrong central character");
  return M;
}

FieldPtr residue_field(const Poly& p_i) {
  require(p_i.degree() >= 1, "p_i must be nonscalar");
  return Field::make(p_i.F().p(), p_i.F().m() * static_cast<unsigned>(p_i.degree()));
}

SimpleModule simple_module_on_f(const Poly& f, const Poly& p_i, const Poly& q) {
  require(!f.is_constant() && f.is_monic(), "f must be monic and nonscalar");
  require(same_field(f.field(), p_i.field()), "p_i must have the coefficient field of f");
  require(p_i.is_monic() && is_irreducible(p_i), "p_i must be monic irreducible");
  require((f % p_i).is_zero(), "p_i does not divide f");
  FieldPtr Fi = residue_field(p_i);
  require(same_field(q.field(), Fi), "q must have coefficients in F_i = " + Fi->name());
  require(q.is_monic() && q.degree() >= 1 && is_irreducible(q), "q must be monic irreducible over F_i");
  Poly pe = over(p_i, Fi);
  auto roots = roots_in(pe);
  ensure(!roots.empty(), "p_i has no root in its residue field");

  SimpleModule M;
  M.kind = SimpleModule::Kind::OnF;
  M.field = Fi;
  M.dim = static_cast<std::size_t>(q.degree());
  M.theta = roots.front().value;
  M.p_i = p_i;
  M.q = q;
  M.X = scalar_matrix(*Fi, M.dim, M.theta);
  M.Y = companion(q);
  ensure(relation_holds(M, f), "on-f module violates YX - XY = f(X)");
  return M;
}

bool relation_holds(const SimpleModule& M, const Poly& f) {
  const Field& F = *M.field;
  Matrix lhs = mat_sub(F, mat_mul(F, M.Y, M.X), mat_mul(F, M.X, M.Y));
  return lhs == eval_matrix(F, over(f, M.field), M.X);
}

bool central_character_holds(const SimpleModule& M, const Poly& f) {
  const Field& F = *M.field;
  const unsigned p = F.p();
  Poly fe = over(f, M.field);
  Matrix z1 = mat_pow(F, M.X, p);
  Matrix z2 = mat_sub(F, mat_pow(F, M.Y, p), mat_mul(F, eval_matrix(F, centre_coefficient(fe), M.X), M.Y));
  if (M.kind == SimpleModule::Kind::OffF)
    return z1 == scalar_matrix(F, M.dim, M.xi) && z2 == scalar_matrix(F, M.dim, M.rho);
  // On f the centre acts through the commutative image F_i[Y]; check centrality.
  auto commutes = [&](const Matrix& A) {
    return mat_mul(F, A, M.X) == mat_mul(F, M.X, A) && mat_mul(F, A, M.Y) == mat_mul(F, M.Y, A);
  };
  return z1 == scalar_matrix(F, M.dim, F.pow(M.theta, p)) && commutes(z2);
}

std::size_t word_span_dim(const SimpleModule& M) {
  const Field& F = *M.field;
  const std::size_t d = M.dim;
  EchelonSpan span(F);
  std::vector<Matrix> frontier{identity_matrix(F, d)};
  span.insert(frontier.front().a);
  for (std::size_t len = 1; len <= 2 * d * d && !frontier.empty() && span.size() < d * d; ++len) {
    std::vector<Matrix> next;
    for (const Matrix& W : frontier)
      for (const Matrix* G : {&M.X, &M.Y}) {
        Matrix V = mat_mul(F, W, *G);
        if (span.insert(V.a)) next.push_back(std::move(V));
      }
    frontier = std::move(next);
  }
  return span.size();
}

bool burnside_span_full(const SimpleModule& M) { return word_span_dim(M) == M.dim * M.dim; }

std::pair<Matrix, Matrix> rederive_off_f(const Poly& f, Elem xi, Elem rho) {
  require(!f.is_constant() && f.is_monic(), "f must be monic and nonscalar");
  const FieldPtr& L = f.field();
  const Field& F = *L;
  const unsigned p = F.p();
  const Elem a = pth_root(F, xi);
  require(f.eval(a) != 0, "f(ξ^{1/p}) = 0: the ideal lies on V(f^p)");
  OreAlgebra A(f);
  CentreGens cg = centre_generators(A);
  OreElement xa = A.from_poly(Poly(L, {F.neg(a), 1}));
  OreElement zr = A.sub(cg.z2, A.constant(rho));

  const std::size_t S = 2 * p * static_cast<std::size_t>(std::max(1, f.degree())) + 2;
  std::vector<OreElement> gens;
  for (std::size_t t = 0; t < p; ++t)
    for (std::size_t s = 0; s <= S; ++s) gens.push_back(A.mul(A.term(Poly::monomial(L, 1, s), t), xa));
  for (std::size_t s = 0; s <= S; ++s) gens.push_back(A.mul(A.term(Poly::monomial(L, 1, s), 0), zr));

  std::vector<OreElement> targets;
  for (std::size_t i = 0; i < p; ++i) targets.push_back(A.term(Poly::x(L), i));
  targets.push_back(A.pow(A.y(), p));

  std::size_t amax = 0;
  for (const auto* list : {&gens, &targets})
    for (const OreElement& e : *list)
      for (const Poly& c : e.terms) amax = std::max<std::size_t>(amax, static_cast<std::size_t>(std::max(0, c.degree())));
  const std::size_t B = p + 1;
  auto row = [&](std::size_t alpha, std::size_t beta) { return alpha * B + beta; };
  const std::size_t rows = (amax + 1) * B;
  Matrix Msys(rows, gens.size() + p);
  auto put = [&](std::size_t col, const OreElement& e) {
    for (std::size_t beta = 0; beta < e.terms.size(); ++beta)
      for (std::size_t alpha = 0; alpha < e.terms[beta].coeffs().size(); ++alpha)
        Msys(row(alpha, beta), col) = e.terms[beta][alpha];
  };
  for (std::size_t k = 0; k < gens.size(); ++k) put(k, gens[k]);
  for (std::size_t j = 0; j < p; ++j) put(gens.size() + j, A.term(Poly::constant(L, 1), j));

  auto reduce = [&](const OreElement& t) {
    std::vector<Elem> b(rows, 0);
    for (std::size_t beta = 0; beta < t.terms.size(); ++beta)
      for (std::size_t alpha = 0; alpha < t.terms[beta].coeffs().size(); ++alpha) b[row(alpha, beta)] = t.terms[beta][alpha];
    auto sol = solve(F, Msys, b);
    ensure(sol.has_value(), "bounded ideal reduction did not reach the basis y^i·1̄");
    return std::vector<Elem>(sol->end() - p, sol->end());
  };

  Matrix X(p, p), Y(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    auto c = reduce(targets[i]);
    for (std::size_t j = 0; j < p; ++j) X(j, i) = c[j];
  }
  for (std::size_t i = 0; i + 1 < p; ++i) Y(i + 1, i) = 1;
  auto c = reduce(targets[p]);
  for (std::size_t j = 0; j < p; ++j) Y(j, p - 1) = c[j];
  return {X, Y};
}

std::vector<MinimalPrime> factor(const Poly& f) {
  require(!f.is_zero(), "cannot factor the zero polynomial");
  std::vector<MinimalPrime> out;
  if (f.is_constant()) return out;
  require(f.is_monic(), "f must be monic");
  RootMultiset R = roots_with_multiplicity(f);
  const Field& L = *R.field;
  const unsigned k = f.F().m();
  std::map<Elem, bool> seen;
  for (const Root& r : R.roots) {
    if (seen[r.value]) continue;
    std::vector<Elem> orbit;
    for (Elem z = r.value; !seen[z]; z = L.frobenius(z, k)) {
      seen[z] = true;
      orbit.push_back(z);
    }
    auto pk = restrict(Poly::from_roots(R.field, orbit), *R.tower);
    ensure(pk.has_value(), "Frobenius orbit product is not defined over K");
    out.push_back({*pk, r.mult});
  }
  std::sort(out.begin(), out.end(), [](const MinimalPrime& a, const MinimalPrime& b) { return a.poly < b.poly; });
  Poly prod = Poly::constant(f.field(), 1);
  for (const auto& m : out) prod *= m.poly.pow(m.mult);
  ensure(prod == f, "factorisation does not reconstruct f");
  return out;
}

SpectrumDesc spectrum(const Poly& f, unsigned degree_bound, std::uint64_t cap) {
  require(!f.is_constant() && f.is_monic(), "f must be monic and nonscalar");
  SpectrumDesc S;
  S.min_primes = factor(f);
  S.spec_c.push_back("0");
  for (const auto& m : S.min_primes) {
    ensure((f * m.poly.derivative() % m.poly).is_zero(), "minimal prime is not normal");
    S.ht1.push_back(m.poly);
    S.spec_c.push_back("(" + format_poly(m.poly) + ")");
  }
  for (const auto& m : S.min_primes)
    S.spec_c.push_back("(" + format_poly(m.poly) + ", q) : q monic irreducible in F_i[y], F_i = " +
                       residue_field(m.poly)->name());

  const FieldPtr& K = f.field();
  const unsigned k = K->m();
  for (unsigned e = 1; e <= degree_bound; ++e) {
    FieldPtr E = e == 1 ? K : Field::make(K->p(), k * e);
    const Field& Ef = *E;
    require(static_cast<std::uint64_t>(Ef.size()) * Ef.size() <= cap,
            "central point enumeration over " + Ef.name() + " exceeds the cap");
    Poly fe = over(f, E);
    auto frob = [&](Elem z) { return Ef.frobenius(z, k); };
    for (Elem xi = 0; xi < Ef.size(); ++xi) {
      if (fe.eval(pth_root(Ef, xi)) == 0) continue;
      // orbit length of ξ alone bounds the work for ρ
      for (Elem rho = 0; rho < Ef.size(); ++rho) {
        Elem a = xi, b = rho;
        unsigned len = 0;
        bool minimal = true;
        do {
          a = frob(a);
          b = frob(b);
          ++len;
          if (std::make_pair(a, b) < std::make_pair(xi, rho)) minimal = false;
        } while (a != xi || b != rho);
        if (len == e && minimal) S.max_off_f.push_back({E, xi, rho, e});
      }
    }
  }
  return S;
}

}  // namespace oreaut
