#include "oreaut/ore.hpp"

#include <map>

#include "oreaut/errors.hpp"
#include "oreaut/parse.hpp"

namespace oreaut {

void OreElement::normalize() {
  while (!terms.empty() && terms.back().is_zero()) terms.pop_back();
  for (Poly& t : terms)
    if (!t.field()) t = Poly(F);
}

Poly delta_power(const Poly& f, const Poly& g, unsigned k) {
  Poly r = g;
  for (unsigned t = 0; t < k && !r.is_zero(); ++t) r = f * r.derivative();
  return r;
}

unsigned binom_mod(std::uint64_t n, std::uint64_t k, unsigned p) {
  if (k > n) return 0;
  unsigned result = 1;
  while (n || k) {
    unsigned ni = static_cast<unsigned>(n % p), ki = static_cast<unsigned>(k % p);
    if (ki > ni) return 0;
    // C(ni, ki) mod p for small digits.
    unsigned num = 1, den = 1;
    for (unsigned t = 0; t < ki; ++t) {
      num = num * ((ni - t) % p) % p;
      den = den * ((t + 1) % p) % p;
    }
    unsigned inv = 1;
    for (unsigned e = p - 2, b = den; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    if (p == 2) inv = 1;
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return result;
}

OreAlgebra::OreAlgebra(Poly f) : f_(std::move(f)) {
  require(f_.field() != nullptr, "Ore algebra needs a coefficient field");
  require(f_.is_zero() || f_.is_monic(), "the defining polynomial must be monic or zero");
}

void OreAlgebra::check(const OreElement& a) const {
  if (a.F) require(same_field(a.F, field()), "element belongs to a different algebra");
}

OreElement OreAlgebra::constant(Elem c) const { return from_poly(Poly::constant(field(), c)); }

OreElement OreAlgebra::x() const { return from_poly(Poly::x(field())); }

OreElement OreAlgebra::y() const { return term(Poly::constant(field(), 1), 1); }

OreElement OreAlgebra::from_poly(const Poly& a) const { return term(a, 0); }

OreElement OreAlgebra::term(const Poly& a, std::size_t i) const {
  OreElement e{field(), std::vector<Poly>(i + 1, Poly(field()))};
  e.terms[i] = a.is_zero() ? Poly(field()) : a;
  e.normalize();
  return e;
}

OreElement OreAlgebra::add(const OreElement& a, const OreElement& b) const {
  check(a);
  check(b);
  OreElement r{field(), std::vector<Poly>(std::max(a.terms.size(), b.terms.size()), Poly(field()))};
  for (std::size_t i = 0; i < r.terms.size(); ++i) r.terms[i] = a.coeff(i) + b.coeff(i);
  r.normalize();
  return r;
}

OreElement OreAlgebra::neg(const OreElement& a) const {
  check(a);
  OreElement r = a;
  r.F = field();
  for (Poly& t : r.terms) t = -t;
  return r;
}

OreElement OreAlgebra::sub(const OreElement& a, const OreElement& b) const { return add(a, neg(b)); }

OreElement OreAlgebra::scale(const OreElement& a, Elem c) const {
  check(a);
  OreElement r = a;
  r.F = field();
  for (Poly& t : r.terms) t = t.scaled(c);
  r.normalize();
  return r;
}

OreElement OreAlgebra::mul(const OreElement& a, const OreElement& b) const {
  check(a);
  check(b);
  if (a.is_zero() || b.is_zero()) return zero();
  const unsigned p = field()->p();
  const std::size_t na = a.terms.size(), nb = b.terms.size();
  std::vector<Poly> out(na + nb - 1, Poly(field()));
  for (std::size_t j = 0; j < nb; ++j) {
    const Poly& bj = b.terms[j];
    if (bj.is_zero()) continue;
    // δ^t(b_j) for t < na.
    std::vector<Poly> dpow{bj};
    for (std::size_t t = 1; t < na; ++t) dpow.push_back(f_ * dpow.back().derivative());
    for (std::size_t i = 0; i < na; ++i) {
      const Poly& ai = a.terms[i];
      if (ai.is_zero()) continue;
      // a_i y^i b_j y^j = Σ_k C(i,k) a_i δ^{i-k}(b_j) y^{k+j}
      for (std::size_t k = 0; k <= i; ++k) {
        const Poly& d = dpow[i - k];
        if (d.is_zero()) continue;
        unsigned c = binom_mod(i, k, p);
        if (c == 0) continue;
        out[k + j] += (ai * d).scaled(field()->from_int(c));
      }
    }
  }
  OreElement r{field(), std::move(out)};
  r.normalize();
  return r;
}

OreElement OreAlgebra::pow(const OreElement& a, std::uint64_t e) const {
  OreElement r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

OreElement OreAlgebra::commutator(const OreElement& a, const OreElement& b) const {
  return sub(mul(a, b), mul(b, a));
}

OreElement OreAlgebra::eval_poly(const Poly& a, const OreElement& X) const {
  OreElement r = zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) r = add(mul(r, X), constant(a[i]));
  return r;
}

OreElement OreAlgebra::substitute(const OreElement& a, const OreElement& X, const OreElement& Y) const {
  OreElement r = zero();
  for (std::size_t i = a.terms.size(); i-- > 0;) r = add(mul(r, Y), eval_poly(a.terms[i], X));
  return r;
}

bool OreAlgebra::is_central(const OreElement& a) const {
  return commutator(a, x()).is_zero() && commutator(a, y()).is_zero();
}

OreElement OreAlgebra::omega_f(const OreElement& a) const {
  require(!f_.is_zero(), "omega_f needs a nonzero f");
  OreElement img = substitute(a, x(), sub(y(), from_poly(f_.derivative())));
  OreElement F = from_poly(f_);
  ensure(mul(F, a) == mul(img, F), "normality check f·a = ω_f(a)·f failed");
  return img;
}

namespace {

OreElement eval_ore(const OreAlgebra& A, const Expr& e) {
  const Field& F = *A.field();
  switch (e.kind) {
    case Expr::Kind::Int:
      return A.constant(F.from_int(e.value));
    case Expr::Kind::Literal: {
      if (e.coords.size() > F.m()) throw ParseError("element literal has too many coordinates", e.pos);
      std::vector<unsigned> c;
      for (unsigned v : e.coords) c.push_back(v % F.p());
      return A.constant(F.from_coords(c));
    }
    case Expr::Kind::Var:
      return e.var == 'x' ? A.x() : A.y();
    case Expr::Kind::Add:
      return A.add(eval_ore(A, *e.kids[0]), eval_ore(A, *e.kids[1]));
    case Expr::Kind::Sub:
      return A.sub(eval_ore(A, *e.kids[0]), eval_ore(A, *e.kids[1]));
    case Expr::Kind::Neg:
      return A.neg(eval_ore(A, *e.kids[0]));
    case Expr::Kind::Mul:
      return A.mul(eval_ore(A, *e.kids[0]), eval_ore(A, *e.kids[1]));
    case Expr::Kind::Pow:
      if (e.exponent > 512) throw ParseError("exponent too large", e.pos);
      return A.pow(eval_ore(A, *e.kids[0]), e.exponent);
  }
  throw ParseError("bad expression", e.pos);
}

}  // namespace

OreElement OreAlgebra::parse(std::string_view text) const { return eval_ore(*this, *parse_expr(text, "xy")); }

std::string OreAlgebra::format(const OreElement& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = a.terms.size(); i-- > 0;) {
    const Poly& c = a.terms[i];
    if (c.is_zero()) continue;
    std::string t;
    if (i == 0) {
      t = format_poly(c);
    } else {
      std::size_t nonzero = 0;
      for (Elem e : c.coeffs()) nonzero += (e != 0);
      if (!(c.degree() == 0 && c[0] == 1)) t = (nonzero > 1 ? "(" + format_poly_compact(c) + ")" : format_poly(c)) + "*";
      t += "y";
      if (i > 1) t += "^" + std::to_string(i);
    }
    if (!out.empty()) out += " + ";
    out += t;
  }
  return out;
}

CentreGens centre_generators(const OreAlgebra& A) {
  require(!A.f().is_zero(), "the centre of the polynomial ring K[x,y] is out of scope");
  const unsigned p = A.field()->p();
  CentreGens g;
  g.c = delta_power(A.f(), A.f(), p - 2).derivative();
  g.z1 = A.pow(A.x(), p);
  g.z2 = A.sub(A.pow(A.y(), p), A.mul(A.from_poly(g.c), A.y()));
  ensure(A.is_central(g.z1), "x^p is not central");
  ensure(A.is_central(g.z2), "y^p - c(x) y is not central");
  return g;
}

std::vector<CentralTerm> central_decomposition(const OreAlgebra& A, const OreElement& a) {
  CentreGens g = centre_generators(A);
  const unsigned p = A.field()->p();
  std::map<std::pair<unsigned, unsigned>, OreElement> cache;  // (alpha, beta) -> z1^α z2^β
  auto zpow = [&](unsigned al, unsigned be) -> const OreElement& {
    auto key = std::make_pair(al, be);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, A.mul(A.pow(g.z1, al), A.pow(g.z2, be))).first;
    return it->second;
  };
  std::vector<CentralTerm> out;
  OreElement r = a;
  while (!r.is_zero()) {
    const unsigned D = static_cast<unsigned>(r.degree());
    const Poly& lc = r.terms[D];
    const unsigned e = static_cast<unsigned>(lc.degree());
    CentralTerm t{e / p, D / p, e % p, D % p, lc.lead()};
    OreElement basis = A.mul(A.mul(zpow(t.alpha, t.beta), A.pow(A.x(), t.i)), A.pow(A.y(), t.j));
    ensure(basis.degree() == static_cast<int>(D) && basis.terms[D].degree() == static_cast<int>(e) &&
               basis.terms[D].lead() == 1,
           "central basis element has an unexpected leading term");
    r = A.sub(r, A.scale(basis, t.coeff));
    ensure(r.degree() < static_cast<int>(D) || r.terms[D].degree() < static_cast<int>(e),
           "central decomposition failed to reduce the leading term");
    out.push_back(t);
  }
  return out;
}

OreElement central_recompose(const OreAlgebra& A, const std::vector<CentralTerm>& terms) {
  CentreGens g = centre_generators(A);
  OreElement r = A.zero();
  for (const CentralTerm& t : terms) {
    OreElement b = A.mul(A.mul(A.mul(A.pow(g.z1, t.alpha), A.pow(g.z2, t.beta)), A.pow(A.x(), t.i)), A.pow(A.y(), t.j));
    r = A.add(r, A.scale(b, t.coeff));
  }
  return r;
}

}  // namespace oreaut
