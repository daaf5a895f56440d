#include "oreaut/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "oreaut/errors.hpp"
#include "oreaut/linalg.hpp"

namespace oreaut {

namespace {

const FieldPtr& pick(const FieldPtr& a, const FieldPtr& b) {
  if (a && b) require(same_field(a, b), "polynomials over different fields");
  return a ? a : b;
}

}  // namespace

Poly::Poly(FieldPtr F, std::vector<Elem> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
  for (Elem e : c_)
    if (e >= F_->size()) throw DomainError("coefficient out of range for " + F_->name());
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FieldPtr& F, Elem a) { return Poly(F, {a}); }

Poly Poly::monomial(const FieldPtr& F, Elem a, std::size_t k) {
  std::vector<Elem> c(k + 1, 0);
  c[k] = a;
  return Poly(F, std::move(c));
}

Poly Poly::from_roots(const FieldPtr& F, const std::vector<Elem>& roots) {
  Poly r = constant(F, 1);
  for (Elem a : roots) r *= Poly(F, {F->neg(a), 1});
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  const FieldPtr& F = pick(F_, o.F_);
  std::vector<Elem> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F->add((*this)[i], o[i]);
  return Poly(F, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  const FieldPtr& F = pick(F_, o.F_);
  std::vector<Elem> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F->sub((*this)[i], o[i]);
  return Poly(F, std::move(c));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Elem& e : r.c_) e = F_->neg(e);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  const FieldPtr& F = pick(F_, o.F_);
  if (c_.empty() || o.c_.empty()) return Poly(F);
  std::vector<Elem> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = F->add(c[i + j], F->mul(c_[i], o.c_[j]));
  }
  return Poly(F, std::move(c));
}

Poly Poly::scaled(Elem a) const {
  Poly r = *this;
  for (Elem& e : r.c_) e = F_->mul(e, a);
  r.trim();
  return r;
}

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

Poly Poly::monic() const {
  require(!is_zero(), "the zero polynomial has no monic normalisation");
  return scaled(F_->inv(lead()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(F_);
  std::vector<Elem> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = F_->mul(F_->from_int(static_cast<long long>(i % F_->p())), c_[i]);
  return Poly(F_, std::move(c));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly r = constant(F_, 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Elem Poly::eval(Elem a) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, a), c_[i]);
  return acc;
}

std::size_t Poly::valuation() const {
  std::size_t i = 0;
  while (i < c_.size() && c_[i] == 0) ++i;
  return i == c_.size() ? 0 : i;
}

Poly Poly::shift_down(std::size_t k) const {
  if (c_.empty()) return *this;
  require(k <= valuation(), "x^k does not divide the polynomial");
  return Poly(F_, std::vector<Elem>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Poly Poly::shift_up(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<Elem> c(k, 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return Poly(F_, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require(!b.is_zero(), "polynomial division by zero");
  const FieldPtr& Fp = pick(a.field(), b.field());
  const Field& F = *Fp;
  std::vector<Elem> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(Fp), a};
  std::vector<Elem> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  Elem inv = F.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    Elem c = F.mul(r[static_cast<std::size_t>(i)], inv);
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      std::size_t idx = static_cast<std::size_t>(i - db + j);
      r[idx] = F.sub(r[idx], F.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  return {Poly(Fp, std::move(q)), Poly(Fp, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& mod) {
  Poly r = Poly::constant(mod.field(), 1) % mod;
  Poly b = a % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return r;
}

Poly compose(const Poly& g, const Poly& h) {
  const FieldPtr& F = pick(g.field(), h.field());
  Poly r(F);
  for (std::size_t i = g.coeffs().size(); i-- > 0;) r = r * h + Poly::constant(F, g[i]);
  return r;
}

Poly affine_subst(const Poly& f, Elem lambda, Elem mu) {
  return compose(f, Poly(f.field(), {mu, lambda}));
}

Poly translate(const Poly& f, Elem nu) { return affine_subst(f, 1, nu); }

Poly embed(const Poly& f, const Tower& T) {
  require(same_field(f.field(), T.base()), "polynomial does not live over the tower base");
  std::vector<Elem> c;
  c.reserve(f.coeffs().size());
  for (Elem e : f.coeffs()) c.push_back(T.embed(e));
  return Poly(T.ext(), std::move(c));
}

std::optional<Poly> restrict(const Poly& f, const Tower& T) {
  require(same_field(f.field(), T.ext()), "polynomial does not live over the tower extension");
  std::vector<Elem> c;
  for (Elem e : f.coeffs()) {
    auto r = T.restrict(e);
    if (!r) return std::nullopt;
    c.push_back(*r);
  }
  return Poly(T.base(), std::move(c));
}

std::uint64_t exponent_gcd(const Poly& f) {
  std::uint64_t g = 0;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    if (f[i] != 0) g = std::gcd<std::uint64_t, std::uint64_t>(g, i);
  return g;
}

std::uint64_t gcd_p(const Poly& f) {
  std::uint64_t g = exponent_gcd(f);
  if (g == 0) return 1;
  while (g % f.F().p() == 0) g /= f.F().p();
  return g;
}

Poly index_divide(const Poly& f, std::uint64_t n) {
  require(n >= 1, "index divisor must be positive");
  std::vector<Elem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i % n == 0)
      c.push_back(f[i]);
    else
      require(f[i] == 0, "polynomial is not a polynomial in x^" + std::to_string(n));
  }
  return Poly(f.field(), std::move(c));
}

ExponentDecomp exponent_decomp(const Poly& f) {
  require(!f.is_constant(), "exponent decomposition needs a nonscalar polynomial");
  require(f.is_monic(), "exponent decomposition needs a monic polynomial");
  const Field& F = f.F();
  std::uint64_t g = exponent_gcd(f);
  ExponentDecomp d;
  std::uint64_t ps = 1;
  while (g % F.p() == 0) {
    g /= F.p();
    ps *= F.p();
    ++d.s;
  }
  d.gcd_p = g;
  Poly h = index_divide(f, ps);
  std::vector<Elem> c = h.coeffs();
  for (Elem& e : c)
    for (unsigned t = 0; t < d.s; ++t) e = pth_root(F, e);
  d.f1 = Poly(f.field(), std::move(c));
  ensure(d.f1.pow(ps) == f, "exponent decomposition does not reconstruct f");
  ensure(!d.f1.derivative().is_zero(), "f1 has zero derivative");
  return d;
}

unsigned splitting_degree(const Poly& f) {
  require(!f.is_zero(), "the zero polynomial has no splitting field");
  if (f.degree() <= 1) return 1;
  Poly h = f.monic();
  const Poly x = Poly::x(f.field());
  const std::uint64_t q = f.F().size();
  Poly xq = x % h;
  unsigned result = 1;
  for (unsigned d = 1; h.degree() > 0; ++d) {
    xq = powmod(xq, q, h);
    Poly g = gcd(h, xq - x);
    if (g.degree() > 0) {
      result = std::lcm(result, d);
      for (Poly c = gcd(h, g); c.degree() > 0; c = gcd(h, g)) h = h / c;
      if (h.degree() > 0) xq = xq % h;
    }
    ensure(d <= static_cast<unsigned>(f.degree()), "distinct-degree splitting did not terminate");
  }
  return result;
}

std::size_t RootMultiset::total() const {
  std::size_t t = 0;
  for (const Root& r : roots) t += r.mult;
  return t;
}

std::vector<Elem> RootMultiset::distinct() const {
  std::vector<Elem> out;
  for (const Root& r : roots) out.push_back(r.value);
  return out;
}

unsigned RootMultiset::multiplicity(Elem v) const {
  for (const Root& r : roots)
    if (r.value == v) return r.mult;
  return 0;
}

namespace {

// Appends the roots of g, a monic product of distinct linear factors, splitting
// with gcds against trace (p = 2) or quadratic-character (p odd) polynomials.
// The shifts δ come from a fixed-seed generator, so the result is deterministic.
void split_linear(const Poly& g, std::vector<Elem>& out, std::mt19937_64& rng) {
  const Field& F = g.F();
  if (g.degree() == 1) {
    out.push_back(F.neg(g[0]));
    return;
  }
  if (static_cast<std::uint64_t>(g.degree()) * 8 >= F.size()) {
    for (Elem a = 0; a < F.size(); ++a)
      if (g.eval(a) == 0) out.push_back(a);
    return;
  }
  const Poly one = Poly::constant(g.field(), 1);
  for (unsigned attempt = 0; attempt < 256; ++attempt) {
    const Elem delta = static_cast<Elem>(1 + rng() % (F.size() - 1));
    Poly s;
    if (F.p() == 2) {
      Poly t = Poly::monomial(g.field(), delta, 1) % g;
      s = t;
      for (unsigned i = 1; i < F.m(); ++i) {
        t = (t * t) % g;
        s = s + t;
      }
    } else {
      s = powmod(Poly(g.field(), {delta, 1}), (F.size() - 1) / 2, g) - one;
    }
    Poly h = gcd(g, s);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      h = h.monic();
      split_linear(h, out, rng);
      split_linear((g / h).monic(), out, rng);
      return;
    }
  }
  ensure(false, "equal-degree splitting found no separating shift");
}

}  // namespace

std::vector<Root> roots_in(const Poly& f) {
  require(!f.is_zero(), "the zero polynomial has every element as a root");
  const Field& F = f.F();
  std::vector<Root> out;
  if (f.degree() == 0) return out;
  const Poly fm = f.monic();
  const Poly x = Poly::x(f.field());
  Poly g = gcd(fm, powmod(x, F.size(), fm) - x);
  std::vector<Elem> distinct;
  std::mt19937_64 rng(0x5eed);
  if (g.degree() > 0) split_linear(g.monic(), distinct, rng);
  std::sort(distinct.begin(), distinct.end());
  for (Elem a : distinct) {
    Poly lin(f.field(), {F.neg(a), 1});
    Poly r = fm;
    unsigned mult = 0;
    for (;;) {
      auto [qq, rem] = divmod(r, lin);
      if (!rem.is_zero()) break;
      r = std::move(qq);
      ++mult;
    }
    ensure(mult >= 1, "split factor is not a root");
    out.push_back({a, mult});
  }
  return out;
}

RootMultiset roots_over(const Poly& f, const FieldPtr& L) {
  RootMultiset R;
  R.field = L;
  R.M = L->m();
  R.tower = Tower::make(f.field(), L);
  R.roots = roots_in(embed(f, *R.tower));
  return R;
}

RootMultiset roots_with_multiplicity(const Poly& f) {
  require(!f.is_zero(), "the zero polynomial has no root multiset");
  unsigned d = splitting_degree(f);
  FieldPtr L = Field::make(f.F().p(), f.F().m() * d);
  RootMultiset R = roots_over(f, L);
  ensure(R.total() == static_cast<std::size_t>(f.degree()), "root multiset does not account for the degree");
  return R;
}

Poly f_V(const FieldPtr& F, const std::vector<Elem>& V, Elem nu) {
  require(is_fp_space(*F, V), "V is not an F_p-subspace");
  std::vector<Elem> roots;
  roots.reserve(V.size());
  for (Elem v : V) roots.push_back(F->add(nu, v));
  return Poly::from_roots(F, roots);
}

Poly f_V_basis(const FieldPtr& F, const std::vector<Elem>& basis, Elem nu) {
  return f_V(F, fp_span(*F, basis), nu);
}

unsigned multiplier_field(const Field& F, const std::vector<Elem>& basis) {
  std::vector<Elem> b = fp_basis(F, basis);
  require(!b.empty(), "the multiplier field of the zero space is undefined");
  unsigned dim = static_cast<unsigned>(b.size());
  for (unsigned e = std::min(dim, F.m()); e >= 1; --e) {
    if (F.m() % e != 0) continue;
    Elem gamma = subfield_generator(F, e);
    bool ok = true;
    for (Elem v : b)
      if (!in_fp_span(F, b, F.mul(gamma, v))) {
        ok = false;
        break;
      }
    if (ok) return e;
  }
  return 1;
}

std::optional<Poly> decompose_through(const Poly& f, const Poly& h) {
  require(!h.is_constant(), "cannot decompose through a scalar polynomial");
  if (f.is_zero()) return Poly(f.field());
  const int dh = h.degree();
  if (f.degree() % dh != 0) return std::nullopt;
  const int K = f.degree() / dh;
  std::vector<Poly> hp{Poly::constant(h.field(), 1)};
  for (int k = 1; k <= K; ++k) hp.push_back(hp.back() * h);
  Poly r = f;
  std::vector<Elem> g(static_cast<std::size_t>(K + 1), 0);
  for (int k = K; k >= 0; --k) {
    if (r.degree() > k * dh) return std::nullopt;
    if (r.degree() < k * dh) continue;
    const std::size_t kk = static_cast<std::size_t>(k);
    Elem c = f.F().div(r.lead(), hp[kk].lead());
    g[kk] = c;
    r -= hp[kk].scaled(c);
  }
  if (!r.is_zero()) return std::nullopt;
  return Poly(f.field(), std::move(g));
}

}  // namespace oreaut
