#include "oreaut/gf.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>

#include "oreaut/errors.hpp"

namespace oreaut {

namespace {

std::atomic<unsigned> g_max_p{13};
std::atomic<std::uint64_t> g_max_size{std::uint64_t{1} << 20};

// Dense polynomials over F_p as coefficient vectors, used only while a field is
// being constructed (before its tables exist).
using Vec = std::vector<unsigned>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec polymod(Vec a, const Vec& b, unsigned p) {
  trim(a);
  unsigned db = static_cast<unsigned>(b.size() - 1);
  unsigned inv_lead = 1;
  for (unsigned i = 1; i < p; ++i)
    if ((b.back() * i) % p == 1) inv_lead = i;
  while (a.size() >= b.size()) {
    unsigned shift = static_cast<unsigned>(a.size() - 1 - db);
    unsigned c = (a.back() * inv_lead) % p;
    for (unsigned i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

Vec polymulmod(const Vec& a, const Vec& b, const Vec& mod, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return polymod(std::move(r), mod, p);
}

Vec polypowmod(Vec a, std::uint64_t e, const Vec& mod, unsigned p) {
  Vec r{1};
  a = polymod(std::move(a), mod, p);
  while (e) {
    if (e & 1) r = polymulmod(r, a, mod, p);
    a = polymulmod(a, a, mod, p);
    e >>= 1;
  }
  return r;
}

Vec digits(std::uint64_t code, unsigned p, unsigned len) {
  Vec d(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  return d;
}

bool irreducible_by_trial_division(const Vec& f, unsigned p) {
  unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = ipow(p, d);
    for (std::uint64_t low = 0; low < count; ++low) {
      Vec g = digits(low, p, d);
      g.push_back(1);
      if (polymod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::mutex g_registry_mutex;
std::map<std::pair<unsigned, unsigned>, FieldPtr>& field_registry() {
  static std::map<std::pair<unsigned, unsigned>, FieldPtr> reg;
  return reg;
}
std::map<std::pair<const Field*, const Field*>, std::pair<FieldPtr, TowerPtr>>& tower_registry() {
  static std::map<std::pair<const Field*, const Field*>, std::pair<FieldPtr, TowerPtr>> reg;
  return reg;
}

void check_limits(unsigned p, unsigned m) {
  require(is_prime(p), "characteristic " + std::to_string(p) + " is not prime");
  require(m >= 1, "extension degree must be at least 1");
  require(p <= g_max_p.load(), "characteristic " + std::to_string(p) + " exceeds the cap " +
                                   std::to_string(g_max_p.load()));
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    require(q <= g_max_size.load(), "field size " + std::to_string(p) + "^" + std::to_string(m) +
                                        " exceeds the cap " + std::to_string(g_max_size.load()));
  }
}

}  // namespace

FieldLimits field_limits() { return FieldLimits{g_max_p.load(), g_max_size.load()}; }

void set_field_limits(const FieldLimits& limits) {
  g_max_p.store(limits.max_p);
  g_max_size.store(limits.max_size);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

Field::Field(unsigned p, std::vector<unsigned> modulus, bool standard)
    : p_(p), m_(static_cast<unsigned>(modulus.size() - 1)), standard_(standard), modulus_(std::move(modulus)) {
  q_ = static_cast<std::uint32_t>(ipow(p_, m_));
  pw_.resize(m_ + 1);
  pw_[0] = 1;
  for (unsigned i = 1; i <= m_; ++i) pw_[i] = pw_[i - 1] * p_;
  const std::uint32_t n = q_ - 1;
  half_ = (p_ == 2) ? 0 : n / 2;

  auto code_of = [&](const Vec& v) {
    std::uint32_t c = 0;
    for (std::size_t i = v.size(); i-- > 0;) c = c * p_ + v[i];
    return c;
  };

  // Smallest primitive element by code.
  std::vector<std::uint64_t> factors = prime_factors(n);
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    Vec g = digits(cand, p_, m_);
    trim(g);
    bool primitive = true;
    for (std::uint64_t r : factors) {
      Vec t = polypowmod(g, n / r, modulus_, p_);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (n == 1) primitive = (cand == 1);
    if (primitive) {
      gen_ = cand;
      break;
    }
  }
  ensure(gen_ != 0, "no primitive element found");

  exp_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
  log_.assign(q_, 0);
  std::vector<bool> seen(q_, false);
  Vec g = digits(gen_, p_, m_);
  trim(g);
  Vec cur{1};
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint32_t c = code_of(cur);
    ensure(!seen[c], "modulus is not irreducible or generator not primitive");
    seen[c] = true;
    exp_[k] = c;
    log_[c] = k;
    cur = polymulmod(cur, g, modulus_, p_);
  }
  for (std::uint32_t k = n; k < exp_.size(); ++k) exp_[k] = exp_[k - n];

  // Zech logarithms: zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0.
  zech_.assign(n, -1);
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint32_t c = exp_[k];
    std::uint32_t d0 = c % p_;
    std::uint32_t s = c - d0 + (d0 + 1) % p_;
    zech_[k] = (s == 0) ? -1 : static_cast<std::int32_t>(log_[s]);
  }
}

FieldPtr Field::make(unsigned p, unsigned m) {
  check_limits(p, m);
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto& reg = field_registry();
  auto it = reg.find({p, m});
  if (it != reg.end()) return it->second;
  std::uint64_t count = ipow(p, m);
  Vec modulus;
  for (std::uint64_t low = 0; low < count; ++low) {
    Vec f = digits(low, p, m);
    f.push_back(1);
    if (m == 1 || irreducible_by_trial_division(f, p)) {
      modulus = f;
      break;
    }
  }
  ensure(!modulus.empty(), "no irreducible polynomial found");
  FieldPtr F(new Field(p, modulus, true));
  reg.emplace(std::make_pair(p, m), F);
  return F;
}

FieldPtr Field::make(unsigned p, const std::vector<unsigned>& modulus) {
  require(modulus.size() >= 2, "modulus must have degree at least 1");
  unsigned m = static_cast<unsigned>(modulus.size() - 1);
  check_limits(p, m);
  for (unsigned c : modulus) require(c < p, "modulus coefficients must lie in [0, p)");
  require(modulus.back() == 1, "modulus must be monic");
  require(irreducible_by_trial_division(modulus, p), "modulus is not irreducible over F_p");
  FieldPtr standard = make(p, m);
  if (standard->modulus() == modulus) return standard;
  return FieldPtr(new Field(p, modulus, false));
}

Elem Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::from_coords(const std::vector<unsigned>& c) const {
  require(c.size() <= m_, "element has more coordinates than the extension degree");
  Elem r = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    require(c[i] < p_, "element coordinate out of range");
    r = r * p_ + c[i];
  }
  return r;
}

std::vector<unsigned> Field::coords(Elem a) const { return digits(a, p_, m_); }

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("division by zero in " + name());
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t n = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % n)) % n];
}

Elem Field::frobenius(Elem a, unsigned t) const {
  if (a == 0) return 0;
  std::uint64_t n = q_ - 1;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < t % m_; ++i) e = (e * p_) % n;
  if (n == 1) return a;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * e) % n];
}

std::uint32_t Field::log(Elem a) const {
  require(a != 0, "logarithm of zero");
  return log_[a];
}

std::uint64_t Field::order(Elem a) const {
  require(a != 0, "order of zero");
  std::uint64_t n = q_ - 1;
  return n / std::gcd<std::uint64_t, std::uint64_t>(n, log_[a]);
}

std::string Field::name() const {
  std::string s = "GF(" + std::to_string(p_);
  if (m_ > 1) s += "^" + std::to_string(m_);
  if (!standard_) {
    s += ", mod=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(modulus_[i]);
    }
  }
  return s + ")";
}

std::string Field::format(Elem a) const {
  if (a < p_) return std::to_string(a);
  std::vector<unsigned> c = coords(a);
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && a->p() == b->p() && a->modulus() == b->modulus());
}

TowerPtr Tower::make(const FieldPtr& base, const FieldPtr& ext) {
  require(base->p() == ext->p(), "tower levels have different characteristic");
  require(ext->m() % base->m() == 0, "base degree does not divide extension degree");
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto& reg = tower_registry();
  auto key = std::make_pair(base.get(), ext.get());
  auto it = reg.find(key);
  if (it != reg.end()) return it->second.second;

  std::shared_ptr<Tower> T(new Tower());
  T->base_ = base;
  T->ext_ = ext;
  const Field& L = *ext;
  const std::vector<unsigned>& mod = base->modulus();
  bool found = false;
  for (Elem r = 0; r < L.size() && !found; ++r) {
    Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = L.add(L.mul(acc, r), L.from_int(mod[i]));
    if (acc == 0) {
      T->gen_image_ = r;
      found = true;
    }
  }
  ensure(found, "base modulus has no root in the extension");
  T->embed_.resize(base->size());
  for (Elem a = 0; a < base->size(); ++a) {
    std::vector<unsigned> c = base->coords(a);
    Elem acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = L.add(L.mul(acc, T->gen_image_), L.from_int(c[i]));
    T->embed_[a] = acc;
    T->restrict_.emplace(acc, a);
  }
  ensure(T->restrict_.size() == base->size(), "embedding is not injective");
  reg.emplace(key, std::make_pair(base, T));
  return T;
}

std::optional<Elem> Tower::restrict(Elem a) const {
  auto it = restrict_.find(a);
  if (it == restrict_.end()) return std::nullopt;
  return it->second;
}

unsigned min_field_of_unity(std::uint64_t n, unsigned p) {
  require(n >= 1, "order must be positive");
  require(n % p != 0, "no primitive " + std::to_string(n) + "-th root of unity exists in characteristic " +
                          std::to_string(p));
  std::uint64_t r = p % n;
  unsigned m = 1;
  while (r != 1 % n) {
    r = (r * p) % n;
    ++m;
  }
  return m;
}

Elem primitive_root_of_unity(std::uint64_t n, const Field& F) {
  std::uint64_t qm1 = F.size() - 1;
  require(n >= 1 && qm1 % n == 0,
          std::to_string(n) + " does not divide the order of the multiplicative group of " + F.name());
  return F.pow(F.generator(), qm1 / n);
}

bool in_subfield(const Field& F, Elem a, unsigned k) {
  require(k >= 1 && F.m() % k == 0, "subfield degree must divide the extension degree");
  return F.frobenius(a, k) == a;
}

Elem pth_root(const Field& F, Elem a) { return F.frobenius(a, F.m() - 1); }

std::vector<Elem> subfield_elements(const Field& F, unsigned k) {
  require(k >= 1 && F.m() % k == 0, "subfield degree must divide the extension degree");
  std::vector<Elem> out{0};
  std::uint64_t sub = ipow(F.p(), k) - 1;
  std::uint64_t step = (F.size() - 1) / sub;
  for (std::uint64_t j = 0; j < sub; ++j) out.push_back(F.exp(j * step));
  std::sort(out.begin(), out.end());
  return out;
}

Elem subfield_generator(const Field& F, unsigned k) {
  require(k >= 1 && F.m() % k == 0, "subfield degree must divide the extension degree");
  return F.pow(F.generator(), (F.size() - 1) / (ipow(F.p(), k) - 1));
}

}  // namespace oreaut
