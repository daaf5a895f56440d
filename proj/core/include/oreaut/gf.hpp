#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace oreaut {

/// An element of F_{p^m}, encoded as the integer sum c_0 + c_1 p + ... + c_{m-1} p^{m-1}
/// of its coordinates in the power basis of the field modulus.
using Elem = std::uint32_t;

/// Process-wide size limits for field construction.
struct FieldLimits {
  unsigned max_p = 13;
  std::uint64_t max_size = std::uint64_t{1} << 20;
};

FieldLimits field_limits();
void set_field_limits(const FieldLimits& limits);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_{p^m} = F_p[t]/(modulus). Immutable after construction;
/// arithmetic runs through exponent/logarithm tables over a primitive element.
class Field {
 public:
  /// The field with the smallest monic irreducible modulus of degree m (cached).
  static FieldPtr make(unsigned p, unsigned m);
  /// The field defined by an explicit monic modulus, coefficients low to high.
  static FieldPtr make(unsigned p, const std::vector<unsigned>& modulus);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint32_t size() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  bool standard_modulus() const { return standard_; }
  /// The primitive element used for the log tables.
  Elem generator() const { return gen_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long n) const;
  Elem from_coords(const std::vector<unsigned>& c) const;
  std::vector<unsigned> coords(Elem a) const;
  unsigned coord(Elem a, unsigned i) const { return (a / pw_[i]) % p_; }

  Elem add(Elem a, Elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    if (p_ == 2) return a ^ b;
    std::uint32_t la = log_[a], lb = log_[b];
    std::uint32_t d = lb >= la ? lb - la : lb + (q_ - 1) - la;
    std::int32_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
  }
  Elem neg(Elem a) const {
    if (a == 0 || p_ == 2) return a;
    return exp_[log_[a] + half_];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(p^t).
  Elem frobenius(Elem a, unsigned t = 1) const;
  /// Discrete log to the base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const;
  bool in_prime_field(Elem a) const { return a < p_; }

  /// "GF(p)" / "GF(p^m)", with ", mod=..." appended for non-default moduli.
  std::string name() const;
  /// Element text: an integer for prime-field values, otherwise "[c0,c1,...]".
  std::string format(Elem a) const;

 private:
  Field(unsigned p, std::vector<unsigned> modulus, bool standard);

  unsigned p_ = 0;
  unsigned m_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t half_ = 0;
  bool standard_ = true;
  Elem gen_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> pw_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> zech_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Two-level tower K ⊆ L given by an explicit embedding of K into L.
class Tower {
 public:
  static std::shared_ptr<const Tower> make(const FieldPtr& base, const FieldPtr& ext);

  const FieldPtr& base() const { return base_; }
  const FieldPtr& ext() const { return ext_; }
  /// Image in L of the generator t of K (the smallest root of K's modulus in L).
  Elem generator_image() const { return gen_image_; }
  Elem embed(Elem a) const { return embed_[a]; }
  std::optional<Elem> restrict(Elem a) const;
  bool contains(Elem a) const { return restrict(a).has_value(); }

 private:
  Tower() = default;
  FieldPtr base_, ext_;
  Elem gen_image_ = 0;
  std::vector<Elem> embed_;
  std::unordered_map<Elem, Elem> restrict_;
};
using TowerPtr = std::shared_ptr<const Tower>;

/// Smallest m >= 1 with n | p^m - 1.
unsigned min_field_of_unity(std::uint64_t n, unsigned p);
/// A primitive n-th root of unity: generator^((q-1)/n).
Elem primitive_root_of_unity(std::uint64_t n, const Field& F);
/// a^(p^k) == a.
bool in_subfield(const Field& F, Elem a, unsigned k);
/// The unique b with b^p = a.
Elem pth_root(const Field& F, Elem a);
/// All elements of the degree-k subfield of F, in ascending code order.
std::vector<Elem> subfield_elements(const Field& F, unsigned k);
/// Generator of the multiplicative group of the degree-k subfield.
Elem subfield_generator(const Field& F, unsigned k);

}  // namespace oreaut
