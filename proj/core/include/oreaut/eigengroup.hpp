#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oreaut/gf.hpp"
#include "oreaut/poly.hpp"

namespace oreaut {

/// σ_{λ,μ}: x ↦ λx + μ.
struct AffineAut {
  Elem lambda = 1;
  Elem mu = 0;
  bool operator==(const AffineAut&) const = default;
  bool operator<(const AffineAut& o) const { return lambda != o.lambda ? lambda < o.lambda : mu < o.mu; }
};

/// (σ1σ2)(x) = σ1(σ2(x)) = λ1λ2 x + λ2μ1 + μ2.
AffineAut compose(const Field& F, const AffineAut& s1, const AffineAut& s2);
AffineAut inverse(const Field& F, const AffineAut& s);
/// σ(f) = f(λx + μ).
Poly apply(const AffineAut& s, const Poly& f);
std::uint64_t order(const Field& F, const AffineAut& s);

/// V(f, K) together with its multiplier exponent.
struct ShiftSpace {
  FieldPtr field;
  std::vector<Elem> basis;  // F_p-basis
  unsigned e = 0;           // multiplier exponent, 0 for V = 0
  unsigned dim() const { return static_cast<unsigned>(basis.size()); }
  std::vector<Elem> elements() const;
};

enum class GroupKind { Full, Torus, Finite };

/// G_f over some field. Every variant stores the data (V, n, λ_n, ν) describing
/// G = {x ↦ λ_n^i x + (1 - λ_n^i)ν + v}; when `closure` is set the field stands in
/// for the algebraic closure and a torus is the infinite group T_ν.
struct EigengroupDesc {
  GroupKind kind = GroupKind::Finite;
  FieldPtr field;
  bool closure = false;
  Elem nu = 0;
  std::uint64_t n = 1;
  Elem lambda_n = 1;
  std::vector<Elem> V_basis;

  bool infinite() const { return closure && kind != GroupKind::Finite; }
  /// n * p^dim V, or nullopt for an infinite group.
  std::optional<std::uint64_t> order() const;
  /// e.g. "Sh_V ⋊ <σ_{λ,μ}>, order 18".
  std::string presentation() const;
};

enum class FormCase { A10, A11, B11, SingleRoot, None };
const char* form_case_name(FormCase c);

/// Eigenform of f over the closure field L:
///   A10: f = f_V^i(x-ν) g(f_V^n(x-ν))     A11: f = (x-ν)^i g((x-ν)^n)
///   B11: f = g(f_V(x))^(p^s)              SingleRoot: f = (x-ν)^d.
struct Eigenform {
  FormCase kase = FormCase::None;
  FieldPtr field;
  std::vector<Elem> V_basis;
  std::uint64_t i = 0;
  Elem nu = 0;
  std::uint64_t n = 1;
  Poly g;
  unsigned s = 0;
  std::uint64_t d = 0;
};

/// Expanded polynomial of an eigenform (nullopt for FormCase::None).
std::optional<Poly> expand(const Eigenform& form);
/// σ_{λ_n,(1-λ_n)ν}(f) = λ_n^i f for A10/A11 forms (true for other cases).
bool eigenvalue_law_holds(const Eigenform& form, const Poly& f);

struct ClosedResult {
  EigengroupDesc group;  // over L, closure = true
  Eigenform form;
  Poly f_L;              // f with coefficients in L
  RootMultiset roots;
  bool triviality_test = false;  // verdict of the fast triviality criterion
};

/// Exhaustive oracle: all (λ, μ) ∈ F^× × F with f(λx + μ) ∝ f, sorted.
std::vector<AffineAut> eigengroup_bruteforce(const Poly& f, std::uint64_t cap = std::uint64_t{1} << 12);

/// V(f, F_{p^k}) computed inside the splitting field of f.
ShiftSpace shift_space(const Poly& f, unsigned k);
/// Multiset shift space {v ∈ L : R(f) + v = R(f)} for roots already computed in L.
ShiftSpace shift_space_in(const RootMultiset& R);

/// The eigengroup over L (a split field for f, default: minimal splitting field)
/// together with the eigenform.
ClosedResult eigengroup_closed(const Poly& f);
ClosedResult eigengroup_closed(const Poly& f, const FieldPtr& L);
/// Restricts a closure-level descriptor to a subfield K ⊆ L.
EigengroupDesc eigengroup_descend(const EigengroupDesc& desc, const FieldPtr& K);
EigengroupDesc eigengroup_descend(const EigengroupDesc& desc, unsigned k);
/// G_f over f's own coefficient field.
EigengroupDesc eigengroup(const Poly& f);
/// G_f over an extension E of f's coefficient field.
EigengroupDesc eigengroup_over(const Poly& f, const FieldPtr& E);
/// The smallest field containing f's splitting field and F_{p^min_degree}.
FieldPtr closure_field(const Poly& f, unsigned min_degree = 1);

/// All elements of a finite descriptor, sorted.
std::vector<AffineAut> group_elements(const EigengroupDesc& desc);

/// Subgroups of Aut_K(K[x]) with a witness polynomial.
struct SubgroupSpec {
  enum class Shape { Trivial, Cyclic, Shift, ShiftCyclic, Torus, Full };
  enum class ShiftWitness { OffImage, TwoCosets };
  Shape shape = Shape::Trivial;
  FieldPtr field;
  std::uint64_t n = 1;
  Elem nu = 0;
  std::vector<Elem> V_basis;
  ShiftWitness witness = ShiftWitness::OffImage;
};

/// The descriptor of H itself (over its field, not a closure).
EigengroupDesc subgroup_desc(const SubgroupSpec& H);
/// A monic f_H with G_{f_H} = H.
Poly inverse_eigengroup(const SubgroupSpec& H);

}  // namespace oreaut
