#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "oreaut/eigengroup.hpp"
#include "oreaut/errors.hpp"
#include "oreaut/linalg.hpp"
#include "oreaut/parse.hpp"

using namespace oreaut;

namespace {

std::vector<std::pair<Elem, Elem>> as_pairs(const std::vector<AffineAut>& G) {
  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& s : G) out.emplace_back(s.lambda, s.mu);
  std::sort(out.begin(), out.end());
  return out;
}

Poly monic_from_code(const FieldPtr& F, std::uint64_t code, int deg) {
  std::vector<Elem> c(deg + 1, 1);
  for (int i = 0; i < deg; ++i, code /= F->size()) c[i] = static_cast<Elem>(code % F->size());
  return Poly(F, c);
}

}  // namespace

TEST_CASE("exhaustive enumeration agrees with direct substitution") {
  for (auto F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1)}) {
    oracle::Gf O(*F);
    for (int d = 1; d <= 3; ++d) {
      std::uint64_t total = 1;
      for (int i = 0; i < d; ++i) total *= F->size();
      for (std::uint64_t code = 0; code < total; ++code) {
        Poly f = monic_from_code(F, code, d);
        CHECK(as_pairs(eigengroup_bruteforce(f)) == oracle::eigengroup(O, f.coeffs()));
      }
    }
  }
}

TEST_CASE("worked examples") {
  auto F5 = Field::make(5, 1);
  auto G = eigengroup(Poly::x(F5));
  CHECK(group_elements(G).size() == 4);
  for (const auto& s : group_elements(G)) CHECK(s.mu == 0);

  auto T = eigengroup(parse_poly(F5, "x*(x+1)^2"));
  CHECK(T.kind == GroupKind::Finite);
  CHECK(T.order() == 1u);

  for (unsigned p : {2u, 3u, 5u}) {
    auto F = Field::make(p, 1);
    Poly f = Poly::monomial(F, 1, p) - Poly::x(F);
    auto D = eigengroup(f);
    CHECK(D.kind == GroupKind::Full);
    CHECK(group_elements(D).size() == p * (p - 1));
    auto V = shift_space(f, 1);
    CHECK(V.dim() == 1);
  }
  CHECK(shift_space(parse_poly(F5, "x*(x+1)^2"), 1).dim() == 0);
  CHECK(shift_space(parse_poly(Field::make(3, 1), "x^2 - 1"), 1).dim() == 0);

  auto F3 = Field::make(3, 1);
  {
    EigengroupDesc d;
    d.field = F3;
    d.n = 2;
    d.lambda_n = 2;
    auto el = group_elements(d);
    CHECK(as_pairs(el) == std::vector<std::pair<Elem, Elem>>{{1, 0}, {2, 0}});
  }
  auto F2 = Field::make(2, 1);
  auto S = eigengroup(parse_poly(F2, "x^2 + x"));
  CHECK(as_pairs(group_elements(S)) == std::vector<std::pair<Elem, Elem>>{{1, 0}, {1, 1}});
}

TEST_CASE("closed forms over the splitting field") {
  auto F5 = Field::make(5, 1);
  auto r = eigengroup_closed(parse_poly(F5, "(x-2)^3"));
  CHECK(r.group.kind == GroupKind::Torus);
  CHECK(r.group.nu == 2);
  CHECK(r.form.kase == FormCase::SingleRoot);
  CHECK(r.group.infinite());

  // (x - ν)^n - 1 with n | p^m - 1
  auto F7 = Field::make(7, 1);
  auto c = eigengroup_closed(parse_poly(F7, "(x-3)^3 - 1"));
  CHECK(c.form.kase == FormCase::A11);
  CHECK(c.form.i == 0);
  CHECK(c.form.nu == 3);
  CHECK(c.group.n == 3);
  CHECK(c.group.V_basis.empty());

  // f_V(x - ν): n = p^e - 1 unless (p, e) = (2, 1)
  auto F3 = Field::make(3, 1);
  auto v3 = eigengroup_closed(parse_poly(F3, "(x-1)^3 - (x-1)"));
  CHECK(v3.group.n == 2);
  CHECK(v3.group.V_basis.size() == 1);
  auto v2 = eigengroup_closed(parse_poly(Field::make(2, 1), "x^2 + x"));
  CHECK(v2.group.n == 1);
  CHECK(v2.group.V_basis.size() == 1);
}

TEST_CASE("descent to the base field") {
  auto F3 = Field::make(3, 1);
  auto F9 = Field::make(3, 2);
  Elem g = F9->generator();
  Poly f9 = Poly::from_roots(F9, {g, g});
  auto r = eigengroup_closed(f9);
  CHECK(r.group.kind == GroupKind::Torus);
  auto down = eigengroup_descend(r.group, 1);
  CHECK(down.field->size() == 3);
  CHECK(down.order() == 1u);
  CHECK(eigengroup_descend(r.group, 2).kind == GroupKind::Torus);
  // K = L: identity descent
  auto own = eigengroup_closed(parse_poly(F3, "x^3 - x"));
  auto same = eigengroup_descend(own.group, own.group.field);
  CHECK(group_elements(same) == group_elements(eigengroup(parse_poly(F3, "x^3 - x"))));
  CHECK(group_elements(same).size() == 6);
}

TEST_CASE("structured eigengroup equals substitution over base and extension fields") {
  std::mt19937_64 rng(23);
  for (auto F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1), Field::make(2, 3), Field::make(3, 2)}) {
    oracle::Gf O(*F);
    for (int t = 0; t < 80; ++t) {
      int d = 1 + static_cast<int>(rng() % 5);
      Poly f = monic_from_code(F, rng(), d);
      CAPTURE(format_poly(f));
      CHECK(as_pairs(group_elements(eigengroup(f))) == oracle::eigengroup(O, f.coeffs()));
    }
  }
  auto F2 = Field::make(2, 1), F4 = Field::make(2, 2);
  oracle::Gf O4(*F4);
  auto T = Tower::make(F2, F4);
  for (std::uint64_t code = 0; code < 32; ++code) {
    Poly f = monic_from_code(F2, code, 5);
    CHECK(as_pairs(group_elements(eigengroup_over(f, F4))) == oracle::eigengroup(O4, embed(f, *T).coeffs()));
  }
}

TEST_CASE("eigenforms expand to f and satisfy their eigenvalue law") {
  std::mt19937_64 rng(31);
  for (auto F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1)}) {
    for (int t = 0; t < 60; ++t) {
      Poly f = monic_from_code(F, rng(), 1 + static_cast<int>(rng() % 5));
      auto r = eigengroup_closed(f);
      if (r.form.kase == FormCase::None) continue;
      auto ex = expand(r.form);
      REQUIRE(ex);
      CHECK(*ex == r.f_L);
      CHECK(eigenvalue_law_holds(r.form, r.f_L));
    }
  }
}

TEST_CASE("invariants") {
  std::mt19937_64 rng(41);
  for (auto F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
    oracle::Gf O(*F);
    for (int t = 0; t < 40; ++t) {
      Poly f = monic_from_code(F, rng(), 1 + static_cast<int>(rng() % 4));
      auto G = group_elements(eigengroup(f));
      // Frobenius stability
      CHECK(group_elements(eigengroup(f.pow(F->p()))) == G);
      // closed under composition and inverse, contains the identity
      CHECK(std::binary_search(G.begin(), G.end(), AffineAut{1, 0}));
      for (const auto& a : G) {
        CHECK(std::binary_search(G.begin(), G.end(), inverse(*F, a)));
        for (const auto& b : G) CHECK(std::binary_search(G.begin(), G.end(), compose(*F, a, b)));
      }
      // conjugation: G_{f(αx+β)} is the conjugate of G_f
      Elem alpha = static_cast<Elem>(1 + rng() % (F->size() - 1)), beta = static_cast<Elem>(rng() % F->size());
      Poly h = affine_subst(f, alpha, beta).monic();
      AffineAut tau{alpha, beta};
      std::vector<AffineAut> conj;
      for (const auto& s : G) conj.push_back(compose(*F, compose(*F, tau, s), inverse(*F, tau)));
      std::sort(conj.begin(), conj.end());
      CHECK(group_elements(eigengroup(h)) == conj);
    }
  }
}

TEST_CASE("inverse problem round trip") {
  for (auto F : {Field::make(3, 1), Field::make(2, 2), Field::make(5, 1), Field::make(2, 3)}) {
    oracle::Gf O(*F);
    SubgroupSpec H;
    H.field = F;
    H.shape = SubgroupSpec::Shape::Trivial;
    CHECK(format_poly(inverse_eigengroup(H)) == format_poly(parse_poly(F, "x*(x+1)^2")));
    H.shape = SubgroupSpec::Shape::Full;
    CHECK(inverse_eigengroup(H) == Poly::monomial(F, 1, F->size()) - Poly::x(F));
    H.shape = SubgroupSpec::Shape::Torus;
    H.nu = F->size() - 1;
    CHECK(inverse_eigengroup(H) == Poly::from_roots(F, {H.nu}));
    for (Elem nu = 0; nu < F->size(); ++nu)
      for (std::uint64_t n = 2; n < F->size(); ++n) {
        if ((F->size() - 1) % n) continue;
        SubgroupSpec C{SubgroupSpec::Shape::Cyclic, F, n, nu, {}, {}};
        Poly fh = inverse_eigengroup(C);
        Elem l = primitive_root_of_unity(n, *F);
        std::vector<std::pair<Elem, Elem>> want;
        for (std::uint64_t k = 0; k < n; ++k) {
          Elem lk = O.pow(l, k);
          want.emplace_back(lk, O.mul(O.sub(1, lk), nu));
        }
        std::sort(want.begin(), want.end());
        CHECK(oracle::eigengroup(O, fh.coeffs()) == want);
      }
  }
  SubgroupSpec bad{SubgroupSpec::Shape::Cyclic, Field::make(5, 1), 3, 0, {}, {}};
  CHECK_THROWS_AS(inverse_eigengroup(bad), DomainError);
}

TEST_CASE("input validation") {
  auto F3 = Field::make(3, 1);
  CHECK_THROWS_AS(eigengroup(Poly::constant(F3, 1)), DomainError);
  CHECK_THROWS_AS(eigengroup(parse_poly(F3, "2*x+1")), DomainError);
  CHECK_THROWS_AS(eigengroup_closed(parse_poly(F3, "x^2+1"), F3), DomainError);
}
