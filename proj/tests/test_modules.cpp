#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "oreaut/errors.hpp"
#include "oreaut/linalg.hpp"
#include "oreaut/modules.hpp"
#include "oreaut/parse.hpp"

using namespace oreaut;

TEST_CASE("on-f modules from (p_i, q)") {
  auto F3 = Field::make(3, 1);
  Poly f = parse_poly(F3, "x^2");
  auto M = simple_module_on_f(f, Poly::x(F3), Poly::x(F3));
  CHECK(M.dim == 1);
  CHECK(M.X(0, 0) == 0);
  CHECK(M.Y(0, 0) == 0);
  auto M1 = simple_module_on_f(f, Poly::x(F3), parse_poly(F3, "x - 2"));
  CHECK(M1.dim == 1);
  CHECK(M1.Y(0, 0) == 2);
  auto M2 = simple_module_on_f(f, Poly::x(F3), parse_poly(F3, "x^2 + 1"));
  CHECK(M2.dim == 2);
  CHECK(relation_holds(M2, f));
  CHECK(is_zero(mat_sub(*M2.field, mat_mul(*M2.field, M2.Y, M2.X), mat_mul(*M2.field, M2.X, M2.Y))));
  CHECK(central_character_holds(M2, f));
  // the x- and y-span is F_3[Y], a field of dimension 2 inside M_2(F_3)
  CHECK(word_span_dim(M2) == 2);
  CHECK(!burnside_span_full(M2));
  CHECK(burnside_span_full(M1));

  auto Fi = residue_field(parse_poly(F3, "x^2 + 1"));
  CHECK(Fi->size() == 9);
  CHECK_THROWS_AS(simple_module_on_f(f, parse_poly(F3, "x + 1"), Poly::x(F3)), DomainError);
  CHECK_THROWS_AS(simple_module_on_f(f, Poly::x(F3), parse_poly(F3, "x^2 - 1")), DomainError);
}

TEST_CASE("companion matrices") {
  auto F5 = Field::make(5, 1);
  Poly q = parse_poly(F5, "x^3 + 2*x + 1");
  Matrix C = companion(q);
  CHECK(is_zero(eval_matrix(*F5, q, C)));
  CHECK(C(1, 0) == 1);
}

TEST_CASE("off-f modules") {
  auto F4 = Field::make(2, 2);
  Poly f = parse_poly(F4, "x^2 + 1");
  CHECK_THROWS_AS(simple_module_off_f(f, 1, 0), DomainError);
  Elem xi = F4->generator();
  auto M = simple_module_off_f(f, xi, 1);
  CHECK(M.dim == 2);
  CHECK(M.rho_convention == "z2");
  Elem a = pth_root(*F4, xi);
  CHECK(M.X(0, 0) == a);
  CHECK(M.Y(1, 0) == 1);  // y·e_0 = e_1
  CHECK(relation_holds(M, f));
  CHECK(central_character_holds(M, f));
  CHECK(burnside_span_full(M));

  std::mt19937_64 rng(6);
  for (auto F : {Field::make(3, 1), Field::make(2, 2), Field::make(3, 2), Field::make(5, 1)}) {
    for (int t = 0; t < 8; ++t) {
      std::vector<Elem> c(2 + rng() % 3);
      for (Elem& e : c) e = static_cast<Elem>(rng() % F->size());
      c.back() = 1;
      Poly g(F, c);
      Elem x0 = static_cast<Elem>(rng() % F->size()), rho = static_cast<Elem>(rng() % F->size());
      if (g.eval(pth_root(*F, x0)) == 0) continue;
      auto N = simple_module_off_f(g, x0, rho);
      CHECK(N.dim == F->p());
      CHECK(relation_holds(N, g));
      CHECK(central_character_holds(N, g));
      CHECK(burnside_span_full(N));
      auto [X, Y] = rederive_off_f(g, x0, rho);
      CHECK(X == N.X);
      CHECK(Y == N.Y);
    }
  }
}

TEST_CASE("factorisation and spectra") {
  auto F3 = Field::make(3, 1);
  auto S = spectrum(parse_poly(F3, "x^2*(x+1)"));
  REQUIRE(S.min_primes.size() == 2);
  CHECK(S.min_primes[0].poly == Poly::x(F3));
  CHECK(S.min_primes[0].mult == 2);
  CHECK(S.min_primes[1].poly == parse_poly(F3, "x + 1"));
  CHECK(S.min_primes[1].mult == 1);
  CHECK(S.ht1.size() == 2);
  CHECK(S.krull_dim == 2);
  CHECK(S.global_dim == 2);

  auto irr = factor(parse_poly(F3, "x^2 + 1"));
  REQUIRE(irr.size() == 1);
  CHECK(irr[0].mult == 1);
  CHECK(residue_field(irr[0].poly)->size() == 9);

  std::mt19937_64 rng(14);
  for (auto F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
    for (int t = 0; t < 30; ++t) {
      std::vector<Elem> c(2 + rng() % 5);
      for (Elem& e : c) e = static_cast<Elem>(rng() % F->size());
      c.back() = 1;
      Poly f(F, c);
      Poly prod = Poly::constant(F, 1);
      for (const auto& m : factor(f)) {
        prod = prod * m.poly.pow(m.mult);
        CHECK(roots_with_multiplicity(m.poly).roots.size() == static_cast<std::size_t>(m.poly.degree()));
        CHECK(splitting_degree(m.poly) == static_cast<unsigned>(m.poly.degree()));
      }
      CHECK(prod == f);
    }
  }

  // central points off V(f^p): every listed (ξ, ρ) gives a module
  auto F2 = Field::make(2, 1);
  Poly f = parse_poly(F2, "x^2 + x + 1");
  auto Sp = spectrum(f, 2);
  CHECK(!Sp.max_off_f.empty());
  for (const auto& pt : Sp.max_off_f) {
    auto T = Tower::make(F2, pt.field);
    Poly fE = embed(f, *T);
    CHECK(fE.eval(pth_root(*pt.field, pt.xi)) != 0);
    auto M = simple_module_off_f(fE, pt.xi, pt.rho);
    CHECK(relation_holds(M, fE));
  }
}
