#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "oreaut/errors.hpp"
#include "oreaut/linalg.hpp"
#include "oreaut/parse.hpp"
#include "oreaut/poly.hpp"

using namespace oreaut;

namespace {

Poly random_poly(const FieldPtr& F, int deg, std::mt19937_64& rng, bool monic = false) {
  std::vector<Elem> c(deg + 1);
  for (Elem& e : c) e = static_cast<Elem>(rng() % F->size());
  if (monic) c.back() = 1;
  return Poly(F, c);
}

}  // namespace

TEST_CASE("ring operations agree with schoolbook arithmetic") {
  std::mt19937_64 rng(11);
  for (auto F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 3), Field::make(3, 2)}) {
    oracle::Gf O(*F);
    for (int t = 0; t < 60; ++t) {
      Poly a = random_poly(F, static_cast<int>(rng() % 6), rng), b = random_poly(F, static_cast<int>(rng() % 5), rng);
      CHECK((a * b).coeffs() == oracle::pmul(O, a.coeffs(), b.coeffs()));
      CHECK((a + b).coeffs() == oracle::padd(O, a.coeffs(), b.coeffs()));
      CHECK(a.derivative().coeffs() == oracle::deriv(O, a.coeffs()));
      if (!b.is_zero()) {
        auto [qq, r] = divmod(a, b);
        CHECK(qq * b + r == a);
        CHECK(r.degree() < b.degree());
        Poly g = gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
      }
      Elem l = static_cast<Elem>(1 + rng() % (F->size() - 1)), mu = static_cast<Elem>(rng() % F->size());
      CHECK(affine_subst(a, l, mu).coeffs() == oracle::affine(O, a.coeffs(), l, mu));
      CHECK(translate(a, mu).coeffs() == oracle::affine(O, a.coeffs(), 1, mu));
      for (Elem x = 0; x < F->size(); ++x) CHECK(a.eval(x) == oracle::peval(O, a.coeffs(), x));
    }
  }
}

TEST_CASE("roots with multiplicity") {
  auto F5 = Field::make(5, 1);
  Poly f = parse_poly(F5, "(x-1)^2*(x-2)^3");
  RootMultiset R = roots_with_multiplicity(f);
  REQUIRE(R.roots.size() == 2);
  CHECK(R.roots[0].value == 1);
  CHECK(R.roots[0].mult == 2);
  CHECK(R.roots[1].value == 2);
  CHECK(R.roots[1].mult == 3);

  auto R0 = roots_with_multiplicity(Poly::x(F5));
  CHECK(R0.roots.size() == 1);
  CHECK(R0.roots[0].value == 0);
  CHECK(R0.roots[0].mult == 1);

  auto F3 = Field::make(3, 1);
  Poly g = parse_poly(F3, "x^2+1");
  RootMultiset Rg = roots_with_multiplicity(g);
  CHECK(Rg.field->size() == 9);
  REQUIRE(Rg.roots.size() == 2);
  oracle::Gf O9(*Rg.field);
  std::vector<Elem> brute;
  for (Elem a = 0; a < 9; ++a)
    if (O9.add(O9.mul(a, a), 1) == 0) brute.push_back(a);
  CHECK(Rg.distinct() == brute);
  CHECK(Rg.roots[0].mult == 1);
}

TEST_CASE("split polynomials are products of their linear factors") {
  std::mt19937_64 rng(5);
  for (auto F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1)}) {
    for (int t = 0; t < 40; ++t) {
      Poly f = random_poly(F, 1 + static_cast<int>(rng() % 5), rng, true);
      RootMultiset R = roots_with_multiplicity(f);
      CHECK(R.total() == static_cast<std::size_t>(f.degree()));
      Poly prod = Poly::constant(R.field, 1);
      for (const Root& r : R.roots) prod = prod * Poly::from_roots(R.field, {r.value}).pow(r.mult);
      CHECK(prod == embed(f, *R.tower));
      CHECK(R.field->m() == F->m() * splitting_degree(f));
    }
  }
}

TEST_CASE("root finding in larger fields matches the planted roots") {
  std::mt19937_64 rng(77);
  for (auto F : {Field::make(2, 6), Field::make(3, 4), Field::make(5, 3), Field::make(2, 10), Field::make(13, 2)}) {
    for (int t = 0; t < 10; ++t) {
      std::map<Elem, unsigned> planted;
      Poly f = Poly::constant(F, 1);
      for (int k = 0, n = 1 + static_cast<int>(rng() % 12); k < n; ++k) {
        Elem a = static_cast<Elem>(rng() % F->size());
        ++planted[a];
        f = f * Poly(F, {F->neg(a), 1});
      }
      auto roots = roots_in(f);
      REQUIRE(roots.size() == planted.size());
      auto it = planted.begin();
      for (const Root& r : roots) {
        CHECK(r.value == it->first);
        CHECK(r.mult == it->second);
        ++it;
      }
      // the quadratic cofactor may or may not split; count its new roots by evaluation
      Poly h(F, {F->generator(), 0, 1});
      Poly g = f * h;
      std::size_t extra = 0;
      for (Elem a = 0; a < F->size(); ++a) extra += h.eval(a) == 0 && !planted.count(a);
      CHECK(roots_in(g).size() == planted.size() + extra);
    }
  }
}

TEST_CASE("exponent decomposition") {
  auto F3 = Field::make(3, 1), F2 = Field::make(2, 1);
  auto d = exponent_decomp(parse_poly(F3, "x^6"));
  CHECK(d.s == 1);
  CHECK(d.gcd_p == 2);
  CHECK(d.f1 == parse_poly(F3, "x^2"));
  Poly f = parse_poly(F3, "x^2+x+2");
  auto d0 = exponent_decomp(f);
  CHECK(d0.s == 0);
  CHECK(d0.f1 == f);
  auto d2 = exponent_decomp(parse_poly(F2, "x^4+x^2"));
  CHECK(d2.s == 1);
  CHECK(d2.f1 == parse_poly(F2, "x^2+x"));
  CHECK(d2.f1.pow(2) == parse_poly(F2, "x^4+x^2"));
  CHECK(gcd_p(parse_poly(F3, "x^12+x^6")) == 2);
  CHECK(index_divide(parse_poly(F3, "x^12+x^6"), 6) == parse_poly(F3, "x^2+x"));
}

TEST_CASE("subspace polynomials") {
  auto F5 = Field::make(5, 1);
  CHECK(f_V_basis(F5, {2}) == parse_poly(F5, "x^5 - 2^4*x"));
  CHECK(f_V_basis(F5, {}, 3) == parse_poly(F5, "x - 3"));
  auto F9 = Field::make(3, 2);
  Elem mu = F9->generator();
  // F_9·μ = F_9: x^9 - μ^8 x = x^9 - x
  auto all = subfield_elements(*F9, 2);
  std::vector<Elem> V;
  for (Elem a : all) V.push_back(F9->mul(a, mu));
  CHECK(f_V(F9, V) == parse_poly(F9, "x^9 - x"));
  std::mt19937_64 rng(3);
  for (auto F : {Field::make(2, 3), Field::make(2, 4), Field::make(3, 2)}) {
    oracle::Gf O(*F);
    for (int t = 0; t < 10; ++t) {
      std::vector<Elem> basis = fp_basis(*F, {static_cast<Elem>(rng() % F->size()), static_cast<Elem>(rng() % F->size())});
      Poly P = f_V_basis(F, basis);
      auto span = fp_span(*F, basis);
      CHECK(P.degree() == static_cast<int>(span.size()));
      for (Elem v : span) CHECK(P.eval(v) == 0);
      for (Elem a = 0; a < F->size(); ++a)
        for (Elem b = 0; b < F->size(); b += 3) CHECK(P.eval(O.add(a, b)) == O.add(P.eval(a), P.eval(b)));
      unsigned e = multiplier_field(*F, basis);
      CHECK(F->m() % e == 0);
      for (Elem c : subfield_elements(*F, e))
        for (Elem v : span) CHECK(in_fp_span(*F, basis, F->mul(c, v)));
    }
  }
  CHECK(multiplier_field(*F5, {1}) == 1);
  auto F4 = Field::make(2, 2);
  CHECK(multiplier_field(*F4, {1, 2}) == 2);
  auto F8 = Field::make(2, 3);
  CHECK(multiplier_field(*F8, {1, F8->generator()}) == 1);
}

TEST_CASE("decompose_through") {
  auto F3 = Field::make(3, 1);
  Poly h = parse_poly(F3, "x^3 - x");
  Poly f = parse_poly(F3, "(x^3 - x)^2 + 1");
  auto g = decompose_through(f, h);
  REQUIRE(g);
  CHECK(*g == parse_poly(F3, "x^2 + 1"));
  CHECK(compose(*g, h) == f);
  CHECK(decompose_through(h, h) == Poly::x(F3));
  CHECK(!decompose_through(parse_poly(F3, "x^2 + x"), parse_poly(F3, "x^2")));
}

TEST_CASE("parser") {
  auto F3 = Field::make(3, 1);
  CHECK(parse_poly(F3, "2x(x+1)") == parse_poly(F3, "2*x^2 + 2*x"));
  CHECK(parse_poly(F3, "[1,0,2]") == parse_poly(F3, "2*x^2+1"));
  CHECK(parse_poly(F3, "-x") == parse_poly(F3, "2*x"));
  CHECK(format_poly(parse_poly(F3, "x^3+2*x+1")) == "x^3 + 2*x + 1");
  CHECK(format_poly(Poly(F3)) == "0");
  auto F9 = parse_field("GF(3^2)");
  CHECK(F9->size() == 9);
  CHECK(parse_field("GF(9)")->name() == "GF(3^2)");
  CHECK(parse_field("GF(9, mod=2,2,1)")->modulus() == std::vector<unsigned>{2, 2, 1});
  CHECK(parse_element(*F9, "[1,2]") == 1 + 2 * 3);
  CHECK(parse_element(*F9, "7") == 1);
  // a bracket spanning the whole input is a coefficient vector, otherwise an element literal
  Poly v = parse_poly(F9, "[[0,1],1]");
  CHECK(v == Poly(F9, {3, 1}));
  CHECK(parse_poly(F9, "[0,1]*x") == Poly(F9, {0, 3}));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Poly f = random_poly(F9, static_cast<int>(rng() % 5), rng);
    CHECK(parse_poly(F9, format_poly(f)) == f);
  }
  try {
    parse_poly(F3, "x^(");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_poly(F3, "x + z"), ParseError);
  CHECK_THROWS_AS(parse_field("GF(6)"), DomainError);
  CHECK_THROWS_AS(parse_field("GF(9, mod=1,0,0)"), DomainError);
}
