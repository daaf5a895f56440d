#include <doctest.h>

#include <tuple>

#include "oracles.hpp"
#include "oreaut/errors.hpp"
#include "oreaut/gf.hpp"

using namespace oreaut;

namespace {
const std::vector<std::pair<unsigned, unsigned>> kSmall = {{2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2},
                                                           {2, 4}, {5, 2}, {3, 3}, {7, 1}, {13, 1}};
}

TEST_CASE("field arithmetic matches schoolbook reduction") {
  for (auto [p, m] : kSmall) {
    auto F = Field::make(p, m);
    oracle::Gf O(*F);
    CAPTURE(F->name());
    for (Elem a = 0; a < F->size(); ++a) {
      CHECK(F->neg(a) == O.neg(a));
      for (Elem b = 0; b < F->size(); ++b) {
        REQUIRE(F->add(a, b) == O.add(a, b));
        REQUIRE(F->mul(a, b) == O.mul(a, b));
      }
      if (a != 0) {
        CHECK(F->mul(a, F->inv(a)) == 1);
        CHECK(F->order(a) == O.order(a));
      }
      CHECK(F->pow(a, 7) == O.pow(a, 7));
      CHECK(F->frobenius(a) == O.pow(a, p));
    }
  }
}

TEST_CASE("explicit modulus is honoured") {
  auto F = Field::make(3, std::vector<unsigned>{2, 2, 1});
  CHECK(F->size() == 9);
  CHECK(!F->standard_modulus());
  oracle::Gf O(*F);
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b) CHECK(F->mul(a, b) == O.mul(a, b));
  CHECK(Field::make(3, std::vector<unsigned>{1, 0, 1})->size() == 9);
  CHECK_THROWS_AS(Field::make(3, std::vector<unsigned>{1, 2, 1}), DomainError);
}

TEST_CASE("generator is primitive") {
  for (auto [p, m] : kSmall) {
    auto F = Field::make(p, m);
    CHECK(F->order(F->generator()) == F->size() - 1u);
  }
}

TEST_CASE("min_field_of_unity") {
  CHECK(min_field_of_unity(1, 5) == 1);
  CHECK(min_field_of_unity(3, 2) == 2);
  CHECK(min_field_of_unity(8, 3) == 2);
  for (unsigned p : {2u, 3u, 5u})
    for (std::uint64_t n = 1; n < 40; ++n) {
      if (n % p == 0) continue;
      unsigned m = 1;
      for (std::uint64_t r = p % n; r != 1 % n; r = r * p % n) ++m;
      CHECK(min_field_of_unity(n, p) == m);
    }
}

TEST_CASE("primitive roots of unity have exact order") {
  CHECK(primitive_root_of_unity(2, *Field::make(3, 1)) == 2);
  CHECK(primitive_root_of_unity(1, *Field::make(7, 1)) == 1);
  auto F5 = Field::make(5, 1);
  Elem l = primitive_root_of_unity(4, *F5);
  CHECK(F5->pow(l, 2) == 4);
  CHECK(F5->pow(l, 4) == 1);
  for (auto [p, m] : kSmall) {
    auto F = Field::make(p, m);
    oracle::Gf O(*F);
    for (std::uint64_t n = 1; n < F->size(); ++n)
      if ((F->size() - 1) % n == 0) CHECK(O.order(primitive_root_of_unity(n, *F)) == n);
  }
}

TEST_CASE("subfields and p-th roots") {
  auto F9 = Field::make(3, 2);
  CHECK(in_subfield(*F9, 0, 1));
  CHECK(in_subfield(*F9, 1, 1));
  CHECK(!in_subfield(*F9, F9->generator(), 1));
  CHECK(pth_root(*Field::make(3, 1), 2) == 2);
  for (auto [p, m] : kSmall) {
    auto F = Field::make(p, m);
    for (Elem a = 0; a < F->size(); ++a) CHECK(F->frobenius(pth_root(*F, a)) == a);
    for (unsigned k = 1; k <= m; ++k) {
      if (m % k) continue;
      auto S = subfield_elements(*F, k);
      CHECK(S.size() == ipow(p, k));
      for (Elem a : S) CHECK(F->frobenius(a, k) == a);
      CHECK(F->order(subfield_generator(*F, k)) == ipow(p, k) - 1);
    }
  }
}

TEST_CASE("tower embedding is an injective ring map") {
  for (auto [p, k, M] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 1, 3}, {2, 2, 4}, {3, 1, 2}, {3, 2, 4}, {5, 1, 2}}) {
    auto K = Field::make(p, k), L = Field::make(p, M);
    auto T = Tower::make(K, L);
    oracle::Gf OK(*K), OL(*L);
    std::size_t hits = 0;
    for (Elem a = 0; a < K->size(); ++a) {
      CHECK(T->restrict(T->embed(a)) == a);
      for (Elem b = 0; b < K->size(); ++b) {
        CHECK(T->embed(OK.add(a, b)) == OL.add(T->embed(a), T->embed(b)));
        CHECK(T->embed(OK.mul(a, b)) == OL.mul(T->embed(a), T->embed(b)));
      }
    }
    for (Elem c = 0; c < L->size(); ++c) hits += T->contains(c);
    CHECK(hits == K->size());
  }
  CHECK_THROWS_AS(Tower::make(Field::make(2, 2), Field::make(2, 3)), DomainError);
}

TEST_CASE("field limits") {
  CHECK_THROWS_AS(Field::make(17, 1), DomainError);
  CHECK_THROWS_AS(Field::make(2, 21), DomainError);
  CHECK_THROWS_AS(Field::make(4, 1), DomainError);
  FieldLimits saved = field_limits();
  set_field_limits({13, 64});
  CHECK_THROWS_AS(Field::make(2, 7), DomainError);
  CHECK(Field::make(2, 6)->size() == 64);
  set_field_limits(saved);
}
