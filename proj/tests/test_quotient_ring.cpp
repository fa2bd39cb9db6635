#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "blalg/algebra.hpp"
#include "blalg/quotient_ring.hpp"
#include "oracles.hpp"

using namespace blalg;

namespace {

Poly decode(residue p, std::size_t idx, int d) {
  std::vector<residue> c(static_cast<std::size_t>(d));
  for (auto& x : c) {
    x = static_cast<residue>(idx % p);
    idx /= p;
  }
  return Poly::from_residues(p, c);
}

oracle::Ideal as_set(const IdealHandle& I, std::size_t size) {
  const auto& R = I.ring();
  oracle::Ideal out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = I.contains(element(R, decode(R.p(), i, R.degree())));
  return out;
}

std::vector<std::int64_t> ascending(const Poly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

struct Case {
  residue p;
  Poly f;
};

std::vector<Case> small_rings() {
  return {
      {2, chi(2, 1)},
      {2, chi(2, 2)},
      {2, chi(2, 3)},
      {2, chi(2, 5)},
      {2, Poly(2, {0, 0, 1})},
      {2, Poly(2, {0, 0, 0, 1})},
      {2, Poly(2, {0, 0, 1, 0, 1})},
      {2, Poly(2, {1, 1, 0, 0, 1})},
      {2, Poly(2, {0, 0, 0, 1, 0, 1})},
      {3, chi(3, 1)},
      {3, chi(3, 2)},
      {3, chi(3, 3)},
      {3, Poly(3, {0, 0, 1})},
      {3, Poly(3, {0, 0, 1, 1})},
      {3, Poly(3, {1, 0, 1})},
      {3, Poly(3, {0, 0, 0, 0, 1})},
      {5, chi(5, 2)},
      {5, Poly(5, {0, 0, 0, 1})},
      {5, Poly(5, {0, 1, 1, 1})},
  };
}

}  // namespace

TEST_CASE("ring construction", "[quotient_ring]") {
  auto r32 = make_ring(3, 2);
  CHECK(r32.modulus() == Poly(3, {0, -1, 0, 1}));
  CHECK(r32.components() == 3u);
  CHECK(r32.squarefree());

  auto r34 = make_ring(3, 4);
  CHECK(r34.components() == 4u);
  CHECK(r34.squarefree());

  auto r33 = make_ring(3, 3);
  CHECK_FALSE(r33.squarefree());
  CHECK(r33.squarefree() == gcd(r33.modulus(), derivative(r33.modulus())).is_one());

  CHECK(make_general(2, Poly(2, {0, 0, 1})).components() == 1u);
  CHECK(ideals(make_general(2, Poly(2, {0, 0, 1}))).size() == 3u);
  CHECK(ideals(make_general(2, Poly(2, {0, 1, 1}))).size() == 4u);
  CHECK(ideals(make_general(3, Poly::x(3))).size() == 2u);

  CHECK_THROWS_AS(make_ring(4, 2), NotPrime);
  CHECK_THROWS_AS(make_general(3, Poly(3, {0, 2})), NotMonic);
  CHECK_THROWS_AS(make_general(9, Poly(9, {0, 1})), NotPrime);
}

TEST_CASE("units and zero divisors", "[quotient_ring]") {
  auto r34 = make_ring(3, 4);
  auto f = element(r34, Poly(3, {2, 0, 0, 1, 1}));
  CHECK(inverse(f).rep == Poly(3, {2, 1, 0, 0, 1}));
  CHECK(classify_element(f) == ElementKind::Unit);

  auto r32 = make_ring(3, 2);
  auto g = element(r32, Poly(3, {1, 2, 2}));
  CHECK(inverse(g) == g);
  CHECK(element_mul(g, g).rep.is_one());
  CHECK_THROWS_AS(inverse(element(r32, Poly::x(3))), NotAUnit);
  CHECK(classify_element(element(r32, Poly(3))) == ElementKind::Zero);
  CHECK(classify_element(element(r32, Poly(3, {1, 0, 2}))) == ElementKind::ZeroDivisor);
}

TEST_CASE("ideal arithmetic examples", "[quotient_ring]") {
  auto r32 = make_ring(3, 2);
  CHECK(ideals(r32).size() == 8u);
  auto ix = ideal_from_generator(r32, Poly::x(3));
  auto iq = ideal_from_generator(r32, Poly(3, {-1, 0, 1}));
  CHECK(ideal_op(ix, iq, IdealOp::Sum).is_whole_ring());
  CHECK(ideal_op(zero_ideal(r32), iq, IdealOp::Quotient) == ix);
  CHECK(annihilator(iq) == ix);
  CHECK(annihilator(whole_ring(r32)).is_zero_ideal());

  auto sq = make_general(3, Poly(3, {0, 0, 1}));
  auto jx = ideal_from_generator(sq, Poly::x(3));
  CHECK(ideal_op(jx, jx, IdealOp::Product).is_zero_ideal());

  auto r52 = make_ring(5, 2);
  CHECK(annihilator(ideal_from_generator(r52, Poly::x(5))).generator() == Poly(5, {4, 5, 1}));

  CHECK_THROWS_AS(ideal_from_generator(r32, Poly(3, {1, 0, 1})), NotInIdeal);
  CHECK(ideal_from_generator(r32, Poly(3, {0, -2})) == ix);
}

TEST_CASE("minimal ideals and cofactors", "[quotient_ring]") {
  auto r32 = make_ring(3, 2);
  auto fc = element(r32, Poly(3, {1, 0, 2}));
  auto it = minimal_containing_ideal(fc);
  CHECK(it.generator() == Poly(3, {-1, 0, 1}));
  CHECK(cofactor(fc, it) == Poly::constant(3, 2));
  CHECK_THROWS_AS(minimal_containing_ideal(element(r32, Poly(3))), ZeroElement);
  CHECK_THROWS_AS(cofactor(fc, ideal_from_generator(r32, Poly::x(3))), NotInIdeal);

  auto r52 = make_ring(5, 2);
  auto fc5 = element(r52, Poly(5, {0, 2, 4}));
  CHECK(minimal_containing_ideal(fc5).generator() == Poly::x(5));
  CHECK(cofactor(fc5, minimal_containing_ideal(fc5)) == Poly(5, {2, 4}));

  auto r76 = make_ring(7, 6);
  const Poly h(7, {1, 0, 5, 2, 2});
  const Poly g(7, {0, 2, 1});
  auto fc7 = element(r76, mul(g, h));
  CHECK(minimal_containing_ideal(fc7).generator() == Poly(7, {0, 6, 5, 1}));
  CHECK(cofactor(fc7, ideal_from_generator(r76, g)) == h);
}

TEST_CASE("ideal lattices export as MV-algebras", "[quotient_ring]") {
  auto chain3 = to_algebra(make_general(2, Poly(2, {0, 0, 1})));
  CHECK(chain3.size() == 3u);
  CHECK(is_chain(chain3));
  CHECK(check_axioms(chain3).mv);

  auto boolean4 = to_algebra(make_general(2, Poly(2, {0, 1, 1})));
  CHECK(boolean4.size() == 4u);
  CHECK(check_axioms(boolean4).boolean);

  auto id8 = to_algebra(make_ring(3, 2));
  CHECK(id8.size() == 8u);
  CHECK(check_axioms(id8).mv);
  for (elem x = 0; x < id8.size(); ++x) CHECK(star(id8, star(id8, x)) == x);
  CHECK_FALSE(mv_translation_violation(id8).has_value());
}

TEST_CASE("ideal operations agree with element-set computations", "[quotient_ring][oracle]") {
  for (const auto& [p, f] : small_rings()) {
    INFO("p=" << p << " f=" << to_string(f));
    auto R = make_general(p, f);
    auto ring = oracle::zpx(p, ascending(f));
    REQUIRE(ring.size <= 125u);
    auto handles = ideals(R);
    auto sets = oracle::all_ideals(ring);
    std::size_t expected = 1;
    for (const auto& [g, e] : R.factorization().factors) expected *= e + 1;
    CHECK(handles.size() == expected);
    CHECK(handles.size() == sets.size());

    std::vector<oracle::Ideal> hs;
    for (const auto& I : handles) {
      hs.push_back(as_set(I, ring.size));
      CHECK(std::find(sets.begin(), sets.end(), hs.back()) != sets.end());
      CHECK(annihilator(annihilator(I)) == I);
      CHECK(annihilator(I) == ideal_op(zero_ideal(R), I, IdealOp::Quotient));
    }
    for (std::size_t i = 0; i < handles.size(); ++i) {
      for (std::size_t j = 0; j < handles.size(); ++j) {
        const auto &I = handles[i], &J = handles[j];
        CHECK(as_set(ideal_op(I, J, IdealOp::Sum), ring.size) == oracle::ideal_sum(ring, hs[i], hs[j]));
        CHECK(as_set(ideal_op(I, J, IdealOp::Product), ring.size) == oracle::ideal_product(ring, hs[i], hs[j]));
        CHECK(as_set(ideal_op(I, J, IdealOp::Intersect), ring.size) == oracle::ideal_intersect(hs[i], hs[j]));
        CHECK(as_set(ideal_op(I, J, IdealOp::Quotient), ring.size) == oracle::ideal_quotient(ring, hs[i], hs[j]));
        CHECK(I.contains(J) == oracle::subset(hs[j], hs[i]));
      }
    }
    for (std::size_t a = 1; a < ring.size; ++a) {
      auto el = element(R, decode(p, a, R.degree()));
      CHECK(as_set(minimal_containing_ideal(el), ring.size) == oracle::closure(ring, {a}));
    }

    auto L = to_algebra(R);
    CHECK(check_axioms(L).mv);
    CHECK(isomorphic(L, oracle::ideal_algebra(ring)));
  }
}
