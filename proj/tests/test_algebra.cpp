#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hypertoric/algebra.hpp"
#include "hypertoric/modules.hpp"
#include "hypertoric/parse.hpp"

using namespace hypertoric;

namespace {

GTPoly random_gt_poly(std::mt19937_64& rng, int n, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> var(0, n);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  GTPoly p(n);
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    GTPoly term = GTPoly::constant(n, make_rational(coeff(rng)));
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) {
      const int v = var(rng);
      term = term * (v == 0 ? GTPoly::hbar(n) : GTPoly::x(n, v));
    }
    p += term;
  }
  return p;
}

AlgebraElement random_monomial_element(std::mt19937_64& rng, const DatumPtr& datum, Int box) {
  std::uniform_int_distribution<Int> l(-box, box);
  IntVec lambda(static_cast<std::size_t>(datum->k()));
  for (auto& v : lambda) v = l(rng);
  GTPoly p = random_gt_poly(rng, datum->n(), 2, 2);
  if (p.is_zero()) p = GTPoly::constant(datum->n(), 1);
  return AlgebraElement::monomial(datum, lambda, p);
}

const DatumPtr kSqed1 = make_datum(1, 1, {{1}});
const DatumPtr kCharges = make_datum(2, 1, {{1}, {-1}});
const DatumPtr kRank2 = make_datum(3, 2, {{1, 0}, {0, 1}, {1, 1}});

}  // namespace

TEST_CASE("monopole constructors and the identity") {
  auto r0 = monopole(kCharges, {0});
  CHECK(r0 == identity(kCharges));
  auto r1 = monopole(kSqed1, {1});
  CHECK(r1.terms().size() == 1);
  auto r2m1 = monopole(kRank2, {2, -1});
  CHECK(r2m1.terms().count(IntVec{2, -1}) == 1);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    auto a = random_monomial_element(rng, kRank2, 3);
    CHECK(multiply(identity(kRank2), a) == a);
    CHECK(multiply(a, identity(kRank2)) == a);
  }
}

TEST_CASE("SQED-1 Weyl-type products") {
  auto x = AlgebraElement::gt(kSqed1, GTPoly::x(1, 1));
  auto h_half = GTPoly::hbar(1) * make_rational(1, 2);
  auto r1 = monopole(kSqed1, {1});
  auto rm1 = monopole(kSqed1, {-1});

  CHECK(multiply(r1, rm1) == AlgebraElement::gt(kSqed1, GTPoly::x(1, 1) - h_half));
  CHECK(multiply(rm1, r1) == AlgebraElement::gt(kSqed1, GTPoly::x(1, 1) + h_half));
  CHECK(commutator(r1, rm1) == AlgebraElement::gt(kSqed1, -GTPoly::hbar(1)));

  // r^2 r^-1 = (x - 3h/2) r^1: the right bracket factor commuted leftward.
  auto expected = AlgebraElement::monomial(
      kSqed1, {1}, GTPoly::x(1, 1) - GTPoly::hbar(1) * make_rational(3, 2));
  CHECK(multiply(monopole(kSqed1, {2}), rm1) == expected);

  CHECK(commutator(x, r1) == multiply(AlgebraElement::gt(kSqed1, GTPoly::hbar(1)), r1));
  CHECK_THROWS_AS(multiply(r1, monopole(kCharges, {1})), std::invalid_argument);
}

TEST_CASE("Hamiltonian relation on three datums") {
  for (const auto& datum : {kSqed1, kCharges, kRank2}) {
    const int k = datum->k();
    IntVec lambda(static_cast<std::size_t>(k), -3);
    while (true) {
      auto r = monopole(datum, lambda);
      for (int i = 1; i <= datum->n(); ++i) {
        auto xi = AlgebraElement::gt(datum, GTPoly::x(datum->n(), i));
        auto lhs = commutator(xi, r);
        auto rhs = multiply(
            AlgebraElement::gt(datum,
                               GTPoly::hbar(datum->n()) *
                                   make_rational(datum->restrict_weight(i, lambda))),
            r);
        REQUIRE(lhs == rhs);
      }
      int pos = k - 1;
      while (pos >= 0 && lambda[static_cast<std::size_t>(pos)] == 3) {
        lambda[static_cast<std::size_t>(pos)] = -3;
        --pos;
      }
      if (pos < 0) break;
      ++lambda[static_cast<std::size_t>(pos)];
    }
  }
}

TEST_CASE("commutator examples") {
  CHECK(commutator(AlgebraElement::gt(kSqed1, GTPoly::x(1, 1)), monopole(kSqed1, {3})) ==
        multiply(AlgebraElement::gt(kSqed1, GTPoly::hbar(1) * make_rational(3)),
                 monopole(kSqed1, {3})));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    auto p = AlgebraElement::gt(kRank2, random_gt_poly(rng, 3, 2, 3));
    auto q = AlgebraElement::gt(kRank2, random_gt_poly(rng, 3, 2, 3));
    CHECK(commutator(p, q).is_zero());
  }
}

TEST_CASE("associativity on random monomial triples") {
  std::mt19937_64 rng(20260810);
  for (const auto& datum : {kSqed1, kCharges, kRank2}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto a = random_monomial_element(rng, datum, 3);
      auto b = random_monomial_element(rng, datum, 3);
      auto c = random_monomial_element(rng, datum, 3);
      REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
  }
}

TEST_CASE("multiply agrees with the faithful module") {
  // S = {1..n} has free support; composing actions must match the product.
  std::mt19937_64 rng(31337);
  for (const auto& datum : {kSqed1, kCharges, kRank2}) {
    std::set<int> full;
    for (int i = 1; i <= datum->n(); ++i) full.insert(i);
    ModuleSignature sig(datum, std::vector<int>(static_cast<std::size_t>(datum->n()), -1), full,
                        IntVec(static_cast<std::size_t>(datum->n()), 0));
    std::uniform_int_distribution<Int> s(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_monomial_element(rng, datum, 2);
      auto b = random_monomial_element(rng, datum, 2);
      IntVec sigma(static_cast<std::size_t>(datum->k()));
      for (auto& v : sigma) v = s(rng);
      auto vec = basis_vector(sig, sigma);
      REQUIRE(act(multiply(a, b), vec) == act(a, act(b, vec)));
    }
  }
}

TEST_CASE("fourier transform") {
  // All-minus is the identity.
  std::mt19937_64 rng(2024);
  std::vector<int> all_minus{-1, -1, -1};
  for (int t = 0; t < 20; ++t) {
    auto a = random_monomial_element(rng, kRank2, 3);
    CHECK(fourier_transform(a, all_minus) == a);
  }

  // Flipping the single coordinate of SQED-1.
  auto x = AlgebraElement::gt(kSqed1, GTPoly::x(1, 1));
  auto fx = fourier_transform(x, {1});
  CHECK(fx == AlgebraElement::gt(kSqed1, -GTPoly::x(1, 1)));
  CHECK(fourier_transform(monopole(kSqed1, {1}), {1}) == monopole(kSqed1, {1}));
  CHECK(fourier_transform(monopole(kSqed1, {-1}), {1}) ==
        monopole(kSqed1, {-1}) * Rational(-1));

  // Involution over random sign vectors; read inside the flipped presentation
  // the transform is an algebra homomorphism.
  std::uniform_int_distribution<int> pm(0, 1);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> alpha(3);
    for (auto& v : alpha) v = pm(rng) ? 1 : -1;
    auto a = random_monomial_element(rng, kRank2, 3);
    auto b = random_monomial_element(rng, kRank2, 3);
    REQUIRE(fourier_transform(fourier_transform(a, alpha), alpha) == a);
    DatumPtr flipped = flipped_datum(*kRank2, alpha);
    auto fa = transport(fourier_transform(a, alpha), flipped);
    auto fb = transport(fourier_transform(b, alpha), flipped);
    REQUIRE(multiply(fa, fb) ==
            transport(fourier_transform(multiply(a, b), alpha), flipped));
  }
}

TEST_CASE("chi filtration") {
  auto a = monopole(kSqed1, {1}) + monopole(kSqed1, {-1});
  auto parts = chi_degree(a, {1});
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(1) == monopole(kSqed1, {1}));
  CHECK(parts.at(-1) == monopole(kSqed1, {-1}));

  auto gt = AlgebraElement::gt(kSqed1, GTPoly::x(1, 1) + GTPoly::hbar(1));
  auto gparts = chi_degree(gt, {1});
  REQUIRE(gparts.size() == 1);
  CHECK(gparts.count(0) == 1);

  // Multiplicativity of the grading.
  std::mt19937_64 rng(55);
  for (int t = 0; t < 15; ++t) {
    auto u = random_monomial_element(rng, kCharges, 3);
    auto v = random_monomial_element(rng, kCharges, 3);
    auto du = chi_degree(u, {2});
    auto dv = chi_degree(v, {2});
    auto dp = chi_degree(multiply(u, v), {2});
    std::map<Int, AlgebraElement> expected;
    for (const auto& [m1, c1] : du)
      for (const auto& [m2, c2] : dv) {
        auto prod = multiply(c1, c2);
        if (prod.is_zero()) continue;
        auto it = expected.find(m1 + m2);
        if (it == expected.end())
          expected.emplace(m1 + m2, prod);
        else
          it->second += prod;
      }
    for (auto it = expected.begin(); it != expected.end();)
      it = it->second.is_zero() ? expected.erase(it) : std::next(it);
    REQUIRE(dp == expected);
  }
}

TEST_CASE("central specialization") {
  // SQED-1: the centre is trivial, so only h can move.
  auto weyl = multiply(monopole(kSqed1, {1}), monopole(kSqed1, {-1}));
  Specialization keep_h{{}, std::nullopt};
  CHECK(specialize(weyl, keep_h, {}) == weyl);

  Specialization classical{{}, Rational(0)};
  auto comm = commutator(monopole(kSqed1, {1}), monopole(kSqed1, {-1}));
  CHECK(specialize(comm, classical, {}).is_zero());

  // Charges (1,-1): x1 + x2 is central; substituting it by c leaves a
  // polynomial in x1 and h only.
  auto prod = multiply(monopole(kCharges, {1}), monopole(kCharges, {-1}));
  Specialization at_c{{Rational(5)}, std::nullopt};
  auto specialized = specialize(prod, at_c, {2});
  const GTPoly& coeff = specialized.terms().at(IntVec{0});
  CHECK(!coeff.uses_var(2));
  GTPoly x1 = GTPoly::x(2, 1);
  GTPoly h = GTPoly::hbar(2);
  GTPoly expected = (x1 - h * make_rational(1, 2)) *
                    (GTPoly::constant(2, 5) - x1 + h * make_rational(1, 2));
  CHECK(coeff == expected);

  CHECK_THROWS_AS(specialize(prod, at_c, std::set<int>{}), std::invalid_argument);
  Specialization wrong_len{{Rational(1), Rational(2)}, std::nullopt};
  CHECK_THROWS_AS(specialize(prod, wrong_len, {2}), std::invalid_argument);
}

TEST_CASE("element strings round-trip") {
  CHECK(commutator(monopole(kSqed1, {1}), monopole(kSqed1, {-1})).to_string() ==
        "-1 * h * r[0]");
  std::mt19937_64 rng(808);
  for (int t = 0; t < 40; ++t) {
    auto a = random_monomial_element(rng, kRank2, 3);
    auto b = random_monomial_element(rng, kRank2, 3);
    auto e = multiply(a, b) + a;
    CHECK(parse_element(kRank2, e.to_string()) == e);
  }
  CHECK(parse_element(kSqed1, "r[1] * r[-1]").to_string() == "(1 * x1 - 1/2 * h) * r[0]");
  CHECK(parse_element(kSqed1, "0").is_zero());
  CHECK_THROWS_AS(parse_element(kSqed1, "r[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(kSqed1, "y1"), std::invalid_argument);
}
