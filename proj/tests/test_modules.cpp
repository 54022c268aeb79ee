#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hypertoric/modules.hpp"

using namespace hypertoric;

namespace {

const DatumPtr kSqed1 = make_datum(1, 1, {{1}});
const DatumPtr kCharges = make_datum(2, 1, {{1}, {-1}});
const DatumPtr kRank2 = make_datum(3, 2, {{1, 0}, {0, 1}, {1, 1}});

GTPoly random_gt_poly(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> var(0, n);
  std::uniform_int_distribution<int> deg(0, 2);
  GTPoly p(n);
  for (int i = 0; i < 2; ++i) {
    GTPoly term = GTPoly::constant(n, make_rational(coeff(rng)));
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) {
      const int v = var(rng);
      term = term * (v == 0 ? GTPoly::hbar(n) : GTPoly::x(n, v));
    }
    p += term;
  }
  if (p.is_zero()) p = GTPoly::constant(n, 1);
  return p;
}

AlgebraElement random_monomial_element(std::mt19937_64& rng, const DatumPtr& datum, Int box) {
  std::uniform_int_distribution<Int> l(-box, box);
  IntVec lambda(static_cast<std::size_t>(datum->k()));
  for (auto& v : lambda) v = l(rng);
  return AlgebraElement::monomial(datum, lambda, random_gt_poly(rng, datum->n()));
}

ModuleSignature random_signature(std::mt19937_64& rng, const DatumPtr& datum) {
  std::uniform_int_distribution<int> pm(0, 1);
  std::uniform_int_distribution<Int> mu_dist(-2, 2);
  std::vector<int> alpha(static_cast<std::size_t>(datum->n()));
  for (auto& a : alpha) a = pm(rng) ? 1 : -1;
  std::set<int> s;
  for (int i = 1; i <= datum->n(); ++i)
    if (pm(rng)) s.insert(i);
  IntVec mu(static_cast<std::size_t>(datum->n()));
  for (auto& m : mu) m = mu_dist(rng);
  return ModuleSignature(datum, alpha, s, mu, pm(rng) ? Flavor::Big : Flavor::Small);
}

}  // namespace

TEST_CASE("basis vectors respect the support") {
  ModuleSignature sig(kSqed1, {-1}, {}, {0});
  CHECK(!basis_vector(sig, {-2}).is_zero());
  CHECK(basis_vector(sig, {1}).is_zero());

  ModuleSignature free_sig(kSqed1, {-1}, {1}, {0});
  CHECK(!basis_vector(free_sig, {7}).is_zero());
}

TEST_CASE("monopole action on the half-line module") {
  ModuleSignature sig(kSqed1, {-1}, {}, {0});
  const GTPoly h = GTPoly::hbar(1);

  auto v = act(monopole(kSqed1, {1}), basis_vector(sig, {-1}));
  ModuleVector expected(sig);
  expected.add({0}, -h);
  CHECK(v == expected);

  CHECK(act(monopole(kSqed1, {-1}), basis_vector(sig, {0})) == basis_vector(sig, {-1}));
  CHECK(act(monopole(kSqed1, {1}), basis_vector(sig, {0})).is_zero());
}

TEST_CASE("gelfand-tsetlin eigenvalues") {
  const GTPoly h = GTPoly::hbar(1);
  ModuleSignature sig(kSqed1, {-1}, {}, {0});
  CHECK(gt_eigenvalue(sig, {0}, 1) == h * make_rational(-1, 2));

  ModuleSignature with_s(kSqed1, {-1}, {1}, {0});
  CHECK(gt_eigenvalue(with_s, {0}, 1) == GTPoly::y(1, 1) - h * make_rational(1, 2));

  ModuleSignature plus(kSqed1, {1}, {}, {3});
  CHECK(gt_eigenvalue(plus, {3}, 1) == h * make_rational(1, 2));
  CHECK_THROWS_AS(gt_eigenvalue(plus, {2}, 1), std::invalid_argument);

  ModuleSignature big(kCharges, {-1, -1}, {2}, {0, 0}, Flavor::Big);
  CHECK(gt_eigenvalue(big, {0}, 2) == GTPoly::x(2, 2));
}

TEST_CASE("category O detection") {
  ModuleSignature ray(kSqed1, {-1}, {}, {0});
  CHECK(is_category_O(ray, {1}));
  CHECK(!is_category_O(ray, {-1}));

  ModuleSignature neumann(kCharges, {-1, -1}, {1, 2}, {0, 0});
  CHECK(!is_category_O(neumann, {1}));
  CHECK(is_category_O(neumann, {0}));
}

TEST_CASE("classification of boundary types") {
  ModuleSignature coverma(kCharges, {-1, -1}, {2}, {0, 0});
  auto res = classify(coverma, {1});
  CHECK(res.label == BoundaryLabel::ExceptionalDirichlet);
  CHECK(res.in_category_o);
  CHECK(res.verma_status == VermaStatus::CoVerma);
  REQUIRE(res.sigma_max.has_value());
  CHECK(*res.sigma_max == IntVec{0});

  // The mirror subset is not bounded above for the same chi.
  ModuleSignature other(kCharges, {-1, -1}, {1}, {0, 0});
  auto res2 = classify(other, {1});
  CHECK(res2.label == BoundaryLabel::ExceptionalDirichlet);
  CHECK(!res2.in_category_o);
  CHECK(res2.verma_status == VermaStatus::NotApplicable);
  auto res2b = classify(other, {-1});
  CHECK(res2b.in_category_o);
  CHECK(res2b.verma_status == VermaStatus::CoVerma);

  // Shifting mu and mixing alpha produces a genuine Verma.
  ModuleSignature verma(kCharges, {-1, 1}, {2}, {0, 3});
  auto res3 = classify(verma, {1});
  CHECK(res3.label == BoundaryLabel::ExceptionalDirichlet);
  CHECK(res3.in_category_o);
  CHECK(res3.verma_status == VermaStatus::Verma);

  ModuleSignature generic(kSqed1, {-1}, {}, {0});
  CHECK(classify(generic, {1}).label == BoundaryLabel::GenericDirichlet);

  ModuleSignature neumann(kRank2, {-1, -1, -1}, {1, 2, 3}, {0, 0, 0});
  CHECK(classify(neumann, {1, 0}).label == BoundaryLabel::Neumann);

  // n=4, k=1, S of the wrong size: Other.
  auto d4 = make_datum(4, 1, {{1}, {-1}, {1}, {0}});
  ModuleSignature odd(d4, {-1, -1, -1, -1}, {3, 4}, {0, 0, 0, 0});
  CHECK(classify(odd, {1}).label == BoundaryLabel::Other);
}

TEST_CASE("highest weight tables") {
  const GTPoly h1 = GTPoly::hbar(1);
  ModuleSignature generic(kSqed1, {-1}, {}, {0});
  auto table = highest_weight_table(generic, {1});
  REQUIRE(table.size() == 1);
  CHECK(table[0].first == 1);
  CHECK(table[0].second == h1 * make_rational(-1, 2));

  const GTPoly h2 = GTPoly::hbar(2);
  ModuleSignature coverma(kCharges, {-1, -1}, {2}, {0, 0});
  auto table2 = highest_weight_table(coverma, {1});
  REQUIRE(table2.size() == 2);
  CHECK(table2[0].second == h2 * make_rational(-1, 2));
  CHECK(table2[1].second == GTPoly::y(2, 2) - h2 * make_rational(1, 2));
  // Rows agree with gt_eigenvalue at sigma_max.
  auto apex = sigma_max(coverma);
  CHECK(table2[0].second == gt_eigenvalue(coverma, apex, 1));
  CHECK(table2[1].second == gt_eigenvalue(coverma, apex, 2));

  ModuleSignature shifted(kCharges, {-1, -1}, {2}, {3, 0});
  auto table3 = highest_weight_table(shifted, {1});
  CHECK(sigma_max(shifted) == IntVec{3});
  CHECK(table3[0].second == h2 * make_rational(-1, 2));

  ModuleSignature unbounded(kCharges, {-1, -1}, {1}, {0, 0});
  CHECK_THROWS_AS(highest_weight_table(unbounded, {1}), std::invalid_argument);
}

TEST_CASE("module law act(ab, v) = act(a, act(b, v))") {
  std::mt19937_64 rng(612);
  std::uniform_int_distribution<Int> s(-3, 3);
  for (const auto& datum : {kSqed1, kCharges, kRank2}) {
    for (int trial = 0; trial < 40; ++trial) {
      ModuleSignature sig = random_signature(rng, datum);
      auto a = random_monomial_element(rng, datum, 2);
      auto b = random_monomial_element(rng, datum, 2);
      IntVec sigma(static_cast<std::size_t>(datum->k()));
      for (auto& v : sigma) v = s(rng);
      auto vec = basis_vector(sig, sigma);
      if (vec.is_zero()) continue;
      REQUIRE(act(multiply(a, b), vec) == act(a, act(b, vec)));
    }
  }
}

TEST_CASE("weight compatibility of the action") {
  std::mt19937_64 rng(613);
  ModuleSignature sig(kRank2, {-1, 1, -1}, {2}, {0, 1, 0});
  std::uniform_int_distribution<Int> s(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    IntVec sigma{s(rng), s(rng)};
    IntVec lambda{s(rng), s(rng)};
    auto v = basis_vector(sig, sigma);
    if (v.is_zero()) continue;
    auto out = act(monopole(kRank2, lambda), v);
    for (const auto& [key, coeff] : out.entries()) {
      CHECK(key == IntVec{sigma[0] + lambda[0], sigma[1] + lambda[1]});
    }
  }
}

TEST_CASE("boundary consistency: dropped targets have vanishing coefficients") {
  std::mt19937_64 rng(614);
  for (const auto& datum : {kSqed1, kCharges, kRank2}) {
    const int k = datum->k();
    const int n = datum->n();
    for (int trial = 0; trial < 25; ++trial) {
      ModuleSignature sig = random_signature(rng, datum);
      auto poly = support_polytope(sig);
      for (const auto& sigma : enumerate_support(poly, 4)) {
        IntVec lambda(static_cast<std::size_t>(k), -1);
        while (true) {
          bool nonzero_lambda = false;
          for (Int v : lambda) nonzero_lambda |= (v != 0);
          if (nonzero_lambda) {
            const IntVec key = weight_key(sig, sigma);
            const IntVec target_key = detail::shifted_key(sig, key, lambda);
            if (!key_in_support(sig, target_key)) {
              GTPoly factor = GTPoly::constant(n, 1);
              for (int i = 1; i <= n; ++i) {
                const Int li = datum->restrict_weight(i, lambda);
                if (sig.alpha[static_cast<std::size_t>(i - 1)] * li < 0)
                  factor = factor * bracket(n, i, li);
              }
              const GTPoly coeff = detail::eval_at_restricted(
                  factor, sig, detail::target_restriction(sig, key, lambda));
              REQUIRE(coeff.is_zero());
            }
          }
          int pos = k - 1;
          while (pos >= 0 && lambda[static_cast<std::size_t>(pos)] == 1) {
            lambda[static_cast<std::size_t>(pos)] = -1;
            --pos;
          }
          if (pos < 0) break;
          ++lambda[static_cast<std::size_t>(pos)];
        }
      }
    }
  }
}

TEST_CASE("gt commutation on modules") {
  std::mt19937_64 rng(615);
  std::uniform_int_distribution<Int> s(-2, 2);
  for (const auto& datum : {kCharges, kRank2}) {
    for (int trial = 0; trial < 20; ++trial) {
      ModuleSignature sig = random_signature(rng, datum);
      IntVec sigma(static_cast<std::size_t>(datum->k()));
      for (auto& v : sigma) v = s(rng);
      auto vec = basis_vector(sig, sigma);
      if (vec.is_zero()) continue;
      IntVec lambda(static_cast<std::size_t>(datum->k()));
      for (auto& v : lambda) v = s(rng);
      auto r = monopole(datum, lambda);
      for (int i = 1; i <= datum->n(); ++i) {
        auto xi = AlgebraElement::gt(datum, GTPoly::x(datum->n(), i));
        auto lhs = commutator(xi, r);
        auto scaled = multiply(
            AlgebraElement::gt(datum, GTPoly::hbar(datum->n()) *
                                          make_rational(datum->restrict_weight(i, lambda))),
            r);
        REQUIRE(act(lhs - scaled, vec).is_zero());
      }
    }
  }
}

TEST_CASE("character series") {
  ModuleSignature ray(kSqed1, {-1}, {}, {0});
  auto series = character_series(ray, {1}, 3);
  REQUIRE(series.size() == 4);
  for (Int d = 0; d <= 3; ++d) {
    CHECK(series[static_cast<std::size_t>(d)].first == d);
    CHECK(series[static_cast<std::size_t>(d)].second == 1);
  }

  ModuleSignature point(kCharges, {-1, -1}, {}, {0, 0});
  auto pseries = character_series(point, {1}, 2);
  CHECK(pseries == std::vector<std::pair<Int, Int>>{{0, 1}, {1, 0}, {2, 0}});

  CHECK_THROWS_AS(character_series(ray, {-1}, 2), std::domain_error);

  // Bounded above but with an infinite weight space: rejected.
  auto square = make_datum(2, 2, {{1, 0}, {0, 1}});
  ModuleSignature slab(square, {1, 1}, {2}, {0, 0});
  CHECK_THROWS_AS(character_series(slab, {-1, 0}, 2), std::domain_error);

  // Empty support: the zero module has an all-zero series.
  auto parallel = make_datum(2, 1, {{1}, {1}});
  ModuleSignature empty_sig(parallel, {1, -1}, {}, {1, 0});
  auto zseries = character_series(empty_sig, {-1}, 2);
  CHECK(zseries == std::vector<std::pair<Int, Int>>{{0, 0}, {1, 0}, {2, 0}});

  // Cross-check against direct enumeration on a cone.
  ModuleSignature cone(kRank2, {-1, -1, -1}, {3}, {0, 0, 0});
  auto cseries = character_series(cone, {1, 1}, 5);
  std::map<Int, Int> direct;
  for (const auto& p : enumerate_support(support_polytope(cone), 8)) {
    const Int d = -(p[0] + p[1]);
    ++direct[d];
  }
  for (const auto& [d, count] : cseries) CHECK(count == direct[d]);
}

TEST_CASE("verma apex generates under negative monopoles") {
  ModuleSignature verma(kCharges, {-1, 1}, {2}, {0, 3});
  REQUIRE(classify(verma, {1}).verma_status == VermaStatus::Verma);
  auto v = basis_vector(verma, sigma_max(verma));
  for (int step = 0; step < 5; ++step) {
    v = act(monopole(kCharges, {-1}), v);
    REQUIRE(!v.is_zero());
  }
}

TEST_CASE("simplicity probe") {
  ModuleSignature ray(kSqed1, {-1}, {}, {0});
  CHECK(simplicity_probe(ray, 3));

  ModuleSignature coverma(kCharges, {-1, -1}, {2}, {0, 0});
  CHECK(!simplicity_probe(coverma, 3));

  ModuleSignature point(kCharges, {-1, -1}, {}, {0, 0});
  CHECK(simplicity_probe(point, 5));
}

TEST_CASE("hikita fixed point dictionary") {
  auto rows = hikita_fixed_point_table(kSqed1, {-1}, {0}, {1});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].s.empty());
  REQUIRE(rows[0].table.size() == 1);
  CHECK(rows[0].table[0].second == GTPoly::hbar(1) * make_rational(-1, 2));

  auto rows2 = hikita_fixed_point_table(kCharges, {-1, -1}, {0, 0}, {1});
  REQUIRE(rows2.size() == 1);
  CHECK(rows2[0].s == std::set<int>{2});

  // No exceptional subset bounded above: empty table.
  auto square = make_datum(2, 2, {{1, 0}, {0, 1}});
  auto rows3 = hikita_fixed_point_table(square, {-1, -1}, {0, 0}, {1, -1});
  CHECK(rows3.empty());
}
