#include "doctest.h"
#include "linkage_kit/error.hpp"
#include "linkage_kit/parabolic.hpp"
#include "test_support.hpp"

using namespace linkage_kit;
using namespace linkage_kit::testing;

TEST_CASE("Lambda_p^+ membership") {
  const auto a2 = context("A_2", 1);
  const auto& rs = a2.base();
  Gen gen(31);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(in_lambda_p_plus(a2, gen.weight(a2), ParabolicSubset::borel(rs)));

  const ParabolicSubset p1(rs, {0});
  CHECK(in_lambda_p_plus(a2, weight({{0, 0}}), p1));
  CHECK_FALSE(in_lambda_p_plus(a2, weight({{-1, 0}}), p1));
  CHECK(in_lambda_p_plus(a2, weight({{-1, 0}}), ParabolicSubset(rs, {1})));
  CHECK_FALSE(in_lambda_p_plus(a2, WeightL{{{Rational(1, 2), 0}}}, p1));

  // every embedding must pass
  const auto two = context("A_2", 2);
  CHECK_FALSE(in_lambda_p_plus(two, weight({{0, 0}, {-2, 5}}), ParabolicSubset(two.base(), {0})));
  CHECK(in_lambda_p_plus(two, weight({{0, 0}, {3, -5}}), ParabolicSubset(two.base(), {0})));
}

TEST_CASE("parabolic indices are validated") {
  const auto rs = named("A_2");
  CHECK_THROWS_AS(ParabolicSubset(*rs, {2}), Error);
  const auto other = named("A_3");
  CHECK_THROWS_AS(in_lambda_p_plus(context("A_2", 1), weight({{0, 0}}), ParabolicSubset(*other, {0})), Error);
}

TEST_CASE("equal_on_center examples") {
  const auto a2 = context("A_2", 1);
  const ParabolicSubset p(a2.base(), {0});
  CHECK(equal_on_center(a2, weight({{3, 4}}), weight({{3, 4}}), p));
  CHECK(equal_on_center(a2, weight({{2, -1}}), weight({{0, 0}}), p));
  CHECK_FALSE(equal_on_center(a2, weight({{-1, 2}}), weight({{0, 0}}), p));
  CHECK(equal_on_center(a2, WeightL{{{Rational(1, 3), Rational(-1, 6)}}}, weight({{0, 0}}), p));
}

TEST_CASE("central blocks must agree") {
  const auto ctx = context("A_1xT_1", 1);
  const auto full = ParabolicSubset::full(ctx.base());
  CHECK(equal_on_center(ctx, weight({{4, 1}}), weight({{-2, 1}}), full));
  CHECK_FALSE(equal_on_center(ctx, weight({{4, 1}}), weight({{4, 2}}), full));
}

TEST_CASE("full parabolic and Borel extremes") {
  Gen gen(32);
  for (const auto* type : {"A_2", "B_2", "A_3", "G_2"}) {
    const auto ctx = context(type, 2);
    const auto& rs = ctx.base();
    const auto full = ParabolicSubset::full(rs);
    const auto borel = ParabolicSubset::borel(rs);
    for (int trial = 0; trial < 100; ++trial) {
      const auto lambda = gen.weight(ctx);
      WeightL mu = lambda;
      for (auto& component : mu.components) {
        for (std::size_t k = 0; k < rs.rank(); ++k) {
          const Rational c = gen.rational();
          for (std::size_t i = 0; i < rs.dim(); ++i) component[i] += c * rs.root_weight(k)[i];
        }
      }
      CHECK(equal_on_center(ctx, lambda, mu, full));
      CHECK(equal_on_center(ctx, lambda, mu, borel) == (lambda == mu));
      const auto other = gen.weight(ctx);
      CHECK(equal_on_center(ctx, lambda, other, borel) == (lambda == other));
    }
  }
}

TEST_CASE("central_class_key examples") {
  const auto a2 = context("A_2", 1);
  const ParabolicSubset p(a2.base(), {0});
  const auto k0 = central_class_key(a2, character(weight({{0, 0}}), "theta"), p, "pi");
  CHECK(k0 == central_class_key(a2, character(weight({{2, -1}}), "theta"), p, "pi"));
  CHECK(k0 == central_class_key(a2, character(weight({{4, -2}}), "theta"), p, "pi"));
  CHECK_FALSE(k0 == central_class_key(a2, character(weight({{0, 0}}), "theta'"), p, "pi"));
  CHECK_FALSE(k0 == central_class_key(a2, character(weight({{0, 0}}), "theta"), p, "pi2"));
  CHECK_FALSE(k0 == central_class_key(a2, character(weight({{-1, 2}}), "theta"), p, "pi"));
  // the representative has zero pivot coordinates
  const auto k = central_class_key(a2, character(weight({{5, 3}}), "theta"), p, "pi");
  CHECK(k.reduced[0][0] == 0);
  CHECK(k.reduced[0][1] == Rational(11, 2));
  CHECK(k.to_string() == "theta|pi|(0,11/2)");
}

TEST_CASE("equal_on_center is an equivalence and keys classify it") {
  Gen gen(33);
  for (const auto* type : {"A_2", "A_3", "B_2"}) {
    const auto ctx = context(type, 2);
    const auto& rs = ctx.base();
    for (const std::set<std::size_t>& indices : {std::set<std::size_t>{}, std::set<std::size_t>{0},
                                                 std::set<std::size_t>{1}, std::set<std::size_t>{0, 1}}) {
      const ParabolicSubset p(rs, indices);
      for (int trial = 0; trial < 100; ++trial) {
        // small perturbations of one base weight so that classes actually collide
        const auto base = gen.weight(ctx, true);
        std::vector<WeightL> sample;
        for (int j = 0; j < 3; ++j) {
          WeightL w = base;
          for (auto& component : w.components) {
            const auto k = static_cast<std::size_t>(gen.integer(0, static_cast<long>(rs.rank()) - 1));
            const long c = gen.integer(-2, 2);
            for (std::size_t i = 0; i < rs.dim(); ++i) component[i] += c * rs.root_weight(k)[i];
          }
          sample.push_back(std::move(w));
        }
        const auto& [a, b, c] = std::tie(sample[0], sample[1], sample[2]);
        CHECK(equal_on_center(ctx, a, a, p));
        CHECK(equal_on_center(ctx, a, b, p) == equal_on_center(ctx, b, a, p));
        if (equal_on_center(ctx, a, b, p) && equal_on_center(ctx, b, c, p)) CHECK(equal_on_center(ctx, a, c, p));
        for (const auto& x : sample) {
          for (const auto& y : sample) {
            const auto kx = central_class_key(ctx, character(x), p, "pi");
            const auto ky = central_class_key(ctx, character(y), p, "pi");
            CHECK((kx == ky) == equal_on_center(ctx, x, y, p));
          }
        }
      }
    }
  }
}
