#include <algorithm>

#include "doctest.h"
#include "pmd/counting.hpp"
#include "pmd/generation.hpp"

using namespace pmd;

TEST_CASE("reversing generators") {
  CHECK(r_hat(7, 2) == 2);
  CHECK(r_hat(7, 6) == 4);
  CHECK(r_hat(6, 6) == 3);
  CHECK(gamma(2, 5, 3) == PT(5, {{2, 2}, {3, 1}}));
  CHECK(gamma(3, 5, 3) == PT(5, {{3, 3}, {4, 2}, {5, 1}}));
  CHECK(delta(3, 5, 2) == PT(5, {{3, 3}, {4, 2}}));
  CHECK(lambda_map(4, 5, 2) == PT(5, {{4, 4}, {5, 3}}));
  CHECK(gamma_ks(2, 3, 5) == delta(3, 5, 2));

  try {
    delta(5, 7, 2);
    CHECK(true);
    delta(6, 7, 2);
    FAIL("expected a range error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("[3, 5]") != std::string::npos);
  }
  CHECK_THROWS_AS(gamma(4, 7, 3), std::invalid_argument);
  CHECK_THROWS_AS(lambda_map(7, 7, 3), std::invalid_argument);
  CHECK_THROWS_AS(gamma_ks(3, 2, 5), std::invalid_argument);
}

TEST_CASE("D has one generator fixing each interior point") {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::size_t r = 2; r <= n; ++r) {
      const auto d = build_D(n, r).elements;
      INFO("n=", n, " r=", r);
      REQUIRE(d.size() == n - 2);
      for (std::size_t s = 2; s < n; ++s) {
        CHECK(std::count_if(d.begin(), d.end(), [&](const PT& a) { return a.fixed_points() == PointList{s}; }) == 1);
      }
      for (const auto& a : d) {
        CHECK(is_order_reversing(a));
        CHECK(is_order_decreasing(a));
        CHECK(a.height() <= std::min(r, half_ceiling(n)));
      }
    }
  }
}

TEST_CASE("idempotent and injective generator blocks") {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (std::size_t r = 2; r < n; ++r) {
      const auto e = build_E_Jr(n, r).elements;
      CHECK(Count(e.size()) == c_table(n, r));
      const auto layer = enumerate_layer(LayerSpec{LayerKind::EJ, n, r, std::nullopt});
      CHECK(e == layer);

      const auto ef = build_Er_Fr(n, r).elements;
      CHECK(Count(ef.size()) == binomial(n, r) + r * binomial(n - 1, r));
      for (const auto& a : ef) {
        CHECK(is_injective(a));
        CHECK(is_order_preserving(a));
        CHECK(a.height() == r);
      }
    }
  }
  CHECK(delta_aY(3, {1}, 4) == PT(4, {{1, 1}, {3, 2}}));
  CHECK_THROWS_AS(delta_aY(3, {2}, 4), std::invalid_argument);
}

TEST_CASE("generating sets generate their families") {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t r = 2; r <= n; ++r) {
      INFO("n=", n, " r=", r);
      const auto pmd = closure(pmd_generating_set(n, r));
      CHECK(same_elements(pmd.elements(), enumerate(FamilySpec{Family::PMD, n, r})));
      const auto imd = closure(imd_generating_set(n, r));
      CHECK(same_elements(imd.elements(), enumerate(FamilySpec{Family::IMD, n, r})));
    }
  }
}

TEST_CASE("property: every reversing element factors through a generator") {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t r = 2; r <= n; ++r) {
      const auto pc = enumerate(FamilySpec{Family::PC, n, r});
      const auto d = build_D(n, r).elements;
      for (const auto& a : enumerate(FamilySpec{Family::PRD_STAR, n, std::nullopt})) {
        if (a.height() > r) continue;
        const auto f = factorize_reversing(a, n, r);
        INFO(format(a));
        CHECK(f.product() == a);
        CHECK(std::binary_search(pc.begin(), pc.end(), f.parts.front(),
                                 [](const PT& x, const PT& y) { return format(x) < format(y); }));
        CHECK(std::binary_search(pc.begin(), pc.end(), f.parts.back(),
                                 [](const PT& x, const PT& y) { return format(x) < format(y); }));
        const auto& reversing = f.parts[f.parts.size() - 2];
        CHECK(std::find(d.begin(), d.end(), reversing) != d.end());
      }
    }
  }
}

TEST_CASE("a generator factors trivially") {
  const auto g = gamma(3, 6, 3);
  const auto f = factorize_reversing(g, 6, 3);
  REQUIRE(f.parts.size() == 3);
  CHECK(f.parts[0] == identity_on(g.domain(), 6));
  CHECK(f.parts[1] == g);
  CHECK_THROWS_AS(factorize_reversing(PT(4, {{2, 2}, {3, 3}}), 4, 2), std::invalid_argument);
}

TEST_CASE("undecomposable elements") {
  const auto s = materialize(FamilySpec{Family::PMD, 4, 2});
  const auto flags = undecomposables(s);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(flags[i] == is_undecomposable(s, s[i]));
  for (const auto& e : build_E_Jr(4, 2).elements) CHECK(is_undecomposable(s, e));
  CHECK_FALSE(is_undecomposable(s, PT(4)));

  const auto classes = fix_classes(s);
  for (std::size_t x = 2; x < 4; ++x) {
    CHECK_FALSE(classes[x].empty());
    for (auto i : classes[x]) CHECK(s[i](x) == x);
  }
}

TEST_CASE("rank checks pass at small degrees") {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t r = 2; r <= n; ++r) {
      for (Family f : {Family::PMD, Family::IMD}) {
        const auto report = verify_rank(FamilySpec{f, n, r});
        INFO(report.to_text());
        CHECK(report.passed());
      }
    }
  }
  CHECK_THROWS_AS(verify_rank(FamilySpec{Family::PMD, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(verify_rank(FamilySpec{Family::PC, 4, 2}), std::invalid_argument);
}
