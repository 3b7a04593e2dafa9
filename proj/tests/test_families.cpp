#include <algorithm>
#include <set>

#include "doctest.h"
#include "pmd/counting.hpp"
#include "pmd/families.hpp"

using namespace pmd;

TEST_CASE("family names round-trip") {
  for (Family f : all_families()) {
    const auto parsed = parse_family(family_name(f));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == f);
  }
  CHECK(parse_family("PRD*") == Family::PRD_STAR);
  CHECK_FALSE(parse_family("XYZ").has_value());
  CHECK(FamilySpec{Family::PMD, 4, 2}.label() == "PMD(4,2)");
  CHECK(FamilySpec{Family::PMD, 4, std::nullopt}.label() == "PMD_4");
}

TEST_CASE("direct enumeration agrees with the brute-force filter") {
  for (Family f : all_families()) {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<std::optional<std::size_t>> bounds{std::nullopt};
      for (std::size_t r = 0; r <= n; ++r) bounds.push_back(r);
      for (const auto& r : bounds) {
        const FamilySpec spec{f, n, r};
        const auto direct = enumerate(spec);
        const auto oracle = filter_oracle(spec);
        INFO(spec.label());
        CHECK(direct == oracle);
        CHECK(std::adjacent_find(direct.begin(), direct.end()) == direct.end());
      }
    }
  }
}

TEST_CASE("enumeration is sorted by canonical text and contains only members") {
  const FamilySpec spec{Family::PMD, 6, 3};
  const auto all = enumerate(spec);
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const PT& a, const PT& b) { return format(a) < format(b); }));
  CHECK(std::all_of(all.begin(), all.end(), [&](const PT& a) { return is_member(spec, a); }));
}

TEST_CASE("known sizes") {
  CHECK(enumerate(FamilySpec{Family::PC, 4, std::nullopt}).size() == 90);
  CHECK(enumerate(FamilySpec{Family::PC, 6, std::nullopt}).size() == 1806);
  CHECK(enumerate(FamilySpec{Family::PMD, 5, std::nullopt}).size() == 425);
  CHECK(enumerate(FamilySpec{Family::PMD, 6, std::nullopt}).size() == 1918);
  CHECK(enumerate(FamilySpec{Family::PMD, 4, 3}).size() == 96);
  CHECK(enumerate(FamilySpec{Family::IMD, 4, 4}).size() == 47);
  CHECK(enumerate(FamilySpec{Family::CN_FULL, 5, std::nullopt}).size() == 42);
}

TEST_CASE("below degree 3 the monotone and preserving families coincide") {
  for (std::size_t n = 1; n <= 2; ++n) {
    CHECK(enumerate(FamilySpec{Family::PMD, n, std::nullopt}) ==
          enumerate(FamilySpec{Family::PC, n, std::nullopt}));
    CHECK(enumerate(FamilySpec{Family::PRD_STAR, n, std::nullopt}).empty());
  }
  CHECK(enumerate(FamilySpec{Family::PMD, 3, std::nullopt}).size() >
        enumerate(FamilySpec{Family::PC, 3, std::nullopt}).size());
}

TEST_CASE("layers partition their parent families") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t q_total = 0;
    for (std::size_t m = 0; m <= n; ++m) {
      const auto layer = enumerate_layer(LayerSpec{LayerKind::Q, n, m, std::nullopt});
      for (const auto& a : layer) CHECK((a.height() == 0 ? 0 : a.image().back()) == m);
      q_total += layer.size();
    }
    CHECK(q_total == enumerate(FamilySpec{Family::PRD, n, std::nullopt}).size());

    std::size_t l_total = 0;
    for (std::size_t r = 0; r <= n; ++r) {
      l_total += enumerate_layer(LayerSpec{LayerKind::L, n, r, std::nullopt}).size();
    }
    CHECK(l_total == enumerate(FamilySpec{Family::PMD, n, std::nullopt}).size());
  }
}

TEST_CASE("K_r(s) layers split K_r by largest image") {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (std::size_t r = 2; r <= half_ceiling(n); ++r) {
      std::size_t total = 0;
      for (std::size_t s = r; s + r <= n + 1; ++s) {
        const auto part = enumerate_layer(LayerSpec{LayerKind::K_s, n, r, s});
        for (const auto& a : part) CHECK(a.image().back() == s);
        total += part.size();
      }
      CHECK(total == enumerate_layer(LayerSpec{LayerKind::K, n, r, std::nullopt}).size());
    }
  }
}

TEST_CASE("E(J_r) is the set of height-r idempotents of PC_n") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t r = 1; r < n; ++r) {
      const auto layer = enumerate_layer(LayerSpec{LayerKind::EJ, n, r, std::nullopt});
      for (const auto& a : layer) {
        CHECK(is_idempotent(a));
        CHECK(a.height() == r);
        CHECK(is_order_preserving(a));
      }
    }
  }
}

TEST_CASE("validation and budget errors") {
  CHECK_THROWS_AS(validate(FamilySpec{Family::PMD, 0, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(validate(FamilySpec{Family::PMD, kMaxDegree + 1, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(validate(FamilySpec{Family::PMD, 4, 5}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LayerSpec{LayerKind::K_s, 5, 2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LayerSpec{LayerKind::K_s, 5, 2, std::nullopt}), std::invalid_argument);

  try {
    enumerate(FamilySpec{Family::PMD, 12, std::nullopt}, 1000);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.predicted().has_value());
    CHECK(*e.predicted() == to_string(card_PMD(12)));
  }
  CHECK_THROWS_AS(enumerate(FamilySpec{Family::PT, 5, std::nullopt}, 100), BudgetExceeded);
}
