#include <algorithm>
#include <set>

#include "doctest.h"
#include "pmd/counting.hpp"
#include "pmd/generation.hpp"
#include "pmd/structure.hpp"

using namespace pmd;

namespace {

// Full transformations of [1,3]: a regular monoid with known Green's structure.
Semigroup full_transformations_3() {
  return closure({PT(3, {{1, 2}, {2, 1}, {3, 3}}), PT(3, {{1, 2}, {2, 3}, {3, 1}}),
                  PT(3, {{1, 1}, {2, 1}, {3, 3}})},
                 "T_3");
}

}  // namespace

TEST_CASE("partition helpers") {
  const auto p = Partition::by_key<int>(6, [](std::size_t i) { return static_cast<int>(i % 3); });
  CHECK(p.count == 3);
  CHECK(p.class_of == std::vector<std::uint32_t>{0, 1, 2, 0, 1, 2});
  const auto q = Partition::by_key<int>(6, [](std::size_t i) { return static_cast<int>(i / 2); });
  CHECK(Partition::intersection(p, q).is_equality());
  CHECK(Partition::join(p, q).count == 1);
  CHECK(Partition::intersection(p, q).refines(p));
  CHECK_FALSE(p.refines(q));

  auto a = BinaryRelation::from(p);
  auto b = BinaryRelation::from(q);
  const auto ab = a.then(b);
  CHECK(a.subset_of(ab));
  CHECK(ab.test(0, 2));  // 0 p 3, 3 q 2
  CHECK_FALSE(ab.test(0, 4));
  CHECK_FALSE(a == b);
}

TEST_CASE("Green's relations of the full transformation monoid on three points") {
  const auto t3 = full_transformations_3();
  REQUIRE(t3.size() == 27);
  const auto g = all_greens(t3);
  const auto by_image = Partition::by_key<PointMask>(27, [&](std::size_t i) { return t3[i].image_mask(); });
  const auto by_kernel = Partition::by_key<std::vector<PointList>>(27, [&](std::size_t i) { return t3[i].kernel().blocks; });
  const auto by_rank = Partition::by_key<std::size_t>(27, [&](std::size_t i) { return t3[i].height(); });
  CHECK(g[Relation::L] == by_image);
  CHECK(g[Relation::R] == by_kernel);
  CHECK(g[Relation::D] == by_rank);
  CHECK(g[Relation::J] == by_rank);
  // A regular semigroup has L* = L and R* = R.
  CHECK(g[Relation::Lstar] == g[Relation::L]);
  CHECK(g[Relation::Rstar] == g[Relation::R]);
  CHECK(regular_elements(t3) == Subset(27, true));
}

TEST_CASE("Green's and starred relations on the monotone decreasing families") {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t r = 2; r <= n; ++r) {
      for (Family f : {Family::PMD, Family::IMD}) {
        const FamilySpec spec{f, n, r};
        for (const auto& report : {verify_greens(spec), verify_starred_greens(spec),
                                   verify_dstar_factorizations(spec), verify_abundance(spec),
                                   verify_regularity(spec)}) {
          INFO(report.to_text());
          CHECK(report.passed());
        }
      }
    }
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      const auto report = verify_PD_greens(n, r);
      INFO(report.to_text());
      CHECK(report.passed());
    }
  }
  CHECK_THROWS_AS(verify_greens(FamilySpec{Family::PMD, 2, 2}), std::invalid_argument);
}

TEST_CASE("quasi-idempotency of PRD*") {
  for (std::size_t n = 3; n <= 6; ++n) CHECK(verify_quasi_idempotents(n).passed());
}

TEST_CASE("inverse-ideal witnesses") {
  const PT a(4, {{3, 1}, {4, 1}});
  const auto w = inverse_ideal_witness(a, Family::PMD);
  CHECK(w == PT(4, {{1, 3}}));
  CHECK(compose(compose(a, w), a) == a);

  const PT b(4, {{2, 1}, {4, 3}});
  const auto v = inverse_ideal_witness(b, Family::IMD);
  CHECK(v == PT(4, {{1, 2}, {3, 4}}));
  CHECK(compose(b, v) == identity_on(b.domain(), 4));
  CHECK_THROWS_AS(inverse_ideal_witness(a, Family::IMD), std::invalid_argument);
}

TEST_CASE("bracket classes") {
  const auto lam = lambda_map(3, 4, 2);
  CHECK(bracket_class(lam, 4, 2).members == std::vector<PT>{lam});

  const auto g2 = gamma(2, 4, 2);
  const auto b = bracket_class(g2, 4, 2);
  CHECK(b.members.size() == 2);
  CHECK(std::find(b.members.begin(), b.members.end(), PT(4, {{2, 2}, {3, 1}, {4, 1}})) != b.members.end());

  // Same set by filtering the family on the restriction criterion.
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t r = 2; r < n; ++r) {
      for (const auto& a : build_D(n, r).elements) {
        const auto dom = a.domain();
        std::vector<PT> expected;
        for (const auto& x : enumerate(FamilySpec{Family::PMD, n, r})) {
          if (restrict_to(x, dom) != a) continue;
          bool rest_low = true;
          for (std::size_t p : x.domain()) {
            if (!a.defined_at(p)) rest_low = rest_low && x(p) == a.image().front();
          }
          if (rest_low) expected.push_back(x);
        }
        const auto got = bracket_class(a, n, r);
        CHECK(got.members == expected);
        CHECK((got.members.size() == 1) == (dom.back() == n));
        for (const auto& m : got.members) CHECK(is_order_reversing(m));
      }
    }
  }
  CHECK_THROWS_AS(bracket_class(PT(4, {{2, 2}}), 4, 2), std::invalid_argument);
}

TEST_CASE("maximal subsemigroups") {
  const auto s = materialize(FamilySpec{Family::PMD, 4, 2});
  const auto bracket = bracket_class(gamma(2, 4, 2), 4, 2).members;
  Subset without_bracket(s.size(), true);
  for (const auto& a : bracket) without_bracket[s.index_of(a)] = false;
  CHECK(verify_maximal(s, without_bracket));

  Subset without_zero(s.size(), true);
  without_zero[s.index_of(PT(4))] = false;
  Json why;
  CHECK_FALSE(verify_maximal(s, without_zero, &why));
  CHECK(why == "not closed");

  const auto imd = materialize(FamilySpec{Family::IMD, 4, 2});
  for (const auto& a : imd_generating_set(4, 2).elements) {
    Subset m(imd.size(), true);
    m[imd.index_of(a)] = false;
    CHECK(verify_maximal(imd, m));
  }

  for (std::size_t n = 3; n <= 4; ++n) {
    for (std::size_t r = 2; r <= n; ++r) {
      for (Family f : {Family::PMD, Family::IMD}) {
        const auto report = verify_maximal_catalog(FamilySpec{f, n, r});
        INFO(report.to_text());
        CHECK(report.passed());
      }
    }
  }
  const auto full = maximal_subsemigroups(FamilySpec{Family::PMD, 4, std::nullopt});
  CHECK(full.entries.front().kind == WitnessKind::truncation);
  CHECK(full.entries.size() == maximal_subsemigroups(FamilySpec{Family::PMD, 4, 3}).entries.size() + 1);
}

TEST_CASE("exhaustive search on the full transformation monoid") {
  const auto t3 = full_transformations_3();
  const auto found = exhaustive_maximal_subsemigroups(t3);
  for (const auto& m : found) CHECK(verify_maximal(t3, m));
  // Each maximal subgroup of S_3 (A_3 and three of order 2) gives one.
  std::size_t from_units = 0;
  for (const auto& m : found) {
    bool drops_unit = false;
    for (std::size_t i = 0; i < t3.size(); ++i) drops_unit = drops_unit || (!m[i] && t3[i].height() == 3);
    from_units += drops_unit ? 1 : 0;
  }
  CHECK(from_units == 4);
}
