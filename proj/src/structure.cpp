#include "pmd/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <map>
#include <stdexcept>

#include "pmd/counting.hpp"
#include "pmd/generation.hpp"

namespace pmd {

namespace {

struct CheckedFamily {
  FamilySpec spec;
  std::size_t n;
  std::size_t r;
  bool injective;
};

CheckedFamily checked_family(const FamilySpec& family) {
  if (family.family != Family::PMD && family.family != Family::IMD) {
    throw std::invalid_argument("expected family PMD or IMD, got " + std::string(family_name(family.family)));
  }
  const std::size_t n = family.degree;
  const std::size_t r = family.image_bound.value_or(n);
  if (n < 3) throw std::invalid_argument("theorem checks assume n >= 3");
  if (r < 2 || r > n) throw std::invalid_argument("theorem checks need 2 <= r <= n");
  return {FamilySpec{family.family, n, r}, n, r, family.family == Family::IMD};
}

Json params(const CheckedFamily& t) {
  return Json{{"family", family_name(t.spec.family)}, {"n", t.n}, {"r", t.r}};
}

// Records whether `computed` equals `expected`, naming a pair on which they
// disagree otherwise.
bool compare_partitions(Report& report, const std::string& name, const Semigroup& s,
                        const Partition& computed, const Partition& expected) {
  if (computed == expected) return report.check(name, true, expected.count, computed.count);
  Json pair = nullptr;
  for (std::size_t a = 0; a < s.size() && pair.is_null(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (computed.related(a, b) != expected.related(a, b)) {
        pair = Json{{"a", format(s[a])}, {"b", format(s[b])},
                    {"computed_related", computed.related(a, b)}};
        break;
      }
    }
  }
  return report.check(name, false, expected.count, computed.count, pair);
}

// Sorted block minima, one per image point, indexed by image point.
std::vector<std::size_t> block_minima(const PartialTransformation& a) {
  std::vector<std::size_t> out;
  for (std::size_t y : a.image()) out.push_back(a.min_preimage(y));
  return out;
}

Json pair_json(const Semigroup& s, std::size_t a, std::size_t b) {
  return Json::array({format(s[a]), format(s[b])});
}

bool all_of(const Subset& x) {
  return std::all_of(x.begin(), x.end(), [](bool b) { return b; });
}

}  // namespace

Subset idempotents(const Semigroup& s) {
  Subset out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s.product(i, i) == i;
  return out;
}

Subset regular_elements(const Semigroup& s) {
  Subset out(s.size(), false);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size() && !out[a]; ++b) {
      out[a] = s.product(s.product(a, b), a) == a;
    }
  }
  return out;
}

PartialTransformation inverse_ideal_witness(const PartialTransformation& a, Family family) {
  std::vector<std::size_t> images(a.degree(), 0);
  if (family == Family::IMD) {
    if (!is_injective(a)) throw std::invalid_argument(format(a) + " is not injective");
    for (std::size_t x : a.domain()) images[a(x) - 1] = x;
  } else {
    for (std::size_t y : a.image()) images[y - 1] = a.min_preimage(y);
  }
  return PartialTransformation::from_images(images);
}

Report verify_greens(const FamilySpec& family) {
  const auto t = checked_family(family);
  Report report("greens", params(t));
  const Semigroup s = materialize(t.spec);
  const auto g = greens(s);
  const std::size_t size = s.size();

  compare_partitions(report, "D_equals_J", s, g[Relation::D], g[Relation::J]);
  const bool h_refines = g[Relation::H].refines(g[Relation::R]) && g[Relation::H].refines(g[Relation::L]);
  report.check("H_refines_R_and_L", h_refines, true, h_refines);

  if (t.injective) {
    for (auto rel : {Relation::R, Relation::L, Relation::H, Relation::D, Relation::J}) {
      report.check(std::string(relation_name(rel)) + "_is_equality", g[rel].is_equality(), size,
                   g[rel].count);
    }
    return report;
  }

  report.check("R_trivial", g[Relation::R].is_equality(), size, g[Relation::R].count);
  using Key = std::pair<PointList, std::vector<std::size_t>>;
  const auto expected_l = Partition::by_key<Key>(size, [&](std::size_t i) {
    return Key{s[i].image(), block_minima(s[i])};
  });
  compare_partitions(report, "L_matches_image_and_block_minima", s, g[Relation::L], expected_l);

  Json mixed = nullptr;
  Json same_domain = nullptr;
  for (const auto& cls : g[Relation::L].classes()) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        const auto& a = s[cls[i]];
        const auto& b = s[cls[j]];
        if (mixed.is_null() && a.height() >= 2 && is_order_preserving(a) != is_order_preserving(b)) {
          mixed = pair_json(s, cls[i], cls[j]);
        }
        if (same_domain.is_null() && a.domain_mask() == b.domain_mask()) {
          same_domain = pair_json(s, cls[i], cls[j]);
        }
      }
    }
  }
  report.check("L_related_share_monotonicity", mixed.is_null(), "no mixed pair", mixed.is_null(), mixed);
  report.check("L_related_with_equal_domain_are_equal", same_domain.is_null(), "no such pair",
               same_domain.is_null(), same_domain);
  return report;
}

Report verify_starred_greens(const FamilySpec& family) {
  const auto t = checked_family(family);
  Report report("greens-starred", params(t));
  const Semigroup s = materialize(t.spec);
  const auto g = starred_greens(s);
  const std::size_t size = s.size();

  const auto by_image =
      Partition::by_key<PointMask>(size, [&](std::size_t i) { return s[i].image_mask(); });
  const auto by_right = t.injective
      ? Partition::by_key<PointMask>(size, [&](std::size_t i) { return s[i].domain_mask(); })
      : Partition::by_key<std::vector<PointList>>(size, [&](std::size_t i) {
          auto blocks = s[i].kernel().blocks;
          std::sort(blocks.begin(), blocks.end());
          return blocks;
        });
  const auto by_height =
      Partition::by_key<std::size_t>(size, [&](std::size_t i) { return s[i].height(); });

  compare_partitions(report, "Lstar_is_equal_image", s, g[Relation::Lstar], by_image);
  compare_partitions(report, t.injective ? "Rstar_is_equal_domain" : "Rstar_is_equal_kernel", s,
                     g[Relation::Rstar], by_right);
  compare_partitions(report, "Hstar_is_both", s, g[Relation::Hstar], Partition::intersection(by_right, by_image));
  compare_partitions(report, "Dstar_is_equal_height", s, g[Relation::Dstar], by_height);
  return report;
}

Report verify_dstar_factorizations(const FamilySpec& family) {
  const auto t = checked_family(family);
  Report report("verify-dstar", params(t));
  const Semigroup s = materialize(t.spec);
  const auto g = starred_greens(s);
  const auto l = BinaryRelation::from(g[Relation::Lstar]);
  const auto r = BinaryRelation::from(g[Relation::Rstar]);
  const auto d = BinaryRelation::from(g[Relation::Dstar]);

  const auto lr = l.then(r);
  const auto rl = r.then(l);
  const auto rlr = rl.then(r);
  const auto lrl = lr.then(l);

  auto outside = [&](const BinaryRelation& a, const BinaryRelation& b) -> Json {
    const auto w = a.witness_outside(b);
    return w ? pair_json(s, w->first, w->second) : Json(nullptr);
  };
  report.check("Dstar_equals_RLR", rlr == d, true, rlr == d, rlr == d ? Json(nullptr) : outside(d, rlr));
  report.check("Dstar_equals_LRL", lrl == d, true, lrl == d, lrl == d ? Json(nullptr) : outside(d, lrl));

  const auto lr_gap = d.witness_outside(lr);
  const auto rl_gap = d.witness_outside(rl);
  report.check("LR_strictly_inside_Dstar", lr.subset_of(d) && lr_gap.has_value(), "proper subset",
               lr_gap ? pair_json(s, lr_gap->first, lr_gap->second) : Json("equal"));
  report.check("RL_strictly_inside_Dstar", rl.subset_of(d) && rl_gap.has_value(), "proper subset",
               rl_gap ? pair_json(s, rl_gap->first, rl_gap->second) : Json("equal"));
  report.check("LR_differs_from_RL", !(lr == rl), "different", lr == rl ? "equal" : "different");

  const std::size_t n = t.n;
  const auto alpha = s.index_of(PartialTransformation(n, {{2, 2}, {3, 3}}));
  const auto beta = s.index_of(PartialTransformation(n, {{1, 1}, {n, n}}));
  const auto gamma = s.index_of(PartialTransformation(n, {{1, 1}, {2, 2}}));
  const Json ab = pair_json(s, alpha, beta);
  const Json gb = pair_json(s, gamma, beta);
  const Json ag = pair_json(s, alpha, gamma);
  report.check("alpha_beta_in_Dstar", d.test(alpha, beta), true, d.test(alpha, beta), ab);
  report.check("alpha_beta_not_in_LR", !lr.test(alpha, beta), false, lr.test(alpha, beta), ab);
  report.check("gamma_beta_not_in_RL", !rl.test(gamma, beta), false, rl.test(gamma, beta), gb);
  report.check("alpha_gamma_in_RL", rl.test(alpha, gamma), true, rl.test(alpha, gamma), ag);
  report.check("alpha_gamma_not_in_LR", !lr.test(alpha, gamma), false, lr.test(alpha, gamma), ag);
  return report;
}

Report verify_abundance(const FamilySpec& family) {
  const auto t = checked_family(family);
  Report report("verify-abundance", params(t));
  const Semigroup s = materialize(t.spec);
  const auto g = starred_greens(s);
  const Subset e = idempotents(s);

  auto idempotent_counts = [&](const Partition& p) {
    std::vector<std::size_t> counts(p.count, 0);
    for (std::size_t i = 0; i < s.size(); ++i) counts[p.class_of[i]] += e[i] ? 1 : 0;
    return counts;
  };
  auto first_member = [&](const Partition& p, std::size_t cls) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (p.class_of[i] == cls) return format(s[i]);
    }
    return std::string();
  };
  for (auto rel : {Relation::Lstar, Relation::Rstar}) {
    const auto& p = g[rel];
    const auto counts = idempotent_counts(p);
    const auto bad = std::find(counts.begin(), counts.end(), 0U);
    const std::string name = std::string(relation_name(rel)) + "_classes_contain_idempotent";
    report.check(name, bad == counts.end(), p.count,
                 static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; })),
                 bad == counts.end() ? Json(nullptr)
                                     : Json(first_member(p, static_cast<std::size_t>(bad - counts.begin()))));
    if (rel == Relation::Rstar && !t.injective) {
      const auto many = std::find_if(counts.begin(), counts.end(), [](auto c) { return c != 1; });
      report.check("Rstar_classes_have_unique_idempotent", many == counts.end(), 1,
                   many == counts.end() ? 1 : *many,
                   many == counts.end() ? Json(nullptr)
                                        : Json(first_member(p, static_cast<std::size_t>(many - counts.begin()))));
    }
  }

  Json failure = nullptr;
  for (const auto& a : s.elements()) {
    const auto w = inverse_ideal_witness(a, t.spec.family);
    const auto aw = compose(a, w);
    const auto wa = compose(w, a);
    if (compose(aw, a) != a || !is_member(t.spec, aw) || !is_member(t.spec, wa)) {
      failure = Json{{"element", format(a)}, {"witness", format(w)}};
      break;
    }
  }
  report.check("inverse_ideal_witnesses", failure.is_null(), s.size(), failure.is_null() ? s.size() : 0, failure);
  return report;
}

Report verify_regularity(const FamilySpec& family) {
  const auto t = checked_family(family);
  Report report("verify-regularity", params(t));
  const Semigroup s = materialize(t.spec);
  const Subset e = idempotents(s);
  const Subset reg = regular_elements(s);
  const auto e_count = static_cast<std::size_t>(std::count(e.begin(), e.end(), true));

  Json diff = nullptr;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (e[i] != reg[i]) {
      diff = format(s[i]);
      break;
    }
  }
  report.check("regular_equals_idempotent", diff.is_null(), e_count,
               static_cast<std::size_t>(std::count(reg.begin(), reg.end(), true)), diff);
  report.check("not_regular", e_count < s.size(), "fewer than " + std::to_string(s.size()), e_count);

  if (!t.injective) {
    const Count formula = card_E_PMD(t.n, t.r);
    report.check("idempotent_count_formula", formula == Count(e_count), to_string(formula), e_count);
    if (t.r == t.n) {
      const Count full = (pow(Count(3), static_cast<unsigned>(t.n)) + 1) / 2;
      report.check("idempotent_count_full", full == Count(e_count), to_string(full), e_count);
    }
  }

  Subset closed = close_within(s, e);
  std::vector<PartialTransformation> generated;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (closed[i]) generated.push_back(s[i]);
  }
  if (t.injective) {
    // Partial identities commute, so they generate nothing new.
    report.check("idempotents_closed", generated.size() == e_count, e_count, generated.size());
  } else {
    const auto expected = enumerate(FamilySpec{Family::PC, t.n, t.r});
    report.check("idempotents_generate_PC", same_elements(generated, expected), expected.size(),
                 generated.size());
    report.check("idempotent_closure_proper", generated.size() < s.size(),
                 "fewer than " + std::to_string(s.size()), generated.size());
  }
  return report;
}

Report verify_quasi_idempotents(std::size_t n) {
  if (n < 3) throw std::invalid_argument("theorem checks assume n >= 3");
  Report report("verify-quasi-idempotents", Json{{"n", n}});
  const auto prd_star = enumerate(FamilySpec{Family::PRD_STAR, n, std::nullopt});
  Json bad = nullptr;
  for (const auto& a : prd_star) {
    if (!is_quasi_idempotent(a)) {
      bad = format(a);
      break;
    }
  }
  report.check("PRD_star_quasi_idempotent", bad.is_null(), prd_star.size(),
               bad.is_null() ? prd_star.size() : 0, bad);
  for (std::size_t r = 2; r <= half_ceiling(n); ++r) {
    const bool some = std::any_of(prd_star.begin(), prd_star.end(), [&](const PartialTransformation& a) {
      return a.height() == r && !is_idempotent(a);
    });
    report.check("K_" + std::to_string(r) + "_has_non_idempotent", some, true, some);
  }
  return report;
}

Report verify_PD_greens(std::size_t n, std::size_t r) {
  if (n < 3) throw std::invalid_argument("theorem checks assume n >= 3");
  if (r < 1 || r > n) throw std::invalid_argument("r must lie in [1, n]");
  Report report("greens-PD", Json{{"family", "PD"}, {"n", n}, {"r", r}});
  const Semigroup s = materialize(FamilySpec{Family::PD, n, r});
  const auto g = greens(s);
  report.check("R_trivial", g[Relation::R].is_equality(), s.size(), g[Relation::R].count);
  compare_partitions(report, "H_equals_R", s, g[Relation::H], g[Relation::R]);
  compare_partitions(report, "L_equals_D", s, g[Relation::L], g[Relation::D]);
  compare_partitions(report, "D_equals_J", s, g[Relation::D], g[Relation::J]);
  using Key = std::pair<PointList, std::vector<std::size_t>>;
  const auto expected_l = Partition::by_key<Key>(s.size(), [&](std::size_t i) {
    return Key{s[i].image(), block_minima(s[i])};
  });
  compare_partitions(report, "L_matches_image_and_block_minima", s, g[Relation::L], expected_l);
  return report;
}

BracketClass bracket_class(const PartialTransformation& alpha, std::size_t n, std::size_t r) {
  const auto d = build_D(n, std::min(r, n - 1)).elements;
  if (std::find(d.begin(), d.end(), alpha) == d.end()) {
    throw std::invalid_argument(format(alpha) + " is not one of the reversing generators for n=" +
                                std::to_string(n) + ", r=" + std::to_string(r));
  }
  const PointList dom = alpha.domain();
  const PointList im = alpha.image();
  const std::size_t top = dom.back();
  const std::size_t low = im.front();
  const std::size_t free = n - top;
  BracketClass out{alpha, {}};
  for (PointMask extra = 0; extra < (PointMask{1} << free); ++extra) {
    std::vector<std::size_t> images(n, 0);
    for (std::size_t x : dom) images[x - 1] = alpha(x);
    for (std::size_t x : mask_points(extra)) images[top + x - 1] = low;
    out.members.push_back(PartialTransformation::from_images(images));
  }
  sort_canonical(out.members);
  return out;
}

std::string_view witness_kind_name(WitnessKind k) noexcept {
  switch (k) {
    case WitnessKind::removed_idempotent: return "removed-idempotent";
    case WitnessKind::removed_bracket_class: return "removed-bracket-class";
    case WitnessKind::removed_undecomposable: return "removed-undecomposable";
    case WitnessKind::truncation: return "truncation";
    case WitnessKind::truncation_plus_identity: return "truncation-plus-identity";
  }
  return "?";
}

namespace {

std::vector<PartialTransformation> without(const std::vector<PartialTransformation>& all,
                                           const std::vector<PartialTransformation>& removed) {
  std::vector<PartialTransformation> out;
  for (const auto& a : all) {
    if (std::find(removed.begin(), removed.end(), a) == removed.end()) out.push_back(a);
  }
  return out;
}

MaximalSubsemigroupCatalog truncated_catalog(const FamilySpec& spec, std::size_t budget) {
  const std::size_t n = spec.degree;
  const std::size_t r = *spec.image_bound;
  const auto all = enumerate(spec, budget);
  MaximalSubsemigroupCatalog catalog{spec, {}};
  if (spec.family == Family::PMD) {
    for (const auto& e : build_E_Jr(n, r).elements) {
      catalog.entries.push_back({WitnessKind::removed_idempotent, e, std::nullopt, without(all, {e})});
    }
    for (const auto& a : build_D(n, r).elements) {
      catalog.entries.push_back(
          {WitnessKind::removed_bracket_class, a, std::nullopt, without(all, bracket_class(a, n, r).members)});
    }
  } else {
    for (const auto& a : imd_generating_set(n, r).elements) {
      catalog.entries.push_back({WitnessKind::removed_undecomposable, a, std::nullopt, without(all, {a})});
    }
  }
  return catalog;
}

}  // namespace

MaximalSubsemigroupCatalog maximal_subsemigroups(const FamilySpec& family, std::size_t budget) {
  const auto t = checked_family(family);
  if (t.r < t.n) return truncated_catalog(t.spec, budget);

  const FamilySpec lower{t.spec.family, t.n, t.n - 1};
  auto inner = truncated_catalog(lower, budget);
  MaximalSubsemigroupCatalog catalog{t.spec, {}};
  catalog.entries.push_back({WitnessKind::truncation, std::nullopt, std::nullopt, enumerate(lower, budget)});
  const auto one = PartialTransformation::identity(t.n);
  for (auto& entry : inner.entries) {
    entry.elements.push_back(one);
    sort_canonical(entry.elements);
    catalog.entries.push_back(
        {WitnessKind::truncation_plus_identity, entry.witness, entry.kind, std::move(entry.elements)});
  }
  return catalog;
}

bool verify_maximal(const Semigroup& s, const Subset& candidate, Json* why) {
  auto fail = [&](Json reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  if (all_of(candidate)) return fail("not proper");
  if (!is_closed_within(s, candidate)) return fail("not closed");
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (candidate[x]) continue;
    Subset seed = candidate;
    seed[x] = true;
    if (!all_of(close_within(s, seed))) {
      return fail(Json{{"not_maximal", "adding an excluded element does not generate"}, {"element", format(s[x])}});
    }
  }
  return true;
}

std::vector<Subset> exhaustive_maximal_subsemigroups(const Semigroup& s, std::size_t max_class) {
  const auto g = greens(s);
  std::vector<Subset> found;
  for (const auto& cls : g[Relation::J].classes()) {
    if (cls.size() > max_class) {
      throw std::invalid_argument("J-class of size " + std::to_string(cls.size()) + " exceeds the search cap");
    }
    const std::size_t k = cls.size();
    std::vector<std::uint32_t> removable;  // minimal masks over this class
    // Visit masks by increasing popcount so minimality is a subset test.
    std::vector<std::uint32_t> masks((std::size_t{1} << k) - 1);
    std::iota(masks.begin(), masks.end(), 1U);
    std::stable_sort(masks.begin(), masks.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
    for (auto m : masks) {
      if (std::any_of(removable.begin(), removable.end(), [&](auto r) { return (r & m) == r; })) continue;
      Subset rest(s.size(), true);
      for (std::size_t i = 0; i < k; ++i) {
        if (m >> i & 1U) rest[cls[i]] = false;
      }
      if (is_closed_within(s, rest)) {
        removable.push_back(m);
        found.push_back(std::move(rest));
      }
    }
  }
  return found;
}

Report verify_maximal_catalog(const FamilySpec& family) {
  const auto t = checked_family(family);
  Report report("maximal", params(t));
  const Semigroup s = materialize(t.spec);
  const auto catalog = maximal_subsemigroups(t.spec);

  Count expected_count;
  const std::size_t base_r = std::min(t.r, t.n - 1);
  if (t.injective) {
    expected_count = rank_IMD(t.n, base_r);
  } else {
    expected_count = c_table(t.n, base_r) + (t.n - 2);
  }
  if (t.r == t.n) expected_count += 1;
  report.check("entry_count", Count(catalog.entries.size()) == expected_count, to_string(expected_count),
               catalog.entries.size());

  std::vector<Subset> catalog_sets;
  Json first_bad = nullptr;
  std::size_t good = 0;
  for (const auto& entry : catalog.entries) {
    Subset members = s.mask_of(entry.elements);
    Json why;
    if (verify_maximal(s, members, &why)) {
      ++good;
    } else if (first_bad.is_null()) {
      first_bad = Json{{"kind", witness_kind_name(entry.kind)},
                       {"witness", entry.witness ? format(*entry.witness) : "none"},
                       {"reason", why}};
    }
    catalog_sets.push_back(std::move(members));
  }
  report.check("entries_are_maximal", good == catalog.entries.size(), catalog.entries.size(), good, first_bad);

  std::sort(catalog_sets.begin(), catalog_sets.end());
  const bool distinct = std::adjacent_find(catalog_sets.begin(), catalog_sets.end()) == catalog_sets.end();
  report.check("entries_distinct", distinct, true, distinct);

  if (!t.injective) {
    // Every beta in [alpha] together with PC(n, r) generates all of [alpha].
    const std::size_t n = t.n;
    const Subset pc = s.mask_of(enumerate(FamilySpec{Family::PC, n, t.r}));
    std::size_t checked = 0;
    Json bad = nullptr;
    for (const auto& a : build_D(n, base_r).elements) {
      const auto bracket = bracket_class(a, n, t.r);
      const Subset want = s.mask_of(bracket.members);
      for (const auto& b : bracket.members) {
        Subset seed = pc;
        seed[s.index_of(b)] = true;
        const Subset got = close_within(s, seed);
        bool covers = true;
        for (std::size_t i = 0; i < s.size(); ++i) covers = covers && (!want[i] || got[i]);
        ++checked;
        if (!covers && bad.is_null()) bad = Json{{"alpha", format(a)}, {"beta", format(b)}};
      }
    }
    report.check("bracket_class_generated_from_any_member", bad.is_null(), "all", checked, bad);
  }

  if (t.n > 4) {
    report.skip("exhaustive_search_matches_catalog", "exhaustive search gated to n <= 4");
    return report;
  }
  auto exhaustive = exhaustive_maximal_subsemigroups(s);
  std::sort(exhaustive.begin(), exhaustive.end());
  Json extra = nullptr;
  for (const auto& m : exhaustive) {
    if (!std::binary_search(catalog_sets.begin(), catalog_sets.end(), m)) {
      std::vector<PartialTransformation> missing;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!m[i]) missing.push_back(s[i]);
      }
      extra = Json{{"removed", to_json(missing)}};
      break;
    }
  }
  report.check("exhaustive_search_matches_catalog", exhaustive == catalog_sets, catalog_sets.size(),
               exhaustive.size(), extra);
  return report;
}

}  // namespace pmd
