#include "pmd/generation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pmd/counting.hpp"

namespace pmd {

namespace {

void require_degree(std::size_t n) {
  if (n < 3 || n > kMaxDegree) {
    throw std::invalid_argument("generators are defined for 3 <= n <= " + std::to_string(kMaxDegree) +
                                ", got n=" + std::to_string(n));
  }
}

void require_in(std::size_t v, std::size_t lo, std::size_t hi, const std::string& what) {
  if (v < lo || v > hi) {
    throw std::invalid_argument(what + "=" + std::to_string(v) + " outside the valid interval [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// s, s+1, ..., s+len-1  ->  s, s-1, ..., s-len+1
PartialTransformation reversing_run(std::size_t s, std::size_t len, std::size_t n) {
  std::vector<std::size_t> images(n, 0);
  for (std::size_t i = 0; i < len; ++i) images[s + i - 1] = s - i;
  return PartialTransformation::from_images(images);
}

GeneratingSet finish(std::size_t n, std::vector<PartialTransformation> elements, std::string label) {
  sort_canonical(elements);
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return GeneratingSet{n, std::move(elements), std::move(label)};
}

// Calls visit(subset) for every k-subset of `pool`, in lexicographic order,
// stopping early when visit returns false. Returns false if stopped.
template <typename T, typename F>
bool for_each_combination(const std::vector<T>& pool, std::size_t k, F&& visit) {
  if (k > pool.size()) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<T> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    if (!visit(chosen)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PartialTransformation Factorization::product() const {
  if (parts.empty()) throw std::logic_error("empty factorization");
  PartialTransformation p = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) p = compose(p, parts[i]);
  return p;
}

std::size_t r_hat(std::size_t n, std::size_t r) {
  require_in(r, 2, n, "r");
  return std::min(r, half_ceiling(n));
}

PartialTransformation gamma(std::size_t s, std::size_t n, std::size_t r) {
  require_degree(n);
  require_in(s, 2, r_hat(n, r), "gamma index s");
  return reversing_run(s, s, n);
}

PartialTransformation delta(std::size_t s, std::size_t n, std::size_t r) {
  require_degree(n);
  const std::size_t h = r_hat(n, r);
  if (n < 2 * h + 1) {
    throw std::invalid_argument("delta_s does not exist for n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + " (empty interval)");
  }
  require_in(s, h + 1, n - h, "delta index s");
  return reversing_run(s, h, n);
}

PartialTransformation lambda_map(std::size_t s, std::size_t n, std::size_t r) {
  require_degree(n);
  const std::size_t h = r_hat(n, r);
  require_in(s, n - h + 1, n - 1, "lambda index s");
  return reversing_run(s, n - s + 1, n);
}

PartialTransformation gamma_ks(std::size_t k, std::size_t s, std::size_t n) {
  if (n == 0 || n > kMaxDegree) throw std::invalid_argument("degree out of range");
  if (k < 2 || s < k || s + k - 1 > n) {
    throw std::invalid_argument("gamma_{k,s} needs k >= 2, s >= k, s+k-1 <= n; got k=" +
                                std::to_string(k) + " s=" + std::to_string(s) +
                                " n=" + std::to_string(n));
  }
  return reversing_run(s, k, n);
}

GeneratingSet build_D(std::size_t n, std::size_t r) {
  require_degree(n);
  const std::size_t h = r_hat(n, r);
  std::vector<PartialTransformation> out;
  for (std::size_t s = 2; s <= h; ++s) out.push_back(gamma(s, n, r));
  for (std::size_t s = h + 1; s + h <= n; ++s) out.push_back(delta(s, n, r));
  for (std::size_t s = n - h + 1; s <= n - 1; ++s) out.push_back(lambda_map(s, n, r));
  // For odd n and r >= m, gamma_m and lambda_m coincide.
  return finish(n, std::move(out), "D_rhat");
}

GeneratingSet build_E_Jr(std::size_t n, std::size_t r) {
  require_degree(n);
  require_in(r, 2, n - 1, "r");
  std::vector<PartialTransformation> out;
  const PointMask all = (PointMask{1} << n) - 1;
  for (PointMask dom = 1; dom <= all; ++dom) {
    const PointList pts = mask_points(dom);
    if (pts.size() < r) continue;
    // Choose r-1 of the |dom|-1 gaps as block boundaries.
    std::vector<std::size_t> gaps(pts.size() - 1);
    std::iota(gaps.begin(), gaps.end(), std::size_t{0});
    for_each_combination(gaps, r - 1, [&](const std::vector<std::size_t>& cuts) {
      std::vector<std::size_t> images(n, 0);
      std::size_t block_min = pts[0];
      std::size_t c = 0;
      for (std::size_t p = 0; p < pts.size(); ++p) {
        if (p > 0 && c < cuts.size() && cuts[c] == p - 1) {
          block_min = pts[p];
          ++c;
        }
        images[pts[p] - 1] = block_min;
      }
      out.push_back(PartialTransformation::from_images(images));
      return true;
    });
  }
  return finish(n, std::move(out), "E(J_r)");
}

PartialTransformation delta_aY(std::size_t a, const PointList& y, std::size_t n) {
  require_in(a, 2, n, "a");
  std::vector<std::size_t> images(n, 0);
  for (std::size_t x : y) {
    require_in(x, 1, n, "point of Y");
    if (x == a || x == a - 1) throw std::invalid_argument("Y must avoid a-1 and a");
    images[x - 1] = x;
  }
  images[a - 1] = a - 1;
  return PartialTransformation::from_images(images);
}

GeneratingSet build_Er_Fr(std::size_t n, std::size_t r) {
  require_degree(n);
  require_in(r, 2, n - 1, "r");
  std::vector<PartialTransformation> out;
  PointList chain(n);
  std::iota(chain.begin(), chain.end(), std::size_t{1});
  for_each_combination(chain, r, [&](const PointList& z) {
    out.push_back(identity_on(z, n));
    return true;
  });
  for (std::size_t a = 2; a <= n; ++a) {
    PointList rest;
    for (std::size_t x = 1; x <= n; ++x) {
      if (x != a && x != a - 1) rest.push_back(x);
    }
    for_each_combination(rest, r - 1, [&](const PointList& y) {
      out.push_back(delta_aY(a, y, n));
      return true;
    });
  }
  return finish(n, std::move(out), "E_r u F_r");
}

GeneratingSet pmd_generating_set(std::size_t n, std::size_t r) {
  require_degree(n);
  require_in(r, 2, n, "r");
  const std::size_t base = std::min(r, n - 1);
  auto elements = build_E_Jr(n, base).elements;
  for (const auto& d : build_D(n, base).elements) elements.push_back(d);
  std::string label = "E(J_r) u D_rhat";
  if (r == n) {
    elements.push_back(PartialTransformation::identity(n));
    label = "E(J_{n-1}) u D_m u {1_n}";
  }
  return finish(n, std::move(elements), label);
}

GeneratingSet imd_generating_set(std::size_t n, std::size_t r) {
  require_degree(n);
  require_in(r, 2, n, "r");
  const std::size_t base = std::min(r, n - 1);
  auto elements = build_Er_Fr(n, base).elements;
  for (const auto& d : build_D(n, base).elements) elements.push_back(d);
  std::string label = "E_r u F_r u D_rhat";
  if (r == n) {
    elements.push_back(PartialTransformation::identity(n));
    label = "E_{n-1} u F_{n-1} u D_m u {1_n}";
  }
  return finish(n, std::move(elements), label);
}

Semigroup closure(const GeneratingSet& gens, std::size_t budget) {
  return closure(gens.elements, "<" + gens.label + ">", budget);
}

Factorization factorize_reversing(const PartialTransformation& a, std::size_t n, std::size_t r) {
  if (a.degree() != n) throw std::invalid_argument("degree mismatch");
  require_degree(n);
  require_in(r, 2, n, "r");
  const std::size_t k = a.height();
  if (!is_order_reversing(a) || !is_order_decreasing(a) || k < 2) {
    throw std::invalid_argument(format(a) + " is not an order-reversing decreasing map of height >= 2");
  }
  if (k > r) throw std::invalid_argument(format(a) + " has height above r=" + std::to_string(r));

  PointList image = a.image();
  std::reverse(image.begin(), image.end());  // a_1 > a_2 > ... > a_k
  const std::size_t s = image.front();

  // beta1 collapses block A_i = a_i a^{-1} onto s+i-1; blocks come in
  // increasing order of their minima because a reverses order.
  std::vector<std::size_t> b1(n, 0), b2(n, 0);
  for (std::size_t x = 1; x <= n; ++x) {
    if (!a.defined_at(x)) continue;
    const auto i = static_cast<std::size_t>(std::find(image.begin(), image.end(), a(x)) - image.begin());
    b1[x - 1] = s + i;
  }
  // beta2 sends s-i+1 to a_i.
  for (std::size_t i = 0; i < k; ++i) b2[s - i - 1] = image[i];
  const auto beta1 = PartialTransformation::from_images(b1);
  const auto beta2 = PartialTransformation::from_images(b2);
  const auto middle = gamma_ks(k, s, n);

  Factorization f{a, {}};
  const auto d = build_D(n, r).elements;
  if (std::find(d.begin(), d.end(), middle) != d.end()) {
    f.parts = {beta1, middle, beta2};
    return f;
  }
  const auto generator = *std::find_if(d.begin(), d.end(), [&](const PartialTransformation& g) {
    return g(s) == s;
  });
  f.parts = {beta1, identity_on(middle.domain(), n), generator, beta2};
  return f;
}

bool is_undecomposable(const Semigroup& s, const PartialTransformation& a) {
  const auto target = s.index_of(a);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == target) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != target && s.product(i, j) == target) return false;
    }
  }
  return true;
}

Subset undecomposables(const Semigroup& s) {
  Subset undecomposable(s.size(), true);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      const auto p = s.product(i, j);
      if (p != i && p != j) undecomposable[p] = false;
    }
  }
  return undecomposable;
}

std::vector<std::vector<Semigroup::Index>> fix_classes(const Semigroup& s) {
  const std::size_t n = s.degree();
  std::vector<std::vector<Semigroup::Index>> classes(n + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& a = s[i];
    if (a.height() < 2 || !is_order_reversing(a)) continue;
    for (std::size_t x = 2; x + 1 <= n; ++x) {
      if (a(x) == x) classes[x].push_back(static_cast<Semigroup::Index>(i));
    }
  }
  return classes;
}

namespace {

Json element_list(const Semigroup& s, const std::vector<Semigroup::Index>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(format(s[i]));
  return out;
}

// Searches generating sets of size `size` that contain every undecomposable
// element and meet every fix class. Returns a witness if one generates.
struct SmallerSetSearch {
  std::size_t examined = 0;
  bool exhausted = true;
  std::vector<Semigroup::Index> witness;
};

SmallerSetSearch search_smaller_generating_set(const Semigroup& s, const Subset& undecomposable,
                                               const std::vector<std::vector<Semigroup::Index>>& classes,
                                               std::size_t size, std::size_t cap) {
  SmallerSetSearch result;
  std::vector<Semigroup::Index> base;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (undecomposable[i]) base.push_back(static_cast<Semigroup::Index>(i));
  }
  if (base.size() > size) return result;
  std::vector<const std::vector<Semigroup::Index>*> unhit;
  for (std::size_t x = 2; x < classes.size(); ++x) {
    if (x + 1 > s.degree()) break;
    const auto& cls = classes[x];
    const bool hit = std::any_of(cls.begin(), cls.end(), [&](auto i) { return undecomposable[i]; });
    if (!hit) unhit.push_back(&cls);
  }
  const std::size_t slots = size - base.size();
  if (unhit.size() > slots) return result;

  std::vector<Semigroup::Index> pool;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!undecomposable[i]) pool.push_back(static_cast<Semigroup::Index>(i));
  }
  // Free choice of `slots` extra elements, filtered by the hitting condition.
  for_each_combination(pool, slots, [&](const std::vector<Semigroup::Index>& extra) {
    for (const auto* cls : unhit) {
      const bool hit = std::any_of(cls->begin(), cls->end(), [&](auto i) {
        return std::find(extra.begin(), extra.end(), i) != extra.end();
      });
      if (!hit) return true;
    }
    if (++result.examined > cap) {
      result.exhausted = false;
      return false;
    }
    Subset seed(s.size(), false);
    for (auto i : base) seed[i] = true;
    for (auto i : extra) seed[i] = true;
    const auto closed = close_within(s, seed);
    if (std::all_of(closed.begin(), closed.end(), [](bool b) { return b; })) {
      result.witness = base;
      result.witness.insert(result.witness.end(), extra.begin(), extra.end());
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace

Report verify_rank(const FamilySpec& family) {
  const std::size_t n = family.degree;
  const std::size_t r = family.image_bound.value_or(n);
  if (family.family != Family::PMD && family.family != Family::IMD) {
    throw std::invalid_argument("verify_rank supports PMD and IMD only");
  }
  if (n < 3) throw std::invalid_argument("theorem checks assume n >= 3");
  require_in(r, 2, n, "r");
  const bool injective = family.family == Family::IMD;
  const FamilySpec spec{family.family, n, r};

  Report report("verify-rank", Json{{"family", family_name(family.family)}, {"n", n}, {"r", r}});
  const auto gens = injective ? imd_generating_set(n, r) : pmd_generating_set(n, r);
  const Count rank = injective ? rank_IMD(n, r) : rank_PMD(n, r);

  report.check("candidate_size_equals_rank_formula", Count(gens.elements.size()) == rank,
               to_string(rank), gens.elements.size());
  std::vector<PartialTransformation> outsiders;
  for (const auto& g : gens.elements) {
    if (!is_member(spec, g)) outsiders.push_back(g);
  }
  report.check("candidate_inside_family", outsiders.empty(), "all members", outsiders.size(),
               to_json(outsiders));

  if (n > 6) {
    report.skip("candidate_generates_family", "closure checks gated to n <= 6");
    return report;
  }
  const Semigroup whole = materialize(spec);
  const Semigroup generated = closure(gens);
  report.check("candidate_generates_family", generated.sorted_keys() == whole.sorted_keys(),
               whole.size(), generated.size());

  const Subset undecomposable = undecomposables(whole);
  std::vector<Semigroup::Index> u_idx;
  for (std::size_t i = 0; i < whole.size(); ++i) {
    if (undecomposable[i]) u_idx.push_back(static_cast<Semigroup::Index>(i));
  }
  const Subset in_candidate = whole.mask_of(gens.elements);

  std::vector<Semigroup::Index> missing;
  for (auto i : u_idx) {
    if (!in_candidate[i]) missing.push_back(i);
  }
  report.check("undecomposables_inside_candidate", missing.empty(), "none missing", missing.size(),
               element_list(whole, missing));

  // Elements the theory says must be undecomposable.
  std::vector<PartialTransformation> required;
  if (injective) {
    required = gens.elements;
  } else {
    required = build_E_Jr(n, std::min(r, n - 1)).elements;
    if (r == n) required.push_back(PartialTransformation::identity(n));
    const std::size_t h = r_hat(n, std::min(r, n - 1));
    for (std::size_t s = n - h + 1; s <= n - 1; ++s) required.push_back(lambda_map(s, n, r));
  }
  std::vector<PartialTransformation> decomposable;
  for (const auto& a : required) {
    if (!undecomposable[whole.index_of(a)]) decomposable.push_back(a);
  }
  report.check(injective ? "generators_undecomposable" : "idempotents_and_D3_undecomposable",
               decomposable.empty(), required.size(), required.size() - decomposable.size(),
               to_json(decomposable));

  if (!injective) {
    // gamma_s with 2s <= n and every delta_s factor through a longer run.
    const std::size_t h = r_hat(n, std::min(r, n - 1));
    std::vector<PartialTransformation> expected_decomposable;
    for (std::size_t s = 2; s <= h; ++s) {
      if (2 * s <= n) expected_decomposable.push_back(gamma(s, n, r));
    }
    for (std::size_t s = h + 1; s + h <= n; ++s) expected_decomposable.push_back(delta(s, n, r));
    std::vector<PartialTransformation> wrong;
    for (const auto& a : expected_decomposable) {
      if (undecomposable[whole.index_of(a)]) wrong.push_back(a);
    }
    report.check("D1_minus_D3_and_D2_decomposable", wrong.empty(), expected_decomposable.size(),
                 expected_decomposable.size() - wrong.size(), to_json(wrong));
  }

  const auto classes = fix_classes(whole);
  std::size_t unhit_by_undecomposables = 0;
  for (std::size_t s = 2; s + 1 <= n; ++s) {
    const auto& cls = classes[s];
    const bool candidate_hits =
        std::any_of(cls.begin(), cls.end(), [&](auto i) { return in_candidate[i]; });
    Subset rest(whole.size(), true);
    for (auto i : cls) rest[i] = false;
    const bool removable = is_closed_within(whole, rest);
    report.check("fix_class_" + std::to_string(s) + "_hit_by_candidate", candidate_hits, true,
                 candidate_hits);
    report.check("fix_class_" + std::to_string(s) + "_complement_closed", removable, true, removable);
    if (std::none_of(cls.begin(), cls.end(), [&](auto i) { return undecomposable[i]; })) {
      ++unhit_by_undecomposables;
    }
  }
  const std::size_t lower_bound = u_idx.size() + unhit_by_undecomposables;
  report.check("lower_bound_equals_rank_formula", Count(lower_bound) == rank, to_string(rank),
               lower_bound);

  if (n > 4) {
    report.skip("no_smaller_generating_set", "exhaustive minimality gated to n <= 4");
    return report;
  }
  const std::size_t target = static_cast<std::size_t>(rank) - 1;
  const auto pruned = search_smaller_generating_set(whole, undecomposable, classes, target, 2'000'000);
  report.check("no_smaller_generating_set", pruned.witness.empty() && pruned.exhausted,
               "no generating set of size " + std::to_string(target),
               Json{{"examined", pruned.examined}, {"exhausted", pruned.exhausted}},
               element_list(whole, pruned.witness));

  // At the smallest degree the unpruned search is affordable too.
  if (binomial(whole.size(), target) <= 200'000) {
    std::vector<Semigroup::Index> all(whole.size());
    std::iota(all.begin(), all.end(), Semigroup::Index{0});
    std::size_t examined = 0;
    std::vector<Semigroup::Index> witness;
    for_each_combination(all, target, [&](const std::vector<Semigroup::Index>& pick) {
      ++examined;
      Subset seed(whole.size(), false);
      for (auto i : pick) seed[i] = true;
      const auto closed = close_within(whole, seed);
      if (std::all_of(closed.begin(), closed.end(), [](bool b) { return b; })) {
        witness = pick;
        return false;
      }
      return true;
    });
    report.check("no_smaller_generating_set_unpruned", witness.empty(),
                 "no generating set of size " + std::to_string(target),
                 Json{{"examined", examined}}, element_list(whole, witness));
  }
  return report;
}

}  // namespace pmd
