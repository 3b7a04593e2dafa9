#include "pmd/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "pmd/counting.hpp"

namespace pmd {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
};

constexpr std::array kFamilyNames{
    FamilyInfo{Family::PT, "PT"},           FamilyInfo{Family::I, "I"},
    FamilyInfo{Family::PO, "PO"},           FamilyInfo{Family::PR, "PR"},
    FamilyInfo{Family::PM, "PM"},           FamilyInfo{Family::PD, "PD"},
    FamilyInfo{Family::PE, "PE"},           FamilyInfo{Family::PC, "PC"},
    FamilyInfo{Family::IC, "IC"},           FamilyInfo{Family::PMD, "PMD"},
    FamilyInfo{Family::IMD, "IMD"},         FamilyInfo{Family::PRD, "PRD"},
    FamilyInfo{Family::PRD_STAR, "PRD_STAR"}, FamilyInfo{Family::IRD, "IRD"},
    FamilyInfo{Family::IRD_STAR, "IRD_STAR"}, FamilyInfo{Family::C, "C"},
    FamilyInfo{Family::O, "O"},             FamilyInfo{Family::M, "M"},
    FamilyInfo{Family::D, "D"},             FamilyInfo{Family::CN_FULL, "CN_FULL"},
};

// How a family is cut out of PT_n. Monotone families are generated shape by
// shape (domain, convex ordered partition, image run); the rest point by point.
struct Shape {
  bool by_blocks = false;
  bool preserving = false;
  bool reversing = false;
  bool decreasing = false;
  bool extensive = false;
  bool injective = false;
  bool full = false;
  std::size_t min_height = 0;
};

Shape shape_of(Family f) {
  Shape s;
  switch (f) {
    case Family::PT: break;
    case Family::I: s.injective = true; break;
    case Family::PD: s.decreasing = true; break;
    case Family::PE: s.extensive = true; break;
    case Family::D: s.decreasing = s.full = true; break;
    case Family::PO: s.by_blocks = s.preserving = true; break;
    case Family::PR: s.by_blocks = s.reversing = true; break;
    case Family::PM: s.by_blocks = s.preserving = s.reversing = true; break;
    case Family::PC: s.by_blocks = s.preserving = s.decreasing = true; break;
    case Family::IC: s.by_blocks = s.preserving = s.decreasing = s.injective = true; break;
    case Family::PMD: s.by_blocks = s.preserving = s.reversing = s.decreasing = true; break;
    case Family::IMD:
      s.by_blocks = s.preserving = s.reversing = s.decreasing = s.injective = true;
      break;
    case Family::PRD: s.by_blocks = s.reversing = s.decreasing = true; break;
    case Family::PRD_STAR:
      s.by_blocks = s.reversing = s.decreasing = true;
      s.min_height = 2;
      break;
    case Family::IRD: s.by_blocks = s.reversing = s.decreasing = s.injective = true; break;
    case Family::IRD_STAR:
      s.by_blocks = s.reversing = s.decreasing = s.injective = true;
      s.min_height = 2;
      break;
    case Family::O: s.by_blocks = s.preserving = s.full = true; break;
    case Family::M: s.by_blocks = s.preserving = s.reversing = s.full = true; break;
    case Family::C:
    case Family::CN_FULL: s.by_blocks = s.preserving = s.decreasing = s.full = true; break;
  }
  return s;
}

class Collector {
 public:
  Collector(const FamilySpec& spec, std::size_t budget) : spec_(spec), budget_(budget) {}

  void emit(std::span<const std::size_t> images) {
    if (out_.size() >= budget_) {
      throw BudgetExceeded("enumeration of " + spec_.label() + " exceeds the budget of " +
                           std::to_string(budget_) + " elements");
    }
    out_.push_back(PartialTransformation::from_images(images));
  }

  std::vector<PartialTransformation> take() { return std::move(out_); }

 private:
  const FamilySpec& spec_;
  std::size_t budget_;
  std::vector<PartialTransformation> out_;
};

class BlockEnumerator {
 public:
  BlockEnumerator(const Shape& shape, std::size_t n, std::size_t bound, Collector& out)
      : shape_(shape), n_(n), bound_(bound), out_(out) {}

  void run() {
    const PointMask all = (PointMask{1} << n_) - 1;
    for (PointMask dom = 0; dom <= all; ++dom) {
      if (shape_.full && dom != all) continue;
      visit_domain(dom);
    }
  }

 private:
  void visit_domain(PointMask dom) {
    points_ = mask_points(dom);
    const std::size_t t = points_.size();
    if (t == 0) {
      if (shape_.min_height == 0) {
        images_.fill(0);
        out_.emit(std::span(images_.data(), n_));
      }
      return;
    }
    const std::uint32_t gaps = static_cast<std::uint32_t>(t - 1);
    const std::uint32_t all_cuts = gaps == 0 ? 0 : (std::uint32_t{1} << gaps) - 1;
    for (std::uint32_t cuts = 0; cuts <= all_cuts; ++cuts) {
      if (shape_.injective && cuts != all_cuts) continue;
      const std::size_t k = static_cast<std::size_t>(std::popcount(cuts)) + 1;
      if (k > bound_ || k < shape_.min_height) continue;
      split(cuts);
      if (shape_.preserving) assign(0, 0, true);
      // Height <= 1 maps are both preserving and reversing; count them once.
      if (shape_.reversing && (!shape_.preserving || k >= 2)) assign(0, n_ + 1, false);
    }
  }

  void split(std::uint32_t cuts) {
    block_start_.clear();
    block_start_.push_back(0);
    for (std::size_t g = 0; g + 1 < points_.size(); ++g) {
      if (cuts & (std::uint32_t{1} << g)) block_start_.push_back(g + 1);
    }
    block_start_.push_back(points_.size());
  }

  std::size_t blocks() const { return block_start_.size() - 1; }

  void assign(std::size_t i, std::size_t previous, bool increasing) {
    const std::size_t k = blocks();
    if (i == k) {
      images_.fill(0);
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t p = block_start_[b]; p < block_start_[b + 1]; ++p) {
          images_[points_[p] - 1] = chosen_[b];
        }
      }
      out_.emit(std::span(images_.data(), n_));
      return;
    }
    const std::size_t block_min = points_[block_start_[i]];
    const std::size_t block_max = points_[block_start_[i + 1] - 1];
    std::size_t lo = 1;
    std::size_t hi = n_;
    if (shape_.decreasing) hi = std::min(hi, block_min);
    if (shape_.extensive) lo = std::max(lo, block_max);
    const std::size_t remaining = k - i - 1;
    if (increasing) {
      lo = std::max(lo, previous + 1);
      if (n_ < remaining) return;
      hi = std::min(hi, n_ - remaining);
    } else {
      if (previous == 0) return;
      hi = std::min(hi, previous - 1);
      lo = std::max(lo, remaining + 1);
    }
    for (std::size_t y = lo; y <= hi; ++y) {
      chosen_[i] = y;
      assign(i + 1, y, increasing);
    }
  }

  const Shape& shape_;
  std::size_t n_;
  std::size_t bound_;
  Collector& out_;
  PointList points_;
  std::vector<std::size_t> block_start_;
  std::array<std::size_t, kMaxDegree> chosen_{};
  std::array<std::size_t, kMaxDegree> images_{};
};

class PointwiseEnumerator {
 public:
  PointwiseEnumerator(const Shape& shape, std::size_t n, std::size_t bound, Collector& out)
      : shape_(shape), n_(n), bound_(bound), out_(out) {}

  void run() { step(1, 0); }

 private:
  void step(std::size_t x, std::size_t distinct) {
    if (x > n_) {
      out_.emit(std::span(images_.data(), n_));
      return;
    }
    if (!shape_.full) {
      images_[x - 1] = 0;
      step(x + 1, distinct);
    }
    const std::size_t lo = shape_.extensive ? x : 1;
    const std::size_t hi = shape_.decreasing ? x : n_;
    for (std::size_t y = lo; y <= hi; ++y) {
      if (shape_.injective && uses_[y] > 0) continue;
      const bool fresh = uses_[y] == 0;
      if (fresh && distinct + 1 > bound_) continue;
      ++uses_[y];
      images_[x - 1] = y;
      step(x + 1, distinct + (fresh ? 1 : 0));
      --uses_[y];
    }
    images_[x - 1] = 0;
  }

  const Shape& shape_;
  std::size_t n_;
  std::size_t bound_;
  Collector& out_;
  std::array<std::size_t, kMaxDegree> images_{};
  std::array<std::size_t, kMaxDegree + 1> uses_{};
};

bool family_predicate(Family f, const PartialTransformation& a) {
  switch (f) {
    case Family::PT: return true;
    case Family::I: return is_injective(a);
    case Family::PO: return is_order_preserving(a);
    case Family::PR: return is_order_reversing(a);
    case Family::PM: return is_monotone(a);
    case Family::PD: return is_order_decreasing(a);
    case Family::PE: return is_order_increasing(a);
    case Family::PC: return is_order_preserving(a) && is_order_decreasing(a);
    case Family::IC: return is_order_preserving(a) && is_order_decreasing(a) && is_injective(a);
    case Family::PMD: return is_monotone(a) && is_order_decreasing(a);
    case Family::IMD: return is_monotone(a) && is_order_decreasing(a) && is_injective(a);
    case Family::PRD: return is_order_reversing(a) && is_order_decreasing(a);
    case Family::PRD_STAR:
      return is_order_reversing(a) && is_order_decreasing(a) && !is_order_preserving(a);
    case Family::IRD: return is_order_reversing(a) && is_order_decreasing(a) && is_injective(a);
    case Family::IRD_STAR:
      return is_order_reversing(a) && is_order_decreasing(a) && is_injective(a) &&
             !is_order_preserving(a);
    case Family::O: return is_full(a) && is_order_preserving(a);
    case Family::M: return is_full(a) && is_monotone(a);
    case Family::D: return is_full(a) && is_order_decreasing(a);
    case Family::C:
    case Family::CN_FULL: return is_full(a) && is_order_preserving(a) && is_order_decreasing(a);
  }
  return false;
}

std::size_t max_image(const PartialTransformation& a) {
  const PointMask m = a.image_mask();
  return m == 0 ? 0 : static_cast<std::size_t>(std::bit_width(m));
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (const auto& info : kFamilyNames) {
    if (info.family == f) return info.name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (const auto& info : kFamilyNames) {
    if (info.name == name) return info.family;
  }
  if (name == "PRD*") return Family::PRD_STAR;
  if (name == "IRD*") return Family::IRD_STAR;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (const auto& info : kFamilyNames) out.push_back(info.family);
    return out;
  }();
  return families;
}

std::string FamilySpec::label() const {
  std::string out(family_name(family));
  if (image_bound) return out + "(" + std::to_string(degree) + "," + std::to_string(*image_bound) + ")";
  return out + "_" + std::to_string(degree);
}

void validate(const FamilySpec& spec) {
  if (spec.degree == 0 || spec.degree > kMaxDegree) {
    throw std::invalid_argument("degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
  }
  if (spec.image_bound && *spec.image_bound > spec.degree) {
    throw std::invalid_argument("image bound r=" + std::to_string(*spec.image_bound) +
                                " exceeds n=" + std::to_string(spec.degree));
  }
}

bool is_member(const FamilySpec& spec, const PartialTransformation& a) {
  if (a.degree() != spec.degree) return false;
  if (spec.image_bound && a.height() > *spec.image_bound) return false;
  return family_predicate(spec.family, a);
}

std::vector<PartialTransformation> enumerate(const FamilySpec& spec, std::size_t budget) {
  validate(spec);
  if (auto predicted = family_cardinality(spec); predicted && *predicted > budget) {
    throw BudgetExceeded("enumeration of " + spec.label() + " would produce " +
                             to_string(*predicted) + " elements, over the budget of " +
                             std::to_string(budget),
                         to_string(*predicted));
  }
  const Shape shape = shape_of(spec.family);
  const std::size_t bound = spec.image_bound.value_or(spec.degree);
  Collector out(spec, budget);
  if (shape.by_blocks) {
    BlockEnumerator(shape, spec.degree, bound, out).run();
  } else {
    PointwiseEnumerator(shape, spec.degree, bound, out).run();
  }
  auto elements = out.take();
  sort_canonical(elements);
  return elements;
}

std::vector<PartialTransformation> filter_oracle(const FamilySpec& spec) {
  validate(spec);
  if (spec.degree > kOracleMaxDegree) {
    throw std::invalid_argument("filter oracle limited to n <= " + std::to_string(kOracleMaxDegree));
  }
  const std::size_t n = spec.degree;
  std::vector<std::size_t> images(n, 0);
  std::vector<PartialTransformation> out;
  while (true) {
    auto a = PartialTransformation::from_images(images);
    if (is_member(spec, a)) out.push_back(a);
    std::size_t x = 0;
    while (x < n && images[x] == n) images[x++] = 0;
    if (x == n) break;
    ++images[x];
  }
  sort_canonical(out);
  return out;
}

std::string_view layer_name(LayerKind k) noexcept {
  switch (k) {
    case LayerKind::Q: return "Q";
    case LayerKind::K: return "K_r";
    case LayerKind::K_i: return "K_r_i";
    case LayerKind::K_s: return "K_r_s";
    case LayerKind::J: return "J_r";
    case LayerKind::J_i: return "J_r_i";
    case LayerKind::L: return "L_r";
    case LayerKind::L_i: return "L_r_i";
    case LayerKind::EJ: return "E(J_r)";
  }
  return "?";
}

std::optional<LayerKind> parse_layer(std::string_view name) noexcept {
  for (auto k : {LayerKind::Q, LayerKind::K, LayerKind::K_i, LayerKind::K_s, LayerKind::J,
                 LayerKind::J_i, LayerKind::L, LayerKind::L_i, LayerKind::EJ}) {
    if (layer_name(k) == name) return k;
  }
  if (name == "K") return LayerKind::K;
  if (name == "K_i") return LayerKind::K_i;
  if (name == "K_s") return LayerKind::K_s;
  if (name == "J") return LayerKind::J;
  if (name == "J_i") return LayerKind::J_i;
  if (name == "L") return LayerKind::L;
  if (name == "L_i") return LayerKind::L_i;
  if (name == "EJ" || name == "E_J_r") return LayerKind::EJ;
  return std::nullopt;
}

std::string LayerSpec::label() const {
  std::string out(layer_name(kind));
  out += "(n=" + std::to_string(degree) + (kind == LayerKind::Q ? ",m=" : ",r=") +
         std::to_string(param);
  if (s) out += ",s=" + std::to_string(*s);
  return out + ")";
}

void validate(const LayerSpec& spec) {
  const std::size_t n = spec.degree;
  if (n == 0 || n > kMaxDegree) {
    throw std::invalid_argument("degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
  }
  if (spec.param > n) {
    throw std::invalid_argument(spec.label() + ": parameter exceeds n");
  }
  if (spec.kind == LayerKind::K_s) {
    const std::size_t r = spec.param;
    if (!spec.s || r < 2 || *spec.s < r || *spec.s + r > n + 1) {
      throw std::invalid_argument(spec.label() + ": K_r(s) needs 2 <= r <= s <= n-r+1");
    }
  }
}

bool is_member(const LayerSpec& spec, const PartialTransformation& a) {
  const std::size_t n = spec.degree;
  const std::size_t r = spec.param;
  auto in = [&](Family f) { return is_member(FamilySpec{f, n, std::nullopt}, a); };
  switch (spec.kind) {
    case LayerKind::Q:
      return in(Family::PRD) && max_image(a) == r;
    case LayerKind::K:
      return in(Family::PRD_STAR) && a.height() == r;
    case LayerKind::K_i:
      return in(Family::IRD_STAR) && a.height() == r;
    case LayerKind::K_s:
      return in(Family::PRD_STAR) && a.height() == r && max_image(a) == spec.s.value_or(0);
    case LayerKind::J:
      return in(Family::PC) && a.height() == r;
    case LayerKind::J_i:
      return in(Family::IC) && a.height() == r;
    case LayerKind::L:
      return in(Family::PMD) && a.height() == r;
    case LayerKind::L_i:
      return in(Family::IMD) && a.height() == r;
    case LayerKind::EJ:
      return in(Family::PC) && a.height() == r && is_idempotent(a);
  }
  return false;
}

std::vector<PartialTransformation> enumerate_layer(const LayerSpec& spec, std::size_t budget) {
  validate(spec);
  Family parent = Family::PMD;
  switch (spec.kind) {
    case LayerKind::Q: parent = Family::PRD; break;
    case LayerKind::K:
    case LayerKind::K_s: parent = Family::PRD_STAR; break;
    case LayerKind::K_i: parent = Family::IRD_STAR; break;
    case LayerKind::J:
    case LayerKind::EJ: parent = Family::PC; break;
    case LayerKind::J_i: parent = Family::IC; break;
    case LayerKind::L: parent = Family::PMD; break;
    case LayerKind::L_i: parent = Family::IMD; break;
  }
  std::optional<std::size_t> bound;
  if (spec.kind != LayerKind::Q) bound = spec.param;
  auto candidates = enumerate(FamilySpec{parent, spec.degree, bound}, budget);
  std::vector<PartialTransformation> out;
  for (const auto& a : candidates) {
    if (is_member(spec, a)) out.push_back(a);
  }
  return out;
}

void sort_canonical(std::vector<PartialTransformation>& elements) {
  std::vector<std::string> keys;
  keys.reserve(elements.size());
  for (const auto& a : elements) keys.push_back(format(a));
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return keys[i] < keys[j]; });
  std::vector<PartialTransformation> sorted;
  sorted.reserve(elements.size());
  for (std::size_t i : order) sorted.push_back(elements[i]);
  elements = std::move(sorted);
}

}  // namespace pmd
