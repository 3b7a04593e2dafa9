#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pmd/transformation.hpp"

namespace pmd {

inline constexpr std::size_t kDefaultBudget = 10'000'000;

/// Raised when an enumeration or closure would exceed its element budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::optional<std::string> predicted = std::nullopt)
      : std::runtime_error(what), predicted_(std::move(predicted)) {}
  const std::optional<std::string>& predicted() const noexcept { return predicted_; }

 private:
  std::optional<std::string> predicted_;
};

enum class Family {
  PT,        // all partial maps
  I,         // injective
  PO,        // order-preserving
  PR,        // order-reversing
  PM,        // monotone
  PD,        // order-decreasing
  PE,        // extensive
  PC,        // order-preserving and decreasing
  IC,
  PMD,       // monotone and decreasing
  IMD,
  PRD,       // order-reversing and decreasing
  PRD_STAR,  // PRD minus PC
  IRD,
  IRD_STAR,  // IMD minus IC
  C,         // full order-preserving decreasing (alias of CN_FULL)
  O,         // full order-preserving
  M,         // full monotone
  D,         // full decreasing
  CN_FULL,
};

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;
const std::vector<Family>& all_families();

struct FamilySpec {
  Family family = Family::PMD;
  std::size_t degree = 1;
  std::optional<std::size_t> image_bound;

  std::string label() const;
};

/// Throws std::invalid_argument on an out-of-range degree or image bound.
void validate(const FamilySpec& spec);

/// Membership by the defining predicates, including the image bound.
bool is_member(const FamilySpec& spec, const PartialTransformation& a);

/// All members, each once, sorted by canonical text form.
std::vector<PartialTransformation> enumerate(const FamilySpec& spec,
                                             std::size_t budget = kDefaultBudget);

/// Slow reference: walks all (n+1)^n partial maps and keeps members.
std::vector<PartialTransformation> filter_oracle(const FamilySpec& spec);
inline constexpr std::size_t kOracleMaxDegree = 8;

enum class LayerKind {
  Q,    // PRD with max image m
  K,    // PRD* with height r
  K_i,  // IRD* with height r
  K_s,  // K_r with max image s
  J,    // PC with height r
  J_i,  // IC with height r
  L,    // PMD with height r
  L_i,  // IMD with height r
  EJ,   // idempotents of J_r
};

std::string_view layer_name(LayerKind k) noexcept;
std::optional<LayerKind> parse_layer(std::string_view name) noexcept;

struct LayerSpec {
  LayerKind kind = LayerKind::Q;
  std::size_t degree = 1;
  std::size_t param = 0;  // m for Q, r otherwise
  std::optional<std::size_t> s;

  std::string label() const;
};

void validate(const LayerSpec& spec);
bool is_member(const LayerSpec& spec, const PartialTransformation& a);
std::vector<PartialTransformation> enumerate_layer(const LayerSpec& spec,
                                                   std::size_t budget = kDefaultBudget);

/// Sorts by canonical text form and drops nothing; ordering used everywhere.
void sort_canonical(std::vector<PartialTransformation>& elements);

/// floor((n + 1) / 2), the largest height of an element of PRD*_n.
constexpr std::size_t half_ceiling(std::size_t n) noexcept { return (n + 1) / 2; }

}  // namespace pmd
