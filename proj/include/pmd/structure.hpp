#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmd/families.hpp"
#include "pmd/greens.hpp"
#include "pmd/report.hpp"
#include "pmd/semigroup.hpp"
#include "pmd/transformation.hpp"

namespace pmd {

Subset idempotents(const Semigroup& s);
/// Elements a with a b a = a for some b in S.
Subset regular_elements(const Semigroup& s);

/// The element a' with a a' a = a used to show the family sits inside a
/// regular semigroup as an inverse ideal: min-preimage map for PMD, the set
/// inverse for IMD.
PartialTransformation inverse_ideal_witness(const PartialTransformation& a, Family family);

/// First-principles Green's relations against their characterizations.
Report verify_greens(const FamilySpec& family);
Report verify_starred_greens(const FamilySpec& family);
Report verify_dstar_factorizations(const FamilySpec& family);
Report verify_abundance(const FamilySpec& family);
Report verify_regularity(const FamilySpec& family);
/// Every element of PRD*_n satisfies a^3 = a^2, and no nonempty K_r is all idempotents.
Report verify_quasi_idempotents(std::size_t n);
Report verify_PD_greens(std::size_t n, std::size_t r);

struct BracketClass {
  PartialTransformation anchor;
  std::vector<PartialTransformation> members;  // canonical order
};

/// Extensions of alpha by points above max(dom alpha), each sent to
/// min(im alpha). Throws unless alpha is in D_rhat for (n, r).
BracketClass bracket_class(const PartialTransformation& alpha, std::size_t n, std::size_t r);

enum class WitnessKind {
  removed_idempotent,
  removed_bracket_class,
  removed_undecomposable,
  truncation,
  truncation_plus_identity,
};

std::string_view witness_kind_name(WitnessKind k) noexcept;

struct CatalogEntry {
  WitnessKind kind;
  std::optional<PartialTransformation> witness;  // absent for the truncation
  std::optional<WitnessKind> inner_kind;         // for truncation_plus_identity
  std::vector<PartialTransformation> elements;   // canonical order
};

struct MaximalSubsemigroupCatalog {
  FamilySpec family;
  std::vector<CatalogEntry> entries;
};

/// The classified maximal subsemigroups of PMD(n, r) or IMD(n, r),
/// 2 <= r <= n; r = n (or no bound) goes through the (n, n-1) truncation.
MaximalSubsemigroupCatalog maximal_subsemigroups(const FamilySpec& family,
                                                 std::size_t budget = kDefaultBudget);

/// True iff `candidate` is a proper subsemigroup and adding any excluded
/// element generates all of `s`. Writes the reason for a false into `why`.
bool verify_maximal(const Semigroup& s, const Subset& candidate, Json* why = nullptr);

/// Maximal subsemigroups found without the classification: the complement of
/// a maximal subsemigroup lies in a single J-class, so each J-class is
/// searched for its inclusion-minimal removable subsets. Throws if a J-class
/// has more than `max_class` elements.
std::vector<Subset> exhaustive_maximal_subsemigroups(const Semigroup& s, std::size_t max_class = 22);

/// Catalog entries pass verify_maximal, counts match, and (n <= 4) the
/// exhaustive search finds exactly the catalog. PMD also checks that
/// <PC(n, r), beta> contains [alpha] for every beta in [alpha].
Report verify_maximal_catalog(const FamilySpec& family);

}  // namespace pmd
