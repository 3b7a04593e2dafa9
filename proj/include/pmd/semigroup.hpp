#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pmd/families.hpp"
#include "pmd/transformation.hpp"

namespace pmd {

/// Membership flags over the elements of a Semigroup, indexed like it.
using Subset = std::vector<bool>;

/// A finite, multiplication-closed set of partial transformations with an
/// index-based product.
///
/// Up to kMaxTableSize elements the full Cayley table is stored; above that,
/// products are computed by composition and looked up by hash.
class Semigroup {
 public:
  using Index = std::uint32_t;
  static constexpr std::size_t kMaxTableSize = 4096;

  /// Takes ownership of `elements` (no duplicates allowed). Throws
  /// std::invalid_argument if the set is not closed under composition.
  Semigroup(std::vector<PartialTransformation> elements, std::string origin,
            std::size_t diameter = 0);

  struct TrustedClosed {};
  /// As above, but skips the closure check when no table is stored.
  Semigroup(TrustedClosed, std::vector<PartialTransformation> elements, std::string origin,
            std::size_t diameter);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const std::string& origin() const noexcept { return origin_; }
  /// Longest shortest-word length over the generators; 0 when not built by closure.
  std::size_t diameter() const noexcept { return diameter_; }

  const PartialTransformation& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<PartialTransformation>& elements() const noexcept { return elements_; }

  std::optional<Index> find(const PartialTransformation& a) const;
  Index index_of(const PartialTransformation& a) const;  // throws if absent
  bool contains(const PartialTransformation& a) const { return find(a).has_value(); }

  Index product(std::size_t i, std::size_t j) const {
    if (!table_.empty()) return table_[i * elements_.size() + j];
    return index_of(compose(elements_[i], elements_[j]));
  }

  bool has_table() const noexcept { return !table_.empty(); }

  /// Packed keys sorted ascending; equal iff the element sets are equal.
  std::vector<std::uint64_t> sorted_keys() const;

  /// Index sets of its members, sorted.
  std::vector<Index> indices_of(const std::vector<PartialTransformation>& members) const;

  Subset mask_of(const std::vector<PartialTransformation>& members) const;

 private:
  Semigroup(std::vector<PartialTransformation> elements, std::string origin, std::size_t diameter,
            bool verify);

  std::vector<PartialTransformation> elements_;
  std::unordered_map<std::uint64_t, Index> index_;
  std::vector<Index> table_;
  std::string origin_;
  std::size_t degree_ = 0;
  std::size_t diameter_ = 0;
};

/// Materializes a family as a semigroup (the family must be closed).
Semigroup materialize(const FamilySpec& spec, std::size_t budget = kDefaultBudget);

/// Least product-closed superset of `generators` (breadth-first over right
/// multiplication by generators). Records the diameter.
Semigroup closure(const std::vector<PartialTransformation>& generators, std::string origin,
                  std::size_t budget = kDefaultBudget);

/// Closure inside `s` of the members flagged in `seed`.
Subset close_within(const Semigroup& s, Subset seed);

/// True iff the flagged members form a subsemigroup of `s`.
bool is_closed_within(const Semigroup& s, const Subset& members);

/// Same element set, ignoring order.
bool same_elements(const std::vector<PartialTransformation>& a,
                   const std::vector<PartialTransformation>& b);

}  // namespace pmd
