#pragma once

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pmd/semigroup.hpp"

namespace pmd {

enum class Relation { R, L, H, D, J, Rstar, Lstar, Hstar, Dstar };

std::string_view relation_name(Relation r) noexcept;

/// An equivalence on element indices, as a class label per element.
/// Labels are numbered in order of first occurrence.
struct Partition {
  std::vector<std::uint32_t> class_of;
  std::size_t count = 0;

  bool related(std::size_t a, std::size_t b) const { return class_of[a] == class_of[b]; }
  bool is_equality() const noexcept { return count == class_of.size(); }
  bool refines(const Partition& coarser) const;
  std::vector<std::vector<std::uint32_t>> classes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Partition whose classes are the equal-key groups.
  template <typename Key, typename KeyOf>
  static Partition by_key(std::size_t size, KeyOf&& key_of);
  static Partition intersection(const Partition& a, const Partition& b);
  static Partition join(const Partition& a, const Partition& b);
};

class GreensStructure {
 public:
  explicit GreensStructure(const Semigroup& base) : base_(&base) {}

  const Semigroup& base() const noexcept { return *base_; }
  bool has(Relation r) const { return parts_[index(r)].has_value(); }
  const Partition& operator[](Relation r) const;
  void set(Relation r, Partition p) { parts_[index(r)] = std::move(p); }

 private:
  static std::size_t index(Relation r) { return static_cast<std::size_t>(r); }
  const Semigroup* base_;
  std::array<std::optional<Partition>, 9> parts_;
};

/// R, L, H, D, J from principal ideals over S^1.
GreensStructure greens(const Semigroup& s);
/// R*, L*, H*, D* by the cancellation test over S^1.
GreensStructure starred_greens(const Semigroup& s);
GreensStructure all_greens(const Semigroup& s);

/// Dense relation on element indices, rows as bitsets.
class BinaryRelation {
 public:
  explicit BinaryRelation(std::size_t size);
  static BinaryRelation from(const Partition& p);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t a, std::size_t b) const {
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  void set(std::size_t a, std::size_t b) { bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }

  /// (a, c) with a this b and b other c.
  BinaryRelation then(const BinaryRelation& other) const;
  bool subset_of(const BinaryRelation& other) const;
  /// Some pair in this but not in other.
  std::optional<std::pair<std::size_t, std::size_t>> witness_outside(const BinaryRelation& other) const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  std::size_t size_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

template <typename Key, typename KeyOf>
Partition Partition::by_key(std::size_t size, KeyOf&& key_of) {
  std::vector<std::pair<Key, std::uint32_t>> keyed;
  keyed.reserve(size);
  for (std::size_t i = 0; i < size; ++i) keyed.emplace_back(key_of(i), static_cast<std::uint32_t>(i));
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::uint32_t> group(size);
  std::uint32_t g = 0;
  for (std::size_t i = 0; i < size; ++i) {
    if (i > 0 && keyed[i].first != keyed[i - 1].first) ++g;
    group[keyed[i].second] = g;
  }
  // Renumber by first occurrence.
  Partition p;
  p.class_of.assign(size, 0);
  std::vector<std::uint32_t> label(size, UINT32_MAX);
  for (std::size_t i = 0; i < size; ++i) {
    auto& l = label[group[i]];
    if (l == UINT32_MAX) l = static_cast<std::uint32_t>(p.count++);
    p.class_of[i] = l;
  }
  return p;
}

}  // namespace pmd
