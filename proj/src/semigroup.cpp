#include "pmd/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmd {

Semigroup::Semigroup(std::vector<PartialTransformation> elements, std::string origin,
                     std::size_t diameter)
    : Semigroup(std::move(elements), std::move(origin), diameter, true) {}

Semigroup::Semigroup(TrustedClosed, std::vector<PartialTransformation> elements,
                     std::string origin, std::size_t diameter)
    : Semigroup(std::move(elements), std::move(origin), diameter, false) {}

Semigroup::Semigroup(std::vector<PartialTransformation> elements, std::string origin,
                     std::size_t diameter, bool verify)
    : elements_(std::move(elements)), origin_(std::move(origin)), diameter_(diameter) {
  if (elements_.empty()) throw std::invalid_argument("a semigroup needs at least one element");
  degree_ = elements_.front().degree();
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].degree() != degree_) {
      throw std::invalid_argument(origin_ + ": elements of mixed degree");
    }
    if (!index_.emplace(elements_[i].pack(), static_cast<Index>(i)).second) {
      throw std::invalid_argument(origin_ + ": duplicate element " + format(elements_[i]));
    }
  }
  const std::size_t n = elements_.size();
  auto lookup = [&](std::size_t i, std::size_t j) {
    const auto product = compose(elements_[i], elements_[j]);
    const auto it = index_.find(product.pack());
    if (it == index_.end()) {
      throw std::invalid_argument(origin_ + ": not closed, " + format(elements_[i]) + " * " +
                                  format(elements_[j]) + " = " + format(product));
    }
    return it->second;
  };
  if (n <= kMaxTableSize) {
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) table_[i * n + j] = lookup(i, j);
    }
  } else if (verify) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) lookup(i, j);
    }
  }
}

std::optional<Semigroup::Index> Semigroup::find(const PartialTransformation& a) const {
  if (a.degree() != degree_) return std::nullopt;
  const auto it = index_.find(a.pack());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Semigroup::Index Semigroup::index_of(const PartialTransformation& a) const {
  if (auto i = find(a)) return *i;
  throw std::invalid_argument(format(a) + " is not an element of " + origin_);
}

std::vector<std::uint64_t> Semigroup::sorted_keys() const {
  std::vector<std::uint64_t> keys;
  keys.reserve(elements_.size());
  for (const auto& a : elements_) keys.push_back(a.pack());
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<Semigroup::Index> Semigroup::indices_of(
    const std::vector<PartialTransformation>& members) const {
  std::vector<Index> out;
  out.reserve(members.size());
  for (const auto& a : members) out.push_back(index_of(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subset Semigroup::mask_of(const std::vector<PartialTransformation>& members) const {
  Subset mask(size(), false);
  for (const auto& a : members) mask[index_of(a)] = true;
  return mask;
}

Semigroup materialize(const FamilySpec& spec, std::size_t budget) {
  return Semigroup(enumerate(spec, budget), spec.label());
}

Semigroup closure(const std::vector<PartialTransformation>& generators, std::string origin,
                  std::size_t budget) {
  if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
  std::vector<PartialTransformation> gens = generators;
  sort_canonical(gens);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const std::size_t degree = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generators of mixed degree");
  }

  std::vector<PartialTransformation> elements;
  std::vector<std::size_t> word_length;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  auto admit = [&](const PartialTransformation& a, std::size_t length) {
    if (seen.emplace(a.pack(), elements.size()).second) {
      if (elements.size() >= budget) {
        throw BudgetExceeded("closure of " + origin + " exceeds the budget of " +
                                 std::to_string(budget) + " elements",
                             std::to_string(elements.size()) + "+");
      }
      elements.push_back(a);
      word_length.push_back(length);
    }
  };
  for (const auto& g : gens) admit(g, 1);
  // Every element is a word in the generators, so right multiplication by
  // generators in BFS order reaches everything with shortest word lengths.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) admit(compose(elements[i], g), word_length[i] + 1);
  }
  const std::size_t diameter = *std::max_element(word_length.begin(), word_length.end());
  return Semigroup(Semigroup::TrustedClosed{}, std::move(elements), std::move(origin), diameter);
}

Subset close_within(const Semigroup& s, Subset seed) {
  std::vector<Semigroup::Index> members;
  for (std::size_t i = 0; i < seed.size(); ++i) {
    if (seed[i]) members.push_back(static_cast<Semigroup::Index>(i));
  }
  // Products among the seed are generated as the worklist advances: each
  // newly processed element is multiplied with every earlier one.
  for (std::size_t next = 0; next < members.size(); ++next) {
    const auto e = members[next];
    for (std::size_t k = 0; k <= next; ++k) {
      const auto m = members[k];
      for (auto p : {s.product(e, m), s.product(m, e)}) {
        if (!seed[p]) {
          seed[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  return seed;
}

bool is_closed_within(const Semigroup& s, const Subset& members) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!members[i]) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (members[j] && !members[s.product(i, j)]) return false;
    }
  }
  return true;
}

bool same_elements(const std::vector<PartialTransformation>& a,
                   const std::vector<PartialTransformation>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::uint64_t> ka, kb;
  for (const auto& x : a) ka.push_back(x.pack());
  for (const auto& x : b) kb.push_back(x.pack());
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

}  // namespace pmd
