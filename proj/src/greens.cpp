#include "pmd/greens.hpp"

#include <numeric>
#include <stdexcept>

namespace pmd {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

// x -> product(x) over S^1 (index size stands for the adjoined unit), with labels
// numbered by first occurrence so that equal kernels give equal vectors.
template <typename Product>
std::vector<std::uint32_t> cancellation_signature(std::size_t size, Product&& product) {
  std::vector<std::uint32_t> label(size, UINT32_MAX);
  std::vector<std::uint32_t> sig(size + 1);
  std::uint32_t next = 0;
  for (std::size_t x = 0; x <= size; ++x) {
    const auto p = product(x);
    auto& l = label[p];
    if (l == UINT32_MAX) l = next++;
    sig[x] = l;
  }
  return sig;
}

}  // namespace

std::string_view relation_name(Relation r) noexcept {
  switch (r) {
    case Relation::R: return "R";
    case Relation::L: return "L";
    case Relation::H: return "H";
    case Relation::D: return "D";
    case Relation::J: return "J";
    case Relation::Rstar: return "R*";
    case Relation::Lstar: return "L*";
    case Relation::Hstar: return "H*";
    case Relation::Dstar: return "D*";
  }
  return "?";
}

bool Partition::refines(const Partition& coarser) const {
  std::vector<std::uint32_t> image(count, UINT32_MAX);
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    auto& m = image[class_of[i]];
    if (m == UINT32_MAX) m = coarser.class_of[i];
    else if (m != coarser.class_of[i]) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> Partition::classes() const {
  std::vector<std::vector<std::uint32_t>> out(count);
  for (std::size_t i = 0; i < class_of.size(); ++i) out[class_of[i]].push_back(static_cast<std::uint32_t>(i));
  return out;
}

Partition Partition::intersection(const Partition& a, const Partition& b) {
  return by_key<std::pair<std::uint32_t, std::uint32_t>>(
      a.class_of.size(), [&](std::size_t i) { return std::pair{a.class_of[i], b.class_of[i]}; });
}

Partition Partition::join(const Partition& a, const Partition& b) {
  const std::size_t n = a.class_of.size();
  UnionFind uf(n);
  std::vector<std::uint32_t> first_a(a.count, UINT32_MAX), first_b(b.count, UINT32_MAX);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto& fa = first_a[a.class_of[i]];
    if (fa == UINT32_MAX) fa = i; else uf.unite(i, fa);
    auto& fb = first_b[b.class_of[i]];
    if (fb == UINT32_MAX) fb = i; else uf.unite(i, fb);
  }
  return by_key<std::uint32_t>(n, [&](std::size_t i) { return uf.find(static_cast<std::uint32_t>(i)); });
}

const Partition& GreensStructure::operator[](Relation r) const {
  const auto& p = parts_[index(r)];
  if (!p) throw std::logic_error(std::string("relation ") + std::string(relation_name(r)) + " not computed");
  return *p;
}

GreensStructure greens(const Semigroup& s) {
  const std::size_t n = s.size();
  const std::size_t w = words_for(n);
  std::vector<Bits> right(n, Bits(w, 0)), left(n, Bits(w, 0));
  for (std::size_t a = 0; a < n; ++a) {
    set_bit(right[a], a);
    set_bit(left[a], a);
    for (std::size_t x = 0; x < n; ++x) {
      set_bit(right[a], s.product(a, x));
      set_bit(left[a], s.product(x, a));
    }
  }
  // S^1 a S^1 is the union of the right ideals of the members of S^1 a.
  std::vector<Bits> two_sided(n, Bits(w, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!((left[a][b / 64] >> (b % 64)) & 1U)) continue;
      for (std::size_t k = 0; k < w; ++k) two_sided[a][k] |= right[b][k];
    }
  }
  GreensStructure g(s);
  g.set(Relation::R, Partition::by_key<Bits>(n, [&](std::size_t i) { return right[i]; }));
  g.set(Relation::L, Partition::by_key<Bits>(n, [&](std::size_t i) { return left[i]; }));
  g.set(Relation::J, Partition::by_key<Bits>(n, [&](std::size_t i) { return two_sided[i]; }));
  g.set(Relation::H, Partition::intersection(g[Relation::R], g[Relation::L]));
  g.set(Relation::D, Partition::join(g[Relation::R], g[Relation::L]));
  return g;
}

GreensStructure starred_greens(const Semigroup& s) {
  const std::size_t n = s.size();
  // a L* b iff ax = ay <=> bx = by for x, y in S^1; R* dually.
  auto lstar_key = [&](std::size_t a) {
    return cancellation_signature(n, [&](std::size_t x) { return x == n ? a : s.product(a, x); });
  };
  auto rstar_key = [&](std::size_t a) {
    return cancellation_signature(n, [&](std::size_t x) { return x == n ? a : s.product(x, a); });
  };
  GreensStructure g(s);
  g.set(Relation::Lstar, Partition::by_key<std::vector<std::uint32_t>>(n, lstar_key));
  g.set(Relation::Rstar, Partition::by_key<std::vector<std::uint32_t>>(n, rstar_key));
  g.set(Relation::Hstar, Partition::intersection(g[Relation::Rstar], g[Relation::Lstar]));
  g.set(Relation::Dstar, Partition::join(g[Relation::Rstar], g[Relation::Lstar]));
  return g;
}

GreensStructure all_greens(const Semigroup& s) {
  GreensStructure g = greens(s);
  GreensStructure star = starred_greens(s);
  for (auto r : {Relation::Rstar, Relation::Lstar, Relation::Hstar, Relation::Dstar}) g.set(r, star[r]);
  return g;
}

BinaryRelation::BinaryRelation(std::size_t size)
    : size_(size), words_(words_for(size)), bits_(size * words_, 0) {}

BinaryRelation BinaryRelation::from(const Partition& p) {
  BinaryRelation out(p.class_of.size());
  for (const auto& cls : p.classes()) {
    for (auto a : cls) {
      for (auto b : cls) out.set(a, b);
    }
  }
  return out;
}

BinaryRelation BinaryRelation::then(const BinaryRelation& other) const {
  if (other.size_ != size_) throw std::invalid_argument("relation sizes differ");
  BinaryRelation out(size_);
  for (std::size_t a = 0; a < size_; ++a) {
    std::uint64_t* row = &out.bits_[a * words_];
    for (std::size_t b = 0; b < size_; ++b) {
      if (!test(a, b)) continue;
      const std::uint64_t* src = &other.bits_[b * words_];
      for (std::size_t k = 0; k < words_; ++k) row[k] |= src[k];
    }
  }
  return out;
}

bool BinaryRelation::subset_of(const BinaryRelation& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> BinaryRelation::witness_outside(
    const BinaryRelation& other) const {
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (test(a, b) && !other.test(a, b)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace pmd
