#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pmd/families.hpp"
#include "pmd/report.hpp"
#include "pmd/semigroup.hpp"
#include "pmd/transformation.hpp"

namespace pmd {

struct GeneratingSet {
  std::size_t degree = 0;
  std::vector<PartialTransformation> elements;  // canonical order, no repeats
  std::string label;
};

/// A word whose left-to-right product is `target`.
struct Factorization {
  PartialTransformation target;
  std::vector<PartialTransformation> parts;

  PartialTransformation product() const;
};

/// min(r, floor((n+1)/2)); requires 2 <= r <= n.
std::size_t r_hat(std::size_t n, std::size_t r);

/// The reversing run s+i -> s-i on [s, 2s-1]; 2 <= s <= r_hat.
PartialTransformation gamma(std::size_t s, std::size_t n, std::size_t r);
/// The reversing run of length r_hat starting at s; r_hat+1 <= s <= n-r_hat.
PartialTransformation delta(std::size_t s, std::size_t n, std::size_t r);
/// The reversing run on [s, n]; n-r_hat+1 <= s <= n-1.
PartialTransformation lambda_map(std::size_t s, std::size_t n, std::size_t r);
/// The reversing run of length k starting at s; k >= 2, s >= k, s+k-1 <= n.
PartialTransformation gamma_ks(std::size_t k, std::size_t s, std::size_t n);

/// The n-2 reversing generators, one fixing each s in [2, n-1].
GeneratingSet build_D(std::size_t n, std::size_t r);
/// Idempotents of PC_n of height exactly r; 2 <= r <= n-1.
GeneratingSet build_E_Jr(std::size_t n, std::size_t r);
/// Partial identities of size r plus the maps delta^a_Y; 2 <= r <= n-1.
GeneratingSet build_Er_Fr(std::size_t n, std::size_t r);
/// The map fixing Y pointwise and sending a to a-1.
PartialTransformation delta_aY(std::size_t a, const PointList& y, std::size_t n);

/// Minimal generating sets; r = n adds 1_n to the (n, n-1) set.
GeneratingSet pmd_generating_set(std::size_t n, std::size_t r);
GeneratingSet imd_generating_set(std::size_t n, std::size_t r);

Semigroup closure(const GeneratingSet& gens, std::size_t budget = kDefaultBudget);

/// Writes an element of PRD*(n, r) as beta1 * gamma_{k,s} * beta2, with
/// gamma_{k,s} replaced by 1_Y * (generator fixing s) when it is not itself
/// in D. Throws if `a` is not order-reversing, decreasing and of height >= 2.
Factorization factorize_reversing(const PartialTransformation& a, std::size_t n, std::size_t r);

bool is_undecomposable(const Semigroup& s, const PartialTransformation& a);
/// Flags every undecomposable element in one pass over the table.
Subset undecomposables(const Semigroup& s);

/// Order-reversing elements of height >= 2 fixing s, by s in [2, n-1].
std::vector<std::vector<Semigroup::Index>> fix_classes(const Semigroup& s);

/// Generating-set and rank checks for PMD(n, r) or IMD(n, r), 2 <= r <= n.
Report verify_rank(const FamilySpec& family);

}  // namespace pmd
