#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmd/families.hpp"
#include "pmd/report.hpp"

namespace pmd {

/// Exact non-negative integer; all cardinalities and ranks use it.
using Count = boost::multiprecision::cpp_int;

std::string to_string(const Count& c);

Count binomial(std::size_t n, std::size_t k);
Count pow2(std::size_t e);

/// Fibonacci numbers with f(0) = 0, f(1) = 1.
Count fib(std::size_t k);

/// |Q(n, m)|: order-reversing decreasing maps with largest image m.
Count q(std::size_t n, std::size_t m);
/// The tabulated closed forms for m = 2 (n >= 2) and m = 3 (n >= 3).
Count q2_closed(std::size_t n);
Count q3_closed(std::size_t n);

/// |PRD_n| via the three-term recurrence, with |PRD_0| = 1.
Count card_PRD(std::size_t n);
Count card_PRD_star(std::size_t n);
Count card_PC(std::size_t n);
Count card_PMD(std::size_t n);

/// True iff K_r (and K_r^i) is nonempty on the n-chain.
bool k_range_nonempty(std::size_t n, std::size_t r) noexcept;
/// Heights-r layers of PRD*_n and IRD*_n; 0 outside the nonempty range.
Count card_K(std::size_t n, std::size_t r);
Count card_K_i(std::size_t n, std::size_t r);
/// |K_r(s)|: the part of K_r with largest image s.
Count card_K_s(std::size_t n, std::size_t r, std::size_t s);

Count narayana(std::size_t n, std::size_t r);
Count catalan(std::size_t n);
Count card_J_i(std::size_t n, std::size_t r);
Count card_IC(std::size_t n, std::size_t r);
Count card_IO(std::size_t n, std::size_t r);
Count card_IMD(std::size_t n, std::size_t r);

/// Ranks; r = n gives the full semigroups.
Count rank_PMD(std::size_t n, std::size_t r);
Count rank_IMD(std::size_t n, std::size_t r);
Count rank_PC(std::size_t n, std::size_t r);
Count rank_IC(std::size_t n, std::size_t r);

/// C(n, r) = |E(J_r)| by its recurrence; c_table_closed is the binomial sum.
Count c_table(std::size_t n, std::size_t r);
Count c_table_closed(std::size_t n, std::size_t r);
Count card_E_PMD(std::size_t n, std::size_t r);

/// Formula cardinality of a family, when one is known.
std::optional<Count> family_cardinality(const FamilySpec& spec);
std::optional<Count> layer_cardinality(const LayerSpec& spec);

/// One row of the q(n, m) table: q(n, 0..n), |PRD_n|, |PRD*_n|.
struct Table1Row {
  std::size_t n = 0;
  std::vector<Count> q;
  Count prd;
  Count prd_star;
};
std::vector<Table1Row> table1(std::size_t max_n);
/// CSV with header `n,m=0,...,m=<max_n>,PRD_n,PRD*_n`.
std::string table1_csv(std::size_t max_n);

/// Every formula at degree n against enumeration of the family or layer.
Report verify_counts(std::size_t n, std::size_t budget = kDefaultBudget);

}  // namespace pmd
