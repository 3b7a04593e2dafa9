#include "pmd/counting.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pmd {

namespace {

// Exact division; an inexact quotient means a formula was transcribed wrongly.
Count exact_div(const Count& num, const Count& den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw std::logic_error(std::string("inexact division in ") + what);
  }
  return num / den;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string args(std::size_t n, std::size_t r) {
  return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
}

template <typename Key>
class Memo {
 public:
  template <typename F>
  Count get(const Key& key, F&& compute) {
    {
      std::lock_guard lock(mu_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Count value = compute();
    std::lock_guard lock(mu_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, Count> table_;
};

Memo<std::pair<std::size_t, std::size_t>>& q_memo() {
  static Memo<std::pair<std::size_t, std::size_t>> memo;
  return memo;
}

Memo<std::pair<std::size_t, std::size_t>>& c_memo() {
  static Memo<std::pair<std::size_t, std::size_t>> memo;
  return memo;
}

// Number of height-r idempotents of PC_n: one per subset of size k and
// convex ordered partition of it into r blocks.
Count height_r_idempotents(std::size_t n, std::size_t r) {
  Count total = 0;
  for (std::size_t k = r; k <= n; ++k) total += binomial(n, k) * binomial(k - 1, r - 1);
  return total;
}

}  // namespace

std::string to_string(const Count& c) { return c.str(); }

Count binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Count pow2(std::size_t e) { return Count(1) << e; }

Count fib(std::size_t k) {
  Count a = 0, b = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Count next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

Count q(std::size_t n, std::size_t m) {
  require(m <= n, "q(n, m) needs 0 <= m <= n, got m=" + std::to_string(m) +
                      " n=" + std::to_string(n));
  if (m == 0 || m == n) return 1;
  if (m == 1) return pow2(n) - 1;
  return q_memo().get({n, m}, [&] {
    return 2 * q(n - 1, m) + q(n - 1, m - 1) - q(n - 2, m - 1);
  });
}

Count q2_closed(std::size_t n) {
  require(n >= 2, "q(n, 2) closed form needs n >= 2");
  return Count(n - 1) * pow2(n - 2);
}

Count q3_closed(std::size_t n) {
  require(n >= 3, "q(n, 3) closed form needs n >= 3");
  const Count poly = Count(n) * n - n - 2;
  return exact_div(poly * pow2(n), 32, "q3_closed");
}

Count card_PRD(std::size_t n) {
  Count before = 1, current = 2;  // |PRD_0|, |PRD_1|
  if (n == 0) return before;
  for (std::size_t k = 2; k <= n; ++k) {
    Count next = 3 * current - before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

Count card_PRD_star(std::size_t n) {
  require(n >= 1, "card_PRD_star needs n >= 1");
  return fib(2 * n + 1) + n + 1 - pow2(n + 1);
}

Count card_PC(std::size_t n) {
  require(n >= 1, "card_PC needs n >= 1");
  Count sum = 0;
  for (std::size_t r = 0; r <= n; ++r) sum += binomial(n, r) * binomial(n + r, n - 1);
  return exact_div(sum, n, "card_PC");
}

Count card_PMD(std::size_t n) { return card_PRD_star(n) + card_PC(n); }

bool k_range_nonempty(std::size_t n, std::size_t r) noexcept {
  return r >= 2 && r <= half_ceiling(n);
}

Count card_K_s(std::size_t n, std::size_t r, std::size_t s) {
  if (!k_range_nonempty(n, r) || s < r || s + r > n + 1) return 0;
  Count inner = 0;
  for (std::size_t t = r; t + s <= n + 1; ++t) {
    inner += binomial(n - s + 1, t) * binomial(t - 1, r - 1);
  }
  return binomial(s - 1, r - 1) * inner;
}

Count card_K(std::size_t n, std::size_t r) {
  if (!k_range_nonempty(n, r)) return 0;
  Count total = 0;
  for (std::size_t s = r; s + r <= n + 1; ++s) total += card_K_s(n, r, s);
  return total;
}

Count card_K_i(std::size_t n, std::size_t r) {
  if (!k_range_nonempty(n, r)) return 0;
  Count total = 0;
  for (std::size_t s = r; s + r <= n + 1; ++s) {
    total += binomial(n - s + 1, r) * binomial(s - 1, r - 1);
  }
  return total;
}

Count narayana(std::size_t n, std::size_t r) {
  require(r >= 1 && r <= n, "narayana needs 1 <= r <= n " + args(n, r));
  return exact_div(binomial(n, r - 1) * binomial(n, r), n, "narayana");
}

Count catalan(std::size_t n) { return exact_div(binomial(2 * n, n), n + 1, "catalan"); }

Count card_J_i(std::size_t n, std::size_t r) {
  require(r <= n, "card_J_i needs 0 <= r <= n " + args(n, r));
  return narayana(n + 1, r + 1);
}

Count card_IC(std::size_t n, std::size_t r) {
  require(r <= n, "card_IC needs 0 <= r <= n " + args(n, r));
  Count total = 0;
  for (std::size_t k = 1; k <= r + 1; ++k) total += narayana(n + 1, k);
  return total;
}

Count card_IO(std::size_t n, std::size_t r) {
  require(r <= n, "card_IO needs 0 <= r <= n " + args(n, r));
  Count total = 0;
  for (std::size_t k = 0; k <= r; ++k) total += binomial(n, k) * binomial(n, k);
  return total;
}

Count card_IMD(std::size_t n, std::size_t r) {
  require(r >= 2 && r <= n, "card_IMD needs 2 <= r <= n " + args(n, r));
  const std::size_t top = std::min(r, half_ceiling(n));
  Count total = card_IC(n, r);
  for (std::size_t k = 2; k <= top; ++k) {
    for (std::size_t s = k; s + k <= n + 1; ++s) {
      total += binomial(n - s + 1, k) * binomial(s - 1, k - 1);
    }
  }
  return total;
}

Count rank_PC(std::size_t n, std::size_t r) {
  require(n >= 3 && r >= 2 && r <= n, "rank_PC needs n >= 3, 2 <= r <= n " + args(n, r));
  if (r == n) return 2 * Count(n);
  return height_r_idempotents(n, r);
}

Count rank_IC(std::size_t n, std::size_t r) {
  require(n >= 3 && r >= 2 && r <= n, "rank_IC needs n >= 3, 2 <= r <= n " + args(n, r));
  if (r == n) return 2 * Count(n);
  return binomial(n, r) + r * binomial(n - 1, r);
}

Count rank_PMD(std::size_t n, std::size_t r) {
  require(n >= 3 && r >= 2 && r <= n, "rank_PMD needs n >= 3, 2 <= r <= n " + args(n, r));
  // The full semigroup is PMD(n, n-1) with the undecomposable 1_n adjoined.
  if (r == n) return rank_PMD(n, n - 1) + 1;
  return Count(n - 2) + height_r_idempotents(n, r);
}

Count rank_IMD(std::size_t n, std::size_t r) {
  require(n >= 3 && r >= 2 && r <= n, "rank_IMD needs n >= 3, 2 <= r <= n " + args(n, r));
  if (r == n) return rank_IMD(n, n - 1) + 1;
  return binomial(n, r) + r * binomial(n - 1, r) + (n - 2);
}

Count c_table(std::size_t n, std::size_t r) {
  require(r >= 1, "c_table needs r >= 1 " + args(n, r));
  if (r > n) return 0;
  if (r == 1) return pow2(n) - 1;
  return c_memo().get({n, r}, [&] { return 2 * c_table(n - 1, r) + c_table(n - 1, r - 1); });
}

Count c_table_closed(std::size_t n, std::size_t r) {
  require(r >= 1 && r <= n, "c_table_closed needs 1 <= r <= n " + args(n, r));
  return height_r_idempotents(n, r);
}

Count card_E_PMD(std::size_t n, std::size_t r) {
  require(r <= n, "card_E_PMD needs 0 <= r <= n " + args(n, r));
  Count total = 1;
  for (std::size_t level = 1; level <= r; ++level) {
    for (std::size_t s = level; s <= n; ++s) total += binomial(n, s) * binomial(s - 1, level - 1);
  }
  return total;
}

std::optional<Count> family_cardinality(const FamilySpec& spec) {
  const std::size_t n = spec.degree;
  const std::size_t r = spec.image_bound.value_or(n);
  const bool unbounded = r >= n;
  switch (spec.family) {
    case Family::PRD:
      if (unbounded) return card_PRD(n);
      return std::nullopt;
    case Family::PRD_STAR: {
      Count total = 0;
      for (std::size_t k = 2; k <= std::min(r, n); ++k) total += card_K(n, k);
      return total;
    }
    case Family::IRD_STAR: {
      Count total = 0;
      for (std::size_t k = 2; k <= std::min(r, n); ++k) total += card_K_i(n, k);
      return total;
    }
    case Family::PC:
      if (unbounded) return card_PC(n);
      return std::nullopt;
    case Family::PMD:
      if (unbounded) return card_PMD(n);
      return std::nullopt;
    case Family::IC:
      return card_IC(n, std::min(r, n));
    case Family::IMD:
      if (r < 2) return card_IC(n, r);
      return card_IMD(n, std::min(r, n));
    case Family::C:
    case Family::CN_FULL: {
      if (unbounded) return catalan(n);
      Count total = 0;
      for (std::size_t k = 1; k <= r; ++k) total += narayana(n, k);
      return total;
    }
    default:
      return std::nullopt;
  }
}

std::optional<Count> layer_cardinality(const LayerSpec& spec) {
  const std::size_t n = spec.degree;
  const std::size_t r = spec.param;
  switch (spec.kind) {
    case LayerKind::Q:
      return q(n, r);
    case LayerKind::K:
      return card_K(n, r);
    case LayerKind::K_i:
      return card_K_i(n, r);
    case LayerKind::K_s:
      return card_K_s(n, r, spec.s.value_or(0));
    case LayerKind::J_i:
      return card_J_i(n, r);
    case LayerKind::L_i:
      return card_J_i(n, r) + card_K_i(n, r);
    case LayerKind::EJ:
      return r == 0 ? Count(1) : c_table(n, r);
    default:
      return std::nullopt;
  }
}

std::vector<Table1Row> table1(std::size_t max_n) {
  std::vector<Table1Row> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    Table1Row row{n, {}, card_PRD(n), card_PRD_star(n)};
    for (std::size_t m = 0; m <= n; ++m) row.q.push_back(q(n, m));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table1_csv(std::size_t max_n) {
  std::ostringstream out;
  out << "n";
  for (std::size_t m = 0; m <= max_n; ++m) out << ",m=" << m;
  out << ",PRD_n,PRD*_n\n";
  for (const auto& row : table1(max_n)) {
    out << row.n;
    for (std::size_t m = 0; m <= max_n; ++m) {
      out << ',';
      if (m < row.q.size()) out << row.q[m];
    }
    out << ',' << row.prd << ',' << row.prd_star << '\n';
  }
  return out.str();
}

}  // namespace pmd
