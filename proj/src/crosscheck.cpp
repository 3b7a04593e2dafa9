#include <algorithm>

#include "pmd/counting.hpp"

namespace pmd {

namespace {

void check_count(Report& report, const std::string& name, const Count& formula, std::size_t enumerated) {
  report.check(name, formula == Count(enumerated), to_string(formula), enumerated);
}

}  // namespace

Report verify_counts(std::size_t n, std::size_t budget) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("degree out of range");
  Report report("verify-counts", Json{{"n", n}});
  auto family_size = [&](Family f, std::optional<std::size_t> r = std::nullopt) {
    return enumerate(FamilySpec{f, n, r}, budget).size();
  };
  auto layer_size = [&](LayerKind k, std::size_t p, std::optional<std::size_t> s = std::nullopt) {
    return enumerate_layer(LayerSpec{k, n, p, s}, budget).size();
  };

  Count q_sum = 0;
  for (std::size_t m = 0; m <= n; ++m) {
    q_sum += q(n, m);
    check_count(report, "q(" + std::to_string(n) + "," + std::to_string(m) + ")", q(n, m),
                layer_size(LayerKind::Q, m));
  }
  if (n >= 2) report.check("q2_closed_form", q2_closed(n) == q(n, 2), to_string(q(n, 2)), to_string(q2_closed(n)));
  if (n >= 3) report.check("q3_closed_form", q3_closed(n) == q(n, 3), to_string(q(n, 3)), to_string(q3_closed(n)));
  report.check("PRD_is_fibonacci", card_PRD(n) == fib(2 * n + 1), to_string(fib(2 * n + 1)), to_string(card_PRD(n)));
  report.check("PRD_is_sum_of_q", card_PRD(n) == q_sum, to_string(q_sum), to_string(card_PRD(n)));
  check_count(report, "PRD", card_PRD(n), family_size(Family::PRD));
  check_count(report, "PRD_star", card_PRD_star(n), family_size(Family::PRD_STAR));
  check_count(report, "PC", card_PC(n), family_size(Family::PC));
  check_count(report, "PMD", card_PMD(n), family_size(Family::PMD));
  check_count(report, "C_n_is_catalan", catalan(n), family_size(Family::CN_FULL));

  for (std::size_t r = 1; r <= n; ++r) {
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(r) + ")";
    check_count(report, "IC" + tag, card_IC(n, r), family_size(Family::IC, r));
    check_count(report, "J_i" + tag, card_J_i(n, r), layer_size(LayerKind::J_i, r));
    if (r >= 2) check_count(report, "IMD" + tag, card_IMD(n, r), family_size(Family::IMD, r));
    if (r < n) {
      check_count(report, "E(J_r)" + tag, c_table(n, r), layer_size(LayerKind::EJ, r));
      report.check("C_recursion_matches_closed_form" + tag, c_table(n, r) == c_table_closed(n, r),
                   to_string(c_table_closed(n, r)), to_string(c_table(n, r)));
    }
    check_count(report, "K" + tag, card_K(n, r), layer_size(LayerKind::K, r));
    check_count(report, "K_i" + tag, card_K_i(n, r), layer_size(LayerKind::K_i, r));
    if (k_range_nonempty(n, r)) {
      for (std::size_t s = r; s + r <= n + 1; ++s) {
        check_count(report, "K_s" + tag + "s=" + std::to_string(s), card_K_s(n, r, s),
                    layer_size(LayerKind::K_s, r, s));
      }
    }
  }

  // At the top height the layers degenerate.
  if (n >= 3) {
    const std::size_t m = half_ceiling(n);
    const std::size_t k = n / 2;
    if (n % 2 == 1) {
      report.check("K_top_odd", card_K(n, m) == 1, 1, to_string(card_K(n, m)));
      report.check("K_i_top_odd", card_K_i(n, m) == 1, 1, to_string(card_K_i(n, m)));
    } else {
      report.check("K_top_even", card_K(n, k) == Count(3 * k + 1), 3 * k + 1, to_string(card_K(n, k)));
      report.check("K_i_top_even", card_K_i(n, k) == Count(2 * k + 1), 2 * k + 1, to_string(card_K_i(n, k)));
    }
  }
  return report;
}

}  // namespace pmd
