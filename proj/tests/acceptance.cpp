// Acceptance checks: one PASS/FAIL line per criterion.
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pmd/cli.hpp"
#include "pmd/counting.hpp"
#include "pmd/generation.hpp"
#include "pmd/structure.hpp"
#include "support.hpp"

using namespace pmd;

namespace {

int failed = 0;

// Prints the verdict line; on failure also the first few failing assertions.
void verdict(const char* id, const char* title, const Report& report, double seconds) {
  const bool ok = report.passed();
  failed += ok ? 0 : 1;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ' ' << title << " (" << report.assertions().size()
            << " checks, " << std::fixed << std::setprecision(2) << seconds << " s)\n";
  if (ok) return;
  int shown = 0;
  for (const auto& a : report.assertions()) {
    if (a.status != Status::fail || shown++ == 5) continue;
    std::cout << "    " << a.name << ": expected " << a.expected.dump() << ", got " << a.actual.dump();
    if (!a.counterexample.is_null()) std::cout << ", counterexample " << a.counterexample.dump();
    std::cout << '\n';
  }
}

void within(Report& report, const Stopwatch& clock, double limit) {
  report.check("runtime_within_" + std::to_string(static_cast<int>(limit)) + "s", clock.seconds() < limit, limit,
               clock.seconds());
}

template <class Body>
void criterion(const char* id, const char* title, double limit, Body body) {
  Report report(id);
  const Stopwatch clock;
  try {
    body(report);
  } catch (const std::exception& e) {
    report.check("no_exception", false, nullptr, e.what());
  }
  within(report, clock, limit);
  verdict(id, title, report, clock.seconds());
}

std::string label(const char* what, const FamilySpec& spec) { return std::string(what) + "/" + spec.label(); }

}  // namespace

int main() {
  criterion("AC1", "q(n,m) table for n <= 7 matches the reference", 1.0, [](Report& rep) {
    std::ostringstream out, err;
    const int status = cli::run({"table1", "-n", "7", "--format", "csv"}, out, err);
    rep.check("exit_status", status == 0, 0, status);
    rep.check("csv_matches_fixture", out.str() == testing::read_file(testing::fixture("table1.csv")), "fixture",
              out.str());
  });

  criterion("AC2", "cardinality formulas agree with enumeration for 3 <= n <= 7", 120.0, [](Report& rep) {
    for (std::size_t n = 3; n <= 7; ++n) rep.merge(verify_counts(n), "n=" + std::to_string(n) + "/");
  });

  criterion("AC3", "the generating sets generate PMD(n,r) and IMD(n,r)", 120.0, [](Report& rep) {
    for (std::size_t n = 3; n <= 6; ++n) {
      for (std::size_t r = 2; r < n; ++r) {
        const FamilySpec p{Family::PMD, n, r}, i{Family::IMD, n, r};
        rep.check(label("closure", p), same_elements(closure(pmd_generating_set(n, r)).elements(), enumerate(p)),
                  true, false);
        rep.check(label("closure", i), same_elements(closure(imd_generating_set(n, r)).elements(), enumerate(i)),
                  true, false);
      }
    }
  });

  criterion("AC4", "ranks, undecomposables and minimality", 300.0, [](Report& rep) {
    for (std::size_t n = 3; n <= 6; ++n) {
      for (std::size_t r = 2; r <= n; ++r) {
        for (Family f : {Family::PMD, Family::IMD}) {
          const FamilySpec spec{f, n, r};
          rep.merge(verify_rank(spec), spec.label() + "/");
        }
      }
    }
    for (std::size_t n = 3; n <= 12; ++n) {
      rep.check("rank_PMD_full/n=" + std::to_string(n), rank_PMD(n, n) == 3 * n - 2, 3 * n - 2,
                to_string(rank_PMD(n, n)));
      rep.check("rank_IMD_full/n=" + std::to_string(n), rank_IMD(n, n) == 3 * n - 2, 3 * n - 2,
                to_string(rank_IMD(n, n)));
    }
  });

  criterion("AC5", "maximal subsemigroups of PMD(4,r) and IMD(4,r)", 300.0, [](Report& rep) {
    for (std::size_t r : {2, 3}) {
      for (Family f : {Family::PMD, Family::IMD}) {
        const FamilySpec spec{f, 4, r};
        rep.merge(verify_maximal_catalog(spec), spec.label() + "/");
      }
    }
  });

  criterion("AC6", "Green's relations for n <= 5, including PD(n,r)", 120.0, [](Report& rep) {
    for (std::size_t n = 3; n <= 5; ++n) {
      for (std::size_t r = 2; r <= n; ++r) {
        for (Family f : {Family::PMD, Family::IMD}) {
          const FamilySpec spec{f, n, r};
          rep.merge(verify_greens(spec), spec.label() + "/");
        }
      }
      for (std::size_t r = 1; r <= n; ++r) {
        rep.merge(verify_PD_greens(n, r), "PD(" + std::to_string(n) + "," + std::to_string(r) + ")/");
      }
    }
  });

  criterion("AC7", "starred relations, D* factorizations and abundance for n <= 5", 120.0, [](Report& rep) {
    for (std::size_t n = 3; n <= 5; ++n) {
      for (std::size_t r = 2; r <= n; ++r) {
        for (Family f : {Family::PMD, Family::IMD}) {
          const FamilySpec spec{f, n, r};
          rep.merge(verify_starred_greens(spec), spec.label() + "/starred/");
          rep.merge(verify_dstar_factorizations(spec), spec.label() + "/dstar/");
          rep.merge(verify_abundance(spec), spec.label() + "/abundance/");
        }
      }
    }
  });

  criterion("AC8", "regularity and idempotent counts", 120.0, [](Report& rep) {
    for (std::size_t n = 3; n <= 5; ++n) {
      for (std::size_t r = 2; r <= n; ++r) {
        for (Family f : {Family::PMD, Family::IMD}) {
          const FamilySpec spec{f, n, r};
          rep.merge(verify_regularity(spec), spec.label() + "/");
        }
      }
    }
    for (std::size_t n = 3; n <= 12; ++n) {
      const auto tag = "/n=" + std::to_string(n);
      const Count full = (pow(Count(3), static_cast<unsigned>(n)) + 1) / 2;
      rep.check("idempotents_full" + tag, card_E_PMD(n, n) == full, to_string(full), to_string(card_E_PMD(n, n)));
      for (std::size_t r = 1; r <= n; ++r) {
        rep.check("c_recursion_closed_form" + tag + ",r=" + std::to_string(r), c_table(n, r) == c_table_closed(n, r),
                  to_string(c_table_closed(n, r)), to_string(c_table(n, r)));
      }
    }
  });

  criterion("AC9", "quasi-idempotency and the idempotent-generated part", 120.0, [](Report& rep) {
    for (std::size_t n = 3; n <= 6; ++n) rep.merge(verify_quasi_idempotents(n), "n=" + std::to_string(n) + "/");
    for (std::size_t n = 3; n <= 5; ++n) {
      for (std::size_t r = 2; r <= n; ++r) {
        const FamilySpec spec{Family::PMD, n, r};
        const auto s = materialize(spec);
        const auto e = idempotents(s);
        std::vector<PartialTransformation> gens;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (e[i]) gens.push_back(s[i]);
        }
        const auto generated = closure(gens, "E").elements();
        const auto pc = enumerate(FamilySpec{Family::PC, n, r});
        rep.check(label("idempotents_generate_PC", spec), same_elements(generated, pc), pc.size(), generated.size());
        rep.check(label("PC_proper", spec), pc.size() < s.size(), "< " + std::to_string(s.size()), pc.size());
      }
    }
  });

  return failed == 0 ? 0 : 1;
}
