#pragma once

// High-level check runners shared by the CLI subcommands and the acceptance
// suite: prime classification, tables, invariant-theory certificates, and the
// default full battery.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilab/report.hpp"
#include "nilab/rootsys.hpp"
#include "nilab/weylinv.hpp"

namespace nilab {

struct ClassifyRow {
  std::string name;
  uint32_t p = 0;
  bool bad = false, very_good = false, special = false;
};

std::vector<ClassifyRow> classify_table(const std::vector<std::pair<LieType, uint32_t>>& systems,
                                        const std::vector<uint32_t>& primes);
std::string classify_rows_markdown(const std::vector<ClassifyRow>& rows);
nlohmann::json classify_rows_json(const std::vector<ClassifyRow>& rows);

// classification vs the literature lists, across all nine type rows
std::vector<CheckResult> run_classify_checks(uint32_t max_rank = 8, uint32_t max_prime = 13);

// (dim B, r) table vs the generated positive-root counts
std::vector<CheckResult> run_table_checks(uint32_t max_rank = 8);

// invariant-theory certificates; family is "sn-quotient" or "g2-weyl"
struct InvariantRun {
  std::vector<CheckResult> checks;
  nlohmann::json certificate;
};
InvariantRun run_invariant_checks(const std::string& family, uint32_t n, uint32_t p,
                                  uint32_t max_degree, const RunConfig& cfg);

// the default battery used by `nilcone-lab all`
std::vector<CheckResult> run_all_battery(const RunConfig& cfg);

}  // namespace nilab
