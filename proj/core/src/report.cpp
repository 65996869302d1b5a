#include "nilab/report.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace nilab {

const char* kToolkitVersion = "0.1.0";

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Anomaly: return "anomaly";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

nlohmann::json CheckResult::to_json() const {
  return nlohmann::json{{"name", name},
                        {"status", to_string(status)},
                        {"expected", expected},
                        {"actual", actual},
                        {"claim_anchor", claim_anchor},
                        {"notes", notes}};
}

void RunConfig::validate() const {
  if (groebner_pair_budget == 0 || groebner_basis_budget == 0)
    throw std::invalid_argument("config: groebner budgets must be positive");
  if (degree_cap == 0) throw std::invalid_argument("config: degree_cap must be positive");
  if (max_q_exponent == 0 || max_q_exponent > 3)
    throw std::invalid_argument("config: max_q_exponent must be 1..3");
}

uint32_t RunConfig::effective_threads() const {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("NILCONE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<uint32_t>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

nlohmann::json RunConfig::to_json() const {
  return nlohmann::json{{"max_q_exponent", max_q_exponent},
                        {"groebner_pair_budget", groebner_pair_budget},
                        {"groebner_basis_budget", groebner_basis_budget},
                        {"degree_cap", degree_cap},
                        {"sample_size", sample_size},
                        {"threads", threads},
                        {"seed", seed}};
}

RunConfig parse_config_text(const std::string& text, const RunConfig& base) {
  RunConfig cfg = base;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped;
    for (char c : line) {
      if (c == '#') break;
      stripped.push_back(c);
    }
    auto notspace = [](char c) { return !std::isspace(static_cast<unsigned char>(c)); };
    auto b = std::find_if(stripped.begin(), stripped.end(), notspace);
    auto e = std::find_if(stripped.rbegin(), stripped.rend(), notspace).base();
    if (b >= e) continue;
    std::string entry(b, e);
    auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    auto trim = [&](std::string s) {
      auto bb = std::find_if(s.begin(), s.end(), notspace);
      auto ee = std::find_if(s.rbegin(), s.rend(), notspace).base();
      return bb < ee ? std::string(bb, ee) : std::string();
    };
    std::string key = trim(entry.substr(0, eq));
    std::string val = trim(entry.substr(eq + 1));
    if (key.empty() || val.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key or value");
    long long v;
    try {
      size_t pos = 0;
      v = std::stoll(val, &pos);
      if (pos != val.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": value '" + val +
                                  "' is not an integer");
    }
    auto positive = [&](const char* what) {
      if (v <= 0)
        throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + what +
                                    " must be positive");
    };
    if (key == "max_q_exponent") { positive(key.c_str()); cfg.max_q_exponent = static_cast<uint32_t>(v); }
    else if (key == "groebner_pair_budget") { positive(key.c_str()); cfg.groebner_pair_budget = static_cast<uint64_t>(v); }
    else if (key == "groebner_basis_budget") { positive(key.c_str()); cfg.groebner_basis_budget = static_cast<uint64_t>(v); }
    else if (key == "degree_cap") { positive(key.c_str()); cfg.degree_cap = static_cast<uint32_t>(v); }
    else if (key == "sample_size") {
      if (v < 0) throw std::invalid_argument("config line " + std::to_string(lineno) + ": sample_size must be >= 0");
      cfg.sample_size = static_cast<uint64_t>(v);
    } else if (key == "threads") { positive(key.c_str()); cfg.threads = static_cast<uint32_t>(v); }
    else if (key == "seed") {
      if (v < 0) throw std::invalid_argument("config line " + std::to_string(lineno) + ": seed must be >= 0");
      cfg.seed = static_cast<uint64_t>(v);
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config file not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), RunConfig{});
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) checks_json.push_back(c.to_json());
  return nlohmann::json{{"command", command},       {"params", params},
                        {"toolkit_version", toolkit_version}, {"seed", seed},
                        {"duration_ms", duration_ms},         {"checks", checks_json}};
}

std::string Report::to_markdown() const {
  std::ostringstream os;
  os << "# nilcone-lab report: " << command << "\n\n";
  os << "version " << toolkit_version << ", seed " << seed << ", " << duration_ms << " ms\n\n";
  os << "| check | status | expected | actual |\n|---|---|---|---|\n";
  for (const auto& c : checks) {
    os << "| " << c.name << " | " << to_string(c.status) << " | " << c.expected.dump() << " | "
       << c.actual.dump() << " |\n";
  }
  size_t fails = 0, anomalies = 0;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) ++fails;
    if (c.status == CheckStatus::Anomaly) ++anomalies;
  }
  os << "\n" << checks.size() << " checks, " << fails << " failed, " << anomalies << " anomalies\n";
  for (const auto& c : checks) {
    if (!c.notes.empty()) os << "\n- **" << c.name << "**: " << c.notes << "\n";
  }
  return os.str();
}

bool Report::any_fail() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return true;
  return false;
}

}  // namespace nilab
