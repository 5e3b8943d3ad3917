#ifndef BRAIDCAT_COHERENCE_HPP
#define BRAIDCAT_COHERENCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "braidcat/instances.hpp"

namespace braidcat {

struct CheckConfig {
  int max_arity = 3;
  int max_tree_tails = 4;
  int max_braid_length = 4;
  int max_compose_depth = 2;
  std::uint64_t random_seed = 1;
  int random_samples = 25;

  void validate() const;
};

// One key/value blob per failed identity; the entries always include the
// two concrete matrix entries that disagree, as expression strings.
struct Counterexample {
  std::string description;
  std::vector<std::pair<std::string, std::string>> data;
  bool empty() const { return description.empty() && data.empty(); }
};

struct CheckRecord {
  std::string id;       // axiom id, e.g. "D1.c"
  std::string ref;      // what the check verifies
  std::string status;   // pass | fail | skipped
  std::string note;
  Counterexample counterexample;
  double wall_ms = 0.0;
};

struct CheckReport {
  std::string instance_name;
  CheckConfig config;
  bool instance_valid = false;
  bool pseudo_tensor = false;  // braid actions factor through S_n
  std::vector<CheckRecord> records;

  bool all_pass() const;
  const CheckRecord* find(const std::string& id) const;
};

// Axiom checkers; each appends its records in canonical order.
void check_pseudo_monoidal(const Instance& inst, const CheckConfig& cfg,
                           std::vector<CheckRecord>& out);
void check_braid_action(const Instance& inst, const CheckConfig& cfg,
                        std::vector<CheckRecord>& out);
void check_cabling(const Instance& inst, const CheckConfig& cfg,
                   std::vector<CheckRecord>& out);

CheckReport run_suite(const Instance& inst, const CheckConfig& cfg);

// Deterministic JSON (no timings); text includes wall times.
std::string report_to_json(const CheckReport& report);
std::string report_to_text(const CheckReport& report);

}  // namespace braidcat

#endif
