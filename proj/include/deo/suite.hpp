#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deo/exppoly.hpp"
#include "deo/kernels.hpp"
#include "deo/properties.hpp"

namespace deo {

struct CorpusEntry {
  std::string expr;
  ExpPoly f;
};

// e^t + e^{2t}; t e^{2t}; 2e^t + t^2 e^{3t}; cos(t); e^{3t}; 0
std::vector<CorpusEntry> builtin_corpus();
CorpusEntry corpus_entry(const std::string& expr);

struct SuiteConfig {
  int n_max = 5;
  int v_max = 6;
  int k_lo = -4;
  int k_hi = 5;
  int taylor_K = 12;
  int membership_K = 4;
  int eta_v_max = 4;
  std::vector<int> theta_powers{2, 4, 7};
  std::vector<int> uniqueness_orders{0, 2, 3};
};

/// Pass / fail / skip counts for one identity family. Skips are inputs that
/// fall outside the identity's precondition (a DomainError), never failures.
struct GroupResult {
  std::string name;
  long pass = 0;
  long fail = 0;
  long skip = 0;
  std::vector<std::string> failures;  // first few labels

  bool ok() const { return fail == 0; }
  void merge(const GroupResult& o);
};

struct MembershipLine {
  std::string function;
  std::optional<MembershipReport> report;
  std::string error;
};

struct SuiteReport {
  std::vector<GroupResult> groups;
  std::vector<MembershipLine> membership;  // reported, not asserted
  bool passed() const;
  const GroupResult* group(const std::string& name) const;
};

// Identity families run by the suite, in report order.
const std::vector<std::string>& suite_group_names();

SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteConfig& cfg = {},
                      kernels::Execution exec = kernels::Execution::Parallel);

}  // namespace deo
