#pragma once

#include <string>
#include <utility>
#include <vector>

namespace agp::suites {

/// One solver answer, as written to the audit log.
struct AuditRecord {
  std::string suite;
  std::string instance;
  std::string verdict;  // yes / no / inconclusive
  int inconclusive_events = 0;
};

class AuditLog {
 public:
  void record(AuditRecord r) { records_.push_back(std::move(r)); }
  const std::vector<AuditRecord>& records() const { return records_; }

  /// Tab-separated, one record per line.
  void write(const std::string& path) const;
  static std::vector<AuditRecord> read(const std::string& path);

 private:
  std::vector<AuditRecord> records_;
};

struct SuiteResult {
  std::string name;
  int criterion = 0;
  bool passed = false;
  std::string headline;
  std::vector<std::pair<std::string, std::string>> table;
  double seconds = 0.0;
};

/// Longest path of G_1, computed once by the exact oracle and kept as a
/// regression constant.
inline constexpr int kG1LongestPath = 29;

/// Suite names in criterion order.
std::vector<std::string> suite_names();

/// Runs one named suite; throws std::invalid_argument for unknown names.
/// "hygiene" audits the records collected so far (running "budget-stress"
/// first when the log is empty).
SuiteResult run_suite(const std::string& name, AuditLog& log);

/// Checks that no "no" answer was produced alongside an inconclusive event.
SuiteResult audit_hygiene(const std::vector<AuditRecord>& records);

std::string format_table(const SuiteResult& r);

}  // namespace agp::suites
