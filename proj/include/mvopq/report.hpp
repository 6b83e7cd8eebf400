#pragma once

#include <string>
#include <vector>

namespace mvopq {

/// One verified assertion.  Advisory records inform but never fail a run.
struct CheckRecord {
  std::string name;
  int n = -1;  // degree the record refers to; -1 when not degree-indexed
  bool pass = true;
  bool advisory = false;
  std::string witness;  // populated when something is worth showing
};

struct VerifyReport {
  std::string case_id;
  int n_max = -1;
  int deg_max = -1;
  std::vector<CheckRecord> records;

  void add(const std::string& name, int n, bool pass, const std::string& witness = "") {
    records.push_back({name, n, pass, false, witness});
  }
  void add_advisory(const std::string& name, int n, bool pass, const std::string& witness = "") {
    records.push_back({name, n, pass, true, witness});
  }
  void merge(const VerifyReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
  }

  bool overall() const {
    for (const auto& r : records)
      if (!r.advisory && !r.pass) return false;
    return true;
  }

  std::string to_plain() const;
};

}  // namespace mvopq
