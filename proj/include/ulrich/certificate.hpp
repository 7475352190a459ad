#pragma once

#include <string>
#include <vector>

#include "ulrich/qexact.hpp"

// Machine-checkable result of one certification run.  A certificate is a flat
// list of named checks (expected vs got, both rendered exactly) plus witness
// values worth keeping even when they are not pass/fail comparisons.
//
// Status rules: every check passes -> Verified, or RefutedAsExpected when the
// certificate's whole point is to establish a contradiction (the checks then
// verify the contradiction itself).  Any failing check -> Mismatch.  Rendering
// is deterministic: no timestamps, fixed field order.

namespace ulrich::cert {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct Witness {
  std::string name;
  std::string value;
};

class Certificate {
 public:
  enum class Status { Verified, RefutedAsExpected, Mismatch, Error };

  Certificate(std::string id, std::string summary, bool refutation_expected = false)
      : id_(std::move(id)),
        summary_(std::move(summary)),
        refutation_expected_(refutation_expected) {}

  const std::string& id() const { return id_; }
  const std::string& summary() const { return summary_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }

  void check(const std::string& name, const std::string& expected, const std::string& got);
  void check(const std::string& name, const qexact::Rational& expected, const qexact::Rational& got);
  void check(const std::string& name, const qexact::Int& expected, const qexact::Int& got);
  void check(const std::string& name, long long expected, long long got);
  void check_true(const std::string& name, bool got);

  void witness(const std::string& name, const std::string& value);
  void witness(const std::string& name, const qexact::Rational& value);
  void witness(const std::string& name, const qexact::Int& value);

  bool all_pass() const;
  Status status() const;
  static std::string status_name(Status s);

  // Exact, deterministic renderings.
  std::string to_json() const;
  std::string to_table() const;

 private:
  std::string id_;
  std::string summary_;
  bool refutation_expected_;
  std::vector<CheckResult> checks_;
  std::vector<Witness> witnesses_;
};

}  // namespace ulrich::cert
