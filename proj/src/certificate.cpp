#include "ulrich/certificate.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ulrich::cert {

using qexact::Int;
using qexact::Rational;

void Certificate::check(const std::string& name, const std::string& expected,
                        const std::string& got) {
  checks_.push_back({name, expected, got, expected == got});
}

void Certificate::check(const std::string& name, const Rational& expected,
                        const Rational& got) {
  checks_.push_back({name, qexact::to_string(expected), qexact::to_string(got),
                     expected == got});
}

void Certificate::check(const std::string& name, const Int& expected, const Int& got) {
  checks_.push_back({name, expected.get_str(), got.get_str(), expected == got});
}

void Certificate::check(const std::string& name, long long expected, long long got) {
  checks_.push_back({name, std::to_string(expected), std::to_string(got),
                     expected == got});
}

void Certificate::check_true(const std::string& name, bool got) {
  checks_.push_back({name, "true", got ? "true" : "false", got});
}

void Certificate::witness(const std::string& name, const std::string& value) {
  witnesses_.push_back({name, value});
}

void Certificate::witness(const std::string& name, const Rational& value) {
  witnesses_.push_back({name, qexact::to_string(value)});
}

void Certificate::witness(const std::string& name, const Int& value) {
  witnesses_.push_back({name, value.get_str()});
}

bool Certificate::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckResult& c) { return c.pass; });
}

Certificate::Status Certificate::status() const {
  if (checks_.empty()) return Status::Error;
  if (!all_pass()) return Status::Mismatch;
  return refutation_expected_ ? Status::RefutedAsExpected : Status::Verified;
}

std::string Certificate::status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::RefutedAsExpected: return "refuted-as-expected";
    case Status::Mismatch: return "mismatch";
    case Status::Error: return "error";
  }
  return "error";
}

std::string Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id_;
  j["summary"] = summary_;
  j["status"] = status_name(status());
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks_) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["expected"] = c.expected;
    jc["got"] = c.got;
    jc["pass"] = c.pass;
    j["checks"].push_back(jc);
  }
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const Witness& w : witnesses_) {
    nlohmann::ordered_json jw;
    jw["name"] = w.name;
    jw["value"] = w.value;
    j["witnesses"].push_back(jw);
  }
  return j.dump(2);
}

std::string Certificate::to_table() const {
  std::ostringstream os;
  os << "certificate: " << id_ << "\n";
  os << "summary:     " << summary_ << "\n";
  os << "status:      " << status_name(status()) << "\n";
  std::size_t w = 4;
  for (const CheckResult& c : checks_) w = std::max(w, c.name.size());
  for (const CheckResult& c : checks_) {
    os << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
    os << std::string(w - c.name.size() + 2, ' ');
    if (c.pass)
      os << c.got << "\n";
    else
      os << "expected " << c.expected << ", got " << c.got << "\n";
  }
  for (const Witness& x : witnesses_)
    os << "  note " << x.name << std::string(w > x.name.size() ? w - x.name.size() + 2 : 2, ' ')
       << x.value << "\n";
  return os.str();
}

}  // namespace ulrich::cert
